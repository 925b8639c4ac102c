#pragma once

#include "shiftchaos/sequence.hpp"
#include "shiftchaos/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace shiftchaos::cli {

struct GlobalOptions {
  std::string format = "table";
  std::uint64_t seed = 0;
  Index K = kDefaultHorizon;
  bool approx = false;
};

struct Table {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

enum class Verdict { Pass, Fail, Info };

/// 0 for PASS and INFO, 1 for FAIL.
inline int exit_code(Verdict v) { return v == Verdict::Fail ? 1 : 0; }

struct Report {
  std::string command;
  Json spec;
  Json results;
  Verdict verdict = Verdict::Info;
  std::vector<Table> tables;
};

struct NormsOptions {
  std::string variant = "unbounded";
  std::string base = "one";
  std::string w = "2";
  Index n_max = 10;
  Index horizon = 200;
};

struct ChaosOptions {
  std::string variant = "bounded";
  std::string base = "one";
  std::string w = "2";
  std::string targets_file;
  std::string tolerance = "1/1000";
  Index period = 0;
  Index power = 1;
  Index samples = 20;
  Index n_max = 20;
};

struct SpectrumOptions {
  std::string variant = "bounded";
  std::string base = "one";
  std::string w = "2";
  std::string lambda_grid = "0,1,2,3";
  bool real = false;
};

struct ConjugacyOptions {
  std::string w = "2";
  Index n_max = 5;
  Index samples = 20;
};

struct NegativeOptions {
  std::string variant = "bounded-on-c";
  std::string w = "2";
  Index samples = 100;
  Index plant = 1;
};

Report cmd_norms(const NormsOptions& o, const GlobalOptions& g);
Report cmd_chaos(const ChaosOptions& o, const GlobalOptions& g);
Report cmd_spectrum(const SpectrumOptions& o, const GlobalOptions& g);
Report cmd_conjugacy(const ConjugacyOptions& o, const GlobalOptions& g);
Report cmd_negative(const NegativeOptions& o, const GlobalOptions& g);

}  // namespace shiftchaos::cli
