#pragma once

// Seeded generators for sample evidence. Only the engine (mt19937_64) comes
// from the standard library; range reduction is done here so that sample
// streams are identical across standard library implementations.

#include "shiftchaos/sequence.hpp"

#include <cstdint>
#include <random>

namespace shiftchaos {

inline constexpr std::uint64_t kDefaultSeed = 20210701;

class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(std::int64_t max_num = 9, std::int64_t max_den = 9);
  Scalar scalar(bool complex = false, std::int64_t max_num = 9, std::int64_t max_den = 9);
  /// Nonzero rational scalar.
  Scalar nonzero_scalar(bool complex = false);

  /// Random element of c00 with support inside [base, base + span - 1];
  /// roughly half the slots filled, the last slot always nonzero.
  FinSeq finseq(IndexBase base, Index span, bool complex = false);
  /// Random c element: limit plus a finitely supported deviation.
  ConvSeq convseq(Index span, bool complex = false);

 private:
  std::mt19937_64 engine_;
};

}  // namespace shiftchaos
