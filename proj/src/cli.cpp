#include "shiftchaos/cli.hpp"

#include "cli_commands.hpp"
#include "shiftchaos/errors.hpp"
#include "shiftchaos/random.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>

namespace shiftchaos {

namespace {

std::string_view verdict_name(cli::Verdict v) {
  switch (v) {
    case cli::Verdict::Pass: return "PASS";
    case cli::Verdict::Fail: return "FAIL";
    case cli::Verdict::Info: return "INFO";
  }
  return "?";
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_table(const cli::Table& t, std::ostream& out) {
  std::vector<std::size_t> width(t.headers.size());
  for (std::size_t i = 0; i < t.headers.size(); ++i) width[i] = t.headers[i].size();
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
    }
    out << s << '\n';
  };
  out << t.title << '\n';
  line(t.headers);
  for (const auto& row : t.rows) line(row);
}

void render(const cli::Report& rep, const cli::GlobalOptions& g, std::ostream& out) {
  if (g.format == "json") {
    Json env = {{"command", rep.command},
                {"spec", rep.spec},
                {"results", rep.results},
                {"verdict", std::string(verdict_name(rep.verdict))},
                {"toolVersion", kToolVersion},
                {"flags", {{"seed", g.seed}, {"K", g.K}, {"approx", g.approx}}}};
    out << canonical_dump(env);
  } else if (g.format == "csv") {
    bool first = true;
    for (const cli::Table& t : rep.tables) {
      if (!first) out << '\n';
      first = false;
      auto row = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
        out << '\n';
      };
      row(t.headers);
      for (const auto& r : t.rows) row(r);
    }
  } else {
    out << rep.command << ": " << verdict_name(rep.verdict) << '\n';
    for (const cli::Table& t : rep.tables) {
      out << '\n';
      render_table(t, out);
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification reports for weighted backward shifts on c0 and c", "shiftchaos"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  cli::GlobalOptions g;
  g.seed = kDefaultSeed;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for sample evidence")->capture_default_str();
  app.add_option("--K", g.K, "Verification horizon")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_flag("--approx", g.approx, "Add floating-point log-magnitudes to reports");

  std::function<cli::Report()> action;

  cli::NormsOptions no;
  auto* norms = app.add_subcommand("norms", "Closed-form against brute-force norms of B^n");
  norms->add_option("--variant", no.variant)->capture_default_str();
  norms->add_option("--base", no.base)->capture_default_str();
  norms->add_option("--w", no.w)->capture_default_str();
  norms->add_option("--n-max", no.n_max)->capture_default_str();
  norms->add_option("--oracle-horizon", no.horizon)->capture_default_str();
  norms->callback([&] { action = [&] { return cli::cmd_norms(no, g); }; });

  cli::ChaosOptions co;
  auto* chaos = app.add_subcommand("chaos", "Chaos certificates: SCC, periodic points, orbits");
  chaos->add_option("--variant", co.variant)->capture_default_str();
  chaos->add_option("--base", co.base)->capture_default_str();
  chaos->add_option("--w", co.w)->capture_default_str();
  chaos->add_option("--targets-file", co.targets_file, "JSON sequence or array of sequences");
  chaos->add_option("--tolerance", co.tolerance, "Distance tolerance (not squared)")->capture_default_str();
  chaos->add_option("--period", co.period, "Also build periodic points of this period");
  chaos->add_option("--power", co.power, "Run against A^power")->capture_default_str();
  chaos->add_option("--samples", co.samples)->capture_default_str();
  chaos->add_option("--n-max", co.n_max)->capture_default_str();
  chaos->callback([&] { action = [&] { return cli::cmd_chaos(co, g); }; });

  cli::SpectrumOptions so;
  auto* spectrum = app.add_subcommand("spectrum", "Spectral classification on a lambda grid");
  spectrum->add_option("--variant", so.variant)->capture_default_str();
  spectrum->add_option("--base", so.base)->capture_default_str();
  spectrum->add_option("--w", so.w)->capture_default_str();
  spectrum->add_option("--lambda-grid", so.lambda_grid, "Comma-separated scalars")->capture_default_str();
  spectrum->add_flag("--real", so.real, "Real scalar field: eigenvalue membership only");
  spectrum->callback([&] { action = [&] { return cli::cmd_spectrum(so, g); }; });

  cli::ConjugacyOptions jo;
  auto* conj = app.add_subcommand("conjugacy", "Closed forms on c against conjugation through J");
  conj->add_option("--w", jo.w)->capture_default_str();
  conj->add_option("--n-max", jo.n_max)->capture_default_str();
  conj->add_option("--samples", jo.samples)->capture_default_str();
  conj->callback([&] { action = [&] { return cli::cmd_conjugacy(jo, g); }; });

  cli::NegativeOptions neg;
  auto* negative = app.add_subcommand("negative", "Obstructions for the extensions to c");
  negative->add_option("--variant", neg.variant)->capture_default_str();
  negative->add_option("--w", neg.w)->capture_default_str();
  negative->add_option("--samples", neg.samples)->capture_default_str();
  negative->add_option("--plant", neg.plant, "Planted inputs with nonzero limit")->capture_default_str();
  negative->callback([&] { action = [&] { return cli::cmd_negative(neg, g); }; });

  for (CLI::App* sub : {norms, chaos, spectrum, conj, negative}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const cli::Report rep = action();
    render(rep, g, out);
    return cli::exit_code(rep.verdict);
  } catch (const InvalidWeight& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const BaseMismatch& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace shiftchaos
