#include "cli_commands.hpp"

#include "shiftchaos/chaos.hpp"
#include "shiftchaos/conjugacy.hpp"
#include "shiftchaos/errors.hpp"
#include "shiftchaos/kernels.hpp"
#include "shiftchaos/negative.hpp"
#include "shiftchaos/random.hpp"
#include "shiftchaos/spectral.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace shiftchaos::cli {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Verdict pass_fail(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

OperatorSpec shift_spec(const std::string& variant, const std::string& base, const std::string& w) {
  const Scalar weight = Scalar::parse(w);
  const IndexBase b = parse_base(base);
  if (variant == "bounded") return OperatorSpec::bounded_shift(b, weight);
  if (variant == "unbounded") return OperatorSpec::unbounded_shift(b, weight);
  throw InvalidArgument("variant must be bounded or unbounded");
}

OperatorSpec any_spec(const std::string& variant, const std::string& base, const std::string& w) {
  if (variant == "bounded-hat" || variant == "unbounded-hat") {
    if (parse_base(base) != IndexBase::One) {
      throw InvalidArgument("the operators on c are indexed from one");
    }
    const Scalar weight = Scalar::parse(w);
    return variant == "bounded-hat" ? OperatorSpec::bounded_hat(weight)
                                    : OperatorSpec::unbounded_hat(weight);
  }
  if (variant != "bounded" && variant != "unbounded") {
    throw InvalidArgument("variant must be bounded, unbounded, bounded-hat or unbounded-hat");
  }
  return shift_spec(variant, base, w);
}

void require_positive(Index v, const char* name) {
  if (v < 1) throw InvalidArgument(std::string(name) + " must be a positive integer");
}

Json approx_value(double v) { return Json(v); }

}  // namespace

// ---------------------------------------------------------------------------

Report cmd_norms(const NormsOptions& o, const GlobalOptions& g) {
  const OperatorSpec spec = shift_spec(o.variant, o.base, o.w);
  require_positive(o.n_max, "n-max");
  require_positive(o.horizon, "oracle-horizon");
  const bool witness = spec.variant() == Variant::UnboundedShift && spec.base() == IndexBase::One;

  struct Row {
    NormFormulaResult closed;
    Rational brute;
    std::optional<NormFormulaResult> witness;
    Rational exponent;
  };
  std::vector<QuasinilpotenceRow> qn;
  if (!spec.is_bounded()) qn = quasinilpotence_table(spec, o.n_max);
  const auto rows = kernels::map<Row>(kernels::default_exec(), o.n_max, [&](Index i) {
    const Index n = i + 1;
    Row r{opnorm_Bn(spec, n), opnorm_bruteforce(spec, PowerPath::Backward, n, o.horizon,
                                               kernels::Exec::Serial),
          std::nullopt, Rational(-1)};
    if (witness) r.witness = unboundedness_witness(spec, n, 1);
    if (!spec.is_bounded()) r.exponent = qn[i].exponent;
    return r;
  });

  Report rep{"norms", to_json(spec), Json::object(), Verdict::Pass, {}};
  Table t{"operator norms of B^n", {"n", "normSq", "bruteForceSq", "equal", "witnessSq", "rootExponent"}, {}};
  Json jrows = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    const bool eq = r.closed.squared == r.brute;
    ok = ok && eq;
    Json jr = {{"n", r.closed.n},
               {"normSq", to_json(r.closed.squared)},
               {"bruteForceSq", to_json(r.brute)},
               {"equal", eq},
               {"rootExponent", to_json(r.exponent)}};
    if (r.witness) jr["witnessSq"] = to_json(r.witness->squared);
    if (g.approx) jr["logNorm"] = approx_value(r.closed.logmag);
    jrows.push_back(std::move(jr));
    t.rows.push_back({std::to_string(r.closed.n), to_string(r.closed.squared), to_string(r.brute),
                      yes_no(eq), r.witness ? to_string(r.witness->squared) : "-",
                      to_string(r.exponent)});
  }
  rep.results = {{"rows", std::move(jrows)},
                 {"oracleHorizon", o.horizon},
                 {"witnessIndexOffset", 1}};
  rep.verdict = pass_fail(ok);
  rep.tables.push_back(std::move(t));
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read targets file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ChaosTargets {
  std::vector<FinSeq> engine;  // targets for the shift actually iterated
  std::vector<Json> shown;
  std::vector<ConvSeq> in_c;   // hat variants only
};

ChaosTargets load_targets(const OperatorSpec& spec, const ChaosOptions& o) {
  std::vector<AnySeq> raw;
  if (o.targets_file.empty()) {
    const Index b = first_index(spec.base());
    raw.emplace_back(basis_vector(spec.base(), b));
    raw.emplace_back(basis_vector(spec.base(), b + 1).scaled(Scalar(2)));
  } else {
    raw = parse_sequences(read_file(o.targets_file));
  }
  ChaosTargets t;
  for (const AnySeq& a : raw) {
    if (spec.is_hat()) {
      ConvSeq z = std::holds_alternative<ConvSeq>(a) ? std::get<ConvSeq>(a)
                                                     : ConvSeq::from_finseq(std::get<FinSeq>(a));
      t.engine.push_back(J(z));
      t.shown.push_back(to_json(z));
      t.in_c.push_back(std::move(z));
    } else {
      if (!std::holds_alternative<FinSeq>(a)) {
        throw InvalidArgument("targets for a shift on c0 must be finitely supported");
      }
      const FinSeq& z = std::get<FinSeq>(a);
      require_same_base(spec.base(), z.base(), "targets");
      t.engine.push_back(z);
      t.shown.push_back(to_json(z));
    }
  }
  return t;
}

Json scc_json(const SccReport& r, Table& t) {
  Rational max_alpha(0);
  for (const SampleReport& s : r.samples) {
    if (s.fit && s.fit->alpha_sq > max_alpha) max_alpha = s.fit->alpha_sq;
  }
  t.rows.push_back({"scc", yes_no(r.passed()), "samples=" + std::to_string(r.samples.size()),
                    "maxAlphaSq=" + to_string(max_alpha)});
  return {{"operator", r.operator_label},
          {"samples", r.samples.size()},
          {"nMax", r.n_max},
          {"rightInversePass", r.right_inverse_pass},
          {"decayPass", r.decay_pass},
          {"maxAlphaSq", to_json(max_alpha)},
          {"assumed", r.assumed},
          {"pass", r.passed()}};
}

}  // namespace

Report cmd_chaos(const ChaosOptions& o, const GlobalOptions& g) {
  const OperatorSpec spec = any_spec(o.variant, o.base, o.w);
  require_positive(o.power, "power");
  require_positive(o.samples, "samples");
  if (o.n_max < 2) throw InvalidArgument("n-max must be at least 2");
  if (o.period < 0) throw InvalidArgument("period must be a positive integer");
  const Rational tau = parse_rational(o.tolerance);
  if (sgn(tau) <= 0) throw InvalidArgument("tolerance must be positive");
  const Rational tol_sq = tau * tau;

  const OperatorSpec engine_spec = spec.is_hat() ? underlying_shift(spec) : spec;
  const ShiftSystem sys(engine_spec, o.power);
  const ChaosTargets targets = load_targets(spec, o);
  const Index T = static_cast<Index>(targets.engine.size());

  Table t{"certificates", {"check", "pass", "detail", "value"}, {}};
  const SccReport scc = verify_scc(sys, o.samples, o.n_max, g.seed);
  bool ok = scc.passed();
  Json results = {{"power", o.power}, {"toleranceSq", to_json(tol_sq)}};
  results["scc"] = scc_json(scc, t);

  struct TargetCell {
    PeriodicDensity density;
    std::optional<PerNResult> hat_check;
    std::optional<PeriodicPoint> fixed;
    VisitCertificate visit;
  };
  const auto cells = kernels::map<TargetCell>(kernels::default_exec(), T, [&](Index j) {
    const FinSeq& z = targets.engine[j];
    PeriodicDensity d = periodic_density_demo(sys, z, tol_sq, g.K, kernels::Exec::Serial);
    std::optional<PerNResult> hc;
    if (spec.is_hat()) {
      hc = per_N_membership_hat(spec, transfer_to_c(d.point), d.point.period * o.power, g.K,
                                kernels::Exec::Serial);
    }
    std::optional<PeriodicPoint> fixed;
    if (o.period > 0) fixed = build_periodic_point(sys, z, o.period, g.K, kernels::Exec::Serial);
    const FinSeq& seed = targets.engine[(j + T - 1) % T];
    const Index m = std::max<Index>(1, (seed.span() + o.power - 1) / o.power);
    return TargetCell{std::move(d), std::move(hc), std::move(fixed), orbit_visit(sys, seed, z, m)};
  });

  Json jt = Json::array();
  for (Index j = 0; j < T; ++j) {
    const TargetCell& c = cells[j];
    const bool dens_ok = c.density.tail_sq <= tol_sq &&
                         (!c.hat_check || c.hat_check->member);
    const bool visit_ok = sgn(c.visit.residual_sq) == 0;
    ok = ok && dens_ok && visit_ok;
    Json dj = {{"period", c.density.point.period},
               {"tailSq", to_json(c.density.tail_sq)},
               {"verifiedUpTo", c.density.point.verified_up_to},
               {"pass", dens_ok}};
    if (c.hat_check) dj["residualSqInC"] = to_json(c.hat_check->max_residual_sq);
    Json entry = {{"target", targets.shown[j]},
                  {"density", std::move(dj)},
                  {"visit", {{"m", c.visit.m},
                             {"seed", to_json(c.visit.seed)},
                             {"residualSq", to_json(c.visit.residual_sq)},
                             {"pass", visit_ok}}}};
    const std::string tag = "target " + std::to_string(j + 1);
    t.rows.push_back({"density " + tag, yes_no(dens_ok),
                      "N=" + std::to_string(c.density.point.period),
                      "tailSq=" + to_string(c.density.tail_sq)});
    t.rows.push_back({"visit " + tag, yes_no(visit_ok), "m=" + std::to_string(c.visit.m),
                      "residualSq=" + to_string(c.visit.residual_sq)});
    if (c.fixed) {
      entry["periodic"] = {{"period", c.fixed->period},
                           {"verifiedUpTo", c.fixed->verified_up_to},
                           {"tailSq", to_json(periodic_tail_sq(sys, c.fixed->prefix, o.period))},
                           {"pass", true}};
      t.rows.push_back({"periodic " + tag, "yes", "N=" + std::to_string(o.period),
                        "verifiedUpTo=" + std::to_string(c.fixed->verified_up_to)});
    }
    jt.push_back(std::move(entry));
  }
  results["targets"] = std::move(jt);

  // In c the residual picks up at most a factor 2 through the inverse of J.
  const Rational budget = spec.is_hat() ? tol_sq / 4 : tol_sq;
  const HypercyclicSchedule s = hypercyclic_schedule(sys, targets.engine, budget);
  std::vector<Rational> residuals = s.residuals_sq;
  Json vec = to_json(s.vector);
  if (spec.is_hat()) {
    const ConvSeq v = J_inv(s.vector);
    vec = to_json(v);
    for (Index j = 0; j < T; ++j) {
      residuals[j] =
          sup_norm_conv(hat_power(spec, s.times[j] * o.power, v) - targets.in_c[j]).squared;
    }
  }
  bool sched_ok = true;
  Json jr = Json::array();
  for (const Rational& r : residuals) {
    sched_ok = sched_ok && r <= tol_sq;
    jr.push_back(to_json(r));
  }
  ok = ok && sched_ok;
  std::string times;
  for (Index m : s.times) times += (times.empty() ? "" : ",") + std::to_string(m);
  t.rows.push_back({"schedule", yes_no(sched_ok), "times=" + times,
                    "maxResidualSq=" + to_string(*std::max_element(residuals.begin(), residuals.end()))});
  results["schedule"] = {{"times", s.times},
                         {"residualsSq", std::move(jr)},
                         {"vector", std::move(vec)},
                         {"pass", sched_ok}};

  Report rep{"chaos", to_json(spec), std::move(results), pass_fail(ok), {}};
  rep.tables.push_back(std::move(t));
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Scalar> parse_grid(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(item));
  if (out.empty()) throw ParseError("lambda grid is empty");
  return out;
}

}  // namespace

Report cmd_spectrum(const SpectrumOptions& o, const GlobalOptions& g) {
  const OperatorSpec spec = any_spec(o.variant, o.base, o.w);
  const std::vector<Scalar> grid = parse_grid(o.lambda_grid);
  const Field field = o.real ? Field::Real : Field::Complex;

  struct Cell {
    SpectrumVerdict v;
    std::optional<Rational> residual;
  };
  const auto cells = kernels::map<Cell>(kernels::default_exec(), static_cast<Index>(grid.size()),
                                        [&](Index i) {
    Cell c{classify_spectrum(spec, grid[i], field), std::nullopt};
    if (c.v.kernel) {
      c.residual = eigen_residual(spec, grid[i], *c.v.kernel, g.K, kernels::Exec::Serial);
    } else if (c.v.kernel_c) {
      c.residual = eigen_residual_hat(spec, grid[i], *c.v.kernel_c, g.K, kernels::Exec::Serial);
    }
    return c;
  });

  Table t{"spectrum", {"lambda", "class", "residualSq", "multiplicity"}, {}};
  Json rows = Json::array();
  bool ok = true;
  for (const Cell& c : cells) {
    Json r = {{"lambda", to_json(c.v.lambda)}, {"class", std::string(to_string(c.v.cls))}};
    if (c.residual) {
      ok = ok && sgn(*c.residual) == 0;
      r["residualSq"] = to_json(*c.residual);
    }
    if (c.v.multiplicity) r["multiplicity"] = *c.v.multiplicity;
    t.rows.push_back({c.v.lambda.str(), std::string(to_string(c.v.cls)),
                      c.residual ? to_string(*c.residual) : "-",
                      c.v.multiplicity ? std::to_string(*c.v.multiplicity) : "-"});
    rows.push_back(std::move(r));
  }
  Json notes = Json::array();
  if (o.real) notes.push_back("real field: only eigenvalue membership is classified");
  if (spec.variant() == Variant::UnboundedHat) {
    notes.push_back("every eigenvalue of the unbounded operator on c has a one-dimensional eigenspace");
  }
  Report rep{"spectrum", to_json(spec), {{"rows", std::move(rows)}, {"K", g.K}, {"notes", notes}},
             Verdict::Pass, {}};
  rep.verdict = !ok ? Verdict::Fail : (o.real ? Verdict::Info : Verdict::Pass);
  rep.tables.push_back(std::move(t));
  return rep;
}

// ---------------------------------------------------------------------------

Report cmd_conjugacy(const ConjugacyOptions& o, const GlobalOptions& g) {
  const Scalar w = Scalar::parse(o.w);
  require_positive(o.n_max, "n-max");
  require_positive(o.samples, "samples");
  const std::vector<OperatorSpec> specs = {OperatorSpec::bounded_hat(w), OperatorSpec::unbounded_hat(w)};
  const bool complex = !w.is_real();

  SampleRng rng(g.seed);
  std::vector<ConvSeq> xs;
  std::vector<FinSeq> ys;
  for (Index i = 0; i < o.samples; ++i) xs.push_back(rng.convseq(8, complex));
  for (Index i = 0; i < o.samples; ++i) ys.push_back(rng.finseq(IndexBase::Zero, 8, complex));

  Table t{"conjugacy", {"check", "n", "equal", "samples"}, {}};
  Json diagram = Json::array();
  bool ok = true;
  for (const OperatorSpec& spec : specs) {
    // cell (n, sample) flattened; assembled in index order
    const Index cells = o.n_max * o.samples;
    const auto eq = kernels::map<char>(kernels::default_exec(), cells, [&](Index c) {
      return static_cast<char>(conjugation_oracle(spec, c / o.samples + 1, xs[c % o.samples]).equal);
    });
    Json rows = Json::array();
    bool vok = true;
    for (Index n = 1; n <= o.n_max; ++n) {
      Index count = 0;
      for (Index i = 0; i < o.samples; ++i) count += eq[(n - 1) * o.samples + i];
      vok = vok && count == o.samples;
      rows.push_back({{"n", n}, {"equal", count}});
      t.rows.push_back({std::string(to_string(spec.variant())), std::to_string(n),
                        std::to_string(count), std::to_string(o.samples)});
    }
    ok = ok && vok;
    diagram.push_back({{"variant", std::string(to_string(spec.variant()))},
                       {"rows", std::move(rows)},
                       {"pass", vok}});
  }

  Index fwd = 0, bwd = 0;
  Rational max_ratio(0);
  for (Index i = 0; i < o.samples; ++i) {
    const FinSeq jx = J(xs[i]);
    fwd += J_inv(jx) == xs[i];
    bwd += J(J_inv(ys[i])) == ys[i];
    const Rational xn = sup_norm_conv(xs[i]).squared;
    if (sgn(xn) != 0) max_ratio = std::max(max_ratio, Rational(sup_norm(jx).squared / xn));
  }
  const bool rt_ok = fwd == o.samples && bwd == o.samples;
  const bool nb_ok = max_ratio <= 4;
  ok = ok && rt_ok && nb_ok;
  t.rows.push_back({"J_inv(J(x)) = x", "-", std::to_string(fwd), std::to_string(o.samples)});
  t.rows.push_back({"J(J_inv(y)) = y", "-", std::to_string(bwd), std::to_string(o.samples)});
  t.rows.push_back({"max |Jx|^2/|x|^2", "-", to_string(max_ratio), "<= 4"});

  Json spec_echo = Json::array();
  for (const OperatorSpec& s : specs) spec_echo.push_back(to_json(s));
  Report rep{"conjugacy", std::move(spec_echo),
             {{"samples", o.samples},
              {"nMax", o.n_max},
              {"diagram", std::move(diagram)},
              {"roundTrip", {{"forward", fwd}, {"backward", bwd}, {"pass", rt_ok}}},
              {"normBound", {{"maxRatioSq", to_json(max_ratio)}, {"bound", "4"}, {"pass", nb_ok}}}},
             pass_fail(ok), {}};
  rep.tables.push_back(std::move(t));
  return rep;
}

// ---------------------------------------------------------------------------

Report cmd_negative(const NegativeOptions& o, const GlobalOptions& g) {
  const Extension ext = parse_extension(o.variant);
  const Scalar w = Scalar::parse(o.w);
  require_weight(w);
  require_positive(o.samples, "samples");
  if (o.plant < 0) throw InvalidArgument("plant must be non-negative");
  const ObstructionReport r = obstruction_report(ext, w, o.samples, g.seed, o.plant, g.K);

  Table t{"evidence", {"sample", "checked"}, {}};
  Json evidence = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < r.evidence.size(); ++i) {
    const EvidenceEntry& e = r.evidence[i];
    ok = ok && e.checked.is_zero();
    evidence.push_back({{"input", to_json(e.input)}, {"checked", to_json(e.checked)}});
    t.rows.push_back({std::to_string(i + 1), e.checked.str()});
  }
  Json rejected = Json::array();
  for (const auto& [x, dw] : r.rejected) {
    ok = ok && dw.status == DomainStatus::NotInDomain;
    Json jr = {{"input", to_json(x)},
               {"status", std::string(to_string(dw.status))},
               {"chain", dw.chain}};
    if (dw.growth) {
      jr["growth"] = {{"from", dw.growth->from},
                      {"to", dw.growth->to},
                      {"minRatioSq", to_json(dw.growth->min_ratio_sq)}};
      if (g.approx) jr["growth"]["lastLogMagnitude"] = approx_value(dw.growth->last_logmag);
    }
    t.rows.push_back({"planted", std::string(to_string(dw.status))});
    rejected.push_back(std::move(jr));
  }
  Json spec = {{"variant", std::string(to_string(ext))}, {"space", "c"}, {"base", "one"}, {"w", w.str()}};
  Report rep{"negative", std::move(spec),
             {{"obstruction", std::string(to_string(r.obstruction))},
              {"evidence", std::move(evidence)},
              {"rejected", std::move(rejected)},
              {"conclusion", r.not_hypercyclic ? "NOT_HYPERCYCLIC" : "UNDETERMINED"}},
             pass_fail(ok && r.not_hypercyclic), {}};
  rep.tables.push_back(std::move(t));
  return rep;
}

}  // namespace shiftchaos::cli
