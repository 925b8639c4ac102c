#include "shiftchaos/chaos.hpp"

#include "shiftchaos/conjugacy.hpp"
#include "shiftchaos/errors.hpp"
#include "shiftchaos/random.hpp"

#include <algorithm>
#include <utility>

namespace shiftchaos {

ShiftSystem::ShiftSystem(OperatorSpec s, Index p) : spec(std::move(s)), power(p) {
  if (spec.is_hat()) throw InvalidArgument("shift systems are built from shifts on c0");
  if (power < 1) throw InvalidArgument("power must be a positive integer");
}

FinSeq ShiftSystem::forward(Index n, const FinSeq& x) const { return shiftchaos::power(spec, n * power, x); }

FinSeq ShiftSystem::backward(Index n, const FinSeq& x) const {
  return right_inverse_power(spec, n * power, x);
}

// ---------------------------------------------------------------------------
// Sufficient-condition check

std::optional<DecayFit> fit_decay(std::span<const DecayRow> table, Index n0) {
  if (table.empty()) return std::nullopt;
  auto row_max = [](const DecayRow& r) { return std::max(r.forward_sq, r.backward_sq); };

  Rational alpha_sq = 0;
  for (std::size_t i = 0; i + 1 < table.size(); ++i) {
    if (table[i].n < n0) continue;
    const Rational cur = row_max(table[i]);
    const Rational next = row_max(table[i + 1]);
    if (sgn(cur) == 0) {
      if (sgn(next) != 0) return std::nullopt;
      continue;
    }
    const Rational ratio = next / cur;
    if (ratio > alpha_sq) alpha_sq = ratio;
  }
  if (alpha_sq >= 1) return std::nullopt;
  if (sgn(alpha_sq) == 0) alpha_sq = Rational(1, 4);  // everything past n0 vanishes

  Rational c_sq = 0;
  for (const auto& r : table) {
    Rational need = row_max(r) / pow(alpha_sq, r.n);
    if (need > c_sq) c_sq = std::move(need);
  }
  if (sgn(c_sq) == 0) c_sq = 1;

  for (const auto& r : table) {
    if (row_max(r) > c_sq * pow(alpha_sq, r.n)) return std::nullopt;
  }
  return DecayFit{std::move(alpha_sq), std::move(c_sq)};
}

SampleReport check_scc_sample(const PowerMap& forward, const PowerMap& backward, const FinSeq& x,
                              Index n_max) {
  if (n_max < 2) throw InvalidArgument("decay table needs n_max >= 2");
  SampleReport rep;
  rep.sample = x;
  rep.right_inverse_ok = forward(1, backward(1, x)) == x;
  rep.table.reserve(static_cast<std::size_t>(n_max));
  for (Index n = 1; n <= n_max; ++n) {
    rep.table.push_back({n, sup_norm(forward(n, x)).squared, sup_norm(backward(n, x)).squared});
  }
  const Index n0 = std::min(x.span() + 1, n_max - 1);
  rep.fit = fit_decay(rep.table, n0);
  return rep;
}

SccReport verify_scc_pair(std::string label, const PowerMap& forward, const PowerMap& backward,
                          std::span<const FinSeq> samples, Index n_max, kernels::Exec exec) {
  SccReport rep;
  rep.operator_label = std::move(label);
  rep.n_max = n_max;
  rep.samples = kernels::map<SampleReport>(exec, static_cast<Index>(samples.size()), [&](Index i) {
    return check_scc_sample(forward, backward, samples[static_cast<std::size_t>(i)], n_max);
  });
  rep.right_inverse_pass = std::all_of(rep.samples.begin(), rep.samples.end(),
                                       [](const SampleReport& s) { return s.right_inverse_ok; });
  rep.decay_pass = std::all_of(rep.samples.begin(), rep.samples.end(),
                               [](const SampleReport& s) { return s.fit.has_value(); });
  rep.assumed.push_back("each power A^n is a closed operator");
  return rep;
}

SccReport verify_scc(const ShiftSystem& sys, std::span<const FinSeq> samples, Index n_max,
                     kernels::Exec exec) {
  for (const auto& s : samples) require_same_base(sys.base(), s.base(), "verify_scc");
  PowerMap fwd = [&sys](Index n, const FinSeq& x) { return sys.forward(n, x); };
  PowerMap bwd = [&sys](Index n, const FinSeq& x) { return sys.backward(n, x); };
  std::string label(to_string(sys.spec.variant()));
  if (sys.power > 1) label += "^" + std::to_string(sys.power);
  SccReport rep = verify_scc_pair(std::move(label), fwd, bwd, samples, n_max, exec);
  rep.spec = sys.spec;
  rep.power = sys.power;
  return rep;
}

SccReport verify_scc(const ShiftSystem& sys, Index sample_count, Index n_max, std::uint64_t seed,
                     kernels::Exec exec) {
  SampleRng rng(seed);
  std::vector<FinSeq> samples;
  samples.reserve(static_cast<std::size_t>(sample_count));
  const bool complex = !sys.spec.w().is_real();
  for (Index i = 0; i < sample_count; ++i) {
    samples.push_back(rng.finseq(sys.base(), std::max<Index>(1, n_max / 2), complex));
  }
  return verify_scc(sys, samples, n_max, exec);
}

// ---------------------------------------------------------------------------
// Periodic points

PerNResult per_N_membership(const ShiftSystem& sys, const FinSeq& x, Index N) {
  require_same_base(sys.base(), x.base(), "per_N_membership");
  if (N < 1) throw InvalidArgument("period must be a positive integer");
  const FinSeq diff = sys.forward(N, x) - x;
  PerNResult r;
  r.max_residual_sq = sup_norm(diff).squared;
  r.member = sgn(r.max_residual_sq) == 0;
  r.checked_to = std::max(x.max_support(), first_index(x.base()));
  return r;
}

PerNResult per_N_membership(const ShiftSystem& sys, const FormulaSeq& x, Index N, Index K,
                            kernels::Exec exec) {
  require_same_base(sys.base(), x.base(), "per_N_membership");
  if (N < 1) throw InvalidArgument("period must be a positive integer");
  const Index P = N * sys.power;
  const auto best = kernels::max_over(exec, first_index(x.base()), K, [&](Index k) {
    return (power_entry(sys.spec, P, x, k) - x(k)).norm_sq();
  });
  return {sgn(best.value) == 0, best.value, K};
}

PerNResult per_N_membership_hat(const OperatorSpec& hat, const ConvFormula& x, Index N, Index K,
                                kernels::Exec exec) {
  if (!hat.is_hat()) throw InvalidArgument("per_N_membership_hat needs a hat operator");
  if (N < 1) throw InvalidArgument("period must be a positive integer");
  auto best = kernels::max_over(exec, 1, K, [&](Index k) {
    return (hat_power_entry(hat, N, x, k) - x.at(k)).norm_sq();
  });
  Rational limit_gap = (hat_power_limit(hat, N, x) - x.limit).norm_sq();
  if (limit_gap > best.value) best.value = std::move(limit_gap);
  return {sgn(best.value) == 0, best.value, K};
}

namespace {

// Exponent of w^{-1} relating p_{r + qP} to prefix_r.
Index periodic_exponent(const OperatorSpec& spec, Index P, Index r, Index q) {
  if (spec.is_bounded()) return P * q;
  return P * (q * r + P * q * (q - 1) / 2) + q * P * (P - 1) / 2;
}

Index shift_period(const ShiftSystem& sys, Index N) {
  if (N < 1) throw InvalidArgument("period must be a positive integer");
  return N * sys.power;
}

}  // namespace

PeriodicPoint build_periodic_point(const ShiftSystem& sys, const FinSeq& prefix, Index N, Index K,
                                   kernels::Exec exec) {
  require_same_base(sys.base(), prefix.base(), "build_periodic_point");
  const Index P = shift_period(sys, N);
  if (prefix.span() > P) {
    throw InvalidArgument("prefix support " + std::to_string(prefix.span()) +
                          " does not fit in one period of length " + std::to_string(P));
  }
  const Index lo = first_index(prefix.base());
  const OperatorSpec spec = sys.spec;
  auto eval = [spec, prefix, P, lo](Index k) {
    const Index q = (k - lo) / P;
    const Index r = lo + (k - lo) % P;
    const Scalar head = prefix.at(r);
    if (head.is_zero() || q == 0) return head;
    return head * spec.w().pow(-periodic_exponent(spec, P, r, q));
  };

  const Rational wsq = spec.w().norm_sq();
  DecayCertificate cert;
  cert.stride = P;
  if (spec.is_bounded()) {
    cert.start = lo;
    cert.ratio_sq = pow(wsq, -P);
    cert.shrink_sq = 1;
  } else {
    // |p_{k+P}|^2 / |p_k|^2 = |w|^{-2 E(k)}, E(k) = P k + P(P-1)/2.
    Index start = lo;
    while (weight_exponent(start, P) < 1) ++start;
    cert.start = start;
    cert.ratio_sq = pow(wsq, -weight_exponent(start, P));
    cert.shrink_sq = pow(wsq, -P);
  }

  PeriodicPoint pt{spec, sys.power, N, prefix,
                   FormulaSeq(prefix.base(), eval, cert,
                              "periodic(N=" + std::to_string(N) + ")"),
                   K};
  const PerNResult check = per_N_membership(sys, pt.seq, N, K, exec);
  if (!check.member) throw Error("constructed periodic point fails A^N x = x");
  return pt;
}

Rational periodic_tail_sq(const ShiftSystem& sys, const FinSeq& prefix, Index N) {
  require_same_base(sys.base(), prefix.base(), "periodic_tail_sq");
  const Index P = shift_period(sys, N);
  const Rational wsq = sys.spec.w().norm_sq();
  Rational best = 0;
  // Exponents grow with q, so the first repeated block dominates.
  for (const auto& [r, v] : prefix.entries()) {
    Rational t = v.norm_sq() * pow(wsq, -periodic_exponent(sys.spec, P, r, 1));
    if (t > best) best = std::move(t);
  }
  return best;
}

PeriodicDensity periodic_density_demo(const ShiftSystem& sys, const FinSeq& target,
                                      const Rational& tolerance_sq, Index K, kernels::Exec exec) {
  if (!(sgn(tolerance_sq) > 0)) throw InvalidArgument("tolerance must be positive");
  Index N = std::max<Index>(1, (target.span() + sys.power - 1) / sys.power);
  Rational tail = periodic_tail_sq(sys, target, N);
  for (int guard = 0; tail > tolerance_sq; ++guard) {
    if (guard > 100000) throw Error("no period found below the tolerance");
    ++N;
    tail = periodic_tail_sq(sys, target, N);
  }
  return {build_periodic_point(sys, target, N, K, exec), std::move(tail), tolerance_sq};
}

ConvFormula transfer_to_c(const PeriodicPoint& p) {
  if (p.spec.base() != IndexBase::Zero) {
    throw BaseMismatch("transfer_to_c needs a periodic point over Z+");
  }
  return J_inv(p.seq);
}

// ---------------------------------------------------------------------------
// Orbits

VisitCertificate orbit_visit(const ShiftSystem& sys, const FinSeq& seed, const FinSeq& target,
                             Index m) {
  require_same_base(sys.base(), seed.base(), "orbit_visit");
  require_same_base(sys.base(), target.base(), "orbit_visit");
  if (m < 1) throw InvalidArgument("visit time must be a positive integer");
  VisitCertificate c{seed, target, m, seed + sys.backward(m, target), Rational(0)};
  c.residual_sq = sup_norm(sys.forward(m, c.vector) - target).squared;
  return c;
}

bool HypercyclicSchedule::within_tolerance() const {
  return std::all_of(residuals_sq.begin(), residuals_sq.end(),
                     [this](const Rational& r) { return r <= tolerance_sq; });
}

HypercyclicSchedule schedule_for_times(const ShiftSystem& sys, std::span<const FinSeq> targets,
                                       std::span<const Index> times, const Rational& tolerance_sq) {
  if (targets.size() != times.size()) throw InvalidArgument("one time per target");
  HypercyclicSchedule s;
  s.targets.assign(targets.begin(), targets.end());
  s.times.assign(times.begin(), times.end());
  s.tolerance_sq = tolerance_sq;
  s.vector = FinSeq(sys.base());
  for (std::size_t j = 0; j < targets.size(); ++j) {
    require_same_base(sys.base(), targets[j].base(), "hypercyclic_schedule");
    if (j > 0 && times[j] <= times[j - 1]) throw InvalidArgument("times must increase");
    s.vector = s.vector + sys.backward(times[j], targets[j]);
  }
  for (std::size_t j = 0; j < targets.size(); ++j) {
    s.residuals_sq.push_back(sup_norm(sys.forward(times[j], s.vector) - targets[j]).squared);
  }
  return s;
}

HypercyclicSchedule hypercyclic_schedule(const ShiftSystem& sys, std::span<const FinSeq> targets,
                                         const Rational& tolerance_sq) {
  if (!(sgn(tolerance_sq) > 0)) throw InvalidArgument("tolerance must be positive");
  const auto count = static_cast<Index>(targets.size());
  // Each later term may contribute at most tolerance / count.
  const Rational budget = tolerance_sq / Rational(count * count);
  std::vector<Index> times;
  Index m = 1;
  for (Index j = 0; j < count; ++j) {
    if (j > 0) {
      const FinSeq& prev = targets[static_cast<std::size_t>(j - 1)];
      const FinSeq& next = targets[static_cast<std::size_t>(j)];
      Index gap = std::max<Index>(1, (prev.span() + sys.power - 1) / sys.power);
      for (int guard = 0; sup_norm(sys.backward(gap, next)).squared > budget; ++guard) {
        if (guard > 100000) throw Error("no schedule gap found below the tolerance");
        ++gap;
      }
      m += gap;
    }
    times.push_back(m);
  }
  return schedule_for_times(sys, targets, times, tolerance_sq);
}

}  // namespace shiftchaos
