#pragma once

// Constructive side of chaoticity for the weighted backward shifts:
// hypotheses of the sufficient condition for linear chaos on c00, explicit
// periodic points, exact orbit visits and finite hypercyclic schedules.
//
// Everything runs against a ShiftSystem, i.e. a shift A together with the
// power p in use, so the same machinery covers A^p (with right inverse B^p).

#include "shiftchaos/kernels.hpp"
#include "shiftchaos/sequence.hpp"
#include "shiftchaos/shift.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace shiftchaos {

struct ShiftSystem {
  OperatorSpec spec;
  Index power = 1;

  explicit ShiftSystem(OperatorSpec s, Index p = 1);

  /// (A^p)^n x and (B^p)^n x.
  FinSeq forward(Index n, const FinSeq& x) const;
  FinSeq backward(Index n, const FinSeq& x) const;
  IndexBase base() const { return spec.base(); }
};

// ---------------------------------------------------------------------------
// Sufficient-condition check

struct DecayRow {
  Index n = 0;
  Rational forward_sq;   // ||A^n x||^2
  Rational backward_sq;  // ||B^n x||^2
};

/// alpha^2 in (0,1) and c^2 > 0 with max(||A^n x||, ||B^n x||)^2 <= c^2 alpha^{2n}.
struct DecayFit {
  Rational alpha_sq;
  Rational c_sq;
};

struct SampleReport {
  FinSeq sample;
  bool right_inverse_ok = false;
  std::vector<DecayRow> table;
  std::optional<DecayFit> fit;

  bool passed() const { return right_inverse_ok && fit.has_value(); }
};

struct SccReport {
  std::string operator_label;
  std::optional<OperatorSpec> spec;
  Index power = 1;
  Index n_max = 0;
  std::vector<SampleReport> samples;
  bool right_inverse_pass = false;
  bool decay_pass = false;
  /// Hypotheses the check takes on trust.
  std::vector<std::string> assumed;

  bool passed() const { return right_inverse_pass && decay_pass; }
};

using PowerMap = std::function<FinSeq(Index, const FinSeq&)>;

/// Fits (alpha, c) to a decay table: alpha^2 is the largest per-step ratio
/// over n >= n0 (past the transient), c^2 dominates every row. Returns
/// nullopt when no alpha < 1 fits.
std::optional<DecayFit> fit_decay(std::span<const DecayRow> table, Index n0);

/// Generic check of the two hypotheses for one sample: A B x = x, and the
/// decay table for n = 1..n_max. `span` is the transient length.
SampleReport check_scc_sample(const PowerMap& forward, const PowerMap& backward, const FinSeq& x,
                              Index n_max);

SccReport verify_scc(const ShiftSystem& sys, std::span<const FinSeq> samples, Index n_max,
                     kernels::Exec exec = kernels::default_exec());
/// Random c00 samples with support span <= n_max / 2.
SccReport verify_scc(const ShiftSystem& sys, Index sample_count, Index n_max, std::uint64_t seed,
                     kernels::Exec exec = kernels::default_exec());
/// The same check run against an arbitrary (A, B) pair, e.g. the identity
/// map as a negative control.
SccReport verify_scc_pair(std::string label, const PowerMap& forward, const PowerMap& backward,
                          std::span<const FinSeq> samples, Index n_max,
                          kernels::Exec exec = kernels::default_exec());

// ---------------------------------------------------------------------------
// Periodic points

struct PerNResult {
  bool member = false;
  Rational max_residual_sq;
  Index checked_to = 0;
};

/// (A^{pN} x - x)_k = 0 for k <= K.
PerNResult per_N_membership(const ShiftSystem& sys, const FinSeq& x, Index N);
PerNResult per_N_membership(const ShiftSystem& sys, const FormulaSeq& x, Index N,
                            Index K = kDefaultHorizon, kernels::Exec exec = kernels::default_exec());
/// Same check under a hat operator on c, including the limit.
PerNResult per_N_membership_hat(const OperatorSpec& hat, const ConvFormula& x, Index N,
                                Index K = kDefaultHorizon,
                                kernels::Exec exec = kernels::default_exec());

struct PeriodicPoint {
  OperatorSpec spec;
  Index power = 1;
  Index period = 1;
  FinSeq prefix;
  FormulaSeq seq;
  Index verified_up_to = 0;
};

/// Point of A^p with period N whose first pN entries are `prefix`.
/// Bounded: x_{k+P} = w^{-P} x_k; unbounded: x_{k+P} = x_k / w^{E(k)}, with
/// P = pN and E(k) = P k + P(P-1)/2. Verified to K; carries a stride-P
/// decay certificate.
PeriodicPoint build_periodic_point(const ShiftSystem& sys, const FinSeq& prefix, Index N,
                                   Index K = kDefaultHorizon,
                                   kernels::Exec exec = kernels::default_exec());

/// sup over the repeated blocks (all but the prefix) of |p_k|^2, exact.
Rational periodic_tail_sq(const ShiftSystem& sys, const FinSeq& prefix, Index N);

struct PeriodicDensity {
  PeriodicPoint point;
  Rational tail_sq;
  Rational tolerance_sq;
};

/// Periodic point with prefix = target and the smallest period whose tail
/// satisfies ||p - target||^2 <= tolerance_sq.
PeriodicDensity periodic_density_demo(const ShiftSystem& sys, const FinSeq& target,
                                      const Rational& tolerance_sq, Index K = kDefaultHorizon,
                                      kernels::Exec exec = kernels::default_exec());

/// J^{-1} of a periodic point of a Z+ shift: a periodic point of the
/// conjugate operator on c.
ConvFormula transfer_to_c(const PeriodicPoint& p);

// ---------------------------------------------------------------------------
// Orbits

struct VisitCertificate {
  FinSeq seed;
  FinSeq target;
  Index m = 1;
  FinSeq vector;  // seed + B^m target
  Rational residual_sq;
};

VisitCertificate orbit_visit(const ShiftSystem& sys, const FinSeq& seed, const FinSeq& target,
                             Index m);

struct HypercyclicSchedule {
  std::vector<FinSeq> targets;
  std::vector<Index> times;
  FinSeq vector;  // sum_j B^{m_j} z_j
  std::vector<Rational> residuals_sq;
  Rational tolerance_sq;

  bool within_tolerance() const;
};

/// Greedy times m_1 < m_2 < ...: each gap covers the previous target's span
/// and pushes every later contamination term below tolerance / J.
HypercyclicSchedule hypercyclic_schedule(const ShiftSystem& sys, std::span<const FinSeq> targets,
                                         const Rational& tolerance_sq);
/// Exact residuals ||A^{m_j} x - z_j||^2 for prescribed times.
HypercyclicSchedule schedule_for_times(const ShiftSystem& sys, std::span<const FinSeq> targets,
                                       std::span<const Index> times, const Rational& tolerance_sq);

}  // namespace shiftchaos
