#pragma once

// The coordinate isomorphism J : c(N) -> c0(Z+),
//   (Jx)_0 = l(x),  (Jx)_k = x_k - l(x),
// its inverse (J^{-1} y)_k = y_k + y_0, and the operators on c obtained by
// conjugating the Z+ shifts: hat(A) = J^{-1} A J.
//
//   bounded    (hat(A)^n x)_k = w^n (x_{k+n} + x_n - 2 l(x))
//   unbounded  (hat(A)^n x)_k = W(k,n)(x_{k+n} - l(x)) + W(0,n)(x_n - l(x)),
//              W(k,n) = prod_{j=k}^{k+n-1} w^j

#include "shiftchaos/sequence.hpp"
#include "shiftchaos/shift.hpp"

namespace shiftchaos {

FinSeq J(const ConvSeq& x);
ConvSeq J_inv(const FinSeq& y);
FormulaSeq J(const ConvFormula& x);
ConvFormula J_inv(const FormulaSeq& y);

/// The Z+ shift a hat operator is conjugate to.
OperatorSpec underlying_shift(const OperatorSpec& hat);

ConvSeq bounded_hat_apply(const OperatorSpec& spec, const ConvSeq& x);
ConvSeq bounded_hat_power(const OperatorSpec& spec, Index n, const ConvSeq& x);
ConvSeq unbounded_hat_apply(const OperatorSpec& spec, const ConvSeq& x);
ConvSeq unbounded_hat_power(const OperatorSpec& spec, Index n, const ConvSeq& x);

ConvSeq hat_apply(const OperatorSpec& spec, const ConvSeq& x);
ConvSeq hat_power(const OperatorSpec& spec, Index n, const ConvSeq& x);
ConvSeq hat_power_by_iteration(const OperatorSpec& spec, Index n, const ConvSeq& x);
/// J^{-1} A^n J x.
ConvSeq hat_power_via_conjugation(const OperatorSpec& spec, Index n, const ConvSeq& x);

/// Closed-form entries and limit of hat(A)^n x for infinitely supported x.
Scalar hat_power_entry(const OperatorSpec& spec, Index n, const ConvFormula& x, Index k);
Scalar hat_power_limit(const OperatorSpec& spec, Index n, const ConvFormula& x);

/// D(hat(A)^n) predicate for the unbounded hat operator, through J.
DomainVerdict hat_domain_membership(const OperatorSpec& spec, Index n, const ConvFormula& x,
                                    Index K = kDefaultHorizon);

struct ConjugationWitness {
  ConvSeq input;
  Index n = 1;
  ConvSeq closed_form;
  ConvSeq via_j;
  bool equal = false;
};

ConjugationWitness conjugation_oracle(const OperatorSpec& spec, Index n, const ConvSeq& x);

}  // namespace shiftchaos
