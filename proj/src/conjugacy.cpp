#include "shiftchaos/conjugacy.hpp"

#include "shiftchaos/errors.hpp"

#include <utility>

namespace shiftchaos {

namespace {

void require_hat(const OperatorSpec& spec, Variant v, std::string_view what) {
  if (spec.variant() != v) {
    throw InvalidArgument(std::string(what) + " needs a " + std::string(to_string(v)) + " operator");
  }
}

void require_positive(Index n) {
  if (n < 1) throw InvalidArgument("power must be a positive integer");
}

// Builds hat(A)^n x from the entry formula on the deviation's support; past
// max_support - n every entry equals the limit.
template <class EntryFn>
ConvSeq from_entry_formula(const ConvSeq& x, Index n, const Scalar& limit, EntryFn entry) {
  FinSeq::Entries dev;
  for (Index k = 1; k <= x.deviation().max_support() - n; ++k) {
    dev.emplace(k, entry(k) - limit);
  }
  return ConvSeq(limit, FinSeq(IndexBase::One, std::move(dev)));
}

}  // namespace

FinSeq J(const ConvSeq& x) {
  require_same_base(x.base(), IndexBase::One, "J");
  const Scalar l = limit_functional(x);
  FinSeq::Entries y;
  y.emplace(0, l);
  for (const auto& [k, d] : x.deviation().entries()) y.emplace(k, x.at(k) - l);
  return FinSeq(IndexBase::Zero, std::move(y));
}

ConvSeq J_inv(const FinSeq& y) {
  require_same_base(y.base(), IndexBase::Zero, "J_inv");
  const Scalar y0 = y.at(0);
  // (J^{-1} y)_k = y_k + y_0 converges to y_0.
  FinSeq::Entries dev;
  for (const auto& [k, v] : y.entries()) {
    if (k >= 1) dev.emplace(k, (v + y0) - y0);
  }
  return ConvSeq(y0, FinSeq(IndexBase::One, std::move(dev)));
}

FormulaSeq J(const ConvFormula& x) {
  require_same_base(x.deviation.base(), IndexBase::One, "J");
  std::optional<DecayCertificate> cert = x.deviation.decay();
  return FormulaSeq(
      IndexBase::Zero,
      [x](Index k) { return k == 0 ? x.limit : x.at(k) - x.limit; }, cert,
      "J(" + x.deviation.label() + ")");
}

ConvFormula J_inv(const FormulaSeq& y) {
  require_same_base(y.base(), IndexBase::Zero, "J_inv");
  const Scalar y0 = y(0);
  std::optional<DecayCertificate> cert = y.decay();
  if (cert && cert->start < 1) {
    // Entries from index 1 on are unchanged; move the anchor onto them.
    const Index shift = 1 - cert->start;
    cert->ratio_sq = cert->bound_at(1);
    cert->start += shift;
  }
  FormulaSeq dev(IndexBase::One, [y](Index k) { return y(k); }, cert, "Jinv(" + y.label() + ")");
  return ConvFormula{y0, std::move(dev)};
}

OperatorSpec underlying_shift(const OperatorSpec& hat) {
  if (!hat.is_hat()) throw InvalidArgument("underlying_shift needs a hat operator");
  return hat.is_bounded() ? OperatorSpec::bounded_shift(IndexBase::Zero, hat.w())
                          : OperatorSpec::unbounded_shift(IndexBase::Zero, hat.w());
}

ConvSeq bounded_hat_power(const OperatorSpec& spec, Index n, const ConvSeq& x) {
  require_hat(spec, Variant::BoundedHat, "bounded_hat_power");
  require_same_base(x.base(), IndexBase::One, "bounded_hat_power");
  require_positive(n);
  const Scalar wn = spec.w().pow(n);
  const Scalar l = limit_functional(x);
  const Scalar xn = x.at(n);
  const Scalar limit = wn * (xn - l);
  return from_entry_formula(x, n, limit, [&](Index k) {
    return wn * (x.at(k + n) + xn - Scalar(2) * l);
  });
}

ConvSeq bounded_hat_apply(const OperatorSpec& spec, const ConvSeq& x) {
  return bounded_hat_power(spec, 1, x);
}

ConvSeq unbounded_hat_power(const OperatorSpec& spec, Index n, const ConvSeq& x) {
  require_hat(spec, Variant::UnboundedHat, "unbounded_hat_power");
  require_same_base(x.base(), IndexBase::One, "unbounded_hat_power");
  require_positive(n);
  const Scalar& w = spec.w();
  const Scalar l = limit_functional(x);
  const Scalar limit = w.pow(weight_exponent(0, n)) * (x.at(n) - l);
  return from_entry_formula(x, n, limit, [&](Index k) {
    return w.pow(weight_exponent(k, n)) * (x.at(k + n) - l) + limit;
  });
}

ConvSeq unbounded_hat_apply(const OperatorSpec& spec, const ConvSeq& x) {
  return unbounded_hat_power(spec, 1, x);
}

ConvSeq hat_apply(const OperatorSpec& spec, const ConvSeq& x) {
  return spec.is_bounded() ? bounded_hat_apply(spec, x) : unbounded_hat_apply(spec, x);
}

ConvSeq hat_power(const OperatorSpec& spec, Index n, const ConvSeq& x) {
  if (!spec.is_hat()) throw InvalidArgument("hat_power needs a hat operator");
  return spec.is_bounded() ? bounded_hat_power(spec, n, x) : unbounded_hat_power(spec, n, x);
}

ConvSeq hat_power_by_iteration(const OperatorSpec& spec, Index n, const ConvSeq& x) {
  require_positive(n);
  ConvSeq y = x;
  for (Index i = 0; i < n; ++i) y = hat_apply(spec, y);
  return y;
}

ConvSeq hat_power_via_conjugation(const OperatorSpec& spec, Index n, const ConvSeq& x) {
  return J_inv(power(underlying_shift(spec), n, J(x)));
}

Scalar hat_power_limit(const OperatorSpec& spec, Index n, const ConvFormula& x) {
  if (!spec.is_hat()) throw InvalidArgument("hat_power_limit needs a hat operator");
  require_positive(n);
  const Index e = spec.is_bounded() ? n : weight_exponent(0, n);
  return spec.w().pow(e) * (x.at(n) - x.limit);
}

Scalar hat_power_entry(const OperatorSpec& spec, Index n, const ConvFormula& x, Index k) {
  if (!spec.is_hat()) throw InvalidArgument("hat_power_entry needs a hat operator");
  require_positive(n);
  const Scalar& l = x.limit;
  if (spec.is_bounded()) {
    return spec.w().pow(n) * (x.at(k + n) + x.at(n) - Scalar(2) * l);
  }
  return spec.w().pow(weight_exponent(k, n)) * (x.at(k + n) - l) + hat_power_limit(spec, n, x);
}

DomainVerdict hat_domain_membership(const OperatorSpec& spec, Index n, const ConvFormula& x,
                                    Index K) {
  require_hat(spec, Variant::UnboundedHat, "hat_domain_membership");
  return domain_membership_unbounded(underlying_shift(spec), n, J(x), K);
}

ConjugationWitness conjugation_oracle(const OperatorSpec& spec, Index n, const ConvSeq& x) {
  ConjugationWitness w;
  w.input = x;
  w.n = n;
  w.closed_form = hat_power(spec, n, x);
  w.via_j = hat_power_via_conjugation(spec, n, x);
  w.equal = w.closed_form == w.via_j;
  return w;
}

}  // namespace shiftchaos
