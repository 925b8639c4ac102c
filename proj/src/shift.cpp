#include "shiftchaos/shift.hpp"

#include "shiftchaos/errors.hpp"

#include <algorithm>
#include <utility>

namespace shiftchaos {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::BoundedShift: return "bounded";
    case Variant::UnboundedShift: return "unbounded";
    case Variant::BoundedHat: return "bounded-hat";
    case Variant::UnboundedHat: return "unbounded-hat";
  }
  return "?";
}

std::string_view to_string(Space s) { return s == Space::C0 ? "c0" : "c"; }

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::In: return "IN";
    case Membership::Out: return "OUT";
    case Membership::Undecided: return "UNDECIDED";
  }
  return "?";
}

void require_weight(const Scalar& w) {
  if (!(w.norm_sq() > 1)) throw InvalidWeight();
}

OperatorSpec::OperatorSpec(Variant variant, Space space, IndexBase base, Scalar w)
    : variant_(variant), space_(space), base_(base), w_(std::move(w)) {
  require_weight(w_);
  if (is_hat()) {
    if (space_ != Space::C || base_ != IndexBase::One) {
      throw InvalidArgument("conjugated operators act on c over the base-one index set");
    }
  } else if (space_ != Space::C0) {
    throw InvalidArgument("weighted backward shifts act on c0");
  }
}

namespace {

void require_variant(const OperatorSpec& spec, Variant v, std::string_view what) {
  if (spec.variant() != v) {
    throw InvalidArgument(std::string(what) + " needs a " + std::string(to_string(v)) +
                          " operator, got " + std::string(to_string(spec.variant())));
  }
}

void require_shift(const OperatorSpec& spec, std::string_view what) {
  if (spec.is_hat()) {
    throw InvalidArgument(std::string(what) + " needs a shift operator on c0");
  }
}

void require_positive(Index n) {
  if (n < 1) throw InvalidArgument("power must be a positive integer");
}

// Moves every entry of x from index k to k + offset scaled by w^{exp(k)};
// entries landing below the base are dropped.
template <class ExponentFn>
FinSeq shift_entries(const OperatorSpec& spec, const FinSeq& x, Index offset, ExponentFn exponent) {
  require_same_base(spec.base(), x.base(), "operator application");
  const Index lo = first_index(x.base());
  FinSeq::Entries out;
  for (const auto& [k, v] : x.entries()) {
    const Index target = k + offset;
    if (target < lo) continue;
    out.emplace(target, v * spec.w().pow(exponent(target)));
  }
  return FinSeq(x.base(), std::move(out));
}

}  // namespace

FinSeq apply_bounded(const OperatorSpec& spec, const FinSeq& x) {
  require_variant(spec, Variant::BoundedShift, "apply_bounded");
  return shift_entries(spec, x, -1, [](Index) { return Index{1}; });
}

FinSeq apply_unbounded(const OperatorSpec& spec, const FinSeq& x) {
  require_variant(spec, Variant::UnboundedShift, "apply_unbounded");
  return shift_entries(spec, x, -1, [](Index k) { return k; });
}

FinSeq power_bounded(const OperatorSpec& spec, Index n, const FinSeq& x) {
  require_variant(spec, Variant::BoundedShift, "power_bounded");
  require_positive(n);
  return shift_entries(spec, x, -n, [n](Index) { return n; });
}

FinSeq power_unbounded(const OperatorSpec& spec, Index n, const FinSeq& x) {
  require_variant(spec, Variant::UnboundedShift, "power_unbounded");
  require_positive(n);
  return shift_entries(spec, x, -n, [n](Index k) { return weight_exponent(k, n); });
}

FinSeq right_inverse_bounded(const OperatorSpec& spec, const FinSeq& x) {
  require_variant(spec, Variant::BoundedShift, "right_inverse_bounded");
  return shift_entries(spec, x, 1, [](Index) { return Index{-1}; });
}

FinSeq right_inverse_unbounded(const OperatorSpec& spec, const FinSeq& x) {
  require_variant(spec, Variant::UnboundedShift, "right_inverse_unbounded");
  return shift_entries(spec, x, 1, [](Index k) { return -(k - 1); });
}

FinSeq right_inverse_power_bounded(const OperatorSpec& spec, Index n, const FinSeq& x) {
  require_variant(spec, Variant::BoundedShift, "right_inverse_power_bounded");
  require_positive(n);
  return shift_entries(spec, x, n, [n](Index) { return -n; });
}

FinSeq right_inverse_power_unbounded(const OperatorSpec& spec, Index n, const FinSeq& x) {
  require_variant(spec, Variant::UnboundedShift, "right_inverse_power_unbounded");
  require_positive(n);
  return shift_entries(spec, x, n, [n](Index k) { return -n * k + n * (n + 1) / 2; });
}

FinSeq apply(const OperatorSpec& spec, const FinSeq& x) {
  require_shift(spec, "apply");
  return spec.is_bounded() ? apply_bounded(spec, x) : apply_unbounded(spec, x);
}

FinSeq power(const OperatorSpec& spec, Index n, const FinSeq& x) {
  require_shift(spec, "power");
  return spec.is_bounded() ? power_bounded(spec, n, x) : power_unbounded(spec, n, x);
}

FinSeq right_inverse(const OperatorSpec& spec, const FinSeq& x) {
  require_shift(spec, "right_inverse");
  return spec.is_bounded() ? right_inverse_bounded(spec, x) : right_inverse_unbounded(spec, x);
}

FinSeq right_inverse_power(const OperatorSpec& spec, Index n, const FinSeq& x) {
  require_shift(spec, "right_inverse_power");
  return spec.is_bounded() ? right_inverse_power_bounded(spec, n, x)
                           : right_inverse_power_unbounded(spec, n, x);
}

FinSeq power_by_iteration(const OperatorSpec& spec, Index n, const FinSeq& x) {
  require_positive(n);
  FinSeq y = x;
  for (Index i = 0; i < n; ++i) y = apply(spec, y);
  return y;
}

FinSeq right_inverse_power_by_iteration(const OperatorSpec& spec, Index n, const FinSeq& x) {
  require_positive(n);
  FinSeq y = x;
  for (Index i = 0; i < n; ++i) y = right_inverse(spec, y);
  return y;
}

Scalar power_entry(const OperatorSpec& spec, Index n, const FormulaSeq& x, Index k) {
  require_shift(spec, "power_entry");
  require_same_base(spec.base(), x.base(), "power_entry");
  require_positive(n);
  const Index e = spec.is_bounded() ? n : weight_exponent(k, n);
  return spec.w().pow(e) * x(k + n);
}

FormulaSeq power_formula(const OperatorSpec& spec, Index n, const FormulaSeq& x) {
  require_shift(spec, "power_formula");
  require_same_base(spec.base(), x.base(), "power_formula");
  require_positive(n);
  return FormulaSeq(x.base(), [spec, n, x](Index k) { return power_entry(spec, n, x, k); });
}

NormFormulaResult opnorm_Bn(const OperatorSpec& spec, Index n) {
  require_shift(spec, "opnorm_Bn");
  require_positive(n);
  // Exponent of |w| in ||B^n||^2 (always even).
  Index e = 0;
  if (spec.is_bounded()) {
    e = -2 * n;
  } else if (spec.base() == IndexBase::One) {
    e = -n * (n + 1);
  } else {
    e = -n * (n - 1);
  }
  const Rational wsq = spec.w().norm_sq();
  NormFormulaResult r{n, pow(wsq, e / 2), 0.0};
  r.logmag = 0.25 * static_cast<double>(e) * log_of(wsq);
  return r;
}

NormFormulaResult unboundedness_witness(const OperatorSpec& spec, Index n, Index m) {
  require_variant(spec, Variant::UnboundedShift, "unboundedness_witness");
  if (spec.base() != IndexBase::One) {
    throw InvalidArgument("unboundedness_witness is stated over the base-one index set");
  }
  require_positive(n);
  require_positive(m);
  // The only entry sits at k = m with weight w^{E(m, n)}.
  const Index e = weight_exponent(m, n);
  const Rational wsq = spec.w().norm_sq();
  NormFormulaResult r{n, pow(wsq, e), 0.5 * static_cast<double>(e) * log_of(wsq)};
  const Rational direct = sup_norm(power_unbounded(spec, n, basis_vector(IndexBase::One, n + m))).squared;
  if (direct != r.squared) {
    throw Error("unboundedness witness disagrees with the power formula");
  }
  return r;
}

std::optional<DecayCertificate> inherit_weighted_certificate(const DecayCertificate& cert,
                                                             const Rational& w_norm_sq, Index n,
                                                             IndexBase base) {
  const Index p = cert.stride;
  const Rational growth = pow(w_norm_sq, n * p);  // |w|^{2np}
  Index k1 = std::max(first_index(base), cert.start - n);
  Rational bound = growth * cert.bound_at(k1 + n);
  if (sgn(cert.ratio_sq) == 0) {
    return DecayCertificate{k1, p, Rational(0), cert.shrink_sq};
  }
  if (cert.shrink_sq == 1) {
    if (bound < 1) return DecayCertificate{k1, p, bound, Rational(1)};
    return std::nullopt;
  }
  // Super-geometric decay eventually absorbs any fixed growth factor.
  for (int step = 0; step < 100000 && !(bound < 1); ++step) {
    ++k1;
    bound *= cert.shrink_sq;
  }
  if (!(bound < 1)) return std::nullopt;
  return DecayCertificate{k1, p, bound, cert.shrink_sq};
}

DomainVerdict domain_membership_unbounded(const OperatorSpec& spec, Index n, const FinSeq& x) {
  require_variant(spec, Variant::UnboundedShift, "domain_membership_unbounded");
  require_same_base(spec.base(), x.base(), "domain_membership_unbounded");
  require_positive(n);
  DomainVerdict v;
  v.verdict = Membership::In;
  v.checked_to = x.max_support();
  v.reason = "finitely supported: the weighted image is finitely supported";
  return v;
}

DomainVerdict domain_membership_unbounded(const OperatorSpec& spec, Index n, const FormulaSeq& x,
                                          Index K) {
  require_variant(spec, Variant::UnboundedShift, "domain_membership_unbounded");
  require_same_base(spec.base(), x.base(), "domain_membership_unbounded");
  require_positive(n);
  DomainVerdict v;
  v.checked_to = K;
  const FormulaSeq image = power_formula(spec, n, x);

  if (x.decay()) {
    if (auto cert = inherit_weighted_certificate(*x.decay(), spec.w().norm_sq(), n, spec.base())) {
      const FormulaSeq certified(image.base(), [image](Index k) { return image(k); }, *cert);
      const auto check = spot_check_decay(certified, cert->start, std::max(K, cert->start));
      if (check.holds) {
        v.verdict = Membership::In;
        v.image_certificate = cert;
        v.reason = "weighted image inherits a decay certificate from index " +
                   std::to_string(cert->start);
        return v;
      }
      v.verdict = Membership::Undecided;
      v.reason = "input certificate fails on the weighted image at k=" +
                 std::to_string(check.first_violation);
      return v;
    }
  }

  // No inheritable certificate: look for a non-vanishing weighted image.
  const Index lo = std::max(first_index(x.base()), K / 2);
  Rational prev = image(lo).norm_sq();
  bool non_decreasing = sgn(prev) > 0;
  for (Index k = lo + 1; k <= K && non_decreasing; ++k) {
    Rational cur = image(k).norm_sq();
    non_decreasing = cur >= prev;
    prev = std::move(cur);
  }
  if (non_decreasing) {
    v.verdict = Membership::Out;
    v.reason = "weighted image magnitudes are nonzero and non-decreasing on [" + std::to_string(lo) +
               ", " + std::to_string(K) + "]";
  } else {
    v.verdict = Membership::Undecided;
    v.reason = "no decay certificate and no persistent growth on [" + std::to_string(lo) + ", " +
               std::to_string(K) + "]";
  }
  return v;
}

}  // namespace shiftchaos
