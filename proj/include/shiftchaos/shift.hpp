#pragma once

// Weighted backward shifts on c0 over either index base:
//
//   bounded    (A x)_k = w x_{k+1}        right inverse (B x)_k = w^{-1} x_{k-1}
//   unbounded  (A x)_k = w^k x_{k+1}      right inverse (B x)_k = w^{-(k-1)} x_{k-1}
//
// with x_{base-1} := 0. Powers use closed forms; weight products are kept
// as integer exponents of w.

#include "shiftchaos/sequence.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace shiftchaos {

enum class Variant { BoundedShift, UnboundedShift, BoundedHat, UnboundedHat };
enum class Space { C0, C };

std::string_view to_string(Variant v);
std::string_view to_string(Space s);

class OperatorSpec {
 public:
  /// Throws InvalidWeight unless |w|^2 > 1, InvalidArgument on an
  /// inconsistent (variant, space, base) triple.
  OperatorSpec(Variant variant, Space space, IndexBase base, Scalar w);

  static OperatorSpec bounded_shift(IndexBase base, Scalar w) {
    return {Variant::BoundedShift, Space::C0, base, std::move(w)};
  }
  static OperatorSpec unbounded_shift(IndexBase base, Scalar w) {
    return {Variant::UnboundedShift, Space::C0, base, std::move(w)};
  }
  static OperatorSpec bounded_hat(Scalar w) {
    return {Variant::BoundedHat, Space::C, IndexBase::One, std::move(w)};
  }
  static OperatorSpec unbounded_hat(Scalar w) {
    return {Variant::UnboundedHat, Space::C, IndexBase::One, std::move(w)};
  }

  Variant variant() const { return variant_; }
  Space space() const { return space_; }
  IndexBase base() const { return base_; }
  const Scalar& w() const { return w_; }

  bool is_bounded() const { return variant_ == Variant::BoundedShift || variant_ == Variant::BoundedHat; }
  bool is_hat() const { return variant_ == Variant::BoundedHat || variant_ == Variant::UnboundedHat; }

  friend bool operator==(const OperatorSpec&, const OperatorSpec&) = default;

 private:
  Variant variant_;
  Space space_;
  IndexBase base_;
  Scalar w_;
};

/// Throws InvalidWeight unless |w|^2 > 1.
void require_weight(const Scalar& w);

/// Norm of an operator power in exact squared form plus its log.
struct NormFormulaResult {
  Index n = 0;
  Rational squared;
  double logmag = 0.0;
};

/// sum_{j=k}^{k+n-1} j = n k + n(n-1)/2.
constexpr Index weight_exponent(Index k, Index n) { return n * k + n * (n - 1) / 2; }

FinSeq apply_bounded(const OperatorSpec& spec, const FinSeq& x);
FinSeq apply_unbounded(const OperatorSpec& spec, const FinSeq& x);
FinSeq power_bounded(const OperatorSpec& spec, Index n, const FinSeq& x);
FinSeq power_unbounded(const OperatorSpec& spec, Index n, const FinSeq& x);
FinSeq right_inverse_bounded(const OperatorSpec& spec, const FinSeq& x);
FinSeq right_inverse_unbounded(const OperatorSpec& spec, const FinSeq& x);
FinSeq right_inverse_power_bounded(const OperatorSpec& spec, Index n, const FinSeq& x);
FinSeq right_inverse_power_unbounded(const OperatorSpec& spec, Index n, const FinSeq& x);

// Variant dispatch for shift specs.
FinSeq apply(const OperatorSpec& spec, const FinSeq& x);
FinSeq power(const OperatorSpec& spec, Index n, const FinSeq& x);
FinSeq right_inverse(const OperatorSpec& spec, const FinSeq& x);
FinSeq right_inverse_power(const OperatorSpec& spec, Index n, const FinSeq& x);

// n-fold application; the reference path the closed forms are tested against.
FinSeq power_by_iteration(const OperatorSpec& spec, Index n, const FinSeq& x);
FinSeq right_inverse_power_by_iteration(const OperatorSpec& spec, Index n, const FinSeq& x);

/// (A^n x)_k for an infinitely supported x.
Scalar power_entry(const OperatorSpec& spec, Index n, const FormulaSeq& x, Index k);
/// A^n x as a formula sequence (no certificate attached).
FormulaSeq power_formula(const OperatorSpec& spec, Index n, const FormulaSeq& x);

/// ||B^n|| for the right inverse: |w|^{-n} bounded, |w|^{-n(n+1)/2} unbounded
/// over N, |w|^{-n(n-1)/2} unbounded over Z+.
NormFormulaResult opnorm_Bn(const OperatorSpec& spec, Index n);

/// ||A^n e_{n+m}|| = |w|^{nm + n(n-1)/2} for the unbounded shift over N.
/// This agrees with |w|^{(m+n)(m+n-1)/2} only at m = 1.
/// The closed form is cross-checked against power_unbounded on the basis
/// vector; a mismatch throws.
NormFormulaResult unboundedness_witness(const OperatorSpec& spec, Index n, Index m);

enum class Membership { In, Out, Undecided };
std::string_view to_string(Membership m);

struct DomainVerdict {
  Membership verdict = Membership::Undecided;
  /// Decay certificate of the weighted image when verdict is In (formula inputs).
  std::optional<DecayCertificate> image_certificate;
  Index checked_to = 0;
  std::string reason;
};

/// Membership of x in D(A^n) for the unbounded shift.
DomainVerdict domain_membership_unbounded(const OperatorSpec& spec, Index n, const FinSeq& x);
DomainVerdict domain_membership_unbounded(const OperatorSpec& spec, Index n, const FormulaSeq& x,
                                          Index K = kDefaultHorizon);

/// Certificate for u_k = w^{E(k)} x_{k+n} derived from one for x, when the
/// weight growth |w|^{2 n stride} can be absorbed. Shared with the c-space
/// domain predicates.
std::optional<DecayCertificate> inherit_weighted_certificate(const DecayCertificate& cert,
                                                             const Rational& w_norm_sq, Index n,
                                                             IndexBase base);

}  // namespace shiftchaos
