#pragma once

// Sequence models for c00, c0 and c.
//
//   FinSeq      finitely supported sequence (an element of c00)
//   ConvSeq     element of c stored as limit + finitely supported deviation
//   FormulaSeq  index -> scalar evaluator with an optional decay certificate
//   ConvFormula limit + FormulaSeq deviation (c elements with infinite support)

#include "shiftchaos/scalar.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace shiftchaos {

using Index = std::int64_t;

/// Default verification horizon for index-wise checks.
inline constexpr Index kDefaultHorizon = 500;

enum class IndexBase : int { Zero = 0, One = 1 };

constexpr Index first_index(IndexBase b) { return static_cast<Index>(b); }
std::string_view to_string(IndexBase b);
IndexBase parse_base(std::string_view text);
void require_same_base(IndexBase a, IndexBase b, std::string_view what);

struct NormValue {
  Rational squared;
  double magnitude = 0.0;
};

class FinSeq {
 public:
  using Entries = std::map<Index, Scalar>;

  explicit FinSeq(IndexBase base = IndexBase::One) : base_(base) {}
  /// Zero entries are dropped; indices below the base are rejected.
  FinSeq(IndexBase base, Entries entries);

  IndexBase base() const { return base_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  /// Entry at k (zero off the support).
  Scalar at(Index k) const;
  /// Largest supported index; base - 1 for the zero sequence.
  Index max_support() const;
  /// Number of leading slots up to and including max_support.
  Index span() const { return max_support() - first_index(base_) + 1; }

  FinSeq scaled(const Scalar& a) const;

  friend FinSeq operator+(const FinSeq& a, const FinSeq& b);
  friend FinSeq operator-(const FinSeq& a, const FinSeq& b);
  friend bool operator==(const FinSeq& a, const FinSeq& b) {
    return a.base_ == b.base_ && a.entries_ == b.entries_;
  }

 private:
  IndexBase base_;
  Entries entries_;
};

FinSeq basis_vector(IndexBase base, Index n);
NormValue sup_norm(const FinSeq& x);

/// x_k = limit + deviation_k over the base-one index set.
class ConvSeq {
 public:
  ConvSeq() : deviation_(IndexBase::One) {}
  ConvSeq(Scalar limit, FinSeq deviation);

  static ConvSeq constant(const Scalar& c) { return ConvSeq(c, FinSeq(IndexBase::One)); }
  /// Lift of a c0 element (limit 0).
  static ConvSeq from_finseq(FinSeq x) { return ConvSeq(Scalar(0), std::move(x)); }

  IndexBase base() const { return deviation_.base(); }
  const Scalar& limit() const { return limit_; }
  const FinSeq& deviation() const { return deviation_; }
  Scalar at(Index k) const { return limit_ + deviation_.at(k); }
  bool is_zero() const { return limit_.is_zero() && deviation_.is_zero(); }

  ConvSeq scaled(const Scalar& a) const;
  friend ConvSeq operator+(const ConvSeq& a, const ConvSeq& b);
  friend ConvSeq operator-(const ConvSeq& a, const ConvSeq& b);
  friend bool operator==(const ConvSeq& a, const ConvSeq& b) {
    return a.limit_ == b.limit_ && a.deviation_ == b.deviation_;
  }

 private:
  Scalar limit_;
  FinSeq deviation_;
};

NormValue sup_norm_conv(const ConvSeq& x);
Scalar limit_functional(const ConvSeq& x);
/// Coordinates relative to {e0 = (1,1,...), e1, e2, ...}: (l(x), x_1 - l(x), ...).
FinSeq schauder_coords_c(const ConvSeq& x);
/// Inverse of schauder_coords_c: y0*e0 + sum_k y_k e_k.
ConvSeq from_schauder_coords_c(const FinSeq& y);

/// Certifies |x_{k+stride}|^2 <= ratio_sq * shrink_sq^(k-start) * |x_k|^2 for all
/// k >= start, with ratio_sq < 1 and shrink_sq <= 1. Either constant makes the
/// sequence vanish along every residue class mod stride.
struct DecayCertificate {
  Index start = 1;
  Index stride = 1;
  Rational ratio_sq;
  Rational shrink_sq{1};

  bool well_formed() const;
  Rational bound_at(Index k) const;
};

class FormulaSeq {
 public:
  using Eval = std::function<Scalar(Index)>;

  FormulaSeq(IndexBase base, Eval eval, std::optional<DecayCertificate> decay = std::nullopt,
             std::string label = {});

  static FormulaSeq zero(IndexBase base);
  static FormulaSeq from_finseq(const FinSeq& x);

  IndexBase base() const { return base_; }
  const std::optional<DecayCertificate>& decay() const { return decay_; }
  const std::string& label() const { return label_; }

  Scalar operator()(Index k) const;
  FormulaSeq scaled(const Scalar& a) const;

 private:
  IndexBase base_;
  Eval eval_;
  std::optional<DecayCertificate> decay_;
  std::string label_;
};

/// Entries of x on [base, K], zero beyond.
FinSeq truncate_formula(const FormulaSeq& x, Index K);

struct DecaySpotCheck {
  bool holds = true;
  Index first_violation = -1;
};

/// Checks the certified ratio inequality at every k in [from, to].
DecaySpotCheck spot_check_decay(const FormulaSeq& x, Index from, Index to);

/// An element of c whose deviation from the limit is a formula sequence.
struct ConvFormula {
  Scalar limit;
  FormulaSeq deviation;

  Scalar at(Index k) const { return limit + deviation(k); }
};

}  // namespace shiftchaos
