#include "shiftchaos/sequence.hpp"

#include "shiftchaos/errors.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace shiftchaos {

std::string_view to_string(IndexBase b) { return b == IndexBase::One ? "one" : "zero"; }

IndexBase parse_base(std::string_view text) {
  if (text == "one") return IndexBase::One;
  if (text == "zero") return IndexBase::Zero;
  throw ParseError("index base must be 'one' or 'zero', got '" + std::string(text) + "'");
}

void require_same_base(IndexBase a, IndexBase b, std::string_view what) {
  if (a != b) {
    throw BaseMismatch(std::string(what) + ": index base " + std::string(to_string(a)) +
                       " does not match " + std::string(to_string(b)));
  }
}

// ---------------------------------------------------------------------------
// FinSeq

FinSeq::FinSeq(IndexBase base, Entries entries) : base_(base) {
  for (auto& [k, v] : entries) {
    if (k < first_index(base)) {
      throw InvalidArgument("index " + std::to_string(k) + " below the index base");
    }
    if (!v.is_zero()) entries_.emplace(k, std::move(v));
  }
}

Scalar FinSeq::at(Index k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? Scalar(0) : it->second;
}

Index FinSeq::max_support() const {
  return entries_.empty() ? first_index(base_) - 1 : entries_.rbegin()->first;
}

FinSeq FinSeq::scaled(const Scalar& a) const {
  Entries out;
  if (!a.is_zero()) {
    for (const auto& [k, v] : entries_) out.emplace(k, v * a);
  }
  return FinSeq(base_, std::move(out));
}

FinSeq operator+(const FinSeq& a, const FinSeq& b) {
  require_same_base(a.base(), b.base(), "sequence sum");
  FinSeq::Entries out = a.entries();
  for (const auto& [k, v] : b.entries()) {
    auto [it, inserted] = out.emplace(k, v);
    if (!inserted) it->second += v;
  }
  return FinSeq(a.base(), std::move(out));
}

FinSeq operator-(const FinSeq& a, const FinSeq& b) { return a + b.scaled(Scalar(-1)); }

FinSeq basis_vector(IndexBase base, Index n) {
  if (n < first_index(base)) {
    throw InvalidArgument("basis index " + std::to_string(n) + " below the index base");
  }
  return FinSeq(base, {{n, Scalar(1)}});
}

NormValue sup_norm(const FinSeq& x) {
  Rational best = 0;
  for (const auto& [k, v] : x.entries()) {
    Rational m = v.norm_sq();
    if (m > best) best = std::move(m);
  }
  const double mag = sgn(best) == 0 ? 0.0 : std::exp(0.5 * log_of(best));
  return {std::move(best), mag};
}

// ---------------------------------------------------------------------------
// ConvSeq

ConvSeq::ConvSeq(Scalar limit, FinSeq deviation)
    : limit_(std::move(limit)), deviation_(std::move(deviation)) {
  require_same_base(deviation_.base(), IndexBase::One, "convergent sequence");
}

ConvSeq ConvSeq::scaled(const Scalar& a) const { return ConvSeq(limit_ * a, deviation_.scaled(a)); }

ConvSeq operator+(const ConvSeq& a, const ConvSeq& b) {
  return ConvSeq(a.limit_ + b.limit_, a.deviation_ + b.deviation_);
}

ConvSeq operator-(const ConvSeq& a, const ConvSeq& b) {
  return ConvSeq(a.limit_ - b.limit_, a.deviation_ - b.deviation_);
}

NormValue sup_norm_conv(const ConvSeq& x) {
  // The tail beyond the deviation's support sits at the limit.
  Rational best = x.limit().norm_sq();
  for (const auto& [k, d] : x.deviation().entries()) {
    Rational m = (x.limit() + d).norm_sq();
    if (m > best) best = std::move(m);
  }
  const double mag = sgn(best) == 0 ? 0.0 : std::exp(0.5 * log_of(best));
  return {std::move(best), mag};
}

Scalar limit_functional(const ConvSeq& x) { return x.limit(); }

FinSeq schauder_coords_c(const ConvSeq& x) {
  require_same_base(x.base(), IndexBase::One, "schauder_coords_c");
  FinSeq::Entries out;
  out.emplace(0, x.limit());
  for (const auto& [k, d] : x.deviation().entries()) out.emplace(k, (x.limit() + d) - x.limit());
  return FinSeq(IndexBase::Zero, std::move(out));
}

ConvSeq from_schauder_coords_c(const FinSeq& y) {
  require_same_base(y.base(), IndexBase::Zero, "from_schauder_coords_c");
  FinSeq::Entries dev;
  for (const auto& [k, v] : y.entries()) {
    if (k >= 1) dev.emplace(k, v);
  }
  return ConvSeq(y.at(0), FinSeq(IndexBase::One, std::move(dev)));
}

// ---------------------------------------------------------------------------
// Formula sequences

bool DecayCertificate::well_formed() const {
  return stride >= 1 && sgn(ratio_sq) >= 0 && ratio_sq < 1 && sgn(shrink_sq) > 0 && shrink_sq <= 1;
}

Rational DecayCertificate::bound_at(Index k) const {
  if (k <= start || shrink_sq == 1) return ratio_sq;
  return ratio_sq * pow(shrink_sq, k - start);
}

FormulaSeq::FormulaSeq(IndexBase base, Eval eval, std::optional<DecayCertificate> decay,
                       std::string label)
    : base_(base), eval_(std::move(eval)), decay_(std::move(decay)), label_(std::move(label)) {
  if (decay_ && !decay_->well_formed()) {
    throw InvalidArgument("decay certificate needs stride >= 1, ratio in [0,1), shrink in (0,1]");
  }
  if (decay_ && decay_->start < first_index(base_)) {
    throw InvalidArgument("decay certificate starts below the index base");
  }
}

FormulaSeq FormulaSeq::zero(IndexBase base) {
  return FormulaSeq(base, [](Index) { return Scalar(0); },
                    DecayCertificate{first_index(base), 1, Rational(0), Rational(1)}, "zero");
}

FormulaSeq FormulaSeq::from_finseq(const FinSeq& x) {
  // Past the support everything is zero: 0 <= 0 * 0 holds trivially.
  DecayCertificate cert{std::max(x.max_support() + 1, first_index(x.base())), 1, Rational(0),
                        Rational(1)};
  return FormulaSeq(x.base(), [x](Index k) { return x.at(k); }, cert, "finite");
}

Scalar FormulaSeq::operator()(Index k) const {
  if (k < first_index(base_)) {
    throw InvalidArgument("index " + std::to_string(k) + " below the index base");
  }
  return eval_(k);
}

FormulaSeq FormulaSeq::scaled(const Scalar& a) const {
  auto inner = eval_;
  auto cert = a.is_zero() ? std::optional<DecayCertificate>(
                                DecayCertificate{first_index(base_), 1, Rational(0), Rational(1)})
                          : decay_;
  return FormulaSeq(base_, [inner, a](Index k) { return inner(k) * a; }, cert, label_);
}

FinSeq truncate_formula(const FormulaSeq& x, Index K) {
  if (K < first_index(x.base())) throw InvalidArgument("truncation index below the index base");
  FinSeq::Entries out;
  for (Index k = first_index(x.base()); k <= K; ++k) out.emplace(k, x(k));
  return FinSeq(x.base(), std::move(out));
}

DecaySpotCheck spot_check_decay(const FormulaSeq& x, Index from, Index to) {
  if (!x.decay()) return {false, from};
  const auto& c = *x.decay();
  for (Index k = std::max(from, c.start); k <= to; ++k) {
    if (x(k + c.stride).norm_sq() > c.bound_at(k) * x(k).norm_sq()) return {false, k};
  }
  return {};
}

}  // namespace shiftchaos
