#include "shiftchaos/negative.hpp"

#include "shiftchaos/errors.hpp"
#include "shiftchaos/random.hpp"

#include <algorithm>
#include <utility>

namespace shiftchaos {

std::string_view to_string(Extension e) {
  return e == Extension::BoundedOnC ? "bounded-on-c" : "unbounded-on-c";
}

std::string_view to_string(Obstruction o) {
  return o == Obstruction::RangeInC0 ? "RANGE_IN_C0" : "DOMAIN_IN_C0";
}

std::string_view to_string(DomainStatus s) {
  switch (s) {
    case DomainStatus::InDomain: return "IN_DOMAIN";
    case DomainStatus::NotInDomain: return "NOT_IN_DOMAIN";
    case DomainStatus::Undecided: return "UNDECIDED";
  }
  return "?";
}

Extension parse_extension(std::string_view text) {
  if (text == "bounded-on-c") return Extension::BoundedOnC;
  if (text == "unbounded-on-c") return Extension::UnboundedOnC;
  throw ParseError("variant must be bounded-on-c or unbounded-on-c");
}

ConvSeq apply_extension(Extension ext, const Scalar& w, const ConvSeq& x) {
  require_weight(w);
  const Scalar& l = x.limit();
  if (ext == Extension::UnboundedOnC && !l.is_zero()) {
    throw NotInDomain("w^k x_{k+1} diverges when l(x) != 0");
  }
  const Scalar limit = ext == Extension::BoundedOnC ? w * l : Scalar(0);
  FinSeq::Entries dev;
  for (Index k = 1; k < x.deviation().max_support(); ++k) {
    const Scalar weight = ext == Extension::BoundedOnC ? w : w.pow(k);
    dev.emplace(k, weight * x.at(k + 1) - limit);
  }
  return ConvSeq(limit, FinSeq(IndexBase::One, std::move(dev)));
}

ConvSeq range_image(const Scalar& w, const ConvSeq& x) {
  return apply_extension(Extension::BoundedOnC, w, x) - x.scaled(w);
}

Scalar range_limit_check(const Scalar& w, const ConvSeq& x) {
  return limit_functional(range_image(w, x));
}

namespace {

template <class EntryFn>
GrowthEvidence growth_on(const Scalar& w, Index from, Index to, EntryFn entry) {
  const Rational wsq = w.norm_sq();
  auto u_sq = [&](Index k) -> Rational { return pow(wsq, k) * entry(k + 1).norm_sq(); };
  GrowthEvidence g{from, to, Rational(0), u_sq(from), 0.0};
  bool first = true;
  for (Index k = from + 1; k <= to; ++k) {
    Rational cur = u_sq(k);
    if (sgn(g.last_sq) == 0) {
      g.min_ratio_sq = 0;
      first = false;
    } else {
      Rational ratio = cur / g.last_sq;
      if (first || ratio < g.min_ratio_sq) g.min_ratio_sq = ratio;
      first = false;
    }
    g.last_sq = std::move(cur);
  }
  g.last_logmag = 0.5 * log_of(g.last_sq);
  return g;
}

}  // namespace

DomainWitness domain_forces_vanishing(const Scalar& w, const ConvSeq& x, Index K) {
  require_weight(w);
  DomainWitness out;
  out.limit = x.limit();
  if (x.limit().is_zero()) {
    out.status = DomainStatus::InDomain;
    out.chain = "weighted image w^k x_{k+1} is finitely supported, so x is in D(A); l(x) = 0";
    return out;
  }
  const Index from = std::max<Index>(1, x.deviation().max_support());
  const Index to = std::max(K, from + 1);
  out.growth = growth_on(w, from, to, [&x](Index k) { return x.at(k); });
  if (out.growth->min_ratio_sq > 1) {
    out.status = DomainStatus::NotInDomain;
    out.chain = "l(x) != 0: |w^k x_{k+1}|^2 grows by a factor >= " + to_string(out.growth->min_ratio_sq) +
                " per step on [" + std::to_string(from) + ", " + std::to_string(to) +
                "], so w^k x_{k+1} diverges and x is not in D(A)";
  } else {
    out.status = DomainStatus::Undecided;
    out.chain = "no growth certificate";
  }
  return out;
}

DomainWitness domain_forces_vanishing(const Scalar& w, const ConvFormula& x, Index K) {
  require_weight(w);
  require_same_base(x.deviation.base(), IndexBase::One, "domain_forces_vanishing");
  DomainWitness out;
  out.limit = x.limit;
  const Index from = std::max<Index>(1, K / 2);
  const Index to = std::max(K, from + 1);
  GrowthEvidence g = growth_on(w, from, to, [&x](Index k) { return x.at(k); });
  if (g.min_ratio_sq > 1) {
    out.status = DomainStatus::NotInDomain;
    out.chain = "|w^k x_{k+1}|^2 grows by a factor >= " + to_string(g.min_ratio_sq) + " per step on [" +
                std::to_string(from) + ", " + std::to_string(to) + "]; x is not in D(A)";
    out.growth = std::move(g);
    return out;
  }
  out.growth = std::move(g);
  if (x.limit.is_zero() && x.deviation.decay()) {
    if (auto cert = inherit_weighted_certificate(*x.deviation.decay(), w.norm_sq(), 1, IndexBase::One)) {
      out.status = DomainStatus::InDomain;
      out.image_certificate = cert;
      out.chain = "w^k x_{k+1} carries a decay certificate, so x is in D(A); l(x) = 0";
      return out;
    }
  }
  out.status = DomainStatus::Undecided;
  out.chain = "neither a decay certificate for w^k x_{k+1} nor persistent growth";
  return out;
}

ObstructionReport obstruction_report(Extension variant, const Scalar& w, Index sample_count,
                                     std::uint64_t seed, Index planted, Index K) {
  require_weight(w);
  SampleRng rng(seed);
  const bool complex = !w.is_real();
  ObstructionReport rep{variant, w,
                        variant == Extension::BoundedOnC ? Obstruction::RangeInC0
                                                         : Obstruction::DomainInC0,
                        {}, {}, false};
  bool all_zero = true;
  for (Index i = 0; i < sample_count; ++i) {
    if (variant == Extension::BoundedOnC) {
      ConvSeq x = rng.convseq(12, complex);
      Scalar value = range_limit_check(w, x);
      all_zero = all_zero && value.is_zero();
      rep.evidence.push_back({std::move(x), std::move(value)});
    } else {
      ConvSeq x = ConvSeq::from_finseq(rng.finseq(IndexBase::One, 12, complex));
      const DomainWitness dw = domain_forces_vanishing(w, x, K);
      all_zero = all_zero && dw.status == DomainStatus::InDomain && dw.limit.is_zero();
      rep.evidence.push_back({std::move(x), dw.limit});
    }
  }
  bool planted_rejected = true;
  if (variant == Extension::UnboundedOnC) {
    for (Index i = 0; i < planted; ++i) {
      ConvSeq x(rng.nonzero_scalar(complex), rng.finseq(IndexBase::One, 12, complex));
      DomainWitness dw = domain_forces_vanishing(w, x, K);
      planted_rejected = planted_rejected && dw.status == DomainStatus::NotInDomain;
      rep.rejected.emplace_back(std::move(x), std::move(dw));
    }
  }
  rep.not_hypercyclic = all_zero && planted_rejected;
  return rep;
}

}  // namespace shiftchaos
