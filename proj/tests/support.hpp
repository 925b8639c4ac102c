#pragma once

// Test-side reference implementations. Everything here works straight from
// the definitions (one index at a time, weights built by repeated
// multiplication) and shares nothing with the library except Scalar.

#include "shiftchaos/scalar.hpp"
#include "shiftchaos/sequence.hpp"

#include <cstdint>
#include <map>
#include <random>

namespace oracle {

using shiftchaos::Index;
using shiftchaos::IndexBase;
using shiftchaos::Rational;
using shiftchaos::Scalar;

using Vec = std::map<Index, Scalar>;

inline Vec vec_of(const shiftchaos::FinSeq& x) {
  Vec v;
  for (const auto& [k, s] : x.entries()) v[k] = s;
  return v;
}

inline shiftchaos::FinSeq finseq_of(IndexBase base, const Vec& v) {
  shiftchaos::FinSeq::Entries e;
  for (const auto& [k, s] : v) {
    if (!s.is_zero()) e.emplace(k, s);
  }
  return shiftchaos::FinSeq(base, std::move(e));
}

inline Scalar get(const Vec& v, Index k) {
  auto it = v.find(k);
  return it == v.end() ? Scalar(0) : it->second;
}

inline Scalar power_by_loop(const Scalar& w, Index e) {
  Scalar r(1);
  const Scalar f = e >= 0 ? w : Scalar(1) / w;
  for (Index i = 0; i < (e >= 0 ? e : -e); ++i) r = r * f;
  return r;
}

inline Index lo(IndexBase b) { return static_cast<Index>(b); }

inline Index top(const Vec& v) { return v.empty() ? -1 : v.rbegin()->first; }

/// (A x)_k = a_k x_{k+1}, a_k = w (bounded) or w^k (unbounded).
inline Vec A(bool bounded, IndexBase b, const Scalar& w, const Vec& x) {
  Vec y;
  for (Index k = lo(b); k < top(x); ++k) {
    const Scalar v = get(x, k + 1);
    if (!v.is_zero()) y[k] = (bounded ? w : power_by_loop(w, k)) * v;
  }
  return y;
}

/// (B x)_k = x_{k-1} / a_{k-1}, zero at the first index.
inline Vec B(bool bounded, IndexBase b, const Scalar& w, const Vec& x) {
  Vec y;
  for (Index k = lo(b) + 1; k <= top(x) + 1; ++k) {
    const Scalar v = get(x, k - 1);
    if (!v.is_zero()) y[k] = v / (bounded ? w : power_by_loop(w, k - 1));
  }
  return y;
}

inline Vec A_pow(bool bounded, IndexBase b, const Scalar& w, Index n, Vec x) {
  for (Index i = 0; i < n; ++i) x = A(bounded, b, w, x);
  return x;
}

inline Vec B_pow(bool bounded, IndexBase b, const Scalar& w, Index n, Vec x) {
  for (Index i = 0; i < n; ++i) x = B(bounded, b, w, x);
  return x;
}

inline Rational sup_sq(const Vec& v) {
  Rational m(0);
  for (const auto& [k, s] : v) {
    if (s.norm_sq() > m) m = s.norm_sq();
  }
  return m;
}

/// Element of c as (limit, entries 1..top).
struct CVec {
  Scalar limit;
  Vec x;  // x_k for k = 1..top; beyond top x_k = limit
  Scalar at(Index k) const { return k > top(x) ? limit : get(x, k); }
};

inline CVec cvec_of(const shiftchaos::ConvSeq& s) {
  CVec c{s.limit(), {}};
  for (Index k = 1; k <= s.deviation().max_support(); ++k) c.x[k] = s.at(k);
  return c;
}

inline bool same(const CVec& a, const shiftchaos::ConvSeq& s) {
  if (!(a.limit == s.limit())) return false;
  const Index t = std::max(top(a.x), s.deviation().max_support()) + 2;
  for (Index k = 1; k <= t; ++k) {
    if (!(a.at(k) == s.at(k))) return false;
  }
  return true;
}

/// J: y_0 = l, y_k = x_k - l.
inline Vec J(const CVec& c) {
  Vec y;
  y[0] = c.limit;
  for (Index k = 1; k <= top(c.x); ++k) y[k] = c.at(k) - c.limit;
  return y;
}

/// J^{-1}: x_k = y_k + y_0, limit y_0.
inline CVec J_inv(const Vec& y) {
  CVec c{get(y, 0), {}};
  for (Index k = 1; k <= top(y); ++k) c.x[k] = get(y, k) + c.limit;
  return c;
}

/// hat(A)^n = J^{-1} A^n J with A the Z+ shift.
inline CVec hat_pow(bool bounded, const Scalar& w, Index n, const CVec& c) {
  return J_inv(A_pow(bounded, IndexBase::Zero, w, n, J(c)));
}

inline Rational sup_sq_c(const CVec& c) {
  Rational m = c.limit.norm_sq();
  for (const auto& [k, s] : c.x) {
    if (s.norm_sq() > m) m = s.norm_sq();
  }
  return m;
}

}  // namespace oracle

namespace gen {

using shiftchaos::Index;
using shiftchaos::IndexBase;
using shiftchaos::Rational;
using shiftchaos::Scalar;

// Hand-rolled generator; deliberately independent of SampleRng.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
  }

  Rational rational(std::int64_t num = 12, std::int64_t den = 7) {
    Rational q(mpz_class(static_cast<long>(range(-num, num))), mpz_class(static_cast<long>(range(1, den))));
    q.canonicalize();
    return q;
  }

  Scalar scalar(bool complex) {
    return complex ? Scalar(rational(), rational()) : Scalar(rational());
  }

  Scalar nonzero(bool complex) {
    for (;;) {
      Scalar s = scalar(complex);
      if (!s.is_zero()) return s;
    }
  }

  shiftchaos::FinSeq finseq(IndexBase b, Index max_span, bool complex = false) {
    const Index lo = static_cast<Index>(b);
    const Index span = range(0, max_span);
    shiftchaos::FinSeq::Entries e;
    for (Index k = lo; k < lo + span; ++k) {
      if (range(0, 2) != 0) e.emplace(k, scalar(complex));
    }
    return shiftchaos::FinSeq(b, std::move(e));
  }

  shiftchaos::ConvSeq convseq(Index max_span, bool complex = false) {
    return shiftchaos::ConvSeq(scalar(complex), finseq(IndexBase::One, max_span, complex));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gen
