#include "shiftchaos/random.hpp"

namespace shiftchaos {

std::int64_t SampleRng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % range);
}

Rational SampleRng::rational(std::int64_t max_num, std::int64_t max_den) {
  Rational q(mpz_class(uniform(-max_num, max_num)), mpz_class(uniform(1, max_den)));
  q.canonicalize();
  return q;
}

Scalar SampleRng::scalar(bool complex, std::int64_t max_num, std::int64_t max_den) {
  if (!complex) return Scalar(rational(max_num, max_den));
  Rational re = rational(max_num, max_den);
  return Scalar(std::move(re), rational(max_num, max_den));
}

Scalar SampleRng::nonzero_scalar(bool complex) {
  for (;;) {
    Scalar s = scalar(complex);
    if (!s.is_zero()) return s;
  }
}

FinSeq SampleRng::finseq(IndexBase base, Index span, bool complex) {
  FinSeq::Entries out;
  if (span <= 0) return FinSeq(base);
  const Index lo = first_index(base);
  const Index len = uniform(1, span);
  for (Index k = lo; k < lo + len - 1; ++k) {
    if (coin()) out.emplace(k, nonzero_scalar(complex));
  }
  out.emplace(lo + len - 1, nonzero_scalar(complex));
  return FinSeq(base, std::move(out));
}

ConvSeq SampleRng::convseq(Index span, bool complex) {
  Scalar limit = coin() ? scalar(complex) : nonzero_scalar(complex);
  return ConvSeq(std::move(limit), finseq(IndexBase::One, span, complex));
}

}  // namespace shiftchaos
