#include <doctest.h>

#include "shiftchaos/chaos.hpp"
#include "shiftchaos/conjugacy.hpp"
#include "shiftchaos/errors.hpp"
#include "shiftchaos/spectral.hpp"
#include "support.hpp"

using namespace shiftchaos;

namespace {

const IndexBase kOne = IndexBase::One;
const IndexBase kZero = IndexBase::Zero;

}  // namespace

TEST_CASE("unbounded eigenvectors") {
  const auto A = OperatorSpec::unbounded_shift(kOne, Scalar(2));
  const FormulaSeq y0 = eigenvector(A, Scalar(0));
  CHECK(y0(1) == Scalar(1));
  for (Index k = 2; k < 20; ++k) CHECK(y0(k).is_zero());

  const FormulaSeq y2 = eigenvector(A, Scalar(2));
  CHECK(y2(1) == Scalar(1));
  CHECK(y2(2) == Scalar(1));
  CHECK(y2(3) == Scalar(Rational(1, 2)));
  CHECK(y2(4) == Scalar(Rational(1, 8)));
  for (Index k = 1; k <= 100; ++k) CHECK(Scalar(2).pow(k) * y2(k + 1) == Scalar(2) * y2(k));

  const FormulaSeq y1 = eigenvector(A, Scalar(1));
  const PeriodicPoint p = build_periodic_point(ShiftSystem(A), basis_vector(kOne, 1), 1, 50);
  for (Index k = 1; k <= 50; ++k) CHECK(y1(k) == p.seq(k));
}

TEST_CASE("bounded eigenvectors") {
  const auto A = OperatorSpec::bounded_shift(kOne, Scalar(2));
  const FormulaSeq y0 = eigenvector(A, Scalar(0));
  CHECK(truncate_formula(y0, 30) == basis_vector(kOne, 1));
  const FormulaSeq y1 = eigenvector(A, Scalar(1));
  for (Index k = 1; k <= 30; ++k) CHECK(y1(k) == Scalar(pow(Rational(1, 2), k - 1)));
  CHECK_THROWS_AS(eigenvector(A, Scalar(2)), NotAnEigenvalue);
  CHECK_THROWS_AS(eigenvector(A, Scalar::parse("0+2 i")), NotAnEigenvalue);
}

TEST_CASE("eigen residual examples") {
  const auto A = OperatorSpec::bounded_shift(kOne, Scalar(2));
  CHECK(eigen_residual(A, Scalar(1), FormulaSeq::from_finseq(basis_vector(kOne, 1)), 20) == 1);
  CHECK(eigen_residual(A, Scalar(1), FormulaSeq::zero(kOne), 20) == 0);
}

TEST_CASE("property: constructor eigenvectors have zero residual") {
  gen::Gen g(61);
  for (const Scalar& w : {Scalar(2), Scalar(Rational(-3, 2)), Scalar::parse("1+i")}) {
    for (const IndexBase b : {kOne, kZero}) {
      const auto U = OperatorSpec::unbounded_shift(b, w);
      const auto Bd = OperatorSpec::bounded_shift(b, w);
      for (int i = 0; i < 8; ++i) {
        const Scalar lambda = g.scalar(!w.is_real());
        const FormulaSeq y = eigenvector(U, lambda);
        REQUIRE(y.decay());
        CHECK(spot_check_decay(y, y.decay()->start, 150).holds);
        CHECK(eigen_residual(U, lambda, y, 150) == 0);
        if (lambda.norm_sq() < w.norm_sq()) {
          CHECK(eigen_residual(Bd, lambda, eigenvector(Bd, lambda), 150) == 0);
        }
      }
    }
  }
}

TEST_CASE("unbounded eigenvector decay ratio") {
  const auto A = OperatorSpec::unbounded_shift(kOne, Scalar(2));
  const Scalar lambda(Rational(17, 3));
  const FormulaSeq y = eigenvector(A, lambda);
  for (Index k = 6; k < 60; ++k) {
    CHECK(y(k + 1).norm_sq() / y(k).norm_sq() <= Rational(1, 4));
  }
}

TEST_CASE("kernel is one-dimensional for the unbounded shift") {
  const auto A = OperatorSpec::unbounded_shift(kOne, Scalar(3));
  const Scalar lambda(Rational(-5, 2));
  const FormulaSeq y = eigenvector(A, lambda);
  // any solution of w^k z_{k+1} = lambda z_k with z_1 = 1 is forced step by step
  oracle::Vec z{{1, Scalar(1)}};
  for (Index k = 1; k < 80; ++k) z[k + 1] = lambda * z[k] / oracle::power_by_loop(Scalar(3), k);
  for (Index k = 1; k <= 80; ++k) CHECK(z[k] == y(k));
}

TEST_CASE("classification") {
  const auto Bd = OperatorSpec::bounded_shift(kOne, Scalar(2));
  CHECK(classify_spectrum(Bd, Scalar(0)).cls == SpectralClass::Point);
  CHECK(classify_spectrum(Bd, Scalar(1)).cls == SpectralClass::Point);
  CHECK(classify_spectrum(Bd, Scalar(2)).cls == SpectralClass::Continuous);
  CHECK(classify_spectrum(Bd, Scalar::parse("0-2 i")).cls == SpectralClass::Continuous);
  CHECK(classify_spectrum(Bd, Scalar(3)).cls == SpectralClass::Resolvent);
  const SpectrumVerdict u = classify_spectrum(OperatorSpec::unbounded_shift(kOne, Scalar(2)), Scalar(Rational(17, 3)));
  CHECK(u.cls == SpectralClass::Point);
  CHECK(u.multiplicity == 1);
  REQUIRE(u.kernel);

  const SpectrumVerdict h = classify_spectrum(OperatorSpec::unbounded_hat(Scalar(2)), Scalar(5));
  CHECK(h.cls == SpectralClass::Point);
  REQUIRE(h.kernel_c);
  CHECK(eigen_residual_hat(OperatorSpec::unbounded_hat(Scalar(2)), Scalar(5), *h.kernel_c, 100) == 0);

  const SpectrumVerdict r = classify_spectrum(Bd, Scalar(3), Field::Real);
  CHECK(r.cls == SpectralClass::NotEigenvalue);
  CHECK(r.restricted);
  CHECK_THROWS_AS(classify_spectrum(Bd, Scalar::parse("1+i"), Field::Real), InvalidArgument);
}

TEST_CASE("property: conjugation preserves the classification; residual spectrum never appears") {
  gen::Gen g(62);
  const Scalar w(Rational(5, 2));
  for (int i = 0; i < 200; ++i) {
    const Scalar lambda = g.scalar(true);
    const SpectrumVerdict a = classify_spectrum(OperatorSpec::bounded_hat(w), lambda);
    const SpectrumVerdict b = classify_spectrum(OperatorSpec::bounded_shift(kZero, w), lambda);
    CHECK(a.cls == b.cls);
    CHECK(a.cls != SpectralClass::Residual);
    CHECK(classify_spectrum(OperatorSpec::unbounded_hat(w), lambda).cls == SpectralClass::Point);
  }
}

TEST_CASE("brute-force norms") {
  const auto U = OperatorSpec::unbounded_shift(kOne, Scalar(2));
  const auto Bd = OperatorSpec::bounded_shift(kOne, Scalar(2));
  CHECK(opnorm_bruteforce(U, PowerPath::Backward, 3, 50) == Rational(1, 4096));
  CHECK(opnorm_bruteforce(Bd, PowerPath::Backward, 1, 10) == Rational(1, 4));
  CHECK(opnorm_bruteforce(Bd, PowerPath::Forward, 1, 10) == 4);
  for (const OperatorSpec& s : {U, Bd, OperatorSpec::unbounded_shift(kZero, Scalar(3)),
                                OperatorSpec::bounded_shift(kZero, Scalar::parse("1+i"))}) {
    for (Index n = 1; n <= 10; ++n) {
      CHECK(opnorm_bruteforce(s, PowerPath::Backward, n, 200) == opnorm_Bn(s, n).squared);
    }
  }
}

TEST_CASE("quasinilpotence") {
  const auto U = OperatorSpec::unbounded_shift(kOne, Scalar(2));
  const auto rows = quasinilpotence_table(U, 30);
  CHECK(rows[9].exponent == Rational(-11, 2));
  CHECK(rows[0].exponent == -1);
  CHECK(quasinilpotence_table(OperatorSpec::unbounded_shift(kZero, Scalar(2)), 1)[0].exponent == 0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].exponent < rows[i - 1].exponent);
    CHECK(rows[i].logmag < rows[i - 1].logmag);
    CHECK(rows[i].logmag == doctest::Approx(rows[i].exponent.get_d() * std::log(2.0)));
  }
  CHECK_THROWS_AS(quasinilpotence_table(OperatorSpec::bounded_shift(kOne, Scalar(2)), 3), InvalidArgument);
}
