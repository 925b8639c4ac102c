#include "shiftchaos/spectral.hpp"

#include "shiftchaos/conjugacy.hpp"
#include "shiftchaos/errors.hpp"

#include <utility>

namespace shiftchaos {

std::string_view to_string(SpectralClass c) {
  switch (c) {
    case SpectralClass::Point: return "POINT";
    case SpectralClass::Continuous: return "CONTINUOUS";
    case SpectralClass::Residual: return "RESIDUAL";
    case SpectralClass::Resolvent: return "RESOLVENT";
    case SpectralClass::NotEigenvalue: return "NOT_EIGENVALUE";
  }
  return "?";
}

namespace {

void require_variant(const OperatorSpec& spec, Variant v, std::string_view what) {
  if (spec.variant() != v) {
    throw InvalidArgument(std::string(what) + " needs a " + std::string(to_string(v)) + " operator");
  }
}

}  // namespace

FormulaSeq eigenvector_unbounded(const OperatorSpec& spec, const Scalar& lambda) {
  require_variant(spec, Variant::UnboundedShift, "eigenvector_unbounded");
  const Index b = first_index(spec.base());
  const Scalar w = spec.w();
  // k(k-1)/2 is an integer, so no fractional powers of w appear.
  auto eval = [w, lambda, b](Index k) {
    return lambda.pow(k - b) * w.pow(-(k * (k - 1) / 2));
  };

  const Rational wsq = w.norm_sq();
  const Rational lsq = lambda.norm_sq();
  DecayCertificate cert{b, 1, Rational(0), pow(wsq, -1)};
  if (sgn(lsq) != 0) {
    Index start = b;
    while (!(lsq * pow(wsq, -start) < 1)) ++start;
    cert.start = start;
    cert.ratio_sq = lsq * pow(wsq, -start);
  }
  return FormulaSeq(spec.base(), eval, cert, "eigenvector(" + lambda.str() + ")");
}

FormulaSeq eigenvector_bounded(const OperatorSpec& spec, const Scalar& lambda) {
  require_variant(spec, Variant::BoundedShift, "eigenvector_bounded");
  const Rational lsq = lambda.norm_sq();
  const Rational wsq = spec.w().norm_sq();
  if (!(lsq < wsq)) {
    throw NotAnEigenvalue("|lambda| >= |w|: " + lambda.str() + " is not an eigenvalue");
  }
  const Index b = first_index(spec.base());
  const Scalar ratio = lambda / spec.w();
  DecayCertificate cert{b, 1, lsq / wsq, Rational(1)};
  return FormulaSeq(spec.base(), [ratio, b](Index k) { return ratio.pow(k - b); }, cert,
                    "eigenvector(" + lambda.str() + ")");
}

FormulaSeq eigenvector(const OperatorSpec& spec, const Scalar& lambda) {
  return spec.is_bounded() ? eigenvector_bounded(spec, lambda) : eigenvector_unbounded(spec, lambda);
}

Rational eigen_residual(const OperatorSpec& spec, const Scalar& lambda, const FormulaSeq& y, Index K,
                        kernels::Exec exec) {
  require_same_base(spec.base(), y.base(), "eigen_residual");
  return kernels::max_over(exec, first_index(y.base()), K, [&](Index k) {
           return (power_entry(spec, 1, y, k) - lambda * y(k)).norm_sq();
         }).value;
}

Rational eigen_residual_hat(const OperatorSpec& spec, const Scalar& lambda, const ConvFormula& y,
                            Index K, kernels::Exec exec) {
  if (!spec.is_hat()) throw InvalidArgument("eigen_residual_hat needs a hat operator");
  Rational best = kernels::max_over(exec, 1, K, [&](Index k) {
                    return (hat_power_entry(spec, 1, y, k) - lambda * y.at(k)).norm_sq();
                  }).value;
  Rational limit_gap = (hat_power_limit(spec, 1, y) - lambda * y.limit).norm_sq();
  return limit_gap > best ? limit_gap : best;
}

SpectrumVerdict classify_spectrum(const OperatorSpec& spec, const Scalar& lambda, Field field) {
  SpectrumVerdict v;
  v.lambda = lambda;
  if (field == Field::Real) {
    if (!lambda.is_real() || !spec.w().is_real()) {
      throw InvalidArgument("real field mode needs real lambda and w");
    }
    v.restricted = true;
  }
  const OperatorSpec shift = spec.is_hat() ? underlying_shift(spec) : spec;

  bool eigen = true;
  if (spec.is_bounded()) {
    const Rational lsq = lambda.norm_sq();
    const Rational wsq = spec.w().norm_sq();
    if (lsq < wsq) {
      v.cls = SpectralClass::Point;
    } else {
      eigen = false;
      if (v.restricted) {
        v.cls = SpectralClass::NotEigenvalue;
      } else {
        v.cls = lsq == wsq ? SpectralClass::Continuous : SpectralClass::Resolvent;
      }
    }
  } else {
    v.cls = SpectralClass::Point;
  }
  if (eigen) {
    v.multiplicity = 1;
    FormulaSeq y = eigenvector(shift, lambda);
    if (spec.is_hat()) {
      v.kernel_c = J_inv(y);
    } else {
      v.kernel = std::move(y);
    }
  }
  return v;
}

Rational opnorm_bruteforce(const OperatorSpec& spec, PowerPath path, Index n, Index M,
                           kernels::Exec exec) {
  if (spec.is_hat()) throw InvalidArgument("opnorm_bruteforce needs a shift operator");
  if (M < 1) throw InvalidArgument("basis horizon must be positive");
  const Index lo = first_index(spec.base());
  return kernels::max_over(exec, lo, lo + M - 1, [&](Index m) {
           const FinSeq e = basis_vector(spec.base(), m);
           const FinSeq img = path == PowerPath::Forward ? power(spec, n, e)
                                                         : right_inverse_power(spec, n, e);
           return sup_norm(img).squared;
         }).value;
}

std::vector<QuasinilpotenceRow> quasinilpotence_table(const OperatorSpec& spec, Index n_max) {
  require_variant(spec, Variant::UnboundedShift, "quasinilpotence_table");
  if (n_max < 1) throw InvalidArgument("n_max must be positive");
  std::vector<QuasinilpotenceRow> rows;
  for (Index n = 1; n <= n_max; ++n) {
    const NormFormulaResult nr = opnorm_Bn(spec, n);
    Rational exponent(mpz_class(spec.base() == IndexBase::One ? -(n + 1) : -(n - 1)), mpz_class(2));
    exponent.canonicalize();
    // ||B^n||^{1/n} = |w|^exponent must reproduce the exact squared norm.
    if (pow(spec.w().norm_sq(), Rational(exponent * n).get_num().get_si()) != nr.squared) {
      throw Error("quasinilpotence exponent disagrees with the operator norm");
    }
    rows.push_back({n, std::move(exponent), nr.squared, nr.logmag / static_cast<double>(n)});
  }
  return rows;
}

}  // namespace shiftchaos
