#pragma once

// Eigenvectors, eigen-equation residuals, spectrum classification and
// brute-force operator-norm oracles.

#include "shiftchaos/kernels.hpp"
#include "shiftchaos/sequence.hpp"
#include "shiftchaos/shift.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace shiftchaos {

/// y_k = lambda^{k-b} / w^{k(k-1)/2} (b the index base), normalized y_b = 1,
/// solving w^k y_{k+1} = lambda y_k. Every lambda qualifies. The decay
/// certificate uses |y_{k+1}|^2/|y_k|^2 = |lambda|^2 |w|^{-2k}.
FormulaSeq eigenvector_unbounded(const OperatorSpec& spec, const Scalar& lambda);

/// x_k = (lambda / w)^{k-b}; throws NotAnEigenvalue unless |lambda| < |w|.
FormulaSeq eigenvector_bounded(const OperatorSpec& spec, const Scalar& lambda);

/// Dispatch on the shift variant.
FormulaSeq eigenvector(const OperatorSpec& spec, const Scalar& lambda);

/// max_{k <= K} |(A y)_k - lambda y_k|^2, exact.
Rational eigen_residual(const OperatorSpec& spec, const Scalar& lambda, const FormulaSeq& y,
                        Index K = kDefaultHorizon, kernels::Exec exec = kernels::default_exec());
/// Same for a hat operator on c; the limit is compared as well.
Rational eigen_residual_hat(const OperatorSpec& spec, const Scalar& lambda, const ConvFormula& y,
                            Index K = kDefaultHorizon, kernels::Exec exec = kernels::default_exec());

enum class SpectralClass { Point, Continuous, Residual, Resolvent, NotEigenvalue };
enum class Field { Complex, Real };

std::string_view to_string(SpectralClass c);

struct SpectrumVerdict {
  Scalar lambda;
  SpectralClass cls = SpectralClass::Resolvent;
  /// Kernel basis vector for shifts on c0 ...
  std::optional<FormulaSeq> kernel;
  /// ... or for hat operators on c.
  std::optional<ConvFormula> kernel_c;
  std::optional<int> multiplicity;
  /// Real field: only eigenvalue membership is decided.
  bool restricted = false;
};

/// Bounded operators: point spectrum |lambda| < |w|, continuous on |lambda| = |w|,
/// resolvent outside. Unbounded operators: every lambda is an eigenvalue of
/// geometric multiplicity 1. Hat operators inherit through J.
SpectrumVerdict classify_spectrum(const OperatorSpec& spec, const Scalar& lambda,
                                  Field field = Field::Complex);

enum class PowerPath { Forward, Backward };

/// max over basis vectors e_m, m in [base, base + M - 1], of ||Op^n e_m||^2.
Rational opnorm_bruteforce(const OperatorSpec& spec, PowerPath path, Index n, Index M,
                           kernels::Exec exec = kernels::default_exec());

struct QuasinilpotenceRow {
  Index n = 0;
  /// ||B^n||^{1/n} = |w|^exponent.
  Rational exponent;
  Rational norm_sq;  // ||B^n||^2
  double logmag = 0.0;  // ln ||B^n||^{1/n}
};

std::vector<QuasinilpotenceRow> quasinilpotence_table(const OperatorSpec& spec, Index n_max);

}  // namespace shiftchaos
