#pragma once

// The weighted backward shifts extended from c0 to c are not hypercyclic.
// Two finitary shadows of that statement:
//   - bounded extension: l((A - wI) x) = 0 for every x in c, so the range of
//     A - wI sits inside the nowhere-dense hyperplane c0;
//   - unbounded extension: x in D(A) forces l(x) = 0, so C^inf(A) sits in c0.

#include "shiftchaos/sequence.hpp"
#include "shiftchaos/shift.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shiftchaos {

enum class Extension { BoundedOnC, UnboundedOnC };
enum class Obstruction { RangeInC0, DomainInC0 };
enum class DomainStatus { InDomain, NotInDomain, Undecided };

std::string_view to_string(Extension e);
std::string_view to_string(Obstruction o);
std::string_view to_string(DomainStatus s);
Extension parse_extension(std::string_view text);

/// A_w extended to c. The unbounded extension throws NotInDomain for l(x) != 0.
ConvSeq apply_extension(Extension ext, const Scalar& w, const ConvSeq& x);

/// (A - wI) x for the bounded extension.
ConvSeq range_image(const Scalar& w, const ConvSeq& x);
/// l((A - wI) x).
Scalar range_limit_check(const Scalar& w, const ConvSeq& x);

/// Growth of u_k = w^k x_{k+1} on a window: every step ratio |u_{k+1}|^2/|u_k|^2
/// is at least min_ratio_sq > 1.
struct GrowthEvidence {
  Index from = 0;
  Index to = 0;
  Rational min_ratio_sq;
  Rational last_sq;  // |u_to|^2
  double last_logmag = 0.0;
};

struct DomainWitness {
  DomainStatus status = DomainStatus::Undecided;
  Scalar limit;
  std::optional<GrowthEvidence> growth;
  std::optional<DecayCertificate> image_certificate;
  std::string chain;
};

DomainWitness domain_forces_vanishing(const Scalar& w, const ConvSeq& x, Index K = kDefaultHorizon);
DomainWitness domain_forces_vanishing(const Scalar& w, const ConvFormula& x,
                                      Index K = kDefaultHorizon);

struct EvidenceEntry {
  ConvSeq input;
  Scalar checked;  // the limit that has to vanish
};

struct ObstructionReport {
  Extension variant;
  Scalar w;
  Obstruction obstruction;
  std::vector<EvidenceEntry> evidence;
  /// Planted l(x) != 0 inputs and their domain witnesses.
  std::vector<std::pair<ConvSeq, DomainWitness>> rejected;
  bool not_hypercyclic = false;
};

ObstructionReport obstruction_report(Extension variant, const Scalar& w, Index sample_count,
                                     std::uint64_t seed, Index planted = 1,
                                     Index K = kDefaultHorizon);

}  // namespace shiftchaos
