#pragma once

// JSON forms of scalars, sequences, specs and certificates. Rationals are
// always strings in canonical "p/q" form; object keys come out sorted.

#include "shiftchaos/sequence.hpp"
#include "shiftchaos/shift.hpp"

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace shiftchaos {

using Json = nlohmann::json;

Json to_json(const Scalar& s);
Json to_json(const Rational& q);
Json to_json(const FinSeq& x);
Json to_json(const ConvSeq& x);
Json to_json(const OperatorSpec& spec);
Json to_json(const DecayCertificate& cert);

Scalar scalar_from_json(const Json& j);
FinSeq finseq_from_json(const Json& j);
ConvSeq convseq_from_json(const Json& j);

using AnySeq = std::variant<FinSeq, ConvSeq>;

/// One sequence object or an array of them; objects with a "limit" field are
/// elements of c, the rest are finitely supported.
std::vector<AnySeq> parse_sequences(const std::string& text);

/// Two-space indented dump with a trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace shiftchaos
