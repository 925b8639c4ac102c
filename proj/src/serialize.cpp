#include "shiftchaos/serialize.hpp"

#include "shiftchaos/errors.hpp"

#include <charconv>

namespace shiftchaos {

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const FinSeq& x) {
  Json entries = Json::object();
  for (const auto& [k, v] : x.entries()) entries[std::to_string(k)] = v.str();
  return {{"base", std::string(to_string(x.base()))}, {"entries", std::move(entries)}};
}

Json to_json(const ConvSeq& x) {
  return {{"limit", x.limit().str()}, {"deviation", to_json(x.deviation())}};
}

Json to_json(const OperatorSpec& spec) {
  return {{"variant", std::string(to_string(spec.variant()))},
          {"space", std::string(to_string(spec.space()))},
          {"base", std::string(to_string(spec.base()))},
          {"w", spec.w().str()}};
}

Json to_json(const DecayCertificate& cert) {
  return {{"start", cert.start},
          {"stride", cert.stride},
          {"ratioSq", to_string(cert.ratio_sq)},
          {"shrinkSq", to_string(cert.shrink_sq)}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<std::int64_t>()));
  throw ParseError("scalar must be a string such as \"p/q\"");
}

namespace {

Index parse_index(const std::string& key) {
  Index k = 0;
  const char* end = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(key.data(), end, k);
  if (ec != std::errc() || ptr != end) throw ParseError("bad sequence index \"" + key + "\"");
  return k;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

}  // namespace

FinSeq finseq_from_json(const Json& j) {
  const Json& base = field(j, "base");
  if (!base.is_string()) throw ParseError("base must be \"one\" or \"zero\"");
  const IndexBase b = parse_base(base.get<std::string>());
  const Json& entries = field(j, "entries");
  if (!entries.is_object()) throw ParseError("entries must be an object");
  FinSeq::Entries out;
  for (const auto& [key, value] : entries.items()) {
    out.emplace(parse_index(key), scalar_from_json(value));
  }
  return FinSeq(b, std::move(out));
}

ConvSeq convseq_from_json(const Json& j) {
  return ConvSeq(scalar_from_json(field(j, "limit")), finseq_from_json(field(j, "deviation")));
}

std::vector<AnySeq> parse_sequences(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  auto one = [](const Json& j) -> AnySeq {
    if (j.is_object() && j.contains("limit")) return convseq_from_json(j);
    return finseq_from_json(j);
  };
  std::vector<AnySeq> out;
  if (doc.is_array()) {
    for (const Json& j : doc) out.push_back(one(j));
  } else {
    out.push_back(one(doc));
  }
  if (out.empty()) throw ParseError("no sequences in input");
  return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace shiftchaos
