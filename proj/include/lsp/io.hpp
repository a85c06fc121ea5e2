#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsp/instance.hpp"
#include "lsp/rational.hpp"

namespace lsp {

/// An instance as parsed from disk or flags, before committing to a numeric
/// mode. Exact mode is available iff every entry was an integer or an "a/b"
/// fraction; any decimal literal forces float mode.
struct RawInstance {
  std::vector<ParsedScalar> p;
  std::vector<ParsedScalar> w;

  bool exact_capable() const {
    for (const auto& v : p)
      if (!v.exact) return false;
    for (const auto& v : w)
      if (!v.exact) return false;
    return true;
  }
};

template <class T>
ProblemInstance<T> materialize(const RawInstance& raw);

template <>
inline ProblemInstance<Rational> materialize<Rational>(const RawInstance& raw) {
  std::vector<Rational> p, w;
  p.reserve(raw.p.size());
  w.reserve(raw.w.size());
  for (const auto& v : raw.p) {
    if (!v.exact)
      throw Error(Errc::ParseError, "exact mode requires every entry to be an integer or a fraction \"a/b\"");
    p.push_back(v.value);
  }
  for (const auto& v : raw.w) {
    if (!v.exact)
      throw Error(Errc::ParseError, "exact mode requires every entry to be an integer or a fraction \"a/b\"");
    w.push_back(v.value);
  }
  return ProblemInstance<Rational>(std::move(p), std::move(w));
}

template <>
inline ProblemInstance<double> materialize<double>(const RawInstance& raw) {
  std::vector<double> p, w;
  p.reserve(raw.p.size());
  w.reserve(raw.w.size());
  for (const auto& v : raw.p) p.push_back(v.approx);
  for (const auto& v : raw.w) w.push_back(v.approx);
  return ProblemInstance<double>(std::move(p), std::move(w));
}

namespace detail {

inline ParsedScalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return ParsedScalar::from_rational(Rational(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return ParsedScalar::from_rational(Rational(j.get<std::uint64_t>()));
  if (j.is_number_float()) return ParsedScalar::from_double(j.get<double>());
  throw Error(Errc::ParseError, "instance entries must be numbers or fraction strings");
}

inline std::vector<ParsedScalar> scalars_from_json(const nlohmann::json& j, const char* field) {
  if (!j.is_array()) throw Error(Errc::ParseError, std::string("field '") + field + "' must be an array");
  std::vector<ParsedScalar> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(scalar_from_json(v));
  return out;
}

inline std::string canonical_token(const ParsedScalar& v) {
  return v.exact ? format_rational(v.value) : format_double(v.approx);
}

}  // namespace detail

/// Accepts either the bare on-disk instance object {"p": [...], "w": [...]}
/// or a previously emitted report that embeds one under "instance".
inline RawInstance instance_from_json(const nlohmann::json& doc) {
  const nlohmann::json* obj = &doc;
  if (doc.is_object() && !doc.contains("p") && doc.contains("instance")) obj = &doc.at("instance");
  if (!obj->is_object() || !obj->contains("p") || !obj->contains("w"))
    throw Error(Errc::ParseError, "instance JSON must contain arrays 'p' and 'w'");
  RawInstance raw;
  raw.p = detail::scalars_from_json(obj->at("p"), "p");
  raw.w = detail::scalars_from_json(obj->at("w"), "w");
  return raw;
}

inline RawInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, "invalid JSON in '" + path + "': " + e.what());
  }
  return instance_from_json(doc);
}

/// Comma-separated inline values, e.g. "1/6,1/10,0.25".
inline std::vector<ParsedScalar> parse_scalar_csv(const std::string& csv) {
  std::vector<ParsedScalar> out;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) out.push_back(parse_scalar(token));
  return out;
}

/// Canonical serialization: exact entries as fraction strings, float entries
/// as shortest round-trip numbers. Feeding the result back in reproduces the
/// same values and mode.
inline nlohmann::json instance_to_json(const RawInstance& raw) {
  nlohmann::json p = nlohmann::json::array();
  nlohmann::json w = nlohmann::json::array();
  for (const auto& v : raw.p) {
    if (v.exact)
      p.push_back(format_rational(v.value));
    else
      p.push_back(v.approx);
  }
  for (const auto& v : raw.w) {
    if (v.exact)
      w.push_back(format_rational(v.value));
    else
      w.push_back(v.approx);
  }
  return nlohmann::json{{"p", std::move(p)}, {"w", std::move(w)}};
}

/// FNV-1a 64 over the canonical token stream; stable across table/json
/// output and across re-ingestion of emitted reports.
inline std::string instance_digest(const RawInstance& raw) {
  std::string canon = "p:";
  for (const auto& v : raw.p) {
    canon += detail::canonical_token(v);
    canon += ',';
  }
  canon += "|w:";
  for (const auto& v : raw.w) {
    canon += detail::canonical_token(v);
    canon += ',';
  }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace lsp
