#include <json.hpp>

#include "arr/arrangement.hpp"
#include "arr/error.hpp"

namespace arr {

namespace {

Rational rational_field(const nlohmann::json& value, const std::string& where) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw PreconditionError(where + ": expected a rational string like \"p/q\"");
}

}  // namespace

Arrangement arrangement_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(std::string("arrangement file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("hyperplanes"))
    throw PreconditionError("arrangement file needs \"dim\" and \"hyperplanes\"");
  if (!doc["dim"].is_number_unsigned()) throw PreconditionError("\"dim\" must be a nonnegative integer");
  const auto dim = doc["dim"].get<std::size_t>();
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < doc["hyperplanes"].size(); ++i) {
    const auto& entry = doc["hyperplanes"][i];
    const std::string where = "hyperplanes[" + std::to_string(i) + "]";
    if (!entry.is_object() || !entry.contains("normal") || !entry.contains("offset") || !entry["normal"].is_array())
      throw PreconditionError(where + " needs \"normal\" (array) and \"offset\"");
    Hyperplane h;
    for (const auto& c : entry["normal"]) h.normal.push_back(rational_field(c, where));
    h.offset = rational_field(entry["offset"], where);
    hs.push_back(std::move(h));
  }
  FamilyTag tag;
  if (doc.contains("label") && doc["label"].is_string() && doc["label"].get<std::string>() != "custom") {
    // Only a bare family name is recorded; parameters stay with the data.
    try {
      tag.family = parse_family(doc["label"].get<std::string>());
    } catch (const PreconditionError&) {
      tag.family = Family::custom;
    }
  }
  tag.n = static_cast<int>(dim);
  return Arrangement(dim, std::move(hs), tag);
}

std::string arrangement_to_json(const Arrangement& a) {
  nlohmann::ordered_json doc;
  doc["dim"] = a.dim();
  auto hs = nlohmann::ordered_json::array();
  for (const auto& h : a.hyperplanes()) {
    nlohmann::ordered_json entry;
    auto normal = nlohmann::ordered_json::array();
    for (const auto& c : h.normal) normal.push_back(to_string(c));
    entry["normal"] = std::move(normal);
    entry["offset"] = to_string(h.offset);
    hs.push_back(std::move(entry));
  }
  doc["hyperplanes"] = std::move(hs);
  doc["label"] = a.label().to_string();
  return doc.dump(2);
}

}  // namespace arr
