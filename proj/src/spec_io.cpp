#include "nichols/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nichols {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

}  // namespace

BraidingSpec parse_spec_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("malformed spec document: ") + e.what());
  }
  if (!doc.is_object()) throw SpecError("spec document must be a JSON object");
  for (const char* field : {"n", "conductor", "exponents"})
    if (!doc.contains(field)) throw SpecError(std::string("missing field: ") + field);

  BraidingSpec spec;
  if (!doc["n"].is_number_integer()) throw SpecError("field n must be an integer");
  if (!doc["conductor"].is_number_integer()) throw SpecError("field conductor must be an integer");
  spec.rank = doc["n"].get<int>();
  spec.conductor = doc["conductor"].get<int>();
  if (!doc["exponents"].is_array())
    throw SpecError("field exponents must be an array of integer rows");
  int row_index = 0;
  for (const auto& row : doc["exponents"]) {
    ++row_index;
    if (!row.is_array())
      throw SpecError("exponents row " + std::to_string(row_index) + " is not an array");
    std::vector<int> entries;
    int col_index = 0;
    for (const auto& entry : row) {
      ++col_index;
      if (!entry.is_number_integer())
        throw SpecError("exponents entry at row " + std::to_string(row_index) + ", column " +
                        std::to_string(col_index) + " is not an integer");
      entries.push_back(entry.get<int>());
    }
    spec.exponents.push_back(std::move(entries));
  }
  if (doc.contains("cap")) {
    if (!doc["cap"].is_number_integer()) throw SpecError("field cap must be an integer");
    spec.degree_cap = doc["cap"].get<int>();
  }
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw SpecError("field labels must be an array of strings");
    for (const auto& label : doc["labels"]) {
      if (!label.is_string()) throw SpecError("labels must be strings");
      spec.labels.push_back(label.get<std::string>());
    }
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  return spec;
}

BraidingSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_json(buffer.str());
}

std::string spec_to_json(const BraidingSpec& spec) {
  ordered_json doc;
  doc["n"] = spec.rank;
  doc["conductor"] = spec.conductor;
  doc["exponents"] = spec.exponents;
  doc["cap"] = spec.degree_cap;
  if (!spec.labels.empty()) doc["labels"] = spec.labels;
  return doc.dump();
}

}  // namespace nichols
