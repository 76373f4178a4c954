#include "ptscheme/relation_io.hpp"

#include <json.hpp>

#include "ptscheme/error.hpp"

namespace ptscheme {

using nlohmann::json;

namespace {

Scalar scalar_from_json(const json& value, const Field& field) {
  if (value.is_string()) return Scalar::parse(field, value.get<std::string>());
  if (value.is_number_integer()) return Scalar(field, value.get<long>());
  throw Error(ErrorCode::ParseError, "coefficient must be a decimal string, got " + value.dump());
}

Relation relation_from_json(const json& obj, int r, const Field& field) {
  if (!obj.is_object()) throw Error(ErrorCode::ParseError, "relation must be an object, got " + obj.dump());
  if (obj.contains("factors")) {
    std::vector<LinearForm> factors;
    for (const auto& row : obj.at("factors")) {
      if (!row.is_array() || static_cast<int>(row.size()) != r)
        throw Error(ErrorCode::ParseError, "factor " + row.dump() + " needs " + std::to_string(r) + " coefficients");
      std::vector<Scalar> coeffs;
      for (const auto& c : row) coeffs.push_back(scalar_from_json(c, field));
      factors.emplace_back(std::move(coeffs));
    }
    return SplitRelation(std::move(factors));
  }
  if (obj.contains("terms")) {
    const int degree = obj.at("degree").get<int>();
    MultilinearRelation::Terms terms;
    for (const auto& t : obj.at("terms")) {
      const auto& word_json = t.at("word");
      if (!word_json.is_array()) throw Error(ErrorCode::ParseError, "word must be an array");
      MultilinearRelation::Word word;
      for (const auto& letter : word_json) {
        if (!letter.is_number_integer()) throw Error(ErrorCode::InvalidWord, "letter " + letter.dump());
        word.push_back(letter.get<int>());
      }
      Scalar coeff = scalar_from_json(t.at("coeff"), field);
      auto [it, inserted] = terms.emplace(word, coeff);
      if (!inserted) it->second += coeff;
    }
    return MultilinearRelation(r, degree, field, std::move(terms));
  }
  throw Error(ErrorCode::ParseError, "relation needs \"terms\" or \"factors\": " + obj.dump());
}

json relation_to_json(const Relation& relation) {
  if (const auto* split = std::get_if<SplitRelation>(&relation)) {
    json factors = json::array();
    for (const auto& f : split->factors()) {
      json row = json::array();
      for (const auto& c : f.coeffs()) row.push_back(c.to_string());
      factors.push_back(std::move(row));
    }
    return {{"factors", std::move(factors)}};
  }
  const auto& dense = std::get<MultilinearRelation>(relation);
  json terms = json::array();
  for (const auto& [word, coeff] : dense.terms()) terms.push_back({{"word", word}, {"coeff", coeff.to_string()}});
  return {{"degree", dense.degree()}, {"terms", std::move(terms)}};
}

std::string locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

RelationFile parse_relations(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, locate(text, e.byte) + ": " + e.what());
  }
  try {
    RelationFile file;
    file.generators = doc.at("r").get<int>();
    if (file.generators < 2) throw Error(ErrorCode::BadParameter, "need r >= 2");
    file.field = Field::parse(doc.value("field", std::string("Q")));
    for (const auto& obj : doc.at("relations"))
      file.relations.push_back(relation_from_json(obj, file.generators, file.field));
    return file;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string serialize_relations(const RelationFile& file) {
  json relations = json::array();
  for (const auto& rel : file.relations) relations.push_back(relation_to_json(rel));
  json doc = {{"r", file.generators}, {"field", file.field.to_string()}, {"relations", std::move(relations)}};
  return doc.dump(2);
}

std::vector<MultilinearRelation> tensors_of(const RelationFile& file) {
  std::vector<MultilinearRelation> out;
  for (const auto& rel : file.relations) {
    if (const auto* split = std::get_if<SplitRelation>(&rel))
      out.push_back(split_to_tensor(*split));
    else
      out.push_back(std::get<MultilinearRelation>(rel));
  }
  return out;
}

}  // namespace ptscheme
