#ifndef PTSCHEME_RELATION_IO_HPP
#define PTSCHEME_RELATION_IO_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ptscheme/relations.hpp"

namespace ptscheme {

using Relation = std::variant<MultilinearRelation, SplitRelation>;

/// Contents of a relation file:
///
///   {"r": 2, "field": "Q" | "Fp:<p>",
///    "relations": [{"degree": 2, "terms": [{"word": [1,2], "coeff": "1"}, ...]},
///                  {"factors": [["1","0"], ["0","1"]]}, ...]}
///
/// Coefficients are decimal strings, rationals as "a/b".
struct RelationFile {
  int generators = 2;
  Field field = Field::rationals();
  std::vector<Relation> relations;
};

/// Throws ParseError (with line and column for malformed JSON) or
/// InvalidWord.
RelationFile parse_relations(std::string_view text);

/// Canonical form: dense terms sorted by word with zero terms dropped,
/// coefficients in lowest terms (residues in 0..p-1 over F_p).
std::string serialize_relations(const RelationFile& file);

/// Dense tensors for every relation, split ones expanded.
std::vector<MultilinearRelation> tensors_of(const RelationFile& file);

}  // namespace ptscheme

#endif
