#ifndef PTSCHEME_SHAPES_HPP
#define PTSCHEME_SHAPES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ptscheme {

/// The data (r, d, n): r degree-one generators, relation degrees
/// d_1 <= ... <= d_s, and the truncation index n (number of slots).
///
/// Construction sorts the degrees and rejects r < 2, n < 1, an empty degree
/// list and degrees below 1. Degree 1 is admitted because the Chow layer
/// accepts it; scheme-level code requires every degree to be at least 2.
class AlgebraShape {
public:
  AlgebraShape(int generators, std::vector<int> degrees, int slots);

  int generators() const noexcept { return generators_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int slots() const noexcept { return slots_; }
  int relation_count() const noexcept { return static_cast<int>(degrees_.size()); }
  int max_degree() const noexcept { return degrees_.back(); }

  /// Same generators and degrees, one more relation of the given degree.
  AlgebraShape with_relation(int degree) const;

  bool operator==(const AlgebraShape&) const = default;

  /// "r=2 d=3,4 n=5"
  std::string to_string() const;

private:
  int generators_;
  std::vector<int> degrees_;
  int slots_;
};

/// The slot interval on which one multilinearization of relation
/// `relation` acts. Slots and relations are 0-based here; the covered slots
/// are offset, offset+1, ..., offset+degree-1.
struct Window {
  int relation = 0;
  int offset = 0;
  int degree = 0;

  int first_slot() const noexcept { return offset; }
  int last_slot() const noexcept { return offset + degree - 1; }
  bool covers(int slot) const noexcept { return slot >= offset && slot <= last_slot(); }

  auto operator<=>(const Window&) const = default;
};

/// Sum over relations of (n - d_j + 1). Throws DegreeOutOfRange if some
/// d_j > n.
int defect(const AlgebraShape& shape);

/// n(r-1) - defect. Negative for over-determined shapes.
int expected_dim(const AlgebraShape& shape);

/// n >= d_s.
bool is_stable(const AlgebraShape& shape);

/// All windows sorted by (relation, offset). Throws DegreeOutOfRange if some
/// d_j > n.
std::vector<Window> windows_of(const AlgebraShape& shape);

/// The n at which n(r-1) equals the defect, if it is an integer in the
/// stable range.
std::optional<int> zero_dim_n(int generators, const std::vector<int>& degrees);

/// ell - 2. Throws BadParameter for ell < 3.
int gorenstein_n(int ell);

/// Parses "r=2 d=3,4 n=5" (keys in any order, separated by spaces).
AlgebraShape parse_shape(std::string_view literal);

/// Parses {"r":2,"d":[3,4],"n":5}.
AlgebraShape parse_shape_json(std::string_view json_text);

std::string shape_to_json(const AlgebraShape& shape);

}  // namespace ptscheme

#endif
