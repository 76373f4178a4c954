#ifndef PTSCHEME_SPLIT_ORACLE_HPP
#define PTSCHEME_SPLIT_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "ptscheme/relations.hpp"
#include "ptscheme/shapes.hpp"

namespace ptscheme {

/// For each window (in windows_of order) the 0-based factor index whose
/// vanishing is imposed; the constrained slot is window.offset + factor.
struct ChoiceFunction {
  std::vector<int> factor;

  auto operator<=>(const ChoiceFunction&) const = default;
};

/// c[m] = number of windows whose chosen factor lands on slot m.
using ConstraintProfile = std::vector<int>;

struct Component {
  ChoiceFunction choice;
  ConstraintProfile profile;
  int dimension = 0;
};

/// Every min(r, count)-subset of the forms has full rank.
bool check_general_position(std::span<const LinearForm> forms, int generators);

ConstraintProfile profile_of(const std::vector<Window>& windows, const ChoiceFunction& choice, int slots);

/// Product of the window degrees: the number of unpruned choice functions.
/// Saturates at UINT64_MAX.
std::uint64_t raw_choice_count(const AlgebraShape& shape);

/// Calls `visit` for every choice function with at most r-1 constraints per
/// slot, in lexicographic order of the factor vector. Backtracks over the
/// windows with per-slot remaining capacity.
void for_each_component(const AlgebraShape& shape,
                        const std::function<void(const ChoiceFunction&, const ConstraintProfile&)>& visit);

/// Number of choice functions putting exactly r-1 constraints on every
/// slot. Throws DefectMismatch unless defect = n(r-1).
std::uint64_t count_choice_functions(const AlgebraShape& shape);

/// All admissible choice functions with their profiles and dimension
/// n(r-1) - defect.
std::vector<Component> enumerate_components(const AlgebraShape& shape);

/// Number of admissible choice functions per profile.
std::map<ConstraintProfile, std::uint64_t> profile_census(const AlgebraShape& shape);

/// One point tuple per full-profile choice function: slot m gets the common
/// zero of its r-1 chosen factors. Relations are matched to the shape's
/// degrees in order (DegreeMismatch otherwise). Throws DefectMismatch when
/// defect != n(r-1), GeneralPositionViolation when the pooled factors are not
/// in general position or two choice functions realize the same tuple.
/// The result is sorted.
std::vector<PointTuple> realize_points(std::span<const SplitRelation> splits, const AlgebraShape& shape);

}  // namespace ptscheme

#endif
