#include "ptscheme/split_oracle.hpp"

#include <algorithm>
#include <limits>

#include "ptscheme/error.hpp"
#include "ptscheme/linalg.hpp"

namespace ptscheme {

bool check_general_position(std::span<const LinearForm> forms, int generators) {
  if (forms.empty()) throw Error(ErrorCode::BadParameter, "general position of an empty list");
  for (const auto& f : forms) {
    if (!(f.field() == forms.front().field()))
      throw Error(ErrorCode::FieldMismatch, "forms over different fields");
    if (f.generators() != generators)
      throw Error(ErrorCode::DimensionMismatch, "form with " + std::to_string(f.generators()) +
                                                    " coefficients, r=" + std::to_string(generators));
  }
  const int count = static_cast<int>(forms.size());
  const int k = std::min(generators, count);

  // Walk all k-subsets in lexicographic order.
  std::vector<int> subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    Matrix m;
    for (int i : subset) m.push_back(forms[i].coeffs());
    if (rank(std::move(m)) < k) return false;
    int i = k - 1;
    while (i >= 0 && subset[i] == count - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int t = i + 1; t < k; ++t) subset[t] = subset[t - 1] + 1;
  }
  return true;
}

ConstraintProfile profile_of(const std::vector<Window>& windows, const ChoiceFunction& choice, int slots) {
  ConstraintProfile profile(slots, 0);
  for (std::size_t w = 0; w < windows.size(); ++w) ++profile[windows[w].offset + choice.factor[w]];
  return profile;
}

std::uint64_t raw_choice_count(const AlgebraShape& shape) {
  std::uint64_t total = 1;
  for (const Window& w : windows_of(shape)) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(w.degree))
      return std::numeric_limits<std::uint64_t>::max();
    total *= static_cast<std::uint64_t>(w.degree);
  }
  return total;
}

namespace {

struct Backtracker {
  const std::vector<Window>& windows;
  int capacity;
  const std::function<void(const ChoiceFunction&, const ConstraintProfile&)>& visit;
  ChoiceFunction choice;
  ConstraintProfile profile;

  void run(std::size_t w) {
    if (w == windows.size()) {
      visit(choice, profile);
      return;
    }
    const Window& window = windows[w];
    for (int k = 0; k < window.degree; ++k) {
      int& load = profile[window.offset + k];
      if (load == capacity) continue;
      ++load;
      choice.factor[w] = k;
      run(w + 1);
      --load;
    }
  }
};

void require_zero_dim(const AlgebraShape& shape) {
  const int df = defect(shape);
  const int target = shape.slots() * (shape.generators() - 1);
  if (df != target)
    throw Error(ErrorCode::DefectMismatch,
                "defect " + std::to_string(df) + " != n(r-1) = " + std::to_string(target));
}

}  // namespace

void for_each_component(const AlgebraShape& shape,
                        const std::function<void(const ChoiceFunction&, const ConstraintProfile&)>& visit) {
  const auto windows = windows_of(shape);
  Backtracker bt{windows, shape.generators() - 1, visit, ChoiceFunction{std::vector<int>(windows.size(), 0)},
                 ConstraintProfile(shape.slots(), 0)};
  bt.run(0);
}

std::uint64_t count_choice_functions(const AlgebraShape& shape) {
  require_zero_dim(shape);
  const int full = shape.generators() - 1;
  std::uint64_t count = 0;
  for_each_component(shape, [&](const ChoiceFunction&, const ConstraintProfile& profile) {
    if (std::all_of(profile.begin(), profile.end(), [full](int c) { return c == full; })) ++count;
  });
  return count;
}

std::vector<Component> enumerate_components(const AlgebraShape& shape) {
  const int dim = expected_dim(shape);
  std::vector<Component> out;
  for_each_component(shape, [&](const ChoiceFunction& choice, const ConstraintProfile& profile) {
    out.push_back(Component{choice, profile, dim});
  });
  return out;
}

std::map<ConstraintProfile, std::uint64_t> profile_census(const AlgebraShape& shape) {
  std::map<ConstraintProfile, std::uint64_t> census;
  for_each_component(shape, [&](const ChoiceFunction&, const ConstraintProfile& profile) { ++census[profile]; });
  return census;
}

std::vector<PointTuple> realize_points(std::span<const SplitRelation> splits, const AlgebraShape& shape) {
  require_zero_dim(shape);
  const int r = shape.generators();
  const int n = shape.slots();
  if (static_cast<int>(splits.size()) != shape.relation_count())
    throw Error(ErrorCode::DegreeMismatch, std::to_string(splits.size()) + " relations for a shape with " +
                                               std::to_string(shape.relation_count()));
  for (int j = 0; j < shape.relation_count(); ++j)
    if (splits[j].degree() != shape.degrees()[j] || splits[j].generators() != r)
      throw Error(ErrorCode::DegreeMismatch, "relation " + std::to_string(j + 1) + " does not match " +
                                                 shape.to_string());
  if (!check_general_position(pooled_factors(splits), r))
    throw Error(ErrorCode::GeneralPositionViolation, "pooled linear forms are not in general position");

  const Field field = splits.front().field();
  const auto windows = windows_of(shape);
  std::vector<PointTuple> tuples;
  for_each_component(shape, [&](const ChoiceFunction& choice, const ConstraintProfile&) {
    std::vector<Matrix> systems(n);
    for (std::size_t w = 0; w < windows.size(); ++w) {
      const Window& window = windows[w];
      const int k = choice.factor[w];
      systems[window.offset + k].push_back(splits[window.relation].factors()[k].coeffs());
    }
    PointTuple tuple;
    for (int m = 0; m < n; ++m) {
      auto kernel = nullspace(std::move(systems[m]), r, field);
      if (kernel.size() != 1)
        throw Error(ErrorCode::GeneralPositionViolation,
                    "slot " + std::to_string(m + 1) + " constraints do not cut out a single point");
      tuple.emplace_back(std::move(kernel.front()));
    }
    tuples.push_back(std::move(tuple));
  });
  std::sort(tuples.begin(), tuples.end());
  if (std::adjacent_find(tuples.begin(), tuples.end()) != tuples.end())
    throw Error(ErrorCode::GeneralPositionViolation, "two choice functions realize the same point tuple");
  return tuples;
}

}  // namespace ptscheme
