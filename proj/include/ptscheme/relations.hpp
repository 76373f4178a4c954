#ifndef PTSCHEME_RELATIONS_HPP
#define PTSCHEME_RELATIONS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ptscheme/field.hpp"
#include "ptscheme/shapes.hpp"

namespace ptscheme {

/// A nonzero linear form on V, given by its r coefficients.
class LinearForm {
public:
  /// Throws BadParameter on an empty or all-zero vector, FieldMismatch on
  /// mixed fields.
  explicit LinearForm(std::vector<Scalar> coeffs);

  int generators() const noexcept { return static_cast<int>(coeffs_.size()); }
  const Field& field() const noexcept { return coeffs_.front().field(); }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }

  /// Rescaled so the first nonzero coefficient is 1.
  LinearForm canonical() const;

  bool operator==(const LinearForm& other) const { return coeffs_ == other.coeffs_; }

private:
  std::vector<Scalar> coeffs_;
};

/// A point of P^{r-1}, always stored with first nonzero coordinate 1.
class ProjectivePoint {
public:
  /// Normalizes; throws BadParameter on the zero vector.
  explicit ProjectivePoint(std::vector<Scalar> coords);

  int generators() const noexcept { return static_cast<int>(coords_.size()); }
  const Field& field() const noexcept { return coords_.front().field(); }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }
  int leading_index() const noexcept { return leading_; }

  /// "(1:0:2)"
  std::string to_string() const;

  bool operator==(const ProjectivePoint& other) const { return coords_ == other.coords_; }
  /// Points whose leading 1 sits earlier come first; ties break
  /// lexicographically on the coordinates.
  bool operator<(const ProjectivePoint& other) const;

private:
  std::vector<Scalar> coords_;
  int leading_ = 0;
};

using PointTuple = std::vector<ProjectivePoint>;

/// A tensor in (V*)^{⊗d}: words over {1..r} of length d mapped to nonzero
/// coefficients. Letters are 1-based, matching generators x_1..x_r.
class MultilinearRelation {
public:
  using Word = std::vector<int>;
  using Terms = std::map<Word, Scalar>;

  /// Zero coefficients are dropped. Throws DegreeOutOfRange for d < 2,
  /// InvalidWord for a word of the wrong length or with letters outside
  /// 1..r, BadParameter if no nonzero term remains, FieldMismatch on mixed
  /// fields.
  MultilinearRelation(int generators, int degree, const Field& field, Terms terms);

  int generators() const noexcept { return generators_; }
  int degree() const noexcept { return degree_; }
  const Field& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }

  MultilinearRelation scaled(const Scalar& k) const;

  bool operator==(const MultilinearRelation& other) const = default;

private:
  int generators_;
  int degree_;
  Field field_;
  Terms terms_;
};

/// A relation given as an ordered product l_1 ⊗ ... ⊗ l_d of linear forms.
class SplitRelation {
public:
  /// Throws DegreeOutOfRange for fewer than two factors, DimensionMismatch
  /// or FieldMismatch when the factors disagree.
  explicit SplitRelation(std::vector<LinearForm> factors);

  int degree() const noexcept { return static_cast<int>(factors_.size()); }
  int generators() const noexcept { return factors_.front().generators(); }
  const Field& field() const noexcept { return factors_.front().field(); }
  const std::vector<LinearForm>& factors() const noexcept { return factors_; }

  bool operator==(const SplitRelation& other) const = default;

private:
  std::vector<LinearForm> factors_;
};

Scalar eval_linear(const LinearForm& form, const ProjectivePoint& point);

/// Value of f on the points at the window's slots, using the canonical
/// representatives. Throws DegreeMismatch if f's degree differs from the
/// window's, DimensionMismatch if the tuple is too short or a point has the
/// wrong number of coordinates, FieldMismatch across fields.
Scalar eval_window(const MultilinearRelation& f, const Window& window, std::span<const ProjectivePoint> points);

/// The tensor l_1 ⊗ ... ⊗ l_d.
MultilinearRelation split_to_tensor(const SplitRelation& s);

/// True iff every window of every relation vanishes on the tuple. The tuple
/// must have exactly n points (DimensionMismatch) and every relation degree
/// must be at most n (DegreeOutOfRange).
bool is_member(std::span<const MultilinearRelation> relations, int slots, std::span<const ProjectivePoint> points);

/// Default resampling budget for random_split_relations.
inline constexpr int kDefaultRetryBudget = 20000;

/// One split relation per degree of the shape, with factor coefficients drawn
/// from mt19937_64 seeded with `seed` (small integers in [-10,10] over Q,
/// uniform residues over F_p). Resamples the whole configuration until the
/// pooled factor list is in general position; throws
/// GeneralPositionUnreachable when the budget runs out or when the pool is
/// larger than any general-position configuration over F_p can be
/// (p + r - 1 forms).
std::vector<SplitRelation> random_split_relations(const AlgebraShape& shape, std::uint64_t seed,
                                                  const Field& field, int retry_budget = kDefaultRetryBudget);

/// The factors of all relations, in relation order.
std::vector<LinearForm> pooled_factors(std::span<const SplitRelation> splits);

}  // namespace ptscheme

#endif
