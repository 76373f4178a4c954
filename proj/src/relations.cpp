#include "ptscheme/relations.hpp"

#include <random>
#include <sstream>

#include "ptscheme/error.hpp"
#include "ptscheme/split_oracle.hpp"

namespace ptscheme {

namespace {

void require_one_field(std::span<const Scalar> values) {
  for (const auto& v : values)
    if (!(v.field() == values.front().field()))
      throw Error(ErrorCode::FieldMismatch,
                  "mixed fields " + values.front().field().to_string() + " and " + v.field().to_string());
}

int first_nonzero(std::span<const Scalar> values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!values[i].is_zero()) return static_cast<int>(i);
  return -1;
}

}  // namespace

LinearForm::LinearForm(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::BadParameter, "linear form with no coefficients");
  require_one_field(coeffs_);
  if (first_nonzero(coeffs_) < 0) throw Error(ErrorCode::BadParameter, "zero linear form");
}

LinearForm LinearForm::canonical() const {
  const Scalar inv = coeffs_[first_nonzero(coeffs_)].inverse();
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c * inv);
  return LinearForm(std::move(out));
}

ProjectivePoint::ProjectivePoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorCode::BadParameter, "point with no coordinates");
  require_one_field(coords_);
  leading_ = first_nonzero(coords_);
  if (leading_ < 0) throw Error(ErrorCode::BadParameter, "zero vector is not a projective point");
  if (coords_[leading_] == Scalar(field(), 1)) return;
  const Scalar inv = coords_[leading_].inverse();
  for (auto& c : coords_) c = c * inv;
}

std::string ProjectivePoint::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ':';
    out << coords_[i].to_string();
  }
  out << ')';
  return out.str();
}

bool ProjectivePoint::operator<(const ProjectivePoint& other) const {
  if (leading_ != other.leading_) return leading_ < other.leading_;
  return std::lexicographical_compare(coords_.begin(), coords_.end(), other.coords_.begin(),
                                      other.coords_.end());
}

MultilinearRelation::MultilinearRelation(int generators, int degree, const Field& field, Terms terms)
    : generators_(generators), degree_(degree), field_(field) {
  if (degree < 2)
    throw Error(ErrorCode::DegreeOutOfRange, "relation degree " + std::to_string(degree) + " < 2");
  for (auto& [word, coeff] : terms) {
    if (static_cast<int>(word.size()) != degree)
      throw Error(ErrorCode::InvalidWord, "word of length " + std::to_string(word.size()) +
                                              " in a degree " + std::to_string(degree) + " relation");
    for (int letter : word)
      if (letter < 1 || letter > generators)
        throw Error(ErrorCode::InvalidWord, "letter " + std::to_string(letter) + " outside 1.." +
                                                std::to_string(generators));
    if (!(coeff.field() == field))
      throw Error(ErrorCode::FieldMismatch, coeff.field().to_string() + " coefficient in a " +
                                                field.to_string() + " relation");
    if (!coeff.is_zero()) terms_.emplace(word, std::move(coeff));
  }
  if (terms_.empty()) throw Error(ErrorCode::BadParameter, "relation has no nonzero terms");
}

MultilinearRelation MultilinearRelation::scaled(const Scalar& k) const {
  Terms terms;
  for (const auto& [word, coeff] : terms_) terms.emplace(word, coeff * k);
  return MultilinearRelation(generators_, degree_, field_, std::move(terms));
}

SplitRelation::SplitRelation(std::vector<LinearForm> factors) : factors_(std::move(factors)) {
  if (factors_.size() < 2)
    throw Error(ErrorCode::DegreeOutOfRange, "split relation needs at least two factors");
  for (const auto& f : factors_) {
    if (f.generators() != factors_.front().generators())
      throw Error(ErrorCode::DimensionMismatch, "factors with different numbers of coefficients");
    if (!(f.field() == factors_.front().field()))
      throw Error(ErrorCode::FieldMismatch, "factors over different fields");
  }
}

Scalar eval_linear(const LinearForm& form, const ProjectivePoint& point) {
  if (form.generators() != point.generators())
    throw Error(ErrorCode::DimensionMismatch, "form on " + std::to_string(form.generators()) +
                                                  " coordinates, point has " +
                                                  std::to_string(point.generators()));
  Scalar sum(form.field(), 0);
  for (int k = 0; k < form.generators(); ++k) sum += form.coeffs()[k] * point.coords()[k];
  return sum;
}

Scalar eval_window(const MultilinearRelation& f, const Window& window, std::span<const ProjectivePoint> points) {
  if (f.degree() != window.degree)
    throw Error(ErrorCode::DegreeMismatch, "relation of degree " + std::to_string(f.degree()) +
                                               " on a window of degree " + std::to_string(window.degree));
  if (window.offset < 0 || window.last_slot() >= static_cast<int>(points.size()))
    throw Error(ErrorCode::DimensionMismatch, "window overruns a tuple of " + std::to_string(points.size()) +
                                                  " points");
  for (int t = 0; t < window.degree; ++t) {
    const auto& p = points[window.offset + t];
    if (p.generators() != f.generators())
      throw Error(ErrorCode::DimensionMismatch, "point " + p.to_string() + " in a relation on " +
                                                    std::to_string(f.generators()) + " generators");
    if (!(p.field() == f.field()))
      throw Error(ErrorCode::FieldMismatch, "point over " + p.field().to_string() + ", relation over " +
                                                f.field().to_string());
  }
  Scalar sum(f.field(), 0);
  for (const auto& [word, coeff] : f.terms()) {
    Scalar term = coeff;
    for (int t = 0; t < window.degree && !term.is_zero(); ++t)
      term *= points[window.offset + t].coords()[word[t] - 1];
    sum += term;
  }
  return sum;
}

MultilinearRelation split_to_tensor(const SplitRelation& s) {
  const int r = s.generators();
  const int d = s.degree();
  MultilinearRelation::Terms terms;
  MultilinearRelation::Word word(d, 1);
  // Odometer over {1..r}^d.
  while (true) {
    Scalar coeff(s.field(), 1);
    for (int t = 0; t < d && !coeff.is_zero(); ++t) coeff *= s.factors()[t].coeffs()[word[t] - 1];
    if (!coeff.is_zero()) terms.emplace(word, coeff);
    int t = d - 1;
    while (t >= 0 && word[t] == r) word[t--] = 1;
    if (t < 0) break;
    ++word[t];
  }
  return MultilinearRelation(r, d, s.field(), std::move(terms));
}

bool is_member(std::span<const MultilinearRelation> relations, int slots, std::span<const ProjectivePoint> points) {
  if (static_cast<int>(points.size()) != slots)
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(slots) + " points, got " +
                                                  std::to_string(points.size()));
  for (std::size_t j = 0; j < relations.size(); ++j) {
    const auto& f = relations[j];
    if (f.degree() > slots)
      throw Error(ErrorCode::DegreeOutOfRange, "relation degree " + std::to_string(f.degree()) +
                                                   " exceeds n=" + std::to_string(slots));
    for (int i = 0; i + f.degree() <= slots; ++i)
      if (!eval_window(f, Window{static_cast<int>(j), i, f.degree()}, points).is_zero()) return false;
  }
  return true;
}

std::vector<LinearForm> pooled_factors(std::span<const SplitRelation> splits) {
  std::vector<LinearForm> pool;
  for (const auto& s : splits) pool.insert(pool.end(), s.factors().begin(), s.factors().end());
  return pool;
}

std::vector<SplitRelation> random_split_relations(const AlgebraShape& shape, std::uint64_t seed,
                                                  const Field& field, int retry_budget) {
  const int r = shape.generators();
  int pool_size = 0;
  for (int d : shape.degrees()) {
    if (d < 2) throw Error(ErrorCode::DegreeOutOfRange, "split relations need degrees >= 2");
    pool_size += d;
  }
  if (!field.is_rational() && pool_size >= r &&
      static_cast<std::uint64_t>(pool_size) > field.modulus() + static_cast<std::uint64_t>(r) - 1)
    throw Error(ErrorCode::GeneralPositionUnreachable,
                std::to_string(pool_size) + " forms exceed " + std::to_string(field.modulus() + r - 1) +
                    ", the most that can be in general position over " + field.to_string());

  std::mt19937_64 rng(seed);
  auto draw = [&]() -> Scalar {
    if (field.is_rational()) return Scalar(field, static_cast<long>(rng() % 21) - 10);
    return Scalar(field, static_cast<long>(rng() % field.modulus()));
  };

  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    std::vector<SplitRelation> splits;
    bool degenerate = false;
    for (int d : shape.degrees()) {
      std::vector<LinearForm> factors;
      for (int t = 0; t < d; ++t) {
        std::vector<Scalar> coeffs;
        for (int k = 0; k < r; ++k) coeffs.push_back(draw());
        if (std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& c) { return c.is_zero(); })) {
          degenerate = true;
          coeffs[0] = Scalar(field, 1);
        }
        factors.emplace_back(std::move(coeffs));
      }
      splits.emplace_back(std::move(factors));
    }
    if (!degenerate && check_general_position(pooled_factors(splits), r)) return splits;
  }
  throw Error(ErrorCode::GeneralPositionUnreachable,
              "no general-position configuration after " + std::to_string(retry_budget) + " draws over " +
                  field.to_string());
}

}  // namespace ptscheme
