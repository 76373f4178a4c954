#ifndef PTSCHEME_CHOW_HPP
#define PTSCHEME_CHOW_HPP

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ptscheme/shapes.hpp"

namespace ptscheme {

using BigInt = mpz_class;
using Exponents = std::vector<int>;

/// An element of the Chow ring of (P^{r-1})^n, i.e. of the tensor product of
/// n copies of Z[e]/(e^r). Stored sparsely as exponent vector -> nonzero
/// integer coefficient; the map order is lexicographic in the exponents.
///
/// Values are immutable once built. Every exponent entry is < r and no
/// stored coefficient is zero.
class ChowClass {
public:
  using Terms = std::map<Exponents, BigInt>;

  /// The zero class.
  ChowClass(int slots, int truncation);

  /// Builds a class from raw terms: zero coefficients are dropped, duplicate
  /// keys cannot occur, exponents are range-checked (BadExponent).
  ChowClass(int slots, int truncation, Terms terms);

  static ChowClass one(int slots, int truncation);
  /// The hyperplane class of 0-based slot `slot`.
  static ChowClass hyperplane(int slots, int truncation, int slot);

  int slots() const noexcept { return slots_; }
  int truncation() const noexcept { return truncation_; }
  const Terms& terms() const& noexcept { return terms_; }
  Terms terms() && { return std::move(terms_); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Stored coefficient, or 0. Throws BadExponent on a malformed vector.
  BigInt coefficient(const Exponents& exponents) const;

  /// Relabels slot i as slot n-1-i.
  ChowClass reversed() const;

  friend ChowClass operator+(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const BigInt& k, const ChowClass& a);
  bool operator==(const ChowClass& other) const = default;

private:
  void check_exponents(const Exponents& exponents) const;

  int slots_;
  int truncation_;
  Terms terms_;
};

ChowClass add(const ChowClass& a, const ChowClass& b);
ChowClass mul(const ChowClass& a, const ChowClass& b);

/// Sum of the hyperplane classes of the slots a window covers.
/// Throws InvalidWindow when the window does not fit the shape.
ChowClass window_class(const AlgebraShape& shape, const Window& window);

/// Product of all window classes, multiplied in window order. This is the
/// class of the truncated point scheme. Requires 1 <= d_j <= n
/// (DegreeOutOfRange otherwise).
ChowClass gamma_class(const AlgebraShape& shape);

/// Coefficient of the top class prod e_i^{r-1}: the number of points with
/// multiplicity. Requires a stable shape (NotStable) of expected dimension
/// zero (DefectMismatch).
BigInt point_count(const AlgebraShape& shape);

/// All terms of gamma_class. Requires a stable shape with expected dimension
/// >= 0 (NegativeExpectedDim otherwise).
ChowClass::Terms multidegree_table(const AlgebraShape& shape);

/// For expected dimension one: entry m is the coefficient of the monomial
/// whose slot m exponent is r-2 and all others r-1 (the degree of the curve
/// against a generic hyperplane from factor m). Throws BadParameter if the
/// expected dimension is not one.
std::vector<BigInt> multidegree_tuple(const AlgebraShape& shape);

/// {"n":..,"r":..,"terms":[{"exp":[..],"coeff":"..."}]}, terms in
/// lexicographic exponent order.
std::string to_json(const ChowClass& c);
ChowClass chow_from_json(const std::string& text);

/// Human form, highest monomial first: "4ε1ε2ε3+3ε1ε2ε4+...", "20ε1^3ε2^3".
std::string to_text(const ChowClass& c);

}  // namespace ptscheme

#endif
