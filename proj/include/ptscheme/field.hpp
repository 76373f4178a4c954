#ifndef PTSCHEME_FIELD_HPP
#define PTSCHEME_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ptscheme {

using Rational = mpq_class;

/// Either the rationals or a prime field F_p. Primes are limited to
/// p < 2^31 so residues multiply in 64 bits.
class Field {
public:
  static Field rationals() { return Field(0); }
  /// Throws BadParameter if p is not a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return modulus_ == 0; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::string to_string() const;

  bool operator==(const Field&) const = default;

private:
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_;
};

/// An exact field element tagged with its field. Mixing fields in one
/// operation throws FieldMismatch.
class Scalar {
public:
  /// Zero of the rationals.
  Scalar() : field_(Field::rationals()) {}
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const Rational& value);

  /// Reads "a" or "a/b" (decimal). Over F_p the denominator must be a unit.
  static Scalar parse(const Field& field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;
  /// Valid for rational scalars only.
  const Rational& rational() const noexcept { return rational_; }
  /// Valid for prime-field scalars only.
  std::uint64_t residue() const noexcept { return residue_; }

  /// Canonical decimal form: "a" or "a/b" in lowest terms, or the residue
  /// in 0..p-1.
  std::string to_string() const;

  Scalar operator-() const;
  /// Throws BadParameter on zero.
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order within a field: by value for Q, by residue for F_p.
  friend bool operator<(const Scalar& a, const Scalar& b);

private:
  Field field_;
  Rational rational_;
  std::uint64_t residue_ = 0;
};

}  // namespace ptscheme

#endif
