#include "ptscheme/field.hpp"

#include <charconv>

#include "ptscheme/error.hpp"

namespace ptscheme {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r = value % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

void require_same(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field()))
    throw Error(ErrorCode::FieldMismatch, a.field().to_string() + " vs " + b.field().to_string());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw Error(ErrorCode::BadParameter, std::to_string(p) + " is not a prime below 2^31");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    std::uint64_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return prime(p);
  }
  throw Error(ErrorCode::ParseError, "field must be Q or Fp:<p>, got '" + std::string(text) + "'");
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(modulus_);
}

Scalar::Scalar(const Field& field, long value) : Scalar(field, Rational(value)) {}

Scalar::Scalar(const Field& field, const Rational& value) : field_(field) {
  if (field.is_rational()) {
    rational_ = value;
    rational_.canonicalize();
    return;
  }
  const std::uint64_t p = field.modulus();
  const std::uint64_t den = reduce(value.get_den(), p);
  if (den == 0)
    throw Error(ErrorCode::BadParameter, "denominator " + value.get_den().get_str() +
                                             " is not invertible mod " + std::to_string(p));
  residue_ = reduce(value.get_num(), p) * pow_mod(den, p - 2, p) % p;
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  Rational q;
  const std::string s(text);
  const bool ok = !s.empty() && s.find_first_not_of("-0123456789/") == std::string::npos &&
                  q.set_str(s, 10) == 0 && q.get_den() != 0;
  if (!ok) throw Error(ErrorCode::ParseError, "bad scalar '" + s + "'");
  q.canonicalize();
  return Scalar(field, q);
}

bool Scalar::is_zero() const { return field_.is_rational() ? rational_ == 0 : residue_ == 0; }

std::string Scalar::to_string() const {
  return field_.is_rational() ? rational_.get_str() : std::to_string(residue_);
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational())
    out.rational_ = -rational_;
  else
    out.residue_ = residue_ == 0 ? 0 : field_.modulus() - residue_;
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::BadParameter, "inverse of zero");
  Scalar out = *this;
  if (field_.is_rational())
    out.rational_ = 1 / rational_;
  else
    out.residue_ = pow_mod(residue_, field_.modulus() - 2, field_.modulus());
  return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  Scalar out = a;
  if (a.field_.is_rational())
    out.rational_ += b.rational_;
  else
    out.residue_ = (a.residue_ + b.residue_) % a.field_.modulus();
  return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  Scalar out = a;
  if (a.field_.is_rational())
    out.rational_ *= b.rational_;
  else
    out.residue_ = a.residue_ * b.residue_ % a.field_.modulus();
  return out;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return a.field_.is_rational() ? a.rational_ == b.rational_ : a.residue_ == b.residue_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return a.field_.is_rational() ? a.rational_ < b.rational_ : a.residue_ < b.residue_;
}

}  // namespace ptscheme
