#include <doctest.h>

#include <map>
#include <random>

#include "ptscheme/chow.hpp"
#include "ptscheme/error.hpp"

using namespace ptscheme;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Overflow;
}

ChowClass e(int n, int r, int slot) { return ChowClass::hyperplane(n, r, slot); }

// Independent route: expand the product of window sums in Z[e_1..e_n]
// without truncation, then drop every monomial with an exponent >= r.
std::map<Exponents, BigInt> expand_then_truncate(const AlgebraShape& shape) {
  std::map<Exponents, BigInt> poly{{Exponents(shape.slots(), 0), 1}};
  for (const auto& w : windows_of(shape)) {
    std::map<Exponents, BigInt> next;
    for (const auto& [exp, c] : poly)
      for (int slot = w.offset; slot < w.offset + w.degree; ++slot) {
        Exponents bumped = exp;
        ++bumped[slot];
        next[bumped] += c;
      }
    poly = std::move(next);
  }
  std::map<Exponents, BigInt> out;
  for (const auto& [exp, c] : poly) {
    bool keep = true;
    for (int x : exp) keep = keep && x < shape.generators();
    if (keep && c != 0) out.emplace(exp, c);
  }
  return out;
}

const AlgebraShape t14641(4, {2, 2, 2, 2, 2, 2}, 2);
const AlgebraShape t13431(3, {2, 2, 3, 3}, 3);
const AlgebraShape t12221(2, {3, 4}, 5);
const AlgebraShape t12221_n4(2, {3, 4}, 4);

}  // namespace

TEST_CASE("window classes") {
  CHECK(window_class(AlgebraShape(2, {3, 4}, 5), Window{0, 0, 3}) == e(5, 2, 0) + e(5, 2, 1) + e(5, 2, 2));
  CHECK(window_class(t14641, Window{0, 0, 2}) == e(2, 4, 0) + e(2, 4, 1));
  CHECK(window_class(AlgebraShape(2, {2}, 2), Window{0, 0, 2}) == e(2, 2, 0) + e(2, 2, 1));
  CHECK(code_of([] { window_class(AlgebraShape(2, {3, 4}, 5), Window{0, 3, 3}); }) == ErrorCode::InvalidWindow);
}

TEST_CASE("addition") {
  const auto e1 = e(3, 2, 0);
  CHECK((e1 + e1).coefficient({1, 0, 0}) == 2);
  CHECK((e1 + BigInt(-1) * e1).is_zero());
  const auto sum = (e1 + e(3, 2, 1)) + e(3, 2, 2);
  CHECK(sum.term_count() == 3);
  CHECK(to_text(sum) == "ε1+ε2+ε3");
  CHECK(code_of([] { return e(3, 2, 0) + e(3, 3, 0); }) == ErrorCode::RingMismatch);
  CHECK(code_of([] { return e(3, 2, 0) * e(2, 2, 0); }) == ErrorCode::RingMismatch);
}

TEST_CASE("multiplication truncates") {
  CHECK((e(1, 2, 0) * e(1, 2, 0)).is_zero());
  const auto s = e(2, 2, 0) + e(2, 2, 1);
  CHECK(s * s == BigInt(2) * (e(2, 2, 0) * e(2, 2, 1)));
  auto l = e(2, 4, 0) + e(2, 4, 1);
  auto p = ChowClass::one(2, 4);
  for (int i = 0; i < 6; ++i) p = p * l;
  CHECK(p.term_count() == 1);
  CHECK(p.coefficient({3, 3}) == 20);
}

TEST_CASE("coefficient lookup") {
  const auto s = e(2, 2, 0) + e(2, 2, 1);
  CHECK(s.coefficient({0, 1}) == 1);
  CHECK(s.coefficient({1, 1}) == 0);
  CHECK(code_of([&] { s.coefficient({2, 0}); }) == ErrorCode::BadExponent);
  CHECK(code_of([&] { s.coefficient({0}); }) == ErrorCode::BadExponent);
  CHECK(code_of([] { ChowClass(2, 2, {{{0, 2}, BigInt(1)}}); }) == ErrorCode::BadExponent);
}

TEST_CASE("gamma class of the headline types") {
  const auto c4 = gamma_class(t12221_n4);
  CHECK(to_text(c4) == "4ε1ε2ε3+3ε1ε2ε4+3ε1ε3ε4+4ε2ε3ε4");
  CHECK(c4.coefficient({1, 1, 1, 0}) == 4);
  CHECK(c4.coefficient({1, 1, 0, 1}) == 3);
  CHECK(c4.coefficient({1, 0, 1, 1}) == 3);
  CHECK(c4.coefficient({0, 1, 1, 1}) == 4);
  CHECK(c4.term_count() == 4);

  CHECK(to_text(gamma_class(t14641)) == "20ε1^3ε2^3");
  CHECK(to_text(gamma_class(AlgebraShape(2, {2}, 2))) == "ε1+ε2");
  CHECK(code_of([] { gamma_class(AlgebraShape(2, {3}, 2)); }) == ErrorCode::DegreeOutOfRange);
}

TEST_CASE("point counts") {
  CHECK(point_count(t14641) == 20);
  CHECK(point_count(t13431) == 19);
  CHECK(point_count(t12221) == 17);
  CHECK(code_of([] { point_count(t12221_n4); }) == ErrorCode::DefectMismatch);
  CHECK(code_of([] { point_count(AlgebraShape(2, {3, 4}, 3)); }) == ErrorCode::NotStable);
}

TEST_CASE("multidegrees") {
  CHECK(multidegree_tuple(t12221_n4) == std::vector<BigInt>{4, 3, 3, 4});
  const auto zero_dim = multidegree_table(t12221);
  CHECK(zero_dim.size() == 1);
  CHECK(zero_dim.at({1, 1, 1, 1, 1}) == 17);
  const auto single = multidegree_table(AlgebraShape(2, {2}, 2));
  CHECK(single == ChowClass::Terms{{{1, 0}, 1}, {{0, 1}, 1}});
  CHECK(code_of([] { multidegree_table(AlgebraShape(2, {2, 2, 2}, 2)); }) == ErrorCode::NegativeExpectedDim);
  CHECK(code_of([] { multidegree_tuple(t12221); }) == ErrorCode::BadParameter);
}

TEST_CASE("zero classes") {
  CHECK_FALSE(gamma_class(t12221).is_zero());
  CHECK((e(2, 2, 0) * e(2, 2, 0)).is_zero());
  // (e1+e2)^3 with e1^2 = e2^2 = 0: every monomial has total degree 3 > 2.
  CHECK(gamma_class(AlgebraShape(2, {2, 2, 2}, 2)).is_zero());
}

TEST_CASE("gamma class matches expand-then-truncate") {
  for (int r = 2; r <= 4; ++r)
    for (int n = 1; n <= 5; ++n)
      for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
          for (int c = b; c <= n; ++c) {
            const AlgebraShape s(r, {a, b, c}, n);
            CAPTURE(s.to_string());
            CHECK(gamma_class(s).terms() == expand_then_truncate(s));
          }
}

TEST_CASE("append identity and reversal symmetry") {
  for (int n = 2; n <= 5; ++n)
    for (int r = 2; r <= 3; ++r) {
      const AlgebraShape s(r, {2, n}, n);
      ChowClass full(n, r);
      for (int m = 0; m < n; ++m) full = full + e(n, r, m);
      CHECK(gamma_class(s.with_relation(n)) == gamma_class(s) * full);
      CHECK(gamma_class(s).reversed() == gamma_class(s));
    }
}

TEST_CASE("ring laws on random classes") {
  std::mt19937_64 rng(7);
  auto random_class = [&](int n, int r) {
    ChowClass::Terms terms;
    for (int t = 0; t < 5; ++t) {
      Exponents x(n);
      for (auto& v : x) v = static_cast<int>(rng() % r);
      terms[x] += static_cast<long>(rng() % 9) - 4;
    }
    return ChowClass(n, r, terms);
  };
  for (int i = 0; i < 100; ++i) {
    const auto a = random_class(3, 3), b = random_class(3, 3), c = random_class(3, 3);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * ChowClass(3, 3)).is_zero());
    for (const auto& [x, coeff] : (a * b).terms()) {
      CHECK(coeff != 0);
      for (int v : x) CHECK(v < 3);
    }
  }
}

TEST_CASE("JSON round trip and ordering") {
  const auto c = gamma_class(t12221_n4);
  const auto text = to_json(c);
  CHECK(text ==
        R"({"n":4,"r":2,"terms":[{"coeff":"4","exp":[0,1,1,1]},{"coeff":"3","exp":[1,0,1,1]},)"
        R"({"coeff":"3","exp":[1,1,0,1]},{"coeff":"4","exp":[1,1,1,0]}]})");
  CHECK(chow_from_json(text) == c);
  CHECK(code_of([] { chow_from_json(R"({"n":1,"r":2,"terms":[{"exp":[0],"coeff":"x"}]})"); }) ==
        ErrorCode::ParseError);
}

TEST_CASE("coefficients are unbounded") {
  // (3e1 + 3e2)^80 = 3^80 C(80,40) e1^40 e2^40 + ...
  auto l = BigInt(3) * (e(2, 41, 0) + e(2, 41, 1));
  auto p = ChowClass::one(2, 41);
  for (int i = 0; i < 80; ++i) p = p * l;
  BigInt expected;
  mpz_bin_uiui(expected.get_mpz_t(), 80, 40);
  BigInt pow3;
  mpz_ui_pow_ui(pow3.get_mpz_t(), 3, 80);
  CHECK(p.coefficient({40, 40}) == expected * pow3);
  CHECK(p.coefficient({40, 40}) > BigInt("18446744073709551615"));
}
