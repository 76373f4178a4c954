#include <doctest.h>

#include "ptscheme/error.hpp"
#include "ptscheme/field.hpp"
#include "ptscheme/linalg.hpp"

using namespace ptscheme;

TEST_CASE("field parsing") {
  CHECK(Field::parse("Q").is_rational());
  CHECK(Field::parse("Fp:7").modulus() == 7);
  CHECK_THROWS_AS(Field::parse("Fp:8"), Error);
  CHECK_THROWS_AS(Field::parse("F7"), Error);
  CHECK(Field::prime(13).to_string() == "Fp:13");
}

TEST_CASE("rational scalars") {
  const Field q = Field::rationals();
  const auto a = Scalar::parse(q, "2/4");
  CHECK(a.to_string() == "1/2");
  CHECK((a + Scalar(q, 1)).to_string() == "3/2");
  CHECK((a * a).to_string() == "1/4");
  CHECK((Scalar(q, 1) / Scalar(q, 3)).to_string() == "1/3");
  CHECK(Scalar::parse(q, "-6/3").to_string() == "-2");
  CHECK_THROWS_AS(Scalar::parse(q, "1/0"), Error);
  CHECK_THROWS_AS(Scalar::parse(q, "abc"), Error);
  CHECK_THROWS_AS(Scalar(q, 0).inverse(), Error);
}

TEST_CASE("prime field scalars") {
  const Field f7 = Field::prime(7);
  CHECK(Scalar(f7, -1).to_string() == "6");
  CHECK(Scalar::parse(f7, "1/2").to_string() == "4");
  CHECK((Scalar(f7, 3) * Scalar(f7, 5)).residue() == 1);
  CHECK((Scalar(f7, 3).inverse()).residue() == 5);
  CHECK((-Scalar(f7, 0)).is_zero());
  CHECK_THROWS_AS(Scalar::parse(f7, "1/7"), Error);
  for (long a = 1; a < 7; ++a) CHECK((Scalar(f7, a) * Scalar(f7, a).inverse()).residue() == 1);
}

TEST_CASE("mixing fields is an error") {
  try {
    (void)(Scalar(Field::prime(5), 1) + Scalar(Field::rationals(), 1));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("rank and nullspace") {
  const Field q = Field::rationals();
  auto s = [&](long v) { return Scalar(q, v); };
  Matrix m{{s(1), s(2), s(3)}, {s(2), s(4), s(6)}};
  CHECK(rank(m) == 1);
  const auto kernel = nullspace(m, 3, q);
  REQUIRE(kernel.size() == 2);
  for (const auto& v : kernel) CHECK((s(1) * v[0] + s(2) * v[1] + s(3) * v[2]).is_zero());

  Matrix hyperplanes{{s(1), s(1), s(0)}, {s(0), s(1), s(-1)}};
  const auto point = nullspace(hyperplanes, 3, q);
  REQUIRE(point.size() == 1);
  CHECK(point[0][0].to_string() == "-1");
  CHECK(point[0][1].to_string() == "1");
  CHECK(point[0][2].to_string() == "1");
  CHECK(nullspace({}, 2, q).size() == 2);
}
