#include <doctest.h>

#include "ptscheme/error.hpp"
#include "ptscheme/shapes.hpp"

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

const AlgebraShape t14641(4, {2, 2, 2, 2, 2, 2}, 2);
const AlgebraShape t13431(3, {2, 2, 3, 3}, 3);
const AlgebraShape t12221(2, {3, 4}, 5);

}  // namespace

TEST_CASE("shape construction") {
  AlgebraShape s(2, {4, 3}, 5);
  CHECK(s.degrees() == std::vector<int>{3, 4});
  CHECK(s.to_string() == "r=2 d=3,4 n=5");
  CHECK(code_of([] { AlgebraShape(1, {2}, 2); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { AlgebraShape(2, {}, 2); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { AlgebraShape(2, {0}, 2); }) == ErrorCode::DegreeOutOfRange);
  CHECK(code_of([] { AlgebraShape(2, {2}, 0); }) == ErrorCode::BadParameter);
}

TEST_CASE("defect") {
  CHECK(defect(t14641) == 6);
  CHECK(defect(t12221) == 5);
  CHECK(defect(t13431) == 6);
  CHECK(code_of([] { defect(AlgebraShape(2, {3, 4}, 3)); }) == ErrorCode::DegreeOutOfRange);
}

TEST_CASE("expected dimension") {
  CHECK(expected_dim(AlgebraShape(2, {3, 4}, 4)) == 1);
  CHECK(expected_dim(t12221) == 0);
  CHECK(expected_dim(AlgebraShape(2, {2, 2, 2}, 2)) == -1);
}

TEST_CASE("stable range") {
  CHECK(is_stable(t12221));
  CHECK_FALSE(is_stable(AlgebraShape(2, {3, 4}, 3)));
  CHECK(is_stable(t14641));
}

TEST_CASE("windows") {
  using Slots = std::vector<std::pair<int, int>>;
  auto covered = [](const AlgebraShape& s) {
    Slots out;
    for (const auto& w : windows_of(s)) out.emplace_back(w.first_slot() + 1, w.last_slot() + 1);
    return out;
  };
  CHECK(covered(t12221) == Slots{{1, 3}, {2, 4}, {3, 5}, {1, 4}, {2, 5}});
  CHECK(covered(t14641) == Slots(6, {1, 2}));
  // offsets 0..n-d_j for each relation, in relation order
  CHECK(covered(t13431) == Slots{{1, 2}, {2, 3}, {1, 2}, {2, 3}, {1, 3}, {1, 3}});
  CHECK(code_of([] { windows_of(AlgebraShape(2, {3, 4}, 3)); }) == ErrorCode::DegreeOutOfRange);
}

TEST_CASE("window count equals defect and expected_dim is monotone") {
  for (int r = 2; r <= 4; ++r)
    for (int n = 1; n <= 6; ++n)
      for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) {
          AlgebraShape s(r, {a, b}, n);
          CHECK(static_cast<int>(windows_of(s).size()) == defect(s));
          for (int d = 1; d <= n; ++d)
            CHECK(expected_dim(s.with_relation(d)) == expected_dim(s) - (n - d + 1));
        }
}

TEST_CASE("zero-dimensional truncation index") {
  CHECK(zero_dim_n(2, {3, 4}) == 5);
  CHECK(zero_dim_n(3, {2, 2, 3, 3}) == 3);
  CHECK(zero_dim_n(4, {2, 2, 2, 2, 2, 2}) == 2);
  CHECK_FALSE(zero_dim_n(3, {2, 2}).has_value());   // s <= r-1
  CHECK_FALSE(zero_dim_n(3, {2, 2, 2, 3}).has_value());  // 5/2
  CHECK_FALSE(zero_dim_n(2, {2, 2, 3}).has_value());     // n = 2 < 3
}

TEST_CASE("Gorenstein helper") {
  CHECK(gorenstein_n(7) == 5);
  CHECK(gorenstein_n(4) == 2);
  CHECK(gorenstein_n(5) == 3);
  CHECK(code_of([] { gorenstein_n(2); }) == ErrorCode::BadParameter);
  CHECK(*zero_dim_n(4, t14641.degrees()) == gorenstein_n(4));
  CHECK(*zero_dim_n(3, t13431.degrees()) == gorenstein_n(5));
  CHECK(*zero_dim_n(2, t12221.degrees()) == gorenstein_n(7));
}

TEST_CASE("shape parsing") {
  CHECK(parse_shape("r=2 d=3,4 n=5") == t12221);
  CHECK(parse_shape("n=5  r=2 d=4,3") == t12221);
  CHECK(parse_shape_json(R"({"r":2,"d":[3,4],"n":5})") == t12221);
  CHECK(parse_shape_json(shape_to_json(t13431)) == t13431);
  CHECK(code_of([] { parse_shape("r=2 d=3,x n=5"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_shape("r=2 n=5"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_shape("r=2 d=3,,4 n=5"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_shape("q=2 d=3 n=5"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_shape_json(R"({"r":2})"); }) == ErrorCode::ParseError);
}
