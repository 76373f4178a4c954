#include "ptscheme/verify.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "ptscheme/chow.hpp"
#include "ptscheme/error.hpp"
#include "ptscheme/ffield_enum.hpp"
#include "ptscheme/split_oracle.hpp"

namespace ptscheme {

namespace {

// Nondecreasing degree lists of length 1..max_relations.
void for_each_degree_list(const SweepBounds& b, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> current;
  std::function<void(int)> extend = [&](int lowest) {
    if (!current.empty()) visit(current);
    if (static_cast<int>(current.size()) == b.max_relations) return;
    for (int d = lowest; d <= b.max_degree; ++d) {
      current.push_back(d);
      extend(d);
      current.pop_back();
    }
  };
  extend(b.min_degree);
}

bool within_hypothesis(const AlgebraShape& shape) { return expected_dim(shape) >= 0; }

std::string describe(const AlgebraShape& shape) { return "[" + shape.to_string() + "]"; }

}  // namespace

std::vector<AlgebraShape> sweep_shapes(const SweepBounds& bounds) {
  std::vector<AlgebraShape> shapes;
  for (int r = bounds.min_generators; r <= bounds.max_generators; ++r)
    for_each_degree_list(bounds, [&](const std::vector<int>& degrees) {
      for (int n = degrees.back(); n <= bounds.max_slots; ++n) shapes.emplace_back(r, degrees, n);
    });
  return shapes;
}

bool census_matches_chow(const AlgebraShape& shape) {
  const auto census = profile_census(shape);
  const auto chow = gamma_class(shape);
  if (census.size() != chow.term_count()) return false;
  for (const auto& [profile, count] : census) {
    auto it = chow.terms().find(profile);
    if (it == chow.terms().end() || it->second != BigInt(static_cast<unsigned long>(count))) return false;
  }
  return true;
}

SweepOutcome oracle_equivalence_sweep(const SweepBounds& bounds) {
  SweepOutcome out;
  for (const auto& shape : sweep_shapes(bounds)) {
    if (!within_hypothesis(shape)) {
      ++out.outside;
      continue;
    }
    if (raw_choice_count(shape) > bounds.max_raw_choices) {
      ++out.skipped;
      continue;
    }
    ++out.checked;
    if (!census_matches_chow(shape)) out.failures.push_back(describe(shape) + " census differs from Chow class");
  }
  return out;
}

SweepOutcome nonvanishing_sweep(const SweepBounds& bounds) {
  SweepOutcome out;
  for (const auto& shape : sweep_shapes(bounds)) {
    const auto c = gamma_class(shape);
    if (!within_hypothesis(shape)) {
      ++out.outside;
      if (c.is_zero()) ++out.outside_zero;
      continue;
    }
    ++out.checked;
    if (c.is_zero()) {
      out.failures.push_back(describe(shape) + " class vanishes");
      continue;
    }
    for (const auto& [e, coeff] : c.terms())
      if (coeff <= 0) {
        out.failures.push_back(describe(shape) + " has a non-positive coefficient");
        break;
      }
    if (c.reversed() != c) out.failures.push_back(describe(shape) + " is not reversal-symmetric");
  }
  return out;
}

SweepOutcome append_identity_sweep(const SweepBounds& bounds) {
  SweepOutcome out;
  for (const auto& shape : sweep_shapes(bounds)) {
    if (!within_hypothesis(shape)) {
      ++out.outside;
      continue;
    }
    ++out.checked;
    const int n = shape.slots();
    ChowClass full(n, shape.generators());
    for (int m = 0; m < n; ++m) full = full + ChowClass::hyperplane(n, shape.generators(), m);
    if (gamma_class(shape.with_relation(n)) != gamma_class(shape) * full)
      out.failures.push_back(describe(shape) + " append identity fails");
  }
  return out;
}

SweepOutcome ring_law_check(std::uint64_t seed, int samples) {
  SweepOutcome out;
  std::mt19937_64 rng(seed);
  auto random_class = [&](int n, int r) {
    ChowClass::Terms terms;
    const int count = static_cast<int>(rng() % 6);
    for (int t = 0; t < count; ++t) {
      Exponents e(n);
      for (auto& x : e) x = static_cast<int>(rng() % r);
      terms[e] += static_cast<long>(rng() % 11) - 5;
    }
    return ChowClass(n, r, std::move(terms));
  };
  for (int i = 0; i < samples; ++i) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int r = 2 + static_cast<int>(rng() % 3);
    const auto a = random_class(n, r), b = random_class(n, r), c = random_class(n, r);
    const ChowClass zero(n, r);
    ++out.checked;
    if (a + b != b + a || a * b != b * a) out.failures.push_back("commutativity");
    if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c)) out.failures.push_back("associativity");
    if (a * (b + c) != a * b + a * c) out.failures.push_back("distributivity");
    if (!(a * zero).is_zero() || a + zero != a) out.failures.push_back("zero");
    for (const auto* x : {&a, &b, &c}) {
      const ChowClass square = *x * *x;
      for (const auto& [e, coeff] : square.terms())
        for (int v : e)
          if (v >= r) out.failures.push_back("truncation");
    }
  }
  return out;
}

namespace {

CheckLine sweep_line(const std::string& label, const SweepOutcome& outcome) {
  std::ostringstream detail;
  detail << outcome.checked << " shapes";
  if (outcome.skipped) detail << ", " << outcome.skipped << " above choice budget";
  if (outcome.outside)
  {
    detail << ", " << outcome.outside << " outside lemma hypothesis";
    if (outcome.outside_zero) detail << " (" << outcome.outside_zero << " with zero class)";
  }
  if (!outcome.ok()) detail << "; first failure: " << outcome.failures.front();
  return {label, outcome.ok(), detail.str()};
}

template <typename F>
CheckLine guarded(const std::string& label, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {label, false, e.what()};
  }
}

}  // namespace

std::vector<CheckLine> run_verify_suite(const SweepBounds& bounds, std::uint64_t seed) {
  const AlgebraShape t14641(4, {2, 2, 2, 2, 2, 2}, 2);
  const AlgebraShape t13431(3, {2, 2, 3, 3}, 3);
  const AlgebraShape t12221(2, {3, 4}, 5);
  const AlgebraShape t12221_n4(2, {3, 4}, 4);

  std::vector<CheckLine> lines;
  auto count_line = [&](const std::string& name, const AlgebraShape& shape, long expected) {
    lines.push_back(guarded(name, [&]() -> CheckLine {
      const BigInt chow = point_count(shape);
      const auto choices = count_choice_functions(shape);
      const bool ok = chow == expected && BigInt(static_cast<unsigned long>(choices)) == chow;
      return {name + ":" + std::to_string(expected), ok,
              "chow " + chow.get_str() + ", choice functions " + std::to_string(choices)};
    }));
  };
  count_line("12221", t12221, 17);
  count_line("13431", t13431, 19);
  count_line("14641", t14641, 20);

  lines.push_back(guarded("12221-n4:(4,3,3,4)", [&]() -> CheckLine {
    const auto tuple = multidegree_tuple(t12221_n4);
    const bool ok = tuple == std::vector<BigInt>{4, 3, 3, 4} &&
                    to_text(gamma_class(t12221_n4)) == "4ε1ε2ε3+3ε1ε2ε4+3ε1ε3ε4+4ε2ε3ε4";
    return {"12221-n4:(4,3,3,4)", ok, to_text(gamma_class(t12221_n4))};
  }));

  lines.push_back(guarded("gorenstein", [&]() -> CheckLine {
    const bool ok = gorenstein_n(4) == 2 && gorenstein_n(5) == 3 && gorenstein_n(7) == 5 &&
                    zero_dim_n(4, t14641.degrees()) == 2 && zero_dim_n(3, t13431.degrees()) == 3 &&
                    zero_dim_n(2, t12221.degrees()) == 5;
    return {"gorenstein", ok, "n = ell - 2 for ell = 4, 5, 7"};
  }));

  lines.push_back(sweep_line("chow-ring-laws", ring_law_check(seed, 200)));
  lines.push_back(sweep_line("oracle-equivalence", oracle_equivalence_sweep(bounds)));
  SweepBounds extended = bounds;
  extended.min_degree = 1;
  lines.push_back(sweep_line("nonvanishing", nonvanishing_sweep(extended)));
  lines.push_back(sweep_line("append-identity", append_identity_sweep(extended)));

  for (const auto* shape : {&t12221, &t13431, &t14641}) {
    const std::string label = "realize " + shape->to_string();
    lines.push_back(guarded(label, [&]() -> CheckLine {
      const auto splits = random_split_relations(*shape, seed, Field::rationals());
      const auto tuples = realize_points(splits, *shape);
      std::vector<MultilinearRelation> tensors;
      for (const auto& s : splits) tensors.push_back(split_to_tensor(s));
      bool members = true;
      for (const auto& t : tuples) members = members && is_member(tensors, shape->slots(), t);
      const bool ok = members && BigInt(static_cast<unsigned long>(tuples.size())) == point_count(*shape);
      return {label, ok, std::to_string(tuples.size()) + " distinct tuples" + (members ? "" : ", non-member found")};
    }));
  }

  auto ff_line = [&](const AlgebraShape& shape, std::uint64_t p, bool skip_ok) {
    const std::string label = "ff-enum " + shape.to_string() + " F" + std::to_string(p);
    lines.push_back(guarded(label, [&]() -> CheckLine {
      const auto report = compare_seeded(shape, p, seed);
      const bool ok = report.status == CompareStatus::Match ||
                      (skip_ok && report.status == CompareStatus::Skipped);
      std::string detail = to_string(report.status) + ", " + std::to_string(report.count()) + " tuples";
      if (!report.reason.empty()) detail += " (" + report.reason + ")";
      return {label, ok, detail};
    }));
  };
  ff_line(t12221, 7, false);
  ff_line(t13431, 5, true);
  return lines;
}

}  // namespace ptscheme
