// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "ptscheme/chow.hpp"
#include "ptscheme/error.hpp"
#include "ptscheme/ffield_enum.hpp"
#include "ptscheme/split_oracle.hpp"
#include "ptscheme/verify.hpp"

using namespace ptscheme;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

const AlgebraShape t14641(4, {2, 2, 2, 2, 2, 2}, 2);
const AlgebraShape t13431(3, {2, 2, 3, 3}, 3);
const AlgebraShape t12221(2, {3, 4}, 5);
const AlgebraShape t12221_n4(2, {3, 4}, 4);

Outcome exact_count(const AlgebraShape& shape, long expected) {
  const BigInt count = point_count(shape);
  return {count == expected, "point_count = " + count.get_str()};
}

Outcome realization(const AlgebraShape& shape, std::uint64_t seed) {
  const auto splits = random_split_relations(shape, seed, Field::rationals());
  const auto tuples = realize_points(splits, shape);
  std::vector<MultilinearRelation> tensors;
  for (const auto& s : splits) tensors.push_back(split_to_tensor(s));
  std::size_t members = 0;
  for (const auto& t : tuples) members += is_member(tensors, shape.slots(), t);
  const bool distinct = std::adjacent_find(tuples.begin(), tuples.end()) == tuples.end();
  const bool ok = distinct && members == tuples.size() &&
                  BigInt(static_cast<unsigned long>(tuples.size())) == point_count(shape);
  return {ok, std::to_string(tuples.size()) + " tuples, " + std::to_string(members) + " members" +
                  (distinct ? "" : ", duplicates")};
}

std::string sweep_detail(const SweepOutcome& o) {
  std::string s = std::to_string(o.checked) + " shapes checked";
  if (o.skipped) s += ", " + std::to_string(o.skipped) + " above 10^6 choice functions";
  if (!o.ok()) s += "; " + o.failures.front();
  return s;
}

}  // namespace

int main() {
  SweepBounds sweep;  // r in 2..4, d_j in 2..4, s <= 6, n <= 6, <= 10^6 choice functions
  SweepBounds extended = sweep;
  extended.min_degree = 1;

  const std::vector<Criterion> criteria{
      {1, "type 14641 point count = 20", 1.0, [] { return exact_count(t14641, 20); }},
      {2, "type 13431 point count = 19", 1.0, [] { return exact_count(t13431, 19); }},
      {3, "type 12221 point count = 17", 1.0, [] { return exact_count(t12221, 17); }},
      {4, "type 12221 n=4 class and multidegree (4,3,3,4)", 1.0,
       [] {
         const auto c = gamma_class(t12221_n4);
         const ChowClass expected(4, 2,
                                  {{{1, 1, 1, 0}, BigInt(4)},
                                   {{1, 1, 0, 1}, BigInt(3)},
                                   {{1, 0, 1, 1}, BigInt(3)},
                                   {{0, 1, 1, 1}, BigInt(4)}});
         const bool ok = c == expected && multidegree_tuple(t12221_n4) == std::vector<BigInt>{4, 3, 3, 4};
         return Outcome{ok, to_text(c)};
       }},
      {5, "oracle equivalence sweep", 120.0,
       [&] {
         const auto o = oracle_equivalence_sweep(sweep);
         return Outcome{o.ok() && o.checked > 0, sweep_detail(o)};
       }},
      {6, "nonvanishing sweep and append identity (d_j >= 1)", 120.0,
       [&] {
         const auto nv = nonvanishing_sweep(extended);
         const auto ap = append_identity_sweep(extended);
         return Outcome{nv.ok() && ap.ok() && nv.checked > 0,
                        "nonvanishing: " + sweep_detail(nv) + "; append: " + sweep_detail(ap)};
       }},
      {7, "split realization, three types", 30.0,
       [] {
         Outcome all{true, ""};
         for (const auto* s : {&t14641, &t13431, &t12221}) {
           const auto start = std::chrono::steady_clock::now();
           auto o = realization(*s, 42);
           const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
           if (secs >= 10.0) o.passed = false;
           all.passed = all.passed && o.passed;
           all.detail += (all.detail.empty() ? "" : "; ") + s->to_string() + ": " + o.detail;
         }
         return all;
       }},
      {8, "type 12221 over F_7 equals realized set (17 tuples)", 30.0,
       [] {
         const auto report = compare_seeded(t12221, 7, 42);
         return Outcome{report.status == CompareStatus::Match && report.count() == 17,
                        to_string(report.status) + ", " + std::to_string(report.count()) + " tuples"};
       }},
      {9, "Gorenstein helper", 1.0,
       [] {
         const bool ok = gorenstein_n(4) == 2 && gorenstein_n(5) == 3 && gorenstein_n(7) == 5 &&
                         zero_dim_n(4, t14641.degrees()) == gorenstein_n(4) &&
                         zero_dim_n(3, t13431.degrees()) == gorenstein_n(5) &&
                         zero_dim_n(2, t12221.degrees()) == gorenstein_n(7);
         return Outcome{ok, "n = 2, 3, 5"};
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const Error& e) {
      o = {false, e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool passed = o.passed && in_time;
    if (!passed) ++failures;
    std::cout << (passed ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << "  (" << o.detail << "; "
              << secs << " s, limit " << c.limit_seconds << " s" << (in_time ? "" : ", TOO SLOW") << ")\n";
  }
  std::cout << (failures ? "acceptance: FAILED " + std::to_string(failures) : std::string("acceptance: all passed"))
            << '\n';
  return failures ? 1 : 0;
}
