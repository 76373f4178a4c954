#ifndef PTSCHEME_VERIFY_HPP
#define PTSCHEME_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ptscheme/shapes.hpp"

namespace ptscheme {

/// Ranges for the shape sweeps: every r in [min_generators, max_generators],
/// every multiset of 1..max_relations degrees from [min_degree, max_degree],
/// and every n from the largest degree up to max_slots.
struct SweepBounds {
  int min_generators = 2;
  int max_generators = 4;
  int min_degree = 2;
  int max_degree = 4;
  int max_relations = 6;
  int max_slots = 6;
  std::uint64_t max_raw_choices = 1'000'000;
};

std::vector<AlgebraShape> sweep_shapes(const SweepBounds& bounds);

struct SweepOutcome {
  std::size_t checked = 0;
  std::size_t skipped = 0;   // too many raw choice functions
  std::size_t outside = 0;   // defect > n(r-1)
  std::size_t outside_zero = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// profile_census agrees term by term with gamma_class.
bool census_matches_chow(const AlgebraShape& shape);

/// Census against Chow class for every sweep shape with defect <= n(r-1)
/// and at most max_raw_choices choice functions.
SweepOutcome oracle_equivalence_sweep(const SweepBounds& bounds);

/// gamma_class is nonzero with positive coefficients and reversal-symmetric
/// whenever defect <= n(r-1). Over-determined shapes are tallied as outside
/// the hypothesis, not as failures.
SweepOutcome nonvanishing_sweep(const SweepBounds& bounds);

/// gamma_class(d + {n}) = gamma_class(d) * (e_1 + ... + e_n).
SweepOutcome append_identity_sweep(const SweepBounds& bounds);

/// Commutativity, associativity, distributivity and the absorbing zero on
/// seeded random classes.
SweepOutcome ring_law_check(std::uint64_t seed, int samples);

struct CheckLine {
  std::string label;
  bool passed = false;
  std::string detail;
};

/// The full invariant suite: headline counts, ring laws, sweeps, split
/// realizations and finite-field comparisons, with realizations drawn from
/// `seed`.
std::vector<CheckLine> run_verify_suite(const SweepBounds& bounds, std::uint64_t seed);

}  // namespace ptscheme

#endif
