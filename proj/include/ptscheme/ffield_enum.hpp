#ifndef PTSCHEME_FFIELD_ENUM_HPP
#define PTSCHEME_FFIELD_ENUM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ptscheme/relations.hpp"
#include "ptscheme/shapes.hpp"

namespace ptscheme {

inline constexpr std::uint64_t kDefaultScanBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultMaxPrime = 13;

/// Limits for brute-force scans over (P^{r-1}(F_p))^n.
struct ScanLimits {
  std::uint64_t budget = kDefaultScanBudget;
  std::uint64_t max_prime = kDefaultMaxPrime;
};

/// (p^r - 1)/(p - 1), saturating.
std::uint64_t projective_space_size(int generators, std::uint64_t p);

/// All points of P^{r-1}(F_p) in ProjectivePoint order: (1:0), (1:1), ...,
/// (0:1). Throws BudgetExceeded past limits.budget points and BadParameter
/// for p above limits.max_prime or not prime.
std::vector<ProjectivePoint> enumerate_projective_space(int generators, std::uint64_t p, const ScanLimits& limits = {});

/// Every n-tuple of F_p-points on which all windows of all relations vanish,
/// in lexicographic order. Relations must live over F_p (FieldMismatch) on
/// `generators` variables (DimensionMismatch). Throws BudgetExceeded when
/// |P^{r-1}(F_p)|^n exceeds the budget.
std::vector<PointTuple> enumerate_gamma(std::span<const MultilinearRelation> relations, int generators, int slots,
                                        std::uint64_t p, const ScanLimits& limits = {});

enum class CompareStatus { Match, Mismatch, Skipped };

std::string to_string(CompareStatus status);

struct CompareReport {
  CompareStatus status = CompareStatus::Skipped;
  std::uint64_t p = 0;
  std::optional<std::uint64_t> seed;
  std::string reason;
  std::vector<PointTuple> scanned;   // from enumerate_gamma
  std::vector<PointTuple> realized;  // from realize_points

  std::size_t count() const noexcept { return scanned.size(); }
};

/// Scans Gamma_n(F_p) for the given split relations and compares with the
/// realized point set. Throws GeneralPositionViolation if the pooled
/// factors are not in general position over F_p.
CompareReport compare_with_oracle(std::span<const SplitRelation> splits, const AlgebraShape& shape, std::uint64_t p,
                                  const ScanLimits& limits = {});

/// Draws split relations over F_p from `seed` and compares; reports Skipped
/// (with the reason) when no general-position configuration is available.
CompareReport compare_seeded(const AlgebraShape& shape, std::uint64_t p, std::uint64_t seed,
                             const ScanLimits& limits = {});

/// {"status":"MATCH|MISMATCH|SKIPPED","count":..,"p":..,"seed":..,"reason":..,
/// "tuples":[..]} with tuples only when requested.
std::string to_json(const CompareReport& report, bool include_tuples);

}  // namespace ptscheme

#endif
