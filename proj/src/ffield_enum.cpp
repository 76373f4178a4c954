#include "ptscheme/ffield_enum.hpp"

#include <limits>

#include <json.hpp>

#include "ptscheme/error.hpp"
#include "ptscheme/split_oracle.hpp"

namespace ptscheme {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

Field checked_field(std::uint64_t p, const ScanLimits& limits) {
  if (p > limits.max_prime)
    throw Error(ErrorCode::BadParameter, "p=" + std::to_string(p) + " above the configured bound " +
                                             std::to_string(limits.max_prime));
  return Field::prime(p);
}

// A relation flattened to residues: each term is (coefficient, letters).
struct ResidueRelation {
  int degree;
  std::vector<std::pair<std::uint64_t, std::vector<int>>> terms;
};

}  // namespace

std::uint64_t projective_space_size(int generators, std::uint64_t p) {
  // 1 + p + ... + p^{r-1}
  std::uint64_t total = 0, power = 1;
  for (int k = 0; k < generators; ++k) {
    if (total > kSaturated - power) return kSaturated;
    total += power;
    power = saturating_mul(power, p);
  }
  return total;
}

std::vector<ProjectivePoint> enumerate_projective_space(int generators, std::uint64_t p, const ScanLimits& limits) {
  if (generators < 1) throw Error(ErrorCode::BadParameter, "need at least one coordinate");
  const Field field = checked_field(p, limits);
  const std::uint64_t size = projective_space_size(generators, p);
  if (size > limits.budget)
    throw Error(ErrorCode::BudgetExceeded, std::to_string(size) + " points exceed budget " +
                                               std::to_string(limits.budget));
  std::vector<ProjectivePoint> points;
  points.reserve(size);
  for (int lead = 0; lead < generators; ++lead) {
    // coordinates after the leading 1 run through F_p^{r-1-lead} lexicographically
    std::vector<std::uint64_t> tail(generators - lead - 1, 0);
    while (true) {
      std::vector<Scalar> coords(generators, Scalar(field, 0));
      coords[lead] = Scalar(field, 1);
      for (std::size_t t = 0; t < tail.size(); ++t) coords[lead + 1 + t] = Scalar(field, static_cast<long>(tail[t]));
      points.emplace_back(std::move(coords));
      int t = static_cast<int>(tail.size()) - 1;
      while (t >= 0 && tail[t] == p - 1) tail[t--] = 0;
      if (t < 0) break;
      ++tail[t];
    }
  }
  return points;
}

std::vector<PointTuple> enumerate_gamma(std::span<const MultilinearRelation> relations, int generators, int slots,
                                        std::uint64_t p, const ScanLimits& limits) {
  if (slots < 1) throw Error(ErrorCode::BadParameter, "need n >= 1");
  const Field field = checked_field(p, limits);
  std::uint64_t scan = 1;
  const std::uint64_t per_slot = projective_space_size(generators, p);
  for (int m = 0; m < slots; ++m) scan = saturating_mul(scan, per_slot);
  if (scan > limits.budget)
    throw Error(ErrorCode::BudgetExceeded, "scan of " + (scan == kSaturated ? std::string("> 2^64") : std::to_string(scan)) +
                                               " tuples exceeds budget " + std::to_string(limits.budget));

  std::vector<ResidueRelation> flat;
  for (const auto& f : relations) {
    if (!(f.field() == field))
      throw Error(ErrorCode::FieldMismatch, "relation over " + f.field().to_string() + ", scanning " + field.to_string());
    if (f.generators() != generators)
      throw Error(ErrorCode::DimensionMismatch, "relation on " + std::to_string(f.generators()) +
                                                    " generators, scanning r=" + std::to_string(generators));
    if (f.degree() > slots)
      throw Error(ErrorCode::DegreeOutOfRange, "relation degree " + std::to_string(f.degree()) + " exceeds n=" +
                                                   std::to_string(slots));
    ResidueRelation rr{f.degree(), {}};
    for (const auto& [word, coeff] : f.terms()) {
      std::vector<int> letters;
      for (int letter : word) letters.push_back(letter - 1);
      rr.terms.emplace_back(coeff.residue(), std::move(letters));
    }
    flat.push_back(std::move(rr));
  }

  const auto points = enumerate_projective_space(generators, p, limits);
  std::vector<std::vector<std::uint64_t>> coords;
  for (const auto& pt : points) {
    std::vector<std::uint64_t> c;
    for (const auto& x : pt.coords()) c.push_back(x.residue());
    coords.push_back(std::move(c));
  }

  // Depth-first over slots; a window is checked as soon as its last slot is set.
  std::vector<std::size_t> index(slots, 0);
  std::vector<PointTuple> found;
  auto windows_ok = [&](int last) {
    for (const auto& rel : flat) {
      const int offset = last - rel.degree + 1;
      if (offset < 0) continue;
      std::uint64_t sum = 0;
      for (const auto& [coeff, letters] : rel.terms) {
        std::uint64_t term = coeff;
        for (int t = 0; t < rel.degree && term; ++t) term = term * coords[index[offset + t]][letters[t]] % p;
        sum = (sum + term) % p;
      }
      if (sum != 0) return false;
    }
    return true;
  };
  int depth = 0;
  index[0] = 0;
  while (depth >= 0) {
    if (index[depth] == points.size()) {
      --depth;
      if (depth >= 0) ++index[depth];
      continue;
    }
    if (!windows_ok(depth)) {
      ++index[depth];
      continue;
    }
    if (depth + 1 == slots) {
      PointTuple tuple;
      for (int m = 0; m < slots; ++m) tuple.push_back(points[index[m]]);
      found.push_back(std::move(tuple));
      ++index[depth];
      continue;
    }
    index[++depth] = 0;
  }
  return found;
}

std::string to_string(CompareStatus status) {
  switch (status) {
    case CompareStatus::Match: return "MATCH";
    case CompareStatus::Mismatch: return "MISMATCH";
    case CompareStatus::Skipped: return "SKIPPED";
  }
  return "UNKNOWN";
}

CompareReport compare_with_oracle(std::span<const SplitRelation> splits, const AlgebraShape& shape, std::uint64_t p,
                                  const ScanLimits& limits) {
  const Field field = checked_field(p, limits);
  for (const auto& s : splits)
    if (!(s.field() == field))
      throw Error(ErrorCode::FieldMismatch, "split relation over " + s.field().to_string() + ", comparing over " +
                                                field.to_string());
  if (!check_general_position(pooled_factors(splits), shape.generators()))
    throw Error(ErrorCode::GeneralPositionViolation, "pooled linear forms are not in general position over " +
                                                         field.to_string());
  CompareReport report;
  report.p = p;
  report.realized = realize_points(splits, shape);
  std::vector<MultilinearRelation> tensors;
  for (const auto& s : splits) tensors.push_back(split_to_tensor(s));
  report.scanned = enumerate_gamma(tensors, shape.generators(), shape.slots(), p, limits);
  if (report.scanned == report.realized) {
    report.status = CompareStatus::Match;
  } else {
    report.status = CompareStatus::Mismatch;
    report.reason = "scan found " + std::to_string(report.scanned.size()) + " tuples, realization " +
                    std::to_string(report.realized.size());
  }
  return report;
}

CompareReport compare_seeded(const AlgebraShape& shape, std::uint64_t p, std::uint64_t seed, const ScanLimits& limits) {
  const Field field = checked_field(p, limits);
  std::vector<SplitRelation> splits;
  try {
    splits = random_split_relations(shape, seed, field);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::GeneralPositionUnreachable) throw;
    CompareReport report;
    report.p = p;
    report.seed = seed;
    report.reason = e.what();
    return report;
  }
  auto report = compare_with_oracle(splits, shape, p, limits);
  report.seed = seed;
  return report;
}

std::string to_json(const CompareReport& report, bool include_tuples) {
  nlohmann::json doc = {{"status", to_string(report.status)},
                        {"count", report.count()},
                        {"p", report.p},
                        {"seed", report.seed ? nlohmann::json(*report.seed) : nlohmann::json(nullptr)}};
  if (!report.reason.empty()) doc["reason"] = report.reason;
  if (include_tuples) {
    nlohmann::json tuples = nlohmann::json::array();
    for (const auto& tuple : report.scanned) {
      nlohmann::json t = nlohmann::json::array();
      for (const auto& pt : tuple) {
        nlohmann::json c = nlohmann::json::array();
        for (const auto& x : pt.coords()) c.push_back(x.to_string());
        t.push_back(std::move(c));
      }
      tuples.push_back(std::move(t));
    }
    doc["tuples"] = std::move(tuples);
  }
  return doc.dump();
}

}  // namespace ptscheme
