// Command-line front end for the truncated point scheme calculator.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptscheme/chow.hpp"
#include "ptscheme/error.hpp"
#include "ptscheme/ffield_enum.hpp"
#include "ptscheme/relation_io.hpp"
#include "ptscheme/split_oracle.hpp"
#include "ptscheme/verify.hpp"

namespace {

using namespace ptscheme;
using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

enum ExitCode { kOk = 0, kUsage = 2, kPrecondition = 3, kVerification = 4 };

struct Options {
  std::string shape;
  std::string relations;
  std::uint64_t seed = 42;
  std::string field = "Q";
  bool json = false;
  bool verbose = false;
  bool tuples = false;
  std::uint64_t budget = kDefaultScanBudget;
  SweepBounds bounds;
};

json header(const Options& opt, const std::string& command) {
  json h = {{"version", kVersion}, {"command", command}, {"seed", opt.seed}};
  if (!opt.shape.empty()) h["shape"] = opt.shape;
  return h;
}

json point_json(const ProjectivePoint& p) {
  json c = json::array();
  for (const auto& x : p.coords()) c.push_back(x.to_string());
  return c;
}

std::string tuple_text(const PointTuple& t) {
  std::string s;
  for (const auto& p : t) s += p.to_string();
  return s;
}

std::string profile_text(const std::vector<int>& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AlgebraShape require_shape(const Options& opt) {
  if (opt.shape.empty()) throw Error(ErrorCode::ParseError, "--shape is required");
  if (opt.shape.front() == '{') return parse_shape_json(opt.shape);
  return parse_shape(opt.shape);
}

int cmd_expected_dim(const Options& opt) {
  const auto shape = require_shape(opt);
  const bool stable = is_stable(shape);
  const int top = shape.slots() * (shape.generators() - 1);
  json out = header(opt, "expected-dim");
  out["stable"] = stable;
  out["n_times_r_minus_1"] = top;
  if (stable) {
    out["defect"] = defect(shape);
    out["expected_dim"] = expected_dim(shape);
    out["overdetermined"] = expected_dim(shape) < 0;
  }
  if (opt.json) {
    std::cout << out.dump() << '\n';
  } else {
    if (stable) std::cout << "defect " << defect(shape) << '\n';
    std::cout << "n(r-1) " << top << '\n';
    if (stable) {
      std::cout << "expected_dim " << expected_dim(shape);
      if (expected_dim(shape) < 0) std::cout << " (over-determined)";
      std::cout << '\n';
    }
    std::cout << "stable " << (stable ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_count(const Options& opt) {
  const auto shape = require_shape(opt);
  const BigInt count = point_count(shape);
  if (opt.json) {
    json out = header(opt, "count");
    out["count"] = count.get_str();
    out["method"] = "coefficient of the top class in the product of window classes";
    out["windows"] = windows_of(shape).size();
    std::cout << out.dump() << '\n';
  } else {
    std::cout << count.get_str() << '\n';
  }
  return kOk;
}

int cmd_chow_class(const Options& opt) {
  const auto shape = require_shape(opt);
  const auto c = gamma_class(shape);
  if (opt.json) {
    json out = header(opt, "chow-class");
    out["class"] = json::parse(to_json(c));
    std::cout << out.dump() << '\n';
  } else {
    std::cout << to_text(c) << '\n';
  }
  return kOk;
}

int cmd_multidegree(const Options& opt) {
  const auto shape = require_shape(opt);
  const auto table = multidegree_table(shape);
  const bool curve = expected_dim(shape) == 1;
  if (opt.json) {
    json out = header(opt, "multidegree");
    json terms = json::array();
    for (const auto& [e, c] : table) terms.push_back({{"exp", e}, {"coeff", c.get_str()}});
    out["table"] = std::move(terms);
    if (curve) {
      json tuple = json::array();
      for (const auto& x : multidegree_tuple(shape)) tuple.push_back(x.get_str());
      out["tuple"] = std::move(tuple);
    }
    std::cout << out.dump() << '\n';
  } else if (curve) {
    std::string s;
    for (const auto& x : multidegree_tuple(shape)) s += (s.empty() ? "" : ",") + x.get_str();
    std::cout << '(' << s << ")\n";
  } else {
    for (const auto& [e, c] : table) std::cout << profile_text(e) << ' ' << c.get_str() << '\n';
  }
  return kOk;
}

int cmd_oracle(const Options& opt) {
  const auto shape = require_shape(opt);
  const Field field = Field::parse(opt.field);
  const auto census = profile_census(shape);
  const auto splits = random_split_relations(shape, opt.seed, field);
  const auto tuples = realize_points(splits, shape);
  std::vector<MultilinearRelation> tensors;
  for (const auto& s : splits) tensors.push_back(split_to_tensor(s));
  bool members = true;
  for (const auto& t : tuples) members = members && is_member(tensors, shape.slots(), t);
  const BigInt chow = point_count(shape);
  const bool match = members && census_matches_chow(shape) && chow == static_cast<unsigned long>(tuples.size());

  if (opt.json) {
    json out = header(opt, "oracle");
    out["field"] = field.to_string();
    json c = json::array();
    for (const auto& [profile, count] : census) c.push_back({{"profile", profile}, {"count", count}});
    out["census"] = std::move(c);
    RelationFile file{shape.generators(), field, {}};
    for (const auto& s : splits) file.relations.emplace_back(s);
    out["relations"] = json::parse(serialize_relations(file));
    json pts = json::array();
    for (const auto& t : tuples) {
      json row = json::array();
      for (const auto& p : t) row.push_back(point_json(p));
      pts.push_back(std::move(row));
    }
    out["points"] = std::move(pts);
    out["count"] = tuples.size();
    out["chow_count"] = chow.get_str();
    out["verdict"] = match ? "MATCH" : "MISMATCH";
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "census\n";
    for (const auto& [profile, count] : census) std::cout << "  " << profile_text(profile) << ' ' << count << '\n';
    std::cout << "points (" << field.to_string() << ", seed " << opt.seed << ")\n";
    for (const auto& t : tuples) std::cout << "  " << tuple_text(t) << '\n';
    std::cout << "count " << tuples.size() << ", chow " << chow.get_str() << ", "
              << (match ? "MATCH" : "MISMATCH") << '\n';
  }
  return match ? kOk : kVerification;
}

int cmd_ff_enum(const Options& opt) {
  const auto shape = require_shape(opt);
  const Field field = Field::parse(opt.field);
  ScanLimits limits;
  limits.budget = opt.budget;

  if (!opt.relations.empty()) {
    const auto file = parse_relations(read_file(opt.relations));
    if (file.field.is_rational())
      throw Error(ErrorCode::FieldMismatch, "ff-enum needs relations over a prime field");
    const auto tensors = tensors_of(file);
    const auto found = enumerate_gamma(tensors, file.generators, shape.slots(), file.field.modulus(), limits);
    if (opt.json) {
      json out = header(opt, "ff-enum");
      out["p"] = file.field.modulus();
      out["count"] = found.size();
      if (opt.tuples) {
        json pts = json::array();
        for (const auto& t : found) {
          json row = json::array();
          for (const auto& p : t) row.push_back(point_json(p));
          pts.push_back(std::move(row));
        }
        out["tuples"] = std::move(pts);
      }
      std::cout << out.dump() << '\n';
    } else {
      for (const auto& t : found) std::cout << tuple_text(t) << '\n';
      std::cout << "count " << found.size() << '\n';
    }
    return kOk;
  }

  if (field.is_rational()) throw Error(ErrorCode::BadParameter, "ff-enum needs --field Fp:<p>");
  const auto report = compare_seeded(shape, field.modulus(), opt.seed, limits);
  if (opt.json) {
    json out = header(opt, "ff-enum");
    out["report"] = json::parse(to_json(report, opt.tuples));
    std::cout << out.dump() << '\n';
  } else {
    if (opt.tuples)
      for (const auto& t : report.scanned) std::cout << tuple_text(t) << '\n';
    std::cout << to_string(report.status) << ' ' << report.count() << " tuples over F" << report.p;
    if (!report.reason.empty()) std::cout << " (" << report.reason << ')';
    std::cout << '\n';
  }
  return report.status == CompareStatus::Mismatch ? kVerification : kOk;
}

int cmd_verify(const Options& opt) {
  const auto lines = run_verify_suite(opt.bounds, opt.seed);
  bool all = true;
  json results = json::array();
  for (const auto& line : lines) {
    all = all && line.passed;
    if (opt.json) {
      results.push_back({{"check", line.label}, {"passed", line.passed}, {"detail", line.detail}});
    } else {
      std::cout << line.label << (line.passed ? " OK" : " FAIL");
      if (opt.verbose || !line.passed) std::cout << "  [" << line.detail << ']';
      std::cout << '\n';
    }
  }
  if (opt.json) {
    json out = header(opt, "verify");
    out["results"] = std::move(results);
    out["passed"] = all;
    std::cout << out.dump() << '\n';
  }
  return all ? kOk : kVerification;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidWord:
    case ErrorCode::BadParameter:
      return kUsage;
    default:
      return kPrecondition;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chow classes, point counts and multidegrees of truncated point schemes"};
  app.require_subcommand(1);
  Options opt;
  if (const char* env = std::getenv("PTSCHEME_BUDGET")) {
    try {
      opt.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: PTSCHEME_BUDGET must be an unsigned integer\n";
      return kUsage;
    }
  }

  auto add_common = [&](CLI::App* sub, bool needs_shape) {
    auto* shape = sub->add_option("--shape", opt.shape, "shape literal \"r=2 d=3,4 n=5\" or JSON");
    if (needs_shape) shape->required();
    sub->add_flag("--json", opt.json, "emit JSON");
    sub->add_flag("-v,--verbose", opt.verbose, "more detail");
  };
  auto* expected = app.add_subcommand("expected-dim", "defect, expected dimension and stability");
  add_common(expected, true);
  auto* count = app.add_subcommand("count", "points with multiplicity (zero expected dimension)");
  add_common(count, true);
  auto* chow = app.add_subcommand("chow-class", "Chow class of the truncated point scheme");
  add_common(chow, true);
  auto* multideg = app.add_subcommand("multidegree", "multidegree table or tuple");
  add_common(multideg, true);
  auto* oracle = app.add_subcommand("oracle", "choice-function census and split-relation point realization");
  add_common(oracle, true);
  oracle->add_option("--seed", opt.seed, "seed for the linear forms");
  oracle->add_option("--field", opt.field, "Q or Fp:<p>");
  auto* ff = app.add_subcommand("ff-enum", "brute-force scan over a small prime field");
  add_common(ff, true);
  ff->add_option("--relations", opt.relations, "relation file (JSON)");
  ff->add_option("--seed", opt.seed, "seed for split relations when no file is given");
  ff->add_option("--field", opt.field, "Fp:<p>");
  ff->add_option("--budget", opt.budget, "maximum number of scanned tuples");
  ff->add_flag("--tuples", opt.tuples, "list the tuples found");
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  add_common(verify, false);
  verify->add_option("--seed", opt.seed, "seed for realizations");
  verify->add_option("--max-generators", opt.bounds.max_generators, "largest r in the sweeps");
  verify->add_option("--max-degree", opt.bounds.max_degree, "largest relation degree in the sweeps");
  verify->add_option("--max-relations", opt.bounds.max_relations, "largest number of relations");
  verify->add_option("--max-slots", opt.bounds.max_slots, "largest n");
  verify->add_option("--max-choices", opt.bounds.max_raw_choices, "choice-function budget per shape");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*expected) return cmd_expected_dim(opt);
    if (*count) return cmd_count(opt);
    if (*chow) return cmd_chow_class(opt);
    if (*multideg) return cmd_multidegree(opt);
    if (*oracle) return cmd_oracle(opt);
    if (*ff) return cmd_ff_enum(opt);
    if (*verify) return cmd_verify(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kUsage;
}
