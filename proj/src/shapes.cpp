#include "ptscheme/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "ptscheme/error.hpp"

namespace ptscheme {

AlgebraShape::AlgebraShape(int generators, std::vector<int> degrees, int slots)
    : generators_(generators), degrees_(std::move(degrees)), slots_(slots) {
  if (generators_ < 2)
    throw Error(ErrorCode::BadParameter, "need r >= 2, got " + std::to_string(generators_));
  if (slots_ < 1)
    throw Error(ErrorCode::BadParameter, "need n >= 1, got " + std::to_string(slots_));
  if (degrees_.empty())
    throw Error(ErrorCode::BadParameter, "need at least one relation");
  for (int d : degrees_)
    if (d < 1)
      throw Error(ErrorCode::DegreeOutOfRange, "relation degree " + std::to_string(d) + " < 1");
  std::sort(degrees_.begin(), degrees_.end());
}

AlgebraShape AlgebraShape::with_relation(int degree) const {
  auto degrees = degrees_;
  degrees.push_back(degree);
  return AlgebraShape(generators_, std::move(degrees), slots_);
}

std::string AlgebraShape::to_string() const {
  std::ostringstream out;
  out << "r=" << generators_ << " d=";
  for (std::size_t j = 0; j < degrees_.size(); ++j) {
    if (j) out << ',';
    out << degrees_[j];
  }
  out << " n=" << slots_;
  return out.str();
}

namespace {

void require_fits(const AlgebraShape& shape) {
  if (shape.max_degree() > shape.slots())
    throw Error(ErrorCode::DegreeOutOfRange,
                "relation degree " + std::to_string(shape.max_degree()) +
                    " exceeds n=" + std::to_string(shape.slots()));
}

}  // namespace

int defect(const AlgebraShape& shape) {
  require_fits(shape);
  int total = 0;
  for (int d : shape.degrees()) total += shape.slots() - d + 1;
  return total;
}

int expected_dim(const AlgebraShape& shape) {
  return shape.slots() * (shape.generators() - 1) - defect(shape);
}

bool is_stable(const AlgebraShape& shape) { return shape.slots() >= shape.max_degree(); }

std::vector<Window> windows_of(const AlgebraShape& shape) {
  require_fits(shape);
  std::vector<Window> windows;
  const auto& degrees = shape.degrees();
  for (int j = 0; j < shape.relation_count(); ++j)
    for (int i = 0; i + degrees[j] <= shape.slots(); ++i)
      windows.push_back(Window{j, i, degrees[j]});
  return windows;
}

std::optional<int> zero_dim_n(int generators, const std::vector<int>& degrees) {
  const int s = static_cast<int>(degrees.size());
  const int denom = s - generators + 1;
  if (denom <= 0 || degrees.empty()) return std::nullopt;
  const int numer = std::accumulate(degrees.begin(), degrees.end(), 0) - s;
  if (numer % denom != 0) return std::nullopt;
  const int n = numer / denom;
  if (n < *std::max_element(degrees.begin(), degrees.end())) return std::nullopt;
  return n;
}

int gorenstein_n(int ell) {
  if (ell < 3)
    throw Error(ErrorCode::BadParameter, "Gorenstein parameter must be >= 3, got " + std::to_string(ell));
  return ell - 2;
}

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error(ErrorCode::ParseError, "bad integer '" + std::string(text) + "' for " + std::string(what));
  return value;
}

}  // namespace

AlgebraShape parse_shape(std::string_view literal) {
  std::optional<int> r, n;
  std::optional<std::vector<int>> d;
  std::istringstream in{std::string(literal)};
  std::string token;
  while (in >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::ParseError, "expected key=value, got '" + token + "'");
    std::string_view key(token.data(), eq);
    std::string_view value(token.data() + eq + 1, token.size() - eq - 1);
    if (key == "r") {
      r = parse_int(value, "r");
    } else if (key == "n") {
      n = parse_int(value, "n");
    } else if (key == "d") {
      std::vector<int> degrees;
      std::size_t start = 0;
      while (start <= value.size()) {
        auto comma = value.find(',', start);
        if (comma == std::string_view::npos) comma = value.size();
        degrees.push_back(parse_int(value.substr(start, comma - start), "d"));
        start = comma + 1;
      }
      d = std::move(degrees);
    } else {
      throw Error(ErrorCode::ParseError, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!r || !n || !d)
    throw Error(ErrorCode::ParseError, "shape needs r=, d= and n=: '" + std::string(literal) + "'");
  return AlgebraShape(*r, std::move(*d), *n);
}

AlgebraShape parse_shape_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
    return AlgebraShape(doc.at("r").get<int>(), doc.at("d").get<std::vector<int>>(),
                        doc.at("n").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string shape_to_json(const AlgebraShape& shape) {
  nlohmann::json doc = {{"r", shape.generators()}, {"d", shape.degrees()}, {"n", shape.slots()}};
  return doc.dump();
}

}  // namespace ptscheme
