#include "ptscheme/chow.hpp"

#include <sstream>

#include <json.hpp>

#include "ptscheme/error.hpp"

namespace ptscheme {

ChowClass::ChowClass(int slots, int truncation) : slots_(slots), truncation_(truncation) {
  if (slots < 1) throw Error(ErrorCode::BadParameter, "Chow ring needs n >= 1");
  if (truncation < 2) throw Error(ErrorCode::BadParameter, "Chow ring needs r >= 2");
}

ChowClass::ChowClass(int slots, int truncation, Terms terms) : ChowClass(slots, truncation) {
  for (auto& [exponents, coeff] : terms) {
    check_exponents(exponents);
    if (coeff != 0) terms_.emplace(exponents, std::move(coeff));
  }
}

ChowClass ChowClass::one(int slots, int truncation) {
  return ChowClass(slots, truncation, {{Exponents(slots, 0), BigInt(1)}});
}

ChowClass ChowClass::hyperplane(int slots, int truncation, int slot) {
  Exponents e(slots, 0);
  if (slot < 0 || slot >= slots)
    throw Error(ErrorCode::BadExponent, "slot " + std::to_string(slot) + " out of range");
  e[slot] = 1;
  return ChowClass(slots, truncation, {{e, BigInt(1)}});
}

void ChowClass::check_exponents(const Exponents& exponents) const {
  if (static_cast<int>(exponents.size()) != slots_)
    throw Error(ErrorCode::BadExponent, "exponent vector has length " +
                                            std::to_string(exponents.size()) + ", expected " +
                                            std::to_string(slots_));
  for (int e : exponents)
    if (e < 0 || e >= truncation_)
      throw Error(ErrorCode::BadExponent, "exponent " + std::to_string(e) + " outside 0.." +
                                              std::to_string(truncation_ - 1));
}

BigInt ChowClass::coefficient(const Exponents& exponents) const {
  check_exponents(exponents);
  auto it = terms_.find(exponents);
  return it == terms_.end() ? BigInt(0) : it->second;
}

ChowClass ChowClass::reversed() const {
  ChowClass out(slots_, truncation_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents(e.rbegin(), e.rend()), c);
  return out;
}

namespace {

void require_same_ring(const ChowClass& a, const ChowClass& b) {
  if (a.slots() != b.slots() || a.truncation() != b.truncation())
    throw Error(ErrorCode::RingMismatch,
                "(n,r)=(" + std::to_string(a.slots()) + "," + std::to_string(a.truncation()) +
                    ") vs (" + std::to_string(b.slots()) + "," + std::to_string(b.truncation()) + ")");
}

}  // namespace

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
  require_same_ring(a, b);
  ChowClass out = a;
  for (const auto& [e, c] : b.terms_) {
    auto [it, inserted] = out.terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  require_same_ring(a, b);
  ChowClass out(a.slots_, a.truncation_);
  Exponents product(a.slots_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      bool truncated = false;
      for (int i = 0; i < a.slots_; ++i) {
        product[i] = ea[i] + eb[i];
        if (product[i] >= a.truncation_) {
          truncated = true;
          break;
        }
      }
      if (truncated) continue;
      auto [it, inserted] = out.terms_.try_emplace(product, 0);
      it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& term) { return term.second == 0; });
  return out;
}

ChowClass operator*(const BigInt& k, const ChowClass& a) {
  ChowClass out(a.slots_, a.truncation_);
  if (k == 0) return out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, k * c);
  return out;
}

ChowClass add(const ChowClass& a, const ChowClass& b) { return a + b; }
ChowClass mul(const ChowClass& a, const ChowClass& b) { return a * b; }

ChowClass window_class(const AlgebraShape& shape, const Window& window) {
  if (window.degree < 1 || window.offset < 0 || window.last_slot() >= shape.slots())
    throw Error(ErrorCode::InvalidWindow,
                "window at offset " + std::to_string(window.offset) + " of degree " +
                    std::to_string(window.degree) + " overruns n=" + std::to_string(shape.slots()));
  ChowClass::Terms terms;
  for (int slot = window.first_slot(); slot <= window.last_slot(); ++slot) {
    Exponents e(shape.slots(), 0);
    e[slot] = 1;
    terms.emplace(std::move(e), 1);
  }
  return ChowClass(shape.slots(), shape.generators(), std::move(terms));
}

ChowClass gamma_class(const AlgebraShape& shape) {
  ChowClass product = ChowClass::one(shape.slots(), shape.generators());
  for (const Window& w : windows_of(shape)) {
    product = product * window_class(shape, w);
    if (product.is_zero()) break;
  }
  return product;
}

BigInt point_count(const AlgebraShape& shape) {
  if (!is_stable(shape))
    throw Error(ErrorCode::NotStable, shape.to_string() + " has n below the largest degree");
  if (expected_dim(shape) != 0)
    throw Error(ErrorCode::DefectMismatch,
                "defect " + std::to_string(defect(shape)) + " != n(r-1) = " +
                    std::to_string(shape.slots() * (shape.generators() - 1)));
  return gamma_class(shape).coefficient(Exponents(shape.slots(), shape.generators() - 1));
}

ChowClass::Terms multidegree_table(const AlgebraShape& shape) {
  if (!is_stable(shape))
    throw Error(ErrorCode::NotStable, shape.to_string() + " has n below the largest degree");
  if (expected_dim(shape) < 0)
    throw Error(ErrorCode::NegativeExpectedDim,
                shape.to_string() + " has expected dimension " + std::to_string(expected_dim(shape)));
  return gamma_class(shape).terms();
}

std::vector<BigInt> multidegree_tuple(const AlgebraShape& shape) {
  if (!is_stable(shape) || expected_dim(shape) != 1)
    throw Error(ErrorCode::BadParameter, "multidegree tuple needs a stable shape of expected dimension 1");
  const ChowClass c = gamma_class(shape);
  std::vector<BigInt> tuple;
  for (int m = 0; m < shape.slots(); ++m) {
    Exponents e(shape.slots(), shape.generators() - 1);
    e[m] -= 1;
    tuple.push_back(c.coefficient(e));
  }
  return tuple;
}

std::string to_json(const ChowClass& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, coeff] : c.terms()) terms.push_back({{"exp", e}, {"coeff", coeff.get_str()}});
  nlohmann::json doc = {{"n", c.slots()}, {"r", c.truncation()}, {"terms", std::move(terms)}};
  return doc.dump();
}

ChowClass chow_from_json(const std::string& text) {
  try {
    auto doc = nlohmann::json::parse(text);
    ChowClass::Terms terms;
    for (const auto& t : doc.at("terms")) {
      BigInt coeff;
      if (coeff.set_str(t.at("coeff").get<std::string>(), 10) != 0)
        throw Error(ErrorCode::ParseError, "bad coefficient " + t.at("coeff").dump());
      auto [it, inserted] = terms.emplace(t.at("exp").get<Exponents>(), coeff);
      if (!inserted) it->second += coeff;
    }
    return ChowClass(doc.at("n").get<int>(), doc.at("r").get<int>(), std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string to_text(const ChowClass& c) {
  if (c.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    const auto& [e, coeff] = *it;
    const bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (coeff < 0) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    first = false;
    BigInt magnitude = abs(coeff);
    if (magnitude != 1 || constant) out << magnitude.get_str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << "ε" << (i + 1);
      if (e[i] > 1) out << '^' << e[i];
    }
  }
  return out.str();
}

}  // namespace ptscheme
