#include "gasimon/multivector.hpp"

#include <nlohmann/json.hpp>

namespace gasimon {

Multivector::Multivector(int width) : width_(width) {
  if (width < 1 || width > BitString::kMaxWidth) {
    throw RangeError("multivector width must be in [1, 63]");
  }
}

Multivector Multivector::blade(const BitString& index, Coefficient coeff) {
  Multivector m(index.width());
  m.add_term(index, coeff);
  return m;
}

Multivector Multivector::scalar_one(int width) {
  return blade(BitString::zeros(width));
}

Coefficient Multivector::coefficient(const BitString& index) const {
  if (index.width() != width_) {
    throw WidthError("coefficient lookup width " + std::to_string(index.width()) +
                     " in multivector of width " + std::to_string(width_));
  }
  auto it = terms_.find(index);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

void Multivector::add_term(const BitString& index, const Coefficient& coeff) {
  if (index.width() != width_) {
    throw WidthError("term width " + std::to_string(index.width()) +
                     " in multivector of width " + std::to_string(width_));
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Multivector Multivector::operator+(const Multivector& other) const {
  if (width_ != other.width_) {
    throw WidthError("adding multivectors of widths " + std::to_string(width_) +
                     " and " + std::to_string(other.width_));
  }
  Multivector out = *this;
  for (const auto& [index, coeff] : other.terms_) out.add_term(index, coeff);
  return out;
}

Multivector Multivector::operator-(const Multivector& other) const {
  return *this + other.scaled(-1);
}

Multivector Multivector::scaled(const Coefficient& factor) const {
  Multivector out(width_);
  if (factor == 0) return out;
  for (const auto& [index, coeff] : terms_) out.terms_.emplace(index, coeff * factor);
  return out;
}

Multivector Multivector::operator*(const Multivector& other) const {
  if (width_ != other.width_) {
    throw WidthError("multiplying multivectors of widths " +
                     std::to_string(width_) + " and " +
                     std::to_string(other.width_));
  }
  Multivector out(width_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : other.terms_) {
      SignedBlade p = blade_product(ka, kb);
      out.add_term(p.index, p.sign > 0 ? ca * cb : -(ca * cb));
    }
  }
  return out;
}

Multivector Multivector::reversed() const {
  Multivector out(width_);
  for (const auto& [index, coeff] : terms_) {
    out.terms_.emplace(index, reverse_sign(index) > 0 ? coeff : -coeff);
  }
  return out;
}

Coefficient Multivector::norm_sq() const {
  Coefficient total = 0;
  for (const auto& [index, coeff] : terms_) total += coeff * coeff;
  return total;
}

std::string Multivector::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [index, coeff] : terms_) {
    if (!out.empty()) out += ' ';
    if (coeff > 0) out += '+';
    out += coeff.str();
    out += "*e[";
    out += index.str();
    out += ']';
  }
  return out;
}

nlohmann::json Multivector::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [index, coeff] : terms_) {
    arr.push_back({{"blade", index.str()}, {"coeff", coeff.str()}});
  }
  return arr;
}

Multivector Multivector::from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw SyntaxError("multivector JSON must be a non-empty array", 1, 1);
  }
  Multivector out(1);
  bool first = true;
  for (const auto& term : j) {
    BitString index = BitString::parse(term.at("blade").get<std::string>());
    if (first) {
      out = Multivector(index.width());
      first = false;
    }
    out.add_term(index, Coefficient(term.at("coeff").get<std::string>()));
  }
  return out;
}

}  // namespace gasimon
