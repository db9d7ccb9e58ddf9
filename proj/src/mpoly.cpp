#include "spinorfact/mpoly.hpp"

#include <numeric>
#include <optional>
#include <sstream>

#include "spinorfact/error.hpp"

namespace spinorfact {

namespace {
int monomial_degree(const MPoly::Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }
}  // namespace

MPoly MPoly::variable(std::size_t index, const Rational& coeff) {
  if (index >= kMaxVariables) throw Error(ErrorKind::OutOfRange, "too many polynomial variables");
  MPoly p;
  if (coeff == 0) return p;
  Monomial m{};
  m[index] = 1;
  p.terms_[m] = coeff;
  return p;
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

Rational MPoly::constant() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MPoly::linear_coefficient(std::size_t index) const {
  Monomial m{};
  m[index] = 1;
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MPoly::evaluate(const std::vector<Rational>& values) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t k = 0; k < kMaxVariables; ++k)
      for (int e = 0; e < m[k]; ++e) term *= values.at(k);
    sum += term;
  }
  return sum;
}

MPoly MPoly::substitute(const std::vector<MPoly>& values) const {
  MPoly sum;
  for (const auto& [m, c] : terms_) {
    MPoly term(c);
    for (std::size_t k = 0; k < kMaxVariables; ++k)
      for (int e = 0; e < m[k]; ++e) term *= values.at(k);
    sum += term;
  }
  return sum;
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / terms_.rbegin()->second;
  MPoly out = *this;
  for (auto& [m, c] : out.terms_) c *= inv;
  return out;
}

std::optional<Rational> proportionality(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero() || a.terms_.size() != b.terms_.size()) return std::nullopt;
  Rational r = a.terms_.rbegin()->second / b.terms_.rbegin()->second;
  for (const auto& [m, c] : b.terms_) {
    auto it = a.terms_.find(m);
    if (it == a.terms_.end() || it->second != r * c) return std::nullopt;
  }
  return r;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest-degree terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = mag == 1 && monomial_degree(m) > 0;
    if (!unit) os << spinorfact::to_string(mag);
    bool need_star = !unit;
    for (std::size_t k = 0; k < kMaxVariables; ++k) {
      if (m[k] == 0) continue;
      if (need_star) os << "*";
      os << (k < names.size() ? names[k] : "x" + std::to_string(k));
      if (m[k] > 1) os << "^" << int(m[k]);
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const MPoly& o) {
  MPoly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m{};
      for (std::size_t k = 0; k < kMaxVariables; ++k) m[k] = static_cast<std::uint8_t>(ma[k] + mb[k]);
      Rational c = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

MPoly operator-(const MPoly& a) {
  MPoly out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

}  // namespace spinorfact
