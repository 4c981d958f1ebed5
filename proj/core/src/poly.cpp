#include "cdelab/poly.hpp"

#include "cdelab/errors.hpp"

namespace cdelab {

Poly::Poly(const Cyclo& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Cyclo> coefficients) : c_(std::move(coefficients)) { trim(); }

Poly Poly::monomial(const Cyclo& c, int degree) {
  Poly p;
  if (c.is_zero()) return p;
  p.c_.assign(degree + 1, Cyclo());
  p.c_[degree] = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Poly::order_at_zero() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

Cyclo Poly::evaluate(const Cyclo& x) const {
  Cyclo acc;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Cyclo> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Cyclo(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  return scaled(c_.back().inverse());
}

Poly Poly::scaled(const Cyclo& s) const {
  if (s.is_zero()) return {};
  Poly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  if (c_.size() < other.c_.size()) c_.resize(other.c_.size());
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (c_.size() < other.c_.size()) c_.resize(other.c_.size());
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
  trim();
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  if (a.c_.size() == 1) return b.scaled(a.c_[0]);
  if (b.c_.size() == 1) return a.scaled(b.c_[0]);
  std::vector<Cyclo> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Cyclo> rem = a.c_;
  std::vector<Cyclo> quot(a.c_.size() - b.c_.size() + 1);
  const Cyclo lead_inv = b.leading().inverse();
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    const Cyclo c = rem[i] * lead_inv;
    const std::size_t shift = i - db;
    quot[shift] = c;
    for (std::size_t k = 0; k <= db; ++k) {
      if (!b.c_[k].is_zero()) rem[shift + k] -= c * b.c_[k];
    }
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly Poly::exact_quotient(const Poly& a, const Poly& b) {
  if (b.is_constant()) return a.scaled(b.leading().inverse());
  return divmod(a, b).first;
}

std::string Poly::to_string(char variable) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string coeff = c_[i].to_string();
    const bool compound = !c_[i].is_rational();
    std::string term;
    if (i == 0) {
      term = compound ? "(" + coeff + ")" : coeff;
    } else {
      const std::string power =
          i == 1 ? std::string(1, variable) : std::string(1, variable) + "^" + std::to_string(i);
      if (c_[i].is_one()) {
        term = power;
      } else if ((-c_[i]).is_one()) {
        term = "-" + power;
      } else {
        term = (compound ? "(" + coeff + ")" : coeff) + "*" + power;
      }
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace cdelab
