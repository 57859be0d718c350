#include "polya/polynomial.hpp"

#include "polya/real.hpp"

#include <sstream>

namespace polya {

Polynomial::Polynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<BigRational> coeffs) : c_(coeffs) { trim(); }

Polynomial Polynomial::monomial(const BigRational& c, unsigned deg) {
  std::vector<BigRational> v(deg + 1);
  v[deg] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BigRational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<BigRational> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::shift(const BigRational& h) const {
  // Horner in the polynomial ring: p(x+h) = (...(c_d (x+h) + c_{d-1})(x+h) ...).
  Polynomial xh({h, BigRational(1)});
  Polynomial r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= xh;
    r += constant(*it);
  }
  return r;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigRational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigRational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

BigRational Polynomial::operator()(const BigRational& x) const {
  BigRational r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Real Polynomial::operator()(const Real& x) const {
  Real r(x.precision());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= x;
    r += Real(x.precision(), *it);
  }
  return r;
}

bool Polynomial::all_coefficients_positive() const {
  if (is_zero()) return false;
  for (const auto& c : c_)
    if (c.sign() <= 0) return false;
  return true;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigRational& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    BigRational a = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = a == BigRational(1);
    if (!unit || i == 0) os << a;
    if (i >= 1) os << (unit ? "" : "*") << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace polya
