#pragma once

#include "polya/bigrational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace polya {

class Real;

// Dense univariate polynomial over the rationals. coeff(i) multiplies x^i.
// Trailing zeros are always trimmed; the zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<BigRational> coeffs);
  Polynomial(std::initializer_list<BigRational> coeffs);

  static Polynomial constant(const BigRational& c) { return Polynomial({c}); }
  static Polynomial monomial(const BigRational& c, unsigned deg);
  static Polynomial x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  BigRational coeff(int i) const;
  BigRational leading() const { return is_zero() ? BigRational(0) : c_.back(); }
  const std::vector<BigRational>& coeffs() const { return c_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const BigRational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const BigRational& s) { return a *= s; }
  friend Polynomial operator*(const BigRational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // Repeated squaring.
  Polynomial pow(unsigned e) const;
  // p(x + h).
  Polynomial shift(const BigRational& h) const;
  Polynomial derivative() const;

  BigRational operator()(const BigRational& x) const;
  Real operator()(const Real& x) const;

  bool all_coefficients_positive() const;
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

}  // namespace polya
