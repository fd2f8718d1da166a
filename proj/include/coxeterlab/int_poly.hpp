#pragma once

// Dense integer-coefficient polynomials. Coefficient i is the coefficient
// of T^i. All divisions are exact-or-throw; a nonzero remainder is never
// silently dropped.

#include <coxeterlab/scalar.hpp>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxlab {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return IntPoly({Int(1)}); }
  static IntPoly constant(Int a) { return IntPoly({std::move(a)}); }
  // a*T^k
  static IntPoly monomial(Int a, int k);

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }

  // coefficient of T^i, zero beyond the degree
  const Int& coeff(int i) const {
    static const Int kZero{0};
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : kZero;
  }
  const Int& leading() const;

  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const Int& s) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  // quotient and remainder; divisor must have invertible (=unit) leading
  // coefficient or divide exactly anyway, otherwise throws
  std::pair<IntPoly, IntPoly> divmod(const IntPoly& d) const;
  // exact division, throws std::domain_error on nonzero remainder
  IntPoly divide_exact(const IntPoly& d) const;
  bool divides(const IntPoly& d) const;  // does d divide *this

  IntPoly pow(unsigned e) const;
  IntPoly derivative() const;
  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  // T^n p(1/T) with n = degree
  IntPoly reversed() const;
  // (-1)^n p(-T): the roots negated; monic if p is monic
  IntPoly reflected() const;
  bool is_self_reciprocal() const;

  // gcd of all coefficients (0 for the zero polynomial)
  Int content() const;
  // primitive part with positive leading coefficient
  IntPoly primitive() const;

  std::string str(const std::string& var = "T") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

inline IntPoly operator*(const Int& s, const IntPoly& p) { return p * s; }

// gcd over Q[T], returned as a primitive integer polynomial with positive
// leading coefficient
IntPoly poly_gcd(IntPoly a, IntPoly b);

bool is_squarefree(const IntPoly& p);

// p / gcd(p, p'), the product of the distinct irreducible factors
IntPoly squarefree_part(const IntPoly& p);

}  // namespace coxlab
