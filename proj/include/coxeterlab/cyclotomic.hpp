#pragma once

// Cyclotomic polynomial machinery: Phi_m, the v-polynomials, extraction of
// the cyclotomic part of an integer polynomial, polynomial tensor products
// and the special-value formulas at +1 / -1.

#include <coxeterlab/int_poly.hpp>

#include <map>
#include <vector>

namespace coxlab {

unsigned long totient(unsigned long m);
int moebius(unsigned long m);
std::vector<unsigned long> divisors(unsigned long m);

// v_n = 1 + T + ... + T^{n-1}; v_1 = 1
IntPoly v_poly(unsigned long n);

// the m-th cyclotomic polynomial, monic of degree totient(m)
IntPoly cyclotomic(unsigned long m);

struct CycFactorization {
  // m -> multiplicity of Phi_m, multiplicities >= 1
  std::map<unsigned long, unsigned> factors;
  // cyclotomic-free cofactor; equals 1 exactly when the input is of
  // cyclotomic type
  IntPoly residual = IntPoly::one();

  bool is_cyclotomic() const { return residual == IntPoly::one(); }
  IntPoly expand() const;
  unsigned multiplicity(unsigned long m) const {
    auto it = factors.find(m);
    return it == factors.end() ? 0 : it->second;
  }
  bool operator==(const CycFactorization& o) const {
    return factors == o.factors && residual == o.residual;
  }
};

// Divides out every cyclotomic factor with multiplicity. Candidate indices
// run over { m : totient(m) <= deg p }, which is contained in
// { m <= deg(p)^2 } together with {2, 6}.
CycFactorization cyclotomic_factorize(const IntPoly& p);

// Monic polynomial whose roots are the pairwise products of the roots of f
// and g; exact, via the Kronecker product of companion matrices.
IntPoly tensor_product(const IntPoly& f, const IntPoly& g);

// Evaluation of a purely cyclotomic product at +1 or -1 through the
// closed-form values of Phi_m there; cross-checked against direct
// evaluation of the expanded product.
Int special_value_formula(const CycFactorization& fac, int point);

struct CoefficientConditionsReport {
  bool degree_sum_ok = false;  // sum e(m) totient(m) == n
  bool e1_parity_ok = false;   // e(1) even
  bool linear_coeff_ok = false;  // sum e(m) mu(m) == -a1
  bool all_ok() const { return degree_sum_ok && e1_parity_ok && linear_coeff_ok; }
};

CoefficientConditionsReport coefficient_conditions(const CycFactorization& fac,
                                                   int n, const Int& a1);

}  // namespace coxlab
