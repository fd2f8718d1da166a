#pragma once

// Coxeter transformation of a triangular algebra and the exact decision
// procedures built on it: cyclotomic type, diagonalizability, periodicity,
// homological form classification, symmetry factors and the closed star
// formula.
//
// Convention: phi = -C^T C^{-1} acting on column vectors, so that
// phi (column i of C) = -(row i of C)^T. The transpose convention shares
// the characteristic and minimal polynomials.

#include <coxeterlab/cartan.hpp>
#include <coxeterlab/cyclotomic.hpp>
#include <coxeterlab/linalg.hpp>

#include <optional>

namespace coxlab {

class CoxeterMatrix {
 public:
  explicit CoxeterMatrix(const CartanAlgebra& a);
  // direct construction from an integer matrix with |det| = 1
  explicit CoxeterMatrix(IntMat phi);

  int size() const { return static_cast<int>(phi_.rows()); }
  const IntMat& phi() const { return phi_; }
  const IntPoly& charpoly() const { return charpoly_; }
  const IntPoly& minpoly() const;

 private:
  IntMat phi_;
  IntPoly charpoly_;
  mutable std::optional<IntPoly> minpoly_;
};

CoxeterMatrix coxeter_matrix(const CartanAlgebra& a);

inline const IntPoly& char_poly(const CoxeterMatrix& m) { return m.charpoly(); }
inline const IntPoly& minimal_poly(const CoxeterMatrix& m) { return m.minpoly(); }

std::pair<bool, CycFactorization> is_cyclotomic_type(const CoxeterMatrix& m);

struct PeriodicityReport {
  bool is_cyclotomic = false;
  bool is_diagonalizable = false;
  // empty means infinite
  std::optional<unsigned long> period;

  bool is_periodic() const { return period.has_value(); }
};

// Finite period iff cyclotomic and diagonalizable; the period is certified
// by exact exponentiation, checking the divisors of lcm{m : m in M}.
PeriodicityReport periodicity(const CoxeterMatrix& m);

struct HomFormReport {
  FormClass classification = FormClass::Indefinite;
  int radical_rank = 0;
};

// classification of x -> x^T (C^{-1} + C^{-T}) x
HomFormReport homological_form(const CartanAlgebra& a);

// <u, v> = u^T C^{-T} v; the companion form of phi = -C^T C^{-1}, so
// <x, phi y> = -<y, x>
Rat euler_form(const CartanAlgebra& a, const IntVec& u, const IntVec& v);

// Characteristic polynomial of phi restricted to the subspace of
// G-invariant vectors (spanned by orbit indicators), and the cofactor;
// their product is the full Coxeter polynomial.
std::pair<IntPoly, IntPoly> symmetry_factor(const CartanAlgebra& a,
                                            const GroupAction& g);

// closed formula for the Coxeter polynomial of the hereditary star
// [p_1, ..., p_t]
IntPoly star_poly(const std::vector<int>& weights);

enum class StarClass { Dynkin, ExtendedDynkin, Wild };

// sign of chi(1) = prod p_i (2 - sum (1 - 1/p_i)) decides the class
StarClass weight_classify(const std::vector<int>& weights);

// chi(-1) is a perfect square (0 included)
bool chi_minus_one_square(const CoxeterMatrix& m);

bool is_perfect_square(const Int& v);

}  // namespace coxlab
