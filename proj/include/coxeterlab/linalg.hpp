#pragma once

// Exact linear algebra over Int / Rat matrices: characteristic and minimal
// polynomials, unimodular inverses, symmetric inertia classification.

#include <coxeterlab/int_poly.hpp>

namespace coxlab {

// Exact characteristic polynomial det(T*I - M), monic of degree n
// (Faddeev-LeVerrier; the interior divisions are exact over Z).
IntPoly char_poly(const IntMat& m);

// Minimal monic annihilating polynomial over Q; integral by Gauss' lemma
// since it divides the characteristic polynomial.
IntPoly minimal_poly(const IntMat& m);

Int det(const IntMat& m);

// Inverse of a matrix with det = +-1; entries stay integral.
IntMat inverse_unimodular(const IntMat& m);

RatMat inverse(const RatMat& m);

IntMat mat_pow(const IntMat& m, unsigned long e);

// companion matrix of a monic polynomial
IntMat companion(const IntPoly& p);

enum class FormClass { PositiveDefinite, NonNegative, Indefinite };

struct InertiaReport {
  FormClass classification = FormClass::Indefinite;
  int radical_rank = 0;  // kernel dimension, meaningful for non-negative forms
  int positive = 0;
  int negative = 0;
};

// Inertia of an exact symmetric rational matrix by symmetric Gaussian
// reduction; no floating point involved.
InertiaReport classify_symmetric(const RatMat& s);

}  // namespace coxlab
