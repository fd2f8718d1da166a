#include <coxeterlab/coxeter.hpp>

#include <numeric>

namespace coxlab {

CoxeterMatrix::CoxeterMatrix(const CartanAlgebra& a) {
  IntMat cinv = inverse_unimodular(a.cartan());
  phi_ = -(a.cartan().transpose() * cinv);
  charpoly_ = coxlab::char_poly(phi_);
}

CoxeterMatrix::CoxeterMatrix(IntMat phi) : phi_(std::move(phi)) {
  Int d = det(phi_);
  if (d != 1 && d != -1)
    throw std::domain_error("CoxeterMatrix: |det| must be 1");
  charpoly_ = coxlab::char_poly(phi_);
}

const IntPoly& CoxeterMatrix::minpoly() const {
  if (!minpoly_) minpoly_ = coxlab::minimal_poly(phi_);
  return *minpoly_;
}

CoxeterMatrix coxeter_matrix(const CartanAlgebra& a) { return CoxeterMatrix(a); }

std::pair<bool, CycFactorization> is_cyclotomic_type(const CoxeterMatrix& m) {
  CycFactorization fac = cyclotomic_factorize(m.charpoly());
  return {fac.is_cyclotomic(), std::move(fac)};
}

PeriodicityReport periodicity(const CoxeterMatrix& m) {
  PeriodicityReport rep;
  auto [cyc, fac] = is_cyclotomic_type(m);
  rep.is_cyclotomic = cyc;
  const IntPoly& mp = m.minpoly();
  rep.is_diagonalizable = poly_gcd(mp, mp.derivative()).degree() <= 0;
  if (!rep.is_cyclotomic || !rep.is_diagonalizable) return rep;
  unsigned long bound = 1;
  for (const auto& [mm, e] : fac.factors) bound = std::lcm(bound, mm);
  // smallest divisor d of the bound with phi^d = id
  for (unsigned long d : divisors(bound)) {
    if (bound % d != 0) continue;
    if (is_identity(mat_pow(m.phi(), d))) {
      rep.period = d;
      break;
    }
  }
  if (!rep.period)
    throw std::logic_error("periodicity: diagonalizable cyclotomic matrix has no finite order");
  return rep;
}

HomFormReport homological_form(const CartanAlgebra& a) {
  IntMat cinv = inverse_unimodular(a.cartan());
  IntMat sym = cinv + IntMat(cinv.transpose());
  InertiaReport inertia = classify_symmetric(sym.cast<Rat>());
  return {inertia.classification, inertia.radical_rank};
}

Rat euler_form(const CartanAlgebra& a, const IntVec& u, const IntVec& v) {
  if (u.size() != a.size() || v.size() != a.size())
    throw std::domain_error("euler_form: vector length mismatch");
  IntMat cinv = inverse_unimodular(a.cartan());
  Int value = (u.transpose() * cinv.transpose() * v)(0, 0);
  return Rat(value);
}

std::pair<IntPoly, IntPoly> symmetry_factor(const CartanAlgebra& a,
                                            const GroupAction& g) {
  const int n = a.size();
  auto group = g.elements(n);
  const IntMat& c = a.cartan();
  for (const auto& perm : group)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (c(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) != c(i, j))
          throw std::domain_error("symmetry_factor: action does not preserve the algebra");
  // orbit indicator vectors span the invariant subspace
  std::vector<int> orbit_of(static_cast<size_t>(n), -1);
  int t0 = 0;
  for (int i = 0; i < n; ++i) {
    if (orbit_of[static_cast<size_t>(i)] >= 0) continue;
    for (const auto& perm : group) orbit_of[static_cast<size_t>(perm[static_cast<size_t>(i)])] = t0;
    ++t0;
  }
  CoxeterMatrix cm(a);
  const IntMat& phi = cm.phi();
  // phi maps the invariant subspace to itself; express phi * b_s in the
  // indicator basis
  IntMat restricted = IntMat::Zero(t0, t0);
  for (int s = 0; s < t0; ++s) {
    IntVec b = IntVec::Zero(n);
    for (int i = 0; i < n; ++i)
      if (orbit_of[static_cast<size_t>(i)] == s) b(i) = 1;
    IntVec img = phi * b;
    // the image must be constant on every orbit
    std::vector<bool> seen(static_cast<size_t>(t0), false);
    for (int i = 0; i < n; ++i) {
      int t = orbit_of[static_cast<size_t>(i)];
      if (!seen[static_cast<size_t>(t)]) {
        restricted(t, s) = img(i);
        seen[static_cast<size_t>(t)] = true;
      } else if (restricted(t, s) != img(i)) {
        throw std::logic_error("symmetry_factor: image not constant on orbits");
      }
    }
  }
  IntPoly factor = coxlab::char_poly(restricted);
  IntPoly cofactor = cm.charpoly().divide_exact(factor);
  return {std::move(factor), std::move(cofactor)};
}

IntPoly star_poly(const std::vector<int>& weights) {
  for (int p : weights)
    if (p < 2) throw std::domain_error("star_poly: weights must be >= 2");
  // prod v_{p_i} ((T+1) - T sum v_{p_i - 1} / v_{p_i}), cleared to the
  // common denominator prod v_{p_i}
  IntPoly prod_all = IntPoly::one();
  for (int p : weights) prod_all = prod_all * v_poly(static_cast<unsigned long>(p));
  IntPoly t = IntPoly::monomial(Int(1), 1);
  IntPoly result = (t + IntPoly::one()) * prod_all;
  for (size_t i = 0; i < weights.size(); ++i) {
    IntPoly term = v_poly(static_cast<unsigned long>(weights[i] - 1));
    for (size_t j = 0; j < weights.size(); ++j)
      if (j != i) term = term * v_poly(static_cast<unsigned long>(weights[j]));
    result = result - t * term;
  }
  return result;
}

StarClass weight_classify(const std::vector<int>& weights) {
  for (int p : weights)
    if (p < 2) throw std::domain_error("weight_classify: weights must be >= 2");
  Rat sum{2};
  for (int p : weights) sum -= Rat(p - 1, p);
  if (sum > 0) return StarClass::Dynkin;
  if (sum == 0) return StarClass::ExtendedDynkin;
  return StarClass::Wild;
}

bool is_perfect_square(const Int& v) {
  if (v < 0) return false;
  Int r = boost::multiprecision::sqrt(v);
  return r * r == v;
}

bool chi_minus_one_square(const CoxeterMatrix& m) {
  return is_perfect_square(m.charpoly().eval(Int(-1)));
}

}  // namespace coxlab
