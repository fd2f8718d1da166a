#include <coxeterlab/cyclotomic.hpp>
#include <coxeterlab/linalg.hpp>

#include <algorithm>

namespace coxlab {

unsigned long totient(unsigned long m) {
  if (m == 0) throw std::domain_error("totient: m must be positive");
  unsigned long result = m;
  unsigned long x = m;
  for (unsigned long p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      result -= result / p;
      while (x % p == 0) x /= p;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

int moebius(unsigned long m) {
  if (m == 0) throw std::domain_error("moebius: m must be positive");
  int r = 0;
  unsigned long x = m;
  for (unsigned long p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      x /= p;
      if (x % p == 0) return 0;
      ++r;
    }
  }
  if (x > 1) ++r;
  return (r % 2 == 0) ? 1 : -1;
}

std::vector<unsigned long> divisors(unsigned long m) {
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d != m / d) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

IntPoly v_poly(unsigned long n) {
  if (n == 0) throw std::domain_error("v_poly: n must be positive");
  std::vector<Int> c(static_cast<size_t>(n), Int(1));
  return IntPoly(std::move(c));
}

IntPoly cyclotomic(unsigned long m) {
  if (m == 0) throw std::domain_error("cyclotomic: m must be positive");
  // T^m - 1 divided by Phi_d over the proper divisors d, built bottom-up
  std::vector<unsigned long> divs = divisors(m);
  std::vector<IntPoly> phi(divs.size());
  for (size_t i = 0; i < divs.size(); ++i) {
    unsigned long d = divs[i];
    IntPoly num = IntPoly::monomial(Int(1), static_cast<int>(d)) - IntPoly::one();
    for (size_t j = 0; j < i; ++j)
      if (d % divs[j] == 0) num = num.divide_exact(phi[j]);
    phi[i] = num;
  }
  return phi.back();
}

IntPoly CycFactorization::expand() const {
  IntPoly p = residual;
  for (const auto& [m, e] : factors) p = p * cyclotomic(m).pow(e);
  return p;
}

CycFactorization cyclotomic_factorize(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("cyclotomic_factorize: zero polynomial");
  CycFactorization fac;
  IntPoly rest = p;
  const unsigned long deg = static_cast<unsigned long>(p.degree());
  // totient(m) >= sqrt(m) except m in {2, 6}, so m <= deg^2 covers all
  // candidates of degree <= deg
  std::vector<unsigned long> candidates{2, 6};
  for (unsigned long m = 1; m <= deg * deg; ++m)
    if (m != 2 && m != 6) candidates.push_back(m);
  std::sort(candidates.begin(), candidates.end());
  for (unsigned long m : candidates) {
    if (totient(m) > static_cast<unsigned long>(std::max(rest.degree(), 0))) continue;
    IntPoly phi = cyclotomic(m);
    while (rest.divides(phi)) {
      rest = rest.divide_exact(phi);
      fac.factors[m]++;
    }
  }
  fac.residual = rest;
  return fac;
}

IntPoly tensor_product(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero() || !f.is_monic() || !g.is_monic())
    throw std::domain_error("tensor_product: inputs must be monic");
  if (f.degree() == 0 || g.degree() == 0) return IntPoly::one();
  IntMat kf = companion(f);
  IntMat kg = companion(g);
  IntMat kron = Eigen::kroneckerProduct(kf, kg);
  return char_poly(kron);
}

namespace {

// Phi_m(1): 0 for m=1, p for m=p^s, 1 otherwise
Int phi_at_one(unsigned long m) {
  if (m == 1) return 0;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      unsigned long x = m;
      while (x % p == 0) x /= p;
      return x == 1 ? Int(p) : Int(1);
    }
  }
  return Int(m);  // m prime
}

// Phi_m(-1): -2 for m=1, 0 for m=2, p for m=2p^s, 1 otherwise
Int phi_at_minus_one(unsigned long m) {
  if (m == 1) return -2;
  if (m == 2) return 0;
  if (m % 2 != 0) return 1;
  return phi_at_one(m / 2);
}

}  // namespace

Int special_value_formula(const CycFactorization& fac, int point) {
  if (!fac.is_cyclotomic())
    throw std::domain_error("special_value_formula: residual is not 1");
  if (point != 1 && point != -1)
    throw std::domain_error("special_value_formula: point must be +1 or -1");
  Int value{1};
  for (const auto& [m, e] : fac.factors) {
    Int base = (point == 1) ? phi_at_one(m) : phi_at_minus_one(m);
    value *= boost::multiprecision::pow(base, e);
  }
  Int direct = fac.expand().eval(Int(point));
  if (value != direct)
    throw std::logic_error("special_value_formula: disagrees with direct evaluation");
  return value;
}

CoefficientConditionsReport coefficient_conditions(const CycFactorization& fac,
                                                   int n, const Int& a1) {
  CoefficientConditionsReport rep;
  unsigned long degree_sum = 0;
  Int mu_sum{0};
  for (const auto& [m, e] : fac.factors) {
    degree_sum += e * totient(m);
    mu_sum += Int(e) * moebius(m);
  }
  rep.degree_sum_ok = degree_sum == static_cast<unsigned long>(n);
  rep.e1_parity_ok = fac.multiplicity(1) % 2 == 0;
  rep.linear_coeff_ok = mu_sum == -a1;
  return rep;
}

}  // namespace coxlab
