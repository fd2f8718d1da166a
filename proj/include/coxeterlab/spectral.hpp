#pragma once

// Numeric spectra and the measures attached to them: spectral radius,
// Mahler measure, energy and the Frobenius norm, plus the inequality chain
// n <= e <= sqrt(n) ||phi|| <= n rho.

#include <coxeterlab/coxeter.hpp>

#include <complex>
#include <vector>

namespace coxlab {

struct RootFindingError : std::runtime_error {
  RootFindingError(std::string msg, std::vector<std::complex<double>> best)
      : std::runtime_error(std::move(msg)), best_iterate(std::move(best)) {}
  std::vector<std::complex<double>> best_iterate;
};

// All deg(p) roots by Aberth-Ehrlich simultaneous iteration; each returned
// root satisfies |p(z)| / ||p|| < tol.
std::vector<std::complex<double>> numeric_roots(const IntPoly& p, double tol);

struct SpectralReport {
  std::vector<std::complex<double>> roots;
  double spectral_radius = 0.0;
  double mahler = 0.0;
  double energy = 0.0;
  double frobenius = 0.0;      // sqrt of the exact integer entry-square sum
  double eigen_square_sum = 0.0;  // sum |lambda_i|^2, numeric
  double tolerance = 0.0;
  // true when the values are certified by the exact cyclotomic
  // factorization instead of floating point
  bool certified_cyclotomic = false;
};

SpectralReport measures(const CoxeterMatrix& m, double tol);

struct ChainCheck {
  bool chain_holds = false;       // n <= e <= sqrt(n)||phi|| <= n rho
  bool equality_matches_flag = false;  // equality somewhere <=> cyclotomic
  std::string detail;
};

ChainCheck verify_inequality_chain(const SpectralReport& report, bool cyclotomic);

double mahler_measure(const IntPoly& p, double tol = 1e-10);

}  // namespace coxlab
