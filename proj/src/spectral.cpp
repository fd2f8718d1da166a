#include <coxeterlab/spectral.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace coxlab {

namespace {

using Cplx = std::complex<double>;

Cplx horner(const std::vector<double>& c, Cplx z) {
  Cplx acc{0.0, 0.0};
  for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

}  // namespace

std::vector<Cplx> numeric_roots(const IntPoly& p, double tol) {
  if (p.is_zero()) throw std::domain_error("numeric_roots: zero polynomial");
  if (tol <= 0) throw std::domain_error("numeric_roots: tolerance must be positive");
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) c.push_back(a.convert_to<double>());
  // strip zero roots at the origin
  size_t zeros = 0;
  while (zeros < c.size() - 1 && c[zeros] == 0.0) ++zeros;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<Cplx> z(static_cast<size_t>(n));
  if (n > 0) {
    std::vector<double> dc(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) dc[static_cast<size_t>(i - 1)] = i * c[static_cast<size_t>(i)];
    double norm = 0.0;
    for (double a : c) norm += a * a;
    norm = std::sqrt(norm);
    // Cauchy bound for the initial circle
    double radius = 0.0;
    for (int i = 0; i < n; ++i)
      radius = std::max(radius, std::abs(c[static_cast<size_t>(i)] / c.back()));
    radius = 1.0 + radius;
    for (int k = 0; k < n; ++k) {
      double theta = 2.0 * std::numbers::pi * (k + 0.25) / n + 0.79;
      z[static_cast<size_t>(k)] = std::polar(std::pow(radius, 0.9), theta);
    }
    const int max_iter = 600;
    bool converged = false;
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
      converged = true;
      for (int k = 0; k < n; ++k) {
        Cplx zk = z[static_cast<size_t>(k)];
        Cplx pv = horner(c, zk);
        double scale = norm * std::pow(std::max(1.0, std::abs(zk)), n);
        if (std::abs(pv) / scale < tol * 1e-2) continue;
        converged = false;
        Cplx dv = horner(dc, zk);
        if (dv == Cplx{0.0, 0.0}) {
          z[static_cast<size_t>(k)] += Cplx{1e-6, 1e-6};
          continue;
        }
        Cplx w = pv / dv;
        Cplx sum{0.0, 0.0};
        for (int j = 0; j < n; ++j)
          if (j != k) sum += 1.0 / (zk - z[static_cast<size_t>(j)]);
        Cplx denom = 1.0 - w * sum;
        z[static_cast<size_t>(k)] -= (denom == Cplx{0.0, 0.0}) ? w : w / denom;
      }
    }
    for (int k = 0; k < n; ++k) {
      Cplx zk = z[static_cast<size_t>(k)];
      double scale = norm * std::pow(std::max(1.0, std::abs(zk)), n);
      if (!(std::abs(horner(c, zk)) / scale < tol)) {
        std::ostringstream msg;
        msg << "numeric_roots: no convergence to tolerance " << tol;
        throw RootFindingError(msg.str(), z);
      }
    }
  }
  for (size_t i = 0; i < zeros; ++i) z.push_back(Cplx{0.0, 0.0});
  return z;
}

SpectralReport measures(const CoxeterMatrix& m, double tol) {
  if (tol <= 0) throw std::domain_error("measures: tolerance must be positive");
  SpectralReport rep;
  rep.tolerance = tol;
  rep.roots = numeric_roots(m.charpoly(), tol);
  const int n = m.size();
  Int entry_sq{0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entry_sq += m.phi()(i, j) * m.phi()(i, j);
  rep.frobenius = std::sqrt(entry_sq.convert_to<double>());
  auto [cyc, fac] = is_cyclotomic_type(m);
  if (cyc) {
    // exact route: every eigenvalue is a root of unity
    rep.certified_cyclotomic = true;
    rep.spectral_radius = 1.0;
    rep.mahler = 1.0;
    rep.energy = static_cast<double>(n);
    rep.eigen_square_sum = static_cast<double>(n);
    return rep;
  }
  for (const auto& z : rep.roots) {
    double a = std::abs(z);
    rep.spectral_radius = std::max(rep.spectral_radius, a);
    rep.energy += a;
    rep.eigen_square_sum += a * a;
  }
  rep.mahler = 1.0;
  for (const auto& z : rep.roots) rep.mahler *= std::max(1.0, std::abs(z));
  return rep;
}

ChainCheck verify_inequality_chain(const SpectralReport& report, bool cyclotomic) {
  ChainCheck out;
  const double tol = 1e-8;
  const double n = static_cast<double>(report.roots.size());
  const double e = report.energy;
  // middle norm from the eigenvalue square sum; the entry square sum only
  // bounds it from above (they agree exactly when phi is normal)
  const double mid = std::sqrt(n) * std::sqrt(report.eigen_square_sum);
  const double top = n * report.spectral_radius;
  std::ostringstream detail;
  bool ok = (n <= e + tol) && (e <= mid + tol) && (mid <= top + n * tol);
  // the entry-based Frobenius norm still dominates the energy
  ok = ok && (e <= std::sqrt(n) * report.frobenius + tol);
  if (!ok) detail << "chain violated: n=" << n << " e=" << e << " mid=" << mid << " top=" << top;
  out.chain_holds = ok;
  bool any_equality = (std::abs(n - e) < tol) || (std::abs(e - mid) < tol) ||
                      (std::abs(mid - top) < n * tol);
  out.equality_matches_flag = (any_equality == cyclotomic);
  if (!out.equality_matches_flag)
    detail << (detail.str().empty() ? "" : "; ")
           << "equality/cyclotomic mismatch: equality=" << any_equality
           << " cyclotomic=" << cyclotomic;
  out.detail = detail.str();
  return out;
}

double mahler_measure(const IntPoly& p, double tol) {
  double m = std::abs(p.leading().convert_to<double>());
  for (const auto& z : numeric_roots(p, tol)) m *= std::max(1.0, std::abs(z));
  return m;
}

}  // namespace coxlab
