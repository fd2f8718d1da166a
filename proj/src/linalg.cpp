#include <coxeterlab/linalg.hpp>

#include <numeric>
#include <vector>

namespace coxlab {

IntPoly char_poly(const IntMat& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::domain_error("char_poly: matrix not square");
  std::vector<Int> c(static_cast<size_t>(n) + 1, Int(0));
  c[static_cast<size_t>(n)] = 1;
  // Faddeev-LeVerrier: M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k
  IntMat m = a;
  for (Eigen::Index k = 1; k <= n; ++k) {
    if (k > 1) {
      IntMat prev = m;
      for (Eigen::Index i = 0; i < n; ++i) prev(i, i) += c[static_cast<size_t>(n - k + 1)];
      m = a * prev;
    }
    Int tr{0};
    for (Eigen::Index i = 0; i < n; ++i) tr += m(i, i);
    if (tr % Int(k) != 0) throw std::logic_error("char_poly: inexact trace division");
    c[static_cast<size_t>(n - k)] = -tr / Int(k);
  }
  return IntPoly(std::move(c));
}

Int det(const IntMat& m) {
  IntPoly chi = char_poly(m);
  Int c0 = chi.coeff(0);
  return (m.rows() % 2 == 0) ? c0 : -c0;
}

RatMat inverse(const RatMat& m) {
  const Eigen::Index n = m.rows();
  RatMat a = m;
  RatMat inv = RatMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) inv(i, i) = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (a(r, col) != 0) { piv = r; break; }
    if (piv < 0) throw std::domain_error("inverse: singular matrix");
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      inv.row(piv).swap(inv.row(col));
    }
    Rat d = a(col, col);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rat f = a(r, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

IntMat inverse_unimodular(const IntMat& m) {
  RatMat inv = inverse(m.cast<Rat>());
  IntMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Rat& v = inv(i, j);
      if (boost::multiprecision::denominator(v) != 1)
        throw std::domain_error("inverse_unimodular: matrix is not unimodular");
      out(i, j) = boost::multiprecision::numerator(v);
    }
  return out;
}

IntMat mat_pow(const IntMat& m, unsigned long e) {
  const Eigen::Index n = m.rows();
  IntMat result = IntMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) result(i, i) = 1;
  IntMat base = m;
  while (e > 0) {
    if (e & 1ul) result = result * base;
    base = base * base;
    e >>= 1ul;
  }
  return result;
}

IntMat companion(const IntPoly& p) {
  if (!p.is_monic()) throw std::domain_error("companion: polynomial must be monic");
  const int n = p.degree();
  IntMat c = IntMat::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) c(i + 1, i) = 1;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i);
  return c;
}

IntPoly minimal_poly(const IntMat& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::domain_error("minimal_poly: matrix not square");
  const Eigen::Index nn = n * n;
  // incremental row reduction of vectorized powers of a
  std::vector<std::vector<Rat>> rows;        // echelon rows
  std::vector<Eigen::Index> pivots;          // pivot column per row
  std::vector<std::vector<Rat>> combos;      // expression in powers of a
  IntMat pw = IntMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) pw(i, i) = 1;
  for (Eigen::Index k = 0; k <= n; ++k) {
    std::vector<Rat> v(static_cast<size_t>(nn));
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        v[static_cast<size_t>(i * n + j)] = Rat(pw(i, j));
    std::vector<Rat> combo(static_cast<size_t>(k) + 1, Rat(0));
    combo.back() = 1;
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rat& piv = v[static_cast<size_t>(pivots[r])];
      if (piv == 0) continue;
      Rat f = piv / rows[r][static_cast<size_t>(pivots[r])];
      for (Eigen::Index j = 0; j < nn; ++j)
        v[static_cast<size_t>(j)] -= f * rows[r][static_cast<size_t>(j)];
      for (size_t j = 0; j < combos[r].size(); ++j) combo[j] -= f * combos[r][j];
    }
    Eigen::Index piv = -1;
    for (Eigen::Index j = 0; j < nn; ++j)
      if (v[static_cast<size_t>(j)] != 0) { piv = j; break; }
    if (piv < 0) {
      // dependency found: combo gives the monic annihilator of degree k
      std::vector<Int> coeffs(combo.size());
      for (size_t j = 0; j < combo.size(); ++j) {
        if (boost::multiprecision::denominator(combo[j]) != 1)
          throw std::logic_error("minimal_poly: non-integral coefficient");
        coeffs[j] = boost::multiprecision::numerator(combo[j]);
      }
      return IntPoly(std::move(coeffs));
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    combos.push_back(std::move(combo));
    pw = pw * a;
  }
  throw std::logic_error("minimal_poly: no annihilator up to degree n");
}

InertiaReport classify_symmetric(const RatMat& s0) {
  const Eigen::Index n = s0.rows();
  RatMat s = s0;
  std::vector<Eigen::Index> active(static_cast<size_t>(n));
  std::iota(active.begin(), active.end(), 0);
  InertiaReport rep;
  int zero = 0;
  while (!active.empty()) {
    Eigen::Index piv = -1;
    size_t piv_at = 0;
    for (size_t t = 0; t < active.size(); ++t)
      if (s(active[t], active[t]) != 0) { piv = active[t]; piv_at = t; break; }
    if (piv < 0) {
      // no usable diagonal; any remaining off-diagonal entry forces a
      // hyperbolic (indefinite) 2x2 block
      for (size_t t = 0; t < active.size(); ++t)
        for (size_t u = t + 1; u < active.size(); ++u)
          if (s(active[t], active[u]) != 0) {
            rep.classification = FormClass::Indefinite;
            rep.positive++;
            rep.negative++;
            return rep;
          }
      zero += static_cast<int>(active.size());
      break;
    }
    const Rat d = s(piv, piv);
    if (d > 0) rep.positive++; else rep.negative++;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(piv_at));
    for (Eigen::Index i : active)
      for (Eigen::Index j : active)
        s(i, j) -= s(i, piv) * s(piv, j) / d;
  }
  rep.radical_rank = zero;
  if (rep.negative > 0)
    rep.classification = FormClass::Indefinite;
  else if (zero == 0)
    rep.classification = FormClass::PositiveDefinite;
  else
    rep.classification = FormClass::NonNegative;
  return rep;
}

}  // namespace coxlab
