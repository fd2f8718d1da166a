#include <coxeterlab/families.hpp>

#include <stdexcept>
#include <string>

namespace coxlab {

QuiverSpec star_quiver(const std::vector<int>& weights) {
  for (int p : weights)
    if (p < 2) throw std::domain_error("star_quiver: weights must be >= 2");
  QuiverSpec q;
  q.vertices.push_back("c");
  int idx = 1;
  for (size_t arm = 0; arm < weights.size(); ++arm) {
    int prev = 0;
    for (int k = 0; k < weights[arm] - 1; ++k) {
      q.vertices.push_back("a" + std::to_string(arm + 1) + "_" + std::to_string(k + 1));
      q.arrows.emplace_back(prev, idx);
      prev = idx++;
    }
  }
  return q;
}

CartanAlgebra dynkin(char type, int n) {
  switch (type) {
    case 'A': {
      if (n < 1) throw std::domain_error("dynkin: A_n needs n >= 1");
      QuiverSpec q;
      for (int i = 0; i < n; ++i) q.vertices.push_back(std::to_string(i + 1));
      for (int i = 0; i + 1 < n; ++i) q.arrows.emplace_back(i, i + 1);
      return from_hereditary_quiver(q);
    }
    case 'D':
      if (n < 4) throw std::domain_error("dynkin: D_n needs n >= 4");
      return from_hereditary_quiver(star_quiver({2, 2, n - 2}));
    case 'E':
      if (n == 6) return from_hereditary_quiver(star_quiver({2, 3, 3}));
      if (n == 7) return from_hereditary_quiver(star_quiver({2, 3, 4}));
      if (n == 8) return from_hereditary_quiver(star_quiver({2, 3, 5}));
      throw std::domain_error("dynkin: E_n needs n in {6,7,8}");
    default:
      throw std::domain_error("dynkin: type must be A, D or E");
  }
}

CartanAlgebra extended_dynkin_a(int p, int q) {
  if (p < 1 || q < 1) throw std::domain_error("extended_dynkin_a: p, q >= 1");
  // two directed paths from a common source to a common sink, of p and q
  // arrows respectively
  QuiverSpec spec;
  const int n = p + q;
  for (int i = 0; i < n; ++i) spec.vertices.push_back(std::to_string(i));
  const int sink = n - 1;
  int idx = 1;
  int prev = 0;
  for (int k = 0; k < p - 1; ++k) {
    spec.arrows.emplace_back(prev, idx);
    prev = idx++;
  }
  spec.arrows.emplace_back(prev, sink);
  prev = 0;
  for (int k = 0; k < q - 1; ++k) {
    spec.arrows.emplace_back(prev, idx);
    prev = idx++;
  }
  spec.arrows.emplace_back(prev, sink);
  return from_hereditary_quiver(spec);
}

CartanAlgebra extended_dynkin(char type, int n) {
  switch (type) {
    case 'D': {
      if (n < 4) throw std::domain_error("extended_dynkin: D~n needs n >= 4");
      // two leaves into each end of a chain of n-3 vertices
      QuiverSpec q;
      const int total = n + 1;
      for (int i = 0; i < total; ++i) q.vertices.push_back(std::to_string(i));
      // 0,1 leaves -> 2; chain 2..n-2; n-2 -> leaves n-1, n
      q.arrows.emplace_back(0, 2);
      q.arrows.emplace_back(1, 2);
      for (int i = 2; i < n - 2; ++i) q.arrows.emplace_back(i, i + 1);
      q.arrows.emplace_back(n - 2, n - 1);
      q.arrows.emplace_back(n - 2, n);
      return from_hereditary_quiver(q);
    }
    case 'E':
      if (n == 6) return from_hereditary_quiver(star_quiver({3, 3, 3}));
      if (n == 7) return from_hereditary_quiver(star_quiver({2, 4, 4}));
      if (n == 8) return from_hereditary_quiver(star_quiver({2, 3, 6}));
      throw std::domain_error("extended_dynkin: E~n needs n in {6,7,8}");
    default:
      throw std::domain_error("extended_dynkin: type must be D or E (use extended_dynkin_a for A~)");
  }
}

CartanAlgebra extended_canonical(const std::vector<int>& weights) {
  CartanAlgebra base = canonical(weights);
  IntVec d = base.cartan().col(0);
  return one_point_extension(base, d);
}

IntPoly supercanonical_poly(const std::vector<PosetSpec>& posets) {
  if (posets.size() < 2)
    throw std::domain_error("supercanonical_poly: need at least 2 posets");
  IntPoly t = IntPoly::monomial(Int(1), 1);
  IntPoly result = (t - IntPoly::one()) * (t - IntPoly::one());
  for (const auto& s : posets)
    result = result * coxeter_matrix(from_poset(s)).charpoly();
  return result;
}

PosetSpec chain_poset(int n) {
  if (n < 0) throw std::domain_error("chain_poset: n must be >= 0");
  PosetSpec p;
  for (int i = 0; i < n; ++i) p.elements.push_back(std::to_string(i + 1));
  for (int i = 0; i + 1 < n; ++i) p.covers.emplace_back(i, i + 1);
  return p;
}

PosetSpec poset_dn(int n) {
  if (n < 3) throw std::domain_error("poset_dn: n must be >= 3");
  PosetSpec p;
  for (int i = 0; i < n; ++i) p.elements.push_back(std::to_string(i + 1));
  p.covers.emplace_back(0, 2);
  p.covers.emplace_back(1, 2);
  for (int i = 2; i + 1 < n; ++i) p.covers.emplace_back(i, i + 1);
  return p;
}

PosetSpec poset_semichain(int n, int m) {
  if (m < 1 || n < 2 * m) throw std::domain_error("poset_semichain: need n >= 2m >= 2");
  PosetSpec p;
  // elements: 1..m, 1'..m', then the tail 2m..n
  for (int i = 1; i <= m; ++i) p.elements.push_back(std::to_string(i));
  for (int i = 1; i <= m; ++i) p.elements.push_back(std::to_string(i) + "'");
  for (int j = 2 * m; j <= n; ++j) p.elements.push_back(std::to_string(j));
  auto top = [&](int i) { return i - 1; };        // index of i
  auto bot = [&](int i) { return m + i - 1; };    // index of i'
  auto tail = [&](int j) { return 2 * m + (j - 2 * m); };  // index of j >= 2m
  for (int i = 1; i < m; ++i) {
    p.covers.emplace_back(top(i), top(i + 1));
    p.covers.emplace_back(top(i), bot(i + 1));
    p.covers.emplace_back(bot(i), bot(i + 1));
    p.covers.emplace_back(bot(i), top(i + 1));
  }
  p.covers.emplace_back(top(m), tail(2 * m));
  p.covers.emplace_back(bot(m), tail(2 * m));
  for (int j = 2 * m; j < n; ++j) p.covers.emplace_back(tail(j), tail(j + 1));
  return p;
}

}  // namespace coxlab
