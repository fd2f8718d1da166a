#pragma once

// Shared test corpus: every table algebra plus seeded random quivers and
// posets.

#include <coxeterlab/families.hpp>

#include <random>
#include <vector>

namespace coxlab::testing {

inline QuiverSpec random_quiver(std::mt19937& rng, int max_n = 8) {
  std::uniform_int_distribution<int> size(1, max_n);
  std::uniform_int_distribution<int> pct(0, 99);
  std::uniform_int_distribution<int> mult(1, 2);
  int n = size(rng);
  QuiverSpec q;
  for (int i = 0; i < n; ++i) q.vertices.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pct(rng) < 35) {
        int m = mult(rng);
        for (int k = 0; k < m; ++k) q.arrows.emplace_back(i, j);
      }
  return q;
}

inline PosetSpec random_poset(std::mt19937& rng, int max_n = 8) {
  std::uniform_int_distribution<int> size(1, max_n);
  std::uniform_int_distribution<int> pct(0, 99);
  int n = size(rng);
  PosetSpec p;
  for (int i = 0; i < n; ++i) p.elements.push_back("e" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pct(rng) < 30) p.covers.emplace_back(i, j);
  return p;
}

inline std::vector<std::vector<int>> table_weights() {
  return {{2,3,7},{2,3,8},{2,3,9},{2,3,10},{2,4,5},{2,4,6},{2,4,7},{2,4,8},
          {2,5,5},{2,5,6},{2,5,7},{2,6,6},{3,3,4},{3,3,5},{3,3,6},{3,3,7},
          {3,4,4},{3,4,5},{3,4,6},{3,5,5},{4,4,4},{4,4,5},
          {2,2,2,3},{2,2,2,4},{2,2,2,5},{2,2,2,6},{2,2,3,3},{2,2,3,4},
          {2,2,3,5},{2,2,4,4},{2,3,3,3},{2,3,3,4},{3,3,3,3},
          {2,2,2,2,2},{2,2,2,2,3},{2,2,2,2,4},{2,2,2,3,3},{2,2,2,2,2,2}};
}

// all table algebras followed by `extra` random quivers/posets
inline std::vector<CartanAlgebra> corpus(int extra = 200, unsigned seed = 20260823) {
  std::vector<CartanAlgebra> out;
  for (int n = 1; n <= 8; ++n) out.push_back(dynkin('A', n));
  for (int n = 4; n <= 8; ++n) out.push_back(dynkin('D', n));
  for (int n = 6; n <= 8; ++n) out.push_back(dynkin('E', n));
  for (int p = 1; p <= 4; ++p)
    for (int q = p; q <= 4; ++q) out.push_back(extended_dynkin_a(p, q));
  for (int n = 4; n <= 8; ++n) out.push_back(extended_dynkin('D', n));
  for (int n = 6; n <= 8; ++n) out.push_back(extended_dynkin('E', n));
  for (const auto& w : table_weights()) out.push_back(extended_canonical(w));
  std::mt19937 rng(seed);
  int added = 0;
  while (added < extra) {
    if (added % 2 == 0) {
      out.push_back(from_hereditary_quiver(random_quiver(rng)));
    } else {
      out.push_back(from_poset(random_poset(rng)));
    }
    ++added;
  }
  return out;
}

}  // namespace coxlab::testing
