#include <coxeterlab/cartan.hpp>
#include <coxeterlab/linalg.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coxlab {

namespace {

// topological order of a digraph given by adjacency lists; empty on cycle
std::vector<int> topo_sort(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j : adj[static_cast<size_t>(i)]) indeg[static_cast<size_t>(j)]++;
  std::queue<int> q;
  for (int i = 0; i < n; ++i)
    if (indeg[static_cast<size_t>(i)] == 0) q.push(i);
  std::vector<int> order;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    order.push_back(v);
    for (int j : adj[static_cast<size_t>(v)])
      if (--indeg[static_cast<size_t>(j)] == 0) q.push(j);
  }
  if (static_cast<int>(order.size()) != n) order.clear();
  return order;
}

std::vector<std::string> default_labels(int n, const std::string& prefix) {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

}  // namespace

void QuiverSpec::validate() const {
  const int n = size();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (auto [s, t] : arrows) {
    if (s < 0 || s >= n || t < 0 || t >= n)
      throw std::domain_error("QuiverSpec: arrow endpoint out of range");
    if (s == t) throw std::domain_error("QuiverSpec: loop arrow");
    adj[static_cast<size_t>(s)].push_back(t);
  }
  if (topo_sort(n, adj).empty() && n > 0)
    throw std::domain_error("QuiverSpec: quiver has an oriented cycle");
}

void PosetSpec::validate() const {
  const int n = size();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::domain_error("PosetSpec: cover endpoint out of range");
    if (a == b) throw std::domain_error("PosetSpec: reflexive cover");
    adj[static_cast<size_t>(a)].push_back(b);
  }
  if (topo_sort(n, adj).empty() && n > 0)
    throw std::domain_error("PosetSpec: cover relation has a cycle");
}

IntMat PosetSpec::closure() const {
  validate();
  const int n = size();
  IntMat rel = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i) rel(i, i) = 1;
  for (auto [a, b] : covers) rel(a, b) = 1;
  // Warshall
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (rel(i, k) != 0)
        for (int j = 0; j < n; ++j)
          if (rel(k, j) != 0) rel(i, j) = 1;
  return rel;
}

std::vector<std::vector<int>> GroupAction::elements(int n) const {
  std::vector<int> id(static_cast<size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != n)
      throw std::domain_error("GroupAction: generator size mismatch");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int x : g) {
      if (x < 0 || x >= n || seen[static_cast<size_t>(x)])
        throw std::domain_error("GroupAction: generator is not a permutation");
      seen[static_cast<size_t>(x)] = true;
    }
  }
  std::set<std::vector<int>> closed{id};
  std::queue<std::vector<int>> work;
  work.push(id);
  while (!work.empty()) {
    auto cur = work.front();
    work.pop();
    for (const auto& g : generators) {
      std::vector<int> nxt(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) nxt[static_cast<size_t>(i)] = g[static_cast<size_t>(cur[static_cast<size_t>(i)])];
      if (closed.insert(nxt).second) {
        if (closed.size() > 100000)
          throw std::domain_error("GroupAction: generated group too large");
        work.push(nxt);
      }
    }
  }
  return {closed.begin(), closed.end()};
}

CartanAlgebra::CartanAlgebra(IntMat cartan, std::vector<std::string> labels,
                             std::string provenance)
    : cartan_(std::move(cartan)),
      labels_(std::move(labels)),
      provenance_(std::move(provenance)) {
  const int n = static_cast<int>(cartan_.rows());
  if (cartan_.cols() != n) throw std::domain_error("CartanAlgebra: matrix not square");
  if (static_cast<int>(labels_.size()) != n)
    throw std::domain_error("CartanAlgebra: label count mismatch");
  for (int i = 0; i < n; ++i)
    if (cartan_(i, i) != 1)
      throw std::domain_error("CartanAlgebra: diagonal entry differs from 1");
  Int d = det(cartan_);
  if (d != 1 && d != -1)
    throw std::domain_error("CartanAlgebra: Cartan matrix is not unimodular");
  // triangularizability: i -> j whenever C[i][j] != 0 off the diagonal
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && cartan_(i, j) != 0) adj[static_cast<size_t>(i)].push_back(j);
  topo_order_ = topo_sort(n, adj);
  if (topo_order_.empty() && n > 0)
    throw std::domain_error("CartanAlgebra: matrix is not triangularizable");
}

CartanAlgebra from_hereditary_quiver(const QuiverSpec& q) {
  q.validate();
  const int n = q.size();
  IntMat adj = IntMat::Zero(n, n);
  for (auto [s, t] : q.arrows) adj(s, t) += 1;
  // C = I + A + A^2 + ...; A is nilpotent for an acyclic quiver
  IntMat cartan = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i) cartan(i, i) = 1;
  IntMat pw = adj;
  for (int k = 0; k < n; ++k) {
    bool nonzero = false;
    for (int i = 0; i < n && !nonzero; ++i)
      for (int j = 0; j < n && !nonzero; ++j)
        if (pw(i, j) != 0) nonzero = true;
    if (!nonzero) break;
    cartan += pw;
    pw = pw * adj;
  }
  return CartanAlgebra(std::move(cartan),
                       q.vertices.empty() ? default_labels(n, "v") : q.vertices,
                       "hereditary-quiver");
}

CartanAlgebra from_poset(const PosetSpec& p) {
  IntMat cartan = p.closure();
  return CartanAlgebra(std::move(cartan),
                       p.elements.empty() ? default_labels(p.size(), "e") : p.elements,
                       "poset-incidence");
}

CartanAlgebra truncated_linear(int n, int r) {
  if (n < 1) throw std::domain_error("truncated_linear: n must be >= 1");
  if (r < 2) throw std::domain_error("truncated_linear: r must be >= 2");
  IntMat cartan = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n && j - i < r; ++j) cartan(i, j) = 1;
  std::ostringstream prov;
  prov << "truncated-linear(" << n << "," << r << ")";
  return CartanAlgebra(std::move(cartan), default_labels(n, "v"), prov.str());
}

CartanAlgebra tensor(const CartanAlgebra& a, const CartanAlgebra& b) {
  IntMat cartan = Eigen::kroneckerProduct(a.cartan(), b.cartan());
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(a.size()) * static_cast<size_t>(b.size()));
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels()) labels.push_back(la + "*" + lb);
  return CartanAlgebra(std::move(cartan), std::move(labels), "tensor");
}

CartanAlgebra one_point_extension(const CartanAlgebra& a, const IntVec& d) {
  const int n = a.size();
  if (static_cast<int>(d.size()) != n)
    throw std::domain_error("one_point_extension: vector length mismatch");
  for (int i = 0; i < n; ++i)
    if (d(i) < 0)
      throw std::domain_error("one_point_extension: negative entry in class vector");
  IntMat cartan = IntMat::Zero(n + 1, n + 1);
  cartan.topLeftCorner(n, n) = a.cartan();
  for (int i = 0; i < n; ++i) cartan(i, n) = d(i);
  cartan(n, n) = 1;
  auto labels = a.labels();
  labels.push_back("ext");
  return CartanAlgebra(std::move(cartan), std::move(labels), "one-point-extension");
}

CartanAlgebra double_repetitive(const CartanAlgebra& a) {
  const int n = a.size();
  IntMat cartan = IntMat::Zero(2 * n, 2 * n);
  cartan.topLeftCorner(n, n) = a.cartan();
  cartan.topRightCorner(n, n) = a.cartan().transpose();
  cartan.bottomRightCorner(n, n) = a.cartan();
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l);
  for (const auto& l : a.labels()) labels.push_back(l + "'");
  return CartanAlgebra(std::move(cartan), std::move(labels), "double-repetitive");
}

CartanAlgebra galois_quotient(const CartanAlgebra& a, const GroupAction& g) {
  const int n = a.size();
  auto group = g.elements(n);
  const IntMat& c = a.cartan();
  for (const auto& perm : group) {
    bool is_id = true;
    for (int i = 0; i < n; ++i)
      if (perm[static_cast<size_t>(i)] != i) is_id = false;
    // structure preservation: the permutation must fix the Cartan matrix
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (c(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) != c(i, j))
          throw std::domain_error("galois_quotient: action does not preserve the algebra");
    if (!is_id)
      for (int i = 0; i < n; ++i)
        if (perm[static_cast<size_t>(i)] == i)
          throw std::domain_error("galois_quotient: action is not free");
  }
  // orbits
  std::vector<int> orbit_of(static_cast<size_t>(n), -1);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < n; ++i) {
    if (orbit_of[static_cast<size_t>(i)] >= 0) continue;
    int id = static_cast<int>(orbits.size());
    std::vector<int> orb;
    for (const auto& perm : group) {
      int j = perm[static_cast<size_t>(i)];
      if (orbit_of[static_cast<size_t>(j)] < 0) {
        orbit_of[static_cast<size_t>(j)] = id;
        orb.push_back(j);
      }
    }
    orbits.push_back(std::move(orb));
  }
  const int m = static_cast<int>(orbits.size());
  IntMat cartan = IntMat::Zero(m, m);
  for (int s = 0; s < m; ++s) {
    for (int t = 0; t < m; ++t) {
      bool first = true;
      Int value{0};
      for (int i : orbits[static_cast<size_t>(s)]) {
        Int sum{0};
        for (int j : orbits[static_cast<size_t>(t)]) sum += c(i, j);
        if (first) {
          value = sum;
          first = false;
        } else if (sum != value) {
          throw std::domain_error("galois_quotient: orbit sum depends on representative");
        }
      }
      cartan(s, t) = value;
    }
  }
  std::vector<std::string> labels;
  for (const auto& orb : orbits)
    labels.push_back("[" + a.labels()[static_cast<size_t>(orb.front())] + "]");
  return CartanAlgebra(std::move(cartan), std::move(labels), "galois-quotient");
}

CartanAlgebra canonical(const std::vector<int>& weights) {
  if (weights.size() < 2) throw std::domain_error("canonical: need at least 2 weights");
  for (int p : weights)
    if (p < 2) throw std::domain_error("canonical: weights must be >= 2");
  int n = 2;
  for (int p : weights) n += p - 1;
  IntMat cartan = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i) cartan(i, i) = 1;
  const int omega = n - 1;
  int idx = 1;
  std::vector<std::string> labels(static_cast<size_t>(n));
  labels[0] = "alpha";
  labels[static_cast<size_t>(omega)] = "omega";
  for (size_t arm = 0; arm < weights.size(); ++arm) {
    const int len = weights[arm] - 1;
    for (int k = 0; k < len; ++k) {
      const int v = idx + k;
      labels[static_cast<size_t>(v)] =
          "a" + std::to_string(arm + 1) + "_" + std::to_string(k + 1);
      cartan(0, v) = 1;
      cartan(v, omega) = 1;
      for (int k2 = k + 1; k2 < len; ++k2) cartan(v, idx + k2) = 1;
    }
    idx += len;
  }
  // t monomial paths from source to sink modulo t-2 relations
  cartan(0, omega) = 2;
  std::ostringstream prov;
  prov << "canonical(";
  for (size_t i = 0; i < weights.size(); ++i)
    prov << (i ? "," : "") << weights[i];
  prov << ")";
  return CartanAlgebra(std::move(cartan), std::move(labels), prov.str());
}

CartanAlgebra supercanonical(const std::vector<PosetSpec>& posets) {
  if (posets.size() < 2)
    throw std::domain_error("supercanonical: need at least 2 posets");
  int n = 2;
  for (const auto& s : posets) n += s.size();
  IntMat cartan = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i) cartan(i, i) = 1;
  const int omega = n - 1;
  std::vector<std::string> labels(static_cast<size_t>(n));
  labels[0] = "alpha";
  labels[static_cast<size_t>(omega)] = "omega";
  int idx = 1;
  for (size_t arm = 0; arm < posets.size(); ++arm) {
    const PosetSpec& s = posets[arm];
    IntMat rel = s.closure();
    for (int i = 0; i < s.size(); ++i) {
      labels[static_cast<size_t>(idx + i)] =
          "s" + std::to_string(arm + 1) + "_" + std::to_string(i + 1);
      cartan(0, idx + i) = 1;
      cartan(idx + i, omega) = 1;
      for (int j = 0; j < s.size(); ++j)
        if (i != j && rel(i, j) != 0) cartan(idx + i, idx + j) = 1;
    }
    idx += s.size();
  }
  cartan(0, omega) = 2;
  return CartanAlgebra(std::move(cartan), std::move(labels), "supercanonical");
}

CartanAlgebra delete_vertex(const CartanAlgebra& a, int v) {
  const int n = a.size();
  if (v < 0 || v >= n) throw std::domain_error("delete_vertex: index out of range");
  IntMat cartan(n - 1, n - 1);
  std::vector<std::string> labels;
  for (int i = 0, ii = 0; i < n; ++i) {
    if (i == v) continue;
    for (int j = 0, jj = 0; j < n; ++j) {
      if (j == v) continue;
      cartan(ii, jj) = a.cartan()(i, j);
      ++jj;
    }
    labels.push_back(a.labels()[static_cast<size_t>(i)]);
    ++ii;
  }
  return CartanAlgebra(std::move(cartan), std::move(labels),
                       a.provenance() + "/delete-vertex");
}

}  // namespace coxlab
