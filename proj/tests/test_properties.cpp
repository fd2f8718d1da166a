#include <coxeterlab/spectral.hpp>

#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <numeric>

#include "corpus.hpp"

using namespace coxlab;
using coxlab::testing::corpus;

namespace {

const std::vector<CartanAlgebra>& shared_corpus() {
  static const std::vector<CartanAlgebra> c = corpus(200);
  return c;
}

}  // namespace

TEST_CASE("corpus: monic, self-reciprocal, chi(-1) square") {
  for (const auto& a : shared_corpus()) {
    CoxeterMatrix cm(a);
    CHECK(cm.charpoly().is_monic());
    CHECK(cm.charpoly().is_self_reciprocal());
    CHECK(chi_minus_one_square(cm));
  }
}

TEST_CASE("corpus: inequality chain with equality iff cyclotomic") {
  for (const auto& a : shared_corpus()) {
    CoxeterMatrix cm(a);
    auto [cyc, fac] = is_cyclotomic_type(cm);
    auto chain = verify_inequality_chain(measures(cm, 1e-10), cyc);
    CHECK_MESSAGE(chain.chain_holds, a.provenance(), ": ", chain.detail);
    CHECK_MESSAGE(chain.equality_matches_flag, a.provenance(), ": ", chain.detail);
  }
}

TEST_CASE("corpus: energy at least n and cyclotomic roots on the circle") {
  for (const auto& a : shared_corpus()) {
    CoxeterMatrix cm(a);
    auto rep = measures(cm, 1e-10);
    CHECK(rep.energy >= a.size() - 1e-8);
    if (rep.certified_cyclotomic) continue;
    auto [cyc, fac] = is_cyclotomic_type(cm);
    if (cyc)
      for (const auto& z : rep.roots) CHECK(std::abs(std::abs(z) - 1.0) < 1e-8);
  }
}

TEST_CASE("random tensor pairs multiply Coxeter polynomials") {
  const auto& all = shared_corpus();
  std::mt19937 rng(77);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  int done = 0;
  while (done < 50) {
    const auto& a = all[pick(rng)];
    const auto& b = all[pick(rng)];
    if (a.size() * b.size() > 36) continue;
    // phi_{A (x) B} = -phi_A (x) phi_B, so the product polynomial appears
    // with its roots negated
    CHECK(coxeter_matrix(tensor(a, b)).charpoly() ==
          tensor_product(coxeter_matrix(a).charpoly(), coxeter_matrix(b).charpoly())
              .reflected());
    ++done;
  }
}

TEST_CASE("double repetitive is Phi_6 tensor chi") {
  for (const auto& a : shared_corpus()) {
    if (a.size() > 6) continue;
    CHECK(coxeter_matrix(double_repetitive(a)).charpoly() ==
          tensor_product(cyclotomic(6), coxeter_matrix(a).charpoly()));
  }
}

TEST_CASE("galois quotients: squarefree spectral containment") {
  struct Case { CartanAlgebra a; GroupAction g; };
  std::vector<Case> cases;

  // complete bipartite covers of the m-Kronecker, m = 2, 3, 4
  for (int m = 2; m <= 4; ++m) {
    QuiverSpec q;
    for (int i = 0; i < 2 * m; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) q.arrows.emplace_back(i, m + j);
    std::vector<int> rot(static_cast<size_t>(2 * m));
    for (int i = 0; i < m; ++i) {
      rot[static_cast<size_t>(i)] = (i + 1) % m;
      rot[static_cast<size_t>(m + i)] = m + (i + 1) % m;
    }
    cases.push_back({from_hereditary_quiver(q), GroupAction{{rot}}});
  }

  // two disjoint copies with the swap
  auto doubled = [](const QuiverSpec& q) {
    QuiverSpec d;
    int n = q.size();
    for (int copy = 0; copy < 2; ++copy)
      for (int i = 0; i < n; ++i)
        d.vertices.push_back(q.vertices[static_cast<size_t>(i)] + (copy ? "'" : ""));
    for (int copy = 0; copy < 2; ++copy)
      for (auto [s, t] : q.arrows) d.arrows.emplace_back(copy * n + s, copy * n + t);
    return d;
  };
  auto swap_action = [](int n) {
    std::vector<int> perm(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
      perm[static_cast<size_t>(i)] = n + i;
      perm[static_cast<size_t>(n + i)] = i;
    }
    return GroupAction{{perm}};
  };
  for (const auto& q : {star_quiver({2, 2}), star_quiver({2, 3, 4}), star_quiver({3, 3}),
                        star_quiver({2, 2, 2})}) {
    cases.push_back({from_hereditary_quiver(doubled(q)), swap_action(q.size())});
  }

  // three disjoint copies of A2 with the cyclic shift
  {
    QuiverSpec q;
    for (int i = 0; i < 6; ++i) q.vertices.push_back(std::to_string(i));
    for (int c = 0; c < 3; ++c) q.arrows.emplace_back(2 * c, 2 * c + 1);
    cases.push_back({from_hereditary_quiver(q), GroupAction{{{2, 3, 4, 5, 0, 1}}}});
  }

  // alternating 8-cycle and 12-cycle under rotation
  for (int m : {4, 6}) {
    QuiverSpec q;
    for (int i = 0; i < 2 * m; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 0; i < m; ++i) {
      q.arrows.emplace_back(2 * i, (2 * i + 1) % (2 * m));
      q.arrows.emplace_back(2 * i, (2 * i + 2 * m - 1) % (2 * m));
    }
    std::vector<int> rot(static_cast<size_t>(2 * m));
    for (int i = 0; i < 2 * m; ++i) rot[static_cast<size_t>(i)] = (i + 4) % (2 * m);
    cases.push_back({from_hereditary_quiver(q), GroupAction{{rot}}});
  }

  // incidence algebra of two disjoint chains with the swap
  {
    PosetSpec p;
    for (int i = 0; i < 6; ++i) p.elements.push_back(std::to_string(i));
    p.covers = {{0, 1}, {1, 2}, {3, 4}, {4, 5}};
    cases.push_back({from_poset(p), GroupAction{{{3, 4, 5, 0, 1, 2}}}});
  }

  CHECK(cases.size() == 11);
  for (const auto& [a, g] : cases) {
    auto b = galois_quotient(a, g);
    IntPoly sf_a = squarefree_part(coxeter_matrix(a).charpoly());
    IntPoly sf_b = squarefree_part(coxeter_matrix(b).charpoly());
    CHECK(sf_a.divides(sf_b));
  }
}

TEST_CASE("homological form implications") {
  for (const auto& a : shared_corpus()) {
    auto hf = homological_form(a);
    CoxeterMatrix cm(a);
    if (hf.classification == FormClass::PositiveDefinite)
      CHECK(periodicity(cm).is_periodic());
    if (hf.classification != FormClass::Indefinite) {
      auto [cyc, fac] = is_cyclotomic_type(cm);
      CHECK(cyc);
    }
  }
}

TEST_CASE("coefficient conditions across the cyclotomic corpus") {
  for (const auto& a : shared_corpus()) {
    CoxeterMatrix cm(a);
    auto [cyc, fac] = is_cyclotomic_type(cm);
    if (!cyc) continue;
    auto rep = coefficient_conditions(fac, a.size(), cm.charpoly().coeff(1));
    CHECK_MESSAGE(rep.all_ok(), a.provenance());
    // special values agree with direct evaluation
    CHECK(special_value_formula(fac, 1) == cm.charpoly().eval(Int(1)));
    CHECK(special_value_formula(fac, -1) == cm.charpoly().eval(Int(-1)));
  }
}

TEST_CASE("eigenvector orthogonality for non-inverse eigenvalue pairs") {
  for (const auto& a : {dynkin('E', 6), dynkin('D', 5), extended_canonical({2, 3, 7})}) {
    CoxeterMatrix cm(a);
    const int n = a.size();
    Eigen::MatrixXd phi(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) phi(i, j) = cm.phi()(i, j).convert_to<double>();
    Eigen::EigenSolver<Eigen::MatrixXd> es(phi);
    RatMat cinv_rat = inverse(a.cartan().cast<Rat>());
    Eigen::MatrixXcd cinv(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cinv(i, j) = cinv_rat(i, j).convert_to<double>();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto lam = es.eigenvalues()(i), mu = es.eigenvalues()(j);
        if (std::abs(lam * mu - 1.0) < 1e-6) continue;
        Eigen::VectorXcd u = es.eigenvectors().col(i), v = es.eigenvectors().col(j);
        std::complex<double> form = (u.transpose() * cinv * v)(0, 0);
        CHECK(std::abs(form) < 1e-8);
      }
  }
}

TEST_CASE("supercanonical algebras of Dynkin class: periodicity equivalences") {
  std::vector<std::vector<PosetSpec>> inputs = {
      {chain_poset(1), chain_poset(1), poset_dn(4)},
      {chain_poset(1), chain_poset(1), poset_dn(5)},
      {chain_poset(1), chain_poset(1), poset_dn(6)},
      {chain_poset(1), chain_poset(2), poset_dn(4)},
      {chain_poset(1), chain_poset(2)},
      {chain_poset(1), chain_poset(4)},
      {chain_poset(2), chain_poset(2), chain_poset(2)},
      {chain_poset(1), chain_poset(2), chain_poset(5)},
      {chain_poset(1), chain_poset(1), chain_poset(1), chain_poset(1)},
      {poset_dn(4), chain_poset(1)},
      {poset_dn(5), poset_dn(4)},
  };
  for (const auto& posets : inputs) {
    // the class is Dynkin only if every factor poset has a periodic Coxeter
    // transformation
    unsigned long p = 1;
    bool dynkin_class = true;
    for (const auto& s : posets) {
      auto sper = periodicity(coxeter_matrix(from_poset(s)));
      if (!sper.is_periodic()) {
        dynkin_class = false;
        break;
      }
      p = std::lcm(p, *sper.period);
    }
    REQUIRE(dynkin_class);
    auto a = supercanonical(posets);
    auto per = periodicity(coxeter_matrix(a));
    bool periodic = per.is_periodic();
    auto ha = homological_form(a);
    bool rad2 = ha.classification == FormClass::NonNegative && ha.radical_rank == 2;
    auto b = delete_vertex(a, 0);
    auto hb = homological_form(b);
    bool rad1 = hb.classification == FormClass::NonNegative && hb.radical_rank == 1;
    CHECK(periodic == rad2);
    CHECK(periodic == rad1);
    if (periodic) CHECK(*per.period == p);
  }
}
