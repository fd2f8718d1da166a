#include <coxeterlab/families.hpp>
#include <coxeterlab/spectral.hpp>

#include <doctest.h>

#include <cmath>

using namespace coxlab;

TEST_CASE("numeric roots of Phi_3") {
  auto roots = numeric_roots(IntPoly{1, 1, 1}, 1e-10);
  REQUIRE(roots.size() == 2);
  for (const auto& z : roots) {
    CHECK(std::abs(std::abs(z) - 1.0) < 1e-9);
    CHECK(std::abs(z.real() + 0.5) < 1e-9);
  }
}

TEST_CASE("numeric roots of a real quadratic") {
  auto roots = numeric_roots(IntPoly{1, -3, 1}, 1e-12);
  REQUIRE(roots.size() == 2);
  double hi = std::max(std::abs(roots[0]), std::abs(roots[1]));
  double lo = std::min(std::abs(roots[0]), std::abs(roots[1]));
  CHECK(hi == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-9));
  CHECK(lo == doctest::Approx((3 - std::sqrt(5.0)) / 2).epsilon(1e-9));
}

TEST_CASE("zero roots are stripped and restored") {
  auto roots = numeric_roots(IntPoly{0, 0, -1, 1}, 1e-10);
  REQUIRE(roots.size() == 3);
  int zeros = 0;
  for (const auto& z : roots) zeros += std::abs(z) < 1e-12;
  CHECK(zeros == 2);
}

TEST_CASE("invalid root-finding inputs") {
  CHECK_THROWS_AS(numeric_roots(IntPoly::zero(), 1e-10), std::domain_error);
  CHECK_THROWS_AS(numeric_roots(IntPoly{1, 1}, -1.0), std::domain_error);
}

TEST_CASE("Lehmer polynomial") {
  IntPoly lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  auto roots = numeric_roots(lehmer, 1e-12);
  int outside = 0;
  double largest = 0;
  for (const auto& z : roots) {
    if (std::abs(z) > 1 + 1e-9) {
      ++outside;
      largest = std::max(largest, std::abs(z));
      CHECK(std::abs(z.imag()) < 1e-9);
    }
  }
  CHECK(outside == 1);
  CHECK(largest == doctest::Approx(1.176280818).epsilon(1e-6));
  CHECK(mahler_measure(lehmer) == doctest::Approx(1.176280818).epsilon(1e-6));
}

TEST_CASE("certified measures for E8") {
  auto rep = measures(coxeter_matrix(dynkin('E', 8)), 1e-10);
  CHECK(rep.certified_cyclotomic);
  CHECK(rep.spectral_radius == 1.0);
  CHECK(rep.mahler == 1.0);
  CHECK(rep.energy == 8.0);
}

TEST_CASE("wild star measures") {
  auto cm = coxeter_matrix(from_hereditary_quiver(star_quiver({2, 3, 7})));
  auto rep = measures(cm, 1e-10);
  CHECK_FALSE(rep.certified_cyclotomic);
  CHECK(rep.mahler == doctest::Approx(1.176280818).epsilon(1e-5));
  // eight roots on the circle plus Lehmer's number and its inverse
  CHECK(rep.energy == doctest::Approx(8 + 1.176280818 + 1 / 1.176280818).epsilon(1e-5));
  auto chain = verify_inequality_chain(rep, false);
  CHECK(chain.chain_holds);
  CHECK(chain.equality_matches_flag);
}

TEST_CASE("three-arrow Kronecker chain is strict") {
  IntMat c(2, 2);
  c << Int(1), Int(3), Int(0), Int(1);
  CoxeterMatrix cm(CartanAlgebra(c, {"a", "b"}, "kronecker-3"));
  CHECK(cm.charpoly() == IntPoly{1, -7, 1});
  auto rep = measures(cm, 1e-10);
  CHECK(rep.spectral_radius == doctest::Approx((7 + std::sqrt(45.0)) / 2).epsilon(1e-9));
  auto chain = verify_inequality_chain(rep, false);
  CHECK(chain.chain_holds);
  CHECK(chain.equality_matches_flag);
}

TEST_CASE("dynkin chain attains equality") {
  for (char t : {'A', 'D'}) {
    auto cm = coxeter_matrix(dynkin(t, 5));
    auto rep = measures(cm, 1e-10);
    auto chain = verify_inequality_chain(rep, true);
    CHECK(chain.chain_holds);
    CHECK(chain.equality_matches_flag);
  }
}

TEST_CASE("mahler multiplicativity") {
  IntPoly f{1, -3, 1}, g{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  CHECK(mahler_measure(f * g) ==
        doctest::Approx(mahler_measure(f) * mahler_measure(g)).epsilon(1e-8));
}

TEST_CASE("roots close under conjugation and inversion for Coxeter polynomials") {
  auto cm = coxeter_matrix(from_hereditary_quiver(star_quiver({2, 4, 9})));
  auto roots = numeric_roots(cm.charpoly(), 1e-10);
  for (const auto& z : roots) {
    double best_conj = 1e9, best_inv = 1e9;
    for (const auto& w : roots) {
      best_conj = std::min(best_conj, std::abs(w - std::conj(z)));
      best_inv = std::min(best_inv, std::abs(w - 1.0 / z));
    }
    CHECK(best_conj < 1e-7);
    CHECK(best_inv < 1e-7);
  }
}
