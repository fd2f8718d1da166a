#include <coxeterlab/int_poly.hpp>

#include <doctest.h>

using namespace coxlab;

TEST_CASE("basic arithmetic and degree") {
  IntPoly p{1, 2, 3};  // 1 + 2T + 3T^2
  CHECK(p.degree() == 2);
  CHECK(IntPoly::zero().degree() == -1);
  CHECK(p + IntPoly{0, -2} == IntPoly{1, 0, 3});
  CHECK(p - p == IntPoly::zero());
  CHECK(p * IntPoly::one() == p);
  CHECK(IntPoly{1, 1} * IntPoly{-1, 1} == IntPoly{-1, 0, 1});
  CHECK(IntPoly::monomial(Int(5), 3) == IntPoly{0, 0, 0, 5});
  CHECK(p.coeff(7) == 0);
}

TEST_CASE("trailing zeros are trimmed") {
  IntPoly p(std::vector<Int>{Int(1), Int(0), Int(0)});
  CHECK(p.degree() == 0);
  CHECK(p == IntPoly::one());
}

TEST_CASE("divmod and exact division") {
  IntPoly num = IntPoly{-1, 0, 1};  // (T-1)(T+1)
  auto [q, r] = num.divmod(IntPoly{1, 1});
  CHECK(q == IntPoly{-1, 1});
  CHECK(r.is_zero());
  CHECK(num.divide_exact(IntPoly{-1, 1}) == IntPoly{1, 1});
  CHECK_THROWS_AS(num.divide_exact(IntPoly{1, 0, 0, 1}), std::domain_error);
  CHECK_THROWS_AS((IntPoly{1, 1}).divide_exact(IntPoly::zero()), std::domain_error);
  CHECK(num.divides(IntPoly{1, 1}));
  CHECK_FALSE(IntPoly{1, 1, 1}.divides(IntPoly{1, 1}));
}

TEST_CASE("evaluation") {
  IntPoly p{1, -3, 1};
  CHECK(p.eval(Int(0)) == 1);
  CHECK(p.eval(Int(3)) == 1);
  CHECK(p.eval(Rat(1, 2)) == Rat(-1, 4));
}

TEST_CASE("reversal and self-reciprocity") {
  CHECK(IntPoly{1, 1, 1, 1, 1}.is_self_reciprocal());  // v_5
  CHECK_FALSE(IntPoly{-1, 1}.is_self_reciprocal());    // T - 1
  CHECK(IntPoly{1, -2, 1}.is_self_reciprocal());       // (T-1)^2
  CHECK(IntPoly{1, 2, 3}.reversed() == IntPoly{3, 2, 1});
}

TEST_CASE("content and primitive part") {
  IntPoly p{6, -9, 12};
  CHECK(p.content() == 3);
  CHECK(p.primitive() == IntPoly{2, -3, 4});
  CHECK((-p).primitive() == IntPoly{2, -3, 4});
  CHECK(IntPoly::zero().content() == 0);
}

TEST_CASE("derivative and pow") {
  CHECK(IntPoly{1, 2, 3}.derivative() == IntPoly{2, 6});
  CHECK(IntPoly{1, 1}.pow(2) == IntPoly{1, 2, 1});
  CHECK(IntPoly{1, 1}.pow(0) == IntPoly::one());
}

TEST_CASE("poly_gcd") {
  IntPoly a = IntPoly{-1, 1} * IntPoly{1, 1} * IntPoly{1, 1};
  IntPoly b = IntPoly{1, 1} * IntPoly{1, 0, 1};
  CHECK(poly_gcd(a, b) == IntPoly{1, 1});
  CHECK(poly_gcd(a, IntPoly::zero()) == a.primitive());
  // coprime
  CHECK(poly_gcd(IntPoly{1, 1}, IntPoly{-1, 1}).degree() == 0);
}

TEST_CASE("squarefree") {
  IntPoly sq = IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{-1, 1};
  CHECK_FALSE(is_squarefree(sq));
  CHECK(is_squarefree(IntPoly{-1, 0, 1}));
  CHECK(squarefree_part(sq) == (IntPoly{1, 1} * IntPoly{-1, 1}).primitive());
}
