#pragma once

// Named algebra families: Dynkin and extended Dynkin quivers, hereditary
// stars, (extended) canonical algebras and the standard posets.

#include <coxeterlab/cartan.hpp>
#include <coxeterlab/coxeter.hpp>

namespace coxlab {

// A_n, D_n, E6, E7, E8 with a fixed orientation; type in {'A','D','E'}
CartanAlgebra dynkin(char type, int n);

// star quiver [p_1, ..., p_t]: center with arms oriented outward
QuiverSpec star_quiver(const std::vector<int>& weights);

// extended Dynkin quivers: A~(p,q) cycle with p clockwise and q
// anticlockwise arrows, D~n, E~6, E~7, E~8
CartanAlgebra extended_dynkin_a(int p, int q);
CartanAlgebra extended_dynkin(char type, int n);

// one-point extension of canonical(weights) by the projective at the
// source
CartanAlgebra extended_canonical(const std::vector<int>& weights);

// (x-1)^2 prod chi_{S_i}
IntPoly supercanonical_poly(const std::vector<PosetSpec>& posets);

// chain poset 1 < 2 < ... < n
PosetSpec chain_poset(int n);

// two minimal elements below a chain: 1, 2 < 3 < 4 < ... < n
PosetSpec poset_dn(int n);

// semichain: two crossing chains of length m joined into a tail ending at n
PosetSpec poset_semichain(int n, int m);

}  // namespace coxlab
