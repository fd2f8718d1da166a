#pragma once

// Cartan matrices of triangular algebras and the constructions that
// produce them: path algebras of acyclic quivers, incidence algebras of
// posets, truncated linear algebras, tensor products, one-point
// extensions, double repetitive algebras, Galois quotients and
// (super)canonical algebras.

#include <coxeterlab/scalar.hpp>

#include <string>
#include <vector>

namespace coxlab {

struct QuiverSpec {
  std::vector<std::string> vertices;
  // (source, target) index pairs; parallel arrows allowed
  std::vector<std::pair<int, int>> arrows;

  int size() const { return static_cast<int>(vertices.size()); }
  void validate() const;  // bounds + acyclicity
};

struct PosetSpec {
  std::vector<std::string> elements;
  // (lower, upper) cover pairs
  std::vector<std::pair<int, int>> covers;

  int size() const { return static_cast<int>(elements.size()); }
  void validate() const;
  // full reflexive-transitive order relation as a 0/1 matrix
  IntMat closure() const;
};

struct GroupAction {
  // each generator is a permutation of 0..n-1
  std::vector<std::vector<int>> generators;

  // full group generated by the generators, as permutations (identity included)
  std::vector<std::vector<int>> elements(int n) const;
};

class CartanAlgebra {
 public:
  CartanAlgebra(IntMat cartan, std::vector<std::string> labels,
                std::string provenance);

  int size() const { return static_cast<int>(cartan_.rows()); }
  const IntMat& cartan() const { return cartan_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& provenance() const { return provenance_; }

  // a vertex ordering in which the Cartan matrix is upper triangular
  const std::vector<int>& triangular_order() const { return topo_order_; }

 private:
  IntMat cartan_;
  std::vector<std::string> labels_;
  std::string provenance_;
  std::vector<int> topo_order_;
};

// cartan[i][j] = number of paths i -> j (trivial path included)
CartanAlgebra from_hereditary_quiver(const QuiverSpec& q);

// incidence algebra: cartan[i][j] = 1 iff i <= j
CartanAlgebra from_poset(const PosetSpec& p);

// linear A_n quiver with all paths of length >= r killed
CartanAlgebra truncated_linear(int n, int r);

// Kronecker product of the Cartan matrices
CartanAlgebra tensor(const CartanAlgebra& a, const CartanAlgebra& b);

// block Cartan [[C, d], [0, 1]]; d is the class of the extending module
CartanAlgebra one_point_extension(const CartanAlgebra& a, const IntVec& d);

// block Cartan [[C, C^t], [0, C]]
CartanAlgebra double_repetitive(const CartanAlgebra& a);

// orbit algebra of a free action by automorphisms; throws if the action is
// not free, not structure-preserving, or the orbit sums depend on the
// representative
CartanAlgebra galois_quotient(const CartanAlgebra& a, const GroupAction& g);

// canonical algebra of weight type (p_1, ..., p_t); vertex order is
// source, arm vertices in arm-major order, sink
CartanAlgebra canonical(const std::vector<int>& weights);

// supercanonical algebra A(S_1, ..., S_t): glued double cones of posets
CartanAlgebra supercanonical(const std::vector<PosetSpec>& posets);

// delete one vertex (row and column) from an algebra
CartanAlgebra delete_vertex(const CartanAlgebra& a, int v);

}  // namespace coxlab
