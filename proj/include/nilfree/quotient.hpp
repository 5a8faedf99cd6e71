#pragma once

#include "nilfree/ideals.hpp"

#include <map>
#include <memory>
#include <vector>

namespace nilfree {

// Graded pieces of F_n(N_p) = K<X>/I_{p+1} with coset bases of pivot words.
// Degree-d coordinates concatenate the weights of compositions(d, n) in order.
class QuotientAlgebra {
 public:
  QuotientAlgebra(int n, int p, EngineLimits limits = {});

  int n() const { return n_; }
  int p() const { return p_; }

  struct Piece {
    MultiDegree weight;
    std::size_t offset = 0;
    std::shared_ptr<const Annihilator> ann;
    std::unique_ptr<WeightSpace> space;
  };
  struct Component {
    int degree = 0;
    std::size_t dim = 0;
    std::vector<Piece> pieces;
    std::map<MultiDegree, std::size_t> piece_of;
  };

  /// Throws Infeasible when some weight of degree d is beyond the limits.
  const Component& component(int d);
  std::size_t dim(int d) { return component(d).dim; }

  /// Normal form of a word in the degree-|w| coordinates.
  SparseVector normal_form(const Word& w);
  /// Coordinates of a homogeneous polynomial of degree d.
  SparseVector coordinates(const NcPolynomial& f, int d);
  /// Coset representative: sum of c_k times the k-th basis word.
  NcPolynomial lift(const SparseVector& v, int d);
  Word basis_word(int d, std::size_t index);

  SparseVector multiply(const SparseVector& a, int da, const SparseVector& b, int db);

 private:
  int n_, p_;
  EngineLimits limits_;
  std::map<int, std::unique_ptr<Component>> components_;
};

}  // namespace nilfree
