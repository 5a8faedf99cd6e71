#pragma once

#include "nilfree/ncpoly.hpp"
#include "nilfree/symfunc.hpp"

#include <string>
#include <vector>

namespace nilfree {

enum class Family { SL, O, SO, Sp, UT };

struct GroupSpec {
  Family family = Family::SL;
  int n = 2;

  GroupSpec() = default;
  GroupSpec(Family f, int n);  // validates n (even for Sp)
  std::string name() const;     // "SO(3)"
};

std::string family_name(Family f);  // "SL", "O", ...
Family parse_family(const std::string& s);  // case-insensitive

using Matrix = std::vector<std::vector<Rational>>;

/// Gram matrix T of the preserved form: identity for O/SO, the block form
/// with T[i][s+i] = 1 = -T[s+i][i] for Sp. Throws for SL and UT.
Matrix form_matrix(const GroupSpec& g);

/// Generators of the Lie algebra as n x n matrices; A sends x_b to sum_a A[a][b] x_a.
/// SL: E_{i,i+1} and E_{i+1,i}. UT: E_{i,i+1}. O/SO/Sp: a basis of
/// {A : A T + T A^t = 0}.
std::vector<Matrix> lie_algebra_basis(const GroupSpec& g);

/// Derivation extension of A to K<X>.
NcPolynomial apply_derivation(const Matrix& a, const NcPolynomial& f);

/// f with x1 replaced by -x1.
NcPolynomial reflect_first(const NcPolynomial& f);

/// Annihilated by every Lie generator (and fixed by the reflection for O).
bool is_invariant(const NcPolynomial& f, const GroupSpec& g);

/// Dimension of the G-fixed space of V_lambda.
int trivial_multiplicity(const GroupSpec& g, const Partition& lambda);

/// Same quantity by exact constant-term integration over a maximal torus.
/// SL, Sp and SO only.
Integer weyl_ct(const GroupSpec& g, const Partition& lambda);

}  // namespace nilfree
