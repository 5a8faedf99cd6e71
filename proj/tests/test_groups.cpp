#include <doctest.h>

#include "nilfree/groups.hpp"

#include <random>

using namespace nilfree;

namespace {

NcPolynomial P(const char* s, int n) { return NcPolynomial::parse(s, n); }

Matrix product(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t[i][j] = a[j][i];
  return t;
}

std::vector<GroupSpec> connected_groups() {
  std::vector<GroupSpec> out;
  for (int n = 2; n <= 4; ++n) {
    out.emplace_back(Family::SL, n);
    out.emplace_back(Family::SO, n);
    if (n % 2 == 0) out.emplace_back(Family::Sp, n);
  }
  return out;
}

}  // namespace

TEST_CASE("group specs") {
  CHECK(GroupSpec(Family::SO, 3).name() == "SO(3)");
  CHECK(parse_family("sp") == Family::Sp);
  CHECK(parse_family("Ut") == Family::UT);
  CHECK_THROWS_AS(parse_family("gl"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec(Family::Sp, 3), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec(Family::SL, 0), std::invalid_argument);
}

TEST_CASE("trivial multiplicity examples") {
  CHECK(trivial_multiplicity(GroupSpec(Family::SL, 3), Partition({2, 2, 2})) == 1);
  CHECK(trivial_multiplicity(GroupSpec(Family::SL, 3), Partition({3, 2, 1})) == 0);
  for (int n = 2; n <= 4; ++n) {
    CHECK(trivial_multiplicity(GroupSpec(Family::O, n), Partition({4, 2})) == 1);
    CHECK(trivial_multiplicity(GroupSpec(Family::O, n), Partition({3, 1})) == 0);
  }
  CHECK(trivial_multiplicity(GroupSpec(Family::SO, 2), Partition({1, 1})) == 1);
  CHECK(trivial_multiplicity(GroupSpec(Family::O, 2), Partition({1, 1})) == 0);
  CHECK(trivial_multiplicity(GroupSpec(Family::Sp, 4), Partition({2, 2, 1, 1})) == 1);
  CHECK(trivial_multiplicity(GroupSpec(Family::Sp, 4), Partition({2, 1, 1})) == 0);
  CHECK(trivial_multiplicity(GroupSpec(Family::UT, 3), Partition({5, 1})) == 1);
  CHECK_THROWS_AS(trivial_multiplicity(GroupSpec(Family::SL, 2), Partition({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("constant-term oracle examples") {
  CHECK(weyl_ct(GroupSpec(Family::SL, 2), Partition({2})) == 0);
  CHECK(weyl_ct(GroupSpec(Family::SL, 2), Partition({1, 1})) == 1);
  CHECK(weyl_ct(GroupSpec(Family::Sp, 2), Partition({1, 1})) == 1);
  CHECK(weyl_ct(GroupSpec(Family::SO, 3), Partition({2})) == 1);
  CHECK(weyl_ct(GroupSpec(Family::SO, 3), Partition({1, 1, 1})) == 1);
  CHECK(weyl_ct(GroupSpec(Family::SO, 2), Partition({1, 1})) == 1);
  CHECK(weyl_ct(GroupSpec(Family::SO, 2), Partition({2})) == 1);
  CHECK_THROWS(weyl_ct(GroupSpec(Family::O, 3), Partition({2})));
  CHECK_THROWS(weyl_ct(GroupSpec(Family::UT, 3), Partition({2})));
}

TEST_CASE("branching rule agrees with constant-term integration") {
  for (const GroupSpec& g : connected_groups())
    for (int d = 0; d <= 6; ++d)
      for (const Partition& lam : partitions(d, g.n)) {
        CAPTURE(g.name());
        CAPTURE(lam.str());
        CHECK(Integer(trivial_multiplicity(g, lam)) == weyl_ct(g, lam));
      }
}

TEST_CASE("Lie algebra generators preserve the form") {
  for (int n = 2; n <= 4; ++n) {
    for (Family f : {Family::SO, Family::O, Family::Sp}) {
      if (f == Family::Sp && n % 2) continue;
      GroupSpec g(f, n);
      const Matrix t = form_matrix(g);
      const auto gens = lie_algebra_basis(g);
      const std::size_t expected = f == Family::Sp ? n / 2 * (n + 1) : n * (n - 1) / 2;
      CHECK(gens.size() == expected);
      for (const Matrix& a : gens) {
        Matrix l = product(a, t), r = product(t, transpose(a));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) CHECK(l[i][j] + r[i][j] == 0);
      }
    }
    CHECK(lie_algebra_basis(GroupSpec(Family::SL, n)).size() == std::size_t(2 * (n - 1)));
    CHECK(lie_algebra_basis(GroupSpec(Family::UT, n)).size() == std::size_t(n - 1));
  }
}

TEST_CASE("derivation action") {
  GroupSpec sl2(Family::SL, 2);
  const auto gens = lie_algebra_basis(sl2);
  // E_{12} sends x2 to x1 and kills x1
  CHECK(apply_derivation(gens[0], P("x2*x2", 2)) == P("x1*x2 + x2*x1", 2));
  CHECK(apply_derivation(gens[0], P("x1*x1", 2)).is_zero());
  CHECK(reflect_first(P("x1*x2*x1 + x1*x2", 2)) == P("x1*x2*x1 - x1*x2", 2));
}

TEST_CASE("invariance checks") {
  CHECK(is_invariant(P("x1*x2 - x2*x1", 2), GroupSpec(Family::SL, 2)));
  CHECK(is_invariant(P("x1*x2 - x2*x1", 2), GroupSpec(Family::Sp, 2)));
  CHECK_FALSE(is_invariant(P("x1*x2", 2), GroupSpec(Family::SL, 2)));
  CHECK(is_invariant(P("x1*x1 + x2*x2 + x3*x3", 3), GroupSpec(Family::O, 3)));
  CHECK(is_invariant(P("x1*x2 - x2*x1", 2), GroupSpec(Family::SO, 2)));
  // the determinant is not fixed by the reflection
  CHECK_FALSE(is_invariant(P("x1*x2 - x2*x1", 2), GroupSpec(Family::O, 2)));
  CHECK(is_invariant(P("x1", 3), GroupSpec(Family::UT, 3)));
  CHECK_FALSE(is_invariant(P("x2", 3), GroupSpec(Family::UT, 3)));
  CHECK(is_invariant(NcPolynomial::one(3), GroupSpec(Family::O, 3)));
}

TEST_CASE("SL invariants come from determinant shapes") {
  // the alternating sum over S_n is SL(n)-invariant
  for (int n = 2; n <= 3; ++n) {
    std::vector<Letter> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = static_cast<Letter>(i);
    NcPolynomial det(n);
    do {
      int inv = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
      det.add_term(Word(perm), Rational(inv % 2 ? -1 : 1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(is_invariant(det, GroupSpec(Family::SL, n)));
    CHECK(is_invariant(det, GroupSpec(Family::SO, n)));
    CHECK_FALSE(is_invariant(det, GroupSpec(Family::O, n)));
  }
}
