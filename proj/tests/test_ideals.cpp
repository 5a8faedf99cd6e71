#include <doctest.h>

#include "nilfree/ideals.hpp"

#include <random>

using namespace nilfree;

namespace {

NcPolynomial P(const char* s, int n) { return NcPolynomial::parse(s, n); }

std::vector<std::size_t> complement(const std::vector<std::size_t>& piv, std::size_t n) {
  std::vector<std::size_t> out;
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (j < piv.size() && piv[j] == i)
      ++j;
    else
      out.push_back(i);
  }
  return out;
}

}  // namespace

TEST_CASE("lie_spanning examples") {
  auto l = lie_spanning(2, MultiDegree({1, 1}));
  RationalMatrix m(2);
  WeightSpace ws(MultiDegree({1, 1}));
  for (auto& c : l) m.add_row(word_vector(c, ws));
  CHECK(rank(m).rank == 1);
  CHECK(lie_spanning(3, MultiDegree({1, 1})).empty());

  WeightSpace w21(MultiDegree({2, 1}));
  RationalMatrix m21(3);
  for (auto& c : lie_spanning(2, MultiDegree({2, 1}))) m21.add_row(word_vector(c, w21));
  CHECK(rank(m21).rank == 2);
}

TEST_CASE("ideal_spanning examples") {
  CHECK(rank(ideal_spanning(2, MultiDegree({1, 1}))).rank == 1);
  CHECK(rank(ideal_spanning(2, MultiDegree({2, 0}))).rank == 0);
  // only [x1,x2,x1] survives; the quotient keeps the two hook weights (3), (2,1)
  CHECK(rank(ideal_spanning(3, MultiDegree({2, 1}))).rank == 1);
  CHECK(quotient_dim(2, MultiDegree({2, 1})).dim == 2);
}

TEST_CASE("annihilator engine matches literal spanning-set elimination") {
  for (int m = 2; m <= 5; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 6; ++d)
        for (const MultiDegree& mu : compositions(d, n)) {
          if (multinomial(mu) > 400) continue;
          RationalMatrix span = ideal_spanning(m, mu);
          RankProfile pr = rank(span);
          auto ann = ideal_engine(m).annihilator(mu);
          CAPTURE(m);
          CAPTURE(mu.counts);
          CHECK(ann->columns - ann->rank() == pr.rank);
          std::vector<std::size_t> piv = ann->identity ? complement({}, ann->columns) : ann->pivots;
          CHECK(piv == complement(pr.pivot_columns, span.ncols()));
          for (const auto& row : span.rows()) CHECK(ann->annihilates(row));
        }
}

TEST_CASE("quotient dimensions") {
  for (const MultiDegree& mu : {MultiDegree({3, 2}), MultiDegree({1, 1, 1}), MultiDegree({2, 0, 2})})
    CHECK(quotient_dim(1, mu).dim == 1);
  for (int d = 2; d <= 7; ++d) {
    std::size_t total = 0;
    for (const MultiDegree& mu : compositions(d, 2)) total += quotient_dim(2, mu).dim;
    CHECK(total == 2u * d);
  }
  for (int p = 2; p <= 4; ++p) {
    MultiDegree mu({2, 1});
    if (p >= mu.total()) CHECK(quotient_dim(p, mu).dim == multinomial(mu));
  }
  auto q = quotient_dim(1, MultiDegree({1, 1}));
  REQUIRE(q.coset_basis_words.size() == 1);
  CHECK(q.coset_basis_words[0] == Word({1, 0}));
}

TEST_CASE("membership examples") {
  CHECK(ideal_membership(P("x1*x2 - x2*x1", 3) * P("x3*x2 - x2*x3", 3), 3));
  CHECK_FALSE(ideal_membership(P("x1*x2 - x2*x1", 2), 3));
  const int n = 6;
  auto g = [&](int i) { return NcPolynomial::generator(n, i); };
  CHECK(ideal_membership(left_normed({g(0), g(1), g(2)}) * left_normed({g(3), g(4), g(5)}), 5));
  CHECK(ideal_membership(NcPolynomial(3), 7));
}

TEST_CASE("filtration, weight symmetry and two-sidedness") {
  for (int p = 2; p <= 4; ++p)
    for (const MultiDegree& mu : compositions(5, 3)) {
      auto upper = ideal_spanning(p + 1, mu);
      auto lower = ideal_engine(p).annihilator(mu);
      for (const auto& row : upper.rows()) CHECK(lower->annihilates(row));
      std::vector<int> s = mu.counts;
      std::sort(s.begin(), s.end());
      CHECK(ideal_dim(p, mu) == ideal_dim(p, MultiDegree(s)));
    }
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    const int p = 2 + static_cast<int>(rng() % 3);
    auto comps = compositions(4, 3);
    MultiDegree mu = comps[rng() % comps.size()];
    auto lie = lie_spanning(p, mu);
    if (lie.empty()) continue;
    const NcPolynomial& c = lie[rng() % lie.size()];
    for (int i = 0; i < 3; ++i) {
      NcPolynomial x = NcPolynomial::generator(3, i);
      CHECK(ideal_membership(c * x, p));
      CHECK(ideal_membership(x * c, p));
    }
  }
}

TEST_CASE("absorption under monomial multiplication") {
  std::mt19937_64 rng(43);
  const int n = 3;
  NcPolynomial f = left_normed({NcPolynomial::generator(n, 0), NcPolynomial::generator(n, 1),
                                NcPolynomial::generator(n, 2)});
  REQUIRE(ideal_membership(f, 3));
  for (int t = 0; t < 10; ++t) {
    Word g, h;
    for (int i = 0, len = rng() % 3; i < len; ++i) g.letters.push_back(rng() % n);
    for (int i = 0, len = rng() % 3; i < len; ++i) h.letters.push_back(rng() % n);
    CHECK(ideal_membership(NcPolynomial::monomial(n, g) * f * NcPolynomial::monomial(n, h), 3));
  }
}

TEST_CASE("limits are reported, not truncated") {
  EngineLimits tight;
  tight.column_cap = 10;
  CHECK_THROWS_AS(ideal_engine(3).annihilator(MultiDegree({2, 2, 1}), tight), Infeasible);
  CHECK(ideal_engine(3).annihilator(MultiDegree({2, 2, 1}))->columns == 30);
}
