#include <doctest.h>

#include "nilfree/invariants.hpp"

#include <random>

using namespace nilfree;

namespace {

NcPolynomial P(const char* s, int n) { return NcPolynomial::parse(s, n); }

std::vector<GroupSpec> small_groups() {
  std::vector<GroupSpec> out;
  for (int n = 2; n <= 3; ++n)
    for (Family f : {Family::SL, Family::O, Family::SO, Family::Sp, Family::UT})
      if (f != Family::Sp || n % 2 == 0) out.emplace_back(f, n);
  return out;
}

NcPolynomial power(const NcPolynomial& f, int k) {
  NcPolynomial out = NcPolynomial::one(f.n());
  for (int i = 0; i < k; ++i) out = out * f;
  return out;
}

std::vector<std::pair<int, int>> random_matching(int k, std::mt19937_64& rng) {
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[i] = i + 1;
  std::shuffle(pos.begin(), pos.end(), rng);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < k; i += 2) out.emplace_back(pos[i], pos[i + 1]);
  return out;
}

}  // namespace

TEST_CASE("invariant basis examples") {
  for (int n = 2; n <= 3; ++n) {
    GroupSpec o(Family::O, n);
    for (int p = 1; p <= 3; ++p) {
      QuotientAlgebra q(n, p);
      auto b2 = lie_invariant_basis(o, q, 2);
      REQUIRE(b2.size() == 1);
      RowSpace rs(q.dim(2));
      rs.insert(b2[0]);
      NcPolynomial u = n == 2 ? P("x1*x1 + x2*x2", 2) : P("x1*x1 + x2*x2 + x3*x3", 3);
      CHECK(rs.contains(q.coordinates(u, 2)));
      CHECK(lie_invariant_basis(o, q, 1).empty());
      CHECK(lie_invariant_basis(o, q, 3).empty());
      CHECK(lie_invariant_basis(o, q, 5).empty());
    }
  }
  QuotientAlgebra q(2, 2);
  auto b = lie_invariant_basis(GroupSpec(Family::SL, 2), q, 2);
  REQUIRE(b.size() == 1);
  RowSpace rs(q.dim(2));
  rs.insert(b[0]);
  CHECK(rs.contains(q.coordinates(P("x1*x2 - x2*x1", 2), 2)));
}

TEST_CASE("invariant basis vectors are killed by the Lie algebra in the quotient") {
  for (const GroupSpec& g : small_groups())
    for (int p = 1; p <= 3; ++p) {
      QuotientAlgebra q(g.n, p);
      for (int d = 1; d <= 4; ++d)
        for (const SparseVector& v : lie_invariant_basis(g, q, d)) {
          const NcPolynomial f = q.lift(v, d);
          for (const Matrix& a : lie_algebra_basis(g)) CHECK(q.coordinates(apply_derivation(a, f), d).entries.empty());
          if (g.family == Family::O) CHECK(q.coordinates(reflect_first(f) - f, d).entries.empty());
        }
    }
}

TEST_CASE("series coefficients equal invariant basis dimensions") {
  for (const GroupSpec& g : small_groups())
    for (int p = 1; p <= 3; ++p) {
      const HilbertSeries h = invariant_hilbert(g, p, 5);
      REQUIRE(h.truncation.coefficients.size() == 6);
      QuotientAlgebra q(g.n, p);
      for (int d = 0; d <= 5; ++d) {
        CAPTURE(g.name());
        CAPTURE(p);
        CAPTURE(d);
        CHECK(std::int64_t(lie_invariant_basis(g, q, d).size()) == h.truncation.coefficients[d]);
        if (g.family == Family::O && d % 2) CHECK(h.truncation.coefficients[d] == 0);
      }
    }
}

TEST_CASE("Hilbert series examples") {
  auto ut = invariant_hilbert(GroupSpec(Family::UT, 3), 1, 6);
  CHECK(ut.truncation.coefficients == std::vector<std::int64_t>(7, 1));
  auto sp = invariant_hilbert(GroupSpec(Family::Sp, 2), 1, 6);
  CHECK(sp.truncation.coefficients == std::vector<std::int64_t>{1, 0, 0, 0, 0, 0, 0});
  auto o2 = invariant_hilbert(GroupSpec(Family::O, 2), 1, 6);
  CHECK(o2.truncation.coefficients == std::vector<std::int64_t>{1, 0, 1, 0, 1, 0, 1});
  CHECK_FALSE(o2.skipped_from.has_value());
}

TEST_CASE("rational form fits") {
  auto o2 = fit_rational_form(invariant_hilbert(GroupSpec(Family::O, 2), 1, 6));
  CHECK(o2.denominator == "1-t^2");
  CHECK(o2.numerator == std::vector<std::int64_t>{1});
  CHECK(o2.degree == 0);
  CHECK(o2.deg_bound_ok);

  for (int n = 2; n <= 3; ++n) {
    auto sl = fit_rational_form(invariant_hilbert(GroupSpec(Family::SL, n), 1, 4));
    CHECK(sl.numerator == std::vector<std::int64_t>{1});
    CHECK(sl.deg_bound_ok);
  }
  auto sl2 = fit_rational_form(invariant_hilbert(GroupSpec(Family::SL, 2), 2, 8));
  CHECK(sl2.polynomial);
  CHECK(sl2.degree <= 2);
  CHECK(sl2.deg_bound_ok);

  // a series that keeps growing is not a polynomial in the window
  HilbertSeries fake;
  fake.group = GroupSpec(Family::SL, 2);
  fake.p = 2;
  fake.truncation.coefficients = {1, 0, 1, 0, 1, 0, 1};
  fake.truncation.max_degree = 6;
  auto bad = fit_rational_form(fake);
  CHECK_FALSE(bad.polynomial);
  CHECK_FALSE(bad.deg_bound_ok);
}

TEST_CASE("series forms within the truncation window") {
  for (const GroupSpec& g : small_groups())
    for (int p = 1; p <= 2; ++p) {
      const int D = g.n * (p - 1) + 4;
      const auto fit = fit_rational_form(invariant_hilbert(g, p, D));
      CAPTURE(g.name());
      CAPTURE(p);
      CHECK(fit.polynomial);
      CHECK(fit.deg_bound_ok);
    }
}

TEST_CASE("generating degree at p = 2") {
  for (int n = 2; n <= 3; ++n) {
    for (Family f : {Family::SL, Family::SO, Family::UT}) {
      auto b = beta_upper(GroupSpec(f, n), 2, n + 2);
      CHECK(b.conclusive);
      CHECK(b.beta == n);
    }
    auto o = beta_upper(GroupSpec(Family::O, n), 2, n + 2);
    CHECK(o.conclusive);
    CHECK(o.beta == 2);
  }
  auto sp = beta_upper(GroupSpec(Family::Sp, 2), 2, 4);
  CHECK(sp.conclusive);
  CHECK(sp.beta == 2);
  for (int n = 2; n <= 3; ++n) CHECK(beta_upper(GroupSpec(Family::O, n), 1, 4).beta == 2);

  auto narrow = beta_upper(GroupSpec(Family::SL, 3), 2, 2);
  CHECK_FALSE(narrow.conclusive);
  auto j = to_json(beta_upper(GroupSpec(Family::SL, 2), 2, 6));
  CHECK(j["beta"] == 2);
  CHECK(j["conclusive"] == true);
  CHECK(j["window"] == 6);
}

TEST_CASE("generating degree respects the bound") {
  for (const GroupSpec& g : small_groups())
    for (int p = 1; p <= 2; ++p) {
      auto b = beta_upper(g, p, beta_bound(g, p) + 1);
      REQUIRE(b.conclusive);
      CHECK(b.beta <= b.bound);
    }
}

TEST_CASE("pairing invariants") {
  CHECK(pairing_invariant(GroupSpec(Family::O, 3), 2, {{1, 2}}) == P("x1*x1 + x2*x2 + x3*x3", 3));
  CHECK(pairing_invariant(GroupSpec(Family::Sp, 2), 2, {{1, 2}}) == P("x1*x2 - x2*x1", 2));
  CHECK(pairing_invariant(GroupSpec(Family::O, 2), 4, {{1, 3}, {2, 4}}) ==
        P("x1*x1*x1*x1 + x1*x2*x1*x2 + x2*x1*x2*x1 + x2*x2*x2*x2", 2));
  CHECK_THROWS_AS(pairing_invariant(GroupSpec(Family::O, 2), 3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(pairing_invariant(GroupSpec(Family::O, 2), 4, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(pairing_invariant(GroupSpec(Family::SL, 2), 2, {{1, 2}}), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (const GroupSpec& g : {GroupSpec(Family::O, 2), GroupSpec(Family::O, 3), GroupSpec(Family::Sp, 2),
                             GroupSpec(Family::Sp, 4)})
    for (int k = 2; k <= 6; k += 2) {
      if (g.n == 4 && k == 6) continue;
      const NcPolynomial f = pairing_invariant(g, k, random_matching(k, rng));
      CHECK(f.degree() == k);
      CHECK(is_invariant(f, g));
    }
}

TEST_CASE("classification examples") {
  CHECK(classify_invariant(P("x1*x2 - x2*x1", 2), GroupSpec(Family::SL, 2), 1) == InvariantClass::InIdeal);
  for (int n = 2; n <= 3; ++n) {
    GroupSpec o(Family::O, n);
    const NcPolynomial u = pairing_invariant(o, 2, {{1, 2}});
    CHECK(classify_invariant(power(u, 2), o, 2) == InvariantClass::PowerOfTheta2);
    CHECK(classify_invariant(u, o, 2) == InvariantClass::BelowThreshold);
  }
  GroupSpec sp(Family::Sp, 2);
  CHECK(classify_invariant(pairing_invariant(sp, 4, {{1, 3}, {2, 4}}), sp, 2) == InvariantClass::InIdeal);
  CHECK(ideal_membership(pairing_invariant(sp, 4, {{1, 3}, {2, 4}}), 3));

  CHECK_THROWS_AS(classify_invariant(P("x1*x2", 2), GroupSpec(Family::SL, 2), 1), std::invalid_argument);
  CHECK_THROWS_AS(classify_invariant(P("x1*x2 - x2*x1 + x1", 2), GroupSpec(Family::UT, 2), 1),
                  std::invalid_argument);
  CHECK(class_name(InvariantClass::ReducibleByLowerDegree) == "ReducibleByLowerDegree");
}

TEST_CASE("seeded pairing invariants never violate") {
  std::mt19937_64 rng(2024);
  for (const GroupSpec& g : {GroupSpec(Family::O, 2), GroupSpec(Family::O, 3), GroupSpec(Family::Sp, 2)})
    for (int p = 1; p <= 2; ++p)
      for (int i = 0; i < 6; ++i) {
        const int k = 2 + 2 * static_cast<int>(rng() % 3);
        const NcPolynomial f = pairing_invariant(g, k, random_matching(k, rng));
        CAPTURE(g.name());
        CAPTURE(f.str());
        CHECK(classify_invariant(f, g, p) != InvariantClass::Violation);
      }
}

TEST_CASE("series JSON layout") {
  const auto h = invariant_hilbert(GroupSpec(Family::O, 3), 2, 6);
  const auto j = to_json(h, fit_rational_form(h));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  REQUIRE(keys.size() >= 7);
  CHECK(std::vector<std::string>(keys.begin(), keys.begin() + 5) ==
        std::vector<std::string>{"group", "n", "p", "coeffs", "numerator"});
  CHECK(j["group"] == "O");
  CHECK(j["denominator"] == "1-t^2");
  CHECK(j["deg_bound_ok"] == true);
}
