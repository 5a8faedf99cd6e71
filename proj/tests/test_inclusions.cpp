#include <doctest.h>

#include "nilfree/inclusions.hpp"

using namespace nilfree;

namespace {

InclusionReport run(const std::string& st, std::vector<int> m, int n, int max_degree) {
  InclusionCase c;
  c.statement = st;
  c.m = std::move(m);
  c.n = n;
  c.max_degree = max_degree;
  c.samples = 60;
  return verify_inclusion(c);
}

// "[x1,x2][x3,x4]" back to the product of left-normed commutators
NcPolynomial parse_witness(const std::string& w, int n) {
  NcPolynomial out = NcPolynomial::one(n);
  std::size_t pos = 0;
  while ((pos = w.find('[', pos)) != std::string::npos) {
    const std::size_t end = w.find(']', pos);
    std::vector<NcPolynomial> args;
    std::string body = w.substr(pos + 1, end - pos - 1);
    std::size_t start = 0, comma;
    while ((comma = body.find(',', start)) != std::string::npos) {
      args.push_back(NcPolynomial::parse(body.substr(start, comma - start), n));
      start = comma + 1;
    }
    args.push_back(NcPolynomial::parse(body.substr(start), n));
    out = out * left_normed(args);
    pos = end;
  }
  return out;
}

}  // namespace

TEST_CASE("targets and hypotheses") {
  CHECK(inclusion_target("product", {2, 3}, 4) == 3);
  CHECK(inclusion_target("product-odd", {3, 2}, 4) == 4);
  CHECK_THROWS_AS(inclusion_target("product-odd", {2, 2}, 4), std::invalid_argument);
  CHECK(inclusion_target("three-generator", {2, 2}, 3) == 3);
  CHECK_THROWS_AS(inclusion_target("three-generator", {2, 2}, 4), std::invalid_argument);
  CHECK(inclusion_target("even-shared-last", {2, 2}, 4) == 3);
  CHECK_THROWS_AS(inclusion_target("even-shared-last", {2, 3}, 4), std::invalid_argument);
  CHECK(inclusion_target("even-shared-chain", {2, 2, 2}, 4) == 4);
  CHECK_THROWS_AS(inclusion_target("commutator-product", {2, 3}, 4), std::invalid_argument);
  CHECK_THROWS_AS(inclusion_target("no-such-statement", {2, 2}, 4), std::invalid_argument);
  CHECK(inclusion_statements().size() == 8);
}

TEST_CASE("statements hold on small instances") {
  struct Row {
    const char* st;
    std::vector<int> m;
    int n, d;
  };
  const std::vector<Row> rows = {
      {"product", {2, 2}, 4, 6},
      {"product", {2, 3}, 3, 6},
      {"product-odd", {2, 3}, 3, 6},
      {"product-chain", {3, 2, 2}, 3, 7},
      {"three-generator", {2, 2}, 3, 6},
      {"commutator-product", {3, 3}, 3, 7},
      {"shared-last", {2, 3}, 3, 6},
      {"even-shared-last", {2, 2}, 4, 6},
      {"even-shared-chain", {2, 2, 2}, 3, 7},
  };
  for (const Row& r : rows) {
    const auto rep = run(r.st, r.m, r.n, r.d);
    CAPTURE(rep.to_json().dump());
    CHECK(rep.passed());
    CHECK(rep.checked > 0);
    CHECK(rep.skipped.empty());
  }
}

TEST_CASE("exhaustive mode on a small family") {
  const auto rep = run("even-shared-last", {2, 2}, 4, 6);
  CHECK(rep.exhaustive);
  const auto j = rep.to_json();
  CHECK(j["statement"] == "even-shared-last");
  CHECK(j["target"] == 3);
  CHECK(j["mode"] == "exhaustive");
}

TEST_CASE("search finds a product of commutators outside the next ideal") {
  NonInclusionSearch s;
  s.m1 = 2;
  s.m2 = 2;
  s.target = 3;
  s.max_vars = 4;
  const auto r = search_non_inclusion(s);
  CHECK(r.found);
  CHECK_FALSE(r.witness.empty());
  const NcPolynomial w = parse_witness(r.witness, 4);
  CHECK(w.degree() == 4);
  CHECK(ideal_membership(w, 2));
  CHECK_FALSE(ideal_membership(w, 3));
}

TEST_CASE("search respects the inclusion that does hold") {
  NonInclusionSearch s;
  s.m1 = 2;
  s.m2 = 2;
  s.target = 2;
  s.max_vars = 3;
  CHECK_FALSE(search_non_inclusion(s).found);
}

TEST_CASE("degree-8 product of two 4-commutators outside I_7") {
  NonInclusionSearch s;
  const auto r = search_non_inclusion(s);
  REQUIRE(r.found);
  CHECK(r.skipped.empty());
  const NcPolynomial w = parse_witness(r.witness, 4);
  const auto comps = w.components();
  REQUIRE(comps.size() == 1);
  const MultiDegree mu = comps.begin()->first;
  // literal elimination over the full spanning set, independent of the engine
  const WeightSpace ws(mu);
  const SparseVector v = word_vector(w, ws);
  CHECK_FALSE(in_row_space(ideal_spanning(7, mu), v));
  CHECK(ideal_membership(w, 6));
}
