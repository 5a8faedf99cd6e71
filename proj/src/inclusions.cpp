#include "nilfree/inclusions.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace nilfree {

namespace {

using Builder = std::function<NcPolynomial(const std::vector<NcPolynomial>&)>;

struct Template {
  std::vector<int> min_len;
  std::vector<int> mult;
  Builder build;
};

NcPolynomial commutator_of(const std::vector<NcPolynomial>& s, std::size_t from, int len) {
  if (len == 1) return s[from];
  return left_normed(std::vector<NcPolynomial>(s.begin() + from, s.begin() + from + len));
}

void need(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Commutators of monomials joined by middle monomials (possibly empty).
Template chain_template(const std::vector<int>& m) {
  Template t;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) {
      t.min_len.push_back(0);
      t.mult.push_back(1);
    }
    for (int j = 0; j < m[i]; ++j) {
      t.min_len.push_back(1);
      t.mult.push_back(1);
    }
  }
  t.build = [m](const std::vector<NcPolynomial>& s) {
    std::size_t pos = 0;
    NcPolynomial acc = NcPolynomial::one(s[0].n());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) acc = acc * s[pos++];
      acc = acc * commutator_of(s, pos, m[i]);
      pos += m[i];
    }
    return acc;
  };
  return t;
}

// [c_1, y] ... [c_l, y], c_i a left-normed commutator with m_i - 1 entries.
Template shared_template(const std::vector<int>& m) {
  Template t;
  for (int mi : m)
    for (int j = 0; j < mi - 1; ++j) {
      t.min_len.push_back(1);
      t.mult.push_back(1);
    }
  t.min_len.push_back(1);
  t.mult.push_back(static_cast<int>(m.size()));
  t.build = [m](const std::vector<NcPolynomial>& s) {
    const NcPolynomial& y = s.back();
    std::size_t pos = 0;
    NcPolynomial acc = NcPolynomial::one(y.n());
    for (int mi : m) {
      acc = acc * commutator(commutator_of(s, pos, mi - 1), y);
      pos += mi - 1;
    }
    return acc;
  };
  return t;
}

Template make_template(const std::string& st, const std::vector<int>& m) {
  if (st == "product" || st == "product-odd" || st == "three-generator" || st == "product-chain")
    return chain_template(m);
  if (st == "commutator-product") {
    Template t;
    t.min_len.assign(m[0] + m[1], 1);
    t.mult.assign(m[0] + m[1], 1);
    const int r = m[0], p = m[1];
    t.build = [r, p](const std::vector<NcPolynomial>& s) { return commutator_of(s, 0, r) * commutator_of(s, r, p); };
    return t;
  }
  return shared_template(m);
}

std::string weight_str(const MultiDegree& mu) {
  std::string s = "(";
  for (int i = 0; i < mu.n(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
  return s + ")";
}

std::string instance_str(const std::vector<NcPolynomial>& slots) {
  std::string s;
  for (std::size_t i = 0; i < slots.size(); ++i) s += (i ? " | " : "") + slots[i].str();
  return s;
}

// Checks f in I_target weight by weight; Infeasible weights go to `skipped`.
// Returns false only on a genuine non-membership.
bool check_member(const NcPolynomial& f, int target, const EngineLimits& limits, std::set<std::string>& skipped,
                  bool& skipped_any) {
  skipped_any = false;
  for (const auto& [mu, comp] : f.components()) {
    const std::string key = weight_str(mu);
    if (skipped.count(key)) {
      skipped_any = true;
      continue;
    }
    try {
      if (!ideal_membership(comp, target, limits)) return false;
    } catch (const Infeasible&) {
      skipped.insert(key);
      skipped_any = true;
    }
  }
  return true;
}

}  // namespace

const std::vector<std::string>& inclusion_statements() {
  static const std::vector<std::string> names{"product",           "product-odd",      "product-chain",
                                              "three-generator",   "commutator-product", "shared-last",
                                              "even-shared-last",  "even-shared-chain"};
  return names;
}

int inclusion_target(const std::string& st, const std::vector<int>& m, int n) {
  for (int x : m) need(x >= 1, "indices must be positive");
  const int sum = std::accumulate(m.begin(), m.end(), 0);
  const int l = static_cast<int>(m.size());
  if (st == "product" || st == "product-odd" || st == "three-generator" || st == "commutator-product" ||
      st == "shared-last" || st == "even-shared-last")
    need(l == 2, st + " takes two indices");
  if (st == "product") return sum - 2;
  if (st == "product-odd") {
    need(m[0] % 2 == 1 || m[1] % 2 == 1, "product-odd needs an odd index");
    return sum - 1;
  }
  if (st == "three-generator") {
    need(n == 3, "three-generator needs n = 3");
    need(m[0] >= 2 && m[1] >= 2, "three-generator needs indices >= 2");
    return sum - 1;
  }
  if (st == "product-chain") {
    need(l >= 2, "product-chain needs at least two indices");
    int odd = 0;
    for (int x : m) odd += x % 2;
    return odd < l ? sum - 2 * l + odd + 2 : sum - l + 1;
  }
  if (st == "commutator-product") {
    need(m[1] >= 3 && m[0] >= 3 && m[0] <= m[1], "commutator-product needs 3 <= r <= p");
    return m[1] + 1;
  }
  if (st == "shared-last") {
    need(m[0] >= 2 && m[0] <= m[1], "shared-last needs 2 <= r <= p");
    return m[1] + 1;
  }
  if (st == "even-shared-last") {
    need(m[0] % 2 == 0 && m[1] % 2 == 0 && m[0] >= 2, "even-shared-last needs even indices");
    return sum - 1;
  }
  if (st == "even-shared-chain") {
    need(l >= 2, "even-shared-chain needs at least two indices");
    for (int x : m) need(x % 2 == 0, "even-shared-chain needs even indices");
    return sum - l + 1;
  }
  throw std::invalid_argument("unknown statement: " + st);
}

nlohmann::ordered_json InclusionReport::to_json() const {
  nlohmann::ordered_json j;
  j["statement"] = statement;
  j["params"] = params;
  j["target"] = target;
  j["mode"] = exhaustive ? "exhaustive" : "sampled";
  j["checked"] = checked;
  j["failures"] = failures;
  j["skipped"] = skipped;
  return j;
}

InclusionReport verify_inclusion(const InclusionCase& c) {
  InclusionReport rep;
  rep.statement = c.statement;
  rep.target = inclusion_target(c.statement, c.m, c.n);
  rep.params["m"] = c.m;
  rep.params["n"] = c.n;
  rep.params["max_degree"] = c.max_degree;
  rep.params["seed"] = c.seed;
  rep.params["samples"] = c.samples;

  const Template t = make_template(c.statement, c.m);
  const std::size_t slots = t.min_len.size();

  // All slot-length vectors within the degree bound.
  std::vector<std::vector<int>> shapes;
  std::vector<int> len(slots);
  auto rec = [&](auto&& self, std::size_t i, int deg) -> void {
    if (i == slots) {
      shapes.push_back(len);
      return;
    }
    // remaining slots need at least their minimum
    int rest = 0;
    for (std::size_t j = i + 1; j < slots; ++j) rest += t.min_len[j] * t.mult[j];
    for (int l = t.min_len[i]; deg + l * t.mult[i] + rest <= c.max_degree; ++l) {
      len[i] = l;
      self(self, i + 1, deg + l * t.mult[i]);
    }
  };
  rec(rec, 0, 0);

  long double total = 0;
  for (const auto& s : shapes) total += std::pow(static_cast<long double>(c.n), std::accumulate(s.begin(), s.end(), 0));
  rep.exhaustive = total <= static_cast<long double>(c.exhaustive_threshold);

  std::set<std::string> skipped;
  auto run = [&](const std::vector<std::vector<Letter>>& words) {
    std::vector<NcPolynomial> mons;
    for (const auto& w : words) mons.push_back(NcPolynomial::monomial(c.n, Word(w)));
    NcPolynomial f = t.build(mons);
    bool partial = false;
    if (!check_member(f, rep.target, c.limits, skipped, partial)) rep.failures.push_back(instance_str(mons));
    if (!partial) ++rep.checked;
  };

  if (rep.exhaustive) {
    for (const auto& s : shapes) {
      const int deg = std::accumulate(s.begin(), s.end(), 0);
      std::vector<Letter> flat(deg, 0);
      while (true) {
        std::vector<std::vector<Letter>> words;
        std::size_t pos = 0;
        for (int l : s) {
          words.emplace_back(flat.begin() + pos, flat.begin() + pos + l);
          pos += l;
        }
        run(words);
        int k = deg - 1;
        while (k >= 0 && flat[k] == c.n - 1) flat[k--] = 0;
        if (k < 0) break;
        ++flat[k];
      }
    }
  } else {
    std::mt19937_64 rng(c.seed);
    for (std::size_t i = 0; i < c.samples && !shapes.empty(); ++i) {
      const auto& s = shapes[rng() % shapes.size()];
      std::vector<std::vector<Letter>> words;
      for (int l : s) {
        std::vector<Letter> w(l);
        for (auto& x : w) x = static_cast<Letter>(rng() % c.n);
        words.push_back(std::move(w));
      }
      run(words);
    }
  }
  rep.skipped.assign(skipped.begin(), skipped.end());
  return rep;
}

nlohmann::ordered_json NonInclusionResult::to_json() const {
  nlohmann::ordered_json j;
  j["found"] = found;
  j["witness"] = found ? nlohmann::ordered_json(witness) : nlohmann::ordered_json(nullptr);
  j["attempted"] = attempted;
  j["skipped"] = skipped;
  return j;
}

NonInclusionResult search_non_inclusion(const NonInclusionSearch& s) {
  NonInclusionResult res;
  const int d = s.m1 + s.m2;
  for (int n = 2; n <= s.max_vars && !res.found; ++n) {
    for (const Partition& lam : partitions(d, n)) {
      if (lam.length() != n) continue;
      MultiDegree mu(lam.padded(n));
      const std::string key = weight_str(mu);
      std::shared_ptr<const Annihilator> ann;
      try {
        ann = ideal_engine(s.target).annihilator(mu, s.limits);
      } catch (const Infeasible&) {
        res.skipped.push_back(key);
        continue;
      }
      res.attempted.push_back(key);
      WeightSpace ws(mu);
      for (const Word& w : words_of_multidegree(mu)) {
        std::vector<NcPolynomial> a, b;
        for (int i = 0; i < d; ++i) (i < s.m1 ? a : b).push_back(NcPolynomial::monomial(n, Word({w[i]})));
        NcPolynomial f = left_normed(a) * left_normed(b);
        if (f.is_zero()) continue;
        if (!ann->annihilates(word_vector(f, ws))) {
          res.found = true;
          res.witness = "[" + a[0].str();
          for (std::size_t i = 1; i < a.size(); ++i) res.witness += "," + a[i].str();
          res.witness += "][" + b[0].str();
          for (std::size_t i = 1; i < b.size(); ++i) res.witness += "," + b[i].str();
          res.witness += "]";
          break;
        }
      }
      if (res.found) break;
    }
  }
  return res;
}

}  // namespace nilfree
