#include "nilfree/ideals.hpp"

#include <algorithm>
#include <functional>

namespace nilfree {

namespace {

void for_each_cut(int d, int parts, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur{0};
  auto rec = [&](auto&& self, int part) -> void {
    if (part == parts - 1) {
      cur.push_back(d);
      fn(cur);
      cur.pop_back();
      return;
    }
    for (int b = cur.back() + 1; b <= d - (parts - 1 - part); ++b) {
      cur.push_back(b);
      self(self, part + 1);
      cur.pop_back();
    }
  };
  if (parts >= 1 && d >= parts) rec(rec, 0);
}

}  // namespace

std::vector<NcPolynomial> lie_spanning(int p, const MultiDegree& mu) {
  if (p < 2) throw std::invalid_argument("lie_spanning needs p >= 2");
  std::vector<NcPolynomial> out;
  const int n = mu.n();
  const int d = mu.total();
  if (d < p) return out;
  for (const Word& w : words_of_multidegree(mu)) {
    for_each_cut(d, p, [&](const std::vector<int>& b) {
      std::vector<NcPolynomial> args;
      for (int j = 0; j < p; ++j)
        args.push_back(NcPolynomial::monomial(
            n, Word(std::vector<Letter>(w.letters.begin() + b[j], w.letters.begin() + b[j + 1]))));
      NcPolynomial c = left_normed(args);
      if (!c.is_zero()) out.push_back(std::move(c));
    });
  }
  return out;
}

SparseVector word_vector(const NcPolynomial& f, const WeightSpace& ws) {
  std::vector<std::pair<std::size_t, Rational>> e;
  for (const auto& [w, c] : f.terms()) {
    if (multidegree(w, ws.weight().n()) != ws.weight())
      throw std::invalid_argument("polynomial term outside the weight space");
    e.emplace_back(ws.index_of(w), c);
  }
  return SparseVector(std::move(e));
}

RationalMatrix ideal_spanning(int p, const MultiDegree& mu) {
  WeightSpace ws(mu);
  RationalMatrix m(ws.size());
  const int n = mu.n();
  // mu = weight(m0) + weight(c)
  for (int h = 0; h <= mu.total() - p; ++h)
  for (const MultiDegree& head : compositions(h, n)) {
    MultiDegree rest = mu;
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      rest.counts[i] -= head[i];
      if (rest.counts[i] < 0) ok = false;
    }
    if (!ok || rest.total() < p) continue;
    const auto lie = lie_spanning(p, rest);
    if (lie.empty()) continue;
    for (const Word& m0 : words_of_multidegree(head)) {
      const NcPolynomial left = NcPolynomial::monomial(n, m0);
      for (const auto& c : lie) m.add_row(word_vector(left * c, ws));
    }
  }
  return m;
}

QuotientComponent quotient_dim(int p, const MultiDegree& mu, const EngineLimits& limits) {
  if (p < 1) throw std::invalid_argument("quotient_dim needs p >= 1");
  auto ann = ideal_engine(p + 1).annihilator(mu, limits);
  QuotientComponent q;
  q.p = p;
  q.mu = mu;
  q.dim = ann->rank();
  WeightSpace ws(mu);
  if (ann->identity) {
    q.coset_basis_words = words_of_multidegree(mu);
  } else {
    for (std::size_t r : ann->pivots) q.coset_basis_words.push_back(ws.word_at(r));
  }
  return q;
}

std::size_t ideal_dim(int p, const MultiDegree& mu, const EngineLimits& limits) {
  auto ann = ideal_engine(p).annihilator(mu, limits);
  return ann->columns - ann->rank();
}

bool ideal_membership(const NcPolynomial& f, int p, const EngineLimits& limits) {
  if (p < 1) throw std::invalid_argument("ideal index must be positive");
  for (const auto& [mu, comp] : f.components()) {
    WeightSpace ws(mu);
    auto ann = ideal_engine(p).annihilator(mu, limits);
    if (!ann->annihilates(word_vector(comp, ws))) return false;
  }
  return true;
}

WeightTable quotient_weight_table(int n, int p, int d, const EngineLimits& limits) {
  WeightTable w{d, n, {}};
  for (const Partition& lam : partitions(d, n)) {
    MultiDegree mu(lam.padded(n));
    w.dims[mu] = static_cast<std::int64_t>(quotient_dim(p, mu, limits).dim);
  }
  return w;
}

}  // namespace nilfree
