#include "nilfree/invariants.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace nilfree {

SchurMultiplicities quotient_multiplicities(int n, int p, int d, const EngineLimits& limits) {
  return schur_decompose(quotient_weight_table(n, p, d, limits));
}

std::vector<SparseVector> lie_invariant_basis(const GroupSpec& g, QuotientAlgebra& q, int d) {
  if (g.n != q.n()) throw std::invalid_argument("group and quotient use different n");
  const auto& comp = q.component(d);
  std::vector<std::size_t> domain;
  for (const auto& piece : comp.pieces) {
    // O(n): fixed space of x1 -> -x1 is the span of weights with even mu_1
    if (g.family == Family::O && piece.weight[0] % 2) continue;
    for (std::size_t k = 0; k < piece.ann->rank(); ++k) domain.push_back(piece.offset + k);
  }
  const auto gens = lie_algebra_basis(g);
  std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> rows;
  for (std::size_t j = 0; j < domain.size(); ++j) {
    const NcPolynomial w = NcPolynomial::monomial(g.n, q.basis_word(d, domain[j]));
    for (std::size_t a = 0; a < gens.size(); ++a) {
      const NcPolynomial img = apply_derivation(gens[a], w);
      if (img.is_zero()) continue;
      for (const auto& [r, c] : q.coordinates(img, d).entries) rows[a * comp.dim + r].emplace_back(j, c);
    }
  }
  RationalMatrix m(domain.size());
  for (auto& [r, entries] : rows) m.add_row(SparseVector(std::move(entries)));
  std::vector<SparseVector> out;
  for (const SparseVector& v : nullspace(m)) {
    SparseVector full;
    for (const auto& [j, c] : v.entries) full.entries.emplace_back(domain[j], c);
    out.push_back(std::move(full));
  }
  return out;
}

HilbertSeries invariant_hilbert(const GroupSpec& g, int p, int max_degree, const EngineLimits& limits) {
  HilbertSeries h;
  h.group = g;
  h.p = p;
  std::map<std::vector<int>, int> gate;
  for (int d = 0; d <= max_degree; ++d) {
    SchurMultiplicities m;
    try {
      m = quotient_multiplicities(g.n, p, d, limits);
    } catch (const Infeasible&) {
      h.skipped_from = d;
      break;
    }
    std::int64_t c = 0;
    for (const auto& [lam, k] : m.mult) {
      const int t = trivial_multiplicity(g, lam);
      if (g.family == Family::SO && !gate.count(lam.parts)) {
        if (Integer(t) != weyl_ct(g, lam))
          throw std::logic_error("SO branching rule disagrees with the constant-term oracle at " + lam.str());
        gate[lam.parts] = t;
      }
      c += k * t;
    }
    h.truncation.coefficients.push_back(c);
  }
  h.truncation.max_degree = static_cast<int>(h.truncation.coefficients.size()) - 1;
  return h;
}

int series_degree_bound(const GroupSpec& g, int p) {
  const int n = g.n;
  if (g.family == Family::O) return (p - 1) % 2 == 0 ? n * (p - 1) : n * (p - 2);
  return n * (p - 1);
}

FitReport fit_rational_form(const HilbertSeries& h) {
  FitReport f;
  const auto& c = h.truncation.coefficients;
  const int D = static_cast<int>(c.size()) - 1;
  int shift = 0;
  switch (h.group.family) {
    case Family::SL:
    case Family::Sp: f.denominator = "1"; break;
    case Family::O:
    case Family::SO: f.denominator = "1-t^2"; shift = 2; break;
    case Family::UT: f.denominator = "1-t"; shift = 1; break;
  }
  f.numerator.resize(c.size());
  for (int i = 0; i <= D; ++i) f.numerator[i] = c[i] - (shift && i >= shift ? c[i - shift] : 0);
  while (!f.numerator.empty() && f.numerator.back() == 0) f.numerator.pop_back();
  f.degree = static_cast<int>(f.numerator.size()) - 1;
  f.bound = series_degree_bound(h.group, h.p);
  f.polynomial = D >= 2 && f.degree <= D - 2;
  f.deg_bound_ok = f.polynomial && f.degree <= f.bound;
  return f;
}

int beta_bound(const GroupSpec& g, int p) {
  const int n = g.n;
  switch (g.family) {
    case Family::SL:
    case Family::Sp: return n * (p - 1);
    case Family::O:
      if (p <= 2) return 2;
      return (p - 1) % 2 == 0 ? n * (p - 1) : n * (p - 2);
    case Family::SO: return p == 1 ? 2 : n * (p - 1);
    case Family::UT: return p == 1 ? 1 : n * (p - 1);
  }
  return 0;
}

namespace {

// Span of sum_{0<i<d} A_i A_{d-i} inside the degree-d coordinates.
RowSpace decomposables(QuotientAlgebra& q, const std::vector<std::vector<SparseVector>>& inv, int d) {
  RowSpace rs(q.dim(d));
  for (int i = 1; i < d; ++i)
    for (const auto& a : inv[i])
      for (const auto& b : inv[d - i]) rs.insert(q.multiply(a, i, b, d - i));
  return rs;
}

}  // namespace

BetaReport beta_upper(const GroupSpec& g, int p, int max_degree, const EngineLimits& limits) {
  BetaReport r;
  r.window = max_degree;
  r.bound = beta_bound(g, p);
  QuotientAlgebra q(g.n, p, limits);
  std::vector<std::vector<SparseVector>> inv(max_degree + 1);
  r.new_generators.assign(max_degree + 1, 0);
  for (int d = 1; d <= max_degree; ++d) {
    inv[d] = lie_invariant_basis(g, q, d);
    RowSpace dec = decomposables(q, inv, d);
    std::size_t fresh = 0;
    for (const auto& v : inv[d])
      if (dec.insert(v)) ++fresh;
    r.new_generators[d] = fresh;
    if (fresh) r.beta = d;
  }
  r.conclusive = max_degree >= r.bound;
  return r;
}

NcPolynomial pairing_invariant(const GroupSpec& g, int k, const std::vector<std::pair<int, int>>& pairing) {
  if (g.family != Family::O && g.family != Family::Sp)
    throw std::invalid_argument("pairing invariants are defined for O and Sp");
  if (k <= 0 || k % 2) throw std::invalid_argument("pairing invariants need a positive even degree");
  if (static_cast<int>(pairing.size()) * 2 != k) throw std::invalid_argument("pairing is not perfect");
  std::vector<bool> used(k + 1, false);
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : pairing) {
    if (a < 1 || b < 1 || a > k || b > k || a == b || used[a] || used[b])
      throw std::invalid_argument("pairing is not a perfect matching on 1..k");
    used[a] = used[b] = true;
    pairs.emplace_back(std::min(a, b) - 1, std::max(a, b) - 1);
  }
  const Matrix t = form_matrix(g);
  std::vector<std::pair<std::pair<int, int>, Rational>> entries;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (t[i][j] != 0) entries.push_back({{i, j}, t[i][j]});
  NcPolynomial out(g.n);
  Word w(std::vector<Letter>(k, 0));
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t idx, Rational c) {
    if (idx == pairs.size()) {
      out.add_term(w, c);
      return;
    }
    for (const auto& [ij, v] : entries) {
      w.letters[pairs[idx].first] = static_cast<Letter>(ij.first);
      w.letters[pairs[idx].second] = static_cast<Letter>(ij.second);
      rec(idx + 1, c * v);
    }
  };
  rec(0, Rational(1));
  return out;
}

std::string class_name(InvariantClass c) {
  switch (c) {
    case InvariantClass::InIdeal: return "InIdeal";
    case InvariantClass::PowerOfTheta2: return "PowerOfTheta2";
    case InvariantClass::ReducibleByLowerDegree: return "ReducibleByLowerDegree";
    case InvariantClass::BelowThreshold: return "BelowThreshold";
    case InvariantClass::Violation: return "Violation";
  }
  return "?";
}

int classify_threshold(const GroupSpec& g, int p) { return beta_bound(g, p); }

InvariantClass classify_invariant(const NcPolynomial& f, const GroupSpec& g, int p, const EngineLimits& limits) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  const int d = f.degree();
  for (const auto& [w, c] : f.terms())
    if (static_cast<int>(w.size()) != d) throw std::invalid_argument("invariant must be homogeneous");
  if (!is_invariant(f, g)) throw std::invalid_argument("polynomial is not invariant under " + g.name());
  if (d <= classify_threshold(g, p)) return InvariantClass::BelowThreshold;
  if (ideal_membership(f, p + 1, limits)) return InvariantClass::InIdeal;

  QuotientAlgebra q(g.n, p, limits);
  const SparseVector fbar = q.coordinates(f, d);
  if (g.family == Family::O && d % 2 == 0) {
    NcPolynomial u = pairing_invariant(g, 2, {{1, 2}});
    NcPolynomial power = NcPolynomial::one(g.n);
    for (int i = 0; i < d / 2; ++i) power = power * u;
    RowSpace rs(q.dim(d));
    rs.insert(q.coordinates(power, d));
    if (rs.contains(fbar)) return InvariantClass::PowerOfTheta2;
  }
  std::vector<std::vector<SparseVector>> inv(d);
  for (int i = 1; i < d; ++i) inv[i] = lie_invariant_basis(g, q, i);
  if (decomposables(q, inv, d).contains(fbar)) return InvariantClass::ReducibleByLowerDegree;
  return InvariantClass::Violation;
}

nlohmann::ordered_json to_json(const HilbertSeries& h, const FitReport& fit) {
  nlohmann::ordered_json j;
  j["group"] = family_name(h.group.family);
  j["n"] = h.group.n;
  j["p"] = h.p;
  j["coeffs"] = h.truncation.coefficients;
  j["numerator"] = fit.numerator;
  j["denominator"] = fit.denominator;
  j["numerator_degree"] = fit.degree;
  j["bound"] = fit.bound;
  j["polynomial"] = fit.polynomial;
  j["deg_bound_ok"] = fit.deg_bound_ok;
  j["skipped_from"] = h.skipped_from ? nlohmann::ordered_json(*h.skipped_from) : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json to_json(const BetaReport& b) {
  nlohmann::ordered_json j;
  j["beta"] = b.beta;
  j["window"] = b.window;
  j["conclusive"] = b.conclusive;
  j["bound"] = b.bound;
  j["new_generators"] = b.new_generators;
  return j;
}

}  // namespace nilfree
