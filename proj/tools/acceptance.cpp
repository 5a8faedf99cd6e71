// Acceptance run: one PASS/FAIL line per criterion, details on stderr.
#include "nilfree/inclusions.hpp"
#include "nilfree/invariants.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace nilfree;

namespace {

std::ostream& log() { return std::cerr; }

int part(const Partition& lam, int i) { return i < lam.length() ? lam.parts[i] : 0; }

NcPolynomial random_monomial(std::mt19937_64& rng, int n, int min_len, int max_len) {
  const int len = min_len + static_cast<int>(rng() % (max_len - min_len + 1));
  std::vector<Letter> w(len);
  for (auto& x : w) x = static_cast<Letter>(rng() % n);
  return NcPolynomial::monomial(n, Word(w));
}

std::vector<std::pair<int, int>> random_matching(int k, std::mt19937_64& rng) {
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[i] = i + 1;
  std::shuffle(pos.begin(), pos.end(), rng);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < k; i += 2) out.emplace_back(pos[i], pos[i + 1]);
  return out;
}

bool jennings() {
  std::mt19937_64 rng(1);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    NcPolynomial c1 = random_monomial(rng, 4, 1, 2), c2 = random_monomial(rng, 4, 1, 2);
    NcPolynomial x = random_monomial(rng, 4, 1, 1), y = random_monomial(rng, 4, 1, 1);
    NcPolynomial e = commutator(c1, x) * commutator(c2, y) - left_normed({c2, c1 * y, x}) -
                     commutator(c1, c2) * commutator(y, x) - left_normed({c1, c2, x}) * y +
                     c1 * left_normed({c2, y, x});
    if (!e.is_zero()) return false;
    ++checked;
  }
  log() << "  " << checked << " instantiations vanish\n";
  return true;
}

bool inclusions() {
  struct Row {
    std::string st;
    std::vector<int> m;
    int n;
    int max_degree;
  };
  std::vector<Row> rows;
  for (int a = 2; a <= 5; ++a)
    for (int b = 2; a + b <= 7; ++b) {
      rows.push_back({"product", {a, b}, 4, std::max(6, a + b)});
      if (a % 2 || b % 2) rows.push_back({"product-odd", {a, b}, 4, std::max(6, a + b)});
    }
  for (int r = 2; r <= 3; ++r)
    for (int p = r; p <= 3; ++p) rows.push_back({"shared-last", {r, p}, 4, 6});
  rows.push_back({"even-shared-last", {2, 2}, 4, 6});
  rows.push_back({"even-shared-last", {2, 4}, 4, 7});
  rows.push_back({"even-shared-chain", {2, 2, 2}, 4, 7});
  for (int a = 2; a <= 6; ++a)
    for (int b = 2; a + b <= 8; ++b) rows.push_back({"three-generator", {a, b}, 3, a + b});

  bool ok = true;
  for (const Row& r : rows) {
    InclusionCase c;
    c.statement = r.st;
    c.m = r.m;
    c.n = r.n;
    c.max_degree = r.max_degree;
    const auto t0 = std::chrono::steady_clock::now();
    const InclusionReport rep = verify_inclusion(c);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    log() << "  " << rep.to_json().dump() << " " << secs << "s\n";
    if (!rep.passed() || !rep.skipped.empty() || rep.checked == 0) ok = false;
    if (r.st == "even-shared-last" && r.m == std::vector<int>{2, 2} && !rep.exhaustive) ok = false;
  }
  return ok;
}

const std::vector<std::pair<int, int>> kBoundCases = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
constexpr int kBoundDegree = 7;

struct Tables {
  std::vector<WeightTable> f;
  std::vector<WeightTable> b;
};

Tables& tables(int n, int p) {
  static std::map<std::pair<int, int>, Tables> cache;
  auto it = cache.find({n, p});
  if (it != cache.end()) return it->second;
  Tables t;
  for (int d = 0; d <= kBoundDegree; ++d) t.f.push_back(quotient_weight_table(n, p, d));
  t.b = divide_by_sv(t.f);
  return cache[{n, p}] = std::move(t);
}

bool lambda_bounds() {
  bool ok = true;
  for (auto [n, p] : kBoundCases) {
    Tables& t = tables(n, p);
    int max_b1 = 0, max_f2 = 0;
    for (int d = 0; d <= kBoundDegree; ++d) {
      for (const auto& [lam, k] : schur_decompose(t.f[d]).mult)
        if (k) max_f2 = std::max(max_f2, part(lam, 1));
      for (const auto& [lam, k] : schur_decompose(t.b[d]).mult)
        if (k) max_b1 = std::max(max_b1, part(lam, 0));
    }
    log() << "  n=" << n << " p=" << p << " max lambda1(B)=" << max_b1 << " max lambda2(F)=" << max_f2 << "\n";
    if (max_b1 > p - 1 || max_f2 > p - 1) ok = false;
    if (p <= 3 && max_b1 != p - 1) ok = false;
  }
  return ok;
}

bool grassmann() {
  bool ok = true;
  for (int n = 2; n <= 3; ++n)
    for (int d = 1; d <= kBoundDegree; ++d) {
      const auto m = schur_decompose(tables(n, 2).f[d]);
      for (const Partition& lam : partitions(d, n)) {
        const bool hook = part(lam, 1) <= 1;
        if (m.at(lam) != (hook ? 1 : 0)) {
          log() << "  n=" << n << " " << lam.str() << " multiplicity " << m.at(lam) << "\n";
          ok = false;
        }
      }
    }
  // dimensions by literal elimination of the ideal spanning set
  for (int d = 2; d <= kBoundDegree; ++d) {
    Integer dim = 0;
    for (const MultiDegree& mu : compositions(d, 2))
      dim += Integer(multinomial(mu)) - rank(ideal_spanning(3, mu)).rank;
    log() << "  dim F_2(N_2)_" << d << " = " << to_string(dim) << "\n";
    if (dim != 2 * d) ok = false;
  }
  return ok;
}

bool round_trip() {
  for (auto [n, p] : kBoundCases) {
    Tables& t = tables(n, p);
    std::vector<SchurMultiplicities> bm;
    for (const auto& b : t.b) bm.push_back(schur_decompose(b));
    const auto back = pieri_tensor(bm, kBoundDegree, n);
    for (int d = 0; d <= kBoundDegree; ++d)
      if (!(back[d] == schur_decompose(t.f[d]))) {
        log() << "  n=" << n << " p=" << p << " degree " << d << " differs\n";
        return false;
      }
  }
  return true;
}

std::vector<GroupSpec> small_groups() {
  std::vector<GroupSpec> out;
  for (int n = 2; n <= 3; ++n)
    for (Family f : {Family::SL, Family::O, Family::SO, Family::Sp, Family::UT})
      if (f != Family::Sp || n % 2 == 0) out.emplace_back(f, n);
  return out;
}

bool dual_oracles() {
  std::size_t ct_checked = 0, kernel_checked = 0, bad = 0;
  for (const GroupSpec& g : {GroupSpec(Family::SL, 2), GroupSpec(Family::SL, 3), GroupSpec(Family::Sp, 2),
                             GroupSpec(Family::Sp, 4), GroupSpec(Family::SO, 2), GroupSpec(Family::SO, 3),
                             GroupSpec(Family::SO, 4)})
    for (int d = 0; d <= 6; ++d)
      for (const Partition& lam : partitions(d, g.n)) {
        ++ct_checked;
        if (Integer(trivial_multiplicity(g, lam)) != weyl_ct(g, lam)) {
          log() << "  " << g.name() << " " << lam.str() << " constant term disagrees\n";
          ++bad;
        }
      }
  for (const GroupSpec& g : small_groups())
    for (int p = 1; p <= 3; ++p) {
      QuotientAlgebra q(g.n, p);
      for (int d = 0; d <= 5; ++d) {
        std::int64_t rule = 0;
        for (const auto& [lam, k] : quotient_multiplicities(g.n, p, d).mult) rule += k * trivial_multiplicity(g, lam);
        ++kernel_checked;
        if (rule != static_cast<std::int64_t>(lie_invariant_basis(g, q, d).size())) {
          log() << "  " << g.name() << " p=" << p << " d=" << d << " kernel disagrees\n";
          ++bad;
        }
      }
    }
  log() << "  " << ct_checked << " constant terms, " << kernel_checked << " kernels, " << bad << " disagreements\n";
  return bad == 0;
}

bool series_forms() {
  bool ok = true;
  for (const GroupSpec& g : small_groups())
    for (int p = 1; p <= 3; ++p) {
      const int D = g.n * (p - 1) + 4;
      const HilbertSeries h = invariant_hilbert(g, p, D);
      const FitReport fit = fit_rational_form(h);
      log() << "  " << to_json(h, fit).dump() << "\n";
      if (h.skipped_from || !fit.polynomial || !fit.deg_bound_ok) ok = false;
      if ((g.family == Family::SL || g.family == Family::Sp) && fit.degree > g.n * (p - 1)) ok = false;
    }
  return ok;
}

bool generating_degrees() {
  bool ok = true;
  for (int n = 2; n <= 3; ++n)
    for (Family f : {Family::SL, Family::SO, Family::UT, Family::O, Family::Sp}) {
      if (f == Family::Sp && n != 2) continue;
      const GroupSpec g(f, n);
      const BetaReport b = beta_upper(g, 2, n + 2);
      const int expected = f == Family::O || f == Family::Sp ? 2 : n;
      log() << "  " << g.name() << " p=2 " << to_json(b).dump() << " expected " << expected << "\n";
      if (!b.conclusive || b.beta != expected) ok = false;
    }
  for (const GroupSpec& g : small_groups())
    for (int p = 1; p <= 3; ++p) {
      const BetaReport b = beta_upper(g, p, beta_bound(g, p) + 1);
      log() << "  " << g.name() << " p=" << p << " beta=" << b.beta << " bound=" << b.bound << "\n";
      if (!b.conclusive || b.beta > b.bound) ok = false;
    }
  return ok;
}

bool invariant_classes() {
  bool ok = true;
  std::mt19937_64 rng(5);
  std::map<std::string, int> tally;
  auto classify = [&](const NcPolynomial& f, const GroupSpec& g, int p) {
    const InvariantClass c = classify_invariant(f, g, p);
    ++tally[class_name(c)];
    if (c == InvariantClass::Violation) {
      log() << "  VIOLATION " << g.name() << " p=" << p << " " << f.str() << "\n";
      ok = false;
    }
    return c;
  };
  for (const GroupSpec& g : {GroupSpec(Family::O, 2), GroupSpec(Family::O, 3), GroupSpec(Family::Sp, 2)})
    for (int i = 0; i < 10; ++i) {
      const int k = 2 + 2 * static_cast<int>(rng() % 3);
      const NcPolynomial f = pairing_invariant(g, k, random_matching(k, rng));
      for (int p = 1; p <= 2; ++p) classify(f, g, p);
    }
  // SL(2): powers of [x1,x2] and symplectic pairings, which span the SL(2) invariants
  const GroupSpec sl2(Family::SL, 2);
  const NcPolynomial c = commutator(NcPolynomial::generator(2, 0), NcPolynomial::generator(2, 1));
  NcPolynomial pw = c;
  for (int k = 1; k <= 3; ++k, pw = pw * c)
    for (int p = 1; p <= 2; ++p) classify(pw, sl2, p);
  const GroupSpec sp2(Family::Sp, 2);
  for (int i = 0; i < 10; ++i) {
    const int k = 2 + 2 * static_cast<int>(rng() % 3);
    const NcPolynomial f = pairing_invariant(sp2, k, random_matching(k, rng));
    for (int p = 1; p <= 2; ++p) classify(f, sl2, p);
  }
  for (int n = 2; n <= 3; ++n) {
    const GroupSpec o(Family::O, n);
    const NcPolynomial u = pairing_invariant(o, 2, {{1, 2}});
    if (classify(u * u, o, 2) != InvariantClass::PowerOfTheta2) ok = false;
  }
  std::ostringstream os;
  for (const auto& [name, k] : tally) os << ' ' << name << '=' << k;
  log() << " " << os.str() << "\n";
  return ok;
}

bool stretch() {
  NonInclusionSearch s;
  const auto r = search_non_inclusion(s);
  log() << "  " << r.to_json().dump() << "\n";
  return r.found;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<bool()>>> criteria = {
      {"Jennings identity", jennings},
      {"inclusion suite", inclusions},
      {"partition row bounds", lambda_bounds},
      {"Grassmann case p=2", grassmann},
      {"S(V) tensor round trip", round_trip},
      {"dual-oracle branching", dual_oracles},
      {"Hilbert series forms", series_forms},
      {"generating degrees", generating_degrees},
      {"invariant classification", invariant_classes},
      {"stretch: I_4 I_4 outside I_7 (non-gating)", stretch},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    log() << "criterion " << i + 1 << ": " << criteria[i].first << "\n";
    bool ok = false;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      log() << "  exception: " << e.what() << "\n";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << " (" << secs << "s)"
              << std::endl;
    if (!ok && i + 1 < criteria.size()) ++failed;
  }
  return failed ? 1 : 0;
}
