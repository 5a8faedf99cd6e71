#include "nilfree/groups.hpp"

#include "nilfree/exactla.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace nilfree {

GroupSpec::GroupSpec(Family f, int n_) : family(f), n(n_) {
  if (n < 1) throw std::invalid_argument("group dimension must be positive");
  if (f == Family::Sp && n % 2) throw std::invalid_argument("Sp(n) needs even n");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::SL: return "SL";
    case Family::O: return "O";
    case Family::SO: return "SO";
    case Family::Sp: return "Sp";
    case Family::UT: return "UT";
  }
  return "?";
}

std::string GroupSpec::name() const { return family_name(family) + "(" + std::to_string(n) + ")"; }

Family parse_family(const std::string& s) {
  std::string t = s;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "sl") return Family::SL;
  if (t == "o") return Family::O;
  if (t == "so") return Family::SO;
  if (t == "sp") return Family::Sp;
  if (t == "ut") return Family::UT;
  throw std::invalid_argument("unknown group family: " + s);
}

Matrix form_matrix(const GroupSpec& g) {
  Matrix t(g.n, std::vector<Rational>(g.n));
  if (g.family == Family::O || g.family == Family::SO) {
    for (int i = 0; i < g.n; ++i) t[i][i] = 1;
  } else if (g.family == Family::Sp) {
    const int s = g.n / 2;
    for (int i = 0; i < s; ++i) {
      t[i][s + i] = 1;
      t[s + i][i] = -1;
    }
  } else {
    throw std::invalid_argument("no invariant bilinear form for " + g.name());
  }
  return t;
}

namespace {

Matrix unit(int n, int a, int b) {
  Matrix m(n, std::vector<Rational>(n));
  m[a][b] = 1;
  return m;
}

}  // namespace

std::vector<Matrix> lie_algebra_basis(const GroupSpec& g) {
  const int n = g.n;
  std::vector<Matrix> out;
  if (g.family == Family::SL || g.family == Family::UT) {
    for (int i = 0; i + 1 < n; ++i) {
      out.push_back(unit(n, i, i + 1));
      if (g.family == Family::SL) out.push_back(unit(n, i + 1, i));
    }
    return out;
  }
  const Matrix t = form_matrix(g);
  // unknown A[a][b] sits in column a*n+b
  RationalMatrix eq(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<std::pair<std::size_t, Rational>> row;
      for (int k = 0; k < n; ++k) {
        if (t[k][j] != 0) row.emplace_back(i * n + k, t[k][j]);
        if (t[i][k] != 0) row.emplace_back(j * n + k, t[i][k]);
      }
      eq.add_row(SparseVector(std::move(row)));
    }
  for (const SparseVector& v : nullspace(eq)) {
    Matrix a(n, std::vector<Rational>(n));
    for (const auto& [c, q] : v.entries) a[c / n][c % n] = q;
    out.push_back(std::move(a));
  }
  return out;
}

NcPolynomial apply_derivation(const Matrix& a, const NcPolynomial& f) {
  NcPolynomial out(f.n());
  for (const auto& [w, c] : f.terms()) {
    Word v = w;
    for (std::size_t q = 0; q < w.size(); ++q) {
      const Letter b = w[q];
      for (int r = 0; r < f.n(); ++r) {
        if (a[r][b] == 0) continue;
        v.letters[q] = static_cast<Letter>(r);
        out.add_term(v, c * a[r][b]);
      }
      v.letters[q] = b;
    }
  }
  return out;
}

NcPolynomial reflect_first(const NcPolynomial& f) {
  NcPolynomial out(f.n());
  for (const auto& [w, c] : f.terms()) {
    const auto k = std::count(w.letters.begin(), w.letters.end(), Letter{0});
    out.add_term(w, k % 2 ? Rational(-c) : c);
  }
  return out;
}

bool is_invariant(const NcPolynomial& f, const GroupSpec& g) {
  if (f.n() != g.n) throw std::invalid_argument("polynomial and group use different n");
  for (const Matrix& a : lie_algebra_basis(g))
    if (!apply_derivation(a, f).is_zero()) return false;
  if (g.family == Family::O && !(reflect_first(f) == f)) return false;
  return true;
}

int trivial_multiplicity(const GroupSpec& g, const Partition& lambda) {
  if (lambda.length() > g.n) throw std::invalid_argument("partition " + lambda.str() + " longer than n");
  const std::vector<int> l = lambda.padded(g.n);
  switch (g.family) {
    case Family::SL:
      return std::all_of(l.begin(), l.end(), [&](int x) { return x == l[0]; }) ? 1 : 0;
    case Family::Sp:
      for (int i = 0; i + 1 < g.n; i += 2)
        if (l[i] != l[i + 1]) return 0;
      return 1;
    case Family::O:
      return std::all_of(l.begin(), l.end(), [](int x) { return x % 2 == 0; }) ? 1 : 0;
    case Family::SO:
      if (std::all_of(l.begin(), l.end(), [](int x) { return x % 2 == 0; })) return 1;
      return std::all_of(l.begin(), l.end(), [](int x) { return x % 2 == 1; }) ? 1 : 0;
    case Family::UT:
      return 1;
  }
  return 0;
}

namespace {

using Exponent = std::vector<int>;
using Laurent = std::map<Exponent, Integer>;

Laurent mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Integer& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  return out;
}

Exponent add(const Exponent& a, const Exponent& b, int sign = 1) {
  Exponent e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + sign * b[i];
  return e;
}

}  // namespace

Integer weyl_ct(const GroupSpec& g, const Partition& lambda) {
  if (g.family == Family::O) throw std::invalid_argument("constant-term oracle needs a connected group; O(n) is not");
  if (g.family == Family::UT) throw std::invalid_argument("constant-term oracle needs a reductive group");
  if (lambda.length() > g.n) throw std::invalid_argument("partition " + lambda.str() + " longer than n");
  const int n = g.n;
  std::vector<Exponent> eig;  // torus eigenvalues on V as exponent vectors
  std::vector<Exponent> roots;
  Integer weyl_order = 1;
  int r = 0;
  if (g.family == Family::SL) {
    r = n - 1;
    for (int i = 0; i < r; ++i) {
      Exponent e(r, 0);
      e[i] = 1;
      eig.push_back(e);
    }
    eig.push_back(Exponent(r, -1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) roots.push_back(add(eig[i], eig[j], -1));
    for (int i = 2; i <= n; ++i) weyl_order *= i;
  } else {
    const int s = n / 2;
    r = s;
    std::vector<Exponent> e(s, Exponent(s, 0));
    for (int i = 0; i < s; ++i) e[i][i] = 1;
    for (int i = 0; i < s; ++i) eig.push_back(e[i]);
    for (int i = 0; i < s; ++i) eig.push_back(add(Exponent(s, 0), e[i], -1));
    if (n % 2) eig.push_back(Exponent(s, 0));
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            Exponent a(s, 0);
            a[i] = si;
            a[j] = sj;
            roots.push_back(a);
          }
    for (int i = 0; i < s; ++i)
      for (int si : {1, -1}) {
        Exponent a(s, 0);
        if (g.family == Family::Sp) {
          a[i] = 2 * si;
          roots.push_back(a);
        } else if (n % 2) {
          a[i] = si;
          roots.push_back(a);
        }
      }
    for (int i = 2; i <= s; ++i) weyl_order *= i;
    const int twos = (g.family == Family::SO && n % 2 == 0) ? std::max(s - 1, 0) : s;
    for (int i = 0; i < twos; ++i) weyl_order *= 2;
  }
  Laurent schur;
  for (const MultiDegree& mu : compositions(lambda.size(), n)) {
    const std::int64_t k = kostka(lambda, mu);
    if (!k) continue;
    Exponent e(r, 0);
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < r; ++t) e[t] += mu[i] * eig[i][t];
    schur[e] += k;
  }
  Laurent acc = schur;
  for (const Exponent& a : roots) acc = mul(acc, Laurent{{Exponent(r, 0), 1}, {a, -1}});
  auto it = acc.find(Exponent(r, 0));
  Integer ct = it == acc.end() ? Integer(0) : it->second;
  if (ct % weyl_order != 0) throw std::logic_error("constant term not divisible by the Weyl group order");
  return ct / weyl_order;
}

}  // namespace nilfree
