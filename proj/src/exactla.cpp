#include "nilfree/exactla.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilfree {

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

IntRow to_integral(const SparseVector& v) {
  Integer l = 1;
  for (const auto& [c, q] : v.entries) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntRow out;
  out.reserve(v.entries.size());
  for (const auto& [c, q] : v.entries) out.emplace_back(c, Integer(q.get_num() * (l / q.get_den())));
  return out;
}

void make_primitive(IntRow& r) {
  if (r.empty()) return;
  Integer g = 0;
  for (const auto& e : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// a*x - b*y, merged by column.
IntRow combine(const Integer& a, const IntRow& x, const Integer& b, const IntRow& y) {
  IntRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -(b * y[j].second));
      ++j;
    } else {
      t = a * x[i].second - b * y[j].second;
      if (t != 0) out.emplace_back(x[i].first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

void check_ncols(const SparseVector& v, std::size_t ncols) {
  if (!v.entries.empty() && v.entries.back().first >= ncols)
    throw std::invalid_argument("vector column exceeds matrix width");
}

// Echelon rows sorted by pivot column. Pivot choice: lowest column, then
// largest |lead|, earliest row on ties.
std::vector<IntRow> echelon_fraction_free(const RationalMatrix& m) {
  std::map<std::size_t, std::vector<IntRow>> buckets;
  for (const auto& r : m.rows()) {
    if (r.empty()) continue;
    IntRow ir = to_integral(r);
    make_primitive(ir);
    buckets[ir.front().first].push_back(std::move(ir));
  }
  std::vector<IntRow> out;
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    std::vector<IntRow>& rows = node.mapped();
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (mpz_cmpabs(rows[i].front().second.get_mpz_t(), rows[best].front().second.get_mpz_t()) > 0) best = i;
    IntRow piv = std::move(rows[best]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == best) continue;
      IntRow r = combine(piv.front().second, rows[i], rows[i].front().second, piv);
      if (r.empty()) continue;
      make_primitive(r);
      buckets[r.front().first].push_back(std::move(r));
    }
    out.push_back(std::move(piv));
  }
  return out;
}

std::vector<SparseVector> echelon_rational(const RationalMatrix& m) {
  std::map<std::size_t, std::vector<SparseVector>> buckets;
  for (const auto& r : m.rows())
    if (!r.empty()) buckets[r.entries.front().first].push_back(r);
  std::vector<SparseVector> out;
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    std::vector<SparseVector>& rows = node.mapped();
    SparseVector piv = std::move(rows[0]);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      Rational f = -rows[i].entries.front().second / piv.entries.front().second;
      SparseVector r = axpy(rows[i], f, piv);
      if (!r.empty()) buckets[r.entries.front().first].push_back(std::move(r));
    }
    out.push_back(std::move(piv));
  }
  return out;
}

}  // namespace

SparseVector::SparseVector(std::vector<std::pair<std::size_t, Rational>> e) {
  std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [c, q] : e) {
    if (!entries.empty() && entries.back().first == c) {
      entries.back().second += q;
      if (entries.back().second == 0) entries.pop_back();
    } else if (q != 0) {
      entries.emplace_back(c, std::move(q));
    }
  }
}

SparseVector SparseVector::from_dense(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.entries.emplace_back(i, dense[i]);
  return v;
}

Rational SparseVector::at(std::size_t col) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != entries.end() && it->first == col) ? it->second : Rational(0);
}

std::vector<Rational> SparseVector::to_dense(std::size_t ncols) const {
  std::vector<Rational> d(ncols);
  for (const auto& [c, q] : entries) d.at(c) = q;
  return d;
}

SparseVector axpy(const SparseVector& x, const Rational& a, const SparseVector& y) {
  if (a == 0) return x;
  SparseVector out;
  out.entries.reserve(x.nnz() + y.nnz());
  std::size_t i = 0, j = 0;
  while (i < x.nnz() || j < y.nnz()) {
    if (j == y.nnz() || (i < x.nnz() && x.entries[i].first < y.entries[j].first)) {
      out.entries.push_back(x.entries[i++]);
    } else if (i == x.nnz() || y.entries[j].first < x.entries[i].first) {
      out.entries.emplace_back(y.entries[j].first, a * y.entries[j].second);
      ++j;
    } else {
      Rational t = x.entries[i].second + a * y.entries[j].second;
      if (t != 0) out.entries.emplace_back(x.entries[i].first, std::move(t));
      ++i;
      ++j;
    }
  }
  return out;
}

Rational dot(const SparseVector& x, const SparseVector& y) {
  Rational s = 0;
  std::size_t i = 0, j = 0;
  while (i < x.nnz() && j < y.nnz()) {
    if (x.entries[i].first < y.entries[j].first) {
      ++i;
    } else if (y.entries[j].first < x.entries[i].first) {
      ++j;
    } else {
      s += x.entries[i++].second * y.entries[j++].second;
    }
  }
  return s;
}

RationalMatrix::RationalMatrix(std::size_t ncols, std::vector<SparseVector> rows) : ncols_(ncols) {
  for (auto& r : rows) add_row(std::move(r));
}

void RationalMatrix::add_row(SparseVector row) {
  check_ncols(row, ncols_);
  rows_.push_back(std::move(row));
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != ncols_) throw std::invalid_argument("apply: length mismatch");
  std::vector<Rational> y(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [c, q] : rows_[i].entries) y[i] += q * x[c];
  return y;
}

RankProfile rank(const RationalMatrix& m, Method method) {
  RankProfile prof;
  if (method == Method::FractionFree) {
    for (const auto& r : echelon_fraction_free(m)) prof.pivot_columns.push_back(r.front().first);
  } else {
    for (const auto& r : echelon_rational(m)) prof.pivot_columns.push_back(r.entries.front().first);
  }
  prof.rank = prof.pivot_columns.size();
  return prof;
}

std::vector<SparseVector> reduced_echelon(const RationalMatrix& m) {
  std::vector<IntRow> ech = echelon_fraction_free(m);
  std::vector<SparseVector> rows;
  rows.reserve(ech.size());
  for (const auto& r : ech) {
    SparseVector v;
    const Integer& lead = r.front().second;
    for (const auto& [c, z] : r) {
      Rational q(z, lead);
      q.canonicalize();
      v.entries.emplace_back(c, std::move(q));
    }
    rows.push_back(std::move(v));
  }
  for (std::size_t i = rows.size(); i-- > 0;) {
    const std::size_t p = rows[i].entries.front().first;
    for (std::size_t j = 0; j < i; ++j) {
      Rational a = rows[j].at(p);
      if (a != 0) rows[j] = axpy(rows[j], -a, rows[i]);
    }
  }
  return rows;
}

bool in_row_space(const RationalMatrix& m, const SparseVector& v) {
  check_ncols(v, m.ncols());
  if (v.empty()) return true;
  IntRow x = to_integral(v);
  for (const auto& r : echelon_fraction_free(m)) {
    if (x.empty()) break;
    const std::size_t p = r.front().first;
    auto it = std::lower_bound(x.begin(), x.end(), p, [](const auto& e, std::size_t c) { return e.first < c; });
    if (it == x.end() || it->first != p) continue;
    Integer xv = it->second;
    x = combine(r.front().second, x, xv, r);
    make_primitive(x);
  }
  return x.empty();
}

std::vector<SparseVector> nullspace(const RationalMatrix& m) {
  std::vector<SparseVector> rref = reduced_echelon(m);
  std::vector<bool> is_pivot(m.ncols(), false);
  for (const auto& r : rref) is_pivot[r.entries.front().first] = true;
  // Column f of the RREF, gathered once.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> by_col(m.ncols());
  for (const auto& r : rref) {
    const std::size_t p = r.entries.front().first;
    for (std::size_t k = 1; k < r.entries.size(); ++k) by_col[r.entries[k].first].emplace_back(p, -r.entries[k].second);
  }
  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < m.ncols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::pair<std::size_t, Rational>> e = by_col[f];
    e.emplace_back(f, Rational(1));
    SparseVector v(std::move(e));
    IntRow iv = to_integral(v);
    make_primitive(iv);
    SparseVector out;
    for (auto& [c, z] : iv) out.entries.emplace_back(c, Rational(z));
    basis.push_back(std::move(out));
  }
  return basis;
}

SparseVector RowSpace::reduce(const SparseVector& v) const {
  check_ncols(v, ncols_);
  SparseVector x = v;
  for (const auto& [c, q] : v.entries) {
    auto it = rows_.find(c);
    if (it != rows_.end()) x = axpy(x, -q, it->second);
  }
  return x;
}

bool RowSpace::insert(const SparseVector& v) {
  SparseVector x = reduce(v);
  if (x.empty()) return false;
  const std::size_t p = x.entries.front().first;
  const Rational lead = x.entries.front().second;
  for (auto& e : x.entries) e.second /= lead;
  for (auto& [c, r] : rows_) {
    Rational a = r.at(p);
    if (a != 0) r = axpy(r, -a, x);
  }
  rows_.emplace(p, std::move(x));
  return true;
}

std::vector<std::size_t> RowSpace::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& kv : rows_) out.push_back(kv.first);
  return out;
}

}  // namespace nilfree
