#include "nilfree/ideals.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace nilfree {

namespace {

struct Overflow {};

// Arithmetic shims so one elimination routine serves int64 and mpz.
inline void add_to(std::int64_t& acc, std::int64_t v) {
  if (__builtin_add_overflow(acc, v, &acc)) throw Overflow{};
}
inline void sub_from(std::int64_t& acc, std::int64_t v) {
  if (__builtin_sub_overflow(acc, v, &acc)) throw Overflow{};
}
inline void add_to(Integer& acc, const Integer& v) { acc += v; }
inline void sub_from(Integer& acc, const Integer& v) { acc -= v; }

// a*x - b*y
inline std::int64_t cross(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y) {
  std::int64_t u, v, r;
  if (__builtin_mul_overflow(a, x, &u) || __builtin_mul_overflow(b, y, &v) || __builtin_sub_overflow(u, v, &r) ||
      r == INT64_MIN)
    throw Overflow{};
  return r;
}
inline Integer cross(const Integer& a, const Integer& x, const Integer& b, const Integer& y) { return a * x - b * y; }

inline bool is_zero(std::int64_t v) { return v == 0; }
inline bool is_zero(const Integer& v) { return sgn(v) == 0; }
inline bool is_neg(std::int64_t v) { return v < 0; }
inline bool is_neg(const Integer& v) { return sgn(v) < 0; }

inline void gcd_acc(std::int64_t& g, std::int64_t v) { g = std::gcd(g, v); }
inline void gcd_acc(Integer& g, const Integer& v) { mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t()); }
inline bool is_one(std::int64_t g) { return g == 1; }
inline bool is_one(const Integer& g) { return g == 1; }
inline void divexact(std::int64_t& v, std::int64_t g) { v /= g; }
inline void divexact(Integer& v, const Integer& g) { mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t()); }

template <class Int>
Int from_stored(const Annihilator& a, std::size_t r, std::size_t k);
template <>
std::int64_t from_stored<std::int64_t>(const Annihilator& a, std::size_t r, std::size_t k) {
  if (a.wide) throw Overflow{};
  return a.v64[r * a.pivots.size() + k];
}
template <>
Integer from_stored<Integer>(const Annihilator& a, std::size_t r, std::size_t k) {
  return a.entry(r, k);
}

// Dense word-major table of candidate functionals.
template <class Int>
struct Table {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;
  std::vector<std::size_t> pivot;  // per column

  Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  void normalize(std::size_t c, std::size_t upto) {
    Int g = 0;
    for (std::size_t r = 0; r <= upto; ++r) {
      const Int& v = at(r, c);
      if (!is_zero(v)) {
        gcd_acc(g, v);
        if (is_one(g)) break;
      }
    }
    const bool flip = is_neg(at(pivot[c], c));
    if (is_zero(g)) return;
    if (!is_one(g))
      for (std::size_t r = 0; r <= upto; ++r) divexact(at(r, c), g);
    if (flip)
      for (std::size_t r = 0; r <= upto; ++r) at(r, c) = -at(r, c);
  }

  // column c <- s*c - t*col(j), over rows 0..upto
  void combine(std::size_t c, const Int& s, std::size_t j, const Int& t, std::size_t upto) {
    for (std::size_t r = 0; r <= upto; ++r) at(r, c) = cross(s, at(r, c), t, at(r, j));
  }

  // Keeps only the listed columns, in the given order.
  void select(const std::vector<std::size_t>& keep) {
    std::vector<Int> b(rows * keep.size());
    std::vector<std::size_t> piv(keep.size());
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t k = 0; k < keep.size(); ++k) b[r * keep.size() + k] = at(r, keep[k]);
    for (std::size_t k = 0; k < keep.size(); ++k) piv[k] = pivot[keep[k]];
    a = std::move(b);
    pivot = std::move(piv);
    cols = keep.size();
  }
};

template <class Int>
void store(Annihilator& out, Table<Int>& t);

template <>
void store<std::int64_t>(Annihilator& out, Table<std::int64_t>& t) {
  out.wide = false;
  out.v64 = std::move(t.a);
  out.pivots = t.pivot;
}
template <>
void store<Integer>(Annihilator& out, Table<Integer>& t) {
  bool fits = true;
  for (const auto& v : t.a)
    if (!v.fits_slong_p()) {
      fits = false;
      break;
    }
  out.pivots = t.pivot;
  if (fits) {
    out.wide = false;
    out.v64.resize(t.a.size());
    for (std::size_t i = 0; i < t.a.size(); ++i) out.v64[i] = t.a[i].get_si();
  } else {
    out.wide = true;
    out.vbig = std::move(t.a);
  }
}

// Sorts columns by pivot and makes every column vanish at the other pivots.
// Columns must already have distinct last-nonzero rows equal to their pivots.
template <class Int>
void reduce_reverse(Table<Int>& t) {
  std::vector<std::size_t> order(t.cols);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return t.pivot[x] < t.pivot[y]; });
  t.select(order);
  for (std::size_t k = 0; k < t.cols; ++k) {
    for (std::size_t j = k; j-- > 0;) {
      const std::size_t pj = t.pivot[j];
      if (is_zero(t.at(pj, k))) continue;
      const Int s = t.at(pj, j);
      const Int f = t.at(pj, k);
      t.combine(k, s, j, f, t.pivot[k]);
      t.normalize(k, t.pivot[k]);
    }
  }
}

// Brings arbitrary independent columns to reduced reverse echelon form.
template <class Int>
void reverse_echelon(Table<Int>& t) {
  auto last_nonzero = [&](std::size_t c, std::size_t from) -> std::ptrdiff_t {
    for (std::size_t r = from + 1; r-- > 0;)
      if (!is_zero(t.at(r, c))) return static_cast<std::ptrdiff_t>(r);
    return -1;
  };
  std::map<std::size_t, std::vector<std::size_t>, std::greater<>> buckets;
  for (std::size_t c = 0; c < t.cols; ++c) {
    auto l = last_nonzero(c, t.rows - 1);
    if (l >= 0) buckets[static_cast<std::size_t>(l)].push_back(c);
  }
  std::vector<std::size_t> keep;
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    const std::size_t r = node.key();
    auto& cs = node.mapped();
    const std::size_t piv = cs.front();
    t.pivot[piv] = r;
    t.normalize(piv, r);
    for (std::size_t i = 1; i < cs.size(); ++i) {
      const std::size_t c = cs[i];
      const Int s = t.at(r, piv);
      const Int f = t.at(r, c);
      t.combine(c, s, piv, f, r);
      auto l = last_nonzero(c, r);
      if (l < 0) continue;
      t.pivot[c] = static_cast<std::size_t>(l);
      t.normalize(c, static_cast<std::size_t>(l));
      buckets[static_cast<std::size_t>(l)].push_back(c);
    }
    keep.push_back(piv);
  }
  t.select(keep);
  reduce_reverse(t);
}

// Letter maps taking W(nu) onto W(dominant(nu)).
std::vector<Letter> sorting_map(const std::vector<int>& nu) {
  std::vector<std::size_t> idx(nu.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return nu[a] > nu[b]; });
  std::vector<Letter> map(nu.size());
  for (std::size_t pos = 0; pos < idx.size(); ++pos) map[idx[pos]] = static_cast<Letter>(pos);
  return map;
}

std::vector<int> strip(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

bool is_dominant(const std::vector<int>& v) { return std::is_sorted(v.begin(), v.end(), std::greater<>()); }

template <class Int>
void permuted(const Annihilator& dom, const MultiDegree& nu, Annihilator& out) {
  WeightSpace ws(nu), wd(dom.weight);
  const auto map = sorting_map(nu.counts);
  const std::size_t U = dom.pivots.size();
  Table<Int> t;
  t.rows = ws.size();
  t.cols = U;
  t.a.assign(t.rows * U, Int(0));
  t.pivot.assign(U, 0);
  std::vector<Letter> w;
  for (int i = 0; i < nu.n(); ++i) w.insert(w.end(), nu[i], static_cast<Letter>(i));
  std::vector<Letter> img(w.size());
  std::size_t r = 0;
  do {
    for (std::size_t i = 0; i < w.size(); ++i) img[i] = map[w[i]];
    const std::size_t rd = wd.index_of(img.data());
    for (std::size_t k = 0; k < U; ++k) t.at(r, k) = from_stored<Int>(dom, rd, k);
    ++r;
  } while (std::next_permutation(w.begin(), w.end()));
  reverse_echelon(t);
  store(out, t);
}

struct Generators {
  // For each sign mask: block order and sign of the expanded term.
  std::vector<std::vector<int>> orders;
  std::vector<int> signs;

  explicit Generators(int m) {
    for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
      std::vector<int> ord{0};
      int s = 1;
      for (int j = 1; j < m; ++j) {
        if (mask >> (j - 1) & 1) {
          ord.insert(ord.begin(), j);
          s = -s;
        } else {
          ord.push_back(j);
        }
      }
      orders.push_back(std::move(ord));
      signs.push_back(s);
    }
  }
};

// Cut points 0 = b0 < b1 < ... < bm = d.
std::vector<std::vector<int>> cut_lists(int d, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur{0};
  auto rec = [&](auto&& self, int part) -> void {
    if (part == m - 1) {
      cur.push_back(d);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int b = cur.back() + 1; b <= d - (m - 1 - part); ++b) {
      cur.push_back(b);
      self(self, part + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

template <class Int>
void dominant_compute(int m, const MultiDegree& nu, const std::vector<std::shared_ptr<const Annihilator>>& subs,
                      const EngineLimits& limits, Annihilator& out) {
  WeightSpace ws(nu);
  const std::size_t N = ws.size();
  const int d = nu.total();
  const int n = nu.n();

  // Initial candidates: sub-weight annihilators placed on first-letter blocks.
  std::size_t U0 = 0;
  for (int i = 0; i < n; ++i)
    if (subs[i]) U0 += subs[i]->rank();
  if (N * std::max<std::size_t>(U0, 1) > limits.work_cap)
    throw Infeasible("work cap exceeded at weight of size " + std::to_string(N));
  Table<Int> t;
  t.rows = N;
  t.cols = U0;
  t.a.assign(N * U0, Int(0));
  t.pivot.assign(U0, 0);
  std::size_t row_off = 0, col_off = 0;
  for (int i = 0; i < n; ++i) {
    if (!subs[i]) continue;
    const Annihilator& s = *subs[i];
    if (s.identity) {
      for (std::size_t r = 0; r < s.columns; ++r) {
        t.at(row_off + r, col_off + r) = Int(1);
        t.pivot[col_off + r] = row_off + r;
      }
    } else {
      const std::size_t U = s.pivots.size();
      for (std::size_t r = 0; r < s.columns; ++r)
        for (std::size_t k = 0; k < U; ++k) t.at(row_off + r, col_off + k) = from_stored<Int>(s, r, k);
      for (std::size_t k = 0; k < U; ++k) t.pivot[col_off + k] = row_off + s.pivots[k];
    }
    row_off += s.columns;
    col_off += s.rank();
  }

  std::vector<std::size_t> alive(U0);
  std::iota(alive.begin(), alive.end(), 0);
  std::vector<Int> tk(U0);
  std::size_t dead = 0;

  const Generators gen(m);
  const auto cuts = cut_lists(d, m);
  std::vector<Letter> w;
  for (int i = 0; i < n; ++i) w.insert(w.end(), nu[i], static_cast<Letter>(i));
  std::vector<Letter> term(d);
  std::vector<std::size_t> idx(gen.orders.size());

  do {
    if (alive.empty()) break;
    for (const auto& b : cuts) {
      // [B1, B2, ...] vanishes when B1 == B2
      if (b[1] - b[0] == b[2] - b[1] && std::equal(w.begin(), w.begin() + b[1], w.begin() + b[1])) continue;
      for (std::size_t g = 0; g < gen.orders.size(); ++g) {
        std::size_t pos = 0;
        for (int blk : gen.orders[g])
          for (int q = b[blk]; q < b[blk + 1]; ++q) term[pos++] = w[q];
        idx[g] = ws.index_of(term.data());
      }
      bool any = false;
      for (std::size_t a = 0; a < alive.size(); ++a) {
        const std::size_t k = alive[a];
        Int acc = 0;
        for (std::size_t g = 0; g < idx.size(); ++g) {
          const Int& v = t.at(idx[g], k);
          if (is_zero(v)) continue;
          if (gen.signs[g] > 0)
            add_to(acc, v);
          else
            sub_from(acc, v);
        }
        if (!is_zero(acc)) any = true;
        tk[a] = std::move(acc);
      }
      if (!any) continue;
      std::size_t star = alive.size();
      for (std::size_t a = 0; a < alive.size(); ++a)
        if (!is_zero(tk[a]) && (star == alive.size() || t.pivot[alive[a]] < t.pivot[alive[star]])) star = a;
      const std::size_t ks = alive[star];
      const std::size_t ps = t.pivot[ks];
      for (std::size_t a = 0; a < alive.size(); ++a) {
        if (a == star || is_zero(tk[a])) continue;
        const std::size_t k = alive[a];
        const std::size_t upto = t.pivot[k];
        // ks is supported on rows <= ps < upto
        for (std::size_t r = 0; r <= upto; ++r) {
          Int& x = t.at(r, k);
          if (r <= ps)
            x = cross(tk[star], x, tk[a], t.at(r, ks));
          else if (!is_zero(x))
            x = cross(tk[star], x, Int(0), Int(0));
        }
        t.normalize(k, upto);
      }
      alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(star));
      ++dead;
      if (dead > alive.size() && dead > 8) {
        t.select(alive);
        std::iota(alive.begin(), alive.end(), 0);
        dead = 0;
      }
    }
  } while (std::next_permutation(w.begin(), w.end()));

  std::sort(alive.begin(), alive.end(), [&](std::size_t x, std::size_t y) { return t.pivot[x] < t.pivot[y]; });
  t.select(alive);
  store(out, t);
}

}  // namespace

Integer Annihilator::entry(std::size_t word, std::size_t k) const {
  if (identity) return word == k ? 1 : 0;
  const std::size_t U = pivots.size();
  return wide ? vbig[word * U + k] : Integer(static_cast<long>(v64[word * U + k]));
}

std::vector<Rational> Annihilator::coordinates(const SparseVector& v) const {
  if (identity) return v.to_dense(columns);
  const std::size_t U = pivots.size();
  std::vector<Rational> out(U);
  for (std::size_t k = 0; k < U; ++k) {
    Rational s = 0;
    for (const auto& [c, q] : v.entries) {
      Integer e = entry(c, k);
      if (sgn(e)) s += q * e;
    }
    if (sgn(s)) out[k] = s / entry(pivots[k], k);
  }
  return out;
}

std::vector<std::pair<std::size_t, Rational>> Annihilator::word_coordinates(std::size_t word) const {
  std::vector<std::pair<std::size_t, Rational>> out;
  if (identity) {
    out.emplace_back(word, Rational(1));
    return out;
  }
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] < word) continue;  // supported on rows <= pivot
    Integer e = entry(word, k);
    if (sgn(e) == 0) continue;
    Rational q(e, entry(pivots[k], k));
    q.canonicalize();
    out.emplace_back(k, std::move(q));
  }
  return out;
}

bool Annihilator::annihilates(const SparseVector& v) const {
  if (identity) return v.empty();
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    Rational s = 0;
    for (const auto& [c, q] : v.entries) s += q * entry(c, k);
    if (sgn(s)) return false;
  }
  return true;
}

std::shared_ptr<const Annihilator> IdealEngine::annihilator(const MultiDegree& mu, const EngineLimits& limits) {
  for (int c : mu.counts)
    if (c < 0) throw std::invalid_argument("negative weight entry");
  const std::uint64_t size = multinomial(mu);
  if (size > limits.column_cap)
    throw Infeasible("dim W(mu) = " + std::to_string(size) + " exceeds column cap " +
                     std::to_string(limits.column_cap));
  const std::vector<int> key = strip(mu.counts);
  std::promise<std::shared_ptr<const Annihilator>> prom;
  std::shared_future<std::shared_ptr<const Annihilator>> fut;
  bool owner = false;
  {
    std::lock_guard<std::mutex> lock(mtx_);
    auto it = cache_.find(key);
    if (it != cache_.end()) {
      fut = it->second;
    } else {
      fut = prom.get_future().share();
      cache_.emplace(key, fut);
      owner = true;
    }
  }
  if (!owner) return fut.get();
  try {
    auto res = compute(MultiDegree(key), limits);
    prom.set_value(res);
    return res;
  } catch (...) {
    prom.set_exception(std::current_exception());
    std::lock_guard<std::mutex> lock(mtx_);
    cache_.erase(key);
    throw;
  }
}

std::shared_ptr<const Annihilator> IdealEngine::compute(const MultiDegree& nu, const EngineLimits& limits) {
  auto out = std::make_shared<Annihilator>();
  out->weight = nu;
  out->columns = multinomial(nu);
  const int d = nu.total();
  if (m_ <= 1) return out;  // I_1 is everything
  if (d < m_) {
    out->identity = true;
    return out;
  }
  if (!is_dominant(nu.counts)) {
    std::vector<int> dom = nu.counts;
    std::sort(dom.begin(), dom.end(), std::greater<>());
    auto base = annihilator(MultiDegree(strip(dom)), limits);
    if (base->identity) {
      out->identity = true;
      return out;
    }
    if (out->columns * std::max<std::size_t>(base->pivots.size(), 1) > limits.work_cap)
      throw Infeasible("work cap exceeded while permuting weight");
    try {
      permuted<std::int64_t>(*base, nu, *out);
    } catch (const Overflow&) {
      permuted<Integer>(*base, nu, *out);
    }
    return out;
  }
  std::vector<std::shared_ptr<const Annihilator>> subs(nu.n());
  for (int i = 0; i < nu.n(); ++i) {
    if (nu[i] == 0) continue;
    MultiDegree s = nu;
    --s.counts[i];
    subs[i] = annihilator(s, limits);
  }
  try {
    dominant_compute<std::int64_t>(m_, nu, subs, limits, *out);
  } catch (const Overflow&) {
    dominant_compute<Integer>(m_, nu, subs, limits, *out);
  }
  return out;
}

IdealEngine& ideal_engine(int m) {
  if (m < 1) throw std::invalid_argument("ideal index must be positive");
  static std::mutex mtx;
  static std::map<int, std::unique_ptr<IdealEngine>> engines;
  std::lock_guard<std::mutex> lock(mtx);
  auto& slot = engines[m];
  if (!slot) slot = std::make_unique<IdealEngine>(m);
  return *slot;
}

}  // namespace nilfree
