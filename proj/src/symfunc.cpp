#include "nilfree/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace nilfree {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i && parts[i] > parts[i - 1]))
      throw std::invalid_argument("not a partition: " + str());
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> Partition::padded(int n) const {
  if (length() > n) throw std::invalid_argument("partition longer than n");
  std::vector<int> v = parts;
  v.resize(n, 0);
  return v;
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return false;
  int a = 0, b = 0;
  const int len = std::max(lambda.length(), mu.length());
  for (int i = 0; i < len; ++i) {
    a += lambda[i];
    b += mu[i];
    if (a < b) return false;
  }
  return true;
}

std::vector<Partition> partitions(int d, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int v = std::min(left, cap); v >= 1; --v) {
      cur.push_back(v);
      self(self, left - v, v);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

Partition sorted_partition(const MultiDegree& mu) {
  std::vector<int> v = mu.counts;
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(v);
}

std::vector<Partition> add_horizontal_strip(const Partition& mu, int k, int max_rows) {
  std::vector<Partition> out;
  const int rows = std::min(mu.length() + 1, max_rows);
  if (rows < mu.length()) return out;
  std::vector<int> lam(rows, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == rows) {
      if (left == 0) out.emplace_back(lam);
      return;
    }
    const int lo = mu[i];
    const int hi = i == 0 ? lo + left : std::min(mu[i - 1], lo + left);
    for (int v = hi; v >= lo; --v) {
      lam[i] = v;
      self(self, i + 1, left - (v - lo));
    }
  };
  rec(rec, 0, k);
  return out;
}

namespace {

bool contained(const Partition& a, const Partition& b) {
  if (a.length() > b.length()) return false;
  for (int i = 0; i < a.length(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::int64_t kostka_uncached(const Partition& lambda, const std::vector<int>& content) {
  std::map<Partition, std::int64_t, PartitionOrder> states{{Partition{}, 1}};
  for (int c : content) {
    std::map<Partition, std::int64_t, PartitionOrder> next;
    for (const auto& [shape, count] : states)
      for (auto& s : add_horizontal_strip(shape, c, lambda.length()))
        if (contained(s, lambda)) next[s] += count;
    states = std::move(next);
  }
  auto it = states.find(lambda);
  return it == states.end() ? 0 : it->second;
}

}  // namespace

std::int64_t kostka(const Partition& lambda, const MultiDegree& mu) {
  if (lambda.size() != mu.total()) throw std::invalid_argument("kostka: size mismatch");
  Partition content = sorted_partition(mu);
  if (content.length() > 0 && !dominates(lambda, content)) return 0;
  static std::mutex mtx;
  static std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> memo;
  auto key = std::make_pair(lambda.parts, content.parts);
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::int64_t v = kostka_uncached(lambda, content.parts);
  std::lock_guard<std::mutex> lock(mtx);
  memo.emplace(std::move(key), v);
  return v;
}

Integer dim_irrep(int n, const Partition& lambda) {
  if (lambda.length() > n) return 0;
  Integer num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= lambda[i] - lambda[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

std::int64_t WeightTable::at(const MultiDegree& mu) const {
  for (int c : mu.counts)
    if (c < 0) return 0;
  MultiDegree key = mu;
  std::sort(key.counts.begin(), key.counts.end(), std::greater<>());
  auto it = dims.find(key);
  return it == dims.end() ? 0 : it->second;
}

void WeightTable::set(const MultiDegree& mu, std::int64_t v) {
  MultiDegree key = mu;
  std::sort(key.counts.begin(), key.counts.end(), std::greater<>());
  dims[key] = v;
}

std::int64_t WeightTable::total_dim() const {
  std::int64_t s = 0;
  for (const auto& [mu, d] : dims) {
    // number of distinct rearrangements of mu
    std::map<int, int> mult;
    for (int c : mu.counts) ++mult[c];
    std::vector<int> m;
    for (auto& kv : mult) m.push_back(kv.second);
    s += static_cast<std::int64_t>(multinomial(MultiDegree(m))) * d;
  }
  return s;
}

std::int64_t SchurMultiplicities::at(const Partition& lambda) const {
  auto it = mult.find(lambda);
  return it == mult.end() ? 0 : it->second;
}

WeightTable weight_table_from(const SchurMultiplicities& m, int n) {
  WeightTable w{m.degree, n, {}};
  for (const Partition& mu : partitions(m.degree, n)) {
    MultiDegree md(mu.padded(n));
    std::int64_t s = 0;
    for (const auto& [lam, k] : m.mult) s += k * kostka(lam, md);
    if (s) w.dims[md] = s;
  }
  return w;
}

SchurMultiplicities schur_decompose(const WeightTable& w) {
  SchurMultiplicities out;
  out.degree = w.degree;
  for (const Partition& lam : partitions(w.degree, w.n)) {
    MultiDegree md(lam.padded(w.n));
    std::int64_t v = w.at(md);
    for (const auto& [nu, k] : out.mult) v -= k * kostka(nu, md);
    if (v < 0)
      throw std::invalid_argument("negative multiplicity at " + lam.str() + ": not a polynomial GL-character");
    if (v) out.mult.emplace(lam, v);
  }
  return out;
}

std::vector<WeightTable> divide_by_sv(const std::vector<WeightTable>& f) {
  std::vector<WeightTable> out;
  for (std::size_t d = 0; d < f.size(); ++d) {
    const int n = f[d].n;
    WeightTable b{static_cast<int>(d), n, {}};
    for (const Partition& lam : partitions(static_cast<int>(d), n)) {
      MultiDegree mu(lam.padded(n));
      std::int64_t s = 0;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        MultiDegree nu = mu;
        int bits = 0;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) {
            --nu.counts[i];
            ++bits;
          }
        if (static_cast<int>(d) < bits) continue;
        const std::int64_t v = f[d - bits].at(nu);
        s += (bits % 2) ? -v : v;
      }
      if (s < 0) throw std::invalid_argument("negative dimension after division by S(V) at " + lam.str());
      if (s) b.dims[mu] = s;
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<SchurMultiplicities> pieri_tensor(const std::vector<SchurMultiplicities>& b, int max_degree, int n) {
  std::vector<SchurMultiplicities> out(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d) out[d].degree = d;
  for (const auto& comp : b) {
    for (const auto& [mu, k] : comp.mult) {
      for (int extra = 0; comp.degree + extra <= max_degree; ++extra)
        for (const Partition& lam : add_horizontal_strip(mu, extra, n)) out[comp.degree + extra].mult[lam] += k;
    }
  }
  return out;
}

Integer module_dimension(const SchurMultiplicities& m, int n) {
  Integer s = 0;
  for (const auto& [lam, k] : m.mult) s += dim_irrep(n, lam) * k;
  return s;
}

nlohmann::ordered_json to_json(const SchurMultiplicities& m) {
  nlohmann::ordered_json j;
  j["degree"] = m.degree;
  j["multiplicities"] = nlohmann::ordered_json::array();
  for (const auto& [lam, k] : m.mult) j["multiplicities"].push_back({{"lambda", lam.parts}, {"m", k}});
  return j;
}

}  // namespace nilfree
