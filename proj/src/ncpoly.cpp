#include "nilfree/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace nilfree {

Word Word::operator*(const Word& other) const {
  Word out;
  out.letters.reserve(letters.size() + other.letters.size());
  out.letters.insert(out.letters.end(), letters.begin(), letters.end());
  out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
  return out;
}

bool operator<(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters < b.letters;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += 'x';
    s += std::to_string(static_cast<int>(w[i]) + 1);
  }
  return s;
}

int MultiDegree::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
  if (a.n() != b.n()) throw std::invalid_argument("multidegree size mismatch");
  MultiDegree out = a;
  for (int i = 0; i < a.n(); ++i) out.counts[i] += b.counts[i];
  return out;
}

MultiDegree multidegree(const Word& w, int n) {
  MultiDegree mu(std::vector<int>(n, 0));
  for (Letter l : w.letters) {
    if (l >= n) throw std::out_of_range("letter index exceeds n");
    ++mu.counts[l];
  }
  return mu;
}

std::vector<Word> words_of_multidegree(const MultiDegree& mu) {
  std::vector<Letter> base;
  for (int i = 0; i < mu.n(); ++i) {
    if (mu[i] < 0) throw std::invalid_argument("negative multidegree entry");
    base.insert(base.end(), mu[i], static_cast<Letter>(i));
  }
  std::vector<Word> out;
  out.reserve(multinomial(mu));
  do {
    out.emplace_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::vector<MultiDegree> compositions(int total, int n) {
  std::vector<MultiDegree> out;
  if (n <= 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> c(n, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      c[pos] = left;
      out.emplace_back(c);
      return;
    }
    for (int v = left; v >= 0; --v) {
      c[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

std::uint64_t multinomial(const MultiDegree& mu) {
  unsigned __int128 acc = 1;
  int seen = 0;
  for (int c : mu.counts) {
    for (int k = 1; k <= c; ++k) {
      ++seen;
      acc = acc * seen / k;
    }
  }
  if (acc > static_cast<unsigned __int128>(UINT64_MAX)) throw std::overflow_error("multinomial overflow");
  return static_cast<std::uint64_t>(acc);
}

WeightSpace::WeightSpace(MultiDegree mu) : mu_(std::move(mu)), degree_(mu_.total()), size_(multinomial(mu_)) {}

std::size_t WeightSpace::index_of(const Letter* letters) const {
  int cnt[256];
  const int n = mu_.n();
  for (int i = 0; i < n; ++i) cnt[i] = mu_[i];
  unsigned __int128 m = size_;
  std::size_t rank = 0;
  for (int len = degree_; len > 0; --len) {
    const int l = letters[degree_ - len];
    for (int c = 0; c < l; ++c)
      if (cnt[c]) rank += static_cast<std::size_t>(m * cnt[c] / len);
    m = m * cnt[l] / len;
    --cnt[l];
  }
  return rank;
}

Word WeightSpace::word_at(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("weight-space index");
  std::vector<int> cnt = mu_.counts;
  unsigned __int128 m = size_;
  Word w;
  w.letters.reserve(degree_);
  for (int len = degree_; len > 0; --len) {
    for (int c = 0; c < mu_.n(); ++c) {
      if (!cnt[c]) continue;
      const std::size_t block = static_cast<std::size_t>(m * cnt[c] / len);
      if (index < block) {
        w.letters.push_back(static_cast<Letter>(c));
        m = block;
        --cnt[c];
        break;
      }
      index -= block;
    }
  }
  return w;
}

NcPolynomial::NcPolynomial(int n, Terms terms) : n_(n) {
  for (auto& [w, c] : terms) add_term(w, c);
}

NcPolynomial NcPolynomial::monomial(int n, const Word& w, const Rational& c) {
  NcPolynomial p(n);
  p.add_term(w, c);
  return p;
}

NcPolynomial NcPolynomial::generator(int n, int index) {
  if (index < 0 || index >= n) throw std::out_of_range("generator index");
  return monomial(n, Word({static_cast<Letter>(index)}));
}

Rational NcPolynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NcPolynomial::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  for (Letter l : w.letters)
    if (l >= n_) throw std::out_of_range("letter index exceeds n");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void NcPolynomial::check_same_n(const NcPolynomial& o) const {
  if (n_ != o.n_) throw std::invalid_argument("polynomials over different generator counts");
}

NcPolynomial NcPolynomial::operator+(const NcPolynomial& o) const {
  check_same_n(o);
  NcPolynomial out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, c);
  return out;
}

NcPolynomial NcPolynomial::operator-(const NcPolynomial& o) const {
  check_same_n(o);
  NcPolynomial out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, -c);
  return out;
}

NcPolynomial NcPolynomial::operator-() const {
  NcPolynomial out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

NcPolynomial NcPolynomial::operator*(const Rational& c) const {
  if (c == 0) return NcPolynomial(n_);
  NcPolynomial out = *this;
  for (auto& [w, v] : out.terms_) v *= c;
  return out;
}

NcPolynomial multiply(const NcPolynomial& p, const NcPolynomial& q) {
  p.check_same_n(q);
  NcPolynomial out(p.n_);
  for (const auto& [a, ca] : p.terms_)
    for (const auto& [b, cb] : q.terms_) out.add_term(a * b, ca * cb);
  return out;
}

NcPolynomial commutator(const NcPolynomial& p, const NcPolynomial& q) { return p * q - q * p; }

NcPolynomial left_normed(const std::vector<NcPolynomial>& args) {
  if (args.size() < 2) throw std::invalid_argument("left-normed commutator needs at least two entries");
  NcPolynomial acc = commutator(args[0], args[1]);
  for (std::size_t i = 2; i < args.size(); ++i) acc = commutator(acc, args[i]);
  return acc;
}

std::map<MultiDegree, NcPolynomial> NcPolynomial::components() const {
  std::map<MultiDegree, NcPolynomial> out;
  for (const auto& [w, c] : terms_) {
    auto [it, _] = out.try_emplace(multidegree(w, n_), n_);
    it->second.terms_.emplace(w, c);
  }
  return out;
}

bool NcPolynomial::is_homogeneous() const { return components().size() <= 1; }

int NcPolynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.size());
}

std::string NcPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (w.empty()) {
      s += to_string(mag);
    } else {
      if (mag != 1) s += to_string(mag) + "*";
      s += to_string(w);
    }
  }
  return s;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  int n;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos) + ": " + what);
  }
  // Returns +1/-1 when a sign is consumed, 0 otherwise. Accepts U+2212.
  int sign() {
    skip_ws();
    if (pos < text.size() && text[pos] == '+') { ++pos; return 1; }
    if (pos < text.size() && text[pos] == '-') { ++pos; return -1; }
    if (text.substr(pos, 3) == "\xE2\x88\x92") { pos += 3; return -1; }
    return 0;
  }
  std::string digits() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  }
  void term(NcPolynomial& out, int sgn) {
    skip_ws();
    Rational coef(sgn);
    Word w;
    bool any = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::string num = digits();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::string den = digits();
        if (den.empty()) fail("missing denominator");
        num += "/" + den;
      }
      coef *= parse_rational(num);
      any = true;
    }
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        if (!any) fail("dangling '*'");
        ++pos;
        skip_ws();
        if (pos >= text.size() || text[pos] != 'x') fail("expected generator after '*'");
      }
      if (pos < text.size() && text[pos] == 'x') {
        ++pos;
        std::string idx = digits();
        if (idx.empty()) fail("generator without index");
        int k = std::stoi(idx);
        if (k < 1 || k > n) fail("generator index out of range");
        w.letters.push_back(static_cast<Letter>(k - 1));
        any = true;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    out.add_term(w, coef);
  }
};

}  // namespace

NcPolynomial NcPolynomial::parse(std::string_view text, int n) {
  Parser ps{text, 0, n};
  NcPolynomial out(n);
  int s = ps.sign();
  ps.term(out, s == 0 ? 1 : s);
  while (!ps.at_end()) {
    s = ps.sign();
    if (s == 0) ps.fail("expected '+' or '-'");
    ps.term(out, s);
  }
  return out;
}

}  // namespace nilfree
