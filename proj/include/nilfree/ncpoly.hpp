#pragma once

#include "nilfree/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nilfree {

using Letter = std::uint8_t;

// Letters are stored 0-based; x1 is letter 0.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> l) : letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }

  Word operator*(const Word& other) const;
  bool operator==(const Word& other) const = default;
};

// Length first, then lexicographic.
bool operator<(const Word& a, const Word& b);

std::string to_string(const Word& w);

struct MultiDegree {
  std::vector<int> counts;

  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> c) : counts(std::move(c)) {}

  int n() const { return static_cast<int>(counts.size()); }
  int total() const;
  int operator[](std::size_t i) const { return counts[i]; }
  bool operator==(const MultiDegree&) const = default;
  auto operator<=>(const MultiDegree&) const = default;
};

MultiDegree operator+(const MultiDegree& a, const MultiDegree& b);

MultiDegree multidegree(const Word& w, int n);

/// All distinct arrangements of the multiset, in ascending lex order.
std::vector<Word> words_of_multidegree(const MultiDegree& mu);

/// All compositions of `total` into `n` nonnegative parts, lex descending.
std::vector<MultiDegree> compositions(int total, int n);

/// Multinomial coefficient |mu|! / prod mu_i!.
std::uint64_t multinomial(const MultiDegree& mu);

// Index <-> word bijection for W(mu). Index order matches words_of_multidegree.
class WeightSpace {
 public:
  explicit WeightSpace(MultiDegree mu);

  const MultiDegree& weight() const { return mu_; }
  std::size_t size() const { return size_; }
  std::size_t index_of(const Letter* letters) const;
  std::size_t index_of(const Word& w) const { return index_of(w.letters.data()); }
  Word word_at(std::size_t index) const;

 private:
  MultiDegree mu_;
  int degree_;
  std::size_t size_;
};

class NcPolynomial {
 public:
  using Terms = std::map<Word, Rational>;

  explicit NcPolynomial(int n = 0) : n_(n) {}
  NcPolynomial(int n, Terms terms);

  static NcPolynomial monomial(int n, const Word& w, const Rational& c = 1);
  static NcPolynomial generator(int n, int index);  // 0-based
  static NcPolynomial one(int n) { return monomial(n, Word{}); }

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Word& w) const;

  void add_term(const Word& w, const Rational& c);

  NcPolynomial operator+(const NcPolynomial& o) const;
  NcPolynomial operator-(const NcPolynomial& o) const;
  NcPolynomial operator-() const;
  NcPolynomial operator*(const Rational& c) const;
  NcPolynomial operator*(const NcPolynomial& o) const { return multiply(*this, o); }
  bool operator==(const NcPolynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  friend NcPolynomial multiply(const NcPolynomial& p, const NcPolynomial& q);

  /// Multihomogeneous pieces keyed by weight.
  std::map<MultiDegree, NcPolynomial> components() const;
  bool is_homogeneous() const;
  int degree() const;  // -1 for zero

  std::string str() const;
  static NcPolynomial parse(std::string_view text, int n);

 private:
  void check_same_n(const NcPolynomial& o) const;

  int n_;
  Terms terms_;
};

NcPolynomial multiply(const NcPolynomial& p, const NcPolynomial& q);
NcPolynomial commutator(const NcPolynomial& p, const NcPolynomial& q);
NcPolynomial left_normed(const std::vector<NcPolynomial>& args);

}  // namespace nilfree
