#pragma once

#include "nilfree/exactla.hpp"
#include "nilfree/ncpoly.hpp"
#include "nilfree/symfunc.hpp"

#include <cstdint>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilfree {

struct EngineLimits {
  std::size_t column_cap = 20000;     // max dim W(mu)
  std::size_t work_cap = 20'000'000;  // max table entries during one weight
};

class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integer functionals on W(mu) cutting out (I_m)_mu. Functional k has its last
// nonzero at word pivots[k], and every other functional vanishes there, so the
// pivot words form a basis of W(mu) / (I_m)_mu.
class Annihilator {
 public:
  MultiDegree weight;
  std::size_t columns = 0;
  bool identity = false;  // degree below m: nothing to cut out
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return identity ? columns : pivots.size(); }
  Integer entry(std::size_t word, std::size_t k) const;

  /// Coordinates of a vector on W(mu) in the coset basis (the pivot words).
  std::vector<Rational> coordinates(const SparseVector& v) const;
  /// Same for one basis word; sparse (coset index, coefficient).
  std::vector<std::pair<std::size_t, Rational>> word_coordinates(std::size_t word) const;
  bool annihilates(const SparseVector& v) const;

  // storage, word-major columns x rank
  bool wide = false;
  std::vector<std::int64_t> v64;
  std::vector<Integer> vbig;
};

class IdealEngine {
 public:
  explicit IdealEngine(int m) : m_(m) {}
  int m() const { return m_; }

  /// Throws Infeasible when the weight exceeds the limits.
  std::shared_ptr<const Annihilator> annihilator(const MultiDegree& mu, const EngineLimits& limits = {});

 private:
  std::shared_ptr<const Annihilator> compute(const MultiDegree& key, const EngineLimits& limits);

  int m_;
  std::mutex mtx_;
  std::map<std::vector<int>, std::shared_future<std::shared_ptr<const Annihilator>>> cache_;
};

/// Process-wide engine for I_m, m >= 2.
IdealEngine& ideal_engine(int m);

// Literal spanning sets, for cross-checks at small size.
std::vector<NcPolynomial> lie_spanning(int p, const MultiDegree& mu);
RationalMatrix ideal_spanning(int p, const MultiDegree& mu);
SparseVector word_vector(const NcPolynomial& f, const WeightSpace& ws);

struct QuotientComponent {
  int p = 1;
  MultiDegree mu;
  std::size_t dim = 0;
  std::vector<Word> coset_basis_words;
};

/// Component of F_n(N_p) = K<X>/I_{p+1} at weight mu.
QuotientComponent quotient_dim(int p, const MultiDegree& mu, const EngineLimits& limits = {});

/// dim (I_p)_mu.
std::size_t ideal_dim(int p, const MultiDegree& mu, const EngineLimits& limits = {});

/// f in I_p, tested component by component.
bool ideal_membership(const NcPolynomial& f, int p, const EngineLimits& limits = {});

/// Weight table of F_n(N_p) in degree d (dominant weights).
WeightTable quotient_weight_table(int n, int p, int d, const EngineLimits& limits = {});

}  // namespace nilfree
