#pragma once

#include "nilfree/ncpoly.hpp"
#include "nilfree/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nilfree {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, no zeros

  Partition() = default;
  explicit Partition(std::vector<int> p);  // drops trailing zeros, validates order

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  int operator[](std::size_t i) const { return i < parts.size() ? parts[i] : 0; }
  bool operator==(const Partition&) const = default;
  std::vector<int> padded(int n) const;
  std::string str() const;
};

// Lexicographically descending ("decreasing reverse-lex"): (3) < (2,1) in
// this comparator so that std::map iterates (3), (2,1), (1,1,1).
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const { return a.parts > b.parts; }
};

bool dominates(const Partition& lambda, const Partition& mu);

/// Partitions of d with at most max_parts parts, lexicographically descending.
std::vector<Partition> partitions(int d, int max_parts);

Partition sorted_partition(const MultiDegree& mu);

std::int64_t kostka(const Partition& lambda, const MultiDegree& mu);

/// Dimension of V_lambda for GL(n); zero when lambda has more than n parts.
Integer dim_irrep(int n, const Partition& lambda);

/// Partitions obtained by adding a horizontal strip of k boxes, at most max_rows rows.
std::vector<Partition> add_horizontal_strip(const Partition& mu, int k, int max_rows);

struct WeightTable {
  int degree = 0;
  int n = 0;
  std::map<MultiDegree, std::int64_t> dims;  // dominant weights only

  std::int64_t at(const MultiDegree& mu) const;  // any weight; sorts first
  void set(const MultiDegree& mu, std::int64_t v);
  std::int64_t total_dim() const;  // sum over all weights, not just dominant
};

struct SchurMultiplicities {
  int degree = 0;
  std::map<Partition, std::int64_t, PartitionOrder> mult;  // nonzero entries

  std::int64_t at(const Partition& lambda) const;
  bool operator==(const SchurMultiplicities&) const = default;
};

struct SeriesTruncation {
  int max_degree = 0;
  std::vector<std::int64_t> coefficients;  // size max_degree + 1
};

WeightTable weight_table_from(const SchurMultiplicities& m, int n);
SchurMultiplicities schur_decompose(const WeightTable& w);
std::vector<WeightTable> divide_by_sv(const std::vector<WeightTable>& f);
std::vector<SchurMultiplicities> pieri_tensor(const std::vector<SchurMultiplicities>& b, int max_degree, int n);

Integer module_dimension(const SchurMultiplicities& m, int n);

nlohmann::ordered_json to_json(const SchurMultiplicities& m);

}  // namespace nilfree
