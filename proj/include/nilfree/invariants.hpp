#pragma once

#include "nilfree/groups.hpp"
#include "nilfree/ideals.hpp"
#include "nilfree/quotient.hpp"
#include "nilfree/symfunc.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilfree {

/// Schur multiplicities of F_n(N_p) in degree d.
SchurMultiplicities quotient_multiplicities(int n, int p, int d, const EngineLimits& limits = {});

/// G-invariants of F_n(N_p) in degree d, as coordinate vectors of q.component(d).
std::vector<SparseVector> lie_invariant_basis(const GroupSpec& g, QuotientAlgebra& q, int d);

struct HilbertSeries {
  GroupSpec group;
  int p = 1;
  SeriesTruncation truncation;
  std::optional<int> skipped_from;  // first degree beyond the limits
};

/// Coefficients sum_lambda m_{d,lambda} * trivial_multiplicity(g, lambda), d <= D.
/// For SO the multiplicity rule is checked against the constant-term oracle
/// on every partition it is applied to; a disagreement throws std::logic_error.
HilbertSeries invariant_hilbert(const GroupSpec& g, int p, int max_degree, const EngineLimits& limits = {});

struct FitReport {
  std::string denominator;              // "1", "1-t", "1-t^2"
  std::vector<std::int64_t> numerator;  // trimmed
  int degree = -1;                      // of the numerator
  int bound = 0;
  bool polynomial = false;  // numerator vanishes on the last two window degrees
  bool deg_bound_ok = false;
};

/// Degree bound on the numerator for the group and p.
int series_degree_bound(const GroupSpec& g, int p);
FitReport fit_rational_form(const HilbertSeries& h);

/// Bound on the generating degree for the group and p.
int beta_bound(const GroupSpec& g, int p);

struct BetaReport {
  int beta = 0;
  int window = 0;
  int bound = 0;
  bool conclusive = false;
  std::vector<std::size_t> new_generators;  // per degree 0..window
};

BetaReport beta_upper(const GroupSpec& g, int p, int max_degree, const EngineLimits& limits = {});

/// Pairs are 1-based positions, each position used once.
NcPolynomial pairing_invariant(const GroupSpec& g, int k, const std::vector<std::pair<int, int>>& pairing);

enum class InvariantClass { InIdeal, PowerOfTheta2, ReducibleByLowerDegree, BelowThreshold, Violation };
std::string class_name(InvariantClass c);

/// Degree above which the invariant statements apply.
int classify_threshold(const GroupSpec& g, int p);

/// Throws std::invalid_argument if f is not homogeneous or not G-invariant.
InvariantClass classify_invariant(const NcPolynomial& f, const GroupSpec& g, int p, const EngineLimits& limits = {});

nlohmann::ordered_json to_json(const HilbertSeries& h, const FitReport& fit);
nlohmann::ordered_json to_json(const BetaReport& b);

}  // namespace nilfree
