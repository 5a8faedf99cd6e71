#include "nilfree/quotient.hpp"

#include <stdexcept>

namespace nilfree {

QuotientAlgebra::QuotientAlgebra(int n, int p, EngineLimits limits) : n_(n), p_(p), limits_(limits) {
  if (n < 1 || p < 1) throw std::invalid_argument("quotient algebra needs n >= 1, p >= 1");
}

const QuotientAlgebra::Component& QuotientAlgebra::component(int d) {
  auto it = components_.find(d);
  if (it != components_.end()) return *it->second;
  auto c = std::make_unique<Component>();
  c->degree = d;
  for (const MultiDegree& mu : compositions(d, n_)) {
    Piece piece;
    piece.weight = mu;
    piece.offset = c->dim;
    piece.ann = ideal_engine(p_ + 1).annihilator(mu, limits_);
    piece.space = std::make_unique<WeightSpace>(mu);
    c->dim += piece.ann->rank();
    c->piece_of.emplace(mu, c->pieces.size());
    c->pieces.push_back(std::move(piece));
  }
  return *components_.emplace(d, std::move(c)).first->second;
}

SparseVector QuotientAlgebra::normal_form(const Word& w) {
  const Component& c = component(static_cast<int>(w.size()));
  const Piece& piece = c.pieces[c.piece_of.at(multidegree(w, n_))];
  auto coords = piece.ann->word_coordinates(piece.space->index_of(w));
  for (auto& e : coords) e.first += piece.offset;
  SparseVector v;
  v.entries = std::move(coords);
  return v;
}

SparseVector QuotientAlgebra::coordinates(const NcPolynomial& f, int d) {
  SparseVector acc;
  for (const auto& [w, q] : f.terms()) {
    if (static_cast<int>(w.size()) != d) throw std::invalid_argument("polynomial is not homogeneous of degree d");
    acc = axpy(acc, q, normal_form(w));
  }
  return acc;
}

Word QuotientAlgebra::basis_word(int d, std::size_t index) {
  const Component& c = component(d);
  for (const Piece& piece : c.pieces) {
    if (index < piece.offset + piece.ann->rank()) {
      const std::size_t k = index - piece.offset;
      return piece.space->word_at(piece.ann->identity ? k : piece.ann->pivots[k]);
    }
  }
  throw std::out_of_range("coset index");
}

NcPolynomial QuotientAlgebra::lift(const SparseVector& v, int d) {
  NcPolynomial f(n_);
  for (const auto& [i, q] : v.entries) f.add_term(basis_word(d, i), q);
  return f;
}

SparseVector QuotientAlgebra::multiply(const SparseVector& a, int da, const SparseVector& b, int db) {
  SparseVector acc;
  std::vector<Word> wa, wb;
  for (const auto& e : a.entries) wa.push_back(basis_word(da, e.first));
  for (const auto& e : b.entries) wb.push_back(basis_word(db, e.first));
  std::map<std::size_t, Rational> sum;
  for (std::size_t i = 0; i < wa.size(); ++i)
    for (std::size_t j = 0; j < wb.size(); ++j) {
      const Rational c = a.entries[i].second * b.entries[j].second;
      for (const auto& [k, q] : normal_form(wa[i] * wb[j]).entries) sum[k] += c * q;
    }
  for (auto& [k, q] : sum)
    if (q != 0) acc.entries.emplace_back(k, q);
  return acc;
}

}  // namespace nilfree
