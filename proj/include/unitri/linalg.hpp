#pragma once

// Exact sparse row reduction over Q.
//
// Vectors are sparse maps from an ordered key set (words, exponent vectors) to nonzero
// rationals. The pivot of a row is its largest key, so with a graded key order the pivot of
// a polynomial is its leading monomial and the pivot degree equals the polynomial degree.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "unitri/freealg.hpp"
#include "unitri/rational.hpp"

namespace unitri {

template <class Key, class Compare = std::less<Key>>
using SparseVec = std::map<Key, Rational, Compare>;

/// Sparse combination of labelled inputs: label -> coefficient.
using Combination = std::map<std::size_t, Rational>;

namespace detail {

template <class Vec>
void axpy(Vec& y, const Rational& a, const Vec& x) {
  for (const auto& [k, c] : x) {
    auto [it, inserted] = y.try_emplace(k, a * c);
    if (!inserted) {
      it->second += a * c;
      if (it->second == 0) y.erase(it);
    }
  }
}

inline void axpy(Combination& y, const Rational& a, const Combination& x) {
  for (const auto& [k, c] : x) {
    auto [it, inserted] = y.try_emplace(k, a * c);
    if (!inserted) {
      it->second += a * c;
      if (it->second == 0) y.erase(it);
    }
  }
}

}  // namespace detail

/// Reduced row echelon form of a subspace, built incrementally.
///
/// Each stored row has leading coefficient 1 and no other row has a nonzero entry at its
/// pivot, so the stored basis is canonical for the subspace. Every row also remembers
/// which labelled inputs it was built from, which turns the echelon form into a solver:
/// `express` writes a target as a combination of inserted inputs, and dependent inputs
/// are reported as kernel relations.
template <class Key, class Compare = std::less<Key>>
class Echelon {
 public:
  using Vec = SparseVec<Key, Compare>;

  struct Row {
    Vec vec;
    Combination from;
  };

  /// Reduces v in place against the stored rows; `from` receives the same operations.
  void reduce(Vec& v, Combination* from = nullptr) const {
    if (v.empty() || rows_.empty()) return;
    // Walk downward from the largest key: subtracting a row only touches keys below its pivot.
    auto it = v.end();
    while (it != v.begin()) {
      --it;
      auto row = rows_.find(it->first);
      if (row == rows_.end()) continue;
      const Key pivot = it->first;
      const Rational factor = -it->second;
      detail::axpy(v, factor, row->second.vec);
      if (from) detail::axpy(*from, factor, row->second.from);
      it = v.lower_bound(pivot);
    }
  }

  bool contains(Vec v) const {
    reduce(v);
    return v.empty();
  }

  /// Inserts v with the given label. Returns std::nullopt when v is independent of the
  /// rows so far; otherwise returns the relation (label minus the combination of earlier
  /// labels) that sums to zero.
  std::optional<Combination> insert(Vec v, std::optional<std::size_t> label = std::nullopt) {
    Combination from;
    if (label) from.emplace(*label, Rational(1));
    reduce(v, &from);
    if (v.empty()) return from;
    const Key pivot = v.rbegin()->first;
    const Rational inv = 1 / v.rbegin()->second;
    for (auto& [k, c] : v) c *= inv;
    for (auto& [k, c] : from) c *= inv;
    // Clear the new pivot from existing rows to stay fully reduced.
    for (auto& [p, row] : rows_) {
      auto hit = row.vec.find(pivot);
      if (hit == row.vec.end()) continue;
      const Rational factor = -hit->second;
      detail::axpy(row.vec, factor, v);
      detail::axpy(row.from, factor, from);
    }
    rows_.emplace(pivot, Row{std::move(v), std::move(from)});
    return std::nullopt;
  }

  /// Coefficients c with target = sum c[label] * input[label], or nullopt if target is
  /// outside the span.
  std::optional<Combination> express(Vec target) const {
    Combination from;
    reduce(target, &from);
    if (!target.empty()) return std::nullopt;
    for (auto& [k, c] : from) c = -c;
    return from;
  }

  std::size_t dim() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  /// Rows ordered by ascending pivot.
  const std::map<Key, Row, Compare>& rows() const { return rows_; }

 private:
  std::map<Key, Row, Compare> rows_;
};

using WordEchelon = Echelon<Word>;
using CommEchelon = Echelon<CommPoly::Exponents, CommPoly::GradedOrder>;

inline const NcPoly::Terms& as_vec(const NcPoly& p) { return p.terms(); }

NcPoly to_poly(int rank, const NcPoly::Terms& terms);

/// Kernel of the linear map v_j -> images[j]: each returned combination c satisfies
/// sum_j c[j] * images[j] = 0, and the returned combinations form a basis of all such.
std::vector<Combination> kernel_relations(const std::vector<NcPoly>& images);

/// sum_j c[j] * vectors[j].
NcPoly combine(int rank, const Combination& c, const std::vector<NcPoly>& vectors);

/// Canonical (fully reduced, ascending pivot) basis of span(vectors).
std::vector<NcPoly> reduced_basis(int rank, const std::vector<NcPoly>& vectors);

}  // namespace unitri
