#pragma once

// Exact rank and kernel computations for matrices over K^{p^-D}. Rows are
// cleared to polynomial entries, then eliminated without division:
// row_i ← P·row_i − a_i·row_pivot, stripping monomial content after each update.
// Row operations keep the kernel, so a kernel vector is found by
// back-substitution over RatFunc and re-verified against the input.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopflab/error.hpp"
#include "hopflab/ratfunc.hpp"

namespace hopflab {

using SparseRow = std::map<std::size_t, RatFunc>;

struct SparseMatrix {
  Field field;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseRow> data;  // one map per row; absent entries are zero

  SparseMatrix(Field f, std::size_t r, std::size_t c) : field(f), rows(r), cols(c), data(r) {}

  void set(std::size_t i, std::size_t j, const RatFunc& v) {
    if (v.is_zero())
      data[i].erase(j);
    else
      data[i].insert_or_assign(j, v);
  }
};

struct RankResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  std::optional<std::vector<RatFunc>> kernel;  // nonzero v with A·v = 0 when rank < cols
};

namespace detail {

using PolyRow = std::map<std::size_t, FracPoly>;

inline std::int64_t weight(const FracPoly& a) { return a.total_degree() * 64 + static_cast<std::int64_t>(a.size()); }

inline void strip_content(PolyRow& row, const Field& field) {
  if (row.empty()) return;
  Exponents lo = row.begin()->second.min_exponents();
  for (const auto& [j, v] : row) {
    Exponents m = v.min_exponents();
    for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], m[i]);
  }
  bool shift = std::any_of(lo.begin(), lo.end(), [](std::int64_t e) { return e != 0; });
  Coef lc = row.begin()->second.leading().coef;
  Coef inv = field.fp().inv(lc);
  for (auto& [j, v] : row) {
    if (shift) v = v.shifted_down(lo);
    if (lc != 1) v = v.scaled(inv);
  }
}

/// Multiplies a row by a common denominator so every entry is a polynomial.
inline PolyRow clear_row(const SparseRow& row, const Field& field) {
  std::vector<FracPoly> dens;
  for (const auto& [j, v] : row)
    if (!v.den().is_one() && std::none_of(dens.begin(), dens.end(), [&](const FracPoly& d) { return d == v.den(); }))
      dens.push_back(v.den());
  FracPoly L = FracPoly::constant(field, 1);
  for (const auto& d : dens) L = L * d;
  PolyRow out;
  for (const auto& [j, v] : row) {
    if (v.den().is_one()) {
      out.emplace(j, v.num() * L);
    } else {
      auto q = L.divide_exact(v.den());
      if (!q) throw Error(ErrorKind::InexactDivision, "row denominator clearing failed");
      out.emplace(j, v.num() * *q);
    }
  }
  strip_content(out, field);
  return out;
}

}  // namespace detail

/// Rank of A and, when A is rank deficient, a kernel vector.
inline RankResult rank_and_kernel(const SparseMatrix& A, bool want_kernel = true) {
  const Field& field = A.field;
  std::vector<detail::PolyRow> rows;
  rows.reserve(A.rows);
  for (const auto& r : A.data)
    if (!r.empty()) rows.push_back(detail::clear_row(r, field));

  RankResult res;
  std::vector<detail::PolyRow> echelon;
  std::vector<bool> used(rows.size(), false);
  for (std::size_t col = 0; col < A.cols; ++col) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i]) continue;
      auto it = rows[i].find(col);
      if (it == rows[i].end()) continue;
      if (!best || detail::weight(it->second) < detail::weight(rows[*best].at(col)) ||
          (detail::weight(it->second) == detail::weight(rows[*best].at(col)) && rows[i].size() < rows[*best].size()))
        best = i;
    }
    if (!best) continue;
    used[*best] = true;
    const detail::PolyRow& piv = rows[*best];
    const FracPoly P = piv.at(col);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i]) continue;
      auto it = rows[i].find(col);
      if (it == rows[i].end()) continue;
      FracPoly a = it->second;
      detail::PolyRow next;
      auto pi = piv.begin();
      auto ri = rows[i].begin();
      while (pi != piv.end() || ri != rows[i].end()) {
        FracPoly v(field);
        std::size_t j;
        if (ri == rows[i].end() || (pi != piv.end() && pi->first < ri->first)) {
          j = pi->first;
          v = -(a * pi->second);
          ++pi;
        } else if (pi == piv.end() || ri->first < pi->first) {
          j = ri->first;
          v = P * ri->second;
          ++ri;
        } else {
          j = ri->first;
          v = P * ri->second - a * pi->second;
          ++pi;
          ++ri;
        }
        if (!v.is_zero()) next.emplace(j, std::move(v));
      }
      detail::strip_content(next, field);
      rows[i] = std::move(next);
    }
    res.pivot_columns.push_back(col);
    echelon.push_back(piv);
  }
  res.rank = res.pivot_columns.size();
  if (!want_kernel || res.rank == A.cols) return res;

  // Free column: first non-pivot column. Back-substitute pivots in reverse.
  std::size_t free_col = 0;
  {
    std::size_t k = 0;
    while (k < res.pivot_columns.size() && res.pivot_columns[k] == free_col) {
      ++k;
      ++free_col;
    }
  }
  std::vector<RatFunc> v(A.cols, RatFunc(field));
  v[free_col] = RatFunc(field, 1);
  for (std::size_t k = echelon.size(); k-- > 0;) {
    const auto& row = echelon[k];
    const std::size_t pc = res.pivot_columns[k];
    RatFunc acc(field);
    for (const auto& [j, e] : row)
      if (j != pc && !v[j].is_zero()) acc += RatFunc(e) * v[j];
    v[pc] = -(acc / RatFunc(row.at(pc)));
  }
  // Independent re-check on the original matrix.
  for (const auto& r : A.data) {
    RatFunc s(field);
    for (const auto& [j, e] : r)
      if (!v[j].is_zero()) s += e * v[j];
    if (!s.is_zero()) throw Error(ErrorKind::InvalidParameters, "kernel back-substitution failed verification");
  }
  res.kernel = std::move(v);
  return res;
}

}  // namespace hopflab
