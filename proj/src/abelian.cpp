#include "bm/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "bm/errors.hpp"

namespace bm {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in Smith reduction");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in Smith reduction");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in Smith reduction");
  return out;
}

using Matrix = std::vector<std::vector<std::int64_t>>;

void sub_row(Matrix& m, std::size_t i, std::size_t j, std::int64_t q) {
  for (std::size_t k = 0; k < m[i].size(); ++k)
    m[i][k] = checked_sub(m[i][k], checked_mul(q, m[j][k]));
}

void sub_col(Matrix& m, std::size_t i, std::size_t j, std::int64_t q) {
  for (auto& row : m) row[i] = checked_sub(row[i], checked_mul(q, row[j]));
}

void add_row(Matrix& m, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < m[i].size(); ++k)
    m[i][k] = checked_add(m[i][k], m[j][k]);
}

// True when the submatrix below/right of the pivot column/row is clear.
bool pivot_isolated(const Matrix& m, std::size_t t) {
  for (std::size_t i = t + 1; i < m.size(); ++i)
    if (m[i][t] != 0) return false;
  for (std::size_t j = t + 1; j < m[t].size(); ++j)
    if (m[t][j] != 0) return false;
  return true;
}

// Position of the least nonzero |entry| in the trailing submatrix, if any.
bool find_min_entry(const Matrix& m, std::size_t t, std::size_t& bi,
                    std::size_t& bj) {
  std::int64_t best = 0;
  bool found = false;
  for (std::size_t i = t; i < m.size(); ++i) {
    for (std::size_t j = t; j < m[i].size(); ++j) {
      const std::int64_t v = std::llabs(m[i][j]);
      if (v != 0 && (!found || v < best)) {
        best = v;
        bi = i;
        bj = j;
        found = true;
      }
    }
  }
  return found;
}

}  // namespace

std::vector<std::int64_t> smith_invariant_factors(Matrix m) {
  if (m.empty() || m[0].empty()) return {};
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  for (const auto& row : m)
    if (row.size() != cols)
      throw std::invalid_argument("ragged matrix");

  std::vector<std::int64_t> factors;
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t bi = t, bj = t;
    if (!find_min_entry(m, t, bi, bj)) break;  // trailing block is zero
    std::swap(m[t], m[bi]);
    for (auto& row : m) std::swap(row[t], row[bj]);

    for (;;) {
      // Clear the pivot row and column by Euclidean steps; the pivot value
      // strictly shrinks whenever a remainder survives, so this terminates.
      bool reduced = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const std::int64_t q = m[i][t] / m[t][t];
        sub_row(m, i, t, q);
        if (m[i][t] != 0) {  // remainder: smaller pivot available
          std::swap(m[t], m[i]);
          reduced = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const std::int64_t q = m[t][j] / m[t][t];
        sub_col(m, j, t, q);
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          reduced = false;
        }
      }
      if (!reduced) continue;
      if (!pivot_isolated(m, t)) continue;
      // Divisibility pass: the pivot must divide every later entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (m[i][j] % m[t][t] != 0) {
            add_row(m, t, i);
            divides = false;
          }
      if (divides) break;
    }
    factors.push_back(std::llabs(m[t][t]));
  }
  return factors;
}

Matrix relator_exponent_matrix(const BMPresentation& p) {
  const int alpha = p.alpha();
  const int beta = p.beta();
  Matrix m;
  m.reserve(p.relation().squares().size());
  for (const auto& w : p.relator_words()) {
    std::vector<std::int64_t> row(std::size_t(alpha) + beta, 0);
    for (Letter x : w) {
      const std::size_t col =
          x.is_horizontal() ? x.index() - 1 : std::size_t(alpha) + x.index() - 1;
      row[col] += x.inverted() ? -1 : 1;
    }
    m.push_back(std::move(row));
  }
  return m;
}

AbelianInvariants abelianization(const BMPresentation& p) {
  const auto factors = smith_invariant_factors(relator_exponent_matrix(p));
  AbelianInvariants inv;
  inv.free_rank = p.alpha() + p.beta() - int(factors.size());
  for (std::int64_t d : factors)
    if (d >= 2) inv.torsion.push_back(d);
  return inv;
}

std::string AbelianInvariants::to_string() const {
  if (free_rank == 0 && torsion.empty()) return "0";
  std::string out;
  if (free_rank > 0) out = "Z^" + std::to_string(free_rank);
  for (std::int64_t d : torsion) {
    if (!out.empty()) out += " ⊕ ";
    out += "Z/" + std::to_string(d);
  }
  return out;
}

std::vector<AbelianClass> classify_by_abelianization(
    std::span<const BMRelation> relations) {
  std::map<AbelianInvariants, std::uint64_t> classes;
  for (const auto& r : relations) {
    if (!relations.empty() && (r.alpha() != relations.front().alpha() ||
                               r.beta() != relations.front().beta()))
      throw AmbientMismatch("relations must share one ambient");
    ++classes[abelianization(BMPresentation::from_relation(r))];
  }
  std::vector<AbelianClass> out;
  out.reserve(classes.size());
  for (auto& [inv, count] : classes) out.push_back({inv, count});
  return out;
}

}  // namespace bm
