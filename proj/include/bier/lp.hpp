#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bier/linalg.hpp"

/// Exact rational feasibility for {x >= 0 : A x = b} by a phase-1 tableau
/// simplex with Bland's least-index rule.
namespace bier::lp {

enum class Status { Feasible, Infeasible };

struct Result {
  Status status = Status::Infeasible;
  RationalVector solution;  // x >= 0 with A x = b when feasible
  RationalVector farkas;    // y with yᵀA <= 0 and yᵀb > 0 when infeasible
  std::size_t pivots = 0;
};

inline Result find_nonnegative_solution(const linalg::Matrix& a, const RationalVector& b,
                                        std::size_t max_pivots = 100000) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  const std::size_t width = cols + rows + 1;  // x | artificials | rhs
  const std::size_t rhs = width - 1;

  std::vector<RationalVector> t(rows + 1, RationalVector(width, Rational(0)));
  std::vector<bool> flipped(rows, false);
  for (std::size_t i = 0; i < rows; ++i) {
    flipped[i] = b[i] < 0;
    const Rational sign = flipped[i] ? -1 : 1;
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = sign * a[i][j];
    t[i][cols + i] = 1;
    t[i][rhs] = sign * b[i];
  }
  // Reduced costs of min Σ artificials with the artificial basis priced out.
  auto& cost = t[rows];
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) cost[j] -= t[i][j];
    cost[rhs] -= t[i][rhs];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + i;

  Result result;
  for (;;) {
    std::size_t enter = rhs;
    for (std::size_t j = 0; j < rhs; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == rhs) break;
    require(result.pivots < max_pivots, ErrorCode::BudgetExceeded,
            "simplex pivot limit " + std::to_string(max_pivots) + " reached");

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase 1 is bounded below by 0, so an entering column always has a positive entry.
    require(leave != rows, ErrorCode::Internal, "unbounded phase-1 problem");

    const Rational inv = Rational(1) / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational factor = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) t[i][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
    ++result.pivots;
  }

  const Rational infeasibility = -cost[rhs];
  if (infeasibility == 0) {
    result.status = Status::Feasible;
    result.solution.assign(cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
      if (basis[i] < cols) result.solution[basis[i]] = t[i][rhs];
    return result;
  }
  // Duals of the phase-1 optimum: the reduced cost of artificial i is 1 - y_i.
  result.status = Status::Infeasible;
  result.farkas.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    result.farkas[i] = Rational(1) - cost[cols + i];
    if (flipped[i]) result.farkas[i] = -result.farkas[i];
  }
  return result;
}

/// Independent re-check of a Result against the original data.
inline bool certifies(const linalg::Matrix& a, const RationalVector& b, const Result& r) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (r.status == Status::Feasible) {
    if (r.solution.size() != cols) return false;
    for (const auto& x : r.solution)
      if (x < 0) return false;
    for (std::size_t i = 0; i < rows; ++i)
      if (dot(a[i], r.solution) != b[i]) return false;
    return true;
  }
  if (r.farkas.size() != rows) return false;
  for (std::size_t j = 0; j < cols; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < rows; ++i) s += r.farkas[i] * a[i][j];
    if (s > 0) return false;
  }
  return dot(r.farkas, b) > 0;
}

}  // namespace bier::lp
