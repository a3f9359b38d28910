#pragma once

#include <optional>
#include <vector>

#include "mkdv/linear.hpp"
#include "mkdv/ratfn.hpp"

namespace mkdv {


Poly<Rat> lcm(const Poly<Rat>& a, const Poly<Rat>& b);

/// Linear conditions over Q on unknown scalars t_1..t_m expressing
/// sum_i t_i columns[i][k] = target[k] for every component k, obtained by
/// multiplying component k by the lcm of its denominators and matching the
/// coefficients of x. A missing target means zero.
struct FnSystem {
  Matrix<Rat> a;
  std::vector<Rat> b;
  int unknowns = 0;
};
FnSystem fn_system(const std::vector<std::vector<Fn>>& columns, const std::vector<Fn>& target);

/// Exact solution t of the system above, or nullopt.
std::optional<std::vector<Rat>> solve_fn_combination(const std::vector<std::vector<Fn>>& columns,
                                                     const std::vector<Fn>& target);

}  // namespace mkdv
