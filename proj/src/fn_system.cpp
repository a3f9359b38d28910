#include "mkdv/fn_system.hpp"

namespace mkdv {

Poly<Rat> lcm(const Poly<Rat>& a, const Poly<Rat>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<Rat>();
  return exact_div(a * b, gcd(a, b)).monic();
}

FnSystem fn_system(const std::vector<std::vector<Fn>>& columns, const std::vector<Fn>& target) {
  FnSystem out;
  out.unknowns = static_cast<int>(columns.size());
  const size_t comps = target.size();
  for (const auto& col : columns) {
    if (col.size() != comps) throw DomainError("column length differs from target length");
  }
  for (size_t k = 0; k < comps; ++k) {
    Poly<Rat> den = target[k].den();
    for (const auto& col : columns) den = lcm(den, col[k].den());
    std::vector<Poly<Rat>> nums;
    int top = -1;
    for (const auto& col : columns) {
      nums.push_back(col[k].num() * exact_div(den, col[k].den()));
      top = std::max(top, nums.back().degree());
    }
    const Poly<Rat> rhs = target[k].num() * exact_div(den, target[k].den());
    top = std::max(top, rhs.degree());
    for (int d = 0; d <= top; ++d) {
      std::vector<Rat> row;
      for (const auto& p : nums) row.push_back(p.coeff(d));
      out.a.push_back(std::move(row));
      out.b.push_back(rhs.coeff(d));
    }
  }
  return out;
}

std::optional<std::vector<Rat>> solve_fn_combination(const std::vector<std::vector<Fn>>& columns,
                                                     const std::vector<Fn>& target) {
  FnSystem sys = fn_system(columns, target);
  if (sys.a.empty()) return std::vector<Rat>(static_cast<size_t>(sys.unknowns), Rat(0));
  return solve(std::move(sys.a), sys.b, sys.unknowns);
}

}  // namespace mkdv
