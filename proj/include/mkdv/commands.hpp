#pragma once

#include <optional>
#include <vector>

#include "mkdv/report.hpp"

namespace mkdv {

/// Admissible flow index for the twisted algebra: r > 0, r odd, r != N mod 2N.
bool admissible_flow(int n, int r);

/// Seeded sampler of generation parameters p/q, |p| <= 20, 1 <= q <= 9.
std::vector<Rat> sample_parameters(unsigned long long seed, size_t count);

/// Tuple, degrees, per-step epsilon and the associated oper.
Report run_generate(int n, const GenSequence& seq, const std::vector<Rat>& c);

/// For every r: the mKdV flow, the tangency solve, the untwisted/twisted
/// comparison and the Miura/KdV compatibility for all i. Status "falsified"
/// when any of them fails.
Report run_verify(int n, const GenSequence& seq, const std::vector<Rat>& c, const std::vector<int>& rs,
                  std::optional<int> depth = std::nullopt);

/// d m_i(X_r) = KdV_r(m_i(L)) for i = 0..2n.
bool kdv_compatible(const MiuraOper& op, const DiagVec& flow, int r);

}  // namespace mkdv
