#include "mkdv/commands.hpp"

#include <random>

#include "mkdv/dressing.hpp"
#include "mkdv/pdo.hpp"

namespace mkdv {

bool admissible_flow(int n, int r) {
  if (r <= 0) return false;
  return is_center_grade(Affine::kTwisted, AlgebraDims(n), r);
}

std::vector<Rat> sample_parameters(unsigned long long seed, size_t count) {
  std::mt19937_64 gen(seed);
  std::vector<Rat> out;
  for (size_t i = 0; i < count; ++i) {
    // Raw engine output keeps the draw identical across standard libraries.
    const long p = static_cast<long>(gen() % 41) - 20;
    const long q = static_cast<long>(gen() % 9) + 1;
    out.emplace_back(p, q);
  }
  return out;
}

Report run_generate(int n, const GenSequence& seq, const std::vector<Rat>& c) {
  Report rep;
  rep.command = "generate";
  rep.n = n;
  rep.sequence = seq;
  rep.c = c;
  const OperFamily fam = family_oper(n, seq, c);
  rep.tuple = fam.generation.tuple();
  rep.epsilons = fam.generation.epsilons;
  rep.oper = fam.oper.v();
  return rep;
}

bool kdv_compatible(const MiuraOper& op, const DiagVec& flow, int r) {
  for (int i = 0; i < op.dims().size(); ++i) {
    std::vector<Fn> lhs = miura_tangent(op, flow, i);
    if (lhs != kdv_vector(miura_map(op, i), r)) return false;
  }
  return true;
}

Report run_verify(int n, const GenSequence& seq, const std::vector<Rat>& c, const std::vector<int>& rs,
                  std::optional<int> depth) {
  Report rep = run_generate(n, seq, c);
  rep.command = "verify";
  rep.r = rs;
  const MiuraOper op(AlgebraDims(n), *rep.oper);
  for (int r : rs) {
    if (!admissible_flow(n, r)) throw CenterGapError("flow index " + std::to_string(r) + " is not admissible");
    const TangencyReport t = verify_tangency(n, seq, c, r, depth);
    FlowRecord f;
    f.r = r;
    f.flow = t.flow;
    f.gamma = t.gamma;
    f.residual_zero = t.residual_zero;
    f.a1_a2_agree = a1_vs_a2_flow(op, r);
    f.kdv_compatible = kdv_compatible(op, t.flow, r);
    if (!f.residual_zero || !f.a1_a2_agree || !f.kdv_compatible) rep.status = "falsified";
    rep.flows.push_back(std::move(f));
  }
  return rep;
}

}  // namespace mkdv
