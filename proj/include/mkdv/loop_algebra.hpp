#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mkdv/ratfn.hpp"

namespace mkdv {

/// Which affine algebra a computation lives in. Both are realized inside
/// sl_{2n+1}[lambda, 1/lambda]; the twisted one is the fixed subalgebra of an
/// involution.
enum class Affine { kUntwisted, kTwisted };  // A^(1)_{2n}, A^(2)_{2n}

class AlgebraDims {
 public:
  explicit AlgebraDims(int n);
  int n() const { return n_; }
  /// Matrix size N = 2n + 1.
  int size() const { return 2 * n_ + 1; }
  friend bool operator==(const AlgebraDims&, const AlgebraDims&) = default;

 private:
  int n_;
};

/// Diagonal coordinate vector (b_1, ..., b_N); index 0 holds b_1.
using DiagVec = std::vector<Fn>;

DiagVec zero_diag(const AlgebraDims& dims);
DiagVec ones_diag(const AlgebraDims& dims);
/// e_{k,k} as a diagonal vector, k is 1-based.
DiagVec unit_diag(const AlgebraDims& dims, int k);
/// Moves a diagonal across Lambda^by: Lambda^by diag(b) = diag(shift(b, by)) Lambda^by,
/// with shift(b, by)_k = b_{k - by} (indices cyclic).
DiagVec shift(const DiagVec& b, int by);
Fn trace(const DiagVec& b);
bool is_zero(const DiagVec& b);
DiagVec operator+(const DiagVec& a, const DiagVec& b);
DiagVec operator-(const DiagVec& a, const DiagVec& b);
DiagVec scaled(const DiagVec& a, const Fn& s);
DiagVec hadamard(const DiagVec& a, const DiagVec& b);
DiagVec derivative(const DiagVec& a);

/// N*m + k - l: the principal grade of lambda^m (x) e_{k,l}.
int grade_of_basis(const AlgebraDims& dims, int m, int k, int l);

/// True iff grade j carries a (one-dimensional) center direction of the
/// principal Heisenberg subalgebra.
bool is_center_grade(Affine type, const AlgebraDims& dims, int j);

/// Loop-algebra element sum_j b_j Lambda^j stored grade by grade. Grades below
/// floor() are unknown (truncated); an element without a floor is exact.
class GradedElem {
 public:
  explicit GradedElem(AlgebraDims dims, std::optional<int> floor = std::nullopt);

  const AlgebraDims& dims() const { return dims_; }
  const std::optional<int>& floor() const { return floor_; }
  bool exact() const { return !floor_.has_value(); }
  const std::map<int, DiagVec>& terms() const { return terms_; }

  /// Coefficient at grade j (zero vector when absent). Throws DepthError when
  /// j lies below the truncation floor.
  DiagVec at(int j) const;
  void set(int j, DiagVec b);
  void add(int j, const DiagVec& b);

  bool is_zero() const { return terms_.empty(); }
  std::optional<int> max_grade() const;
  std::optional<int> min_grade() const;

  /// Drops everything below `floor` and records the truncation.
  GradedElem truncated(int floor) const;
  /// Keeps only grades in [lo, hi]; the result is exact.
  GradedElem slice(int lo, int hi) const;
  GradedElem derivative() const;
  GradedElem scaled(const Fn& s) const;

  GradedElem operator-() const { return scaled(Fn(-1)); }
  friend GradedElem operator+(const GradedElem& a, const GradedElem& b);
  friend GradedElem operator-(const GradedElem& a, const GradedElem& b);
  friend bool operator==(const GradedElem& a, const GradedElem& b);

 private:
  AlgebraDims dims_;
  std::optional<int> floor_;
  std::map<int, DiagVec> terms_;
};

GradedElem single_grade(const AlgebraDims& dims, int grade, DiagVec b);

/// Associative (matrix) product, truncated to grades >= `floor` if given.
GradedElem product(const GradedElem& x, const GradedElem& y, std::optional<int> floor = std::nullopt);
/// [X, Y], truncated to grades >= `floor` if given.
GradedElem commutator(const GradedElem& x, const GradedElem& y, std::optional<int> floor = std::nullopt);

/// Lambda_r: the r-th power of Lambda, a single grade with an all-ones diagonal.
/// Throws CenterGapError for grades with no center direction.
GradedElem lambda_power(const AlgebraDims& dims, Affine type, int r);

/// c * d/dx + body.
struct LoopOperator {
  bool has_derivation = false;
  GradedElem body;
};

/// d/dx + Lambda + diag(v).
LoopOperator miura_operator(const AlgebraDims& dims, const DiagVec& v);

/// e^{ad U}(L) truncated to grades >= -depth. U must have only negative grades.
/// [U, d/dx] = -U'.
LoopOperator ad_exp(const GradedElem& u, const LoopOperator& op, int depth);

/// Splits X Lambda^j = [Lambda, Y Lambda^{j-1}] + c Lambda^j with sum(Y) = 0
/// and c = sum(X)/N.
struct AdLambdaInverse {
  DiagVec preimage;
  Fn center;
};
AdLambdaInverse invert_ad_lambda(const DiagVec& x);

/// Twisted Miura-potential constraints: trace zero and v_j + v_{N+1-j} = 0.
bool a2_check(const DiagVec& v);

/// Membership of every stored grade in the twisted subalgebra.
bool in_twisted_subalgebra(const GradedElem& x);

/// Chevalley generators of the twisted algebra in diagonal coordinates, for
/// j = 0..n: e_j at grade 1, f_j at grade -1, h_j at grade 0 (f_n and h_n
/// carry the factor 2 of the lambda-realization).
DiagVec twisted_e(const AlgebraDims& dims, int j);
DiagVec twisted_f(const AlgebraDims& dims, int j);
DiagVec twisted_h(const AlgebraDims& dims, int j);

/// Untwisted generators E_i, F_i, H_i, i = 0..2n.
DiagVec untwisted_e(const AlgebraDims& dims, int i);
DiagVec untwisted_f(const AlgebraDims& dims, int i);
DiagVec untwisted_h(const AlgebraDims& dims, int i);

/// <alpha_j, V> for a diagonal V, j = 0..n (twisted simple roots).
Fn alpha_pairing(const AlgebraDims& dims, const DiagVec& v, int j);

}  // namespace mkdv
