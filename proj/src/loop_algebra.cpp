#include "mkdv/loop_algebra.hpp"

#include <algorithm>
#include <string>

namespace mkdv {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int mod(int a, int b) { return ((a % b) + b) % b; }

std::optional<int> top_grade(const GradedElem& z) {
  if (auto g = z.max_grade()) return g;
  if (z.floor()) return *z.floor() - 1;
  return std::nullopt;
}

std::optional<int> max_opt(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

void check_same_dims(const GradedElem& a, const GradedElem& b) {
  if (!(a.dims() == b.dims())) throw DomainError("graded elements of different rank");
}

}  // namespace

AlgebraDims::AlgebraDims(int n) : n_(n) {
  if (n < 2) throw DomainError("rank n must be at least 2, got " + std::to_string(n));
}

DiagVec zero_diag(const AlgebraDims& dims) { return DiagVec(static_cast<size_t>(dims.size()), Fn()); }

DiagVec ones_diag(const AlgebraDims& dims) { return DiagVec(static_cast<size_t>(dims.size()), Fn(1)); }

DiagVec unit_diag(const AlgebraDims& dims, int k) {
  if (k < 1 || k > dims.size()) throw DomainError("diagonal index out of range");
  DiagVec out = zero_diag(dims);
  out[static_cast<size_t>(k - 1)] = Fn(1);
  return out;
}

DiagVec shift(const DiagVec& b, int by) {
  const int n = static_cast<int>(b.size());
  DiagVec out(b.size());
  for (int k = 0; k < n; ++k) out[static_cast<size_t>(k)] = b[static_cast<size_t>(mod(k - by, n))];
  return out;
}

Fn trace(const DiagVec& b) {
  Fn s;
  for (const auto& v : b) s += v;
  return s;
}

bool is_zero(const DiagVec& b) {
  return std::all_of(b.begin(), b.end(), [](const Fn& v) { return v.is_zero(); });
}

DiagVec operator+(const DiagVec& a, const DiagVec& b) {
  DiagVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

DiagVec operator-(const DiagVec& a, const DiagVec& b) {
  DiagVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

DiagVec scaled(const DiagVec& a, const Fn& s) {
  DiagVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

DiagVec hadamard(const DiagVec& a, const DiagVec& b) {
  DiagVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

DiagVec derivative(const DiagVec& a) {
  DiagVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i].derivative();
  return out;
}

int grade_of_basis(const AlgebraDims& dims, int m, int k, int l) {
  const int n = dims.size();
  if (k < 1 || k > n || l < 1 || l > n) throw DomainError("matrix index out of range");
  return n * m + k - l;
}

bool is_center_grade(Affine type, const AlgebraDims& dims, int j) {
  const int n = dims.size();
  if (type == Affine::kUntwisted) return mod(j, n) != 0;
  return mod(j, 2) == 1 && mod(j, 2 * n) != n;
}

// ---------------------------------------------------------------------------

GradedElem::GradedElem(AlgebraDims dims, std::optional<int> floor) : dims_(dims), floor_(floor) {}

DiagVec GradedElem::at(int j) const {
  if (floor_ && j < *floor_) {
    throw DepthError("grade " + std::to_string(j) + " lies below the truncation floor " + std::to_string(*floor_));
  }
  auto it = terms_.find(j);
  return it == terms_.end() ? zero_diag(dims_) : it->second;
}

void GradedElem::set(int j, DiagVec b) {
  if (static_cast<int>(b.size()) != dims_.size()) throw DomainError("diagonal vector of wrong length");
  if (floor_ && j < *floor_) return;
  if (mkdv::is_zero(b)) {
    terms_.erase(j);
  } else {
    terms_[j] = std::move(b);
  }
}

void GradedElem::add(int j, const DiagVec& b) {
  auto it = terms_.find(j);
  if (it == terms_.end()) {
    set(j, b);
  } else {
    set(j, it->second + b);
  }
}

std::optional<int> GradedElem::max_grade() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<int> GradedElem::min_grade() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

GradedElem GradedElem::truncated(int floor) const {
  GradedElem out(dims_, max_opt(floor_, floor));
  for (const auto& [j, b] : terms_) {
    if (j >= floor) out.terms_.emplace(j, b);
  }
  return out;
}

GradedElem GradedElem::slice(int lo, int hi) const {
  GradedElem out(dims_);
  for (const auto& [j, b] : terms_) {
    if (j >= lo && j <= hi) out.terms_.emplace(j, b);
  }
  return out;
}

GradedElem GradedElem::derivative() const {
  GradedElem out(dims_, floor_);
  for (const auto& [j, b] : terms_) out.set(j, mkdv::derivative(b));
  return out;
}

GradedElem GradedElem::scaled(const Fn& s) const {
  GradedElem out(dims_, floor_);
  if (s.is_zero()) return out;
  for (const auto& [j, b] : terms_) out.set(j, mkdv::scaled(b, s));
  return out;
}

GradedElem operator+(const GradedElem& a, const GradedElem& b) {
  check_same_dims(a, b);
  GradedElem out(a.dims_, max_opt(a.floor_, b.floor_));
  for (const auto& [j, v] : a.terms_) out.add(j, v);
  for (const auto& [j, v] : b.terms_) out.add(j, v);
  return out;
}

GradedElem operator-(const GradedElem& a, const GradedElem& b) { return a + (-b); }

bool operator==(const GradedElem& a, const GradedElem& b) {
  return a.dims_ == b.dims_ && a.floor_ == b.floor_ && a.terms_ == b.terms_;
}

GradedElem single_grade(const AlgebraDims& dims, int grade, DiagVec b) {
  GradedElem out(dims);
  out.set(grade, std::move(b));
  return out;
}

GradedElem product(const GradedElem& x, const GradedElem& y, std::optional<int> floor) {
  check_same_dims(x, y);
  std::optional<int> out_floor = floor;
  if (x.floor()) {
    if (auto t = top_grade(y)) out_floor = max_opt(out_floor, *x.floor() + *t);
  }
  if (y.floor()) {
    if (auto t = top_grade(x)) out_floor = max_opt(out_floor, *y.floor() + *t);
  }
  GradedElem out(x.dims(), out_floor);
  for (const auto& [i, a] : x.terms()) {
    for (auto it = y.terms().rbegin(); it != y.terms().rend(); ++it) {
      const int g = i + it->first;
      if (out_floor && g < *out_floor) break;
      out.add(g, hadamard(a, shift(it->second, i)));
    }
  }
  return out;
}

GradedElem commutator(const GradedElem& x, const GradedElem& y, std::optional<int> floor) {
  return product(x, y, floor) - product(y, x, floor);
}

GradedElem lambda_power(const AlgebraDims& dims, Affine type, int r) {
  if (!is_center_grade(type, dims, r)) {
    throw CenterGapError("grade " + std::to_string(r) + " carries no center direction");
  }
  return single_grade(dims, r, ones_diag(dims));
}

LoopOperator miura_operator(const AlgebraDims& dims, const DiagVec& v) {
  GradedElem body(dims);
  body.set(1, ones_diag(dims));
  body.set(0, v);
  return {true, std::move(body)};
}

LoopOperator ad_exp(const GradedElem& u, const LoopOperator& op, int depth) {
  if (depth < 1) throw DomainError("ad_exp depth must be at least 1");
  if (auto top = u.max_grade(); top && *top >= 0) {
    throw GradeError("ad_exp requires an element of strictly negative grades");
  }
  const int floor = -depth;
  GradedElem acc = op.body.truncated(floor);
  GradedElem term = op.body;
  for (int k = 1;; ++k) {
    GradedElem next = commutator(u, term, floor);
    if (k == 1 && op.has_derivation) next = next - u.derivative().truncated(floor);
    if (k > 1) next = next.scaled(Fn(Rat(1, k)));
    if (next.is_zero()) break;
    acc = acc + next;
    term = std::move(next);
  }
  return {op.has_derivation, std::move(acc)};
}

AdLambdaInverse invert_ad_lambda(const DiagVec& x) {
  const int n = static_cast<int>(x.size());
  const Fn c = trace(x) * Fn(Rat(1, n));
  // shift(Y, 1) - Y = X - c: Y_k = Y_{k-1} - Z_k, then remove the mean.
  DiagVec y(x.size());
  y[0] = Fn();
  for (int k = 1; k < n; ++k) y[static_cast<size_t>(k)] = y[static_cast<size_t>(k - 1)] - (x[static_cast<size_t>(k)] - c);
  const Fn mean = trace(y) * Fn(Rat(1, n));
  for (auto& v : y) v -= mean;
  return {std::move(y), c};
}

bool a2_check(const DiagVec& v) {
  const size_t n = v.size();
  if (!trace(v).is_zero()) return false;
  for (size_t j = 0; j < n; ++j) {
    if (!(v[j] + v[n - 1 - j]).is_zero()) return false;
  }
  return true;
}

bool in_twisted_subalgebra(const GradedElem& x) {
  const int n = x.dims().size();
  for (const auto& [j, b] : x.terms()) {
    for (int k = 1; k <= n; ++k) {
      const int l = mod(k - j - 1, n) + 1;
      const int m = floor_div(l - 1 + j, n);
      const int sign = mod(m + k + l, 2) == 0 ? -1 : 1;
      const Fn& partner = b[static_cast<size_t>(n - l)];
      if (!(partner == b[static_cast<size_t>(k - 1)].scaled(Rat(sign)))) return false;
    }
  }
  return true;
}

namespace {
void check_twisted_index(const AlgebraDims& dims, int j) {
  if (j < 0 || j > dims.n()) throw DomainError("twisted generator index out of range");
}
void check_untwisted_index(const AlgebraDims& dims, int i) {
  if (i < 0 || i >= dims.size()) throw DomainError("untwisted generator index out of range");
}
}  // namespace

DiagVec untwisted_e(const AlgebraDims& dims, int i) {
  check_untwisted_index(dims, i);
  return unit_diag(dims, i == 0 ? 1 : i + 1);
}

DiagVec untwisted_f(const AlgebraDims& dims, int i) {
  check_untwisted_index(dims, i);
  return unit_diag(dims, i == 0 ? dims.size() : i);
}

DiagVec untwisted_h(const AlgebraDims& dims, int i) {
  check_untwisted_index(dims, i);
  if (i == 0) return unit_diag(dims, 1) - unit_diag(dims, dims.size());
  return unit_diag(dims, i + 1) - unit_diag(dims, i);
}

DiagVec twisted_e(const AlgebraDims& dims, int j) {
  check_twisted_index(dims, j);
  const int n = dims.n(), big = dims.size();
  if (j == 0) return untwisted_e(dims, 0);
  if (j == n) return untwisted_e(dims, n) + untwisted_e(dims, n + 1);
  return untwisted_e(dims, j) + untwisted_e(dims, big - j);
}

DiagVec twisted_f(const AlgebraDims& dims, int j) {
  check_twisted_index(dims, j);
  const int n = dims.n(), big = dims.size();
  if (j == 0) return untwisted_f(dims, 0);
  if (j == n) return scaled(untwisted_f(dims, n) + untwisted_f(dims, n + 1), Fn(2));
  return untwisted_f(dims, j) + untwisted_f(dims, big - j);
}

DiagVec twisted_h(const AlgebraDims& dims, int j) {
  check_twisted_index(dims, j);
  const int n = dims.n(), big = dims.size();
  if (j == 0) return untwisted_h(dims, 0);
  if (j == n) return scaled(untwisted_h(dims, n) + untwisted_h(dims, n + 1), Fn(2));
  return untwisted_h(dims, j) + untwisted_h(dims, big - j);
}

Fn alpha_pairing(const AlgebraDims& dims, const DiagVec& v, int j) {
  check_twisted_index(dims, j);
  if (j == 0) return v.front() - v.back();
  return v[static_cast<size_t>(j)] - v[static_cast<size_t>(j - 1)];
}

}  // namespace mkdv
