#include "liecone/construct.hpp"

#include <algorithm>
#include <numeric>

#include "liecone/errors.hpp"
#include "liecone/nullcone.hpp"

namespace liecone {

// ------------------------------------------------------------ FrameAssignment

namespace {

Subspace coordinate_span(int n, const std::vector<int>& idx) { return Subspace::coordinates(n, idx); }

// First pair (1-based) of each block.
std::vector<int> block_starts(const std::vector<int>& blocks) {
  std::vector<int> starts;
  int next = 1;
  for (int b : blocks) {
    starts.push_back(next);
    next += b;
  }
  return starts;
}

std::vector<int> block_of_pair(const std::vector<int>& blocks, int p) {
  int total = std::accumulate(blocks.begin(), blocks.end(), 0);
  if (total != p || std::any_of(blocks.begin(), blocks.end(), [](int b) { return b < 1; })) {
    throw DimensionMismatch("refinement blocks must partition the null pairs");
  }
  std::vector<int> out(p + 1, 0);
  int q = 1;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int j = 0; j < blocks[i]; ++j) out[q++] = static_cast<int>(i) + 1;
  }
  return out;
}

}  // namespace

Subspace FrameAssignment::n_minus() const {
  std::vector<int> idx;
  for (int i = 1; i <= p; ++i) idx.push_back(2 * i - 1);
  return coordinate_span(2 * p + k, idx);
}

Subspace FrameAssignment::n_plus() const {
  std::vector<int> idx;
  for (int i = 1; i <= p; ++i) idx.push_back(2 * i);
  return coordinate_span(2 * p + k, idx);
}

Subspace FrameAssignment::h() const {
  std::vector<int> idx;
  for (int s = 2 * p + 1; s <= 2 * p + k; ++s) idx.push_back(s);
  return coordinate_span(2 * p + k, idx);
}

Subspace FrameAssignment::w_minus(int i) const {
  if (i < 1 || i > static_cast<int>(blocks.size())) throw IndexOutOfRange("no such block");
  int start = block_starts(blocks)[i - 1];
  std::vector<int> idx;
  for (int q = start; q < start + blocks[i - 1]; ++q) idx.push_back(2 * q - 1);
  return coordinate_span(2 * p + k, idx);
}

Subspace FrameAssignment::w_plus(int i) const {
  if (i < 1 || i > static_cast<int>(blocks.size())) throw IndexOutOfRange("no such block");
  int start = block_starts(blocks)[i - 1];
  std::vector<int> idx;
  for (int q = start; q < start + blocks[i - 1]; ++q) idx.push_back(2 * q);
  return coordinate_span(2 * p + k, idx);
}

WeightVector weight_assignment(int n) {
  if (n < 1) throw Error("weight_assignment needs at least one block");
  WeightVector x(n);
  x[n - 1] = 1;
  for (int i = n - 1; i >= 1; --i) x[i - 1] = 2 * x[i] + 1;
  return x;
}

WeightVector expand_block_weights(const WeightVector& x, const std::vector<int>& blocks) {
  if (x.size() != blocks.size()) throw DimensionMismatch("one weight per block expected");
  WeightVector out;
  for (std::size_t i = 0; i < blocks.size(); ++i) out.insert(out.end(), blocks[i], x[i]);
  return out;
}

// ------------------------------------------------------------ refinement_check

namespace {

enum class Side { Minus, H, Plus };

struct Place {
  Side side;
  int block;  // 0 for H
};

bool target_allowed(Place a, Place b, Place t) {
  if (a.side > b.side || (a.side == b.side && a.block > b.block)) std::swap(a, b);
  auto plus_up_to = [&](int j) { return t.side == Side::Plus && t.block <= j; };
  if (a.side == Side::Minus && b.side == Side::Plus) {
    int i = a.block, j = b.block;
    if (j <= i) return plus_up_to(j);
    return t.side != Side::Minus || t.block > i;
  }
  if (a.side == Side::Minus && b.side == Side::Minus) {
    return t.side != Side::Minus || t.block >= b.block;
  }
  if (a.side == Side::Minus && b.side == Side::H) return t.side != Side::Minus;
  if (a.side == Side::H && b.side == Side::H) return t.side == Side::Plus;
  if (a.side == Side::H && b.side == Side::Plus) return plus_up_to(b.block - 1);
  // both in N+: a.block <= b.block
  return plus_up_to(a.block - 1);
}

std::string side_name(Place x) {
  switch (x.side) {
    case Side::Minus:
      return "W-" + std::to_string(x.block);
    case Side::Plus:
      return "W+" + std::to_string(x.block);
    case Side::H:
      return "H";
  }
  return "?";
}

}  // namespace

RefinementResult refinement_check(const StructureConstants& framed, int p, int k,
                                  const std::vector<int>& blocks) {
  int n = 2 * p + k;
  if (framed.dim() != n) throw DimensionMismatch("frame and algebra dimensions differ");
  auto block = block_of_pair(blocks, p);
  auto place = [&](int e) -> Place {
    if (e > 2 * p) return {Side::H, 0};
    int q = (e + 1) / 2;
    return {e % 2 == 1 ? Side::Minus : Side::Plus, block[q]};
  };
  RefinementResult r;
  for (const auto& [key, v] : framed.entries()) {
    const auto& [t, a, b] = key;
    if (target_allowed(place(a), place(b), place(t))) continue;
    r.ok = false;
    r.violations.push_back("[e" + std::to_string(a) + ", e" + std::to_string(b) + "] (" +
                           side_name(place(a)) + ", " + side_name(place(b)) + ") has an e" +
                           std::to_string(t) + " (" + side_name(place(t)) + ") component " +
                           to_string(v));
  }
  return r;
}

RefinementResult refinement_check(const StructureConstants& mu, const FrameAssignment& f) {
  return refinement_check(change_basis(mu, f.basis), f.p, f.k, f.blocks);
}

// ------------------------------------------------------------ frames

namespace {

// Places f_1..f_n at e_1, e_3, ..., e_{2p-1}, spacelike, ..., e_4, e_2.
FrameAssignment assemble(const StructureConstants& mu, const std::vector<Vec>& f) {
  int n = mu.dim();
  FrameAssignment out;
  out.p = n / 2;
  out.k = n % 2;
  int p = out.p;
  std::vector<int> order;
  for (int i = 1; i <= p; ++i) order.push_back(2 * i - 1);
  for (int s = 2 * p + 1; s <= n; ++s) order.push_back(s);
  for (int i = p; i >= 1; --i) order.push_back(2 * i);
  std::vector<Vec> cols(n);
  for (int t = 0; t < n; ++t) cols[order[t] - 1] = f[t];
  out.basis = Matrix::from_columns(cols);
  out.blocks.assign(p, 1);
  out.mu = change_basis(mu, out.basis);
  return out;
}

void require_frame_passes(const FrameAssignment& f) {
  auto r = refinement_check(f.mu, f.p, f.k, f.blocks);
  if (!r.ok) throw Error("internal: constructed frame fails refinement_check: " + r.violations[0]);
}

}  // namespace

FrameAssignment nilpotent_frame(const StructureConstants& mu) {
  int n = mu.dim();
  auto lcs = lower_central_series(mu);
  if (lcs.back().dim() != 0) throw NotNilpotent("lower central series does not reach 0");
  std::vector<Vec> f;
  for (std::size_t i = 1; i < lcs.size(); ++i) {
    const Subspace& top = lcs[i - 1];
    Subspace current = lcs[i];
    std::vector<Vec> candidates;
    for (int e = 1; e <= n; ++e) candidates.push_back(unit_vector(n, e));
    candidates.insert(candidates.end(), top.basis().begin(), top.basis().end());
    std::vector<Vec> reps;
    for (const auto& c : candidates) {
      if (current.dim() == top.dim()) break;
      if (!top.contains(c) || current.contains(c)) continue;
      reps.push_back(c);
      current = current.sum(Subspace::span(n, {c}));
    }
    f.insert(f.end(), reps.begin(), reps.end());
  }
  FrameAssignment out = assemble(mu, f);
  require_frame_passes(out);
  return out;
}

namespace {

// Coordinates on the quotient g / I, I given by its reduced echelon basis.
class Quotient {
 public:
  Quotient(int n, const Subspace& ideal) : n_(n), rows_(ideal.basis()) {
    std::vector<bool> pivot(n, false);
    for (const auto& r : rows_) {
      int c = static_cast<int>(std::find_if(r.begin(), r.end(), [](const Scalar& v) { return v != 0; }) -
                               r.begin());
      pivots_.push_back(c);
      pivot[c] = true;
    }
    for (int c = 0; c < n; ++c) {
      if (!pivot[c]) free_.push_back(c);
    }
  }

  int dim() const { return static_cast<int>(free_.size()); }

  Vec project(Vec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Scalar s = v[pivots_[i]];
      if (s == 0) continue;
      for (int c = 0; c < n_; ++c) v[c] -= s * rows_[i][c];
    }
    Vec out;
    for (int c : free_) out.push_back(v[c]);
    return out;
  }

  Vec lift(const Vec& q) const {
    Vec v(n_, Scalar(0));
    for (std::size_t i = 0; i < free_.size(); ++i) v[free_[i]] = q[i];
    return v;
  }

  Matrix action(const Matrix& ad) const {
    Matrix m(dim(), dim());
    for (int j = 0; j < dim(); ++j) {
      Vec img = project(ad.apply(lift(unit_vector(dim(), j + 1))));
      for (int i = 0; i < dim(); ++i) m(i, j) = img[i];
    }
    return m;
  }

 private:
  int n_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
  std::vector<int> free_;
};

// Matrix of an operator that leaves the column span of b invariant, in that basis.
Matrix restrict_to(const Matrix& op, const Matrix& b) {
  Matrix bt = b.transpose();
  return inverse(bt * b) * bt * op * b;
}

Matrix columns_of(const std::vector<Vec>& vs, int rows) {
  if (vs.empty()) return Matrix(rows, 0);
  return Matrix::from_columns(vs);
}

// A common eigenvector of the adjoint action inside the invariant subspace s modulo the ideal.
Vec common_eigenvector(const StructureConstants& mu, const std::vector<Matrix>& ads,
                       const Subspace& derived, const Subspace& ideal, const Subspace& s) {
  int n = mu.dim();
  Quotient q(n, ideal);
  std::vector<Vec> w;
  for (const auto& v : s.basis()) w.push_back(q.project(v));
  w = row_reduce(w);
  Matrix basis = columns_of(w, q.dim());

  std::vector<Matrix> acts;
  for (const auto& ad : ads) acts.push_back(q.action(ad));

  // Vectors of s/I killed by [g, g].
  std::vector<Vec> stacked;
  for (const auto& y : derived.basis()) {
    Matrix my(q.dim(), q.dim());
    for (int b = 0; b < n; ++b) {
      if (y[b] != 0) my = my + y[b] * acts[b];
    }
    Matrix mb = my * basis;
    for (int r = 0; r < mb.rows(); ++r) stacked.push_back(mb.row(r));
  }
  if (stacked.empty()) stacked.push_back(Vec(basis.cols(), Scalar(0)));
  std::vector<Vec> z = kernel(Matrix::from_rows(stacked));
  if (z.empty()) throw NotSolvable("no vector annihilated by the derived algebra");
  Matrix cur = basis * columns_of(z, basis.cols());

  for (int b = 0; b < n; ++b) {
    Matrix r = restrict_to(acts[b], cur);
    UPoly cp = char_poly(r);
    Vec roots = rational_roots(cp);
    if (roots.empty()) {
      UPoly squarefree, rem;
      UPoly::divmod(cp, UPoly::gcd(cp, cp.derivative()), squarefree, rem);
      if (count_real_roots(cp) < squarefree.degree()) {
        throw NotCompletelySolvable("ad(e" + std::to_string(b + 1) +
                                    ") has non-real eigenvalues: " + cp.to_string());
      }
      throw IrrationalEigenvalue("ad(e" + std::to_string(b + 1) + ") has irrational eigenvalues: " +
                                 cp.to_string());
    }
    std::sort(roots.begin(), roots.end());
    Matrix shifted = r - roots.front() * Matrix::identity(r.rows());
    cur = cur * columns_of(kernel(shifted), r.rows());
  }
  return q.lift(cur.column(0));
}

// Vectors v_1..v_n with span{v_t..v_n} an ideal for every t, passing through each stage
// (increasing ideals, the last one the whole algebra).
std::vector<Vec> ideal_flag(const StructureConstants& mu, const std::vector<Subspace>& stages) {
  int n = mu.dim();
  std::vector<Matrix> ads;
  for (int b = 1; b <= n; ++b) ads.push_back(ad_operator(mu, unit_vector(n, b)));
  Subspace g = Subspace::full(n);
  Subspace derived = bracket_span(mu, g, g);
  std::vector<Vec> bottom_up;
  Subspace ideal = Subspace::zero(n);
  for (const auto& stage : stages) {
    while (ideal.dim() < stage.dim()) {
      Vec v = common_eigenvector(mu, ads, derived, ideal, stage);
      bottom_up.push_back(v);
      ideal = ideal.sum(Subspace::span(n, {v}));
    }
  }
  return {bottom_up.rbegin(), bottom_up.rend()};
}

}  // namespace

FrameAssignment csolvable_frame(const StructureConstants& mu) {
  int n = mu.dim();
  if (!is_solvable(mu)) throw NotSolvable("derived series does not reach 0");
  Subspace g = Subspace::full(n);
  std::vector<Vec> flag = ideal_flag(mu, {g});

  // Diagonal weights lambda_t(e_b): coefficient of v_t in [e_b, v_t] modulo span{v_{t+1}, ...}.
  Matrix v = Matrix::from_columns(flag);
  Matrix vinv = inverse(v);
  std::vector<Vec> weights;
  for (int t = 0; t < n; ++t) {
    Vec w(n);
    for (int b = 0; b < n; ++b) w[b] = vinv.apply(bracket(mu, unit_vector(n, b + 1), flag[t]))[t];
    weights.push_back(w);
  }
  Subspace nil = Subspace::span(n, kernel(Matrix::from_rows(weights)));
  if (nil.dim() < n - n / 2) {
    throw Error("common kernel of the ad-weights has dimension " + std::to_string(nil.dim()) +
                ", below half the algebra");
  }
  FrameAssignment out = assemble(mu, ideal_flag(mu, {nil, g}));
  require_frame_passes(out);
  return out;
}

// ------------------------------------------------------------ distributions

DistributionChain distribution_analysis(const StructureConstants& mu, const NullFrameMetric& g) {
  int p = g.p(), k = g.k(), n = g.dim();
  if (mu.dim() != n) throw DimensionMismatch("metric and algebra dimensions differ");
  if (!case_feasibility(support(mu, p, k), p)) {
    throw PreconditionFailed("no null-cone certificate in this frame");
  }
  DistributionChain d;
  d.p = p;
  d.k = k;
  std::vector<int> idx;
  d.members.push_back(Subspace::zero(n));
  for (int m = 1; m <= p; ++m) {
    idx.push_back(2 * m);
    d.members.push_back(Subspace::coordinates(n, idx));
  }
  for (int s = 2 * p + 1; s <= n; ++s) {
    idx.push_back(s);
    d.members.push_back(Subspace::coordinates(n, idx));
  }
  const Subspace& nplus = d.members[p];
  std::vector<int> hidx;
  for (int s = 2 * p + 1; s <= n; ++s) hidx.push_back(s);
  Subspace h = Subspace::coordinates(n, hidx);
  d.n_plus_closed = subspace_bracket_check(mu, nplus, nplus, nplus);
  d.n_plus_h_in_n_plus = subspace_bracket_check(mu, nplus, h, nplus);
  d.h_h_in_n_plus = subspace_bracket_check(mu, h, h, nplus);
  d.triangular = true;
  for (const auto& [key, v] : mu.entries()) {
    const auto& [a, b, c] = key;
    if (a > 2 * p || a % 2 == 1 || b > 2 * p || b % 2 == 1 || c > 2 * p || c % 2 == 1) continue;
    if (a / 2 >= std::min(b, c) / 2) d.triangular = false;
  }
  d.integrable = std::all_of(d.members.begin(), d.members.end(), [&](const Subspace& s) {
    return subspace_bracket_check(mu, s, s, s);
  });
  d.perp_nilpotent = is_nilpotent_subalgebra(mu, d.members.back());
  return d;
}

}  // namespace liecone
