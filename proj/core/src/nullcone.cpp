#include "liecone/nullcone.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <set>

#include "liecone/errors.hpp"

namespace liecone {

namespace {

// a . x <= c
struct Ineq {
  Vec a;
  Scalar c;
};

// Scales so the first nonzero coefficient has absolute value 1 and keeps the tightest
// right-hand side per coefficient vector. Returns false if a 0 <= c row with c < 0 appears.
bool normalize(std::vector<Ineq>& rows) {
  std::map<Vec, Scalar> best;
  for (auto& r : rows) {
    auto it = std::find_if(r.a.begin(), r.a.end(), [](const Scalar& v) { return v != 0; });
    if (it == r.a.end()) {
      if (r.c < 0) return false;
      continue;
    }
    Scalar s = abs(*it);
    for (auto& v : r.a) v /= s;
    r.c /= s;
    auto [pos, inserted] = best.emplace(r.a, r.c);
    if (!inserted && r.c < pos->second) pos->second = r.c;
  }
  rows.clear();
  for (auto& [a, c] : best) rows.push_back({a, c});
  return true;
}

bool eliminate(const std::vector<Ineq>& in, int var, std::vector<Ineq>& out) {
  std::vector<const Ineq*> pos, neg;
  out.clear();
  for (const auto& r : in) {
    if (r.a[var] > 0) {
      pos.push_back(&r);
    } else if (r.a[var] < 0) {
      neg.push_back(&r);
    } else {
      out.push_back(r);
    }
  }
  for (const Ineq* pr : pos) {
    for (const Ineq* nr : neg) {
      Scalar sp = 1 / pr->a[var];
      Scalar sn = -1 / nr->a[var];
      Ineq r{Vec(pr->a.size()), sp * pr->c + sn * nr->c};
      for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = sp * pr->a[i] + sn * nr->a[i];
      r.a[var] = 0;
      out.push_back(std::move(r));
    }
  }
  return normalize(out);
}

std::vector<Margin> margins_for(const BoostSupport& s, const WeightVector& x) {
  std::vector<Margin> out;
  for (const auto& b : s) out.push_back({b, dot(x, b)});
  return out;
}

}  // namespace

std::optional<Certificate> case_feasibility(const BoostSupport& s, int p) {
  if (p < 0) throw DimensionMismatch("p must be non-negative");
  if (s.empty()) return Certificate{{}, WeightVector(p, Scalar(0)), {}};
  if (p == 0) return std::nullopt;  // every constraint reads 0 <= -1
  std::vector<Ineq> rows;
  for (const auto& b : s) {
    if (static_cast<int>(b.size()) != p) throw DimensionMismatch("support weight length differs from p");
    Ineq r{Vec(p), Scalar(-1)};
    for (int i = 0; i < p; ++i) r.a[i] = b[i];
    rows.push_back(std::move(r));
  }
  for (int i = 0; i + 1 < p; ++i) {  // x_{i+1} - x_i <= 0
    Ineq r{Vec(p), Scalar(0)};
    r.a[i] = -1;
    r.a[i + 1] = 1;
    rows.push_back(std::move(r));
  }
  {
    Ineq r{Vec(p), Scalar(0)};
    r.a[p - 1] = -1;
    rows.push_back(std::move(r));
  }
  // levels[j] constrains x_0 .. x_{j-1} only.
  std::vector<std::vector<Ineq>> levels(p + 1);
  levels[p] = rows;
  if (!normalize(levels[p])) return std::nullopt;
  for (int j = p - 1; j >= 0; --j) {
    if (!eliminate(levels[j + 1], j, levels[j])) return std::nullopt;
  }
  WeightVector x(p);
  for (int j = 0; j < p; ++j) {
    std::optional<Scalar> lower;
    for (const auto& r : levels[j + 1]) {
      if (r.a[j] >= 0) continue;
      Scalar rhs = r.c;
      for (int i = 0; i < j; ++i) rhs -= r.a[i] * x[i];
      Scalar bound = rhs / r.a[j];
      if (!lower || bound > *lower) lower = bound;
    }
    if (!lower) throw Error("internal: unbounded weight in feasibility projection");
    x[j] = *lower;
  }
  Scalar tight = dot(x, *s.begin());
  for (const auto& b : s) tight = std::max(tight, dot(x, b));
  if (tight > -1) throw Error("internal: feasibility witness violates a constraint");
  if (tight != -1) {
    Scalar f = -1 / tight;
    for (auto& v : x) v *= f;
  }
  return Certificate{{}, x, margins_for(s, x)};
}

std::optional<WeightVector> classify_case(const BoostSupport& s, int p) {
  auto cert = case_feasibility(s, p);
  if (!cert) return std::nullopt;
  return cert->x;
}

StructureConstants relabel(const StructureConstants& mu, const std::vector<int>& perm) {
  int n = mu.dim();
  if (static_cast<int>(perm.size()) != n) throw DimensionMismatch("permutation length differs from dimension");
  std::vector<int> inv(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int old = perm[i - 1];
    if (old < 1 || old > n || inv[old] != 0) throw Error("not a permutation");
    inv[old] = i;
  }
  StructureConstants out(n);
  for (const auto& [key, v] : mu.entries()) out.set(inv[key[0]], inv[key[1]], inv[key[2]], v);
  return out;
}

std::vector<std::vector<int>> null_pair_frames(int p, int k) {
  std::vector<std::vector<int>> frames;
  std::vector<int> pairs(p);
  for (unsigned mask = 0; mask < (1u << p); ++mask) {
    std::iota(pairs.begin(), pairs.end(), 1);
    do {
      std::vector<int> perm(2 * p + k);
      for (int j = 1; j <= p; ++j) {
        bool swapped = (mask >> (p - j)) & 1u;
        int q = pairs[j - 1];
        perm[2 * j - 2] = swapped ? 2 * q : 2 * q - 1;
        perm[2 * j - 1] = swapped ? 2 * q - 1 : 2 * q;
      }
      for (int s = 2 * p + 1; s <= 2 * p + k; ++s) perm[s - 1] = s;
      frames.push_back(std::move(perm));
    } while (std::next_permutation(pairs.begin(), pairs.end()));
  }
  return frames;
}

std::optional<Certificate> membership_with_permutations(const StructureConstants& mu,
                                                        const NullFrameMetric& g) {
  if (mu.dim() != g.dim()) throw DimensionMismatch("metric and algebra dimensions differ");
  int p = g.p(), k = g.k();
  std::set<BoostSupport> seen;
  for (const auto& frame : null_pair_frames(p, k)) {
    BoostSupport s = support(relabel(mu, frame), p, k);
    if (!seen.insert(s).second) continue;
    auto cert = case_feasibility(s, p);
    if (cert) {
      cert->frame = frame;
      return cert;
    }
  }
  return std::nullopt;
}

bool verify_certificate(const StructureConstants& mu, const NullFrameMetric& g,
                        const Certificate& cert) {
  int n = mu.dim(), p = g.p(), k = g.k();
  if (g.dim() != n || static_cast<int>(cert.x.size()) != p) return false;
  for (int i = 0; i < p; ++i) {
    if (cert.x[i] < 0 || (i + 1 < p && cert.x[i] < cert.x[i + 1])) return false;
  }
  std::vector<int> position(n + 1);
  if (cert.frame.empty()) {
    std::iota(position.begin(), position.end(), 0);
  } else {
    if (static_cast<int>(cert.frame.size()) != n) return false;
    std::vector<bool> used(n + 1, false);
    for (int i = 1; i <= n; ++i) {
      int old = cert.frame[i - 1];
      if (old < 1 || old > n || used[old]) return false;
      used[old] = true;
      position[old] = i;
    }
  }
  for (const auto& [key, v] : mu.entries()) {
    Scalar m = 0;
    const int signs[3] = {1, -1, -1};
    for (int s = 0; s < 3; ++s) {
      auto w = basis_weight(position[key[s]], p, k);
      for (int i = 0; i < p; ++i) m += signs[s] * cert.x[i] * w[i];
    }
    if (m > -1) return false;
  }
  return true;
}

NecessaryReport necessary_conditions(const StructureConstants& mu, const NullFrameMetric& g,
                                     const CurvaturePack& pack) {
  NecessaryReport r;
  r.invariants = scalar_invariants(pack);
  r.invariants_zero = std::all_of(r.invariants.begin(), r.invariants.end(),
                                  [](const auto& kv) { return kv.second == 0; });
  r.killing_index = nilpotency_index(pack.killing_op);
  r.killing_nilpotent = r.killing_index.has_value();
  r.index_bound = g.k() == 0 ? 2 * g.p() : 2 * g.p() + 1;
  r.index_within_bound = r.killing_nilpotent && *r.killing_index <= r.index_bound;
  r.not_semisimple = determinant(killing_matrix(mu)) == 0;
  return r;
}

Verdict membership_verdict(const std::optional<Certificate>& cert, const NecessaryReport& report) {
  if (cert) return Verdict::Member;
  if (!report.passes()) return Verdict::NotMember;
  return Verdict::Undetermined;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Member:
      return "in null cone (certified)";
    case Verdict::NotMember:
      return "not in null cone (certified)";
    case Verdict::Undetermined:
      return "undetermined";
  }
  return "undetermined";
}

namespace {

bool weight_order(const BoostWeight& x, const BoostWeight& y) {
  if (x.back() != y.back()) return x.back() > y.back();
  return x < y;
}

bool odd_sum(const BoostWeight& b) {
  return std::accumulate(b.begin(), b.end(), 0) % 2 != 0;
}

}  // namespace

std::vector<AllowedComponent> allowed_components(const WeightVector& x, int p, int k) {
  if (static_cast<int>(x.size()) != p) throw DimensionMismatch("weight vector length differs from p");
  int n = 2 * p + k;
  std::vector<AllowedComponent> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        auto w = structure_weight(a, b, c, p, k);
        if (dot(x, w) > -1) continue;
        if (k == 0 && !odd_sum(w)) continue;
        out.push_back({a, b, c, w});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& l, const auto& r) { return weight_order(l.weight, r.weight); });
  return out;
}

std::vector<ComponentGroup> symbolic_allowed_table(const std::vector<WeightVector>& cases, int p) {
  const int k = 2;
  const int first_space = 2 * p + 1;
  // Sort key per index: numeric indices first, then i, then j.
  using Label = std::array<int, 3>;
  auto name = [&](int v) -> std::string {
    if (v == 1000) return "i";
    if (v == 1001) return "j";
    return std::to_string(v);
  };
  std::map<BoostWeight, std::set<Label>, bool (*)(const BoostWeight&, const BoostWeight&)> groups(
      weight_order);
  for (const auto& x : cases) {
    for (const auto& comp : allowed_components(x, p, k)) {
      int idx[3] = {comp.a, comp.b, comp.c};
      int sym[3];
      int next = 1000;
      int upper_space = 0;
      for (int s = 0; s < 3; ++s) {
        if (idx[s] < first_space) {
          sym[s] = idx[s];
        } else if (s == 0) {
          sym[s] = next++;
          upper_space = idx[s];
        } else if (upper_space != 0) {
          sym[s] = 1001;  // a lower spacelike index next to a spacelike upper one reads as j
        } else {
          sym[s] = next++;
        }
      }
      Label l{sym[0], std::min(sym[1], sym[2]), std::max(sym[1], sym[2])};
      groups[comp.weight].insert(l);
    }
  }
  std::vector<ComponentGroup> out;
  for (const auto& [w, labels] : groups) {
    ComponentGroup g{w, {}};
    for (const auto& l : labels) {
      g.labels.push_back("C^" + name(l[0]) + "_{" + name(l[1]) + name(l[2]) + "}");
    }
    out.push_back(std::move(g));
  }
  return out;
}

int universality_order(const WeightVector& x, int p, int k) {
  std::set<BoostWeight> allowed;
  for (const auto& c : allowed_components(x, p, k)) allowed.insert(c.weight);
  if (allowed.empty()) return 1;
  auto in_diamond = [&](const BoostWeight& b) {
    int l1 = 0, sum = 0;
    for (int v : b) {
      l1 += std::abs(v);
      sum += v;
    }
    return l1 <= 2 && (k != 0 || sum % 2 == 0);
  };
  // Every allowed weight lowers x.s by at least 1, and the diamond has x.s >= -2 max(x).
  Scalar floor = 0;
  for (const auto& v : x) floor = std::max(floor, v);
  floor *= -2;
  std::set<BoostWeight> sums = allowed;
  for (int m = 1;; ++m) {
    if (std::none_of(sums.begin(), sums.end(), in_diamond)) return m;
    std::set<BoostWeight> next;
    for (const auto& s : sums) {
      for (const auto& w : allowed) {
        BoostWeight t(p);
        for (int i = 0; i < p; ++i) t[i] = s[i] + w[i];
        if (dot(x, t) >= floor) next.insert(std::move(t));
      }
    }
    sums = std::move(next);
  }
}

ContractionReport contraction_limit_check(const StructureConstants& mu, const NullFrameMetric& g,
                                          const Certificate& cert,
                                          const std::vector<Scalar>& lambdas) {
  if (!verify_certificate(mu, g, cert)) throw InvalidCertificate("certificate does not verify");
  int p = g.p(), k = g.k();
  StructureConstants framed = cert.frame.empty() ? mu : relabel(mu, cert.frame);
  ContractionReport r;
  mpz_class den = common_denominator(cert.x);
  for (const auto& v : cert.x) r.x_int.push_back(v * den);
  bool ok = true;
  for (const auto& [key, v] : framed.entries()) {
    Scalar e = dot(r.x_int, structure_weight(key[0], key[1], key[2], p, k));
    long ei = e.get_num().get_si();
    r.exponents.push_back({key, ei});
    if (ei > -1) ok = false;
  }
  for (const auto& lambda : lambdas) {
    ContractionStep step{lambda};
    StructureConstants acted = boost_act(framed, r.x_int, lambda, p, k);
    step.scaled_correctly = acted.entries().size() == framed.entries().size();
    step.decays = lambda > 1 || lambda < -1;
    for (const auto& [key, e] : r.exponents) {
      Scalar factor = power(lambda, e);
      if (acted.get(key[0], key[1], key[2]) != factor * framed.get(key[0], key[1], key[2])) {
        step.scaled_correctly = false;
      }
      if (abs(factor) >= 1) step.decays = false;
    }
    if (!step.scaled_correctly) ok = false;
    r.steps.push_back(step);
  }
  r.ok = ok;
  return r;
}

}  // namespace liecone
