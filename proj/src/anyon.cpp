#include "braidforge/anyon.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace braidforge {

namespace {

void check_label(const AnyonModel& m, int a) {
  if (a < 0 || a > m.k) throw std::out_of_range("anyon label out of range");
}

bool triple_ok(int k, int a, int b, int c) {
  if ((a + b + c) % 2 != 0) return false;
  if (c > a + b || a > b + c || b > a + c) return false;
  return a + b + c <= 2 * k;
}

RationalFunction rf_one() { return RationalFunction::one(Var::d); }

// p_n, extended with p_0 = the empty diagram.
TLRat jw(int n) {
  if (n == 0) return tl_from_diagram(TLDiagram(0, 0, {}), rf_one());
  return jones_wenzl(n);
}

TLRat ident(int n) { return n == 0 ? jw(0) : tl_identity<RationalFunction>(n); }

TLRat fan_elem(int a, int b, int c) {
  return tl_from_diagram(vertex_fan(a, b, c), rf_one());
}

// e^{(ab)c}_{d,m}: rectangle d → a+b+c through the fusion channel m, with
// Jones-Wenzl projectors on every edge.
TLRat tree_ab(int a, int b, int c, int dd, int m) {
  const RationalFunction d = loop_value_d();
  TLRat t = jw(dd);
  t = tl_mul(t, fan_elem(m, c, dd), d);
  t = tl_mul(t, tl_tensor(jw(m), ident(c)), d);
  t = tl_mul(t, tl_tensor(fan_elem(a, b, m), ident(c)), d);
  return tl_mul(t, tl_tensor(tl_tensor(jw(a), jw(b)), jw(c)), d);
}

// e^{a(bc)}_{d,n}: the other association order.
TLRat tree_bc(int a, int b, int c, int dd, int n) {
  const RationalFunction d = loop_value_d();
  TLRat t = jw(dd);
  t = tl_mul(t, fan_elem(a, n, dd), d);
  t = tl_mul(t, tl_tensor(ident(a), jw(n)), d);
  t = tl_mul(t, tl_tensor(ident(a), fan_elem(b, c, n)), d);
  return tl_mul(t, tl_tensor(tl_tensor(jw(a), jw(b)), jw(c)), d);
}

// ⟨s, t⟩ for two trees d → N: stack reflect(s) on top of t and close.
RationalFunction tree_pairing(const TLRat& s, const TLRat& t) {
  const RationalFunction d = loop_value_d();
  return markov_trace(tl_mul(t, tl_reflect(s), d), d);
}

}  // namespace

std::vector<int> AnyonModel::labels() const {
  std::vector<int> out(k + 1);
  for (int a = 0; a <= k; ++a) out[a] = a;
  return out;
}

std::string AnyonModel::label_name(int a) const {
  check_label(*this, a);
  if (k == 2) {
    static const std::array<const char*, 3> names = {"1", "sigma", "psi"};
    return names[a];
  }
  if (k == 3 && a == 0) return "1";
  if (k == 3 && a == 2) return "tau";
  return std::to_string(a);
}

Branch default_branch(int level) { return level == 3 ? Branch::A2 : Branch::A1; }

AnyonModel anyon_model(int level, Branch branch) {
  if (level < 1) throw std::invalid_argument("anyon_model requires level >= 1");
  AnyonModel m;
  m.params = unitary_params(level + 2, branch);
  m.k = level;
  return m;
}

AnyonModel anyon_model(int level) { return anyon_model(level, default_branch(level)); }

bool admissible_triple(const AnyonModel& m, int a, int b, int c) {
  check_label(m, a);
  check_label(m, b);
  check_label(m, c);
  return triple_ok(m.k, a, b, c);
}

std::vector<int> fusion_product(const AnyonModel& m, int a, int b) {
  check_label(m, a);
  check_label(m, b);
  std::vector<int> out;
  for (int c = 0; c <= m.k; ++c)
    if (triple_ok(m.k, a, b, c)) out.push_back(c);
  return out;
}

double quantum_dim(const AnyonModel& m, int a) {
  check_label(m, a);
  const double x = std::numbers::pi / m.params.r;
  return std::sin((a + 1) * x) / std::sin(x);
}

std::vector<FusionTree> enumerate_trees(const AnyonModel& m, int a, int n, int i) {
  check_label(m, a);
  check_label(m, i);
  if (n < 1) throw std::invalid_argument("enumerate_trees requires n >= 1");
  std::vector<FusionTree> out;
  std::vector<int> internal(n - 1);
  auto rec = [&](auto&& self, int depth, int charge) -> void {
    if (depth == n - 1) {
      if (charge == i) out.push_back({a, n, i, internal});
      return;
    }
    for (int x = 0; x <= m.k; ++x) {
      if (!triple_ok(m.k, charge, a, x)) continue;
      internal[depth] = x;
      self(self, depth + 1, x);
    }
  };
  rec(rec, 0, a);
  return out;
}

long long dim_space(const AnyonModel& m, int a, int n, int i) {
  check_label(m, a);
  check_label(m, i);
  if (n < 1) throw std::invalid_argument("dim_space requires n >= 1");
  std::vector<long long> cur(m.k + 1, 0);
  cur[a] = 1;
  for (int step = 1; step < n; ++step) {
    std::vector<long long> next(m.k + 1, 0);
    for (int x = 0; x <= m.k; ++x) {
      if (cur[x] == 0) continue;
      for (int y = 0; y <= m.k; ++y)
        if (triple_ok(m.k, x, a, y)) next[y] += cur[x];
    }
    cur = std::move(next);
  }
  return cur[i];
}

RationalFunction theta_symbol(int a, int b, int c) {
  if ((a + b + c) % 2 != 0 || c > a + b || a > b + c || b > a + c || a < 0)
    throw std::invalid_argument("theta_symbol needs an admissible triple");
  if (a + b + c > 12) throw std::invalid_argument("theta_symbol supports a+b+c <= 12");
  static std::map<std::tuple<int, int, int>, RationalFunction> memo;
  const auto key = std::make_tuple(a, b, c);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const RationalFunction d = loop_value_d();
  TLRat e = jw(c);
  e = tl_mul(e, fan_elem(a, b, c), d);
  e = tl_mul(e, tl_tensor(jw(a), jw(b)), d);
  e = tl_mul(e, tl_reflect(fan_elem(a, b, c)), d);
  RationalFunction value = markov_trace(e, d);
  memo.emplace(key, value);
  return value;
}

double theta_value(const AnyonModel& m, int a, int b, int c) {
  if (!admissible_triple(m, a, b, c))
    throw std::invalid_argument("theta_value needs an admissible triple");
  return theta_symbol(a, b, c).eval(Cx(m.params.d, 0.0)).real();
}

Cx r_symbol(const AnyonModel& m, int a, int b, int c) {
  if (!admissible_triple(m, a, b, c))
    throw std::invalid_argument("r_symbol needs an admissible triple");
  const int e = (a * (a + 2) + b * (b + 2) - c * (c + 2)) / 2;
  Cx value = std::polar(1.0, -e * std::arg(m.params.A));
  if (((a + b - c) / 2) % 2 != 0) value = -value;
  return value;
}

std::pair<std::vector<int>, std::vector<int>> f_channels(const AnyonModel& m, int a, int b,
                                                         int c, int d) {
  check_label(m, a);
  check_label(m, b);
  check_label(m, c);
  check_label(m, d);
  std::vector<int> ns, ms;
  for (int x = 0; x <= m.k; ++x) {
    if (triple_ok(m.k, b, c, x) && triple_ok(m.k, a, x, d)) ns.push_back(x);
    if (triple_ok(m.k, a, b, x) && triple_ok(m.k, x, c, d)) ms.push_back(x);
  }
  return {ns, ms};
}

ComplexMatrix f_matrix(const AnyonModel& m, int a, int b, int c, int d) {
  // The entries depend only on the level and the labels (every branch shares
  // the same loop value), so the exact computation is worth memoizing.
  static std::map<std::tuple<int, int, int, int, int>, ComplexMatrix> memo;
  const auto key = std::make_tuple(m.k, a, b, c, d);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;

  const auto [ns, ms] = f_channels(m, a, b, c, d);
  if (ns.size() != ms.size()) throw std::logic_error("recoupling channel count mismatch");
  if (ns.empty()) throw std::invalid_argument("f_matrix: no admissible channel");
  if (ns.size() > 2) throw std::invalid_argument("f_matrix: recoupling dimension > 2");
  if (ns.size() == 1) {
    ComplexMatrix f(1, 1);
    f(0, 0) = 1.0;  // trivial gauge
    memo.emplace(key, f);
    return f;
  }

  // Close the defining relation against each dual tree: the Gram matrix G of
  // the a(bc) basis and the mixed pairings M give F_raw = G^{-1} M exactly
  // over Q(d); the unitary gauge then rescales by the tree norms at the root.
  std::array<TLRat, 2> y = {tree_bc(a, b, c, d, ns[0]), tree_bc(a, b, c, d, ns[1])};
  std::array<TLRat, 2> x = {tree_ab(a, b, c, d, ms[0]), tree_ab(a, b, c, d, ms[1])};
  RationalFunction g[2][2], mix[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      g[i][j] = tree_pairing(y[i], y[j]);
      mix[i][j] = tree_pairing(y[i], x[j]);
    }
  const RationalFunction det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  if (det.is_zero()) throw std::domain_error("f_matrix: singular linear system");
  RationalFunction raw[2][2];
  for (int j = 0; j < 2; ++j) {
    raw[0][j] = (g[1][1] * mix[0][j] - g[0][1] * mix[1][j]) / det;
    raw[1][j] = (g[0][0] * mix[1][j] - g[1][0] * mix[0][j]) / det;
  }

  const Cx root(m.params.d, 0.0);
  double ynorm[2], xnorm[2];
  for (int i = 0; i < 2; ++i) {
    const double yy = g[i][i].eval(root).real();
    const double xx = tree_pairing(x[i], x[i]).eval(root).real();
    if (yy <= 0.0 || xx <= 0.0) throw std::domain_error("f_matrix: non-positive tree norm");
    ynorm[i] = std::sqrt(yy);
    xnorm[i] = std::sqrt(xx);
  }
  ComplexMatrix f(2, 2);
  for (int n = 0; n < 2; ++n)
    for (int j = 0; j < 2; ++j)
      f(n, j) = raw[n][j].eval(root) * (ynorm[n] / xnorm[j]);
  memo.emplace(key, f);
  return f;
}

}  // namespace braidforge
