#include "braidforge/templieb.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace braidforge {

namespace {

void check_pairing(int nb, int nt, const std::vector<int>& partner) {
  const int m = nb + nt;
  if (nb < 0 || nt < 0 || m % 2 != 0 || static_cast<int>(partner.size()) != m)
    throw std::invalid_argument("TL diagram pairing has wrong size");
  for (int p = 0; p < m; ++p) {
    const int q = partner[p];
    if (q < 0 || q >= m || q == p || partner[q] != p)
      throw std::invalid_argument("TL diagram pairing is not a fixed-point-free involution");
  }
  // Noncrossing: no two chords interleave in the cyclic (= linear) order.
  for (int a = 0; a < m; ++a) {
    const int b = partner[a];
    if (b < a) continue;
    for (int c = a + 1; c < b; ++c) {
      const int e = partner[c];
      if (e < a || e > b) throw std::invalid_argument("TL diagram pairing crosses");
    }
  }
}

// Union-find for loop counting over small point sets.
struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Loops formed when every point of d is closed off by the involution `glue`.
int glued_loops(const TLDiagram& d, const std::vector<int>& glue) {
  DisjointSets sets(d.points());
  for (int p = 0; p < d.points(); ++p) {
    sets.unite(p, d.partner[p]);
    sets.unite(p, glue[p]);
  }
  int loops = 0;
  for (int p = 0; p < d.points(); ++p)
    if (sets.find(p) == p) ++loops;
  return loops;
}

// Matches points lo..hi (contiguous); chords stay inside their segment, so
// the result is noncrossing. Calls emit() once per complete matching.
void gen_matchings(std::vector<int>& partner, int lo, int hi,
                   const std::function<void()>& emit) {
  if (lo > hi) {
    emit();
    return;
  }
  for (int mate = lo + 1; mate <= hi; mate += 2) {
    partner[lo] = mate;
    partner[mate] = lo;
    gen_matchings(partner, lo + 1, mate - 1,
                  [&] { gen_matchings(partner, mate + 1, hi, emit); });
  }
}

}  // namespace

TLDiagram::TLDiagram(int strands, std::vector<int> pairing)
    : nb(strands), nt(strands), partner(std::move(pairing)) {
  if (strands < 1) throw std::invalid_argument("TL diagram needs at least one strand");
  check_pairing(nb, nt, partner);
}

TLDiagram::TLDiagram(int bottom, int top, std::vector<int> pairing)
    : nb(bottom), nt(top), partner(std::move(pairing)) {
  check_pairing(nb, nt, partner);
}

TLDiagram TLDiagram::identity(int n) {
  std::vector<int> p(2 * n);
  for (int i = 0; i < n; ++i) {
    p[i] = 2 * n - 1 - i;
    p[2 * n - 1 - i] = i;
  }
  return TLDiagram(n, std::move(p));
}

TLDiagram TLDiagram::u(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("u_i index out of range");
  TLDiagram d = identity(n);
  const int b0 = i - 1, b1 = i;                     // bottom cup
  const int t0 = d.top_index(b0), t1 = d.top_index(b1);  // top cap
  d.partner[b0] = b1;
  d.partner[b1] = b0;
  d.partner[t0] = t1;
  d.partner[t1] = t0;
  return d;
}

TLDiagram reflect_diagram(const TLDiagram& d) {
  const int m = d.points();
  std::vector<int> p(m);
  for (int q = 0; q < m; ++q) p[m - 1 - q] = m - 1 - d.partner[q];
  return TLDiagram(d.nt, d.nb, std::move(p));
}

TLDiagram tensor_diagrams(const TLDiagram& a, const TLDiagram& b) {
  const int nb = a.nb + b.nb, nt = a.nt + b.nt;
  // Point p of a factor sitting at bottom offset `bo` / top offset `to`.
  auto place = [&](const TLDiagram& d, int bo, int to, int p) {
    if (p < d.nb) return bo + p;
    return nb + nt - 1 - (to + (d.points() - 1 - p));
  };
  std::vector<int> partner(nb + nt, -1);
  auto add = [&](const TLDiagram& d, int bo, int to) {
    for (int p = 0; p < d.points(); ++p) {
      const int q = d.partner[p];
      partner[place(d, bo, to, p)] = place(d, bo, to, q);
    }
  };
  add(a, 0, 0);
  add(b, a.nb, a.nt);
  return TLDiagram(nb, nt, std::move(partner));
}

TLDiagram vertex_fan(int a, int b, int c) {
  const int x2 = a + b - c, y2 = a + c - b, z2 = b + c - a;
  if (a < 0 || b < 0 || c < 0 || x2 < 0 || y2 < 0 || z2 < 0 || x2 % 2 != 0)
    throw std::invalid_argument("vertex_fan labels are not admissible");
  const int x = x2 / 2, y = y2 / 2, z = z2 / 2;
  const int nb = c, nt = a + b;
  std::vector<int> partner(nb + nt, -1);
  auto top = [&](int pos) { return nb + nt - 1 - pos; };
  auto pair = [&](int p, int q) {
    partner[p] = q;
    partner[q] = p;
  };
  for (int j = 0; j < y; ++j) pair(j, top(j));              // through, a-block
  for (int j = 0; j < z; ++j) pair(y + j, top(a + x + j));  // through, b-block
  for (int i = 0; i < x; ++i) pair(top(a - 1 - i), top(a + i));  // nested arcs
  return TLDiagram(nb, nt, std::move(partner));
}

std::pair<TLDiagram, int> compose_diagrams(const TLDiagram& bottom, const TLDiagram& top) {
  if (bottom.nt != top.nb) throw std::invalid_argument("TL diagram shape mismatch");
  const int mb = bottom.points(), mt = top.points();
  // Point ids: 0..mb-1 = bottom diagram, mb..mb+mt-1 = top diagram.
  // Interface: bottom's i-th top point glues to top's bottom point i, and
  // both have id formulas meeting at glue(id) = 2mb-1-id.
  auto chord = [&](int id) {
    return id < mb ? bottom.partner[id] : mb + top.partner[id - mb];
  };
  auto glue = [&](int id) { return 2 * mb - 1 - id; };
  auto is_boundary = [&](int id) {
    return (id < mb && id < bottom.nb) || (id >= mb && id - mb >= top.nb);
  };
  auto result_index = [&](int id) {
    return id < mb ? id : id - mb - top.nb + bottom.nb;
  };

  std::vector<bool> visited(mb + mt, false);
  std::vector<int> partner(bottom.nb + top.nt, -1);
  for (int start : [&] {
         std::vector<int> s;
         for (int i = 0; i < bottom.nb; ++i) s.push_back(i);             // result bottom
         for (int i = 0; i < top.nt; ++i) s.push_back(mb + top.nb + i);  // result top
         return s;
       }()) {
    if (visited[start]) continue;
    visited[start] = true;
    int cur = start;
    for (;;) {
      cur = chord(cur);
      visited[cur] = true;
      if (is_boundary(cur)) {
        partner[result_index(start)] = result_index(cur);
        partner[result_index(cur)] = result_index(start);
        break;
      }
      cur = glue(cur);
      visited[cur] = true;
    }
  }
  int loops = 0;
  for (int p = 0; p < mb + mt; ++p) {
    if (visited[p] || is_boundary(p)) continue;
    ++loops;
    int cur = p;
    do {
      visited[cur] = true;
      cur = chord(cur);
      visited[cur] = true;
      cur = glue(cur);
    } while (cur != p);
  }
  return {TLDiagram(bottom.nb, top.nt, std::move(partner)), loops};
}

int closure_loops(const TLDiagram& d) {
  if (d.nb != d.nt) throw std::invalid_argument("tracial closure needs a square diagram");
  std::vector<int> glue(d.points());
  for (int i = 0; i < d.nb; ++i) {
    glue[i] = d.top_index(i);
    glue[d.top_index(i)] = i;
  }
  return glued_loops(d, glue);
}

int plat_loops(const TLDiagram& d) {
  if (d.nb != d.nt || d.nb % 2 != 0)
    throw std::invalid_argument("plat closure needs a square diagram with even strand count");
  std::vector<int> glue(d.points());
  for (int j = 0; j < d.nb; j += 2) {
    glue[j] = j + 1;
    glue[j + 1] = j;
    const int t0 = d.top_index(j), t1 = d.top_index(j + 1);
    glue[t0] = t1;
    glue[t1] = t0;
  }
  return glued_loops(d, glue);
}

std::vector<TLDiagram> enumerate_basis(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("enumerate_basis supports 1 <= n <= 10");
  std::vector<int> partner(2 * n, -1);
  std::vector<std::vector<int>> pairings;
  gen_matchings(partner, 0, 2 * n - 1, [&] { pairings.push_back(partner); });
  std::sort(pairings.begin(), pairings.end());
  std::vector<TLDiagram> basis;
  basis.reserve(pairings.size());
  for (auto& p : pairings) basis.emplace_back(n, std::move(p));
  return basis;
}

TLPoly kauffman_bracket(const BraidWord& b) {
  const LaurentPoly a = LaurentPoly::gen(Var::A);
  const LaurentPoly ainv = LaurentPoly::monomial(Var::A, 1, -2);
  const LaurentPoly d = loop_value_A();
  TLPoly acc = tl_identity<LaurentPoly>(b.strands);
  for (int letter : b.letters) {
    const int i = letter > 0 ? letter : -letter;
    TLPoly gen = tl_scale(tl_identity<LaurentPoly>(b.strands), letter > 0 ? a : ainv);
    gen = gen + tl_scale(tl_u<LaurentPoly>(b.strands, i), letter > 0 ? ainv : a);
    acc = tl_mul(acc, gen, d);
  }
  return acc;
}

LaurentPoly jones(const BraidWord& b) {
  const LaurentPoly d = loop_value_A();
  LaurentPoly tr = markov_trace(kauffman_bracket(b), d);
  const int e = writhe(b);
  tr = tr * LaurentPoly::monomial(Var::A, e % 2 == 0 ? 1 : -1, -6 * e);
  const LaurentPoly in_a = tr.divide_exact(d);
  // A^k ↦ q^{−k/4}: doubled A-exponent 2k becomes doubled q-exponent −k/2,
  // and k is always even here, so 2k ≡ 0 (mod 4).
  LaurentPoly out = LaurentPoly::constant(Var::q, 0);
  for (const auto& [e2, c] : in_a.terms()) {
    if (e2 % 4 != 0) throw std::logic_error("A-power not a multiple of 4 in Jones normalization");
    out += LaurentPoly::monomial(Var::q, c, static_cast<int>(-e2 / 4));
  }
  return out;
}

LaurentPoly plat_bracket(const BraidWord& b) {
  if (b.strands % 2 != 0) throw std::invalid_argument("plat closure needs an even strand count");
  const LaurentPoly d = loop_value_A();
  LaurentPoly acc = LaurentPoly::constant(Var::A, 0);
  for (const auto& [diag, c] : kauffman_bracket(b).terms)
    acc += c * d.pow(plat_loops(diag));
  return acc;
}

TLRat embed_right(const TLRat& x, int m) {
  if (x.nb != x.nt) throw std::invalid_argument("embed_right needs a square element");
  if (m < x.nb) throw std::invalid_argument("embed_right cannot shrink");
  TLRat cur = x;
  for (int n = x.nb; n < m; ++n) {
    TLRat next(n + 1);
    for (const auto& [d, c] : cur.terms) {
      std::vector<int> p(2 * (n + 1));
      auto remap = [n](int q) { return q < n ? q : q + 2; };
      for (int q = 0; q < 2 * n; ++q) p[remap(q)] = remap(d.partner[q]);
      p[n] = n + 1;
      p[n + 1] = n;
      next.add_term(TLDiagram(n + 1, std::move(p)), c);
    }
    cur = next;
  }
  return cur;
}

TLRat jones_wenzl(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("jones_wenzl supports 1 <= n <= 8");
  const RationalFunction d = loop_value_d();
  auto delta = [](int k) {
    return RationalFunction::from_poly(chebyshev(k).retagged(Var::d));
  };
  TLRat p = tl_identity<RationalFunction>(1);
  for (int k = 1; k < n; ++k) {
    const TLRat pk = embed_right(p, k + 1);
    const TLRat mid = tl_mul(tl_mul(pk, tl_u<RationalFunction>(k + 1, k), d), pk, d);
    p = pk - tl_scale(mid, delta(k - 1) / delta(k));
  }
  return p;
}

PolyMatrix gram_matrix(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("gram_matrix supports 1 <= n <= 5");
  const auto basis = enumerate_basis(n);
  const size_t m = basis.size();
  PolyMatrix g(m, std::vector<LaurentPoly>(m));
  for (size_t i = 0; i < m; ++i) {
    const TLDiagram ri = reflect_diagram(basis[i]);
    for (size_t j = 0; j < m; ++j) {
      auto [prod, loops] = compose_diagrams(ri, basis[j]);
      g[i][j] = LaurentPoly::monomial(Var::d, 1, 2 * (loops + closure_loops(prod)));
    }
  }
  return g;
}

LaurentPoly gram_det_formula(int n) {
  auto binom = [](int top, int k) {
    mpz_class r = 0;
    if (k >= 0 && k <= top) mpz_bin_uiui(r.get_mpz_t(), top, k);
    return r;
  };
  LaurentPoly det = LaurentPoly::one(Var::d);
  for (int i = 1; i <= n; ++i) {
    const mpz_class a = binom(2 * n, n - i - 2) + binom(2 * n, n - i) -
                        2 * binom(2 * n, n - i - 1);
    det = det * chebyshev(i).retagged(Var::d).pow(static_cast<long long>(a.get_si()));
  }
  return det;
}

bool gram_det_check(int n) {
  return det_bareiss(gram_matrix(n)) == gram_det_formula(n);
}

std::pair<TLRat, TLRat> matrix_units_tl2() {
  const RationalFunction dinv =
      RationalFunction::one(Var::d) / loop_value_d();
  const TLRat e2 = tl_scale(tl_u<RationalFunction>(2, 1), dinv);
  return {tl_identity<RationalFunction>(2) - e2, e2};
}

TL3Units matrix_units_tl3() {
  const RationalFunction d = loop_value_d();
  const RationalFunction one = RationalFunction::one(Var::d);
  const RationalFunction dinv = one / d;
  const TLRat u1 = tl_u<RationalFunction>(3, 1);
  const TLRat u2 = tl_u<RationalFunction>(3, 2);
  const TLRat u1u2 = tl_mul(u1, u2, d);
  const TLRat u2u1 = tl_mul(u2, u1, d);
  TL3Units out;
  out.p3 = jones_wenzl(3);
  out.e11 = u1;
  out.e21 = u2u1 - tl_scale(u1, dinv);
  out.e12 = u1u2 - tl_scale(u1, dinv);
  out.e22 = u2 - tl_scale(u1u2, dinv) - tl_scale(u2u1, dinv) + tl_scale(u1, dinv * dinv);
  return out;
}

}  // namespace braidforge
