#pragma once

// The Temperley-Lieb diagram algebra: noncrossing pairings, composition with
// loop counting, Markov trace, Gram matrix, Kauffman bracket, Jones
// polynomial, and Jones-Wenzl projectors.
//
// Diagrams are rectangles with nb boundary points on the bottom and nt on
// top (nb = nt for algebra elements; fans and cups are genuinely
// rectangular). Points are indexed in the cyclic order bottom-left →
// bottom-right → top-right → top-left: bottom point i is index i, the i-th
// top point from the left is index nb+nt−1−i. Products multiply
// left-to-right bottom-to-top: in x·y, y is stacked on top of x. This order
// makes the displayed TL₃ matrix units come out as exact matrix units.

#include <map>
#include <utility>
#include <vector>

#include "braidforge/braid.hpp"
#include "braidforge/ring.hpp"

namespace braidforge {

struct TLDiagram {
  int nb = 0, nt = 0;        // bottom / top boundary point counts
  std::vector<int> partner;  // involution on 0..nb+nt-1, noncrossing

  TLDiagram() = default;
  TLDiagram(int strands, std::vector<int> pairing);          // square; validates
  TLDiagram(int bottom, int top, std::vector<int> pairing);  // rectangle

  static TLDiagram identity(int n);
  static TLDiagram u(int n, int i);  // 1-based i in [1, n-1]

  int points() const { return nb + nt; }
  int top_index(int i) const { return nb + nt - 1 - i; }  // i-th top point from left
  bool operator==(const TLDiagram& o) const = default;
  bool operator<(const TLDiagram& o) const {
    return nb != o.nb ? nb < o.nb : nt != o.nt ? nt < o.nt : partner < o.partner;
  }
};

// Reflection across the horizontal midline (swaps the two boundaries).
TLDiagram reflect_diagram(const TLDiagram& d);

// Side-by-side juxtaposition, b drawn to the right of a.
TLDiagram tensor_diagrams(const TLDiagram& a, const TLDiagram& b);

// Trivalent-vertex fan: c points on the bottom, a+b on top. The leftmost
// (a+c−b)/2 bottom points run straight up into the a-block, the rightmost
// (b+c−a)/2 into the b-block, and (a+b−c)/2 nested arcs join the blocks'
// facing edges. Requires a,b,c ≥ 0 satisfying the triangle inequality with
// a+b+c even.
TLDiagram vertex_fan(int a, int b, int c);

// Stacks `top` on top of `bottom` (bottom.nt must equal top.nb); returns the
// glued diagram and the number of closed loops removed.
std::pair<TLDiagram, int> compose_diagrams(const TLDiagram& bottom, const TLDiagram& top);

// Loops after the tracial closure (top i joined back to bottom i).
int closure_loops(const TLDiagram& d);

// Loops after the plat closure (cups (1,2),(3,4),... on both ends); even n.
int plat_loops(const TLDiagram& d);

// All c_n noncrossing diagrams, ordered lexicographically by pairing; n ≤ 10.
std::vector<TLDiagram> enumerate_basis(int n);

// --- formal linear combinations over a scalar ring R ---
// R is one of: LaurentPoly (Z[A^{±1}]), RationalFunction (Q(d)), Cx.

template <class R> R scalar_one();
template <> inline LaurentPoly scalar_one<LaurentPoly>() { return LaurentPoly::one(Var::A); }
template <> inline RationalFunction scalar_one<RationalFunction>() {
  return RationalFunction::one(Var::d);
}
template <> inline Cx scalar_one<Cx>() { return {1.0, 0.0}; }

inline bool scalar_is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline bool scalar_is_zero(const RationalFunction& x) { return x.is_zero(); }
inline bool scalar_is_zero(Cx x) { return x == Cx{0.0, 0.0}; }

// d = −A² − A^{−2} in the Z[A^{±1}] backend.
inline LaurentPoly loop_value_A() {
  return -LaurentPoly::monomial(Var::A, 1, 4) - LaurentPoly::monomial(Var::A, 1, -4);
}
inline RationalFunction loop_value_d() {
  return RationalFunction::from_poly(LaurentPoly::gen(Var::d));
}

template <class R>
struct TLElement {
  int nb = 0, nt = 0;
  std::map<TLDiagram, R> terms;  // no zero coefficients

  TLElement() = default;
  explicit TLElement(int strands) : nb(strands), nt(strands) {}
  TLElement(int bottom, int top) : nb(bottom), nt(top) {}

  void add_term(const TLDiagram& d, const R& c) {
    if (scalar_is_zero(c)) return;
    auto it = terms.find(d);
    if (it == terms.end()) {
      terms.emplace(d, c);
    } else {
      it->second = it->second + c;
      if (scalar_is_zero(it->second)) terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }
  bool operator==(const TLElement& o) const {
    return nb == o.nb && nt == o.nt && terms == o.terms;
  }
};

template <class R>
TLElement<R> tl_from_diagram(const TLDiagram& d, const R& c) {
  TLElement<R> x(d.nb, d.nt);
  x.add_term(d, c);
  return x;
}

template <class R>
TLElement<R> tl_identity(int n) {
  return tl_from_diagram(TLDiagram::identity(n), scalar_one<R>());
}

template <class R>
TLElement<R> tl_u(int n, int i) {
  return tl_from_diagram(TLDiagram::u(n, i), scalar_one<R>());
}

template <class R>
TLElement<R> operator+(const TLElement<R>& a, const TLElement<R>& b) {
  if (a.nb != b.nb || a.nt != b.nt) throw std::invalid_argument("TL element shape mismatch");
  TLElement<R> out = a;
  for (const auto& [d, c] : b.terms) out.add_term(d, c);
  return out;
}

template <class R>
TLElement<R> operator-(const TLElement<R>& a, const TLElement<R>& b) {
  if (a.nb != b.nb || a.nt != b.nt) throw std::invalid_argument("TL element shape mismatch");
  TLElement<R> out = a;
  for (const auto& [d, c] : b.terms) out.add_term(d, -c);
  return out;
}

template <class R>
TLElement<R> tl_scale(const TLElement<R>& a, const R& c) {
  TLElement<R> out(a.nb, a.nt);
  for (const auto& [d, k] : a.terms) out.add_term(d, k * c);
  return out;
}

// Multiplication in the diagram category; each closed loop contributes a
// factor of `loop`. Shapes compose: (nb→nt)·(nt→nt') = nb→nt'.
template <class R>
TLElement<R> tl_mul(const TLElement<R>& a, const TLElement<R>& b, const R& loop) {
  if (a.nt != b.nb) throw std::invalid_argument("TL element shape mismatch");
  TLElement<R> out(a.nb, b.nt);
  for (const auto& [da, ca] : a.terms) {
    for (const auto& [db, cb] : b.terms) {
      auto [d, loops] = compose_diagrams(da, db);
      R c = ca * cb;
      for (int l = 0; l < loops; ++l) c = c * loop;
      out.add_term(d, c);
    }
  }
  return out;
}

template <class R>
TLElement<R> tl_tensor(const TLElement<R>& a, const TLElement<R>& b) {
  TLElement<R> out(a.nb + b.nb, a.nt + b.nt);
  for (const auto& [da, ca] : a.terms)
    for (const auto& [db, cb] : b.terms) out.add_term(tensor_diagrams(da, db), ca * cb);
  return out;
}

// Termwise reflection; the adjoint for real coefficient rings.
template <class R>
TLElement<R> tl_reflect(const TLElement<R>& x) {
  TLElement<R> out(x.nt, x.nb);
  for (const auto& [d, c] : x.terms) out.add_term(reflect_diagram(d), c);
  return out;
}

template <class R>
R markov_trace(const TLElement<R>& x, const R& loop) {
  R acc{};
  for (const auto& [d, c] : x.terms) {
    R term = c;
    const int loops = closure_loops(d);
    for (int l = 0; l < loops; ++l) term = term * loop;
    acc = acc + term;
  }
  return acc;
}

using TLPoly = TLElement<LaurentPoly>;      // Kauffman brackets
using TLRat = TLElement<RationalFunction>;  // Jones-Wenzl projectors

// ⟨b⟩: σ_i ↦ A·1 + A^{−1}·u_i (inverse letters swap A ↔ A^{−1}).
TLPoly kauffman_bracket(const BraidWord& b);

// J(L,q) = (−A^{−3})^{e(b)} Tr⟨b⟩ / d, rewritten in q = A^{−4}.
LaurentPoly jones(const BraidWord& b);

// Kauffman bracket of the plat closure; strands must be even.
LaurentPoly plat_bracket(const BraidWord& b);

// Jones-Wenzl projector p_n over Q(d); p_1 = 1,
// p_{n+1} = p_n − (Δ_{n−1}/Δ_n)·p_n·u_n·p_n (p_n embedded in TL_{n+1}).
TLRat jones_wenzl(int n);

// TL_n ↪ TL_m by appending through strands on the right (m ≥ n).
TLRat embed_right(const TLRat& x, int m);

// Gram matrix M_{ij} = Tr(reflect(D_i)·D_j) over Z[d], basis order as
// enumerate_basis; and the closed product formula det = Π Δ_i(d)^{a_{n,i}}.
PolyMatrix gram_matrix(int n);
LaurentPoly gram_det_formula(int n);
bool gram_det_check(int n);

// TL₂ matrix units e₁ = 1 − (1/d)u₁, e₂ = (1/d)u₁.
std::pair<TLRat, TLRat> matrix_units_tl2();

// TL₃: p₃ plus the 2×2 summand units: ẽ₁₁ = u₁, ẽ₂₁ = u₂u₁ − (1/d)u₁,
// ẽ₁₂ = u₁u₂ − (1/d)u₁, ẽ₂₂ = u₂ − (1/d)u₁u₂ − (1/d)u₂u₁ + (1/d²)u₁.
// They satisfy ẽ_{ij}ẽ_{kl} = δ_{jk}·N_j·ẽ_{il} with N₁ = d, N₂ = (d²−1)/d.
struct TL3Units {
  TLRat p3, e11, e21, e12, e22;
};
TL3Units matrix_units_tl3();

}  // namespace braidforge
