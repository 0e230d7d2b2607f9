#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "braidforge/templieb.hpp"

using namespace braidforge;

namespace {

LaurentPoly amono(int coeff, int exp) { return LaurentPoly::monomial(Var::A, coeff, 2 * exp); }
LaurentPoly qmono(int coeff, int exp2) { return LaurentPoly::monomial(Var::q, coeff, exp2); }

RationalFunction rf(const LaurentPoly& p) { return RationalFunction::from_poly(p); }

BraidWord random_word_on(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  BraidWord b(n, {});
  const int l = len(rng);
  for (int i = 0; i < l; ++i) b.letters.push_back(gen(rng) * (sign(rng) ? 1 : -1));
  return b;
}

BraidWord random_word(std::mt19937_64& rng, int max_strands, int max_len) {
  std::uniform_int_distribution<int> nd(2, max_strands);
  return random_word_on(rng, nd(rng), max_len);
}

TLPoly random_element(std::mt19937_64& rng, int n, int words) {
  const LaurentPoly d = loop_value_A();
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> len(0, 4);
  std::uniform_int_distribution<int> coeff(-3, 3);
  TLPoly acc(n);
  for (int w = 0; w < words; ++w) {
    TLPoly prod = tl_identity<LaurentPoly>(n);
    const int l = len(rng);
    for (int s = 0; s < l; ++s) prod = tl_mul(prod, tl_u<LaurentPoly>(n, gen(rng)), d);
    acc = acc + tl_scale(prod, LaurentPoly::constant(Var::A, coeff(rng)));
  }
  return acc;
}

bool is_scalar_multiple(const TLRat& x, const TLRat& y) {
  // true iff x = c·y for some scalar c (y != 0)
  if (y.is_zero()) return x.is_zero();
  const auto& [d0, c0] = *y.terms.begin();
  const auto it = x.terms.find(d0);
  if (it == x.terms.end()) return x.is_zero();
  const RationalFunction c = it->second / c0;
  return x == tl_scale(y, c);
}

}  // namespace

TEST_CASE("diagram construction and reflection") {
  const TLDiagram id3 = TLDiagram::identity(3);
  CHECK(id3.partner == std::vector<int>{5, 4, 3, 2, 1, 0});
  const TLDiagram u1 = TLDiagram::u(3, 1);
  CHECK(u1.partner == std::vector<int>{1, 0, 3, 2, 5, 4});
  const TLDiagram u2 = TLDiagram::u(3, 2);
  CHECK(u2.partner == std::vector<int>{5, 2, 1, 4, 3, 0});

  CHECK(reflect_diagram(id3) == id3);
  CHECK(reflect_diagram(u1) == u1);
  CHECK(reflect_diagram(u2) == u2);
  for (const auto& d : enumerate_basis(4)) CHECK(reflect_diagram(reflect_diagram(d)) == d);

  CHECK_THROWS_AS(TLDiagram(2, {1, 0, 2, 3}), std::invalid_argument);   // fixed points
  CHECK_THROWS_AS(TLDiagram(2, {2, 3, 0, 1}), std::invalid_argument);   // crossing
  CHECK_THROWS_AS(TLDiagram(2, {1, 0, 3, 2, 5, 4}), std::invalid_argument);  // size
  CHECK_THROWS_AS(TLDiagram::u(3, 3), std::invalid_argument);
}

TEST_CASE("basis enumeration matches Catalan counts") {
  const std::vector<size_t> catalan = {1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) {
    const auto basis = enumerate_basis(n);
    CHECK(basis.size() == catalan[n - 1]);
    CHECK(std::is_sorted(basis.begin(), basis.end()));
    CHECK(std::adjacent_find(basis.begin(), basis.end()) == basis.end());
    CHECK(std::find(basis.begin(), basis.end(), TLDiagram::identity(n)) != basis.end());
    for (int i = 1; i < n; ++i)
      CHECK(std::find(basis.begin(), basis.end(), TLDiagram::u(n, i)) != basis.end());
  }
  CHECK_THROWS_AS(enumerate_basis(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_basis(11), std::invalid_argument);
}

TEST_CASE("composition goldens in TL3") {
  const TLDiagram u1 = TLDiagram::u(3, 1);
  const TLDiagram u2 = TLDiagram::u(3, 2);

  auto [sq, loops] = compose_diagrams(u1, u1);
  CHECK(sq == u1);
  CHECK(loops == 1);

  // u1·u2: cup {b1,b2}, cap {t2,t3}, through strand t1-b3.
  auto [a, la] = compose_diagrams(u1, u2);
  CHECK(a == TLDiagram(3, {1, 0, 5, 4, 3, 2}));
  CHECK(la == 0);
  // u2·u1: cup {b2,b3}, cap {t1,t2}, through strand t3-b1.
  auto [b, lb] = compose_diagrams(u2, u1);
  CHECK(b == TLDiagram(3, {3, 2, 1, 0, 5, 4}));
  CHECK(lb == 0);

  for (const auto& d : enumerate_basis(3)) {
    auto [left, l1] = compose_diagrams(TLDiagram::identity(3), d);
    auto [right, l2] = compose_diagrams(d, TLDiagram::identity(3));
    CHECK(left == d);
    CHECK(right == d);
    CHECK(l1 == 0);
    CHECK(l2 == 0);
  }
}

TEST_CASE("rectangular diagrams: tensor, fans, cups") {
  CHECK(tensor_diagrams(TLDiagram::identity(2), TLDiagram::identity(3)) ==
        TLDiagram::identity(5));
  CHECK(tensor_diagrams(TLDiagram::identity(2), TLDiagram::u(2, 1)) == TLDiagram::u(4, 3));
  CHECK(tensor_diagrams(TLDiagram::u(2, 1), TLDiagram::identity(2)) == TLDiagram::u(4, 1));

  // Fans: all-through, pure-cup, and the mixed (2,2,2) vertex.
  CHECK(vertex_fan(1, 1, 2) == TLDiagram::identity(2));
  const TLDiagram cup = vertex_fan(1, 1, 0);
  CHECK(cup.nb == 0);
  CHECK(cup.nt == 2);
  CHECK(cup.partner == std::vector<int>{1, 0});
  CHECK(vertex_fan(2, 2, 2) == TLDiagram(2, 4, {5, 2, 1, 4, 3, 0}));
  CHECK_THROWS(vertex_fan(1, 1, 1));  // odd total
  CHECK_THROWS(vertex_fan(1, 1, 4));  // triangle violated

  // Cup then cap is u_1; cup then its own reflection closes one loop.
  auto [cup_cap, l1] = compose_diagrams(reflect_diagram(cup), cup);
  CHECK(cup_cap == TLDiagram::u(2, 1));
  CHECK(l1 == 0);
  auto [empty, l2] = compose_diagrams(cup, reflect_diagram(cup));
  CHECK(empty.nb == 0);
  CHECK(empty.nt == 0);
  CHECK(l2 == 1);

  // Zig-zag identity: (1 ⊗ cup)·(cap ⊗ 1) = 1 with no loops.
  const TLDiagram zig = tensor_diagrams(TLDiagram::identity(1), cup);
  const TLDiagram zag = tensor_diagrams(reflect_diagram(cup), TLDiagram::identity(1));
  auto [snake, l3] = compose_diagrams(zig, zag);
  CHECK(snake == TLDiagram::identity(1));
  CHECK(l3 == 0);

  // Element-level tensor is multiplicative under stacking.
  const RationalFunction d = loop_value_d();
  const TLRat x = jones_wenzl(2);
  const TLRat xx = tl_tensor(x, x);
  CHECK(tl_mul(xx, xx, d) == xx);  // p2 ⊗ p2 stays idempotent
  CHECK(markov_trace(xx, d) ==
        markov_trace(x, d) * markov_trace(x, d));
}

TEST_CASE("TL relations hold exactly up to n = 8") {
  const LaurentPoly d = loop_value_A();
  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i < n; ++i) {
      const TLPoly ui = tl_u<LaurentPoly>(n, i);
      CHECK(tl_mul(ui, ui, d) == tl_scale(ui, d));
      for (int j = 1; j < n; ++j) {
        const TLPoly uj = tl_u<LaurentPoly>(n, j);
        if (std::abs(i - j) == 1) {
          CHECK(tl_mul(tl_mul(ui, uj, d), ui, d) == ui);
        } else if (std::abs(i - j) >= 2) {
          CHECK(tl_mul(ui, uj, d) == tl_mul(uj, ui, d));
        }
      }
    }
  }
}

TEST_CASE("Markov trace goldens and trace property") {
  const LaurentPoly d = loop_value_A();
  for (int n = 1; n <= 6; ++n)
    CHECK(markov_trace(tl_identity<LaurentPoly>(n), d) == d.pow(n));
  CHECK(markov_trace(tl_u<LaurentPoly>(2, 1), d) == d);
  CHECK(markov_trace(tl_u<LaurentPoly>(3, 1), d) == d * d);

  // Tr⟨σ1⟩ = −A³·d
  const BraidWord sigma1(2, {1});
  CHECK(markov_trace(kauffman_bracket(sigma1), d) == amono(-1, 3) * d);

  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 10; ++trial) {
    const TLPoly x = random_element(rng, 4, 3);
    const TLPoly y = random_element(rng, 4, 3);
    CHECK(markov_trace(tl_mul(x, y, d), d) == markov_trace(tl_mul(y, x, d), d));
  }
}

TEST_CASE("Kauffman bracket resolves crossings and is a homomorphism") {
  const LaurentPoly d = loop_value_A();
  const LaurentPoly A = LaurentPoly::gen(Var::A);
  const LaurentPoly Ainv = amono(1, -1);

  TLPoly expect(2);
  expect.add_term(TLDiagram::identity(2), A);
  expect.add_term(TLDiagram::u(2, 1), Ainv);
  CHECK(kauffman_bracket(BraidWord(2, {1})) == expect);

  TLPoly expect_inv(2);
  expect_inv.add_term(TLDiagram::identity(2), Ainv);
  expect_inv.add_term(TLDiagram::u(2, 1), A);
  CHECK(kauffman_bracket(BraidWord(2, {-1})) == expect_inv);

  CHECK(kauffman_bracket(BraidWord(3, {1, 2, 1})) == kauffman_bracket(BraidWord(3, {2, 1, 2})));

  // Hecke quadratic: ⟨σ⟩² = (A − A⁻³)⟨σ⟩ + A⁻²·1
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i < n; ++i) {
      const TLPoly s = kauffman_bracket(BraidWord(n, {i}));
      const TLPoly lhs = tl_mul(s, s, d);
      const TLPoly rhs = tl_scale(s, A - amono(1, -3)) +
                         tl_scale(tl_identity<LaurentPoly>(n), amono(1, -2));
      CHECK(lhs == rhs);
    }
  }

  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 15; ++trial) {
    const BraidWord x = random_word(rng, 4, 6);
    const BraidWord y = random_word_on(rng, x.strands, 6);
    CHECK(kauffman_bracket(concat(x, y)) ==
          tl_mul(kauffman_bracket(x), kauffman_bracket(y), d));
    CHECK(kauffman_bracket(concat(x, inverse(x))) == tl_identity<LaurentPoly>(x.strands));
  }
}

TEST_CASE("Jones polynomial goldens") {
  const LaurentPoly trefoil = jones(BraidWord(2, {1, 1, 1}));
  CHECK(trefoil == qmono(1, 2) + qmono(1, 6) - qmono(1, 8));
  CHECK(trefoil.str() == "q + q^3 - q^4");

  const LaurentPoly left = jones(BraidWord(2, {-1, -1, -1}));
  CHECK(left == trefoil.inverted());
  CHECK(left.str() == "-q^{-4} + q^{-3} + q^{-1}");

  CHECK(jones(BraidWord(2, {1, 1})).str() == "-q^{1/2} - q^{5/2}");
  CHECK(jones(BraidWord(3, {1, -2, 1, -2})).str() == "q^{-2} - q^{-1} + 1 - q + q^2");

  CHECK(jones(BraidWord(1, {})).str() == "1");
  CHECK(jones(BraidWord(2, {1})).str() == "1");
  CHECK(jones(BraidWord(2, {})).str() == "-q^{-1/2} - q^{1/2}");  // 2-component unlink
}

TEST_CASE("Jones polynomial is a link invariant") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 15; ++trial) {
    const BraidWord b = random_word(rng, 4, 8);
    const LaurentPoly j = jones(b);
    const BraidWord walked = random_markov_walk(b, 12, rng());
    CHECK(jones(walked) == j);

    BraidWord mirror = b;
    for (int& l : mirror.letters) l = -l;
    CHECK(jones(mirror) == j.inverted());
  }
}

TEST_CASE("plat closure bracket goldens") {
  const LaurentPoly d = loop_value_A();
  CHECK(plat_bracket(BraidWord(2, {})) == d);
  CHECK(plat_bracket(BraidWord(4, {})) == d * d);
  CHECK(plat_bracket(BraidWord(2, {1})) == amono(-1, -3) * d);
  CHECK(plat_bracket(BraidWord(4, {2, 2})) ==
        amono(1, 6) + amono(1, 2) + amono(1, -2) + amono(1, -6));
  CHECK_THROWS_AS(plat_bracket(BraidWord(3, {})), std::invalid_argument);
}

TEST_CASE("Jones-Wenzl projectors") {
  const RationalFunction d = loop_value_d();
  const RationalFunction one = RationalFunction::one(Var::d);

  CHECK(jones_wenzl(1) == tl_identity<RationalFunction>(1));
  CHECK(jones_wenzl(2) == matrix_units_tl2().first);

  // p3 = 1 + (1/(d²−1))(u1u2 + u2u1) − (d/(d²−1))(u1 + u2)
  {
    const TLRat u1 = tl_u<RationalFunction>(3, 1);
    const TLRat u2 = tl_u<RationalFunction>(3, 2);
    const RationalFunction delta2 = d * d - one;
    TLRat expect = tl_identity<RationalFunction>(3);
    expect = expect + tl_scale(tl_mul(u1, u2, d) + tl_mul(u2, u1, d), one / delta2);
    expect = expect - tl_scale(u1 + u2, d / delta2);
    CHECK(jones_wenzl(3) == expect);
  }

  for (int n = 1; n <= 6; ++n) {
    const TLRat p = jones_wenzl(n);
    CHECK(tl_mul(p, p, d) == p);
    for (int i = 1; i < n; ++i) {
      const TLRat ui = tl_u<RationalFunction>(n, i);
      CHECK(tl_mul(ui, p, d).is_zero());
      CHECK(tl_mul(p, ui, d).is_zero());
    }
    // coefficient of the identity diagram is 1; trace is Δ_n
    const auto it = p.terms.find(TLDiagram::identity(n));
    REQUIRE(it != p.terms.end());
    CHECK(it->second == one);
    CHECK(markov_trace(p, d) == rf(chebyshev(n).retagged(Var::d)));
  }
  CHECK_THROWS_AS(jones_wenzl(0), std::invalid_argument);
  CHECK_THROWS_AS(jones_wenzl(9), std::invalid_argument);
}

TEST_CASE("Gram matrix and determinant formula") {
  const auto g2 = gram_matrix(2);
  const LaurentPoly d = LaurentPoly::gen(Var::d);
  REQUIRE(g2.size() == 2);
  CHECK(g2[0][0] == d * d);
  CHECK(g2[0][1] == d);
  CHECK(g2[1][0] == d);
  CHECK(g2[1][1] == d * d);
  CHECK(det_bareiss(g2) == d.pow(4) - d * d);
  CHECK(gram_det_formula(2) == d.pow(4) - d * d);

  for (int n = 1; n <= 4; ++n) {
    const auto g = gram_matrix(n);
    const auto basis = enumerate_basis(n);
    for (size_t i = 0; i < g.size(); ++i) {
      CHECK(g[i][i] == d.pow(n));  // Tr(reflect(D)·D) = d^n
      for (size_t j = 0; j < i; ++j) CHECK(g[i][j] == g[j][i]);
    }
    CHECK(gram_det_check(n));
  }
  if (std::getenv("BRAIDFORGE_SLOW_TESTS") != nullptr) CHECK(gram_det_check(5));
}

TEST_CASE("TL2 matrix units") {
  const RationalFunction d = loop_value_d();
  const auto [e1, e2] = matrix_units_tl2();
  CHECK(e1 + e2 == tl_identity<RationalFunction>(2));
  CHECK(tl_mul(e1, e1, d) == e1);
  CHECK(tl_mul(e2, e2, d) == e2);
  CHECK(tl_mul(e1, e2, d).is_zero());
  CHECK(tl_mul(e2, e1, d).is_zero());
}

TEST_CASE("TL3 matrix units") {
  const RationalFunction d = loop_value_d();
  const RationalFunction one = RationalFunction::one(Var::d);
  const TL3Units m = matrix_units_tl3();
  const RationalFunction big_n[2] = {d, (d * d - one) / d};
  const TLRat units[2][2] = {{m.e11, m.e12}, {m.e21, m.e22}};

  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          const TLRat prod = tl_mul(units[i][j], units[k][l], d);
          if (j == k) {
            CHECK(prod == tl_scale(units[i][l], big_n[j]));
          } else {
            CHECK(prod.is_zero());
          }
        }
      }
      CHECK(tl_mul(m.p3, units[i][j], d).is_zero());
      CHECK(tl_mul(units[i][j], m.p3, d).is_zero());
    }
  }

  // resolution of the identity: ẽ11/d + ẽ22·d/(d²−1) + p3 = 1
  const TLRat total = tl_scale(m.e11, one / d) +
                      tl_scale(m.e22, d / (d * d - one)) + m.p3;
  CHECK(total == tl_identity<RationalFunction>(3));

  // traces: diagonals carry weight, off-diagonals are traceless
  CHECK(markov_trace(m.e11, d) == d * d);
  CHECK(markov_trace(m.e22, d) == d * d - one);
  CHECK(markov_trace(m.e12, d).is_zero());
  CHECK(markov_trace(m.e21, d).is_zero());

  // with ẽ12 = u1u2 − (1/d)u2 instead, even ẽ11·ẽ12 stops being a scalar
  // multiple of ẽ12, so that variant cannot be a matrix unit
  const TLRat u1 = tl_u<RationalFunction>(3, 1);
  const TLRat u2 = tl_u<RationalFunction>(3, 2);
  const TLRat e12_variant = tl_mul(u1, u2, d) - tl_scale(u2, one / d);
  CHECK_FALSE(is_scalar_multiple(tl_mul(m.e11, e12_variant, d), e12_variant));
  CHECK(is_scalar_multiple(tl_mul(m.e11, m.e12, d), m.e12));
}

TEST_CASE("numeric scalar backend agrees with the exact bracket") {
  const UnitaryParams params = unitary_params(5, Branch::A1);
  const Cx a = params.A;
  const Cx ainv = 1.0 / a;
  const Cx d = params.d;

  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i < n; ++i) {
      const TLElement<Cx> ui = tl_u<Cx>(n, i);
      const TLElement<Cx> sq = tl_mul(ui, ui, d);
      REQUIRE(sq.terms.size() == 1);
      CHECK(std::abs(sq.terms.begin()->second - d) < 1e-12);
    }
  }

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const BraidWord b = random_word(rng, 4, 8);
    TLElement<Cx> acc = tl_identity<Cx>(b.strands);
    for (int letter : b.letters) {
      TLElement<Cx> gen = tl_scale(tl_identity<Cx>(b.strands), letter > 0 ? a : ainv);
      gen = gen + tl_scale(tl_u<Cx>(b.strands, std::abs(letter)), letter > 0 ? ainv : a);
      acc = tl_mul(acc, gen, d);
    }
    const Cx numeric = markov_trace(acc, d);
    const Cx exact = markov_trace(kauffman_bracket(b), loop_value_A()).eval(a);
    CHECK(std::abs(numeric - exact) < 1e-9);
  }
}
