#pragma once

// Unreduced/reduced Burau representations over exact Laurent polynomials in t,
// the Alexander and Alexander–Conway polynomials, and the unitarization
// ρ_s(b)† J ρ_s(b) = J at t = s².

#include <utility>

#include "braidforge/braid.hpp"
#include "braidforge/ring.hpp"

namespace braidforge {

// n×n image; generator block [[1−t, t],[1, 0]] at rows/cols (i, i+1),
// inverse block [[0, 1],[t̄, 1−t̄]]; letters multiply in word order.
PolyMatrix unreduced_burau(const BraidWord& b);

// (n−1)×(n−1) matrix of ρ̃(b) restricted to span{v_i}, v_i = −t·e_i + e_{i+1}.
// Columns are exact coordinates of ρ̃(b)v_j in the v-basis. Requires n ≥ 2.
PolyMatrix reduced_burau(const BraidWord& b);

// det(I − ρ(b)) / (1 + t + ... + t^{n−1}), normalized by ±t^k so the lowest
// exponent is 0 and the constant term is positive. Unknot (n = 1) gives 1.
LaurentPoly alexander(const BraidWord& b);

// (−t^{1/2})^{n−e(b)−1} · det(I − ρ(b))/(1 + t + ... + t^{n−1}), unnormalized.
LaurentPoly conway(const BraidWord& b);

// Rewrites a Conway value as a polynomial in z = t^{1/2} − t^{−1/2}.
LaurentPoly conway_z(const LaurentPoly& c);

// det(I − ρ(b))/(1+t+...+t^{n−1}) == det of the (1,1)-minor of I − ρ̃(b).
bool det_lemma_check(const BraidWord& b);

// Entrywise numeric evaluation.
ComplexMatrix eval_matrix(const PolyMatrix& m, Cx point);

// Tridiagonal J_{n−1}(s): diagonal s + s^{−1}, off-diagonal −1.
ComplexMatrix j_matrix(int n, Cx s);

// (ρ_s(b), J) with ρ_s = P ρ(b)|_{t=s²} P^{−1}, P = diag(1, s, ..., s^{n−2}).
std::pair<ComplexMatrix, ComplexMatrix> unitarize(const BraidWord& b, Cx s);

}  // namespace braidforge
