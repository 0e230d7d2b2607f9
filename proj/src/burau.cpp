#include "braidforge/burau.hpp"

#include <cmath>

namespace braidforge {

namespace {

LaurentPoly t_mono(long c, long long exp2) { return LaurentPoly::monomial(Var::t, c, exp2); }

PolyMatrix unreduced_generator(int n, int letter) {
  PolyMatrix m = poly_mat_identity(Var::t, n);
  const int i = std::abs(letter) - 1;  // 0-based row of the block
  if (letter > 0) {
    m[i][i] = t_mono(1, 0) - t_mono(1, 2);      // 1 - t
    m[i][i + 1] = t_mono(1, 2);                 // t
    m[i + 1][i] = t_mono(1, 0);                 // 1
    m[i + 1][i + 1] = LaurentPoly(Var::t);      // 0
  } else {
    m[i][i] = LaurentPoly(Var::t);              // 0
    m[i][i + 1] = t_mono(1, 0);                 // 1
    m[i + 1][i] = t_mono(1, -2);                // t̄
    m[i + 1][i + 1] = t_mono(1, 0) - t_mono(1, -2);  // 1 - t̄
  }
  return m;
}

// Reduced generator: the restriction of the block above to the v-basis.
// ρ̃(σ_i)v_{i−1} = v_{i−1} + v_i, ρ̃(σ_i)v_i = −t·v_i, ρ̃(σ_i)v_{i+1} = t·v_i + v_{i+1}.
PolyMatrix reduced_generator(int n, int letter) {
  PolyMatrix m = poly_mat_identity(Var::t, n - 1);
  const int i = std::abs(letter) - 1;  // 0-based index of v_i
  if (letter > 0) {
    m[i][i] = t_mono(-1, 2);                       // -t
    if (i > 0) m[i][i - 1] = t_mono(1, 0);
    if (i + 1 < n - 1) m[i][i + 1] = t_mono(1, 2); // t
  } else {
    m[i][i] = t_mono(-1, -2);                      // -t̄
    if (i > 0) m[i][i - 1] = t_mono(1, -2);        // t̄ (inverse of the above)
    if (i + 1 < n - 1) m[i][i + 1] = t_mono(1, 0);
  }
  return m;
}

LaurentPoly cyclotomic_divisor(int n) {
  LaurentPoly d(Var::t);
  for (int i = 0; i < n; ++i) d += t_mono(1, 2 * i);
  return d;
}

// det(I − ρ(b)) / (1 + t + ... + t^{n−1}); zero stays zero.
LaurentPoly alexander_raw(const BraidWord& b) {
  const int n = b.strands;
  PolyMatrix m = reduced_burau(b);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j)
      m[i][j] = (i == j ? LaurentPoly::one(Var::t) : LaurentPoly(Var::t)) - m[i][j];
  LaurentPoly det = det_bareiss(std::move(m));
  if (det.is_zero()) return det;
  return det.divide_exact(cyclotomic_divisor(n));
}

}  // namespace

PolyMatrix unreduced_burau(const BraidWord& b) {
  PolyMatrix m = poly_mat_identity(Var::t, b.strands);
  for (int letter : b.letters) m = poly_mat_mul(m, unreduced_generator(b.strands, letter));
  return m;
}

PolyMatrix reduced_burau(const BraidWord& b) {
  if (b.strands < 2) throw std::invalid_argument("reduced Burau needs n >= 2");
  PolyMatrix m = poly_mat_identity(Var::t, b.strands - 1);
  for (int letter : b.letters) m = poly_mat_mul(m, reduced_generator(b.strands, letter));
  return m;
}

LaurentPoly alexander(const BraidWord& b) {
  if (b.strands == 1) return LaurentPoly::one(Var::t);  // unknot convention
  LaurentPoly p = alexander_raw(b);
  if (p.is_zero()) return p;
  p = p.shifted(-p.min_exp2());
  if (p.coeff(0) < 0) p = -p;
  return p;
}

LaurentPoly conway(const BraidWord& b) {
  if (b.strands == 1) return LaurentPoly::one(Var::t);
  LaurentPoly p = alexander_raw(b);
  if (p.is_zero()) return p;
  const long long e = b.strands - writhe(b) - 1;  // exponent of (-t^{1/2})
  const long sign = (e % 2 == 0) ? 1 : -1;
  return p * t_mono(sign, e);
}

LaurentPoly conway_z(const LaurentPoly& c) {
  LaurentPoly rest = c;
  LaurentPoly out(Var::z);
  const LaurentPoly zt = t_mono(1, 1) - t_mono(1, -1);  // t^{1/2} - t^{-1/2}
  while (!rest.is_zero()) {
    const auto m = rest.max_exp2();
    if (m < 0) throw std::domain_error("not a polynomial in z = t^{1/2} - t^{-1/2}");
    const mpz_class coef = rest.coeff(m);
    out += LaurentPoly::monomial(Var::z, coef, 2 * m);
    rest -= zt.pow(m).scaled(coef);
  }
  return out;
}

bool det_lemma_check(const BraidWord& b) {
  const int n = b.strands;
  if (n < 2) throw std::invalid_argument("det_lemma_check needs n >= 2");
  LaurentPoly lhs = alexander_raw(b);
  PolyMatrix u = unreduced_burau(b);
  PolyMatrix minor(n - 1, std::vector<LaurentPoly>(n - 1));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      minor[i - 1][j - 1] =
          (i == j ? LaurentPoly::one(Var::t) : LaurentPoly(Var::t)) - u[i][j];
  return lhs == det_bareiss(std::move(minor));
}

ComplexMatrix eval_matrix(const PolyMatrix& m, Cx point) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  ComplexMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = m[i][j].eval(point);
  return out;
}

ComplexMatrix j_matrix(int n, Cx s) {
  if (n < 2) throw std::invalid_argument("j_matrix needs n >= 2");
  const int m = n - 1;
  ComplexMatrix j = ComplexMatrix::Zero(m, m);
  const Cx diag = s + 1.0 / s;
  for (int i = 0; i < m; ++i) {
    j(i, i) = diag;
    if (i + 1 < m) {
      j(i, i + 1) = -1.0;
      j(i + 1, i) = -1.0;
    }
  }
  return j;
}

std::pair<ComplexMatrix, ComplexMatrix> unitarize(const BraidWord& b, Cx s) {
  if (std::abs(s) < 1e-12) throw std::domain_error("singular specialization s = 0");
  const int n = b.strands;
  ComplexMatrix rho = eval_matrix(reduced_burau(b), s * s);
  ComplexMatrix p = ComplexMatrix::Zero(n - 1, n - 1);
  Cx pw = 1.0;
  for (int i = 0; i < n - 1; ++i, pw *= s) p(i, i) = pw;
  ComplexMatrix rho_s = p * rho * p.inverse();
  return {rho_s, j_matrix(n, s)};
}

}  // namespace braidforge
