#pragma once

// Exact Laurent-polynomial / rational-function arithmetic on a half-integer
// exponent grid, quantum integers, Chebyshev polynomials, root-of-unity
// parameter sets, and dense complex matrices.

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <Eigen/Dense>

namespace braidforge {

using Cx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

constexpr double kEqTol = 1e-9;       // default numeric equality tolerance
constexpr double kUnitaryTol = 1e-9;  // default unitarity residual tolerance

// Variable tags. Exponents are stored doubled (grid denominator 2), so
// t^{1/2}, q^{1/2} and integer A/d/x powers share one representation.
enum class Var : std::uint8_t { t, A, d, x, q, s, z };

std::string var_name(Var v);

class LaurentPoly {
 public:
  using Exp = long long;                    // doubled exponent: term = c * v^{e/2}
  using Terms = std::map<Exp, mpz_class>;   // ascending, no zero coefficients

  LaurentPoly() : var_(Var::t) {}
  explicit LaurentPoly(Var v) : var_(v) {}

  static LaurentPoly constant(Var v, const mpz_class& c);
  static LaurentPoly monomial(Var v, const mpz_class& c, Exp exp2);
  static LaurentPoly one(Var v) { return constant(v, 1); }
  static LaurentPoly gen(Var v) { return monomial(v, 1, 2); }  // the variable itself

  Var var() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;  // zero or single exponent-0 term
  Exp min_exp2() const;      // throws std::domain_error on the zero polynomial
  Exp max_exp2() const;
  mpz_class coeff(Exp exp2) const;
  mpz_class content() const;  // gcd of |coefficients|; 0 for the zero polynomial

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly pow(long long n) const;             // n >= 0
  LaurentPoly shifted(Exp exp2) const;            // multiply by v^{exp2/2}
  LaurentPoly scaled(const mpz_class& c) const;
  LaurentPoly retagged(Var v) const;              // same terms, new variable tag
  LaurentPoly inverted() const;                   // v -> v^{-1}

  // Exact division; throws std::domain_error if the division leaves a remainder.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  Cx eval(Cx point) const;  // principal sqrt for the half-exponent grid; point != 0

  std::string str() const;   // "q + q^3 - q^4", half-exponents as "q^{1/2}"
  std::string json() const;  // {"var":"t","den":2,"terms":[[e,"c"],...]} ascending

 private:
  Var var_;
  Terms terms_;
  void insert_term(Exp exp2, const mpz_class& c);  // drops zeros
  static Var combine_vars(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
};

// Primitive-PRS polynomial gcd; result has min exponent 0, positive leading
// coefficient, content 1. gcd(0,0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

class RationalFunction {
 public:
  RationalFunction() : num_(Var::d), den_(LaurentPoly::one(Var::d)) {}
  RationalFunction(LaurentPoly num, LaurentPoly den);  // normalizes; den != 0
  static RationalFunction from_poly(LaurentPoly p);
  static RationalFunction constant(Var v, const mpz_class& c);
  static RationalFunction one(Var v) { return constant(v, 1); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;  // o != 0
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  bool operator==(const RationalFunction& o) const;  // cross-multiplication
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  Cx eval(Cx point) const;
  std::string str() const;

 private:
  LaurentPoly num_, den_;
  void normalize();
};

// The four unitary branches A in {±i e^{±2πi/4r}}; all give d = 2cos(π/r).
enum class Branch : std::uint8_t { A1, A2, A3, A4 };

struct UnitaryParams {
  int r = 0;
  Branch branch = Branch::A1;
  Cx A;
  Cx q;       // A^{-4}
  double d = 0.0;  // -A^2 - A^{-2}, real
  int k = 0;  // level, r - 2
};

UnitaryParams unitary_params(int r, Branch branch);
Branch parse_branch(const std::string& name);  // "A1".."A4"
std::string branch_name(Branch b);

// [n]_q = (q^{n/2}-q^{-n/2})/(q^{1/2}-q^{-1/2}).
LaurentPoly quantum_int_formal(int n);  // Laurent polynomial in q^{1/2}
Cx quantum_int(int n, Cx q);            // principal sqrt; throws at q = 1

// Chebyshev (2nd kind): Δ_0=1, Δ_1=x, Δ_{i+1}=xΔ_i−Δ_{i−1}.
LaurentPoly chebyshev(int n);

// Taylor coefficients v_0..v_order of p(e^h) in h, exact rationals.
std::vector<mpq_class> series_expand(const LaurentPoly& p, int order);

// --- dense-matrix helpers shared across modules ---

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& m);                  // sup-norm of entries
double op_norm(const ComplexMatrix& m);                  // largest singular value
double unitarity_residual(const ComplexMatrix& u);       // max|U†U − I|
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kEqTol);

// Exact matrices over the Laurent ring (Burau images, Gram matrices).
using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

PolyMatrix poly_mat_identity(Var v, int n);
PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b);
LaurentPoly det_bareiss(PolyMatrix m);  // fraction-free, exact

}  // namespace braidforge
