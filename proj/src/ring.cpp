#include "braidforge/ring.hpp"

#include <cmath>
#include <numbers>

namespace braidforge {

namespace {

mpz_class mpz_gcd_abs(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

std::string var_name(Var v) {
  switch (v) {
    case Var::t: return "t";
    case Var::A: return "A";
    case Var::d: return "d";
    case Var::x: return "x";
    case Var::q: return "q";
    case Var::s: return "s";
    case Var::z: return "z";
  }
  throw std::invalid_argument("unknown variable tag");
}

void LaurentPoly::insert_term(Exp exp2, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(exp2);
  if (it == terms_.end()) {
    terms_.emplace(exp2, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::constant(Var v, const mpz_class& c) {
  return monomial(v, c, 0);
}

LaurentPoly LaurentPoly::monomial(Var v, const mpz_class& c, Exp exp2) {
  LaurentPoly p(v);
  p.insert_term(exp2, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

LaurentPoly::Exp LaurentPoly::min_exp2() const {
  if (terms_.empty()) throw std::domain_error("min_exp2 of zero polynomial");
  return terms_.begin()->first;
}

LaurentPoly::Exp LaurentPoly::max_exp2() const {
  if (terms_.empty()) throw std::domain_error("max_exp2 of zero polynomial");
  return terms_.rbegin()->first;
}

mpz_class LaurentPoly::coeff(Exp exp2) const {
  auto it = terms_.find(exp2);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) g = mpz_gcd_abs(g, c);
  return g;
}

Var LaurentPoly::combine_vars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.var_ == b.var_) return a.var_;
  if (a.is_constant()) return b.var_;
  if (b.is_constant()) return a.var_;
  throw std::invalid_argument("variable tag mismatch: " + var_name(a.var_) +
                              " vs " + var_name(b.var_));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(var_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly p(combine_vars(*this, o));
  p.terms_ = terms_;
  for (const auto& [e, c] : o.terms_) p.insert_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly p(combine_vars(*this, o));
  p.terms_ = terms_;
  for (const auto& [e, c] : o.terms_) p.insert_term(e, -c);
  return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly p(combine_vars(*this, o));
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) p.insert_term(e1 + e2, c1 * c2);
  return p;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (terms_ != o.terms_) return false;
  if (terms_.empty() || is_constant() || o.is_constant()) return true;
  return var_ == o.var_;
}

LaurentPoly LaurentPoly::pow(long long n) const {
  if (n < 0) throw std::invalid_argument("LaurentPoly::pow of negative exponent");
  LaurentPoly acc = one(var_), base = *this;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

LaurentPoly LaurentPoly::shifted(Exp exp2) const {
  LaurentPoly p(var_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + exp2, c);
  return p;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
  LaurentPoly p(var_);
  if (c == 0) return p;
  for (const auto& [e, k] : terms_) p.terms_.emplace(e, k * c);
  return p;
}

LaurentPoly LaurentPoly::retagged(Var v) const {
  LaurentPoly p = *this;
  p.var_ = v;
  return p;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly p(var_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
  return p;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  Var v = combine_vars(*this, divisor);
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return LaurentPoly(v);
  const Exp sa = min_exp2(), sd = divisor.min_exp2();
  Terms rem = shifted(-sa).terms_;
  const Terms div = divisor.shifted(-sd).terms_;
  const Exp deg_d = div.rbegin()->first;
  const mpz_class& lead_d = div.rbegin()->second;
  LaurentPoly q(v);
  while (!rem.empty()) {
    const Exp deg_r = rem.rbegin()->first;
    if (deg_r < deg_d) throw std::domain_error("inexact polynomial division");
    const mpz_class& lead_r = rem.rbegin()->second;
    if (!mpz_divisible_p(lead_r.get_mpz_t(), lead_d.get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    mpz_class c = lead_r / lead_d;
    const Exp k = deg_r - deg_d;
    q.insert_term(k, c);
    for (const auto& [e, dc] : div) {
      const Exp te = e + k;
      auto it = rem.find(te);
      mpz_class nv = (it == rem.end() ? mpz_class(0) : it->second) - c * dc;
      if (nv == 0) {
        if (it != rem.end()) rem.erase(it);
      } else if (it == rem.end()) {
        rem.emplace(te, nv);
      } else {
        it->second = nv;
      }
    }
  }
  return q.shifted(sa - sd);
}

Cx LaurentPoly::eval(Cx point) const {
  if (is_zero()) return {0.0, 0.0};
  if (point == Cx{0.0, 0.0}) throw std::domain_error("evaluation at zero point");
  const Cx w = std::sqrt(point);  // exponent grid is halves of stored integers
  const Exp lo = min_exp2(), hi = max_exp2();
  Cx acc{0.0, 0.0};
  for (Exp e = hi; e >= lo; --e) {
    acc *= w;
    auto it = terms_.find(e);
    if (it != terms_.end()) acc += Cx{it->second.get_d(), 0.0};
  }
  return acc * std::pow(w, Cx{static_cast<double>(lo), 0.0});
}

namespace {

std::string exp_str(Var v, LaurentPoly::Exp e2) {
  if (e2 == 0) return "";
  const std::string name = var_name(v);
  if (e2 % 2 == 0) {
    const long long k = e2 / 2;
    if (k == 1) return name;
    if (k > 1) return name + "^" + std::to_string(k);
    return name + "^{" + std::to_string(k) + "}";
  }
  return name + "^{" + std::to_string(e2) + "/2}";
}

}  // namespace

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const mpz_class mag = abs(c);
    const std::string vp = exp_str(var_, e);
    std::string term;
    if (vp.empty())
      term = mag.get_str();
    else
      term = (mag == 1) ? vp : mag.get_str() + vp;
    if (first) {
      out = neg ? "-" + term : term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

std::string LaurentPoly::json() const {
  std::string s = "{\"var\":\"" + var_name(var_) + "\",\"den\":2,\"terms\":[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) s += ",";
    first = false;
    s += "[" + std::to_string(e) + ",\"" + c.get_str() + "\"]";
  }
  return s + "]}";
}

namespace {

// Ordinary integer-indexed polynomial helpers for the primitive PRS,
// operating on term maps whose minimum exponent is zero.
using Terms = LaurentPoly::Terms;

Terms shift_to_zero(const LaurentPoly& p) {
  Terms out;
  if (p.is_zero()) return out;
  const auto lo = p.min_exp2();
  for (const auto& [e, c] : p.terms()) out.emplace(e - lo, c);
  return out;
}

Terms primitive_part(Terms t) {
  if (t.empty()) return t;
  mpz_class g = 0;
  for (const auto& [e, c] : t) g = mpz_gcd_abs(g, c);
  const auto lo = t.begin()->first;
  Terms out;
  for (const auto& [e, c] : t) out.emplace(e - lo, c / g);
  if (out.rbegin()->second < 0)
    for (auto& [e, c] : out) c = -c;
  return out;
}

// R <- lc(B)*R - lead(R)*y^k*B repeatedly until deg R < deg B.
Terms pseudo_remainder(Terms r, const Terms& b) {
  const auto deg_b = b.rbegin()->first;
  const mpz_class& lead_b = b.rbegin()->second;
  while (!r.empty() && r.rbegin()->first >= deg_b) {
    const auto k = r.rbegin()->first - deg_b;
    const mpz_class c = r.rbegin()->second;
    Terms next;
    for (const auto& [e, rc] : r) {
      mpz_class nv = rc * lead_b;
      next.emplace(e, nv);
    }
    for (const auto& [e, bc] : b) {
      auto it = next.find(e + k);
      mpz_class nv = (it == next.end() ? mpz_class(0) : it->second) - c * bc;
      if (nv == 0) {
        if (it != next.end()) next.erase(it);
      } else if (it == next.end()) {
        next.emplace(e + k, nv);
      } else {
        it->second = nv;
      }
    }
    r = std::move(next);
  }
  return r;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  Var v = a.is_constant() && !b.is_constant() ? b.var() : a.var();
  if (a.is_zero() && b.is_zero()) return LaurentPoly(v);
  Terms x = primitive_part(shift_to_zero(a));
  Terms y = primitive_part(shift_to_zero(b));
  if (x.empty()) std::swap(x, y);
  while (!y.empty()) {
    Terms r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(std::move(r));
  }
  LaurentPoly g(v);
  for (const auto& [e, c] : x) g += LaurentPoly::monomial(v, c, e);
  return g;
}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  normalize();
}

RationalFunction RationalFunction::from_poly(LaurentPoly p) {
  Var v = p.var();
  return RationalFunction(std::move(p), LaurentPoly::one(v));
}

RationalFunction RationalFunction::constant(Var v, const mpz_class& c) {
  return RationalFunction(LaurentPoly::constant(v, c), LaurentPoly::one(v));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one(den_.var());
    return;
  }
  LaurentPoly g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  // Shift so the denominator is an ordinary polynomial with nonzero constant.
  const auto s = den_.min_exp2();
  if (s != 0) {
    num_ = num_.shifted(-s);
    den_ = den_.shifted(-s);
  }
  mpz_class c = mpz_gcd_abs(num_.content(), den_.content());
  if (c > 1) {
    num_ = num_.divide_exact(LaurentPoly::constant(num_.var(), c));
    den_ = den_.divide_exact(LaurentPoly::constant(den_.var(), c));
  }
  if (den_.coeff(den_.max_exp2()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

Cx RationalFunction::eval(Cx point) const {
  return num_.eval(point) / den_.eval(point);
}

std::string RationalFunction::str() const {
  if (den_ == LaurentPoly::one(den_.var())) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

UnitaryParams unitary_params(int r, Branch branch) {
  if (r < 3) throw std::invalid_argument("unitary_params requires r >= 3");
  const double half_pi = std::numbers::pi / 2.0;
  const double eps = std::numbers::pi / (2.0 * r);
  double theta = 0.0;
  switch (branch) {
    case Branch::A1: theta = half_pi - eps; break;   //  i e^{-2πi/4r}
    case Branch::A2: theta = half_pi + eps; break;   //  i e^{+2πi/4r}
    case Branch::A3: theta = -half_pi - eps; break;  // -i e^{-2πi/4r}
    case Branch::A4: theta = -half_pi + eps; break;  // -i e^{+2πi/4r}
  }
  UnitaryParams p;
  p.r = r;
  p.branch = branch;
  p.A = std::polar(1.0, theta);
  p.q = std::polar(1.0, -4.0 * theta);
  p.d = -2.0 * std::cos(2.0 * theta);
  p.k = r - 2;
  return p;
}

Branch parse_branch(const std::string& name) {
  if (name == "A1") return Branch::A1;
  if (name == "A2") return Branch::A2;
  if (name == "A3") return Branch::A3;
  if (name == "A4") return Branch::A4;
  throw std::invalid_argument("unknown branch tag: " + name);
}

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::A1: return "A1";
    case Branch::A2: return "A2";
    case Branch::A3: return "A3";
    case Branch::A4: return "A4";
  }
  throw std::invalid_argument("unknown branch");
}

LaurentPoly quantum_int_formal(int n) {
  if (n < 0) return -quantum_int_formal(-n);
  LaurentPoly p(Var::q);
  for (int j = 0; j < n; ++j) p += LaurentPoly::monomial(Var::q, 1, n - 1 - 2 * j);
  return p;
}

Cx quantum_int(int n, Cx q) {
  if (std::abs(q - Cx{1.0, 0.0}) < 1e-14)
    throw std::domain_error("quantum_int denominator vanishes at q = 1");
  const Cx w = std::sqrt(q);
  const Cx wn = std::pow(w, Cx{static_cast<double>(n), 0.0});
  return (wn - 1.0 / wn) / (w - 1.0 / w);
}

LaurentPoly chebyshev(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev index must be >= 0");
  LaurentPoly prev = LaurentPoly::one(Var::x);
  if (n == 0) return prev;
  LaurentPoly cur = LaurentPoly::gen(Var::x);
  for (int i = 1; i < n; ++i) {
    LaurentPoly next = LaurentPoly::gen(Var::x) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<mpq_class> series_expand(const LaurentPoly& p, int order) {
  if (order < 0 || order > 16)
    throw std::invalid_argument("series_expand order must be in [0,16]");
  std::vector<mpq_class> v(order + 1, mpq_class(0));
  mpz_class factorial = 1;
  for (int i = 0; i <= order; ++i) {
    if (i > 0) factorial *= i;
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, i);
    den *= factorial;
    // term c * q^{e/2} contributes c * (e/2)^i / i! to v_i
    for (const auto& [e, c] : p.terms()) {
      mpz_class num;
      mpz_class base(static_cast<long>(e));
      mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(), i);
      num *= c;
      mpq_class term(num, den);
      term.canonicalize();
      v[i] += term;
    }
  }
  return v;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double op_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double unitarity_residual(const ComplexMatrix& u) {
  ComplexMatrix id = ComplexMatrix::Identity(u.cols(), u.cols());
  return max_abs(ComplexMatrix(u.adjoint() * u) - id);
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tol;
}

PolyMatrix poly_mat_identity(Var v, int n) {
  PolyMatrix m(n, std::vector<LaurentPoly>(n, LaurentPoly(v)));
  for (int i = 0; i < n; ++i) m[i][i] = LaurentPoly::one(v);
  return m;
}

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  PolyMatrix out(n, std::vector<LaurentPoly>(m));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("poly_mat_mul shape mismatch");
    for (size_t j = 0; j < m; ++j) {
      LaurentPoly acc(a[i].empty() ? Var::t : a[i][0].var());
      for (size_t l = 0; l < k; ++l) acc += a[i][l] * b[l][j];
      out[i][j] = std::move(acc);
    }
  }
  return out;
}

LaurentPoly det_bareiss(PolyMatrix m) {
  const size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  const Var v = m[0][0].var();
  if (n == 1) return m[0][0];
  LaurentPoly prev = LaurentPoly::one(v);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return LaurentPoly(v);  // singular
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace braidforge
