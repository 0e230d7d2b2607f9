#include "braidforge/localize.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "level4_fixture.hpp"

namespace braidforge {

namespace {

ComplexMatrix identity_pow(int w, int copies) {
  long long dim = 1;
  for (int c = 0; c < copies; ++c) dim *= w;
  return ComplexMatrix::Identity(dim, dim);
}

const nlohmann::json& fixture_doc() {
  static const nlohmann::json doc = nlohmann::json::parse(kLevel4FixtureJson);
  return doc;
}

std::string joined_pattern(const nlohmann::json& doc) {
  std::string joined;
  for (const auto& row : doc.at("pattern")) joined += row.get<std::string>();
  return joined;
}

}  // namespace

YBOperator make_yb_operator(int w, ComplexMatrix r) {
  if (w < 1 || r.rows() != r.cols() || r.rows() != static_cast<long>(w) * w)
    throw std::invalid_argument("yb operator needs a w² × w² matrix");
  YBOperator op;
  op.w = w;
  op.R = std::move(r);
  if (Eigen::FullPivLU<ComplexMatrix>(op.R).rank() < op.R.rows())
    throw std::invalid_argument("yb operator must be invertible");
  op.ybe_residual = check_ybe(op.R, w);
  return op;
}

double check_ybe(const ComplexMatrix& r, int w) {
  if (w < 1 || r.rows() != r.cols() || r.rows() != static_cast<long>(w) * w)
    throw std::invalid_argument("check_ybe needs a w² × w² matrix");
  const ComplexMatrix id = ComplexMatrix::Identity(w, w);
  const ComplexMatrix ri = kron(r, id);
  const ComplexMatrix ir = kron(id, r);
  return op_norm(ri * ir * ri - ir * ri * ir);
}

double check_ybe(const YBOperator& op) { return check_ybe(op.R, op.w); }

YBOperator family_R(Cx a) {
  if (a == Cx{}) throw std::invalid_argument("family_R needs a != 0");
  // ā denotes the inverse: the entries are the baxterized Temperley-Lieb
  // form, a Yang-Baxter solution for every a ≠ 0. On the unit circle, where
  // the unitary cases a⁴ = 1 live, inverse and conjugate coincide.
  const Cx ab = 1.0 / a;
  ComplexMatrix r = ComplexMatrix::Zero(4, 4);
  r(0, 0) = a;
  r(1, 2) = ab;
  r(2, 1) = ab;
  r(2, 2) = a - ab * ab * ab;
  r(3, 3) = a;
  return make_yb_operator(2, std::move(r));
}

bool unitarity_boundary(Cx a, double tol) {
  return unitarity_residual(family_R(a).R) < tol;
}

YBOperator ising_localization() {
  const Cx scale = -std::polar(1.0, -std::numbers::pi / 4.0) / std::sqrt(2.0);
  ComplexMatrix r(4, 4);
  r << 1, 0, 0, 1,
       0, 1, -1, 0,
       0, 1, 1, 0,
       -1, 0, 0, 1;
  return make_yb_operator(2, scale * r);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string level4_fixture_digest() {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(joined_pattern(fixture_doc()))));
  return buf;
}

YBOperator level4_localization() {
  const auto& doc = fixture_doc();
  if (level4_fixture_digest() != doc.at("fnv1a64").get<std::string>())
    throw std::runtime_error("level4 fixture digest mismatch");
  const int w = doc.at("w").get<int>();
  const auto& pattern = doc.at("pattern");
  const auto& entries = doc.at("entries");
  const int dim = w * w;
  if (static_cast<int>(pattern.size()) != dim || static_cast<int>(entries.size()) != dim)
    throw std::runtime_error("level4 fixture has wrong shape");

  const Cx scale = Cx(0.0, 1.0) / std::sqrt(3.0);
  const Cx omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  ComplexMatrix r(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const std::string row = pattern[i].get<std::string>();
    if (static_cast<int>(row.size()) != dim) throw std::runtime_error("level4 fixture row width");
    for (int j = 0; j < dim; ++j) {
      Cx symbol;
      switch (row[j]) {
        case '0': symbol = 0.0; break;
        case '1': symbol = 1.0; break;
        case 'w': symbol = omega; break;
        case 'W': symbol = omega * omega; break;
        default: throw std::runtime_error("level4 fixture symbol");
      }
      const auto& cell = entries[i][j];
      r(i, j) = Cx(cell[0].get<double>(), cell[1].get<double>());
      if (std::abs(r(i, j) - scale * symbol) > 1e-12)
        throw std::runtime_error("level4 fixture entries disagree with pattern");
    }
  }
  return make_yb_operator(w, std::move(r));
}

ComplexMatrix rmatrix_representation(const YBOperator& op, int n, int i) {
  if (n < 2 || i < 1 || i > n - 1)
    throw std::invalid_argument("rmatrix_representation needs 1 <= i <= n-1");
  double size = std::pow(static_cast<double>(op.w), n);
  if (size > 16384.0) throw std::invalid_argument("rmatrix_representation: w^n exceeds 2^14");
  return kron(kron(identity_pow(op.w, i - 1), op.R), identity_pow(op.w, n - i - 1));
}

InclusionData::InclusionData(std::vector<std::vector<long long>> rows) : g(std::move(rows)) {
  if (g.empty() || g.front().empty()) throw std::invalid_argument("inclusion matrix is empty");
  for (const auto& row : g) {
    if (row.size() != g.front().size())
      throw std::invalid_argument("inclusion matrix rows must have equal length");
    for (long long v : row)
      if (v < 0) throw std::invalid_argument("inclusion matrix entries must be nonnegative");
  }
}

std::vector<std::vector<long long>> bratteli_dims(const InclusionData& inc,
                                                  std::vector<long long> d0, int steps) {
  if (steps < 0) throw std::invalid_argument("bratteli_dims needs steps >= 0");
  std::vector<std::vector<long long>> out{std::move(d0)};
  for (int s = 0; s < steps; ++s) {
    const auto& d = out.back();
    if (static_cast<int>(d.size()) != inc.rows())
      throw std::invalid_argument("bratteli_dims: vector/matrix shape mismatch");
    std::vector<long long> next(inc.cols(), 0);
    for (int i = 0; i < inc.rows(); ++i)
      for (int j = 0; j < inc.cols(); ++j) next[j] += inc.g[i][j] * d[i];
    out.push_back(std::move(next));
  }
  return out;
}

FibNonlocalVerdict fib_nonlocal_certificate(int d, int n_max) {
  if (d < 1 || n_max < 2 || n_max > 30)
    throw std::invalid_argument("fib_nonlocal_certificate needs d >= 1, 2 <= n_max <= 30");
  FibNonlocalVerdict verdict;
  verdict.d = d;
  // f_0 = 0, f_1 = 1, …: dim V_{1,n} = f_{n-1}, dim V_{τ,n} = f_n.
  std::vector<long long> f{0, 1};
  for (int n = 2; n <= n_max + 1; ++n) f.push_back(f[n - 1] + f[n - 2]);
  long long dn = d;  // d^n while walking n upward
  for (int n = 2; n <= n_max; ++n) {
    const long long dprev = dn;
    dn *= d;
    // Multiplicity pairs a,b >= 1 with a·f_{n-1} + b·f_n = d^n.
    long long alive = 0, seen = 0;
    for (long long a = 1; a * f[n - 1] + f[n] <= dn; ++a) {
      const long long rem = dn - a * f[n - 1];
      if (rem % f[n] != 0) continue;
      const long long b = rem / f[n];
      ++seen;
      // Restriction to n-1 strands turns (a,b) into (b, a+b), which must
      // account for d^{n-1}; by G-symmetry it pairs to d^n instead.
      if (b * f[n - 2] + (a + b) * f[n - 1] == dprev) ++alive;
    }
    if (alive == 0) {
      verdict.nonlocalizable = true;
      verdict.contradiction_at = n;
      verdict.candidates = seen;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace braidforge
