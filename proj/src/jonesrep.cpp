#include "braidforge/jonesrep.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

namespace braidforge {

namespace {

// Local recoupling data for a (x, a, a, z) block, cached per construction.
struct BlockData {
  ComplexMatrix f;
  std::vector<int> ns, ms;
};

class BlockCache {
 public:
  explicit BlockCache(const AnyonModel& m, int a) : model_(m), a_(a) {}

  const BlockData& get(int x, int z) {
    const auto key = std::make_pair(x, z);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      BlockData b;
      std::tie(b.ns, b.ms) = f_channels(model_, x, a_, a_, z);
      b.f = f_matrix(model_, x, a_, a_, z);
      it = cache_.emplace(key, std::move(b)).first;
    }
    return it->second;
  }

 private:
  const AnyonModel& model_;
  int a_;
  std::map<std::pair<int, int>, BlockData> cache_;
};

int channel_index(const std::vector<int>& channels, int value) {
  const auto it = std::find(channels.begin(), channels.end(), value);
  if (it == channels.end()) throw std::logic_error("fusion channel missing from list");
  return static_cast<int>(it - channels.begin());
}

// Shared frame for building one generator image: iterates columns (basis
// trees) and emits the slot-block amplitudes produced by `amps`.
template <class AmpFn>
ComplexMatrix build_generator(const std::vector<FusionTree>& basis,
                              const std::map<std::vector<int>, int>& index, int a, int g,
                              BlockCache& blocks, const AmpFn& amps) {
  const int dim = static_cast<int>(basis.size());
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (int t = 0; t < dim; ++t) {
    const auto& in = basis[t].internal;
    const int x = g == 2 ? a : in[g - 3];
    const int z = in[g - 1];
    const BlockData& b = blocks.get(x, z);
    const int mi = channel_index(b.ms, in[g - 2]);
    for (int mj = 0; mj < static_cast<int>(b.ms.size()); ++mj) {
      const Cx amp = amps(b, x, z, mj, mi);
      if (amp == Cx{}) continue;
      std::vector<int> target = in;
      target[g - 2] = b.ms[mj];
      out(index.at(target), t) += amp;
    }
  }
  return out;
}

std::map<std::vector<int>, int> basis_index(const std::vector<FusionTree>& basis) {
  std::map<std::vector<int>, int> index;
  for (int t = 0; t < static_cast<int>(basis.size()); ++t) index.emplace(basis[t].internal, t);
  return index;
}

std::string bucket_key(const ComplexMatrix& u, bool projective) {
  ComplexMatrix v = u;
  if (projective) {
    for (int i = 0; i < v.size(); ++i) {
      const Cx e = v.data()[i];
      if (std::abs(e) > 1e-6) {
        v *= std::conj(e) / std::abs(e);
        break;
      }
    }
  }
  std::ostringstream key;
  for (int i = 0; i < v.size(); ++i) {
    const Cx e = v.data()[i];
    key << std::llround(e.real() * 1e6) << ',' << std::llround(e.imag() * 1e6) << ';';
  }
  return key.str();
}

// True iff t has a continued-fraction convergent p/q, q ≤ qmax, within eps.
bool looks_rational(double t, long long qmax, double eps) {
  double x = std::abs(t);
  long long p0 = 1, q0 = 0, p1 = static_cast<long long>(std::floor(x)), q1 = 1;
  double frac = x - std::floor(x);
  for (int step = 0; step < 64; ++step) {
    if (q1 > qmax) return false;
    if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) < eps) return true;
    if (frac < 1e-15) return false;
    const double inv = 1.0 / frac;
    const double a = std::floor(inv);
    if (a > 4e18 / std::max<long long>(q1, 1)) return false;  // overflow guard
    const long long ai = static_cast<long long>(a);
    const long long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    frac = inv - a;
  }
  return false;
}

}  // namespace

std::vector<ComplexMatrix> tl_generator_matrices(const AnyonModel& m, int a, int n, int i) {
  const auto basis = enumerate_trees(m, a, n, i);
  if (basis.empty()) throw std::invalid_argument("tl_generator_matrices: empty fusion space");
  const auto index = basis_index(basis);
  const int dim = static_cast<int>(basis.size());
  const double da = quantum_dim(m, a);
  BlockCache blocks(m, a);
  std::vector<ComplexMatrix> out;
  for (int g = 1; g < n; ++g) {
    if (g == 1) {
      ComplexMatrix u1 = ComplexMatrix::Zero(dim, dim);
      for (int t = 0; t < dim; ++t)
        if (basis[t].internal[0] == 0) u1(t, t) = da;
      out.push_back(std::move(u1));
      continue;
    }
    out.push_back(build_generator(
        basis, index, a, g, blocks, [&](const BlockData& b, int x, int z, int mj, int mi) {
          if (x != z) return Cx{};  // no vacuum channel: the cup-cap kills the block
          return Cx(da) * b.f(0, mj) * b.f(0, mi);
        }));
  }
  return out;
}

RepMatrices braid_generator_matrices(const AnyonModel& m, int a, int n, int i) {
  RepMatrices rep;
  rep.model = m;
  rep.leaf = a;
  rep.n = n;
  rep.charge = i;
  rep.basis = enumerate_trees(m, a, n, i);
  if (rep.basis.empty()) throw std::invalid_argument("braid_generator_matrices: empty fusion space");
  const auto index = basis_index(rep.basis);
  const int dim = static_cast<int>(rep.basis.size());
  BlockCache blocks(m, a);
  for (int g = 1; g < n; ++g) {
    if (g == 1) {
      ComplexMatrix s1 = ComplexMatrix::Zero(dim, dim);
      for (int t = 0; t < dim; ++t) s1(t, t) = r_symbol(m, a, a, rep.basis[t].internal[0]);
      rep.sigma.push_back(std::move(s1));
      continue;
    }
    rep.sigma.push_back(build_generator(
        rep.basis, index, a, g, blocks, [&](const BlockData& b, int, int, int mj, int mi) {
          Cx amp{};
          for (int nn = 0; nn < static_cast<int>(b.ns.size()); ++nn)
            amp += std::conj(b.f(nn, mj)) * r_symbol(m, a, a, b.ns[nn]) * b.f(nn, mi);
          return amp;
        }));
  }
  return rep;
}

bool clifford_relations_check(int n) {
  if (n < 2 || n > 8) throw std::invalid_argument("clifford_relations_check supports 2 <= n <= 8");
  const AnyonModel m = anyon_model(2);
  const Cx iu(0.0, 1.0);
  const Cx scale = -1.0 / m.params.A;
  const double tol = 1e-9;
  for (int charge : m.labels()) {
    if (dim_space(m, 1, n, charge) == 0) continue;
    const RepMatrices rep = braid_generator_matrices(m, 1, n, charge);
    const int dim = static_cast<int>(rep.basis.size());
    const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
    std::vector<ComplexMatrix> g, g2;
    for (const auto& s : rep.sigma) {
      g.push_back(scale * s);
      g2.push_back(g.back() * g.back());
    }
    for (size_t i = 0; i < g.size(); ++i) {
      ComplexMatrix p = id;
      for (int e = 0; e < 16; ++e) p = p * g[i];
      if (max_abs(p - id) > tol) return false;
      for (size_t j : {i - 1, i + 1}) {
        if (j >= g.size()) continue;
        if (max_abs(g2[i] * g2[j] + g2[j] * g2[i]) > tol) return false;
        if (max_abs(g[i] * g2[j] * g[i].adjoint() - iu * g2[i] * g2[j]) > tol) return false;
      }
    }
  }
  return true;
}

GroupClosureReport closure_bfs(const std::vector<ComplexMatrix>& gens, long long bound,
                               double tol, bool projective) {
  if (bound < 1 || bound > 1000000) throw std::invalid_argument("closure_bfs bound out of range");
  GroupClosureReport report;
  report.generators = static_cast<int>(gens.size());
  report.bound = bound;
  report.projective = projective;
  report.tol = tol;
  if (gens.empty()) {
    report.finite = true;
    report.size = report.discovered = 0;
    return report;
  }
  const auto dim = gens.front().rows();
  std::vector<ComplexMatrix> step;
  for (const auto& u : gens) {
    if (u.rows() != dim || u.cols() != dim || unitarity_residual(u) > std::max(tol, 1e-9))
      throw std::invalid_argument("closure_bfs requires unitary generators of equal size");
    step.push_back(u);
    step.push_back(u.adjoint());
  }
  std::set<std::string> seen;
  std::deque<ComplexMatrix> frontier;
  const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
  seen.insert(bucket_key(id, projective));
  frontier.push_back(id);
  while (!frontier.empty()) {
    const ComplexMatrix cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : step) {
      ComplexMatrix next = cur * s;
      if (!seen.insert(bucket_key(next, projective)).second) continue;
      if (static_cast<long long>(seen.size()) > bound) {
        report.discovered = static_cast<long long>(seen.size());
        report.finite = false;
        return report;
      }
      frontier.push_back(std::move(next));
    }
  }
  report.discovered = static_cast<long long>(seen.size());
  report.finite = true;
  report.size = report.discovered;
  return report;
}

OrderVerdict infinite_order_evidence(const ComplexMatrix& u, long long max_order, double tol) {
  OrderVerdict v;
  const auto dim = u.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
  ComplexMatrix p = id;
  for (long long k = 1; k <= max_order; ++k) {
    p = p * u;
    if (max_abs(p - id) < tol) {
      v.order = k;
      return v;
    }
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> es(u);
  for (int j = 0; j < dim; ++j) {
    const double t = std::arg(es.eigenvalues()[j]) / std::numbers::pi;
    if (!looks_rational(t, 2 * max_order, 1e-11)) {
      v.irrational_phases = true;
      break;
    }
  }
  return v;
}

bool is_entangling(const ComplexMatrix& u, double tol) {
  if (u.rows() != 4 || u.cols() != 4) throw std::invalid_argument("is_entangling needs a 4x4 gate");
  if (unitarity_residual(u) > std::max(tol, 1e-9))
    throw std::invalid_argument("is_entangling requires a unitary input");
  const ComplexMatrix swap = gate_library().SWAP;
  auto schmidt_rank = [&](const ComplexMatrix& g) {
    ComplexMatrix r(4, 4);  // rows (i1,j1), cols (i2,j2) of g[(i1 i2),(j1 j2)]
    for (int i1 = 0; i1 < 2; ++i1)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int i2 = 0; i2 < 2; ++i2)
          for (int j2 = 0; j2 < 2; ++j2) r(2 * i1 + j1, 2 * i2 + j2) = g(2 * i1 + i2, 2 * j1 + j2);
    const auto sv = r.jacobiSvd().singularValues();
    int rank = 0;
    for (int s = 0; s < sv.size(); ++s)
      if (sv[s] > tol) ++rank;
    return rank;
  };
  return schmidt_rank(u) > 1 && schmidt_rank(swap * u) > 1;
}

GateLibrary gate_library() {
  GateLibrary lib;
  const double s = 1.0 / std::sqrt(2.0);
  lib.H = ComplexMatrix(2, 2);
  lib.H << s, s, s, -s;
  lib.T = ComplexMatrix(2, 2);
  lib.T << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4.0);
  lib.CNOT = ComplexMatrix(4, 4);
  lib.CNOT << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
  lib.SWAP = ComplexMatrix(4, 4);
  lib.SWAP << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
  return lib;
}

}  // namespace braidforge
