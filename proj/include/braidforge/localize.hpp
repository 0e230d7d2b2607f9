#pragma once

// Yang-Baxter operators and the braid representations they generate by
// Kronecker placement; the explicit localizing R-matrices at levels 2 and 4;
// inclusion-matrix dimension iteration for Bratteli towers; and the
// integrality certificate showing the Fibonacci tower admits no such
// realization.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "braidforge/ring.hpp"

namespace braidforge {

struct YBOperator {
  int w = 0;                  // local dimension; R acts on C^w ⊗ C^w
  ComplexMatrix R;
  double ybe_residual = 0.0;  // recorded at construction
};

// Validates the size and invertibility of r and records its YBE residual.
YBOperator make_yb_operator(int w, ComplexMatrix r);

// Operator-norm residual of (R⊗I)(I⊗R)(R⊗I) − (I⊗R)(R⊗I)(I⊗R) on w³.
double check_ybe(const ComplexMatrix& r, int w);
double check_ybe(const YBOperator& op);

// The one-parameter 4×4 family with entries a, a⁻¹ and a − a⁻³ (baxterized
// Temperley-Lieb); a solution for every a ≠ 0, unitary exactly when a⁴ = 1.
YBOperator family_R(Cx a);
bool unitarity_boundary(Cx a, double tol = 1e-9);

// Level-2 localizer: (−e^{−iπ/4}/√2)·[[1,0,0,1],[0,1,−1,0],[0,1,1,0],[−1,0,0,1]].
YBOperator ising_localization();

// Level-4 localizer on w=3, loaded from the embedded fixture; throws if the
// fixture digest or the pattern/value consistency check fails.
YBOperator level4_localization();

// FNV-1a 64-bit digest of the fixture's concatenated symbol rows, as a hex
// string; pinned in tests against the value stored in the fixture.
std::uint64_t fnv1a64(std::string_view bytes);
std::string level4_fixture_digest();

// ρ_R(σ_i) = I^{⊗ i−1} ⊗ R ⊗ I^{⊗ n−i−1} on (C^w)^{⊗ n}; capped at wⁿ ≤ 2¹⁴.
ComplexMatrix rmatrix_representation(const YBOperator& op, int n, int i);

struct InclusionData {
  std::vector<std::vector<long long>> g;  // nonnegative inclusion matrix, row-major
  InclusionData(std::vector<std::vector<long long>> rows);  // validates shape
  int rows() const { return static_cast<int>(g.size()); }
  int cols() const { return g.empty() ? 0 : static_cast<int>(g.front().size()); }
};

// Iterated dimension vectors d_{k+1} = Gᵀ d_k, returned as [d₀, d₁, …, d_steps].
std::vector<std::vector<long long>> bratteli_dims(const InclusionData& inc,
                                                  std::vector<long long> d0, int steps);

struct FibNonlocalVerdict {
  int d = 0;
  bool nonlocalizable = false;
  int contradiction_at = 0;       // first n where every multiplicity pair dies
  long long candidates = 0;       // pairs (a,b) examined at that n
};

// Machine-checked instance of the Fibonacci impossibility argument: a local
// realization on a d-dimensional space forces multiplicities a,b ≥ 1 with
// a·f_{n−1} + b·f_n = dⁿ whose restriction (b, a+b) must account for d^{n−1},
// yet pairs against (f_{n−2}, f_{n−1}) to dⁿ — each candidate is refuted.
FibNonlocalVerdict fib_nonlocal_certificate(int d, int n_max);

}  // namespace braidforge
