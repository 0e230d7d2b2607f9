#pragma once

// Jones representations of braid groups on fusion-tree bases: images of the
// Temperley-Lieb generators and the braid generators built from local R/F
// data, plus image-analysis helpers (group closure search, element-order
// evidence) and the small quantum-gate library.

#include <vector>

#include "braidforge/anyon.hpp"
#include "braidforge/ring.hpp"

namespace braidforge {

// Images of u_1..u_{n-1} on the enumerate_trees basis: U_i = d_a times the
// rank-one projection onto the local vacuum channel, with off-diagonal
// structure given by the vacuum row of the local F-matrix. Satisfies the TL
// relations U_i^2 = d_a U_i, U_i U_{i±1} U_i = U_i, far commutativity.
std::vector<ComplexMatrix> tl_generator_matrices(const AnyonModel& m, int a, int n, int i);

struct RepMatrices {
  AnyonModel model;
  int leaf = 0, n = 0, charge = 0;
  std::vector<FusionTree> basis;      // enumerate_trees order
  std::vector<ComplexMatrix> sigma;   // images of σ_1..σ_{n-1}
};

// σ_1 acts diagonally by R^{aa}_{x_1}; σ_i for i ≥ 2 acts on the slot x_{i-1}
// by F̂† diag(R^{aa}_n) F̂ within each (x_{i-2}, x_i) block.
RepMatrices braid_generator_matrices(const AnyonModel& m, int a, int n, int i);

// Level-2 Clifford-algebra identities for g_i = -A^{-1} ρ(σ_i) on every
// charge sector of n strands (leaf σ): g_i²g_{i+1}² + g_{i+1}²g_i² = 0,
// g_i g_{i±1}² g_i^{-1} = √-1 g_i² g_{i±1}², and g_i^16 = 1, all to 1e-9.
bool clifford_relations_check(int n);

struct GroupClosureReport {
  int generators = 0;
  long long discovered = 0;
  bool finite = false;
  long long size = 0;  // discovered count when finite
  long long bound = 0;
  bool projective = false;
  double tol = 0.0;
};

// Breadth-first closure of the group generated by `gens` (and their
// adjoints) under multiplication, deduplicated by rounding entries to six
// decimals -- after a global-phase normalization when projective (first
// entry of modulus > 1e-6 made positive real). Deterministic given generator
// order. Throws on non-unitary input.
GroupClosureReport closure_bfs(const std::vector<ComplexMatrix>& gens, long long bound,
                               double tol, bool projective);

struct OrderVerdict {
  long long order = 0;              // smallest k ≤ max_order with U^k = I, else 0
  bool irrational_phases = false;   // continued-fraction evidence on eigenphases/π
  bool infinite_evidence() const { return order == 0 && irrational_phases; }
};

// Numerical evidence (not proof) that U has infinite order: no power up to
// max_order returns to the identity, and some eigenvalue argument divided by
// π admits no convergent p/q with q ≤ 2·max_order within 1e-11.
OrderVerdict infinite_order_evidence(const ComplexMatrix& u, long long max_order, double tol);

// Operator-Schmidt test on a two-qubit gate: true iff both U and SWAP·U have
// realignment rank > 1 at tolerance tol (neither is a product, with or
// without a qubit exchange).
bool is_entangling(const ComplexMatrix& u, double tol);

struct GateLibrary {
  ComplexMatrix H, T, CNOT, SWAP;
};
GateLibrary gate_library();

}  // namespace braidforge
