#pragma once

// Plat-closure simulation: cup states on fusion-tree bases, braid-image
// amplitudes, the sampled additive approximation of the normalized bracket
// evaluation, and bitstring encodings of fusion trees.

#include <cstdint>
#include <optional>
#include <map>
#include <string>
#include <vector>

#include "braidforge/anyon.hpp"
#include "braidforge/braid.hpp"
#include "braidforge/jonesrep.hpp"

namespace braidforge {

struct PlatJob {
  BraidWord braid;                  // strand count must be even
  int r = 5;
  std::optional<Branch> branch;     // defaults to default_branch(r - 2)
  double epsilon = 0.01;            // target additive error
  double delta = 0.01;              // failure probability
  std::uint64_t seed = 0;
};

// The charge-0 basis vector on 2·pairs strands whose internal labels realize
// nested vacuum pairs (1,2)(3,4)…, i.e. the alternating chain 0,1,0,…,0.
Eigen::VectorXcd cup_state(const AnyonModel& m, int pairs);

// ⟨cap|ρ(b)|cup⟩ on the fundamental leaf. Contract with the diagram side:
// amplitude · d^m equals the plat bracket of the word evaluated at A.
Cx plat_amplitude(const PlatJob& job);

struct ZEstimate {
  Cx amplitude;
  double p = 0.0;       // |amplitude|²
  double z = 0.0;       // sample mean of the simulated measurement
  long long samples = 0;
};

// Simulates the measurement: draws ⌈ln(2/δ)/(2ε²)⌉ Bernoulli(p) samples from
// the job's seeded generator; |z − p| < ε with probability ≥ 1 − δ.
ZEstimate estimate_Z(const PlatJob& job);

// One bit per internal label, '1' iff the label is ≥ 2. Injective on each
// admissible set for the supported encodings: level 2 leaf 1, level 3 leaf 1
// or τ. decode reconstructs the label chain (slot parity fixes the low bit)
// and returns nullopt for bitstrings outside the admissible set.
std::string encode_tree_bits(const AnyonModel& m, const FusionTree& t);
std::optional<FusionTree> decode_tree_bits(const AnyonModel& m, int leaf, int n, int charge,
                                           const std::string& bits);

struct BitEncoding {
  int width = 0;                        // bits per tree = n - 1
  std::vector<std::string> bits;        // enumerate_trees order
  std::map<std::string, int> index;     // inverse map, validated injective
};
BitEncoding bit_encoding(const AnyonModel& m, int leaf, int n, int charge);

}  // namespace braidforge
