#include "braidforge/simulate.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace braidforge {

namespace {

void check_job(const PlatJob& job) {
  if (job.braid.strands < 2 || job.braid.strands % 2 != 0)
    throw std::invalid_argument("plat job needs an even strand count >= 2");
  if (job.r < 3) throw std::invalid_argument("plat job needs r >= 3");
  if (!(job.epsilon > 0.0 && job.epsilon < 1.0))
    throw std::invalid_argument("plat job needs 0 < epsilon < 1");
  if (!(job.delta > 0.0 && job.delta < 1.0))
    throw std::invalid_argument("plat job needs 0 < delta < 1");
}

AnyonModel job_model(const PlatJob& job) {
  const int level = job.r - 2;
  return anyon_model(level, job.branch.value_or(default_branch(level)));
}

bool encoding_supported(const AnyonModel& m, int leaf) {
  return (m.k == 2 && leaf == 1) || (m.k == 3 && (leaf == 1 || leaf == 2));
}

// Parity of the chain label above internal slot j (the charge of the first
// j+2 leaves), which pins the low bit of the label.
int slot_parity(int leaf, int j) { return ((j + 2) * leaf) % 2; }

}  // namespace

Eigen::VectorXcd cup_state(const AnyonModel& m, int pairs) {
  if (pairs < 1) throw std::invalid_argument("cup_state needs at least one pair");
  const int n = 2 * pairs;
  std::vector<int> nested(n - 1);
  for (int j = 0; j < n - 1; ++j) nested[j] = j % 2;  // 0,1,0,…,0
  const auto basis = enumerate_trees(m, 1, n, 0);
  if (basis.empty()) throw std::invalid_argument("cup_state: empty fusion space");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.size());
  for (int t = 0; t < static_cast<int>(basis.size()); ++t) {
    if (basis[t].internal == nested) {
      v[t] = 1.0;
      return v;
    }
  }
  throw std::logic_error("cup_state: nested vacuum tree missing from basis");
}

Cx plat_amplitude(const PlatJob& job) {
  check_job(job);
  const AnyonModel m = job_model(job);
  const RepMatrices rep = braid_generator_matrices(m, 1, job.braid.strands, 0);
  const Eigen::VectorXcd cup = cup_state(m, job.braid.strands / 2);
  Eigen::VectorXcd v = cup;
  for (int letter : job.braid.letters) {
    if (letter > 0)
      v = rep.sigma[letter - 1] * v;
    else
      v = rep.sigma[-letter - 1].adjoint() * v;
  }
  return cup.dot(v);
}

ZEstimate estimate_Z(const PlatJob& job) {
  ZEstimate est;
  est.amplitude = plat_amplitude(job);
  est.p = std::min(1.0, std::norm(est.amplitude));
  est.samples = static_cast<long long>(
      std::ceil(std::log(2.0 / job.delta) / (2.0 * job.epsilon * job.epsilon)));
  std::mt19937_64 rng(job.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  long long hits = 0;
  for (long long s = 0; s < est.samples; ++s)
    if (unit(rng) < est.p) ++hits;
  est.z = static_cast<double>(hits) / static_cast<double>(est.samples);
  return est;
}

std::string encode_tree_bits(const AnyonModel& m, const FusionTree& t) {
  if (!encoding_supported(m, t.leaf))
    throw std::invalid_argument("encode_tree_bits: unsupported model/leaf");
  std::string bits(t.internal.size(), '0');
  for (size_t j = 0; j < t.internal.size(); ++j)
    if (t.internal[j] >= 2) bits[j] = '1';
  return bits;
}

std::optional<FusionTree> decode_tree_bits(const AnyonModel& m, int leaf, int n, int charge,
                                           const std::string& bits) {
  if (!encoding_supported(m, leaf))
    throw std::invalid_argument("decode_tree_bits: unsupported model/leaf");
  if (static_cast<int>(bits.size()) != n - 1)
    throw std::invalid_argument("decode_tree_bits: wrong bit width");
  FusionTree t;
  t.leaf = leaf;
  t.n = n;
  t.charge = charge;
  t.internal.resize(n - 1);
  int prev = leaf;
  for (int j = 0; j < n - 1; ++j) {
    if (bits[j] != '0' && bits[j] != '1')
      throw std::invalid_argument("decode_tree_bits: bits must be 0/1");
    const int label = slot_parity(leaf, j) + 2 * (bits[j] == '1');
    if (label > m.k || !admissible_triple(m, prev, leaf, label)) return std::nullopt;
    t.internal[j] = label;
    prev = label;
  }
  if (prev != charge) return std::nullopt;
  return t;
}

BitEncoding bit_encoding(const AnyonModel& m, int leaf, int n, int charge) {
  BitEncoding enc;
  enc.width = n - 1;
  const auto trees = enumerate_trees(m, leaf, n, charge);
  for (int t = 0; t < static_cast<int>(trees.size()); ++t) {
    enc.bits.push_back(encode_tree_bits(m, trees[t]));
    if (!enc.index.emplace(enc.bits.back(), t).second)
      throw std::logic_error("bit_encoding: collision on admissible trees");
  }
  return enc;
}

}  // namespace braidforge
