#include "braidforge/braid.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace braidforge {

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
  if (n < 1) throw std::invalid_argument("braid word needs at least one strand");
  for (int j : letters)
    if (j == 0 || std::abs(j) >= n)
      throw std::invalid_argument("braid letter " + std::to_string(j) +
                                  " out of range for " + std::to_string(n) + " strands");
}

BraidWord parse_braid(const std::string& text, int strands) {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed braid letter: '" + tok + "'");
    }
    if (used != tok.size() || v == 0)
      throw std::invalid_argument("malformed braid letter: '" + tok + "'");
    letters.push_back(v);
  }
  return BraidWord(strands, std::move(letters));
}

std::string braid_text(const BraidWord& b) {
  std::string out;
  for (size_t i = 0; i < b.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(b.letters[i]);
  }
  return out;
}

int writhe(const BraidWord& b) {
  int e = 0;
  for (int j : b.letters) e += (j > 0) ? 1 : -1;
  return e;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
  std::vector<int> ls = a.letters;
  ls.insert(ls.end(), b.letters.begin(), b.letters.end());
  return BraidWord(a.strands, std::move(ls));
}

BraidWord inverse(const BraidWord& b) {
  std::vector<int> ls(b.letters.rbegin(), b.letters.rend());
  for (int& j : ls) j = -j;
  return BraidWord(b.strands, std::move(ls));
}

BraidWord conjugate(const BraidWord& b, const BraidWord& g) {
  return concat(concat(g, b), inverse(g));
}

BraidWord stabilize(const BraidWord& b, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("stabilization sign must be ±1");
  std::vector<int> ls = b.letters;
  ls.push_back(sign * b.strands);
  return BraidWord(b.strands + 1, std::move(ls));
}

Permutation underlying_permutation(const BraidWord& b) {
  Permutation p(b.strands);
  for (int i = 0; i < b.strands; ++i) p[i] = i + 1;
  // Apply transpositions in letter order: the total is τ_k ∘ … ∘ τ_1, which
  // matches the product of permutation matrices in the word-order convention.
  for (int j : b.letters) {
    const int a = std::abs(j);
    for (int& v : p) {
      if (v == a) v = a + 1;
      else if (v == a + 1) v = a;
    }
  }
  return p;
}

Permutation perm_mul(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i] - 1];
  return r;
}

ComplexMatrix perm_matrix(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, p[i] - 1) = 1.0;
  return m;
}

BraidWord random_markov_walk(const BraidWord& b, int steps, std::uint64_t rng_seed) {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  std::mt19937_64 rng(rng_seed);
  BraidWord cur = b;
  constexpr int kMaxStrands = 8;
  for (int s = 0; s < steps; ++s) {
    std::uniform_int_distribution<int> move(0, 2);
    int m = move(rng);
    if (m == 1 && cur.strands >= kMaxStrands) m = 0;
    if (m == 2) {
      // Destabilize only when the top generator occurs exactly once.
      const int top = cur.strands - 1;
      int count = 0, pos = -1;
      for (size_t i = 0; i < cur.letters.size(); ++i)
        if (std::abs(cur.letters[i]) == top) {
          ++count;
          pos = static_cast<int>(i);
        }
      if (top >= 1 && count == 1) {
        // Rotate cyclically (a conjugation) so ±top is last, then drop it.
        std::vector<int> ls;
        const int len = static_cast<int>(cur.letters.size());
        for (int i = 1; i <= len - 1; ++i) ls.push_back(cur.letters[(pos + i) % len]);
        cur = BraidWord(cur.strands - 1, std::move(ls));
        continue;
      }
      m = 0;
    }
    if (m == 1) {
      std::uniform_int_distribution<int> sign(0, 1);
      cur = stabilize(cur, sign(rng) ? 1 : -1);
    } else {
      if (cur.strands < 2) continue;  // B_1 has nothing to conjugate by
      std::uniform_int_distribution<int> gen(1, cur.strands - 1);
      std::uniform_int_distribution<int> sign(0, 1);
      const int g = (sign(rng) ? 1 : -1) * gen(rng);
      cur = conjugate(cur, BraidWord(cur.strands, {g}));
    }
  }
  return cur;
}

}  // namespace braidforge
