#pragma once

// Braid words on n strands, Markov moves, writhe, and the permutation
// quotient. Letter j (nonzero, |j| < n) means σ_{|j|}^{sign(j)}.
//
// Composition convention, pinned by the Burau regression tests: the image of
// a word under any representation is the product of generator images in the
// order the letters are written, matrix_of(w1 w2 ... wk) = M(w1)·M(w2)···M(wk).

#include <string>
#include <vector>

#include "braidforge/ring.hpp"

namespace braidforge {

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls);  // validates |letter| in [1, n-1]

  bool operator==(const BraidWord& o) const = default;
};

// images[i-1] = p(i), a bijection on {1..n}.
using Permutation = std::vector<int>;

BraidWord parse_braid(const std::string& text, int strands);
std::string braid_text(const BraidWord& b);

int writhe(const BraidWord& b);
BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& b);
BraidWord conjugate(const BraidWord& b, const BraidWord& g);  // g·b·g^{-1}
BraidWord stabilize(const BraidWord& b, int sign);            // appends ±n on n+1 strands

Permutation underlying_permutation(const BraidWord& b);
Permutation perm_mul(const Permutation& p, const Permutation& q);  // p then q
ComplexMatrix perm_matrix(const Permutation& p);  // entry (i, p(i)) = 1

// Seeded random sequence of conjugations, stabilizations and (when the top
// generator occurs exactly once) destabilizations; closure-preserving.
BraidWord random_markov_walk(const BraidWord& b, int steps, std::uint64_t rng_seed);

}  // namespace braidforge
