#pragma once

// Level-k Temperley-Lieb-Jones anyon models: labels and fusion rules,
// quantum dimensions, fusion-tree spaces, and the theta/R/F symbol calculus,
// with the closed networks evaluated diagrammatically through Jones-Wenzl
// projectors from `templieb`.

#include <string>
#include <utility>
#include <vector>

#include "braidforge/ring.hpp"
#include "braidforge/templieb.hpp"

namespace braidforge {

struct AnyonModel {
  UnitaryParams params;  // r = k + 2
  int k = 0;             // level; labels are 0..k

  std::vector<int> labels() const;
  std::string label_name(int a) const;  // "1","sigma","psi","tau", else digits
};

// Level 3 defaults to branch A2 (the phase choices for Fibonacci R-symbols
// live at that root); every other level defaults to A1.
Branch default_branch(int level);
AnyonModel anyon_model(int level, Branch branch);
AnyonModel anyon_model(int level);

// A triple is admissible iff a+b+c is even, the triangle inequalities hold,
// and a+b+c <= 2k. Labels must lie in 0..k.
bool admissible_triple(const AnyonModel& m, int a, int b, int c);
std::vector<int> fusion_product(const AnyonModel& m, int a, int b);  // ascending
double quantum_dim(const AnyonModel& m, int a);  // [a+1]_q > 0 at the root

// Fusion tree with a uniform leaf coloring a^{⊗n}: internal labels
// x_1..x_{n-1} with x_1 ∈ a⊗a, every (x_{j-1}, a, x_j) admissible, and root
// charge x_{n-1} = i. For n = 1 the tree is a bare leaf and i must equal a.
struct FusionTree {
  int leaf = 0;
  int n = 0;
  int charge = 0;
  std::vector<int> internal;  // x_1..x_{n-1}

  bool operator==(const FusionTree& o) const = default;
};

// All trees in lexicographic order of the internal sequence; dim_space counts
// them by transfer over admissibility.
std::vector<FusionTree> enumerate_trees(const AnyonModel& m, int a, int n, int i);
long long dim_space(const AnyonModel& m, int a, int n, int i);

// θ(a,b,c) = ⟨e^{ab}_c, e^{ab}_c⟩: the two-vertex bubble, evaluated by
// expanding Jones-Wenzl projectors over Q(d) and tracing; memoized on
// (a,b,c). Requires a+b+c even with triangle inequalities; desk cap
// a+b+c <= 12.
RationalFunction theta_symbol(int a, int b, int c);
double theta_value(const AnyonModel& m, int a, int b, int c);

// R_c^{ab} = (-1)^{(a+b-c)/2} A^{-[a(a+2)+b(b+2)-c(c+2)]/2}; unimodular.
Cx r_symbol(const AnyonModel& m, int a, int b, int c);

// Channel lists for the recoupling e^{(ab)c}_{d,m} = Σ_n F_{nm} e^{a(bc)}_{d,n}:
// first the n-side ((b,c,n) and (a,n,d) admissible), then the m-side
// ((a,b,m) and (m,c,d) admissible), each ascending.
std::pair<std::vector<int>, std::vector<int>> f_channels(const AnyonModel& m, int a, int b,
                                                         int c, int d);

// F^{abc}_d in the unitary gauge, rows n / columns m over f_channels order:
// the defining relation is closed against each dual basis tree, the resulting
// linear system of theta-network values is solved exactly in Q(d), and the
// basis trees are normalized at the root. 1x1 spaces are gauge-fixed to +1;
// dimension > 2 throws.
ComplexMatrix f_matrix(const AnyonModel& m, int a, int b, int c, int d);

}  // namespace braidforge
