#pragma once
// Cycles and chains of stacky projective lines with gerbe data.  Each node
// carries a finite abelian isotropy group H and four characters: chi_r/chi_d
// for the component on its plus side and for the component on its minus
// side.  From these the module derives the gluing permutations, the mirror
// glued-surface spec, and the exceptional-collection quiver, which matches
// the surface's generating quiver under a fixed label dictionary.

#include <map>
#include <string>
#include <vector>

#include "annuli/abelian.hpp"
#include "annuli/perms.hpp"
#include "annuli/quiver.hpp"
#include "annuli/surface.hpp"

namespace annuli {

struct NodeData {
  FinAbGroup group;
  Character chi_r_plus;   // O(-q_{i,+}) fibre weight on component i
  Character chi_d_plus;   // gerbe twist weight on component i
  Character chi_r_minus;  // O(-q_{i+1,-}) fibre weight on component i+1
  Character chi_d_minus;  // gerbe twist weight on component i+1
};

enum class Shape { Cycle, Chain };

struct CurveComponent {
  long long r_minus = 0;
  long long r_plus = 0;
  long long d = 1;
};

struct StackyCurveSpec {
  Shape shape = Shape::Cycle;
  std::vector<CurveComponent> components;
  std::vector<NodeData> nodes;  // n for cycle, n-1 for chain; node i joins
                                // the plus side of component i to the minus
                                // side of component i+1 (mod n)
};

struct CurveError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The plus-side orbifold order r and gerbe degree d encoded in a node:
// r = char_order(chi_r_plus), d = |H| / r, and symmetrically for minus.
long long node_r_plus(const NodeData& node);
long long node_d_plus(const NodeData& node);
long long node_r_minus(const NodeData& node);
long long node_d_minus(const NodeData& node);

// Size/order/bijectivity consistency of every node against the component
// list; throws CurveError naming the offending node.
void validate_curve(const StackyCurveSpec& curve);

// Characters of H in stop order: position k*r_plus + m holds
// k*chi_d_plus - m*chi_r_plus.  Pairwise distinct by the node invariants.
std::vector<Character> stop_labels(const NodeData& node);

// The gluing permutation on |H| points: stop s with label chi goes to
// k_minus*r_minus + ((-j) mod r_minus) where (j, k_minus) solves
// -j*chi_r_minus + k*chi_d_minus = chi.
Permutation derive_gluing_permutation(const NodeData& node);

// Columns A(r_{i,-}, r_{i,+}; d_i) glued by the derived permutations;
// circular for a cycle, linear for a chain.
GluedSurfaceSpec mirror_surface_spec(const StackyCurveSpec& curve);

// Endomorphism quiver of the fixed exceptional collection (j_i = 0,
// m_i = -1).  Vertex labels:
//   BP(i,j,-1,k) for 0 <= j <= r_{i,-}, BP(i,0,m,k) for -1 <= m < r_{i,+}
//   (the corner BP(i,0,-1,k) shared), and BS(i,(c...)) per character of H_i.
Quiver exceptional_quiver(const StackyCurveSpec& curve);

// The vertex dictionary from exceptional_quiver labels to
// generating_quiver labels; total on the former.
std::map<std::string, std::string> vertex_dictionary(
    const StackyCurveSpec& curve);

}  // namespace annuli
