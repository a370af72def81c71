#pragma once
// Quivers with monomial length-2 relations, stored with string vertex labels
// so that the surface-side and curve-side constructions can be compared
// through an explicit label dictionary.  Includes the generating-collection
// quiver of a glued surface and the gentle-algebra axiom check.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "annuli/surface.hpp"

namespace annuli {

struct Arrow {
  char kind = '?';  // 'x', 'y' (chain arrows), 'a', 'b' (strip arrows)
  std::string src;
  std::string dst;
  auto operator<=>(const Arrow&) const = default;
};

// (first, second) encodes the vanishing composition second . first = 0.
using Relation = std::pair<Arrow, Arrow>;

struct Quiver {
  std::vector<std::string> vertices;  // sorted, unique
  std::vector<Arrow> arrows;          // sorted, unique
  std::vector<Relation> relations;    // sorted, unique

  bool operator==(const Quiver&) const = default;
};

// Sorts/uniques all three member lists and checks arrow endpoints exist and
// relation pairs are head-to-tail composable; throws std::invalid_argument.
void canonicalize(Quiver& q);

// Vertex labels used by the surface side:
//   P0(i,k)      the identified pair at chain position 0 of annulus (i,k)
//   P-(i,j,k)    left chain, 1 <= j <= l_i
//   P+(i,m,k)    right chain, 1 <= m <= r_i
//   S(i,j)       the strip glued at right stop j of interface i
std::string p_zero_label(int i, int k);
std::string p_minus_label(int i, long long j, int k);  // j = 0 gives P0
std::string p_plus_label(int i, long long m, int k);   // m = 0 gives P0
std::string strip_label(int i, long long j);

// The quiver of the generating collection of a glued surface: per annulus a
// P0 vertex with an x-chain of length l and a y-chain of length r, per strip
// an S vertex with arrows a (to the right stop's wrap position) and b (to
// the left stop's), and relations ya = 0, xb = 0 whenever composable.
Quiver generating_quiver(const GluedSurfaceSpec& spec);

struct GentleReport {
  bool gentle = false;
  std::string certificate;  // first violated axiom, empty when gentle
};

GentleReport is_gentle(const Quiver& q);

// True iff dictionary (total on q1's vertices) induces a bijection
// vertices -> vertices matching arrows kind-for-kind and relations exactly.
bool quiver_equal(const Quiver& q1, const Quiver& q2,
                  const std::map<std::string, std::string>& dictionary);

std::string to_dot(const Quiver& q);

}  // namespace annuli
