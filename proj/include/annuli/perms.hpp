#pragma once
// Permutations of {0,...,n-1} in one-line (image vector) form, the two
// rotation permutations attached to the marked points of a column of annuli,
// and the boundary-walk permutation of a glued interface.

#include <string>
#include <vector>

namespace annuli {

class Permutation {
 public:
  Permutation() = default;
  // One-line notation: x maps to images[x].  Throws std::invalid_argument
  // unless images is a bijection on {0,...,n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Composition: (f * g)(x) = f(g(x)), i.e. g acts first.
Permutation operator*(const Permutation& f, const Permutation& g);

// tau_right(r, d) permutes the r*d right-hand marked points of A(l, r; d),
// acting on each block {k*r, ..., k*r + r - 1} by x -> x - 1 (mod r): each
// block is one cycle (kr, kr+r-1, ..., kr+1).  tau_left(l, d) is the same
// picture on the left-hand side, where the walk direction reverses, acting
// blockwise by x -> x + 1 (mod l).
Permutation tau_right(int r, int d);
Permutation tau_left(int l, int d);

// The permutation whose cycles are the boundary components produced at a
// glued interface: sigma^{-1} . tau_left(l_next, d_next) . sigma .
// tau_right(r_cur, d_cur), with tau_right acting first.  sigma must have
// degree r_cur * d_cur = l_next * d_next.
Permutation boundary_permutation(const Permutation& sigma, int l_next,
                                 int d_next, int r_cur, int d_cur);

// Cycles of p, fixed points included; each cycle starts at its minimum and
// cycles are sorted by that minimum.
std::vector<std::vector<int>> cycle_decomposition(const Permutation& p);

// "(0 13 8 7)(1 2)" style rendering of a cycle list.
std::string cycles_to_string(const std::vector<std::vector<int>>& cycles);

}  // namespace annuli
