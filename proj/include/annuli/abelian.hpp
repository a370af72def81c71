#pragma once
// Finite abelian groups presented as products of cyclic groups, their
// characters (identified with coordinate vectors), and the exhaustive solver
// for the weight equation -j*alpha + k*beta = target that drives the gluing
// derivation on the curve side.  Everything is exact integer arithmetic.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace annuli {

struct GroupMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonUniqueSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Z/m1 x ... x Z/ms, factors in fixed order.  Factors equal to 1 are legal
// (they contribute a forced-zero coordinate) and are kept, so that groups
// compare equal only when their presentations match.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<long long> factors);

  const std::vector<long long>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  long long order() const;

  bool operator==(const FinAbGroup&) const = default;

 private:
  std::vector<long long> factors_;
};

// A character of H = prod Z/mi, stored as its coordinate vector
// (a1,...,as) with 0 <= ai < mi; the character sends the i-th generator to
// exp(2*pi*sqrt(-1)*ai/mi).  Pairing characters with elements never comes up
// downstream, so the coordinate vector is the whole story.
class Character {
 public:
  Character() = default;
  Character(FinAbGroup group, std::vector<long long> coords);

  const FinAbGroup& group() const { return group_; }
  const std::vector<long long>& coords() const { return coords_; }

  bool operator==(const Character&) const = default;

 private:
  FinAbGroup group_;
  std::vector<long long> coords_;  // reduced into [0, mi)
};

// s*a + t*b, coordinatewise mod the factors.  Throws GroupMismatch unless
// a and b live on the same group.
Character char_combine(const Character& a, const Character& b, long long s,
                       long long t);

// Order of a in the character group: lcm over i of mi / gcd(mi, ai).
long long char_order(const Character& a);

struct WeightSolution {
  long long j = 0;
  long long k = 0;
  bool operator==(const WeightSolution&) const = default;
};

// The unique (j, k) in [0, j_range) x [0, k_range) with
// -j*alpha + k*beta = target.  Requires j_range * k_range = |H|; the full
// map (j, k) -> -j*alpha + k*beta is checked to be a bijection onto the
// character group by enumeration, so NoSolution / NonUniqueSolution both
// signal inconsistent input data rather than a search shortfall.
WeightSolution solve_weight_equation(const Character& target,
                                     const Character& alpha,
                                     const Character& beta, long long j_range,
                                     long long k_range);

std::string to_string(const FinAbGroup& g);
std::string to_string(const Character& c);

}  // namespace annuli
