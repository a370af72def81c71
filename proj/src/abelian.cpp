#include "annuli/abelian.hpp"

#include <numeric>
#include <sstream>

namespace annuli {

namespace {

long long mod_reduce(long long v, long long m) {
  long long r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

FinAbGroup::FinAbGroup(std::vector<long long> factors)
    : factors_(std::move(factors)) {
  for (long long m : factors_) {
    if (m < 1) {
      throw std::invalid_argument("cyclic factor must be >= 1, got " +
                                  std::to_string(m));
    }
  }
}

long long FinAbGroup::order() const {
  long long n = 1;
  for (long long m : factors_) n *= m;
  return n;
}

Character::Character(FinAbGroup group, std::vector<long long> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (coords_.size() != group_.rank()) {
    throw std::invalid_argument("character has " +
                                std::to_string(coords_.size()) +
                                " coordinates on a rank-" +
                                std::to_string(group_.rank()) + " group");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] = mod_reduce(coords_[i], group_.factors()[i]);
  }
}

Character char_combine(const Character& a, const Character& b, long long s,
                       long long t) {
  if (a.group() != b.group()) {
    throw GroupMismatch("char_combine: characters live on different groups");
  }
  std::vector<long long> out(a.coords().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = s * a.coords()[i] + t * b.coords()[i];
  }
  return Character(a.group(), std::move(out));
}

long long char_order(const Character& a) {
  long long result = 1;
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    long long m = a.group().factors()[i];
    long long coord_order = m / std::gcd(m, a.coords()[i]);
    result = std::lcm(result, coord_order);
  }
  return result;
}

namespace {

// Mixed-radix index of a reduced coordinate vector; bijective with the group.
long long char_index(const Character& c) {
  long long idx = 0;
  for (std::size_t i = 0; i < c.coords().size(); ++i) {
    idx = idx * c.group().factors()[i] + c.coords()[i];
  }
  return idx;
}

}  // namespace

WeightSolution solve_weight_equation(const Character& target,
                                     const Character& alpha,
                                     const Character& beta, long long j_range,
                                     long long k_range) {
  if (alpha.group() != target.group() || beta.group() != target.group()) {
    throw GroupMismatch(
        "solve_weight_equation: characters live on different groups");
  }
  const long long n = target.group().order();
  if (j_range < 1 || k_range < 1 || j_range * k_range != n) {
    throw std::invalid_argument(
        "solve_weight_equation: j_range * k_range must equal the group order " +
        std::to_string(n));
  }

  // Enumerate every -j*alpha + k*beta once.  Seeing an index twice means the
  // map cannot be a bijection, which the callers treat as corrupt input.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  const long long target_idx = char_index(target);
  bool found = false;
  WeightSolution solution;
  for (long long j = 0; j < j_range; ++j) {
    for (long long k = 0; k < k_range; ++k) {
      long long idx = char_index(char_combine(alpha, beta, -j, k));
      if (seen[static_cast<std::size_t>(idx)]++) {
        throw NonUniqueSolution(
            "solve_weight_equation: (j,k) -> -j*alpha + k*beta is not "
            "injective on [0," +
            std::to_string(j_range) + ")x[0," + std::to_string(k_range) + ")");
      }
      if (idx == target_idx) {
        found = true;
        solution = {j, k};
      }
    }
  }
  if (!found) {
    throw NoSolution("solve_weight_equation: no (j,k) reaches " +
                     to_string(target));
  }
  return solution;
}

std::string to_string(const FinAbGroup& g) {
  std::ostringstream os;
  os << "Z";
  const char* sep = "/";
  for (long long m : g.factors()) {
    os << sep << m;
    sep = "xZ/";
  }
  if (g.rank() == 0) os << "/1";
  return os.str();
}

std::string to_string(const Character& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.coords().size(); ++i) {
    if (i) os << ",";
    os << c.coords()[i];
  }
  os << ")";
  return os.str();
}

}  // namespace annuli
