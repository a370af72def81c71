#pragma once
// Two-variable invertible polynomials: loop x^p y + x y^q, chain x^p y + y^q,
// and Brieskorn-Pham x^p + y^q.  Provides the transpose, weight systems,
// admissible symmetry indices ell, the associated stacky curve with its
// gerbe data, and the closed-form surface invariants those curves must
// reproduce.

#include <string>
#include <utility>
#include <vector>

#include "annuli/bside.hpp"

namespace annuli {

enum class PolyKind { Loop, Chain, Bp };

struct InvertiblePoly {
  PolyKind kind = PolyKind::Bp;
  long long p = 2;
  long long q = 2;
  // Chain only: marks the transposed presentation x^p + x y^q.  Curve and
  // invariant constructions treat it as the standard chain(q, p) obtained by
  // swapping the variables.
  bool transposed = false;

  bool operator==(const InvertiblePoly&) const = default;
};

InvertiblePoly make_loop(long long p, long long q);  // requires p >= q >= 2
InvertiblePoly make_chain(long long p, long long q);
InvertiblePoly make_bp(long long p, long long q);

// "loop:p,q" | "chain:p,q" | "bp:p,q" (throws std::invalid_argument).
InvertiblePoly parse_poly(const std::string& text);
std::string to_string(const InvertiblePoly& w);
std::string monomial_string(const InvertiblePoly& w);  // e.g. "x^2*y + y^3"

// Berglund-Hubsch transpose (exponent-matrix transpose): loop and bp are
// fixed; chain flips orientation.
InvertiblePoly transpose(const InvertiblePoly& w);

struct WeightSystem {
  long long d0 = 0;  // h - d1 - d2
  long long d1 = 0;
  long long d2 = 0;
  long long h = 0;
  bool operator==(const WeightSystem&) const = default;
};

// The primitive positive weights with w(t^{d1} x, t^{d2} y) = t^h w(x, y).
WeightSystem weight_system(const InvertiblePoly& w);

// d(w): the maximal symmetry index.  gcd(p-1, q-1) for loop, gcd(p, q-1)
// for chain, gcd(p, q) for bp.
long long max_index(const InvertiblePoly& w);

// Divisors of max_index(w), ascending.
std::vector<long long> admissible_indices(const InvertiblePoly& w);
bool is_admissible(const InvertiblePoly& w, long long ell);

// Canonical Bezout pair (m, n) with m(p-1) + n(q-1) = gcd(p-1, q-1) and
// 0 <= n < (p-1)/gcd(p-1, q-1), used for the loop node of highest isotropy.
std::pair<long long, long long> canonical_bezout(long long p, long long q);

// The loop curve with an explicit Bezout pair (the choice only re-identifies
// the gerbe; invariants are unaffected, which tests verify).
StackyCurveSpec loop_curve_with_bezout(long long p, long long q, long long ell,
                                       long long m, long long n);

// The stacky curve mirror to the Milnor fibre quotient at index ell.
// Throws std::invalid_argument for inadmissible ell and for bp(2,2).
StackyCurveSpec bside_curve(const InvertiblePoly& w, long long ell);

struct ClosedFormInvariants {
  long long euler = 0;
  long long b = 0;
  long long genus = 0;
  std::vector<std::pair<long long, long long>> windings;  // (winding, count)
  bool operator==(const ClosedFormInvariants&) const = default;
};

ClosedFormInvariants closed_form_invariants(const InvertiblePoly& w,
                                            long long ell);

// 1 - euler: the first Betti number of the (connected) mirror surface.
long long mirror_rank_h1(const InvertiblePoly& w, long long ell);

}  // namespace annuli
