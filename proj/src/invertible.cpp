#include "annuli/invertible.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace annuli {

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

long long checked_div(long long a, long long b) {
  if (b == 0 || a % b != 0) {
    throw std::logic_error("expected exact division: " + std::to_string(a) +
                           " / " + std::to_string(b));
  }
  return a / b;
}

// Standard-orientation view: the transposed chain x^p + x y^q is the chain
// y^q x + x^p, i.e. chain(q, p) after swapping variables.
InvertiblePoly standard_form(const InvertiblePoly& w) {
  if (w.kind == PolyKind::Chain && w.transposed) {
    return make_chain(w.q, w.p);
  }
  return w;
}

// g = gcd(a, b) together with x, y such that a*x + b*y = g.
struct Egcd {
  long long g, x, y;
};
Egcd egcd(long long a, long long b) {
  if (b == 0) return {a, 1, 0};
  const Egcd e = egcd(b, a % b);
  return {e.g, e.y, e.x - (a / b) * e.y};
}

}  // namespace

InvertiblePoly make_loop(long long p, long long q) {
  require(q >= 2 && p >= q, "loop requires p >= q >= 2, got p = " +
                                std::to_string(p) + ", q = " +
                                std::to_string(q));
  return {PolyKind::Loop, p, q, false};
}

InvertiblePoly make_chain(long long p, long long q) {
  require(p >= 2 && q >= 2, "chain requires p, q >= 2");
  return {PolyKind::Chain, p, q, false};
}

InvertiblePoly make_bp(long long p, long long q) {
  require(p >= 2 && q >= 2, "bp requires p, q >= 2");
  return {PolyKind::Bp, p, q, false};
}

InvertiblePoly parse_poly(const std::string& text) {
  const auto colon = text.find(':');
  require(colon != std::string::npos,
          "polynomial spec must look like kind:p,q, got \"" + text + "\"");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  const auto comma = rest.find(',');
  require(comma != std::string::npos,
          "polynomial spec must look like kind:p,q, got \"" + text + "\"");
  long long p = 0, q = 0;
  try {
    std::size_t used = 0;
    p = std::stoll(rest.substr(0, comma), &used);
    require(used == comma, "bad exponent in \"" + text + "\"");
    q = std::stoll(rest.substr(comma + 1), &used);
    require(used == rest.size() - comma - 1, "bad exponent in \"" + text + "\"");
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad exponent in \"" + text + "\"");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("exponent out of range in \"" + text + "\"");
  }
  if (kind == "loop") return make_loop(p, q);
  if (kind == "chain") return make_chain(p, q);
  if (kind == "bp") return make_bp(p, q);
  throw std::invalid_argument("unknown polynomial kind \"" + kind + "\"");
}

std::string to_string(const InvertiblePoly& w) {
  std::string kind;
  switch (w.kind) {
    case PolyKind::Loop: kind = "loop"; break;
    case PolyKind::Chain: kind = "chain"; break;
    case PolyKind::Bp: kind = "bp"; break;
  }
  std::string out =
      kind + ":" + std::to_string(w.p) + "," + std::to_string(w.q);
  if (w.transposed) out += " (transposed)";
  return out;
}

std::string monomial_string(const InvertiblePoly& w) {
  const std::string xp = "x^" + std::to_string(w.p);
  const std::string yq = "y^" + std::to_string(w.q);
  switch (w.kind) {
    case PolyKind::Loop: return xp + "*y + x*" + yq;
    case PolyKind::Chain:
      return w.transposed ? xp + " + x*" + yq : xp + "*y + " + yq;
    case PolyKind::Bp: return xp + " + " + yq;
  }
  return {};
}

InvertiblePoly transpose(const InvertiblePoly& w) {
  InvertiblePoly t = w;
  if (w.kind == PolyKind::Chain) t.transposed = !w.transposed;
  return t;
}

WeightSystem weight_system(const InvertiblePoly& w) {
  long long d1 = 0, d2 = 0, h = 0;
  switch (w.kind) {
    case PolyKind::Loop: {
      const long long g = std::gcd(w.p - 1, w.q - 1);
      d1 = (w.q - 1) / g;
      d2 = (w.p - 1) / g;
      h = (w.p * w.q - 1) / g;
      break;
    }
    case PolyKind::Chain: {
      if (!w.transposed) {
        const long long g = std::gcd(w.p, w.q - 1);
        d1 = (w.q - 1) / g;
        d2 = w.p / g;
        h = w.p * w.q / g;
      } else {
        const long long g = std::gcd(w.q, w.p - 1);
        d1 = w.q / g;
        d2 = (w.p - 1) / g;
        h = w.p * w.q / g;
      }
      break;
    }
    case PolyKind::Bp: {
      const long long g = std::gcd(w.p, w.q);
      d1 = w.q / g;
      d2 = w.p / g;
      h = w.p * w.q / g;
      break;
    }
  }
  return {h - d1 - d2, d1, d2, h};
}

long long max_index(const InvertiblePoly& w) {
  const InvertiblePoly s = standard_form(w);
  switch (s.kind) {
    case PolyKind::Loop: return std::gcd(s.p - 1, s.q - 1);
    case PolyKind::Chain: return std::gcd(s.p, s.q - 1);
    case PolyKind::Bp: return std::gcd(s.p, s.q);
  }
  return 1;
}

std::vector<long long> admissible_indices(const InvertiblePoly& w) {
  const long long d = max_index(w);
  std::vector<long long> out;
  for (long long ell = 1; ell <= d; ++ell) {
    if (d % ell == 0) out.push_back(ell);
  }
  return out;
}

bool is_admissible(const InvertiblePoly& w, long long ell) {
  return ell >= 1 && max_index(w) % ell == 0;
}

std::pair<long long, long long> canonical_bezout(long long p, long long q) {
  const Egcd e = egcd(p - 1, q - 1);
  // Shift (m, n) -> (m + t(q-1)/d, n - t(p-1)/d) until 0 <= n < (p-1)/d.
  const long long step = (p - 1) / e.g;
  long long n = ((e.y % step) + step) % step;
  const long long m = checked_div(e.g - n * (q - 1), p - 1);
  return {m, n};
}

StackyCurveSpec loop_curve_with_bezout(long long p, long long q, long long ell,
                                       long long m, long long n) {
  const InvertiblePoly w = make_loop(p, q);
  require(is_admissible(w, ell),
          "ell = " + std::to_string(ell) + " is not admissible for " +
              to_string(w));
  const long long d = max_index(w);
  require(m * (p - 1) + n * (q - 1) == d,
          "not a Bezout pair for gcd(p-1, q-1)");

  StackyCurveSpec curve;
  curve.shape = Shape::Cycle;
  curve.components = {
      {p - 1, 1, (q - 1) / ell},
      {(q - 1) / ell, (p - 1) / ell, 1},
      {1, q - 1, (p - 1) / ell},
  };

  const FinAbGroup h1({(q - 1) / ell});
  curve.nodes.push_back({h1, Character(h1, {0}), Character(h1, {1}),
                         Character(h1, {1}), Character(h1, {0})});
  const FinAbGroup h2({(p - 1) / ell});
  curve.nodes.push_back({h2, Character(h2, {1}), Character(h2, {0}),
                         Character(h2, {0}), Character(h2, {-1})});
  // The high-isotropy node: H3 = Z/((p-1)(q-1)/d) x Z/(d/ell), with the
  // O(-q) weights given by the Bezout data and the gerbe weights chosen as
  // chi_d_plus = -chi_r_minus, chi_d_minus = chi_r_plus.
  const FinAbGroup h3({(p - 1) * (q - 1) / d, d / ell});
  const Character chi_r_plus(h3, {(p - 1) / d, -n});
  const Character chi_r_minus(h3, {(q - 1) / d, m});
  const Character chi_d_plus(h3, {-(q - 1) / d, -m});  // -chi_r_minus
  curve.nodes.push_back({h3, chi_r_plus, chi_d_plus, chi_r_minus, chi_r_plus});

  validate_curve(curve);
  return curve;
}

StackyCurveSpec bside_curve(const InvertiblePoly& w_in, long long ell) {
  const InvertiblePoly w = standard_form(w_in);
  require(is_admissible(w, ell),
          "ell = " + std::to_string(ell) + " is not admissible for " +
              to_string(w_in));
  const long long p = w.p, q = w.q;

  switch (w.kind) {
    case PolyKind::Loop: {
      const auto [m, n] = canonical_bezout(p, q);
      return loop_curve_with_bezout(p, q, ell, m, n);
    }
    case PolyKind::Chain: {
      StackyCurveSpec curve;
      curve.shape = Shape::Cycle;
      curve.components = {
          {p - 1, 1, (q - 1) / ell},
          {(q - 1) / ell, (p - 1) * (q - 1) / ell, 1},
      };
      const FinAbGroup h1({(q - 1) / ell});
      curve.nodes.push_back({h1, Character(h1, {0}), Character(h1, {-1}),
                             Character(h1, {1}), Character(h1, {0})});
      const FinAbGroup h2({(p - 1) * (q - 1) / ell});
      curve.nodes.push_back({h2, Character(h2, {1}), Character(h2, {0}),
                             Character(h2, {q - 1}), Character(h2, {1})});
      validate_curve(curve);
      return curve;
    }
    case PolyKind::Bp: {
      require(!(p == 2 && q == 2),
              "bp:2,2 is degenerate (empty mirror annulus); no curve");
      const long long n = ((p - 1) * (q - 1) - 1) / ell;
      StackyCurveSpec curve;
      curve.shape = Shape::Cycle;
      curve.components = {{n, n, 1}};
      const FinAbGroup h({n});
      curve.nodes.push_back({h, Character(h, {q - 1}), Character(h, {0}),
                             Character(h, {1}), Character(h, {0})});
      validate_curve(curve);
      return curve;
    }
  }
  throw std::logic_error("unreachable polynomial kind");
}

ClosedFormInvariants closed_form_invariants(const InvertiblePoly& w_in,
                                            long long ell) {
  const InvertiblePoly w = standard_form(w_in);
  require(is_admissible(w, ell),
          "ell = " + std::to_string(ell) + " is not admissible for " +
              to_string(w_in));
  const long long p = w.p, q = w.q;

  ClosedFormInvariants out;
  std::map<long long, long long> windings;
  switch (w.kind) {
    case PolyKind::Loop: {
      out.euler = -checked_div(p * q - 1, ell);
      const long long cycles = std::gcd(q - 1, checked_div(p + q - 2, ell));
      out.b = 2 + cycles;
      windings[-2 * checked_div(p - 1, ell)] += 1;
      windings[-2 * checked_div(q - 1, ell)] += 1;
      windings[-2 * checked_div((p - 1) * (q - 1),
                                std::gcd(ell * (q - 1), p + q - 2))] += cycles;
      out.genus =
          checked_div(p * q - 1 - std::gcd(ell * (q - 1), p + q - 2), 2 * ell);
      break;
    }
    case PolyKind::Chain: {
      out.euler = -checked_div(p * (q - 1), ell);
      const long long cycles = std::gcd(q, checked_div(p + q - 1, ell));
      out.b = 1 + cycles;
      windings[-2 * checked_div(q - 1, ell)] += 1;
      windings[-2 * checked_div((p - 1) * (q - 1),
                                std::gcd(ell * q, p + q - 1))] += cycles;
      out.genus =
          checked_div(p * q - p + ell - std::gcd(ell * q, p + q - 1), 2 * ell);
      break;
    }
    case PolyKind::Bp: {
      require(!(p == 2 && q == 2),
              "bp:2,2 is degenerate (empty mirror annulus); no invariants");
      out.euler = -checked_div((p - 1) * (q - 1) - 1, ell);
      const long long cycles = std::gcd(q, checked_div(p + q, ell));
      out.b = cycles;
      windings[-2 * checked_div((p - 1) * (q - 1) - 1,
                                std::gcd(ell * q, p + q))] += cycles;
      out.genus = checked_div(
          2 * ell - 1 + (p - 1) * (q - 1) - std::gcd(ell * q, p + q), 2 * ell);
      break;
    }
  }
  out.windings.assign(windings.begin(), windings.end());
  return out;
}

long long mirror_rank_h1(const InvertiblePoly& w, long long ell) {
  return 1 - closed_form_invariants(w, ell).euler;
}

}  // namespace annuli
