#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <vector>

#include "annuli/invertible.hpp"

using namespace annuli;

TEST_CASE("parsing and printing") {
  CHECK(parse_poly("loop:5,5") == make_loop(5, 5));
  CHECK(parse_poly("chain:2,3") == make_chain(2, 3));
  CHECK(parse_poly("bp:3,2") == make_bp(3, 2));
  CHECK_THROWS_AS(parse_poly("loop:5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("knot:3,2"), std::invalid_argument);
  CHECK_THROWS_AS(make_loop(2, 3), std::invalid_argument);  // needs p >= q
  CHECK_THROWS_AS(make_bp(1, 2), std::invalid_argument);

  CHECK(to_string(make_loop(5, 5)) == "loop:5,5");
  CHECK(monomial_string(make_loop(5, 5)) == "x^5*y + x*y^5");
  CHECK(monomial_string(make_chain(2, 3)) == "x^2*y + y^3");
  CHECK(monomial_string(transpose(make_chain(2, 3))) == "x^2 + x*y^3");
  CHECK(monomial_string(make_bp(3, 2)) == "x^3 + y^2");
}

TEST_CASE("transpose is an involution fixing loop and bp") {
  CHECK(transpose(make_loop(7, 3)) == make_loop(7, 3));
  CHECK(transpose(make_bp(4, 9)) == make_bp(4, 9));
  const auto chain = make_chain(2, 3);
  CHECK(transpose(chain) != chain);
  CHECK(transpose(transpose(chain)) == chain);
}

TEST_CASE("weight systems") {
  CHECK(weight_system(make_bp(3, 2)) == WeightSystem{1, 2, 3, 6});
  CHECK(weight_system(make_loop(2, 2)) == WeightSystem{1, 1, 1, 3});
  CHECK(weight_system(make_chain(2, 3)) == WeightSystem{1, 1, 1, 3});
  CHECK(weight_system(transpose(make_chain(2, 3))) == WeightSystem{2, 3, 1, 6});

  // w(t^{d1} x, t^{d2} y) = t^h w(x,y) for every monomial of w, and the
  // weights are primitive.
  for (long long q = 2; q <= 9; ++q) {
    for (long long p = q; p <= 9; ++p) {
      for (const auto& w :
           {make_loop(p, q), make_chain(p, q), make_bp(p, q),
            transpose(make_chain(p, q))}) {
        const auto ws = weight_system(w);
        CHECK(ws.d0 == ws.h - ws.d1 - ws.d2);
        CHECK(std::gcd(std::gcd(ws.d1, ws.d2), ws.h) == 1);
        long long e11 = 0, e12 = 0, e21 = 0, e22 = 0;  // exponent matrix
        switch (w.kind) {
          case PolyKind::Loop:
            e11 = w.p, e12 = 1, e21 = 1, e22 = w.q;
            break;
          case PolyKind::Chain:
            if (w.transposed) {
              e11 = w.p, e12 = 0, e21 = 1, e22 = w.q;
            } else {
              e11 = w.p, e12 = 1, e21 = 0, e22 = w.q;
            }
            break;
          case PolyKind::Bp:
            e11 = w.p, e12 = 0, e21 = 0, e22 = w.q;
            break;
        }
        CHECK(e11 * ws.d1 + e12 * ws.d2 == ws.h);
        CHECK(e21 * ws.d1 + e22 * ws.d2 == ws.h);
      }
    }
  }
}

TEST_CASE("maximal symmetry index and admissible divisors") {
  CHECK(max_index(make_loop(5, 5)) == 4);
  CHECK(admissible_indices(make_loop(5, 5)) ==
        std::vector<long long>{1, 2, 4});
  CHECK(admissible_indices(make_chain(2, 3)) == std::vector<long long>{1, 2});
  CHECK(admissible_indices(make_bp(3, 2)) == std::vector<long long>{1});
  CHECK(is_admissible(make_loop(5, 5), 2));
  CHECK_FALSE(is_admissible(make_loop(5, 5), 3));

  // The transposed chain normalizes to the variable-swapped standard chain.
  CHECK(max_index(transpose(make_chain(6, 4))) == max_index(make_chain(4, 6)));
}

TEST_CASE("canonical Bezout pairs") {
  for (const auto& [p, q] : {std::pair<long long, long long>{5, 5},
                            {7, 3},
                            {9, 5},
                            {13, 7},
                            {4, 2}}) {
    const auto [m, n] = canonical_bezout(p, q);
    const long long g = std::gcd(p - 1, q - 1);
    CHECK(m * (p - 1) + n * (q - 1) == g);
    CHECK(0 <= n);
    CHECK(n < (p - 1) / g);
  }
  CHECK(canonical_bezout(5, 5) == std::pair<long long, long long>{1, 0});
}

TEST_CASE("the loop curve at index 2") {
  const auto curve = bside_curve(make_loop(5, 5), 2);
  REQUIRE(curve.components.size() == 3);
  REQUIRE(curve.nodes.size() == 3);
  const auto& node = curve.nodes[2];
  CHECK(node.group == FinAbGroup({4, 2}));
  CHECK(node.chi_r_plus == Character(FinAbGroup({4, 2}), {1, 0}));
  CHECK(node.chi_r_minus == Character(FinAbGroup({4, 2}), {1, 1}));

  // Highest-isotropy component sits between two (q-1)/ell = 2 interfaces.
  const auto spec = mirror_surface_spec(curve);
  CHECK(spec.mode == Mode::Circular);
  CHECK(spec.columns[0] == Column{4, 1, 2});
  CHECK(spec.columns[1] == Column{2, 2, 1});
  CHECK(spec.columns[2] == Column{1, 4, 2});
}

TEST_CASE("loop gluings away from the gerbe node are identities") {
  const auto curve = bside_curve(make_loop(5, 5), 1);
  const auto spec = mirror_surface_spec(curve);
  CHECK(spec.gluings[0] == Permutation::identity(4));
  CHECK(spec.gluings[1] == Permutation::identity(4));
}

TEST_CASE("closed-form invariants: worked examples") {
  const auto loop = closed_form_invariants(make_loop(5, 5), 2);
  CHECK(loop.euler == -12);
  CHECK(loop.b == 6);
  CHECK(loop.genus == 4);
  CHECK(loop.windings ==
        std::vector<std::pair<long long, long long>>{{-4, 6}});

  const auto chain = closed_form_invariants(make_chain(2, 3), 1);
  CHECK(chain.euler == -4);
  CHECK(chain.b == 2);
  CHECK(chain.genus == 2);
  CHECK(chain.windings ==
        std::vector<std::pair<long long, long long>>{{-4, 2}});

  const auto bp = closed_form_invariants(make_bp(3, 2), 1);
  CHECK(bp.euler == -1);
  CHECK(bp.b == 1);
  CHECK(bp.genus == 1);
  CHECK(bp.windings == std::vector<std::pair<long long, long long>>{{-2, 1}});

  const auto loop22 = closed_form_invariants(make_loop(2, 2), 1);
  CHECK(loop22.euler == -3);
  CHECK(loop22.b == 3);
  CHECK(loop22.genus == 1);
  CHECK(loop22.windings ==
        std::vector<std::pair<long long, long long>>{{-2, 3}});
}

TEST_CASE("rank of first homology of the mirror") {
  CHECK(mirror_rank_h1(make_loop(2, 2), 1) == 4);
  CHECK(mirror_rank_h1(make_chain(2, 3), 1) == 5);
  for (long long q = 2; q <= 8; ++q) {
    for (long long p = q; p <= 8; ++p) {
      if (p == 2 && q == 2) continue;
      CHECK(mirror_rank_h1(make_bp(p, q), 1) == (p - 1) * (q - 1));
    }
  }
}

TEST_CASE("computed and closed-form invariants agree on a small sweep") {
  for (long long q = 2; q <= 8; ++q) {
    for (long long p = q; p <= 8; ++p) {
      for (const auto& w : {make_loop(p, q), make_chain(p, q), make_bp(p, q)}) {
        if (w.kind == PolyKind::Bp && p == 2 && q == 2) continue;
        for (const long long ell : admissible_indices(w)) {
          CAPTURE(to_string(w));
          CAPTURE(ell);
          const auto cf = closed_form_invariants(w, ell);
          const auto inv =
              compute_invariants(mirror_surface_spec(bside_curve(w, ell)));
          CHECK(inv.euler == cf.euler);
          CHECK(inv.total_boundary == cf.b);
          CHECK(inv.boundary == cf.windings);
          REQUIRE(inv.genus.has_value());
          CHECK(*inv.genus == cf.genus);
          CHECK(inv.h1 == mirror_rank_h1(w, ell));
        }
      }
    }
  }
}

TEST_CASE("boundary-count gcds coincide from either variable") {
  for (long long q = 2; q <= 12; ++q) {
    for (long long p = q; p <= 12; ++p) {
      for (const long long ell : admissible_indices(make_loop(p, q))) {
        CHECK(std::gcd(q - 1, (p + q - 2) / ell) ==
              std::gcd(p - 1, (p + q - 2) / ell));
      }
      for (const long long ell : admissible_indices(make_bp(p, q))) {
        CHECK(std::gcd(q, (p + q) / ell) == std::gcd(p, (p + q) / ell));
      }
    }
  }
}

TEST_CASE("transposed chains use the flipped curve") {
  const auto w = transpose(make_chain(2, 3));  // x^2 + x*y^3
  const auto cf = closed_form_invariants(w, 1);
  const auto flipped = closed_form_invariants(make_chain(3, 2), 1);
  CHECK(cf == flipped);
  const auto inv = compute_invariants(mirror_surface_spec(bside_curve(w, 1)));
  CHECK(inv.euler == cf.euler);
  CHECK(inv.total_boundary == cf.b);
}

TEST_CASE("inadmissible data is rejected") {
  CHECK_THROWS_AS(bside_curve(make_loop(5, 5), 3), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_invariants(make_loop(5, 5), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(bside_curve(make_bp(2, 2), 1), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_invariants(make_bp(2, 2), 1),
                  std::invalid_argument);
}

TEST_CASE("Bezout and gerbe-twist choices do not change the surface") {
  // Two Bezout pairs for loop(5,5) at ell = 1.
  const auto a = loop_curve_with_bezout(5, 5, 1, 1, 0);
  const auto b = loop_curve_with_bezout(5, 5, 1, 0, 1);
  const auto inv_a = compute_invariants(mirror_surface_spec(a));
  const auto inv_b = compute_invariants(mirror_surface_spec(b));
  CHECK(inv_a.euler == inv_b.euler);
  CHECK(inv_a.boundary == inv_b.boundary);
  CHECK(inv_a.genus == inv_b.genus);
  CHECK(inv_a.stop_signature == inv_b.stop_signature);
  for (const auto& curve : {a, b}) {
    CHECK(quiver_equal(exceptional_quiver(curve),
                       generating_quiver(mirror_surface_spec(curve)),
                       vertex_dictionary(curve)));
  }

  // An alternative gerbe twist at the high-isotropy node.
  auto c = loop_curve_with_bezout(5, 5, 1, 1, 0);
  c.nodes[2].chi_d_plus =
      char_combine(c.nodes[2].chi_d_plus, c.nodes[2].chi_r_plus, 1, 1);
  CHECK_NOTHROW(validate_curve(c));
  const auto inv_c = compute_invariants(mirror_surface_spec(c));
  CHECK(inv_c.euler == inv_a.euler);
  CHECK(inv_c.boundary == inv_a.boundary);
  CHECK(inv_c.genus == inv_a.genus);
  CHECK(quiver_equal(exceptional_quiver(c),
                     generating_quiver(mirror_surface_spec(c)),
                     vertex_dictionary(c)));
}
