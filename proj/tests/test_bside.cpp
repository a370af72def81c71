#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "annuli/bside.hpp"
#include "annuli/quiver.hpp"

using namespace annuli;

namespace {

// Cycle of two orbifold lines with isotropy Z/2 x Z/8 and Z/8: the gerbe
// worked example.
StackyCurveSpec gerbe_curve() {
  const FinAbGroup h1({2, 8});
  const FinAbGroup h2({8});
  StackyCurveSpec c;
  c.shape = Shape::Cycle;
  c.components = {{2, 4, 4}, {8, 4, 2}};
  c.nodes = {
      {h1, Character(h1, {1, 2}), Character(h1, {0, -1}), Character(h1, {0, 1}),
       Character(h1, {1, 0})},
      {h2, Character(h2, {2}), Character(h2, {-1}), Character(h2, {4}),
       Character(h2, {-1})},
  };
  return c;
}

// Cycle mirror to the chain polynomial x^2 y + y^3 at full symmetry index.
StackyCurveSpec chain23_curve() {
  const FinAbGroup z2({2});
  StackyCurveSpec c;
  c.shape = Shape::Cycle;
  c.components = {{1, 1, 2}, {2, 2, 1}};
  c.nodes = {
      {z2, Character(z2, {0}), Character(z2, {-1}), Character(z2, {1}),
       Character(z2, {0})},
      {z2, Character(z2, {1}), Character(z2, {0}), Character(z2, {0}),
       Character(z2, {1})},
  };
  return c;
}

// A chain-shaped curve whose mirror is a linear gluing with an l = 0 end.
StackyCurveSpec chain_shape_curve() {
  const FinAbGroup z4({4});
  StackyCurveSpec c;
  c.shape = Shape::Chain;
  c.components = {{0, 2, 2}, {4, 3, 1}};
  c.nodes = {
      {z4, Character(z4, {2}), Character(z4, {1}), Character(z4, {1}),
       Character(z4, {0})},
  };
  return c;
}

}  // namespace

TEST_CASE("node sides are read off the characters") {
  const auto curve = gerbe_curve();
  CHECK_NOTHROW(validate_curve(curve));
  CHECK(node_r_plus(curve.nodes[0]) == 4);
  CHECK(node_d_plus(curve.nodes[0]) == 4);
  CHECK(node_r_minus(curve.nodes[0]) == 8);
  CHECK(node_d_minus(curve.nodes[0]) == 2);
  CHECK(node_r_plus(curve.nodes[1]) == 4);
  CHECK(node_d_plus(curve.nodes[1]) == 2);
  CHECK(node_r_minus(curve.nodes[1]) == 2);
  CHECK(node_d_minus(curve.nodes[1]) == 4);
}

TEST_CASE("stop labels walk k*chi_d - m*chi_r") {
  const auto curve = gerbe_curve();
  const auto labels = stop_labels(curve.nodes[0]);
  REQUIRE(labels.size() == 16);
  const FinAbGroup h({2, 8});
  CHECK(labels[0] == Character(h, {0, 0}));
  CHECK(labels[1] == Character(h, {1, 6}));   // -(1,2)
  CHECK(labels[4] == Character(h, {0, 7}));   // chi_d_plus
  CHECK(labels[5] == Character(h, {1, 5}));

  // All sixteen characters occur exactly once.
  std::set<std::vector<long long>> seen;
  for (const auto& chi : labels) seen.insert(chi.coords());
  CHECK(seen.size() == 16);

  const auto small = stop_labels(chain23_curve().nodes[1]);
  REQUIRE(small.size() == 2);
  CHECK(small[0].coords() == std::vector<long long>{0});
  CHECK(small[1].coords() == std::vector<long long>{1});
}

TEST_CASE("derived gluings of the gerbe example") {
  const auto curve = gerbe_curve();
  const auto sigma1 = derive_gluing_permutation(curve.nodes[0]);
  const auto sigma2 = derive_gluing_permutation(curve.nodes[1]);

  CHECK(sigma1.images() ==
        std::vector<int>{0, 14, 4, 10, 7, 13, 3, 9, 6, 12, 2, 8, 5, 11, 1, 15});
  CHECK(sigma2.images() == std::vector<int>{0, 4, 1, 5, 2, 6, 3, 7});

  // The displayed closed forms, pointwise.
  for (int k = 0; k < 4; ++k) {
    for (int c = 0; c < 4; ++c) {
      CHECK(sigma1(4 * k + c) == 8 * (c % 2) + ((-k - 2 * c) % 8 + 8) % 8);
    }
  }
  for (int k = 0; k < 2; ++k) {
    for (int c = 0; c < 4; ++c) {
      CHECK(sigma2(4 * k + c) ==
            2 * ((2 * c + k) % 4) + ((-((2 * c + k) / 4)) % 2 + 2) % 2);
    }
  }
}

TEST_CASE("mirror surface of the gerbe example") {
  const auto curve = gerbe_curve();
  const auto spec = mirror_surface_spec(curve);
  CHECK(spec.mode == Mode::Circular);
  REQUIRE(spec.columns.size() == 2);
  CHECK(spec.columns[0] == Column{2, 4, 4});
  CHECK(spec.columns[1] == Column{8, 4, 2});

  CHECK(euler_characteristic(spec) == -24);
  const auto inv = compute_invariants(spec);
  CHECK(inv.total_boundary == 4);
  CHECK(inv.boundary ==
        std::vector<std::pair<long long, long long>>{{-16, 2}, {-8, 2}});
  CHECK(inv.h0 == 1);
  CHECK(inv.h1 == 25);
}

TEST_CASE("exceptional quiver matches the generating quiver") {
  for (const auto& curve :
       {gerbe_curve(), chain23_curve(), chain_shape_curve()}) {
    const auto surface = mirror_surface_spec(curve);
    const auto a_side = generating_quiver(surface);
    const auto b_side = exceptional_quiver(curve);
    const auto dict = vertex_dictionary(curve);
    CHECK(b_side.vertices.size() == a_side.vertices.size());
    CHECK(b_side.arrows.size() == a_side.arrows.size());
    CHECK(b_side.relations.size() == a_side.relations.size());
    CHECK(quiver_equal(b_side, a_side, dict));
    CHECK(is_gentle(b_side).gentle);
  }
}

TEST_CASE("chain mirror of x^2y + y^3 glues by identities") {
  const auto curve = chain23_curve();
  const auto spec = mirror_surface_spec(curve);
  CHECK(spec.mode == Mode::Circular);
  CHECK(spec.gluings[1] == Permutation::identity(2));
  CHECK(spec.gluings[0] == Permutation::identity(2));

  const auto inv = compute_invariants(spec);
  CHECK(inv.euler == -4);
  CHECK(inv.total_boundary == 2);
  CHECK(inv.boundary ==
        std::vector<std::pair<long long, long long>>{{-4, 2}});
  REQUIRE(inv.genus.has_value());
  CHECK(*inv.genus == 2);
}

TEST_CASE("chain-shaped curves mirror to linear gluings") {
  const auto curve = chain_shape_curve();
  const auto spec = mirror_surface_spec(curve);
  CHECK(spec.mode == Mode::Linear);
  CHECK(spec.columns[0] == Column{0, 2, 2});
  CHECK(spec.columns[1] == Column{4, 3, 1});
  REQUIRE(spec.gluings.size() == 1);
  CHECK(spec.gluings[0] == Permutation({0, 2, 1, 3}));

  const auto inv = compute_invariants(spec);
  CHECK(inv.euler == -4);
  CHECK(inv.boundary ==
        std::vector<std::pair<long long, long long>>{{-8, 1}, {0, 3}});
  REQUIRE(inv.genus.has_value());
  CHECK(*inv.genus == 1);
  CHECK(inv.stop_signature == std::vector<long long>{0, 0, 3, 8});
}

TEST_CASE("validate_curve rejects inconsistent nodes") {
  auto curve = gerbe_curve();
  curve.nodes[1].chi_r_plus = Character(FinAbGroup({8}), {1});  // order 8 != 4
  CHECK_THROWS_AS(validate_curve(curve), CurveError);

  curve = gerbe_curve();
  curve.nodes[0].chi_d_plus = Character(FinAbGroup({2, 8}), {0, 2});
  // (m,k) -> -m*chi_r + k*chi_d now misses half the characters.
  CHECK_THROWS_AS(validate_curve(curve), CurveError);

  curve = gerbe_curve();
  curve.nodes[1].chi_d_minus = Character(FinAbGroup({2, 2}), {1, 1});
  CHECK_THROWS_AS(validate_curve(curve), CurveError);

  curve = gerbe_curve();
  curve.nodes.pop_back();
  CHECK_THROWS_AS(validate_curve(curve), CurveError);

  curve = gerbe_curve();
  curve.components[1].d = 3;  // |H| no longer matches r*d on either side
  CHECK_THROWS_AS(validate_curve(curve), CurveError);
}

TEST_CASE("a one-component cycle with trivial isotropy is the trefoil mirror") {
  const FinAbGroup triv({1});
  StackyCurveSpec curve;
  curve.shape = Shape::Cycle;
  curve.components = {{1, 1, 1}};
  curve.nodes = {{triv, Character(triv, {0}), Character(triv, {0}),
                  Character(triv, {0}), Character(triv, {0})}};

  const auto spec = mirror_surface_spec(curve);
  CHECK(spec.columns == std::vector<Column>{{1, 1, 1}});
  CHECK(genus(spec) == 1);
  CHECK(boundary_profile(spec) ==
        std::vector<std::pair<long long, long long>>{{-2, 1}});

  const auto dict = vertex_dictionary(curve);
  CHECK(quiver_equal(exceptional_quiver(curve), generating_quiver(spec), dict));
}
