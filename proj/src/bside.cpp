#include "annuli/bside.hpp"

#include <set>
#include <string>

namespace annuli {

namespace {

long long side_r(const Character& chi_r) { return char_order(chi_r); }

std::string node_tag(int i) { return "node " + std::to_string(i); }

// BP(i,j,m,k) with the convention that exactly one of j >= 1 / m >= 0 is
// active; the corner is BP(i,0,-1,k).
std::string bp_label(int i, long long j, long long m, int k) {
  return "BP(" + std::to_string(i) + "," + std::to_string(j) + "," +
         std::to_string(m) + "," + std::to_string(k) + ")";
}

std::string bs_label(int i, const Character& chi) {
  return "BS(" + std::to_string(i) + "," + to_string(chi) + ")";
}

void check_bijective_side(const NodeData& node, const Character& chi_r,
                          const Character& chi_d, long long r, long long d,
                          const std::string& where) {
  std::set<std::vector<long long>> images;
  for (long long m = 0; m < r; ++m) {
    for (long long k = 0; k < d; ++k) {
      images.insert(char_combine(chi_r, chi_d, -m, k).coords());
    }
  }
  if (static_cast<long long>(images.size()) != node.group.order()) {
    throw CurveError(where +
                     ": (m,k) -> -m*chi_r + k*chi_d is not a bijection onto "
                     "the character group");
  }
}

}  // namespace

long long node_r_plus(const NodeData& node) { return side_r(node.chi_r_plus); }
long long node_d_plus(const NodeData& node) {
  return node.group.order() / node_r_plus(node);
}
long long node_r_minus(const NodeData& node) {
  return side_r(node.chi_r_minus);
}
long long node_d_minus(const NodeData& node) {
  return node.group.order() / node_r_minus(node);
}

void validate_curve(const StackyCurveSpec& curve) {
  const int n = static_cast<int>(curve.components.size());
  if (n == 0) throw CurveError("curve has no components");
  const int expected_nodes = curve.shape == Shape::Cycle ? n : n - 1;
  if (static_cast<int>(curve.nodes.size()) != expected_nodes) {
    throw CurveError("expected " + std::to_string(expected_nodes) +
                     " nodes, got " + std::to_string(curve.nodes.size()));
  }
  for (int i = 0; i < n; ++i) {
    const auto& c = curve.components[static_cast<std::size_t>(i)];
    if (c.d < 1) {
      throw CurveError("component " + std::to_string(i) + " has d = " +
                       std::to_string(c.d));
    }
    const bool open_minus = curve.shape == Shape::Chain && i == 0;
    const bool open_plus = curve.shape == Shape::Chain && i == n - 1;
    if (c.r_minus < (open_minus ? 0 : 1) || c.r_plus < (open_plus ? 0 : 1)) {
      throw CurveError("component " + std::to_string(i) +
                       " has a non-positive orbifold order on a noded side");
    }
  }
  for (int i = 0; i < expected_nodes; ++i) {
    const auto& node = curve.nodes[static_cast<std::size_t>(i)];
    const auto& plus = curve.components[static_cast<std::size_t>(i)];
    const auto& minus = curve.components[static_cast<std::size_t>((i + 1) % n)];
    for (const Character* chi : {&node.chi_r_plus, &node.chi_d_plus,
                                 &node.chi_r_minus, &node.chi_d_minus}) {
      if (chi->group() != node.group) {
        throw CurveError(node_tag(i) +
                         ": character group differs from the node group");
      }
    }
    const long long h = node.group.order();
    if (h != plus.r_plus * plus.d) {
      throw CurveError(node_tag(i) + ": |H| = " + std::to_string(h) +
                       " but r_plus*d = " +
                       std::to_string(plus.r_plus * plus.d));
    }
    if (h != minus.r_minus * minus.d) {
      throw CurveError(node_tag(i) + ": |H| = " + std::to_string(h) +
                       " but next r_minus*d = " +
                       std::to_string(minus.r_minus * minus.d));
    }
    if (char_order(node.chi_r_plus) != plus.r_plus) {
      throw CurveError(node_tag(i) + ": chi_r_plus has order " +
                       std::to_string(char_order(node.chi_r_plus)) +
                       ", expected " + std::to_string(plus.r_plus));
    }
    if (char_order(node.chi_r_minus) != minus.r_minus) {
      throw CurveError(node_tag(i) + ": chi_r_minus has order " +
                       std::to_string(char_order(node.chi_r_minus)) +
                       ", expected " + std::to_string(minus.r_minus));
    }
    check_bijective_side(node, node.chi_r_plus, node.chi_d_plus, plus.r_plus,
                         plus.d, node_tag(i) + " plus side");
    check_bijective_side(node, node.chi_r_minus, node.chi_d_minus,
                         minus.r_minus, minus.d, node_tag(i) + " minus side");
  }
}

std::vector<Character> stop_labels(const NodeData& node) {
  const long long r = node_r_plus(node);
  const long long h = node.group.order();
  std::vector<Character> labels;
  labels.reserve(static_cast<std::size_t>(h));
  for (long long s = 0; s < h; ++s) {
    const long long k = s / r;
    const long long m = s % r;
    labels.push_back(char_combine(node.chi_r_plus, node.chi_d_plus, -m, k));
  }
  return labels;
}

Permutation derive_gluing_permutation(const NodeData& node) {
  const long long r_minus = node_r_minus(node);
  const long long d_minus = node_d_minus(node);
  const auto labels = stop_labels(node);
  std::vector<int> images;
  images.reserve(labels.size());
  for (const auto& chi : labels) {
    const auto [j, k_minus] = solve_weight_equation(
        chi, node.chi_r_minus, node.chi_d_minus, r_minus, d_minus);
    images.push_back(
        static_cast<int>(k_minus * r_minus + ((-j) % r_minus + r_minus) % r_minus));
  }
  return Permutation(std::move(images));
}

GluedSurfaceSpec mirror_surface_spec(const StackyCurveSpec& curve) {
  validate_curve(curve);
  GluedSurfaceSpec spec;
  spec.mode = curve.shape == Shape::Cycle ? Mode::Circular : Mode::Linear;
  for (const auto& c : curve.components) {
    spec.columns.push_back({c.r_minus, c.r_plus, c.d});
  }
  for (const auto& node : curve.nodes) {
    spec.gluings.push_back(derive_gluing_permutation(node));
  }
  validate(spec);
  return spec;
}

Quiver exceptional_quiver(const StackyCurveSpec& curve) {
  validate_curve(curve);
  const int n = static_cast<int>(curve.components.size());
  Quiver q;

  for (int i = 0; i < n; ++i) {
    const auto& c = curve.components[static_cast<std::size_t>(i)];
    for (int k = 0; k < c.d; ++k) {
      for (long long j = 0; j <= c.r_minus; ++j) {
        q.vertices.push_back(bp_label(i, j, -1, k));
      }
      for (long long m = 0; m < c.r_plus; ++m) {
        q.vertices.push_back(bp_label(i, 0, m, k));
      }
      for (long long j = 0; j < c.r_minus; ++j) {
        q.arrows.push_back(
            {'x', bp_label(i, j, -1, k), bp_label(i, j + 1, -1, k)});
      }
      for (long long m = -1; m + 1 < c.r_plus; ++m) {
        q.arrows.push_back(
            {'y', bp_label(i, 0, m, k), bp_label(i, 0, m + 1, k)});
      }
    }
  }

  for (int i = 0; i < static_cast<int>(curve.nodes.size()); ++i) {
    const auto& node = curve.nodes[static_cast<std::size_t>(i)];
    const int i_next = (i + 1) % n;
    const long long r_plus = node_r_plus(node);
    const long long r_minus = node_r_minus(node);
    const long long d_minus = node_d_minus(node);
    const auto labels = stop_labels(node);
    for (long long s = 0; s < static_cast<long long>(labels.size()); ++s) {
      const long long k_plus = s / r_plus;
      const long long m = s % r_plus;
      const std::string sv = bs_label(i, labels[static_cast<std::size_t>(s)]);
      q.vertices.push_back(sv);

      // a lands on BP(i,0,m-1,k+); the next y (to BP(i,0,m,k+)) kills it.
      const Arrow a{'a', sv,
                    bp_label(i, 0, m - 1, static_cast<int>(k_plus))};
      q.arrows.push_back(a);
      if (m < r_plus) {
        q.relations.emplace_back(
            a, Arrow{'y', a.dst,
                     bp_label(i, 0, m, static_cast<int>(k_plus))});
      }

      const auto [j, k_minus] =
          solve_weight_equation(labels[static_cast<std::size_t>(s)],
                                node.chi_r_minus, node.chi_d_minus, r_minus,
                                d_minus);
      // b lands on BP(i+1,(j-1) mod r-, -1, k-); the next x kills it.
      const long long jb = ((j - 1) % r_minus + r_minus) % r_minus;
      const Arrow b{'b', sv,
                    bp_label(i_next, jb, -1, static_cast<int>(k_minus))};
      q.arrows.push_back(b);
      if (jb + 1 <= r_minus) {
        q.relations.emplace_back(
            b, Arrow{'x', b.dst,
                     bp_label(i_next, jb + 1, -1, static_cast<int>(k_minus))});
      }
    }
  }

  canonicalize(q);
  return q;
}

std::map<std::string, std::string> vertex_dictionary(
    const StackyCurveSpec& curve) {
  validate_curve(curve);
  const int n = static_cast<int>(curve.components.size());
  std::map<std::string, std::string> dict;
  for (int i = 0; i < n; ++i) {
    const auto& c = curve.components[static_cast<std::size_t>(i)];
    for (int k = 0; k < c.d; ++k) {
      dict[bp_label(i, 0, -1, k)] = p_zero_label(i, k);
      for (long long j = 1; j <= c.r_minus; ++j) {
        dict[bp_label(i, j, -1, k)] = p_minus_label(i, j, k);
      }
      for (long long m = 0; m < c.r_plus; ++m) {
        dict[bp_label(i, 0, m, k)] = p_plus_label(i, m + 1, k);
      }
    }
  }
  for (int i = 0; i < static_cast<int>(curve.nodes.size()); ++i) {
    const auto labels = stop_labels(curve.nodes[static_cast<std::size_t>(i)]);
    for (long long s = 0; s < static_cast<long long>(labels.size()); ++s) {
      dict[bs_label(i, labels[static_cast<std::size_t>(s)])] =
          strip_label(i, s);
    }
  }
  return dict;
}

}  // namespace annuli
