#include "annuli/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace annuli {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

void canonicalize(Quiver& q) {
  sort_unique(q.vertices);
  sort_unique(q.arrows);
  sort_unique(q.relations);
  const std::set<std::string> vs(q.vertices.begin(), q.vertices.end());
  for (const auto& a : q.arrows) {
    if (!vs.count(a.src) || !vs.count(a.dst)) {
      throw std::invalid_argument("arrow " + std::string(1, a.kind) + ": " +
                                  a.src + " -> " + a.dst +
                                  " has a missing endpoint");
    }
  }
  const std::set<Arrow> as(q.arrows.begin(), q.arrows.end());
  for (const auto& [first, second] : q.relations) {
    if (!as.count(first) || !as.count(second)) {
      throw std::invalid_argument("relation references a missing arrow");
    }
    if (first.dst != second.src) {
      throw std::invalid_argument("relation pair is not composable: " +
                                  first.src + "->" + first.dst + " then " +
                                  second.src + "->" + second.dst);
    }
  }
}

std::string p_zero_label(int i, int k) {
  return "P0(" + std::to_string(i) + "," + std::to_string(k) + ")";
}

std::string p_minus_label(int i, long long j, int k) {
  if (j == 0) return p_zero_label(i, k);
  return "P-(" + std::to_string(i) + "," + std::to_string(j) + "," +
         std::to_string(k) + ")";
}

std::string p_plus_label(int i, long long m, int k) {
  if (m == 0) return p_zero_label(i, k);
  return "P+(" + std::to_string(i) + "," + std::to_string(m) + "," +
         std::to_string(k) + ")";
}

std::string strip_label(int i, long long j) {
  return "S(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Quiver generating_quiver(const GluedSurfaceSpec& spec) {
  validate(spec);
  const int n = static_cast<int>(spec.columns.size());
  Quiver q;

  for (int i = 0; i < n; ++i) {
    const auto& col = spec.columns[static_cast<std::size_t>(i)];
    for (int k = 0; k < col.d; ++k) {
      for (long long j = 0; j <= col.l; ++j) {
        q.vertices.push_back(p_minus_label(i, j, k));
      }
      for (long long m = 1; m <= col.r; ++m) {
        q.vertices.push_back(p_plus_label(i, m, k));
      }
      for (long long j = 0; j < col.l; ++j) {
        q.arrows.push_back(
            {'x', p_minus_label(i, j, k), p_minus_label(i, j + 1, k)});
      }
      for (long long m = 0; m < col.r; ++m) {
        q.arrows.push_back(
            {'y', p_plus_label(i, m, k), p_plus_label(i, m + 1, k)});
      }
    }
  }

  for (int i = 0; i < num_interfaces(spec); ++i) {
    const int nxt = (i + 1) % n;
    const auto& sigma = spec.gluings[static_cast<std::size_t>(i)];
    const long long r = spec.columns[static_cast<std::size_t>(i)].r;
    const long long l = spec.columns[static_cast<std::size_t>(nxt)].l;
    for (int j = 0; j < sigma.size(); ++j) {
      const int k_plus = static_cast<int>(j / r);
      const long long c_plus = j % r;
      const int k_minus = static_cast<int>(sigma(j) / l);
      const long long c_minus = sigma(j) % l;

      const std::string s = strip_label(i, j);
      q.vertices.push_back(s);
      const Arrow a{'a', s, p_plus_label(i, c_plus, k_plus)};
      const Arrow b{'b', s, p_minus_label(nxt, l - 1 - c_minus, k_minus)};
      q.arrows.push_back(a);
      q.arrows.push_back(b);
      // The wrap arrows leaving the strip targets kill the strip morphisms.
      if (c_plus < r) {
        q.relations.emplace_back(
            a, Arrow{'y', a.dst, p_plus_label(i, c_plus + 1, k_plus)});
      }
      if (l - 1 - c_minus < l) {
        q.relations.emplace_back(
            b, Arrow{'x', b.dst, p_minus_label(nxt, l - c_minus, k_minus)});
      }
    }
  }

  canonicalize(q);
  return q;
}

GentleReport is_gentle(const Quiver& q) {
  auto fail = [](std::string why) { return GentleReport{false, std::move(why)}; };
  auto arrow_str = [](const Arrow& a) {
    return std::string(1, a.kind) + ": " + a.src + " -> " + a.dst;
  };

  std::map<std::string, int> in_degree, out_degree;
  for (const auto& a : q.arrows) {
    ++out_degree[a.src];
    ++in_degree[a.dst];
  }
  for (const auto& [v, deg] : out_degree) {
    if (deg > 2) {
      return fail("vertex " + v + " has out-valence " + std::to_string(deg));
    }
  }
  for (const auto& [v, deg] : in_degree) {
    if (deg > 2) {
      return fail("vertex " + v + " has in-valence " + std::to_string(deg));
    }
  }

  const std::set<Relation> rel(q.relations.begin(), q.relations.end());
  for (const auto& [first, second] : rel) {
    if (first.dst != second.src) {
      return fail("relation not a composable length-2 path: " +
                  arrow_str(first) + " then " + arrow_str(second));
    }
  }

  // Pairing axioms: each arrow admits at most one continuation inside the
  // relation ideal and at most one outside it, and dually for predecessors.
  for (const auto& alpha : q.arrows) {
    int rel_out = 0, free_out = 0, rel_in = 0, free_in = 0;
    for (const auto& beta : q.arrows) {
      if (beta.src == alpha.dst) {
        (rel.count({alpha, beta}) ? rel_out : free_out) += 1;
      }
      if (beta.dst == alpha.src) {
        (rel.count({beta, alpha}) ? rel_in : free_in) += 1;
      }
    }
    if (rel_out > 1) {
      return fail("arrow " + arrow_str(alpha) +
                  " is killed by more than one successor");
    }
    if (free_out > 1) {
      return fail("arrow " + arrow_str(alpha) +
                  " composes freely with more than one successor");
    }
    if (rel_in > 1) {
      return fail("arrow " + arrow_str(alpha) +
                  " kills more than one predecessor");
    }
    if (free_in > 1) {
      return fail("arrow " + arrow_str(alpha) +
                  " composes freely with more than one predecessor");
    }
  }
  return {true, ""};
}

bool quiver_equal(const Quiver& q1, const Quiver& q2,
                  const std::map<std::string, std::string>& dictionary) {
  std::set<std::string> image;
  for (const auto& v : q1.vertices) {
    auto it = dictionary.find(v);
    if (it == dictionary.end()) return false;  // dictionary not total
    image.insert(it->second);
  }
  if (image.size() != q1.vertices.size()) return false;
  if (std::set<std::string>(q2.vertices.begin(), q2.vertices.end()) != image) {
    return false;
  }

  auto map_arrow = [&](const Arrow& a) {
    return Arrow{a.kind, dictionary.at(a.src), dictionary.at(a.dst)};
  };
  std::set<Arrow> mapped_arrows;
  for (const auto& a : q1.arrows) mapped_arrows.insert(map_arrow(a));
  if (mapped_arrows != std::set<Arrow>(q2.arrows.begin(), q2.arrows.end())) {
    return false;
  }

  std::set<Relation> mapped_rel;
  for (const auto& [first, second] : q1.relations) {
    mapped_rel.emplace(map_arrow(first), map_arrow(second));
  }
  return mapped_rel ==
         std::set<Relation>(q2.relations.begin(), q2.relations.end());
}

std::string to_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n  rankdir=LR;\n";
  for (const auto& v : q.vertices) {
    os << "  \"" << v << "\";\n";
  }
  for (const auto& a : q.arrows) {
    os << "  \"" << a.src << "\" -> \"" << a.dst << "\" [label=\"" << a.kind
       << "\"];\n";
  }
  for (const auto& [first, second] : q.relations) {
    os << "  \"" << first.src << "\" -> \"" << second.dst
       << "\" [style=dashed, constraint=false, label=\"" << second.kind
       << first.kind << "=0\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace annuli
