#include "annuli/perms.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace annuli {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= size() || hit[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument(
          "permutation images are not a bijection on {0,...," +
          std::to_string(size() - 1) + "}");
    }
    hit[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < size(); ++x) {
    inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(x)])] = x;
  }
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) {
    throw std::invalid_argument("composing permutations of different degrees");
  }
  std::vector<int> im(static_cast<std::size_t>(f.size()));
  for (int x = 0; x < f.size(); ++x) {
    im[static_cast<std::size_t>(x)] = f(g(x));
  }
  return Permutation(std::move(im));
}

Permutation tau_right(int r, int d) {
  if (r < 1 || d < 1) {
    throw std::invalid_argument("tau_right needs r >= 1 and d >= 1");
  }
  std::vector<int> im(static_cast<std::size_t>(r) * d);
  for (int k = 0; k < d; ++k) {
    for (int c = 0; c < r; ++c) {
      im[static_cast<std::size_t>(k * r + c)] = k * r + (c - 1 + r) % r;
    }
  }
  return Permutation(std::move(im));
}

Permutation tau_left(int l, int d) {
  if (l < 1 || d < 1) {
    throw std::invalid_argument("tau_left needs l >= 1 and d >= 1");
  }
  std::vector<int> im(static_cast<std::size_t>(l) * d);
  for (int k = 0; k < d; ++k) {
    for (int c = 0; c < l; ++c) {
      im[static_cast<std::size_t>(k * l + c)] = k * l + (c + 1) % l;
    }
  }
  return Permutation(std::move(im));
}

Permutation boundary_permutation(const Permutation& sigma, int l_next,
                                 int d_next, int r_cur, int d_cur) {
  const long long n = static_cast<long long>(r_cur) * d_cur;
  if (static_cast<long long>(l_next) * d_next != n || sigma.size() != n) {
    throw std::invalid_argument(
        "boundary_permutation: degree mismatch (need r_cur*d_cur = "
        "l_next*d_next = deg sigma)");
  }
  return sigma.inverse() * tau_left(l_next, d_next) * sigma *
         tau_right(r_cur, d_cur);
}

std::vector<std::vector<int>> cycle_decomposition(const Permutation& p) {
  std::vector<std::vector<int>> cycles;
  std::vector<char> done(static_cast<std::size_t>(p.size()), 0);
  for (int start = 0; start < p.size(); ++start) {
    if (done[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    for (int x = start; !done[static_cast<std::size_t>(x)]; x = p(x)) {
      done[static_cast<std::size_t>(x)] = 1;
      cyc.push_back(x);
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::string cycles_to_string(const std::vector<std::vector<int>>& cycles) {
  std::ostringstream os;
  for (const auto& cyc : cycles) {
    os << "(";
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << " ";
      os << cyc[i];
    }
    os << ")";
  }
  return os.str();
}

}  // namespace annuli
