#include "ybcs/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "ybcs/errors.hpp"

namespace ybcs {

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || v >= n || seen[v])
      throw ValidationError("image array is not a bijection");
    seen[v] = 1;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(degree);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw ValidationError("cycle point out of range");
      p.images_[from] = to;
    }
  }
  return from_images(std::move(p.images_));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (int i = 0; i < degree(); ++i) p.images_[images_[i]] = i;
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation p;
  p.images_.resize(b.images_.size());
  for (int i = 0; i < b.degree(); ++i) p.images_[i] = a.images_[b.images_[i]];
  return p;
}

int Permutation::order() const {
  int ord = 1;
  for (int len : cycle_lengths()) ord = std::lcm(ord, len);
  return ord;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (int i = 0; i < degree(); ++i)
    if (images_[i] == i) out.push_back(i);
  return out;
}

int Permutation::fixed_point_count() const {
  int c = 0;
  for (int i = 0; i < degree(); ++i) c += (images_[i] == i);
  return c;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<char> seen(degree(), 0);
  std::vector<int> lens;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

}  // namespace ybcs
