#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

namespace ybcs {

// A permutation of {0..n-1} stored as its image array.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int degree) {
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), 0);
    return p;
  }

  // Validates that `images` is a bijection; throws ValidationError otherwise.
  static Permutation from_images(std::vector<int> images);

  // Builds a permutation from disjoint cycles in 0-based points,
  // e.g. {{1,3},{0,2}} on `degree` points. Unmentioned points are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  // Composition: (a * b)(x) = a(b(x)), i.e. b acts first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  int order() const;
  std::vector<int> fixed_points() const;
  int fixed_point_count() const;

  // Lengths of all cycles including fixed points, sorted ascending.
  std::vector<int> cycle_lengths() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace ybcs
