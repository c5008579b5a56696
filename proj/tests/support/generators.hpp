#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "tcat/category.hpp"
#include "tcat/marking.hpp"
#include "tcat/two_category.hpp"

namespace testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }

 private:
  std::mt19937_64 engine_;
};

/// A preorder on at most max_objects objects; cycles give isomorphisms.
tcat::FiniteCategory random_preorder(Rng& rng, int max_objects, int max_morphisms);
/// The free category on a random acyclic quiver.
tcat::FiniteCategory random_path_category(Rng& rng, int max_objects, int max_morphisms);
/// One of the two above.
tcat::FiniteCategory random_category(Rng& rng, int max_objects, int max_morphisms);

/// Locally thin 2-category: a 2-cell u => v exists iff le(u, v). le must be
/// a preorder on each hom compatible with composition.
tcat::TwoCategory locally_thin(const tcat::FiniteCategory& c,
                               const std::function<bool(tcat::MorphismId, tcat::MorphismId)>& le);

/// Random locally discrete or locally thin 2-category with a random marking;
/// max_one_cells counts identities.
tcat::MarkedTwoCategory random_marked_two_category(Rng& rng, int max_objects, int max_one_cells);

/// A random set of non-identity morphisms.
std::vector<tcat::MorphismId> random_subset(Rng& rng, const tcat::FiniteCategory& c, double p);

}  // namespace testing
