#pragma once

#include <vector>

#include "tcat/category.hpp"
#include "tcat/functor.hpp"
#include "tcat/localization.hpp"

namespace tcat {

/// The full subcategory on the least object id of each isomorphism class.
struct Skeleton {
  Subcategory sub;
  /// Isomorphism class of each object, as an object of sub.category.
  std::vector<ObjectId> class_of;
};
Skeleton skeleton(const FiniteCategory& c);
int iso_class_count(const FiniteCategory& c);

/// Exact for finite categories: Yes iff the skeletons are isomorphic.
TriState are_equivalent(const FiniteCategory& a, const FiniteCategory& b);
/// Unknown unless both localizations are Complete.
TriState are_equivalent(const LocalizedCategory& a, const LocalizedCategory& b);
TriState are_equivalent(const LocalizedCategory& a, const FiniteCategory& b);

/// Fully faithful and essentially surjective.
bool is_equivalence(const Functor& f, const FiniteCategory& a, const FiniteCategory& b);

}  // namespace tcat
