#pragma once

#include <vector>

#include "tcat/category.hpp"
#include "tcat/functor.hpp"
#include "tcat/marking.hpp"
#include "tcat/two_category.hpp"

namespace tcat {

/// The homotopy category: 1-cells modulo the equivalence relation generated
/// by 2-cells. Objects keep their ids.
struct HomotopyCategory {
  FiniteCategory category;
  /// Class of each 1-cell, as a morphism of category.
  std::vector<MorphismId> class_of;
  /// A representative 1-cell for each morphism of category.
  std::vector<OneCellId> representative;
};

HomotopyCategory homotopy_category(const TwoCategory& c);

/// ho applied to a strict functor.
Functor homotopy_functor(const TwoFunctor& f, const HomotopyCategory& source,
                         const HomotopyCategory& target);

/// Image of a marking in the homotopy category.
std::vector<MorphismId> homotopy_marking(const HomotopyCategory& h, const Marking& marking);

}  // namespace tcat
