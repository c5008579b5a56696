#pragma once

#include <string>
#include <vector>

#include "tcat/category.hpp"
#include "tcat/cocones.hpp"
#include "tcat/functor.hpp"
#include "tcat/grothendieck.hpp"
#include "tcat/marking.hpp"
#include "tcat/two_category.hpp"

namespace tcat::fixtures {

TwoCategory terminal();
/// Objects a, b; f: a -> b and g: b -> a inverse to each other.
TwoCategory walking_isomorphism();
/// f: a -> b, g: b -> c, h = g ∘ f, and an idempotent 2-cell t: h => h.
TwoCategory three_object_two_category();

/// [2] with every 1-cell except 1->2 marked.
MarkedTwoCategory interval_2_diamond();
/// [2] with every 1-cell marked.
MarkedTwoCategory interval_2_sharp();

std::vector<std::string> two_category_names();
/// Throws PreconditionError for an unknown name.
MarkedTwoCategory two_category(const std::string& name);

/// The identity-on-cells inclusion [2]^♦ -> [2]^♯.
MarkedFunctor diamond_to_sharp();
/// [0]^♯ -> [1]^♯ at the terminal object 1.
MarkedFunctor terminal_inclusion();
/// [0] -> {0, 1} discrete; nothing reaches f from 1.
MarkedFunctor isolated_object();
/// {0} -> [1], locally discrete with every 1-cell marked.
MarkedFunctor zero_into_interval();

std::vector<std::string> marked_functor_names();
MarkedFunctor marked_functor(const std::string& name);

/// T: [2] -> Cat with T(0) = T(2) = [0], T(1) = [1], T(0->1) = R picking 1,
/// T(1->2) = L and T(0->2) = id.
CatValuedFunctor adjunction_T();
/// The same T over [2] with every 1-cell marked.
CatValuedFunctor adjunction_T_sharp();

/// The cocone with tip [1]: legs R, id, R and fillers id, η, id.
CatCocone adjunction_cocone();

std::vector<std::string> cat_valued_functor_names();
CatValuedFunctor cat_valued_functor(const std::string& name);

std::vector<std::string> category_names();
/// "interval" is [1], "point" is [0].
FiniteCategory category(const std::string& name);

}  // namespace tcat::fixtures
