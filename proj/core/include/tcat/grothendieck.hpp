#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "tcat/category.hpp"
#include "tcat/functor.hpp"
#include "tcat/marking.hpp"
#include "tcat/two_category.hpp"
#include "tcat/validate.hpp"

namespace tcat {

/// A strict 2-functor F: C -> Cat with finite values.
/// F(θ) for θ: u => v is a natural transformation F(u) => F(v).
struct CatValuedFunctor {
  MarkedTwoCategory source;
  std::vector<FiniteCategory> categories;
  std::vector<Functor> one_cells;
  std::vector<NaturalTransformation> two_cells;
};

ValidationReport validate(const CatValuedFunctor& f);

CatValuedFunctor constant_functor(const MarkedTwoCategory& source, const FiniteCategory& value);

/// R_d = D(d, -): objects go to hom categories, u to u ∘ -, θ to θ * id.
CatValuedFunctor representable(const MarkedTwoCategory& d, ObjectId apex);

/// F ∘ g for a strict g: source -> F.source.
CatValuedFunctor restrict(const CatValuedFunctor& f, const TwoFunctor& g,
                          const MarkedTwoCategory& source);

/// El(F)†. Objects (c, x); 1-cells (u, φ: F(u)x -> y); 2-cells θ: u => v
/// with ψ ∘ F(θ)_x = φ. (u, φ) is marked iff u is marked and φ invertible.
struct GrothendieckTotal {
  MarkedTwoCategory marked;
  std::vector<std::pair<ObjectId, ObjectId>> objects;
  std::vector<std::pair<OneCellId, MorphismId>> one_cells;
  std::vector<TwoCellId> two_cells;
  /// The projection El(F) -> C.
  TwoFunctor projection;

  const TwoCategory& category() const { return marked.category; }
  std::optional<ObjectId> find_object(ObjectId c, ObjectId x) const;
  std::optional<OneCellId> find_one_cell(ObjectId from, ObjectId to, OneCellId u,
                                         MorphismId phi) const;

  std::map<std::pair<ObjectId, ObjectId>, ObjectId> object_index;
  std::map<std::tuple<ObjectId, ObjectId, OneCellId, MorphismId>, OneCellId> one_cell_index;
};

GrothendieckTotal grothendieck(const CatValuedFunctor& f);

}  // namespace tcat
