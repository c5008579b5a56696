#pragma once

#include <vector>

#include "tcat/category.hpp"
#include "tcat/ids.hpp"
#include "tcat/two_category.hpp"

namespace tcat {

/// A functor between finite 1-categories, as object and morphism maps.
struct Functor {
  std::vector<ObjectId> objects;
  std::vector<MorphismId> morphisms;
  friend bool operator==(const Functor&, const Functor&) = default;
};

/// Components of a natural transformation, one per source object.
struct NaturalTransformation {
  std::vector<MorphismId> components;
  friend bool operator==(const NaturalTransformation&, const NaturalTransformation&) = default;
};

Functor identity_functor(const FiniteCategory& c);
/// g ∘ f.
Functor compose(const Functor& g, const Functor& f);

/// A strict 2-functor as cell maps.
struct TwoFunctor {
  std::vector<ObjectId> objects;
  std::vector<OneCellId> one_cells;
  std::vector<TwoCellId> two_cells;
  friend bool operator==(const TwoFunctor&, const TwoFunctor&) = default;
};

TwoFunctor identity_two_functor(const TwoCategory& c);
TwoFunctor compose(const TwoFunctor& g, const TwoFunctor& f);

/// A normal lax functor. The compositor for composable (g, f) is a 2-cell
/// F(g ∘ f) => F(g) ∘ F(f), stored for every composable pair including
/// identities.
struct LaxFunctor {
  std::vector<ObjectId> objects;
  std::vector<OneCellId> one_cells;
  std::vector<TwoCellId> two_cells;
  PairTable compositor;
  TwoCellId sigma(OneCellId g, OneCellId f) const { return compositor.find(g, f); }
  friend bool operator==(const LaxFunctor&, const LaxFunctor&) = default;
};

/// A strict functor viewed as a normal lax functor with identity compositors.
LaxFunctor as_lax(const TwoFunctor& f, const TwoCategory& source, const TwoCategory& target);

/// G ∘ F with compositor G(σ^F_{g,f}) followed by σ^G_{Fg,Ff}.
LaxFunctor compose(const LaxFunctor& g, const LaxFunctor& f, const TwoCategory& a,
                   const TwoCategory& b, const TwoCategory& c);

/// A normal lax functor into a locally thin target, given on objects and
/// 1-cells. 2-cells and compositors are the unique ones; throws
/// PreconditionError when a required 2-cell does not exist.
LaxFunctor lax_into_thin(const TwoCategory& source, const TwoCategory& target,
                         std::vector<ObjectId> objects, std::vector<OneCellId> one_cells);

}  // namespace tcat
