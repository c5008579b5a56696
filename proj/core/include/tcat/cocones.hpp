#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tcat/category.hpp"
#include "tcat/functor.hpp"
#include "tcat/grothendieck.hpp"
#include "tcat/homotopy.hpp"
#include "tcat/localization.hpp"
#include "tcat/marking.hpp"
#include "tcat/two_category.hpp"

namespace tcat {

/// A cocone under a strict F: C -> A with tip a:
/// legs α_c: F(c) -> a and fillers α_u: α_c => α_{c'} ∘ F(u).
struct MarkedCocone {
  ObjectId tip = kNone;
  std::vector<OneCellId> legs;
  std::vector<TwoCellId> fillers;
  friend bool operator==(const MarkedCocone&, const MarkedCocone&) = default;
};

/// Condition 0 is endpoint or shape data; 1 invertibility over marked
/// cells; 2 identities and composites; 3 compatibility with 2-cells.
struct CoconeViolation {
  int condition = 0;
  std::string message;
};

struct CoconeReport {
  std::vector<CoconeViolation> violations;
  bool ok() const { return violations.empty(); }
  bool cites(int condition) const;
  std::string summary() const;
};

CoconeReport check_marked_cocone(const TwoFunctor& f, const MarkedTwoCategory& c,
                                 const TwoCategory& a, const MarkedCocone& cocone);

/// θ: tip(α) -> tip(β) with ε_c: θ ∘ α_c => β_c.
struct CoconeMorphism {
  OneCellId theta = kNone;
  std::vector<TwoCellId> components;
};

CoconeReport check_cocone_morphism(const TwoFunctor& f, const TwoCategory& c,
                                   const TwoCategory& a, const MarkedCocone& alpha,
                                   const MarkedCocone& beta, const CoconeMorphism& m);
/// Marked iff every ε_c is invertible.
bool is_marked(const CoconeMorphism& m, const TwoCategory& a);

struct CoconeSearch {
  /// kNone allows every tip.
  ObjectId tip = kNone;
  /// Candidate assignments examined before a ResourceError.
  std::size_t budget = 1000000;
};

/// Every marked cocone, in a deterministic order. Stops early when visit
/// returns false. Returns the number visited.
std::size_t enumerate_marked_cocones(const TwoFunctor& f, const MarkedTwoCategory& c,
                                     const TwoCategory& a,
                                     const std::function<bool(const MarkedCocone&)>& visit,
                                     const CoconeSearch& search = {});

std::size_t enumerate_cocone_morphisms(const TwoFunctor& f, const TwoCategory& c,
                                       const TwoCategory& a, const MarkedCocone& alpha,
                                       const MarkedCocone& beta,
                                       const std::function<bool(const CoconeMorphism&)>& visit);

/// A cocone under F: C -> Cat with a finite tip category.
struct CatCocone {
  FiniteCategory tip;
  std::vector<Functor> legs;
  std::vector<NaturalTransformation> fillers;
};

CoconeReport check_marked_cocone(const CatValuedFunctor& f, const CatCocone& cocone);

/// The full sub-2-category of Cat on some finite categories: every functor
/// and every natural transformation between them.
struct CatFragment {
  TwoCategory category;
  std::vector<FiniteCategory> categories;
  std::vector<Functor> functors;
  std::vector<NaturalTransformation> transformations;
  OneCellId find_functor(ObjectId a, ObjectId b, const Functor& f) const;
  TwoCellId find_transformation(OneCellId from, OneCellId to, const NaturalTransformation& t) const;

  std::map<std::tuple<ObjectId, ObjectId, std::vector<ObjectId>, std::vector<MorphismId>>, OneCellId>
      functor_index;
  std::map<std::tuple<OneCellId, OneCellId, std::vector<MorphismId>>, TwoCellId> transformation_index;
};

/// Throws ResourceError when more than budget cells would be created.
CatFragment cat_fragment(const std::vector<FiniteCategory>& categories, std::size_t budget = 20000);

/// F as a strict functor into a fragment; object_map sends each object of
/// the source to the fragment object equal to F of it.
TwoFunctor embed(const CatValuedFunctor& f, const CatFragment& fragment,
                 const std::vector<ObjectId>& object_map);
MarkedCocone embed(const CatCocone& cocone, const CatValuedFunctor& f, const CatFragment& fragment,
                   const std::vector<ObjectId>& object_map, ObjectId tip);

/// colim† F computed as ho(El(F))[W⁻¹], with the canonical cocone
/// x ↦ (c, x) when the localization is Complete.
struct MarkedColimit {
  GrothendieckTotal el;
  HomotopyCategory ho;
  std::vector<MorphismId> marking;
  LocalizedCategory localized;
  std::optional<CatCocone> canonical;
};
MarkedColimit marked_colimit(const CatValuedFunctor& f, const Limits& limits = {});

}  // namespace tcat
