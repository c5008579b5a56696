#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcat/category.hpp"
#include "tcat/functor.hpp"
#include "tcat/homotopy.hpp"
#include "tcat/localization.hpp"
#include "tcat/marking.hpp"
#include "tcat/slices.hpp"

namespace tcat {

/// ho(slice)[W⁻¹] for the marked slice of f under d.
struct LocalizedSlice {
  Slice slice;
  HomotopyCategory ho;
  LocalizedCategory localized;
};
LocalizedSlice localized_slice(const MarkedFunctor& f, ObjectId d, Convention convention,
                               const Limits& limits);

/// One condition evaluated at one object of the target.
struct ConditionTrace {
  ObjectId object = kNone;
  std::string condition;
  TriState result = TriState::yes();
};

enum class Verdict { cofinal, not_cofinal, unknown };
const char* to_string(Verdict v);

struct CofinalityReport {
  Verdict verdict = Verdict::unknown;
  /// For NotCofinal: the object d, the failing condition and the morphism.
  ObjectId witness_object = kNone;
  std::string witness_condition;
  std::string witness;
  std::vector<ConditionTrace> traces;
  Convention convention = Convention::oplax;
  Limits limits;
  std::string note;
};

/// The three ho-level conditions: (1) some g_d: d -> f(c) initial in both
/// localized slices, (2) every marked d -> f(c) initial in the slice of C,
/// (3) precomposition with marked b -> d preserves initial objects between
/// slices of C.
CofinalityReport check_decat_cofinality(const MarkedFunctor& f, const Limits& limits = {},
                                        Convention convention = Convention::oplax);

struct HypothesisReport {
  std::vector<ConditionTrace> traces;
  /// Conditions 1-3 together, and the two corollary conditions together.
  TriState theorem = TriState::yes();
  TriState corollary = TriState::yes();
  Convention convention = Convention::lax;
  std::string note;
};
HypothesisReport check_adagger_hypotheses(const MarkedFunctor& f, const Limits& limits = {},
                                          Convention convention = Convention::lax);

/// The 1-categorical coslice d/F.
struct Coslice {
  FiniteCategory category;
  /// Per object: (c, g: d -> F(c)).
  std::vector<std::pair<ObjectId, MorphismId>> objects;
  /// Per morphism: the carrier in C.
  std::vector<MorphismId> carriers;
};
Coslice coslice(const Functor& f, const FiniteCategory& c, const FiniteCategory& d, ObjectId apex);

/// The full subcategory of d/F on the invertible g.
struct WeakFiber {
  Coslice coslice;
  Subcategory fiber;
};
WeakFiber weak_fiber(const Functor& f, const FiniteCategory& c, const FiniteCategory& d,
                     ObjectId apex);

/// Every d has a nonempty coslice whose localization at all morphisms
/// makes every object initial.
TriState check_quillen_a(const Functor& f, const FiniteCategory& c, const FiniteCategory& d,
                         const Limits& limits = {});

/// For each d, B_d as a list of coslice objects (c, g) with g invertible.
/// Contractibility of B_d is certified only by an initial or terminal object.
/// Throws PreconditionError when some g is not invertible.
TriState check_walde(const Functor& f, const FiniteCategory& c, const FiniteCategory& d,
                     const std::vector<std::vector<std::pair<ObjectId, MorphismId>>>& family,
                     const Limits& limits = {});

struct ProbeReport {
  ObjectId object = kNone;
  /// El(R_d) ≅ D_{d↗} and El(f*R_d) ≅ C_{d↗} by explicit cell maps.
  bool target_el_matches = false;
  bool source_el_matches = false;
  /// Isomorphism class counts of the two localized slices; -1 when unknown.
  int source_classes = -1;
  int target_classes = -1;
  TriState equivalent = TriState::unknown("not computed");
  /// Whether the functor induced by f is itself an equivalence.
  TriState induced_equivalence = TriState::unknown("not computed");
};
ProbeReport representable_probe(const MarkedFunctor& f, ObjectId d, const Limits& limits = {});

}  // namespace tcat
