#pragma once

#include <string>
#include <vector>

#include "tcat/category.hpp"
#include "tcat/functor.hpp"
#include "tcat/marking.hpp"
#include "tcat/two_category.hpp"

namespace tcat {

enum class ViolationKind {
  closure,
  endpoints,
  associativity,
  unit,
  interchange,
  functoriality,
  naturality,
  coherence,
  marking,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string summary() const;
};

/// Law checks. Dangling ids throw StructuralError before any law is checked.
ValidationReport validate(const FiniteCategory& c);
ValidationReport validate(const TwoCategory& c);
ValidationReport validate(const MarkedTwoCategory& c);
ValidationReport validate(const Functor& f, const FiniteCategory& source,
                          const FiniteCategory& target);
ValidationReport validate(const NaturalTransformation& t, const Functor& f, const Functor& g,
                          const FiniteCategory& source, const FiniteCategory& target);
ValidationReport validate(const TwoFunctor& f, const TwoCategory& source,
                          const TwoCategory& target);
ValidationReport validate(const LaxFunctor& f, const TwoCategory& source,
                          const TwoCategory& target);
/// A strict functor of marked 2-categories.
ValidationReport validate(const TwoFunctor& f, const MarkedTwoCategory& source,
                          const MarkedTwoCategory& target);

}  // namespace tcat
