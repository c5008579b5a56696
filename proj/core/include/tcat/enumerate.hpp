#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "tcat/category.hpp"
#include "tcat/functor.hpp"
#include "tcat/two_category.hpp"

namespace tcat {

struct EnumerationOptions {
  /// Require injective maps on objects, 1-cells and 2-cells.
  bool injective = false;
  /// Fixed object images; kNone leaves an object free.
  std::vector<ObjectId> fixed_objects;
};

/// Calls visit for every strict 2-functor source -> target, in a
/// deterministic order. Stops early when visit returns false.
/// Returns the number of functors visited.
std::size_t enumerate_two_functors(const TwoCategory& source, const TwoCategory& target,
                                   const std::function<bool(const TwoFunctor&)>& visit,
                                   const EnumerationOptions& options = {});

std::optional<TwoFunctor> find_isomorphism(const TwoCategory& a, const TwoCategory& b);

std::size_t enumerate_functors(const FiniteCategory& source, const FiniteCategory& target,
                               const std::function<bool(const Functor&)>& visit);

std::size_t enumerate_natural_transformations(
    const FiniteCategory& source, const FiniteCategory& target, const Functor& f,
    const Functor& g, const std::function<bool(const NaturalTransformation&)>& visit);

std::optional<Functor> find_isomorphism(const FiniteCategory& a, const FiniteCategory& b);

}  // namespace tcat
