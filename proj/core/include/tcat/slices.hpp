#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "tcat/functor.hpp"
#include "tcat/marking.hpp"
#include "tcat/two_category.hpp"

namespace tcat {

/// Direction of slice fillers. For an object g: d -> F(c) and a carrier u,
/// a lax filler is g' => F(u)∘g and an oplax filler is F(u)∘g => g'.
enum class Convention { lax, oplax };

const char* to_string(Convention c);

/// A slice of C under an object d of D along a strict functor F: C -> D.
/// Every cell of the slice records the data it was built from.
struct Slice {
  MarkedTwoCategory marked;
  Convention convention = Convention::lax;
  ObjectId apex = kNone;
  /// Per object: (c, g) with g: d -> F(c).
  std::vector<std::pair<ObjectId, OneCellId>> objects;
  /// Per 1-cell: (u, β).
  std::vector<std::pair<OneCellId, TwoCellId>> one_cells;
  /// Per 2-cell: carrier θ.
  std::vector<TwoCellId> two_cells;

  const TwoCategory& category() const { return marked.category; }
  std::optional<ObjectId> find_object(ObjectId c, OneCellId g) const;
  std::optional<OneCellId> find_one_cell(ObjectId from, ObjectId to, OneCellId u,
                                         TwoCellId beta) const;
  std::optional<TwoCellId> find_two_cell(OneCellId from, OneCellId to, TwoCellId theta) const;

  std::map<std::pair<ObjectId, OneCellId>, ObjectId> object_index;
  std::map<std::tuple<ObjectId, ObjectId, OneCellId, TwoCellId>, OneCellId> one_cell_index;
  std::map<std::tuple<OneCellId, OneCellId, TwoCellId>, TwoCellId> two_cell_index;
};

/// C_{c↙}: objects are 1-cells out of c. Only identities are marked.
Slice lax_slice(const TwoCategory& c, ObjectId apex);
/// The oplax slice, built as dualize(lax_slice(dualize(C, op2), c), op2).
Slice oplax_slice(const TwoCategory& c, ObjectId apex);

/// The slice of C under d along F. A 1-cell (u, β) is marked iff u is
/// marked in C and β is invertible.
Slice marked_slice(const TwoFunctor& f, const MarkedTwoCategory& c, const TwoCategory& d,
                   ObjectId apex, Convention convention);

/// The strict forgetful functor from the slice to C.
TwoFunctor slice_forgetful(const Slice& s);

/// F_{↙}: C_{c↙} -> D_{F(c)↙} for a normal lax F, on lax slices.
LaxFunctor slice_pushforward(const LaxFunctor& f, const TwoCategory& c, const TwoCategory& d,
                             const Slice& source, const Slice& target);

}  // namespace tcat
