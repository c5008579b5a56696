#include "tcat/dual.hpp"

namespace tcat {

TwoCategory dualize(const TwoCategory& c, DualMode mode) {
  const bool flip1 = mode != DualMode::op2;
  const bool flip2 = mode != DualMode::op1;
  TwoCategory d(c.name());
  for (auto const& [dim, id] : creation_order(c)) {
    if (dim == 0) {
      OneCellId i = c.identity(id);
      d.add_object(c.object_name(id), c.one_cell(i).name);
      d.rename_two_cell(d.identity2(i), c.two_cell(c.identity2(i)).name);
    } else if (dim == 1) {
      const OneCell& ff = c.one_cell(id);
      if (flip1) {
        d.add_one_cell(ff.target, ff.source, ff.name);
      } else {
        d.add_one_cell(ff.source, ff.target, ff.name);
      }
      d.rename_two_cell(d.identity2(id), c.two_cell(c.identity2(id)).name);
    } else {
      const TwoCell& aa = c.two_cell(id);
      if (flip2) {
        d.add_two_cell(aa.target, aa.source, aa.name);
      } else {
        d.add_two_cell(aa.source, aa.target, aa.name);
      }
    }
  }
  for (auto const& [g, f, gf] : c.compose_table().entries()) {
    if (flip1) {
      d.set_compose(f, g, gf);
    } else {
      d.set_compose(g, f, gf);
    }
  }
  for (auto const& [b, a, ba] : c.vertical_table().entries()) {
    if (flip2) {
      d.set_vertical(a, b, ba);
    } else {
      d.set_vertical(b, a, ba);
    }
  }
  for (auto const& [b, a, ba] : c.horizontal_table().entries()) {
    if (flip1) {
      d.set_horizontal(a, b, ba);
    } else {
      d.set_horizontal(b, a, ba);
    }
  }
  return d;
}

MarkedTwoCategory dualize(const MarkedTwoCategory& c, DualMode mode) {
  return {dualize(c.category, mode), c.marking};
}

}  // namespace tcat
