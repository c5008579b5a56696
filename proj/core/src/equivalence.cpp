#include "tcat/equivalence.hpp"

#include <algorithm>
#include <string>

#include "tcat/enumerate.hpp"

namespace tcat {

Skeleton skeleton(const FiniteCategory& c) {
  std::vector<ObjectId> rep(c.object_count(), kNone);
  std::vector<ObjectId> reps;
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    for (ObjectId r : reps) {
      for (MorphismId m : c.hom(r, x)) {
        if (c.is_isomorphism(m)) {
          rep[x] = r;
          break;
        }
      }
      if (rep[x] != kNone) break;
    }
    if (rep[x] == kNone) {
      rep[x] = x;
      reps.push_back(x);
    }
  }
  Skeleton s;
  s.sub = full_subcategory(c, reps);
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    s.class_of.push_back(static_cast<ObjectId>(
        std::find(reps.begin(), reps.end(), rep[x]) - reps.begin()));
  }
  return s;
}

int iso_class_count(const FiniteCategory& c) { return skeleton(c).sub.category.object_count(); }

namespace {

std::vector<std::size_t> hom_sizes(const FiniteCategory& c) {
  std::vector<std::size_t> out;
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    for (ObjectId y = 0; y < c.object_count(); ++y) out.push_back(c.hom(x, y).size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TriState are_equivalent(const FiniteCategory& a, const FiniteCategory& b) {
  Skeleton sa = skeleton(a), sb = skeleton(b);
  const FiniteCategory& ka = sa.sub.category;
  const FiniteCategory& kb = sb.sub.category;
  if (ka.object_count() != kb.object_count()) {
    return TriState::no("isomorphism class counts differ: " + std::to_string(ka.object_count()) +
                        " vs " + std::to_string(kb.object_count()));
  }
  if (hom_sizes(ka) != hom_sizes(kb)) return TriState::no("hom-set sizes differ");
  if (find_isomorphism(ka, kb)) return TriState::yes();
  return TriState::no("skeletons are not isomorphic");
}

TriState are_equivalent(const LocalizedCategory& a, const LocalizedCategory& b) {
  if (a.status != Status::complete) return TriState::unknown("first localization: " + a.reason);
  if (b.status != Status::complete) return TriState::unknown("second localization: " + b.reason);
  return are_equivalent(materialize(a).category, materialize(b).category);
}

TriState are_equivalent(const LocalizedCategory& a, const FiniteCategory& b) {
  if (a.status != Status::complete) return TriState::unknown(a.reason);
  return are_equivalent(materialize(a).category, b);
}

bool is_equivalence(const Functor& f, const FiniteCategory& a, const FiniteCategory& b) {
  for (ObjectId x = 0; x < a.object_count(); ++x) {
    for (ObjectId y = 0; y < a.object_count(); ++y) {
      auto src = a.hom(x, y);
      auto dst = b.hom(f.objects[x], f.objects[y]);
      if (src.size() != dst.size()) return false;
      std::vector<MorphismId> image;
      for (MorphismId m : src) image.push_back(f.morphisms[m]);
      std::sort(image.begin(), image.end());
      if (std::unique(image.begin(), image.end()) != image.end()) return false;
    }
  }
  for (ObjectId y = 0; y < b.object_count(); ++y) {
    bool hit = false;
    for (ObjectId x = 0; x < a.object_count() && !hit; ++x) {
      for (MorphismId m : b.hom(f.objects[x], y)) {
        if (b.is_isomorphism(m)) {
          hit = true;
          break;
        }
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace tcat
