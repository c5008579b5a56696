#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tcat/functor.hpp"
#include "tcat/marking.hpp"
#include "tcat/shapes.hpp"
#include "tcat/two_category.hpp"

namespace tcat {

/// An n-simplex of the Duskin nerve, as a strict functor 𝕆^n -> C together
/// with the corresponding normal lax functor [n] -> C.
struct NerveSimplex {
  int dimension = 0;
  TwoFunctor strict;
  LaxFunctor lax;
  friend bool operator==(const NerveSimplex& a, const NerveSimplex& b) {
    return a.dimension == b.dimension && a.strict == b.strict;
  }
  friend bool operator<(const NerveSimplex& a, const NerveSimplex& b);
};

struct NerveOptions {
  int max_dimension = 4;
  std::size_t max_simplices = 1000000;
};

/// All strict functors 𝕆^n -> C, sorted canonically. Throws ResourceError
/// past max_simplices and PreconditionError past max_dimension.
std::vector<NerveSimplex> duskin_simplices(const TwoCategory& c, int n,
                                           const NerveOptions& options = {});

/// All normal lax functors [n] -> C, found by a direct search over object,
/// 1-cell and compositor choices.
std::vector<LaxFunctor> normal_lax_functors(const TwoCategory& c, int n,
                                            const NerveOptions& options = {});

/// The lax view of a strict simplex: precomposition with ξ_n.
LaxFunctor lax_view(const TwoFunctor& strict, int n, const TwoCategory& c);

NerveSimplex face(const NerveSimplex& s, int i, const TwoCategory& c);
NerveSimplex degeneracy(const NerveSimplex& s, int i, const TwoCategory& c);

/// Per 1-simplex of duskin_simplices(C, 1): true iff its edge is marked.
std::vector<bool> nerve_marking(const MarkedTwoCategory& c,
                                const std::vector<NerveSimplex>& edges);

/// Human-readable lax view: vertices, edges f_ij and fillers θ_ijk.
std::string describe(const NerveSimplex& s, const TwoCategory& c);

}  // namespace tcat
