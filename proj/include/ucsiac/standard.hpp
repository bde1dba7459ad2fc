#pragma once

// Named algebras used across the tools and tests.

#include "ucsiac/algebra.hpp"

namespace ucs {

/// sl2 on (e, h, f) = (e_0, e_1, e_2): <e,h> = -2e, <e,f> = h, <h,f> = -2f.
inline ACAlgebra sl2(const Field& f) {
  return ACAlgebra::from_ints(f, 3, {{0, 1, {-2, 0, 0}}, {0, 2, {0, 1, 0}}, {1, 2, {0, 0, -2}}});
}

/// The four-dimensional algebra carried by the deleted permutation module of
/// AGL(1,5) (basis u_i = x_i - x_4), with the product map normalized so its
/// first nonzero entry is 1. Defined over every field of characteristic != 2, 5.
inline ACAlgebra th52b(const Field& f) {
  return ACAlgebra::from_ints(f, 4,
                              {{0, 1, {0, 1, 2, -2}},
                               {0, 2, {-1, 2, 0, -2}},
                               {0, 3, {1, 2, -2, -1}},
                               {1, 2, {-2, 1, -1, 2}},
                               {1, 3, {2, 0, -2, 1}},
                               {2, 3, {2, -2, -1, 0}}});
}

/// The integer table as printed for the AGL(1,5) case, kept verbatim. It is
/// simple but has only two automorphisms over the fields we checked, so it is
/// not the algebra returned by th52b(); see README.
inline ACAlgebra th52b_printed(const Field& f) {
  return ACAlgebra::from_ints(f, 4,
                              {{0, 1, {1, 1, 5, 3}},
                               {0, 2, {-4, -4, 0, -2}},
                               {0, 3, {2, 4, -4, -2}},
                               {1, 2, {-3, -1, 1, 3}},
                               {1, 3, {2, 0, 4, 4}},
                               {2, 3, {-3, -5, -1, -1}}});
}

}  // namespace ucs
