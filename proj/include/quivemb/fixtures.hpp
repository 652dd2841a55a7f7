#pragma once

#include "quivemb/rep.hpp"

namespace quivemb::fixtures {

// Three-arrow Kronecker quiver i => j and its (3,3) representation M.
Quiver kronecker3();
Representation kronecker_m(const Field& field);
// P_i, dimension vector (1,3); arrow k sends the generator to e_k.
Representation kronecker_pi(const Field& field);
// The morphism g : P_i^2 -> M^2 with the printed matrices g_i (6x2), g_j (6x6).
Morphism kronecker_g(const Field& field);

// D_4 with arrows 1->2, 1->3, 1->4 (vertex 1 is the source).
Quiver d4();
Representation d4_p1(const Field& field);
// The five-dimensional indecomposable, dimension vector (2,1,1,1): the three
// arrows are the functionals (1 0), (0 1), (1 1).
Representation d4_x(const Field& field);

}  // namespace quivemb::fixtures
