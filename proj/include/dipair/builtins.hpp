#pragma once

#include <string>
#include <vector>

#include "dipair/precubical.hpp"

namespace dipair::builtins {

/// Four squares A, B1, B2, C. A's right edge a1 is B1's left edge, A's top
/// edge a2 is B2's bottom edge, B1's right edge is C's left edge and B2's top
/// edge is C's bottom edge. Axis 1 is horizontal in every square.
PreCubicalSet dubut();

/// Vertices a, b, m, p, q with edges a->p, m->p, m->q, b->q.
PreCubicalSet letter_m();

/// Origin O with edges a: O->a+ and b: O->b+.
PreCubicalSet branching();

/// Vertices v0, v1 and the edge e: v0->v1.
PreCubicalSet edge();

/// All proper faces of the unit n-cube. Cells are named by their {0,1,*}
/// coordinate strings; for n == 2 the corners are also named A (00) and C (11).
PreCubicalSet boundary_cube(unsigned n);

/// The solid unit n-cube, named like boundary_cube.
PreCubicalSet cube(unsigned n);

/// The graph A->X1, A->X2, X1->D, X2->D, X1->Y1, X2->Y2, U->Y1, U->Y2, Y1->C,
/// Y2->C with the squares d (corners A, X2, X1, D) and u (corners U, Y2, Y1, C).
PreCubicalSet swiss_retract();

/// One vertex v and one edge e: v->v.
PreCubicalSet circle();

/// n-fold product of circles.
PreCubicalSet torus(unsigned n);

/// Resolves "dubut", "letterM", "boundary_cube(3)", "torus(2)", ... Throws
/// ParseError for unknown names or bad parameters.
PreCubicalSet by_name(const std::string& spec);

/// Every accepted builtin spelling with default parameters, for listings and tests.
std::vector<std::string> names();

}  // namespace dipair::builtins
