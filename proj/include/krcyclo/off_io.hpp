#pragma once

#include "krcyclo/cyclo.hpp"
#include "krcyclo/polytope.hpp"

#include <string>

namespace krcyclo {

// OFF export of a polytope of dimension <= 3, projected to an orthonormal
// basis of its affine hull with 12 significant decimal digits. Export only;
// never read back into exact computations.
std::string to_off(const Hull& hull);

// The triangulated boundary of Root_4: 12 vertices, 20 triangles.
std::string to_off(const BoundaryTriangulation& t);

} // namespace krcyclo
