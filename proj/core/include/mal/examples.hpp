#pragma once

#include <cstdint>
#include <string>

#include "mal/simplicial_complex.hpp"

namespace mal {
namespace examples {

/// Boundary of the n-simplex: m = n+1 vertices, all n-subsets as facets.
SimplicialComplex boundary_simplex(int n);

/// The full simplex on m vertices (useful for exercising the n = m gate).
SimplicialComplex full_simplex(int m);

/// k isolated vertices.
SimplicialComplex disjoint_points(int k);

/// The 9-vertex triangulation of the 2-torus: 3x3 grid with opposite sides
/// identified; f = (9, 27, 18).
SimplicialComplex torus9();

/// Boundary of the cyclic polytope C^d(v) via Gale's evenness condition
/// (even d only).
SimplicialComplex cyclic_polytope_boundary(int d, int v);

/// Deterministic random pure-ish complex on m vertices, never the full
/// simplex; intended for property suites.
SimplicialComplex random_complex(int m, std::uint32_t seed);

/// Lookup by CLI spelling, e.g. "boundary-simplex:3", "torus9", "points:3",
/// "cyclic:4,7", "random:6,42".  Throws InputError on unknown names.
SimplicialComplex by_name(const std::string& name);

}  // namespace examples
}  // namespace mal
