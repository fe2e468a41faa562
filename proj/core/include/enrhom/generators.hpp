#pragma once

#include <functional>
#include <random>

#include "enrhom/complex.hpp"

namespace enrhom {
namespace gen {

/// All subsets of [n] of cardinality <= k+1; k = -1 gives the empty
/// simplex, k = n-1 the full simplex.
SimplicialComplex simplex_skeleton(int n, int k);

SimplicialComplex full_simplex(int n);

/// The n-gon graph, n >= 3.
SimplicialComplex cycle(int n);

/// The path graph on n vertices; a single point for n = 1.
SimplicialComplex path(int n);

/// Boundary complex of the cyclic polytope C(n, dd) for even dd: facets
/// are the dd-subsets satisfying Gale's evenness condition (any two
/// missing elements are separated by an even number of chosen ones).
SimplicialComplex cyclic_polytope_boundary(int n, int dd);

/// The 7-vertex torus triangulation: triangles {i, i+1, i+3} and
/// {i, i+2, i+3} mod 7. Verified at construction: f = (1,7,21,14), every
/// edge in two triangles, every vertex link a hexagon.
SimplicialComplex torus_seven();

/// The 6-vertex real projective plane, derived as the antipodal quotient
/// of the icosahedron and verified at construction: f = (1,6,15,10),
/// every edge in two triangles, every vertex link a pentagon.
SimplicialComplex rp2_six();

/// The Fano plane S(2,3,7) as a complex: the 7 cyclic triples {i,i+1,i+3}.
SimplicialComplex fano_plane();

/// Complex generated by equal-cardinality blocks; impure input is an
/// error. No design property is assumed.
SimplicialComplex steiner_complex(const std::vector<std::vector<int>>& blocks, int n);

/// Join on disjoint ground sets: faces are unions.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Join with one new vertex (0 picks the next free label).
SimplicialComplex cone(const SimplicialComplex& k, int apex = 0);

/// Join with `points` new isolated vertices.
SimplicialComplex suspension(const SimplicialComplex& k, int points);

/// Every simplicial complex on ground set [n] (downward-closed subset
/// families), including the void complex and the empty simplex. Feasible
/// for n <= 5 or so.
void enumerate_all_complexes(int n, const std::function<void(const SimplicialComplex&)>& fn);

/// Uniform facet sampler for property tests.
SimplicialComplex random_complex(int n, int max_facets, std::mt19937_64& rng);

}  // namespace gen
}  // namespace enrhom
