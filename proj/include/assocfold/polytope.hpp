#ifndef ASSOCFOLD_POLYTOPE_HPP
#define ASSOCFOLD_POLYTOPE_HPP

/**
 * Exact vertex enumeration for the simple polytopes cut out by the affine
 * forms t_{ki} >= 0, plus their face counts and normal fans.
 *
 * The enumeration pivots outward from the vertex at the coordinate origin
 * (tight exactly on the forms with zero constant) and never touches floating
 * point: all coordinates, ratios, and sign tests are exact field elements.
 * Each vertex is identified by its cluster, the set of facet labels tight
 * at that vertex.
 */

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "assocfold/affine.hpp"
#include "assocfold/arquiver.hpp"
#include "assocfold/exactfield.hpp"

namespace assocfold::polytope {

/** One bounding half-space  linear . x + constant >= 0. */
struct FacetForm {
    arquiver::ObjId label;
    std::vector<exactfield::Scalar> linear;
    exactfield::Scalar constant;
};

struct Vertex {
    std::vector<arquiver::ObjId> cluster;  ///< labels of the tight facets, sorted
    std::vector<int> tight;                ///< the same facets as indices, sorted
    std::vector<exactfield::Scalar> coords;
};

struct Polytope {
    int dim = 0;
    exactfield::FieldPtr field;
    std::vector<FacetForm> facets;
    std::vector<Vertex> vertices;              ///< sorted by cluster
    std::vector<std::pair<int, int>> edges;    ///< vertex index pairs, sorted
};

/** Ambient facet list (one per knitted object, in (k, i) order). */
std::vector<FacetForm> facet_forms(
    const std::map<arquiver::ObjId, affine::AffineForm>& forms,
    const exactfield::FieldPtr& field);

/**
 * Enumerate all vertices and edges by pivoting from the origin vertex.
 * Fails (verification error) if the forms do not cut out a bounded simple
 * polytope with the origin as a vertex.
 */
Polytope build_polytope(const std::vector<FacetForm>& facets);

/** Face counts: {V} in dimension 1, {V, E} in dimension 2, {V, E, F} above. */
std::vector<long long> f_vector(const Polytope& polytope);

struct NormalFan {
    /** One ray per facet: the linear part scaled so its first nonzero entry is +-1. */
    std::vector<std::vector<exactfield::Scalar>> rays;
    /** One maximal cone per vertex: sorted facet (= ray) indices. */
    std::vector<std::vector<int>> cones;
};

NormalFan normal_fan(const Polytope& polytope);

/** Scale a direction so its first nonzero entry becomes +-1. */
std::vector<exactfield::Scalar> normalize_ray(const std::vector<exactfield::Scalar>& direction);

/**
 * Check on `count` random integer directions that each lies in the relative
 * interior of exactly one maximal cone (directions hitting cone walls are
 * redrawn).  Throws a verification error on any uncovered direction.
 */
void check_fan_complete(const Polytope& polytope, std::uint64_t seed, int count);

}  // namespace assocfold::polytope

#endif  // ASSOCFOLD_POLYTOPE_HPP
