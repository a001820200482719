#ifndef ASSOCFOLD_SECTION_HPP
#define ASSOCFOLD_SECTION_HPP

/**
 * Sections by the folding plane.  Substituting s_j = w_j sigma_{block(j)}
 * restricts every ambient form t_{ki} to coordinates sigma_1..sigma_{n'}
 * indexed by the target vertices; with the symmetric mesh parameters
 * c_{kj} = base * w_j, restricted forms of objects in the same column and
 * block become positive multiples of one another.  Each such class yields
 * one facet of the restricted polytope, which is the generalized
 * associahedron of the target type; the verification routines here compare
 * its normal fan against the projected ambient fan and check how the
 * ambient facets meet the plane.
 */

#include <cstdint>
#include <map>
#include <vector>

#include "assocfold/affine.hpp"
#include "assocfold/arquiver.hpp"
#include "assocfold/folding.hpp"
#include "assocfold/polytope.hpp"

namespace assocfold::section {

/** Objects whose restricted forms are proportional: same column, same block. */
struct FacetClass {
    arquiver::ObjId rep;                   ///< lexicographically least member
    std::vector<arquiver::ObjId> members;  ///< sorted
};

struct Section {
    folding::Folding fold;
    arquiver::MeshQuiver mesh;  ///< knitted source quiver
    affine::ParamSet params;    ///< symmetric parameters c_{kj} = base * w_j
    std::map<arquiver::ObjId, affine::AffineForm> ambient_forms;
    std::vector<FacetClass> classes;          ///< sorted by representative
    std::vector<polytope::FacetForm> facets;  ///< one restricted form per class
    std::map<arquiver::ObjId, int> class_of;  ///< object -> index into classes
};

/**
 * Knit the source, validate the folding, install symmetric parameters, and
 * restrict.  Verifies that restricted forms within a class really are
 * weight-proportional and that distinct classes have non-parallel normals.
 */
Section build_section(const folding::Folding& fold, const Rational& base_param);

/** The restricted polytope (one facet per class). */
polytope::Polytope restricted_polytope(const Section& section);

/** The ambient polytope over the same field and parameters. */
polytope::Polytope ambient_polytope(const Section& section);

/**
 * Projected direction vectors: each ambient object's linear part maps to a
 * nonzero vector that is a positive multiple of its class normal, and the
 * projected rays equal the restricted fan's rays as sets.  Returns the
 * projected image of every object.
 */
std::map<arquiver::ObjId, std::vector<exactfield::Scalar>> verify_ray_match(
    const Section& section, const polytope::Polytope& restricted);

/**
 * Fan comparison: the weighted block projection must carry the ambient
 * g-vector rays onto the restricted fan's rays, block-closed ambient
 * clusters onto restricted cones bijectively, and each projected g-vector
 * onto a positive multiple of its class normal; finally the restricted fan
 * must cover random directions.
 */
void verify_fan_match(const Section& section, const polytope::Polytope& ambient,
                      const polytope::Polytope& restricted, std::uint64_t seed,
                      int samples);

/**
 * Each ambient facet meets the plane in the face of its class, which must
 * carry enough restricted vertices to span a hyperplane of the plane.
 */
void verify_facet_intersections(const Section& section,
                                const polytope::Polytope& restricted);

/**
 * The final object of every row assembles one block-closed cluster; check
 * that it really occurs among the ambient vertices.  (With odd Coxeter
 * number the rows end in different columns, so this exercises the classes
 * that mix columns.)
 */
void verify_tail_cluster(const Section& section, const polytope::Polytope& ambient);

}  // namespace assocfold::section

#endif  // ASSOCFOLD_SECTION_HPP
