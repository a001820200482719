#ifndef ASSOCFOLD_FOLDING_HPP
#define ASSOCFOLD_FOLDING_HPP

/**
 * Foldings: a simply-laced source diagram, a partition of its vertices into
 * blocks indexed by the vertices of a multiply-laced (or noncrystallographic)
 * target diagram, and one positive weight per source vertex.
 *
 * The defining property ties the two reflection actions together: for every
 * source vertex i and every target block b other than i's own,
 *
 *     sum of w_j over the neighbours j of i inside block b
 *         = -R'[block(i)][b] * w_i,
 *
 * where R' is the reflection table of the target.  Weighted block sums then
 * carry source roots to positive multiples of target roots, which is what
 * the validation checks root by root.
 */

#include <vector>

#include "assocfold/affine.hpp"
#include "assocfold/arquiver.hpp"
#include "assocfold/exactfield.hpp"
#include "assocfold/rootsystem.hpp"

namespace assocfold::folding {

struct Folding {
    rootsystem::TypeLabel source;
    rootsystem::TypeLabel target;
    exactfield::FieldPtr field;                ///< natural field of the target
    std::vector<int> block_of;                 ///< [source vertex - 1] -> target vertex
    std::vector<std::vector<int>> blocks;      ///< [target vertex - 1] -> sorted source vertices
    std::vector<exactfield::Scalar> weights;   ///< [source vertex - 1], positive
};

/** The canonical simply-laced source for a target type. */
rootsystem::TypeLabel default_source(const rootsystem::TypeLabel& target);

/**
 * Construct the folding for a supported (source, target) pair and check the
 * weighted defining property; rejects unsupported pairs.
 */
Folding load_folding(const rootsystem::TypeLabel& source,
                     const rootsystem::TypeLabel& target);

/** Weighted block sums of an integer coefficient vector on the source. */
std::vector<exactfield::Scalar> project(const Folding& fold,
                                        const std::vector<int>& coeffs);

/** Mesh parameters c_{kj} = base * w_j, matching the fold's symmetry. */
affine::ParamSet symmetric_params(const Folding& fold,
                                  const arquiver::MeshQuiver& mesh_quiver,
                                  const Rational& base);

/**
 * Full validation against a knitted source quiver: arrows never stay inside
 * a block, every source root projects to a weight multiple of a target root,
 * roots knitted in row j project to w_j times a target root, and the two
 * Coxeter numbers agree.
 */
void validate_folding(const Folding& fold, const arquiver::MeshQuiver& mesh_quiver);

/**
 * Exact identities of the weighted projection: unit vectors of a block map to
 * proportional images (w_j * project(e_i) == w_i * project(e_j)), and on
 * `count` seeded random integer vectors the block entries of the image equal
 * the weighted coordinate sums computed independently.
 */
void verify_projection_identities(const Folding& fold, std::uint64_t seed, int count);

namespace detail {
/** Raw block/weight tables for a supported pair (no validation). */
Folding build_tables(const rootsystem::TypeLabel& source,
                     const rootsystem::TypeLabel& target);
}  // namespace detail

}  // namespace assocfold::folding

#endif  // ASSOCFOLD_FOLDING_HPP
