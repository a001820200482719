#ifndef ASSOCFOLD_AFFINE_HPP
#define ASSOCFOLD_AFFINE_HPP

/**
 * Affine forms t_{ki} on the ambient coordinates s_1..s_n, generated from
 * the initial column t_{1i} = s_i by walking the mesh equations
 *
 *     t_{k+1,i} = sum over middles + c_{ki} - t_{ki}.
 *
 * The linear part of t_{ki} is an integer vector (the g-vector of the
 * object); the constant part collects the mesh parameters and lives in the
 * working field so that weighted parameter choices stay exact.
 */

#include <map>
#include <vector>

#include "assocfold/arquiver.hpp"
#include "assocfold/exactfield.hpp"

namespace assocfold::affine {

/** Affine form  linear . s + constant. */
struct AffineForm {
    std::vector<int> linear;
    exactfield::Scalar constant;
};

/** Mesh parameters c_{ki} > 0, keyed by the mesh start (k, i). */
using ParamSet = std::map<arquiver::ObjId, exactfield::Scalar>;

/** The same value for every mesh. */
ParamSet uniform_params(const arquiver::MeshQuiver& mesh_quiver,
                        const exactfield::Scalar& base);

/**
 * Every form t_{ki}, propagated in knitting order.  Requires one strictly
 * positive parameter per mesh; all parameters must share one field.
 */
std::map<arquiver::ObjId, AffineForm> propagate_forms(
    const arquiver::MeshQuiver& mesh_quiver, const ParamSet& params);

/**
 * The integer linear parts alone (the g-vectors), propagated with all
 * parameters zero.  Distinct objects always get distinct vectors.
 */
std::map<arquiver::ObjId, std::vector<int>> g_vectors(
    const arquiver::MeshQuiver& mesh_quiver);

}  // namespace assocfold::affine

#endif  // ASSOCFOLD_AFFINE_HPP
