#ifndef ASSOCFOLD_ARQUIVER_HPP
#define ASSOCFOLD_ARQUIVER_HPP

/**
 * Knitting of the combinatorial translation quiver attached to an acyclic
 * simply-laced quiver Q: objects (k,i) labeled by almost positive roots,
 * arrows, and the mesh triples start=(k,i) => end=(k+1,i) whose equations
 *
 *     t_{ki} + t_{k+1,i} = sum over middles + c_{ki}
 *
 * underlie both the hyperplane model and the g-vectors.
 *
 * Layout: row i is the tau-orbit of vertex i, column k counts translation
 * steps.  Column 1 carries the negative simples -alpha_i.  Column 2 carries
 * the projective dimension vectors, built by root(2,i) = alpha_i +
 * sum_{arrows j->i} root(2,j) in topological order.  From column 2 onwards
 * the mesh rule root(k+1,i) = sum(middles) - root(k,i) propagates roots,
 * with middles {(k,j) : i->j} and {(k+1,j) : j->i} (existing objects only);
 * a row ends when the propagated vector drops a negative entry or vanishes.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "assocfold/rootsystem.hpp"

namespace assocfold::arquiver {

/** Object address (k, i): column (translation step) and row (Q vertex), 1-based. */
using ObjId = std::pair<int, int>;

inline std::string obj_name(const ObjId& id) {
    return "(" + std::to_string(id.first) + "," + std::to_string(id.second) + ")";
}

/** Integer dimension vector / root over the simple basis. */
using IntRoot = std::vector<int>;

struct Mesh {
    ObjId start;                 ///< (k, i)
    ObjId end;                   ///< (k+1, i)
    std::vector<ObjId> middles;  ///< sorted
};

struct MeshQuiver {
    rootsystem::QuiverSpec quiver;
    int rank = 0;
    int coxeter_h = 0;
    int total_objects = 0;               ///< N = n(h+2)/2
    std::vector<int> row_length;         ///< [i-1] = objects in row i
    std::map<ObjId, IntRoot> roots;      ///< all objects with their roots
    std::vector<Mesh> meshes;            ///< in propagation (knitting) order
    std::vector<std::pair<ObjId, ObjId>> arrows;  ///< knitted arrows, sorted

    bool exists(const ObjId& id) const {
        return id.first >= 1 && id.second >= 1 && id.second <= rank &&
               id.first <= row_length[static_cast<std::size_t>(id.second - 1)];
    }
    /** All object addresses, ordered by (k, i). */
    std::vector<ObjId> objects() const;
    /** Topological order of Q's vertices (sources first), as knitted. */
    const std::vector<int>& vertex_order() const { return vertex_order_; }

    std::vector<int> vertex_order_;
};

/**
 * Knit the full translation quiver.  Verifies on completion that the
 * object count is n(h+2)/2, that there is one mesh per positive root, and
 * that the knitted roots of columns k >= 2 are exactly the positive roots.
 */
MeshQuiver knit(const rootsystem::QuiverSpec& quiver);

/** Text rendering of the grid (rows by vertex, columns by k) plus the mesh equations. */
std::string dump_grid(const MeshQuiver& mesh_quiver);

}  // namespace assocfold::arquiver

#endif  // ASSOCFOLD_ARQUIVER_HPP
