#ifndef ASSOCFOLD_ROOTSYSTEM_HPP
#define ASSOCFOLD_ROOTSYSTEM_HPP

/**
 * Dynkin/Coxeter data: type labels, diagrams with orientation, Coxeter
 * numbers and exponents, and root systems.
 *
 * Simply-laced types (A, D, E) are the quivers we knit; the remaining types
 * (B, C, F, G2, H3, H4, I2(m)) appear as folding targets.  Roots are stored
 * as coefficient vectors over the simple roots, and the whole root system is
 * generated by closing the simples under the simple reflections — integer
 * combinatorics for crystallographic types, exact field arithmetic for the
 * non-crystallographic ones.
 *
 * Vertex numbering conventions (1-based, fixed so folding block tables are
 * unambiguous):
 *   A_n   path 1 - 2 - ... - n
 *   D_n   path 1 - ... - (n-2) with the fork vertices n-1, n attached to n-2
 *   E_n   Bourbaki: path 1 - 3 - 4 - 5 - 6 (- 7 (- 8)), vertex 2 attached to 4
 *   B_n   path with the double bond at the far end; vertex n is the short root
 *   C_n   transpose of B_n; vertex n is the long root
 *   F4    1 - 2 = 3 - 4 with 1, 2 long and 3, 4 short
 *   H3/H4 path with the 5-bond at the far end (vertices n-1, n)
 *   I2(m) two vertices joined by an m-bond; G2 is accepted as an alias of I2(6)
 */

#include <string>
#include <utility>
#include <vector>

#include "assocfold/common.hpp"
#include "assocfold/exactfield.hpp"

namespace assocfold::rootsystem {

using exactfield::FieldPtr;
using exactfield::Scalar;

struct TypeLabel {
    char family = 'A';  ///< A B C D E F H I  (G2 canonicalizes to I2(6))
    int rank = 1;
    int order = 0;      ///< m for I2(m); 0 otherwise

    std::string str() const;
    bool simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }

    bool operator==(const TypeLabel& o) const {
        return family == o.family && rank == o.rank && order == o.order;
    }
    bool operator!=(const TypeLabel& o) const { return !(*this == o); }
    bool operator<(const TypeLabel& o) const {
        if (family != o.family) return family < o.family;
        if (rank != o.rank) return rank < o.rank;
        return order < o.order;
    }
};

/** Parse "A3", "D6", "I2(7)", "G2", ...; validates rank ranges. */
TypeLabel parse_type(const std::string& text);

/** All labels the CLI accepts, in display order (for `list-types`). */
std::vector<TypeLabel> supported_types();

struct CoxeterData {
    int h = 0;
    std::vector<int> exponents;
    int positive_root_count = 0;  ///< = n h / 2
};

CoxeterData coxeter_data(const TypeLabel& type);

/** Coxeter-Catalan number Prod_i (e_i + h + 1) / (e_i + 1), exact. */
Integer catalan_count(const TypeLabel& type);

/** Undirected diagram edge with its Coxeter bond label m_ab (>= 3). */
struct DiagramEdge {
    int a = 0, b = 0;
    int bond = 3;
};

std::vector<DiagramEdge> diagram(const TypeLabel& type);

struct Arrow {
    int from = 0, to = 0;
    bool operator==(const Arrow& o) const { return from == o.from && to == o.to; }
};

struct QuiverSpec {
    TypeLabel type;
    int rank = 0;
    std::vector<Arrow> arrows;  ///< oriented diagram edges (acyclic; diagrams are trees)
    std::vector<int> bonds;     ///< bond label per arrow, parallel to `arrows`

    bool has_arrow(int from, int to) const;
};

/**
 * Default orientation: bipartite, with the colour class of vertex 1 as
 * sources (so A3 comes out as 1 -> 2 <- 3).
 */
QuiverSpec build_quiver(const TypeLabel& type);

/** Explicit orientation; the arrow set must orient the diagram exactly. */
QuiverSpec build_quiver(const TypeLabel& type, const std::vector<Arrow>& arrows);

/**
 * Order m of the smallest field Q(2cos(pi/m)) containing the reflection data:
 * 3 (i.e. Q) for crystallographic types, 5 for H3/H4, m for I2(m).
 */
int required_field_order(const TypeLabel& type);

FieldPtr natural_field(const TypeLabel& type);

/**
 * Reflection table R with s_j(alpha_i) = alpha_i - R[i][j] alpha_j
 * (0-indexed).  Symmetric -2cos(pi/m_ij) entries except for the B/C/F
 * double bonds, where the Cartan integers -1/-2 appear.
 */
std::vector<std::vector<Scalar>> reflection_table(const TypeLabel& type,
                                                  const FieldPtr& field);

/**
 * Table-1-style weight pair (|entry from->to|, |entry to->from|) for each
 * arrow of the quiver: (1,1) on plain edges, the Cartan pair on B/C/F double
 * bonds, and the non-integer 2cos(pi/m) on H/I bonds.
 */
std::vector<std::pair<Scalar, Scalar>> arrow_weights(const QuiverSpec& quiver,
                                                     const FieldPtr& field);

class RootSystem {
public:
    using Root = std::vector<Scalar>;  ///< coefficients over the simple roots

    RootSystem(TypeLabel type, FieldPtr field, std::vector<Root> positive);

    const TypeLabel& type() const { return type_; }
    const FieldPtr& field() const { return field_; }
    int rank() const { return rank_; }

    const std::vector<Root>& positive_roots() const { return positive_; }
    /** Positive roots followed by the negative simples; size nh/2 + n. */
    std::vector<Root> almost_positive() const;

    Root simple_root(int vertex) const;  ///< vertex is 1-based

    bool is_positive_root(const Root& v) const;
    bool is_root(const Root& v) const;  ///< membership in Delta = +/- positive

private:
    TypeLabel type_;
    FieldPtr field_;
    int rank_;
    std::vector<Root> positive_;  ///< canonically sorted
};

/**
 * Reflection closure of the simple roots.  The field must contain the
 * reflection data (any field works for crystallographic types, whose data
 * embeds from Q).
 */
RootSystem build_root_system(const QuiverSpec& quiver, const FieldPtr& field);

}  // namespace assocfold::rootsystem

#endif  // ASSOCFOLD_ROOTSYSTEM_HPP
