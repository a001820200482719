#include <algorithm>

#include "assocfold/folding.hpp"

namespace assocfold::folding::detail {

using exactfield::Scalar;
using rootsystem::TypeLabel;

namespace {

Folding skeleton(const TypeLabel& source, const TypeLabel& target) {
    Folding fold;
    fold.source = source;
    fold.target = target;
    fold.field = rootsystem::natural_field(target);
    fold.block_of.assign(static_cast<std::size_t>(source.rank), 0);
    fold.blocks.assign(static_cast<std::size_t>(target.rank), {});
    return fold;
}

void finish_blocks(Folding& fold) {
    for (int j = 1; j <= fold.source.rank; ++j)
        fold.blocks[static_cast<std::size_t>(fold.block_of[static_cast<std::size_t>(j - 1)] - 1)]
            .push_back(j);
    for (auto& block : fold.blocks) std::sort(block.begin(), block.end());
}

/** Two-coloring of the source diagram; vertex 1 gets color 0. */
std::vector<int> bipartition(const TypeLabel& source) {
    const int n = source.rank;
    std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(n + 1));
    for (const auto& e : rootsystem::diagram(source)) {
        adjacent[static_cast<std::size_t>(e.a)].push_back(e.b);
        adjacent[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    std::vector<int> colour(static_cast<std::size_t>(n + 1), -1);
    colour[1] = 0;
    std::vector<int> stack{1};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : adjacent[static_cast<std::size_t>(v)])
            if (colour[static_cast<std::size_t>(u)] < 0) {
                colour[static_cast<std::size_t>(u)] = 1 - colour[static_cast<std::size_t>(v)];
                stack.push_back(u);
            }
    }
    return colour;
}

/**
 * Perron weights for the bipartition foldings onto a dihedral target: the
 * kernel of (adjacency - theta) is one-dimensional, spanned by a positive
 * vector; normalize so the least weight is 1.
 */
std::vector<Scalar> perron_weights(const TypeLabel& source, const exactfield::FieldPtr& field) {
    const int n = source.rank;
    const Scalar zero = Scalar::from_int(field, 0);
    std::vector<std::vector<Scalar>> m(static_cast<std::size_t>(n),
                                       std::vector<Scalar>(static_cast<std::size_t>(n), zero));
    for (const auto& e : rootsystem::diagram(source)) {
        m[static_cast<std::size_t>(e.a - 1)][static_cast<std::size_t>(e.b - 1)] =
            Scalar::from_int(field, 1);
        m[static_cast<std::size_t>(e.b - 1)][static_cast<std::size_t>(e.a - 1)] =
            Scalar::from_int(field, 1);
    }
    for (int i = 0; i < n; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] -=
            Scalar::generator(field);

    // Row echelon with full row reduction; expect exactly one free column.
    std::vector<int> pivot_of_col(static_cast<std::size_t>(n), -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(row)]);
        const Scalar inv = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].inverse();
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == row) continue;
            const Scalar f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
                    f * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
        }
        pivot_of_col[static_cast<std::size_t>(col)] = row;
        ++row;
    }
    if (row != n - 1) throw internal_error("Perron eigenspace is not one-dimensional");
    int free_col = -1;
    for (int col = 0; col < n; ++col)
        if (pivot_of_col[static_cast<std::size_t>(col)] < 0) free_col = col;

    std::vector<Scalar> w(static_cast<std::size_t>(n), Scalar::from_int(field, 1));
    for (int col = 0; col < n; ++col) {
        const int r = pivot_of_col[static_cast<std::size_t>(col)];
        if (r >= 0)
            w[static_cast<std::size_t>(col)] =
                -m[static_cast<std::size_t>(r)][static_cast<std::size_t>(free_col)];
    }
    for (const auto& x : w)
        if (!x.is_positive()) throw internal_error("Perron weight is not positive");
    Scalar least = w[0];
    for (const auto& x : w)
        if ((x - least).sign() < 0) least = x;
    for (auto& x : w) x = x / least;
    return w;
}

}  // namespace

Folding build_tables(const TypeLabel& source, const TypeLabel& target) {
    const auto unsupported = [&]() {
        return invalid_input("unsupported folding " + source.str() + " -> " + target.str());
    };

    if (target.family == 'C') {
        // C_n from A_{2n-1}: vertex i pairs i with its mirror 2n-i.
        const int n = target.rank;
        if (source.family != 'A' || source.rank != 2 * n - 1) throw unsupported();
        Folding fold = skeleton(source, target);
        for (int j = 1; j <= source.rank; ++j)
            fold.block_of[static_cast<std::size_t>(j - 1)] = std::min(j, 2 * n - j);
        finish_blocks(fold);
        fold.weights.assign(static_cast<std::size_t>(source.rank),
                            Scalar::from_int(fold.field, 1));
        return fold;
    }

    if (target.family == 'B') {
        // B_n from D_{n+1}: the fork pair collapses onto the short vertex n.
        const int n = target.rank;
        if (source.family != 'D' || source.rank != n + 1) throw unsupported();
        Folding fold = skeleton(source, target);
        for (int j = 1; j <= source.rank; ++j)
            fold.block_of[static_cast<std::size_t>(j - 1)] = std::min(j, n);
        finish_blocks(fold);
        fold.weights.assign(static_cast<std::size_t>(source.rank),
                            Scalar::from_int(fold.field, 1));
        return fold;
    }

    if (target.family == 'F') {
        // F4 from E6 under its diagram flip 1<->6, 3<->5.
        if (source.family != 'E' || source.rank != 6) throw unsupported();
        Folding fold = skeleton(source, target);
        const int block_of[7] = {0, 4, 1, 3, 2, 3, 4};
        for (int j = 1; j <= 6; ++j) fold.block_of[static_cast<std::size_t>(j - 1)] = block_of[j];
        finish_blocks(fold);
        fold.weights.assign(6, Scalar::from_int(fold.field, 1));
        return fold;
    }

    if (target.family == 'H' && target.rank == 3) {
        // H3 from D6: the flip fixes the fork, golden weights appear.
        if (source.family != 'D' || source.rank != 6) throw unsupported();
        Folding fold = skeleton(source, target);
        const int block_of[7] = {0, 1, 2, 3, 2, 3, 1};
        for (int j = 1; j <= 6; ++j) fold.block_of[static_cast<std::size_t>(j - 1)] = block_of[j];
        finish_blocks(fold);
        const Scalar one = Scalar::from_int(fold.field, 1);
        const Scalar phi = Scalar::generator(fold.field);
        fold.weights = {one, one, phi, phi, one, phi};
        return fold;
    }

    if (target.family == 'H' && target.rank == 4) {
        // H4 from E8.
        if (source.family != 'E' || source.rank != 8) throw unsupported();
        Folding fold = skeleton(source, target);
        const int block_of[9] = {0, 1, 4, 2, 3, 4, 3, 2, 1};
        for (int j = 1; j <= 8; ++j) fold.block_of[static_cast<std::size_t>(j - 1)] = block_of[j];
        finish_blocks(fold);
        const Scalar one = Scalar::from_int(fold.field, 1);
        const Scalar phi = Scalar::generator(fold.field);
        fold.weights = {phi, one, phi, phi, phi, one, one, one};
        return fold;
    }

    if (target.family == 'I') {
        const int m = target.order;
        if (source.family == 'A' && source.rank == m - 1) {
            // I2(m) from the path A_{m-1}: alternating blocks, Chebyshev weights.
            Folding fold = skeleton(source, target);
            for (int j = 1; j <= source.rank; ++j)
                fold.block_of[static_cast<std::size_t>(j - 1)] = (j % 2 == 1) ? 1 : 2;
            finish_blocks(fold);
            fold.weights = exactfield::chebyshev_values(fold.field, source.rank);
            return fold;
        }
        if (source.family == 'D' && m % 2 == 0 && source.rank == m / 2 + 1 && source.rank >= 4) {
            // I2(2k) from D_{k+1}: the fork pair shares half the next
            // Chebyshev weight and sits where path vertex k would.
            const int k = m / 2;
            Folding fold = skeleton(source, target);
            for (int j = 1; j <= k - 1; ++j)
                fold.block_of[static_cast<std::size_t>(j - 1)] = (j % 2 == 1) ? 1 : 2;
            const int fork_block = (k % 2 == 1) ? 1 : 2;
            fold.block_of[static_cast<std::size_t>(k - 1)] = fork_block;
            fold.block_of[static_cast<std::size_t>(k)] = fork_block;
            finish_blocks(fold);
            const auto cheb = exactfield::chebyshev_values(fold.field, k);
            fold.weights.assign(static_cast<std::size_t>(source.rank),
                                Scalar::from_int(fold.field, 0));
            for (int j = 1; j <= k - 1; ++j)
                fold.weights[static_cast<std::size_t>(j - 1)] = cheb[static_cast<std::size_t>(j - 1)];
            const Scalar half_next = cheb[static_cast<std::size_t>(k - 1)] / Rational(2);
            fold.weights[static_cast<std::size_t>(k - 1)] = half_next;
            fold.weights[static_cast<std::size_t>(k)] = half_next;
            return fold;
        }
        if (source.family == 'E' && m == rootsystem::coxeter_data(source).h) {
            // I2(h) from E_n (h = 12, 18, 30): blocks are the two-coloring,
            // weights the Perron eigenvector of the diagram.
            Folding fold = skeleton(source, target);
            const auto colour = bipartition(source);
            for (int j = 1; j <= source.rank; ++j)
                fold.block_of[static_cast<std::size_t>(j - 1)] =
                    colour[static_cast<std::size_t>(j)] == 0 ? 1 : 2;
            finish_blocks(fold);
            fold.weights = perron_weights(source, fold.field);
            return fold;
        }
        throw unsupported();
    }

    throw unsupported();
}

}  // namespace assocfold::folding::detail
