#include "assocfold/folding.hpp"

#include <set>

namespace assocfold::folding {

using exactfield::Scalar;
using rootsystem::TypeLabel;

rootsystem::TypeLabel default_source(const TypeLabel& target) {
    switch (target.family) {
        case 'C':
            return TypeLabel{'A', 2 * target.rank - 1, 0};
        case 'B':
            return TypeLabel{'D', target.rank + 1, 0};
        case 'F':
            return TypeLabel{'E', 6, 0};
        case 'H':
            return target.rank == 3 ? TypeLabel{'D', 6, 0} : TypeLabel{'E', 8, 0};
        case 'I':
            return TypeLabel{'A', target.order - 1, 0};
        default:
            throw invalid_input(target.str() + " is simply laced; nothing to fold onto it");
    }
}

Folding load_folding(const TypeLabel& source, const TypeLabel& target) {
    Folding fold = detail::build_tables(source, target);

    // Cross-check the tables against the defining property.
    const int ns = fold.source.rank;
    const int nt = fold.target.rank;
    for (const auto& w : fold.weights)
        if (!w.is_positive()) throw internal_error("folding weight is not positive");

    std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(ns + 1));
    for (const auto& e : rootsystem::diagram(fold.source)) {
        adjacent[static_cast<std::size_t>(e.a)].push_back(e.b);
        adjacent[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    const auto reflect = rootsystem::reflection_table(fold.target, fold.field);
    for (int i = 1; i <= ns; ++i) {
        const int bi = fold.block_of[static_cast<std::size_t>(i - 1)];
        for (int j : adjacent[static_cast<std::size_t>(i)])
            if (fold.block_of[static_cast<std::size_t>(j - 1)] == bi)
                throw internal_error("folding block contains adjacent vertices");
        for (int b = 1; b <= nt; ++b) {
            if (b == bi) continue;
            Scalar sum = Scalar::from_int(fold.field, 0);
            for (int j : adjacent[static_cast<std::size_t>(i)])
                if (fold.block_of[static_cast<std::size_t>(j - 1)] == b)
                    sum += fold.weights[static_cast<std::size_t>(j - 1)];
            const Scalar expected =
                fold.weights[static_cast<std::size_t>(i - 1)] *
                (-reflect[static_cast<std::size_t>(bi - 1)][static_cast<std::size_t>(b - 1)]);
            if (sum != expected)
                throw internal_error("folding weights violate the defining property at vertex " +
                                     std::to_string(i));
        }
    }
    return fold;
}

std::vector<Scalar> project(const Folding& fold, const std::vector<int>& coeffs) {
    if (coeffs.size() != static_cast<std::size_t>(fold.source.rank))
        throw invalid_input("coefficient vector does not match the source rank");
    std::vector<Scalar> out(static_cast<std::size_t>(fold.target.rank),
                            Scalar::from_int(fold.field, 0));
    for (int j = 1; j <= fold.source.rank; ++j) {
        const int c = coeffs[static_cast<std::size_t>(j - 1)];
        if (c != 0)
            out[static_cast<std::size_t>(fold.block_of[static_cast<std::size_t>(j - 1)] - 1)]
                .add_scaled(fold.weights[static_cast<std::size_t>(j - 1)], Rational(c));
    }
    return out;
}

affine::ParamSet symmetric_params(const Folding& fold,
                                  const arquiver::MeshQuiver& mesh_quiver,
                                  const Rational& base) {
    if (base <= 0) throw invalid_input("mesh parameter base must be strictly positive");
    if (mesh_quiver.quiver.type != fold.source)
        throw invalid_input("mesh quiver type does not match the folding source");
    affine::ParamSet params;
    for (const auto& mesh : mesh_quiver.meshes) {
        const int j = mesh.start.second;
        params.emplace(mesh.start, fold.weights[static_cast<std::size_t>(j - 1)] * base);
    }
    return params;
}

void validate_folding(const Folding& fold, const arquiver::MeshQuiver& mesh_quiver) {
    if (mesh_quiver.quiver.type != fold.source)
        throw invalid_input("mesh quiver type does not match the folding source");

    // Arrows must cross blocks.
    for (const auto& a : mesh_quiver.quiver.arrows)
        if (fold.block_of[static_cast<std::size_t>(a.from - 1)] ==
            fold.block_of[static_cast<std::size_t>(a.to - 1)])
            throw verification_error("orientation keeps an arrow inside a folding block");

    // The two Coxeter numbers agree.
    if (rootsystem::coxeter_data(fold.source).h != rootsystem::coxeter_data(fold.target).h)
        throw verification_error("source and target Coxeter numbers differ");

    const auto target_quiver = rootsystem::build_quiver(fold.target);
    const auto target_roots = rootsystem::build_root_system(target_quiver, fold.field);

    std::set<Scalar> weight_values(fold.weights.begin(), fold.weights.end());

    for (const auto& [id, root] : mesh_quiver.roots) {
        if (id.first < 2) continue;  // negative simples project trivially
        const auto image = project(fold, root);

        // Some weight divides the image into a positive target root...
        bool hit = false;
        for (const auto& w : weight_values) {
            std::vector<Scalar> scaled;
            scaled.reserve(image.size());
            for (const auto& x : image) scaled.push_back(x / w);
            if (target_roots.is_positive_root(scaled)) {
                hit = true;
                break;
            }
        }
        if (!hit)
            throw verification_error("projected root at " + arquiver::obj_name(id) +
                                     " is no weight multiple of a target root");

        // ...and the row weight w_i is the divisor that works.
        const Scalar& row_weight = fold.weights[static_cast<std::size_t>(id.second - 1)];
        std::vector<Scalar> scaled;
        scaled.reserve(image.size());
        for (const auto& x : image) scaled.push_back(x / row_weight);
        if (!target_roots.is_positive_root(scaled))
            throw verification_error("projected root at " + arquiver::obj_name(id) +
                                     " is not its row weight times a target root");
    }
}

void verify_projection_identities(const Folding& fold, std::uint64_t seed, int count) {
    const int n = static_cast<int>(fold.block_of.size());
    std::vector<std::vector<Scalar>> unit_image;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        unit_image.push_back(project(fold, e));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (fold.block_of[static_cast<std::size_t>(i - 1)] !=
                fold.block_of[static_cast<std::size_t>(j - 1)])
                continue;
            const Scalar& wi = fold.weights[static_cast<std::size_t>(i - 1)];
            const Scalar& wj = fold.weights[static_cast<std::size_t>(j - 1)];
            for (std::size_t x = 0; x < unit_image[0].size(); ++x)
                if (unit_image[static_cast<std::size_t>(i - 1)][x] * wj !=
                    unit_image[static_cast<std::size_t>(j - 1)][x] * wi)
                    throw verification_error(
                        "unit images of block partners " + std::to_string(i) + " and " +
                        std::to_string(j) + " are not weight-proportional");
        }

    SplitMix64 rng(seed);
    for (int trial = 0; trial < count; ++trial) {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v.push_back(static_cast<int>(rng.range(-100, 100)));
        const auto image = project(fold, v);
        // Independent weighted block sums, built with plain scalar products.
        for (std::size_t b = 0; b < fold.blocks.size(); ++b) {
            Scalar expect = Scalar::from_int(fold.field, 0);
            for (int j : fold.blocks[b])
                expect += fold.weights[static_cast<std::size_t>(j - 1)] *
                          Rational(v[static_cast<std::size_t>(j - 1)]);
            if (image[b] != expect)
                throw verification_error("projection of a random vector disagrees with "
                                         "its weighted block sums");
        }
    }
}

}  // namespace assocfold::folding
