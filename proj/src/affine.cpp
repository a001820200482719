#include "assocfold/affine.hpp"

#include <set>

namespace assocfold::affine {

using arquiver::ObjId;

ParamSet uniform_params(const arquiver::MeshQuiver& mesh_quiver,
                        const exactfield::Scalar& base) {
    ParamSet params;
    for (const auto& mesh : mesh_quiver.meshes) params.emplace(mesh.start, base);
    return params;
}

std::map<ObjId, AffineForm> propagate_forms(const arquiver::MeshQuiver& mesh_quiver,
                                            const ParamSet& params) {
    if (params.size() != mesh_quiver.meshes.size())
        throw invalid_input("expected one mesh parameter per mesh, got " +
                            std::to_string(params.size()) + " for " +
                            std::to_string(mesh_quiver.meshes.size()) + " meshes");
    for (const auto& mesh : mesh_quiver.meshes) {
        const auto it = params.find(mesh.start);
        if (it == params.end())
            throw invalid_input("missing mesh parameter at " + arquiver::obj_name(mesh.start));
        if (!it->second.is_positive())
            throw invalid_input("mesh parameter at " + arquiver::obj_name(mesh.start) +
                                " must be strictly positive");
    }
    const auto field = params.begin()->second.field();

    const int n = mesh_quiver.rank;
    std::map<ObjId, AffineForm> forms;
    for (int i = 1; i <= n; ++i) {
        AffineForm f{std::vector<int>(static_cast<std::size_t>(n), 0),
                     exactfield::Scalar::from_int(field, 0)};
        f.linear[static_cast<std::size_t>(i - 1)] = 1;
        forms.emplace(ObjId{1, i}, std::move(f));
    }
    for (const auto& mesh : mesh_quiver.meshes) {
        const AffineForm& start = forms.at(mesh.start);
        AffineForm f{std::vector<int>(static_cast<std::size_t>(n), 0),
                     params.at(mesh.start) - start.constant};
        for (int x = 0; x < n; ++x)
            f.linear[static_cast<std::size_t>(x)] = -start.linear[static_cast<std::size_t>(x)];
        for (const auto& m : mesh.middles) {
            const AffineForm& mid = forms.at(m);
            for (int x = 0; x < n; ++x)
                f.linear[static_cast<std::size_t>(x)] += mid.linear[static_cast<std::size_t>(x)];
            f.constant += mid.constant;
        }
        forms.emplace(mesh.end, std::move(f));
    }
    return forms;
}

std::map<ObjId, std::vector<int>> g_vectors(const arquiver::MeshQuiver& mesh_quiver) {
    const int n = mesh_quiver.rank;
    std::map<ObjId, std::vector<int>> g;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        g.emplace(ObjId{1, i}, std::move(e));
    }
    for (const auto& mesh : mesh_quiver.meshes) {
        const auto& start = g.at(mesh.start);
        std::vector<int> v(static_cast<std::size_t>(n), 0);
        for (int x = 0; x < n; ++x) v[static_cast<std::size_t>(x)] = -start[static_cast<std::size_t>(x)];
        for (const auto& m : mesh.middles) {
            const auto& mid = g.at(m);
            for (int x = 0; x < n; ++x) v[static_cast<std::size_t>(x)] += mid[static_cast<std::size_t>(x)];
        }
        g.emplace(mesh.end, std::move(v));
    }
    std::set<std::vector<int>> distinct;
    for (const auto& [id, v] : g) {
        (void)id;
        if (!distinct.insert(v).second)
            throw internal_error("coinciding g-vectors in the knitted quiver");
    }
    return g;
}

}  // namespace assocfold::affine
