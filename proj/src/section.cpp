#include "assocfold/section.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace assocfold::section {

using arquiver::ObjId;
using exactfield::Scalar;

namespace {

/** Row rank by Gaussian elimination over the field. */
int scalar_rank(std::vector<std::vector<Scalar>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        const Scalar inv = m[row][col].inverse();
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row) continue;
            const Scalar f = m[r][col];
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < cols; ++j) m[r][j] -= f * m[row][j];
        }
        ++row;
    }
    return static_cast<int>(row);
}

bool cluster_block_closed(const std::vector<ObjId>& cluster, const Section& section) {
    for (const auto& [k, i] : cluster) {
        const auto& block =
            section.fold.blocks[static_cast<std::size_t>(
                section.fold.block_of[static_cast<std::size_t>(i - 1)] - 1)];
        for (int j : block) {
            if (!section.mesh.exists({k, j})) continue;
            if (!std::binary_search(cluster.begin(), cluster.end(), ObjId{k, j})) return false;
        }
    }
    return true;
}

}  // namespace

Section build_section(const folding::Folding& fold, const Rational& base_param) {
    Section section;
    section.fold = fold;
    section.mesh = arquiver::knit(rootsystem::build_quiver(fold.source));
    folding::validate_folding(fold, section.mesh);
    section.params = folding::symmetric_params(fold, section.mesh, base_param);
    section.ambient_forms = affine::propagate_forms(section.mesh, section.params);

    // Group objects into (column, block) classes; map order makes the least
    // member of each class come first.
    std::map<std::pair<int, int>, std::vector<ObjId>> grouped;
    for (const auto& [id, form] : section.ambient_forms) {
        (void)form;
        grouped[{id.first, fold.block_of[static_cast<std::size_t>(id.second - 1)]}]
            .push_back(id);
    }
    for (auto& [key, members] : grouped) {
        (void)key;
        std::sort(members.begin(), members.end());
        section.classes.push_back({members.front(), std::move(members)});
    }
    std::sort(section.classes.begin(), section.classes.end(),
              [](const FacetClass& a, const FacetClass& b) { return a.rep < b.rep; });
    for (std::size_t c = 0; c < section.classes.size(); ++c)
        for (const auto& id : section.classes[c].members)
            section.class_of[id] = static_cast<int>(c);

    // One restricted facet per class; members must be weight-proportional.
    std::set<std::vector<Scalar>> normals;
    for (const auto& fc : section.classes) {
        const auto& rep_form = section.ambient_forms.at(fc.rep);
        const auto rep_linear = folding::project(fold, rep_form.linear);
        const Scalar& w_rep = fold.weights[static_cast<std::size_t>(fc.rep.second - 1)];
        for (const auto& id : fc.members) {
            const auto& form = section.ambient_forms.at(id);
            const auto linear = folding::project(fold, form.linear);
            const Scalar& w = fold.weights[static_cast<std::size_t>(id.second - 1)];
            for (std::size_t x = 0; x < linear.size(); ++x)
                if (linear[x] * w_rep != rep_linear[x] * w)
                    throw verification_error("restricted forms of " +
                                             arquiver::obj_name(fc.rep) + " and " +
                                             arquiver::obj_name(id) +
                                             " are not weight-proportional");
            if (form.constant * w_rep != rep_form.constant * w)
                throw verification_error("restricted constants of " +
                                         arquiver::obj_name(fc.rep) + " and " +
                                         arquiver::obj_name(id) +
                                         " are not weight-proportional");
        }
        bool zero = true;
        for (const auto& x : rep_linear)
            if (!x.is_zero()) zero = false;
        if (zero)
            throw verification_error("restricted form of " + arquiver::obj_name(fc.rep) +
                                     " has no direction");
        if (!normals.insert(polytope::normalize_ray(rep_linear)).second)
            throw verification_error("two facet classes share a normal direction");

        polytope::FacetForm facet;
        facet.label = fc.rep;
        facet.linear = rep_linear;
        facet.constant = rep_form.constant;
        section.facets.push_back(std::move(facet));
    }
    return section;
}

polytope::Polytope restricted_polytope(const Section& section) {
    return polytope::build_polytope(section.facets);
}

polytope::Polytope ambient_polytope(const Section& section) {
    return polytope::build_polytope(
        polytope::facet_forms(section.ambient_forms, section.fold.field));
}

std::map<ObjId, std::vector<Scalar>> verify_ray_match(
    const Section& section, const polytope::Polytope& restricted) {
    const auto& fold = section.fold;
    std::set<std::vector<Scalar>> image_rays;
    std::map<ObjId, std::vector<Scalar>> image_of;
    for (const auto& [id, form] : section.ambient_forms) {
        auto image = folding::project(fold, form.linear);
        bool zero = true;
        for (const auto& x : image)
            if (!x.is_zero()) zero = false;
        if (zero)
            throw verification_error("g-vector of " + arquiver::obj_name(id) +
                                     " projects to zero");

        const int c = section.class_of.at(id);
        const auto& class_linear = section.facets[static_cast<std::size_t>(c)].linear;
        const Scalar& w = fold.weights[static_cast<std::size_t>(id.second - 1)];
        const Scalar& w_rep = fold.weights[static_cast<std::size_t>(
            section.classes[static_cast<std::size_t>(c)].rep.second - 1)];
        for (std::size_t x = 0; x < image.size(); ++x)
            if (image[x] * w_rep != class_linear[x] * w)
                throw verification_error("projected g-vector of " + arquiver::obj_name(id) +
                                         " is not a positive multiple of its class normal");

        image_rays.insert(polytope::normalize_ray(image));
        image_of.emplace(id, std::move(image));
    }
    std::set<std::vector<Scalar>> restricted_rays;
    for (const auto& f : restricted.facets)
        restricted_rays.insert(polytope::normalize_ray(f.linear));
    if (image_rays != restricted_rays)
        throw verification_error("projected ambient rays differ from the restricted "
                                 "fan's rays");
    return image_of;
}

void verify_fan_match(const Section& section, const polytope::Polytope& ambient,
                      const polytope::Polytope& restricted, std::uint64_t seed,
                      int samples) {
    const auto image_of = verify_ray_match(section, restricted);

    // Block-closed ambient clusters must hit the restricted cones bijectively.
    std::map<std::vector<std::vector<Scalar>>, int> projected_cones;
    for (const auto& v : ambient.vertices) {
        if (!cluster_block_closed(v.cluster, section)) continue;
        std::set<std::vector<Scalar>> rays;
        for (const auto& id : v.cluster)
            rays.insert(polytope::normalize_ray(image_of.at(id)));
        std::vector<std::vector<Scalar>> key(rays.begin(), rays.end());
        if (++projected_cones[key] > 1)
            throw verification_error("two block-closed clusters project to one cone");
    }
    std::set<std::vector<std::vector<Scalar>>> restricted_cones;
    for (const auto& v : restricted.vertices) {
        std::set<std::vector<Scalar>> rays;
        for (int g : v.tight)
            rays.insert(
                polytope::normalize_ray(restricted.facets[static_cast<std::size_t>(g)].linear));
        restricted_cones.insert({rays.begin(), rays.end()});
    }
    std::set<std::vector<std::vector<Scalar>>> projected_set;
    for (const auto& [key, count] : projected_cones) {
        (void)count;
        projected_set.insert(key);
    }
    if (projected_set != restricted_cones)
        throw verification_error("block-closed clusters and restricted cones do not "
                                 "correspond");

    polytope::check_fan_complete(restricted, seed, samples);
}

void verify_facet_intersections(const Section& section,
                                const polytope::Polytope& restricted) {
    const std::size_t dim = static_cast<std::size_t>(restricted.dim);
    for (std::size_t f = 0; f < restricted.facets.size(); ++f) {
        std::vector<const std::vector<Scalar>*> on_facet;
        for (const auto& v : restricted.vertices)
            if (std::binary_search(v.tight.begin(), v.tight.end(), static_cast<int>(f)))
                on_facet.push_back(&v.coords);
        if (on_facet.size() < dim)
            throw verification_error("restricted facet " +
                                     arquiver::obj_name(restricted.facets[f].label) +
                                     " has too few vertices");
        std::vector<std::vector<Scalar>> diffs;
        for (std::size_t t = 1; t < on_facet.size(); ++t) {
            std::vector<Scalar> d;
            d.reserve(dim);
            for (std::size_t x = 0; x < dim; ++x)
                d.push_back((*on_facet[t])[x] - (*on_facet[0])[x]);
            diffs.push_back(std::move(d));
        }
        if (scalar_rank(std::move(diffs)) != restricted.dim - 1)
            throw verification_error("restricted facet " +
                                     arquiver::obj_name(restricted.facets[f].label) +
                                     " does not span a hyperplane of the plane");
    }
    // Every ambient object belongs to a class, so every ambient facet meets
    // the plane in one of the faces just checked.
    if (section.class_of.size() != section.ambient_forms.size())
        throw internal_error("facet classes do not cover the ambient objects");
}

void verify_tail_cluster(const Section& section, const polytope::Polytope& ambient) {
    std::vector<ObjId> tail;
    for (int i = 1; i <= section.mesh.rank; ++i)
        tail.push_back({section.mesh.row_length[static_cast<std::size_t>(i - 1)], i});
    std::sort(tail.begin(), tail.end());
    if (!cluster_block_closed(tail, section))
        throw verification_error("row tails do not form a block-closed set");
    bool found = false;
    for (const auto& v : ambient.vertices)
        if (v.cluster == tail) {
            found = true;
            break;
        }
    if (!found)
        throw verification_error("row tails do not form an ambient cluster");
}

}  // namespace assocfold::section
