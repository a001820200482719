#include "assocfold/arquiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace assocfold::arquiver {

std::vector<ObjId> MeshQuiver::objects() const {
    std::vector<ObjId> out;
    out.reserve(static_cast<std::size_t>(total_objects));
    int max_k = 0;
    for (int len : row_length) max_k = std::max(max_k, len);
    for (int k = 1; k <= max_k; ++k)
        for (int i = 1; i <= rank; ++i)
            if (exists({k, i})) out.push_back({k, i});
    return out;
}

namespace {

/** Vertices ordered so that every arrow j->i lists j before i. */
std::vector<int> topological_order(const rootsystem::QuiverSpec& quiver) {
    const int n = quiver.rank;
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(n + 1), false);
    while (static_cast<int>(order.size()) < n) {
        int pick = -1;
        for (int v = 1; v <= n && pick < 0; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            bool ready = true;
            for (const auto& a : quiver.arrows)
                if (a.to == v && !placed[static_cast<std::size_t>(a.from)]) ready = false;
            if (ready) pick = v;
        }
        if (pick < 0) throw invalid_input("cyclic orientation rejected");
        placed[static_cast<std::size_t>(pick)] = true;
        order.push_back(pick);
    }
    return order;
}

bool nonneg_nonzero(const IntRoot& v) {
    bool nonzero = false;
    for (int c : v) {
        if (c < 0) return false;
        if (c > 0) nonzero = true;
    }
    return nonzero;
}

}  // namespace

MeshQuiver knit(const rootsystem::QuiverSpec& quiver) {
    if (!quiver.type.simply_laced())
        throw invalid_input("knitting requires a simply-laced quiver, got " + quiver.type.str());
    const int n = quiver.rank;
    const auto coxeter = rootsystem::coxeter_data(quiver.type);

    // Positive-root membership oracle for the propagation.
    const auto field = exactfield::rational_field();
    const auto root_system = rootsystem::build_root_system(quiver, field);
    std::set<std::vector<Rational>> positive;
    for (const auto& root : root_system.positive_roots()) {
        std::vector<Rational> key;
        for (const auto& c : root) key.push_back(c.rational_value());
        positive.insert(std::move(key));
    }
    auto is_positive_root = [&positive](const IntRoot& v) {
        std::vector<Rational> key(v.begin(), v.end());
        return positive.count(key) > 0;
    };

    MeshQuiver mq;
    mq.quiver = quiver;
    mq.rank = n;
    mq.coxeter_h = coxeter.h;
    mq.row_length.assign(static_cast<std::size_t>(n), 1);
    mq.vertex_order_ = topological_order(quiver);

    // Column 1: shifted slice with the negative simples.
    for (int i = 1; i <= n; ++i) {
        IntRoot r(static_cast<std::size_t>(n), 0);
        r[static_cast<std::size_t>(i - 1)] = -1;
        mq.roots[{1, i}] = r;
    }

    // Column 2: projective dimension vectors, sources first.
    for (int i : mq.vertex_order_) {
        IntRoot r(static_cast<std::size_t>(n), 0);
        r[static_cast<std::size_t>(i - 1)] = 1;
        for (const auto& a : quiver.arrows)
            if (a.to == i) {
                const IntRoot& pre = mq.roots.at({2, a.from});
                for (int x = 0; x < n; ++x) r[static_cast<std::size_t>(x)] += pre[static_cast<std::size_t>(x)];
            }
        if (!is_positive_root(r))
            throw internal_error("projective dimension vector is not a positive root at row " +
                                 std::to_string(i));
        mq.roots[{2, i}] = r;
        mq.row_length[static_cast<std::size_t>(i - 1)] = 2;
    }

    auto collect_middles = [&](int k, int i) {
        std::vector<ObjId> middles;
        for (const auto& a : quiver.arrows) {
            if (a.from == i && mq.exists({k, a.to})) middles.push_back({k, a.to});
            if (a.to == i && mq.exists({k + 1, a.from})) middles.push_back({k + 1, a.from});
        }
        std::sort(middles.begin(), middles.end());
        return middles;
    };

    // Meshes out of column 1 (all of column 2 exists, so no existence pruning
    // actually triggers here).
    for (int i : mq.vertex_order_)
        mq.meshes.push_back({{1, i}, {2, i}, collect_middles(1, i)});

    // Knit onwards: propose (k+1, i) from each live row.
    for (int k = 2;; ++k) {
        bool grew = false;
        for (int i : mq.vertex_order_) {
            if (!mq.exists({k, i})) continue;
            const auto middles = collect_middles(k, i);
            IntRoot r(static_cast<std::size_t>(n), 0);
            for (const auto& m : middles) {
                const IntRoot& mid = mq.roots.at(m);
                for (int x = 0; x < n; ++x) r[static_cast<std::size_t>(x)] += mid[static_cast<std::size_t>(x)];
            }
            const IntRoot& prev = mq.roots.at({k, i});
            for (int x = 0; x < n; ++x) r[static_cast<std::size_t>(x)] -= prev[static_cast<std::size_t>(x)];

            if (!nonneg_nonzero(r)) continue;  // row i ends at column k
            if (!is_positive_root(r))
                throw internal_error("knitting produced a non-root at " + obj_name({k + 1, i}));
            mq.roots[{k + 1, i}] = r;
            mq.row_length[static_cast<std::size_t>(i - 1)] = k + 1;
            mq.meshes.push_back({{k, i}, {k + 1, i}, middles});
            grew = true;
        }
        if (!grew) break;
    }

    // Arrows of the knitted quiver (within and across columns).
    for (const auto& [id, root] : mq.roots) {
        (void)root;
        const int k = id.first, i = id.second;
        for (const auto& a : quiver.arrows) {
            if (a.from == i && mq.exists({k, a.to})) mq.arrows.push_back({id, {k, a.to}});
            if (a.to == i && mq.exists({k + 1, a.from})) mq.arrows.push_back({id, {k + 1, a.from}});
        }
    }
    std::sort(mq.arrows.begin(), mq.arrows.end());

    // Structural checks.
    mq.total_objects = 0;
    for (int len : mq.row_length) mq.total_objects += len;
    if (2 * mq.total_objects != n * (coxeter.h + 2))
        throw internal_error("object count is not n(h+2)/2 for " + quiver.type.str());
    if (static_cast<int>(mq.meshes.size()) != coxeter.positive_root_count)
        throw internal_error("mesh count is not nh/2 for " + quiver.type.str());

    std::multiset<IntRoot> knitted;
    for (const auto& [id, root] : mq.roots)
        if (id.first >= 2) knitted.insert(root);
    std::multiset<IntRoot> expected;
    for (const auto& root : root_system.positive_roots()) {
        IntRoot v;
        for (const auto& c : root) v.push_back(static_cast<int>(c.rational_value().convert_to<long>()));
        expected.insert(v);
    }
    if (knitted != expected)
        throw internal_error("knitted roots do not match the positive roots of " +
                             quiver.type.str());

    return mq;
}

std::string dump_grid(const MeshQuiver& mq) {
    std::ostringstream out;
    auto root_str = [&](const ObjId& id) {
        std::string s = "[";
        const IntRoot& r = mq.roots.at(id);
        for (std::size_t x = 0; x < r.size(); ++x) {
            if (x) s += " ";
            s += std::to_string(r[x]);
        }
        return s + "]";
    };

    out << "type " << mq.quiver.type.str() << ", arrows:";
    for (const auto& a : mq.quiver.arrows) out << " " << a.from << "->" << a.to;
    out << "\n";
    for (int i = 1; i <= mq.rank; ++i) {
        out << "row " << i << ":";
        for (int k = 1; mq.exists({k, i}); ++k)
            out << "  t" << k << i << "=" << root_str({k, i});
        out << "\n";
    }
    out << "mesh equations:\n";
    for (const auto& mesh : mq.meshes) {
        auto t = [](const ObjId& id) {
            return "t" + std::to_string(id.first) + std::to_string(id.second);
        };
        out << "  " << t(mesh.start) << " + " << t(mesh.end) << " =";
        for (const auto& m : mesh.middles) out << " " << t(m) << " +";
        out << " c" << mesh.start.first << mesh.start.second << "\n";
    }
    return out.str();
}

}  // namespace assocfold::arquiver
