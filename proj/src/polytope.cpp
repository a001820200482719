#include "assocfold/polytope.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace assocfold::polytope {

using arquiver::ObjId;
using exactfield::FieldPtr;
using exactfield::Scalar;

namespace {

/** Gauss-Jordan over the field; false when the matrix is singular. */
bool solve_scalar(std::vector<std::vector<Scalar>> m, std::vector<Scalar> rhs,
                  std::vector<Scalar>& out) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return false;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        const Scalar inv = m[col][col].inverse();
        for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
        rhs[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const Scalar f = m[r][col];
            for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    out = std::move(rhs);
    return true;
}

bool solve_rational(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
                    std::vector<Rational>& out) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return false;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        const Rational inv = 1 / m[col][col];
        for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
        rhs[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    out = std::move(rhs);
    return true;
}

/** Facet data shared by the enumeration and the fan membership tests. */
struct FacetCache {
    bool rational = true;                      ///< all linear parts rational
    std::vector<std::vector<Rational>> rlin;   ///< filled when rational

    explicit FacetCache(const std::vector<FacetForm>& facets) {
        for (const auto& f : facets)
            for (const auto& entry : f.linear)
                if (!entry.is_rational_value()) {
                    rational = false;
                    return;
                }
        rlin.reserve(facets.size());
        for (const auto& f : facets) {
            std::vector<Rational> row;
            row.reserve(f.linear.size());
            for (const auto& entry : f.linear) row.push_back(entry.rational_value());
            rlin.push_back(std::move(row));
        }
    }
};

Scalar facet_value(const FacetForm& facet, const FacetCache& cache, std::size_t index,
                   const std::vector<Scalar>& point) {
    Scalar value = facet.constant;
    if (cache.rational) {
        const auto& row = cache.rlin[index];
        for (std::size_t x = 0; x < point.size(); ++x)
            if (row[x] != 0) value.add_scaled(point[x], row[x]);
    } else {
        for (std::size_t x = 0; x < point.size(); ++x) value += facet.linear[x] * point[x];
    }
    return value;
}

}  // namespace

std::vector<FacetForm> facet_forms(const std::map<ObjId, affine::AffineForm>& forms,
                                   const FieldPtr& field) {
    std::vector<FacetForm> facets;
    facets.reserve(forms.size());
    for (const auto& [id, form] : forms) {
        FacetForm f;
        f.label = id;
        f.linear.reserve(form.linear.size());
        for (int c : form.linear) f.linear.push_back(Scalar::from_int(field, c));
        f.constant = form.constant;
        facets.push_back(std::move(f));
    }
    return facets;
}

Polytope build_polytope(const std::vector<FacetForm>& facets) {
    if (facets.empty()) throw invalid_input("no facet forms given");
    const std::size_t dim = facets[0].linear.size();
    const FieldPtr field = facets[0].constant.field();
    for (const auto& f : facets)
        if (f.linear.size() != dim)
            throw invalid_input("facet forms of mixed dimension");

    const FacetCache cache(facets);

    // The origin vertex: tight exactly on the zero-constant forms.
    std::vector<int> tight0;
    for (std::size_t g = 0; g < facets.size(); ++g) {
        const int s = facets[g].constant.sign();
        if (s == 0)
            tight0.push_back(static_cast<int>(g));
        else if (s < 0)
            throw verification_error("facet " + arquiver::obj_name(facets[g].label) +
                                     " has negative value at the origin");
    }
    if (tight0.size() != dim)
        throw verification_error("expected " + std::to_string(dim) +
                                 " facets through the origin, found " +
                                 std::to_string(tight0.size()));

    std::vector<std::vector<int>> tights{tight0};
    std::vector<std::vector<Scalar>> coords{
        std::vector<Scalar>(dim, Scalar::from_int(field, 0))};
    std::map<std::vector<int>, int> index_of{{tight0, 0}};
    std::set<std::pair<int, int>> edge_set;

    std::deque<int> worklist{0};
    while (!worklist.empty()) {
        const int iv = worklist.front();
        worklist.pop_front();
        const std::vector<int> tight = tights[static_cast<std::size_t>(iv)];
        const std::vector<Scalar> at = coords[static_cast<std::size_t>(iv)];

        for (std::size_t p = 0; p < tight.size(); ++p) {
            const int leaving = tight[p];

            // Edge direction: keeps the other tight facets, raises the leaving one.
            std::vector<Rational> dir_q;
            std::vector<Scalar> dir_s;
            if (cache.rational) {
                std::vector<std::vector<Rational>> rows;
                std::vector<Rational> rhs;
                for (std::size_t q = 0; q < tight.size(); ++q)
                    if (q != p) {
                        rows.push_back(cache.rlin[static_cast<std::size_t>(tight[q])]);
                        rhs.push_back(0);
                    }
                rows.push_back(cache.rlin[static_cast<std::size_t>(leaving)]);
                rhs.push_back(1);
                if (!solve_rational(std::move(rows), std::move(rhs), dir_q))
                    throw verification_error("tight facets are dependent at a vertex; "
                                             "the polytope is not simple");
            } else {
                std::vector<std::vector<Scalar>> rows;
                std::vector<Scalar> rhs;
                for (std::size_t q = 0; q < tight.size(); ++q)
                    if (q != p) {
                        rows.push_back(facets[static_cast<std::size_t>(tight[q])].linear);
                        rhs.push_back(Scalar::from_int(field, 0));
                    }
                rows.push_back(facets[static_cast<std::size_t>(leaving)].linear);
                rhs.push_back(Scalar::from_int(field, 1));
                if (!solve_scalar(std::move(rows), std::move(rhs), dir_s))
                    throw verification_error("tight facets are dependent at a vertex; "
                                             "the polytope is not simple");
            }

            // Min-ratio scan across the non-tight facets (slope must go negative).
            int entering = -1;
            bool tied = false;
            Scalar best_value;
            Rational best_slope_q;
            Scalar best_slope_s;
            for (std::size_t g = 0; g < facets.size(); ++g) {
                if (std::binary_search(tight.begin(), tight.end(), static_cast<int>(g)))
                    continue;
                Rational slope_q;
                Scalar slope_s;
                int slope_sign;
                if (cache.rational) {
                    for (std::size_t x = 0; x < dim; ++x) slope_q += cache.rlin[g][x] * dir_q[x];
                    slope_sign = slope_q == 0 ? 0 : (slope_q < 0 ? -1 : 1);
                } else {
                    slope_s = Scalar::from_int(field, 0);
                    for (std::size_t x = 0; x < dim; ++x)
                        slope_s += facets[g].linear[x] * dir_s[x];
                    slope_sign = slope_s.sign();
                }
                if (slope_sign >= 0) continue;

                Scalar value = facet_value(facets[g], cache, g, at);
                if (value.is_zero())
                    throw verification_error("facet " + arquiver::obj_name(facets[g].label) +
                                             " is tight outside its cluster; the polytope "
                                             "is not simple");
                if (entering < 0) {
                    entering = static_cast<int>(g);
                    best_value = std::move(value);
                    best_slope_q = slope_q;
                    best_slope_s = slope_s;
                    continue;
                }
                // lambda_g vs lambda_best by cross-multiplication (slopes < 0).
                int cmp;
                if (cache.rational)
                    cmp = (value * (-best_slope_q) - best_value * (-slope_q)).sign();
                else
                    cmp = (value * (-best_slope_s) - best_value * (-slope_s)).sign();
                if (cmp == 0) tied = true;
                if (cmp < 0) {
                    entering = static_cast<int>(g);
                    tied = false;
                    best_value = std::move(value);
                    best_slope_q = slope_q;
                    best_slope_s = slope_s;
                }
            }
            if (entering < 0)
                throw verification_error("unbounded edge direction; the forms do not bound "
                                         "a polytope");
            if (tied)
                throw verification_error("two facets become tight simultaneously; "
                                         "the polytope is not simple");

            const Scalar lambda = cache.rational ? best_value / (-best_slope_q)
                                                 : best_value / (-best_slope_s);
            std::vector<Scalar> next(dim);
            for (std::size_t x = 0; x < dim; ++x) {
                next[x] = at[x];
                if (cache.rational) {
                    if (dir_q[x] != 0) next[x] += lambda * dir_q[x];
                } else {
                    next[x] += lambda * dir_s[x];
                }
            }
            std::vector<int> next_tight;
            next_tight.reserve(dim);
            for (std::size_t q = 0; q < tight.size(); ++q)
                if (q != p) next_tight.push_back(tight[q]);
            next_tight.push_back(entering);
            std::sort(next_tight.begin(), next_tight.end());

            const auto it = index_of.find(next_tight);
            int jv;
            if (it == index_of.end()) {
                jv = static_cast<int>(tights.size());
                tights.push_back(next_tight);
                coords.push_back(std::move(next));
                index_of.emplace(std::move(next_tight), jv);
                worklist.push_back(jv);
            } else {
                jv = it->second;
            }
            edge_set.emplace(std::min(iv, jv), std::max(iv, jv));
        }
    }

    // Canonical order: sort vertices by their tight sets, then remap edges.
    std::vector<int> order(tights.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return tights[static_cast<std::size_t>(a)] < tights[static_cast<std::size_t>(b)];
    });
    std::vector<int> rank(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    Polytope out;
    out.dim = static_cast<int>(dim);
    out.field = field;
    out.facets = facets;
    out.vertices.reserve(order.size());
    for (int old : order) {
        Vertex v;
        v.tight = tights[static_cast<std::size_t>(old)];
        v.coords = std::move(coords[static_cast<std::size_t>(old)]);
        v.cluster.reserve(v.tight.size());
        for (int g : v.tight) v.cluster.push_back(facets[static_cast<std::size_t>(g)].label);
        std::sort(v.cluster.begin(), v.cluster.end());
        out.vertices.push_back(std::move(v));
    }
    out.edges.reserve(edge_set.size());
    for (const auto& [a, b] : edge_set) {
        const int ra = rank[static_cast<std::size_t>(a)], rb = rank[static_cast<std::size_t>(b)];
        out.edges.emplace_back(std::min(ra, rb), std::max(ra, rb));
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::vector<long long> f_vector(const Polytope& polytope) {
    const auto vcount = static_cast<long long>(polytope.vertices.size());
    const auto ecount = static_cast<long long>(polytope.edges.size());

    // Every facet of a simple d-polytope carries at least d vertices.
    std::vector<long long> touched(polytope.facets.size(), 0);
    for (const auto& v : polytope.vertices)
        for (int g : v.tight) ++touched[static_cast<std::size_t>(g)];
    for (std::size_t g = 0; g < touched.size(); ++g)
        if (touched[g] < polytope.dim)
            throw verification_error("facet " + arquiver::obj_name(polytope.facets[g].label) +
                                     " touches only " + std::to_string(touched[g]) +
                                     " vertices");

    if (polytope.dim == 1) return {vcount};
    if (polytope.dim == 2) return {vcount, ecount};
    return {vcount, ecount, static_cast<long long>(polytope.facets.size())};
}

std::vector<Scalar> normalize_ray(const std::vector<Scalar>& direction) {
    std::size_t lead = 0;
    while (lead < direction.size() && direction[lead].is_zero()) ++lead;
    if (lead == direction.size()) throw internal_error("zero ray direction");
    Scalar scale = direction[lead];
    if (scale.sign() < 0) scale = -scale;
    std::vector<Scalar> out;
    out.reserve(direction.size());
    for (const auto& c : direction) out.push_back(c / scale);
    return out;
}

NormalFan normal_fan(const Polytope& polytope) {
    NormalFan fan;
    fan.rays.reserve(polytope.facets.size());
    std::set<std::vector<Scalar>> distinct;
    for (const auto& f : polytope.facets) {
        auto ray = normalize_ray(f.linear);
        if (!distinct.insert(ray).second)
            throw internal_error("two facets share a normal ray");
        fan.rays.push_back(std::move(ray));
    }
    fan.cones.reserve(polytope.vertices.size());
    for (const auto& v : polytope.vertices) fan.cones.push_back(v.tight);
    return fan;
}

void check_fan_complete(const Polytope& polytope, std::uint64_t seed, int count) {
    const FacetCache cache(polytope.facets);
    const std::size_t dim = static_cast<std::size_t>(polytope.dim);
    SplitMix64 rng(seed);

    int done = 0;
    long long guard = 0;
    while (done < count) {
        if (++guard > 50LL * count + 1000)
            throw internal_error("random direction resampling did not terminate");
        std::vector<long long> r(dim);
        bool all_zero = true;
        for (auto& x : r) {
            x = rng.range(-1000, 1000);
            if (x != 0) all_zero = false;
        }
        if (all_zero) continue;

        // The direction lies in the normal cone of the vertex minimizing <r, v>.
        int best = -1;
        Scalar best_val;
        bool tie = false;
        for (std::size_t iv = 0; iv < polytope.vertices.size(); ++iv) {
            Scalar val = Scalar::from_int(polytope.field, 0);
            const auto& v = polytope.vertices[iv].coords;
            for (std::size_t x = 0; x < dim; ++x)
                if (r[x] != 0) val.add_scaled(v[x], Rational(r[x]));
            if (best < 0) {
                best = static_cast<int>(iv);
                best_val = std::move(val);
                continue;
            }
            const int s = (val - best_val).sign();
            if (s < 0) {
                best = static_cast<int>(iv);
                best_val = std::move(val);
                tie = false;
            } else if (s == 0) {
                tie = true;
            }
        }
        if (tie) continue;  // wall between cones; redraw

        // Express r in the cone spanned by the tight facet normals.
        const auto& tight = polytope.vertices[static_cast<std::size_t>(best)].tight;
        bool boundary = false, outside = false;
        if (cache.rational) {
            std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim));
            std::vector<Rational> rhs(dim), lambda;
            for (std::size_t x = 0; x < dim; ++x) {
                for (std::size_t j = 0; j < dim; ++j)
                    m[x][j] = cache.rlin[static_cast<std::size_t>(tight[j])][x];
                rhs[x] = Rational(r[x]);
            }
            if (!solve_rational(std::move(m), std::move(rhs), lambda))
                throw internal_error("degenerate normal cone");
            for (const auto& l : lambda) {
                if (l == 0) boundary = true;
                if (l < 0) outside = true;
            }
        } else {
            std::vector<std::vector<Scalar>> m(dim, std::vector<Scalar>(dim));
            std::vector<Scalar> rhs(dim), lambda;
            for (std::size_t x = 0; x < dim; ++x) {
                for (std::size_t j = 0; j < dim; ++j)
                    m[x][j] = polytope.facets[static_cast<std::size_t>(tight[j])].linear[x];
                rhs[x] = Scalar::from_int(polytope.field, static_cast<long>(r[x]));
            }
            if (!solve_scalar(std::move(m), std::move(rhs), lambda))
                throw internal_error("degenerate normal cone");
            for (const auto& l : lambda) {
                const int s = l.sign();
                if (s == 0) boundary = true;
                if (s < 0) outside = true;
            }
        }
        if (outside)
            throw verification_error("direction not covered by any maximal normal cone");
        if (boundary) continue;  // on a cone wall; redraw
        ++done;
    }
}

}  // namespace assocfold::polytope
