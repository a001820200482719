#include "assocfold/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

namespace assocfold::rootsystem {

std::string TypeLabel::str() const {
    if (family == 'I') return "I2(" + std::to_string(order) + ")";
    return std::string(1, family) + std::to_string(rank);
}

TypeLabel parse_type(const std::string& text) {
    if (text.empty()) throw invalid_input("empty type label");
    const char family = text[0];

    if (family == 'I') {
        // Accept I2(m) and I2_m.
        int m = 0;
        if (text.rfind("I2(", 0) == 0 && text.back() == ')')
            m = std::atoi(text.substr(3, text.size() - 4).c_str());
        else if (text.rfind("I2_", 0) == 0)
            m = std::atoi(text.substr(3).c_str());
        else
            throw invalid_input("malformed dihedral label (expected I2(m)): " + text);
        if (m < 3) throw invalid_input("dihedral order must be at least 3: " + text);
        return TypeLabel{'I', 2, m};
    }

    for (std::size_t i = 1; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw invalid_input("malformed type label: " + text);
    if (text.size() < 2) throw invalid_input("malformed type label: " + text);
    const int rank = std::atoi(text.c_str() + 1);

    switch (family) {
        case 'A':
            if (rank < 1) throw invalid_input("A_n requires n >= 1: " + text);
            break;
        case 'B':
            if (rank < 2) throw invalid_input("B_n requires n >= 2: " + text);
            break;
        case 'C':
            if (rank < 2) throw invalid_input("C_n requires n >= 2: " + text);
            break;
        case 'D':
            if (rank < 4) throw invalid_input("D_n requires n >= 4: " + text);
            break;
        case 'E':
            if (rank < 6 || rank > 8) throw invalid_input("E_n requires n in {6,7,8}: " + text);
            break;
        case 'F':
            if (rank != 4) throw invalid_input("only F4 is defined: " + text);
            break;
        case 'G':
            if (rank != 2) throw invalid_input("only G2 is defined: " + text);
            return TypeLabel{'I', 2, 6};  // G2 is the dihedral group of order 12
        case 'H':
            if (rank != 3 && rank != 4) throw invalid_input("only H3 and H4 are defined: " + text);
            break;
        default:
            throw invalid_input("unknown type family: " + text);
    }
    return TypeLabel{family, rank, 0};
}

std::vector<TypeLabel> supported_types() {
    std::vector<TypeLabel> out;
    for (int n = 1; n <= 8; ++n) out.push_back({'A', n, 0});
    for (int n = 4; n <= 8; ++n) out.push_back({'D', n, 0});
    for (int n = 6; n <= 8; ++n) out.push_back({'E', n, 0});
    for (int n = 3; n <= 6; ++n) out.push_back({'B', n, 0});
    for (int n = 2; n <= 6; ++n) out.push_back({'C', n, 0});
    out.push_back({'F', 4, 0});
    out.push_back({'H', 3, 0});
    out.push_back({'H', 4, 0});
    for (int m : {5, 6, 7, 8, 12}) out.push_back({'I', 2, m});
    return out;
}

CoxeterData coxeter_data(const TypeLabel& type) {
    CoxeterData data;
    const int n = type.rank;
    switch (type.family) {
        case 'A':
            data.h = n + 1;
            for (int e = 1; e <= n; ++e) data.exponents.push_back(e);
            break;
        case 'B':
        case 'C':
            data.h = 2 * n;
            for (int e = 1; e <= 2 * n - 1; e += 2) data.exponents.push_back(e);
            break;
        case 'D':
            data.h = 2 * n - 2;
            for (int e = 1; e <= 2 * n - 3; e += 2) data.exponents.push_back(e);
            data.exponents.push_back(n - 1);
            break;
        case 'E':
            if (n == 6) { data.h = 12; data.exponents = {1, 4, 5, 7, 8, 11}; }
            if (n == 7) { data.h = 18; data.exponents = {1, 5, 7, 9, 11, 13, 17}; }
            if (n == 8) { data.h = 30; data.exponents = {1, 7, 11, 13, 17, 19, 23, 29}; }
            break;
        case 'F':
            data.h = 12;
            data.exponents = {1, 5, 7, 11};
            break;
        case 'H':
            if (n == 3) { data.h = 10; data.exponents = {1, 5, 9}; }
            if (n == 4) { data.h = 30; data.exponents = {1, 11, 19, 29}; }
            break;
        case 'I':
            data.h = type.order;
            data.exponents = {1, type.order - 1};
            break;
        default:
            throw internal_error("unhandled type family");
    }
    if ((n * data.h) % 2 != 0) throw internal_error("odd n*h");
    data.positive_root_count = n * data.h / 2;
    return data;
}

Integer catalan_count(const TypeLabel& type) {
    const CoxeterData data = coxeter_data(type);
    Integer num = 1, den = 1;
    for (int e : data.exponents) {
        num *= e + data.h + 1;
        den *= e + 1;
    }
    if (num % den != 0) throw internal_error("Coxeter-Catalan formula not integral");
    return num / den;
}

std::vector<DiagramEdge> diagram(const TypeLabel& type) {
    std::vector<DiagramEdge> edges;
    const int n = type.rank;
    auto path = [&edges](int upto) {
        for (int i = 1; i < upto; ++i) edges.push_back({i, i + 1, 3});
    };
    switch (type.family) {
        case 'A':
            path(n);
            break;
        case 'B':
        case 'C':
            path(n - 1);
            edges.push_back({n - 1, n, 4});
            break;
        case 'D':
            path(n - 2);
            edges.push_back({n - 2, n - 1, 3});
            edges.push_back({n - 2, n, 3});
            break;
        case 'E':
            edges.push_back({1, 3, 3});
            edges.push_back({3, 4, 3});
            edges.push_back({2, 4, 3});
            for (int i = 4; i < n; ++i) edges.push_back({i, i + 1, 3});
            break;
        case 'F':
            edges = {{1, 2, 3}, {2, 3, 4}, {3, 4, 3}};
            break;
        case 'H':
            path(n - 1);
            edges.push_back({n - 1, n, 5});
            break;
        case 'I':
            edges.push_back({1, 2, type.order});
            break;
        default:
            throw internal_error("unhandled type family");
    }
    return edges;
}

bool QuiverSpec::has_arrow(int from, int to) const {
    for (const auto& a : arrows)
        if (a.from == from && a.to == to) return true;
    return false;
}

namespace {

/** Two-colouring by distance from vertex 1 (diagrams are trees). */
std::vector<int> bipartite_colours(const TypeLabel& type) {
    const auto edges = diagram(type);
    const int n = type.rank;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n + 1));
    for (const auto& e : edges) {
        adj[static_cast<std::size_t>(e.a)].push_back(e.b);
        adj[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    std::vector<int> colour(static_cast<std::size_t>(n + 1), -1);
    std::deque<int> queue{1};
    colour[1] = 0;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int u : adj[static_cast<std::size_t>(v)])
            if (colour[static_cast<std::size_t>(u)] < 0) {
                colour[static_cast<std::size_t>(u)] = 1 - colour[static_cast<std::size_t>(v)];
                queue.push_back(u);
            }
    }
    for (int v = 1; v <= n; ++v)
        if (colour[static_cast<std::size_t>(v)] < 0)
            throw internal_error("disconnected diagram");
    return colour;
}

}  // namespace

QuiverSpec build_quiver(const TypeLabel& type) {
    const auto colour = bipartite_colours(type);
    QuiverSpec q;
    q.type = type;
    q.rank = type.rank;
    for (const auto& e : diagram(type)) {
        // The colour class of vertex 1 acts as sources.
        if (colour[static_cast<std::size_t>(e.a)] == 0)
            q.arrows.push_back({e.a, e.b});
        else
            q.arrows.push_back({e.b, e.a});
        q.bonds.push_back(e.bond);
    }
    return q;
}

QuiverSpec build_quiver(const TypeLabel& type, const std::vector<Arrow>& arrows) {
    const auto edges = diagram(type);
    if (arrows.size() != edges.size())
        throw invalid_input("orientation must assign exactly one arrow per diagram edge");
    QuiverSpec q;
    q.type = type;
    q.rank = type.rank;
    for (const auto& e : edges) {
        bool forward = false, backward = false;
        for (const auto& a : arrows) {
            if (a.from == e.a && a.to == e.b) forward = true;
            if (a.from == e.b && a.to == e.a) backward = true;
        }
        if (forward == backward)
            throw invalid_input("orientation must pick one direction for edge " +
                                std::to_string(e.a) + "-" + std::to_string(e.b));
        q.arrows.push_back(forward ? Arrow{e.a, e.b} : Arrow{e.b, e.a});
        q.bonds.push_back(e.bond);
    }
    // Diagrams are trees, so any honest orientation is acyclic; check anyway
    // to guard against future non-tree diagram data.
    std::vector<int> indeg(static_cast<std::size_t>(q.rank + 1), 0);
    for (const auto& a : q.arrows) ++indeg[static_cast<std::size_t>(a.to)];
    std::deque<int> ready;
    for (int v = 1; v <= q.rank; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
        const int v = ready.front();
        ready.pop_front();
        ++seen;
        for (const auto& a : q.arrows)
            if (a.from == v && --indeg[static_cast<std::size_t>(a.to)] == 0)
                ready.push_back(a.to);
    }
    if (seen != q.rank) throw invalid_input("cyclic orientation rejected");
    return q;
}

int required_field_order(const TypeLabel& type) {
    switch (type.family) {
        case 'H':
            return 5;
        case 'I':
            return type.order;
        default:
            return 3;  // crystallographic data is rational
    }
}

FieldPtr natural_field(const TypeLabel& type) {
    return exactfield::make_field(required_field_order(type));
}

namespace {

void check_field(const TypeLabel& type, const FieldPtr& field) {
    const int required = required_field_order(type);
    if (required != 3 && field->m != required)
        throw invalid_input("type " + type.str() + " needs the field of order " +
                            std::to_string(required));
}

}  // namespace

std::vector<std::vector<Scalar>> reflection_table(const TypeLabel& type,
                                                  const FieldPtr& field) {
    check_field(type, field);
    const int n = type.rank;
    const Scalar zero = Scalar::from_int(field, 0);
    std::vector<std::vector<Scalar>> R(static_cast<std::size_t>(n),
                                       std::vector<Scalar>(static_cast<std::size_t>(n), zero));
    for (int i = 0; i < n; ++i) R[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Scalar::from_int(field, 2);

    for (const auto& e : diagram(type)) {
        const std::size_t a = static_cast<std::size_t>(e.a - 1);
        const std::size_t b = static_cast<std::size_t>(e.b - 1);
        if (e.bond == 3) {
            R[a][b] = Scalar::from_int(field, -1);
            R[b][a] = Scalar::from_int(field, -1);
        } else if (type.family == 'B' || type.family == 'C' || type.family == 'F') {
            // Cartan integers across the double bond; the short-root side
            // (vertex n for B, vertex n-1..n split for F) takes the -1.
            //   B_n: vertex n short;  C_n: vertex n long;  F4: vertices 3,4 short.
            const bool b_is_short = (type.family == 'B') || (type.family == 'F');
            // For C_n the higher-numbered endpoint is long, so the -2 sits
            // on the other side of the bond.
            if (b_is_short) {
                R[a][b] = Scalar::from_int(field, -2);
                R[b][a] = Scalar::from_int(field, -1);
            } else {
                R[a][b] = Scalar::from_int(field, -1);
                R[b][a] = Scalar::from_int(field, -2);
            }
        } else {
            // Symmetric realization: entry -2cos(pi/bond) on both sides.
            const Scalar minus_theta = -Scalar::generator(field);
            R[a][b] = minus_theta;
            R[b][a] = minus_theta;
        }
    }
    return R;
}

std::vector<std::pair<Scalar, Scalar>> arrow_weights(const QuiverSpec& quiver,
                                                     const FieldPtr& field) {
    const auto R = reflection_table(quiver.type, field);
    std::vector<std::pair<Scalar, Scalar>> weights;
    for (const auto& a : quiver.arrows) {
        const std::size_t u = static_cast<std::size_t>(a.from - 1);
        const std::size_t v = static_cast<std::size_t>(a.to - 1);
        weights.emplace_back(-R[u][v], -R[v][u]);
    }
    return weights;
}

RootSystem::RootSystem(TypeLabel type, FieldPtr field, std::vector<Root> positive)
    : type_(type), field_(std::move(field)), rank_(type.rank), positive_(std::move(positive)) {
    std::sort(positive_.begin(), positive_.end());
}

std::vector<RootSystem::Root> RootSystem::almost_positive() const {
    std::vector<Root> out = positive_;
    for (int v = 1; v <= rank_; ++v) {
        Root neg = simple_root(v);
        neg[static_cast<std::size_t>(v - 1)] = Scalar::from_int(field_, -1);
        out.push_back(std::move(neg));
    }
    return out;
}

RootSystem::Root RootSystem::simple_root(int vertex) const {
    Root r(static_cast<std::size_t>(rank_), Scalar::from_int(field_, 0));
    r[static_cast<std::size_t>(vertex - 1)] = Scalar::from_int(field_, 1);
    return r;
}

bool RootSystem::is_positive_root(const Root& v) const {
    return std::binary_search(positive_.begin(), positive_.end(), v);
}

bool RootSystem::is_root(const Root& v) const {
    if (is_positive_root(v)) return true;
    Root neg;
    neg.reserve(v.size());
    for (const auto& c : v) neg.push_back(-c);
    return is_positive_root(neg);
}

RootSystem build_root_system(const QuiverSpec& quiver, const FieldPtr& field) {
    const TypeLabel type = quiver.type;
    const int n = quiver.rank;
    const auto R = reflection_table(type, field);

    std::set<RootSystem::Root> closure;
    std::deque<RootSystem::Root> work;
    for (int v = 1; v <= n; ++v) {
        RootSystem::Root simple(static_cast<std::size_t>(n), Scalar::from_int(field, 0));
        simple[static_cast<std::size_t>(v - 1)] = Scalar::from_int(field, 1);
        closure.insert(simple);
        work.push_back(simple);
    }
    while (!work.empty()) {
        const RootSystem::Root root = work.front();
        work.pop_front();
        for (int j = 0; j < n; ++j) {
            // s_j: only coordinate j changes.
            Scalar pairing = Scalar::from_int(field, 0);
            for (int i = 0; i < n; ++i)
                if (!root[static_cast<std::size_t>(i)].is_zero())
                    pairing += root[static_cast<std::size_t>(i)] * R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            RootSystem::Root image = root;
            image[static_cast<std::size_t>(j)] = image[static_cast<std::size_t>(j)] - pairing;
            if (closure.insert(image).second) work.push_back(std::move(image));
        }
    }

    // Split into positive and negative halves; every root must be one or the
    // other, and the two halves must be mirror images.
    std::vector<RootSystem::Root> positive;
    std::size_t negative = 0;
    for (const auto& root : closure) {
        bool has_pos = false, has_neg = false;
        for (const auto& c : root) {
            const int s = c.sign();
            if (s > 0) has_pos = true;
            if (s < 0) has_neg = true;
        }
        if (has_pos && has_neg)
            throw internal_error("mixed-sign root in reflection closure");
        if (has_pos)
            positive.push_back(root);
        else
            ++negative;
    }
    if (positive.size() != negative)
        throw internal_error("root system is not symmetric under negation");
    const CoxeterData data = coxeter_data(type);
    if (static_cast<int>(positive.size()) != data.positive_root_count)
        throw internal_error("positive root count mismatch for " + type.str());

    return RootSystem(type, field, std::move(positive));
}

}  // namespace assocfold::rootsystem
