#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <set>

#include "assocfold/rootsystem.hpp"
#include "doctest.h"

using assocfold::Error;
using assocfold::Integer;
using assocfold::Rational;
using namespace assocfold::rootsystem;

TEST_CASE("type labels parse and print") {
    CHECK(parse_type("A3").str() == "A3");
    CHECK(parse_type("I2(7)").str() == "I2(7)");
    CHECK(parse_type("G2").str() == "I2(6)");  // one dihedral home for G2
    CHECK(parse_type("H4").family == 'H');
    CHECK(parse_type("D6").rank == 6);
    CHECK_THROWS_AS(parse_type("Z9"), Error);
    CHECK_THROWS_AS(parse_type("A0"), Error);
    CHECK_THROWS_AS(parse_type("I2(2)"), Error);
    CHECK_THROWS_AS(parse_type("H5"), Error);
    CHECK(parse_type("A3").simply_laced());
    CHECK_FALSE(parse_type("C2").simply_laced());
    CHECK_FALSE(parse_type("H3").simply_laced());
}

TEST_CASE("coxeter data: h, exponents, root counts") {
    const struct {
        const char* label;
        int h;
        int roots;
    } expected[] = {
        {"A1", 2, 1},   {"A3", 4, 6},    {"A7", 8, 28},  {"D4", 6, 12},
        {"D6", 10, 30}, {"E6", 12, 36},  {"E7", 18, 63}, {"E8", 30, 120},
        {"B3", 6, 9},   {"B4", 8, 16},   {"C2", 4, 4},   {"C3", 6, 9},
        {"F4", 12, 24}, {"H3", 10, 15},  {"H4", 30, 60}, {"I2(5)", 5, 5},
        {"I2(12)", 12, 12},
    };
    for (const auto& e : expected) {
        CAPTURE(e.label);
        const auto cox = coxeter_data(parse_type(e.label));
        CHECK(cox.h == e.h);
        CHECK(cox.positive_root_count == e.roots);
        const int n = parse_type(e.label).rank;
        CHECK(static_cast<int>(cox.exponents.size()) == n);
        // sum of exponents = nh/2 = number of positive roots
        CHECK(std::accumulate(cox.exponents.begin(), cox.exponents.end(), 0) ==
              n * cox.h / 2);
        CHECK(cox.positive_root_count == n * cox.h / 2);
        // exponents come paired: e and h - e both appear
        std::multiset<int> exps(cox.exponents.begin(), cox.exponents.end());
        for (int x : exps) CHECK(exps.count(cox.h - x) == exps.count(x));
    }
    CHECK(coxeter_data(parse_type("D6")).exponents ==
          std::vector<int>{1, 3, 5, 7, 9, 5});
    CHECK(coxeter_data(parse_type("E8")).exponents ==
          std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("generalized catalan numbers") {
    const struct {
        const char* label;
        long expected;
    } table[] = {
        {"A1", 2},    {"A2", 5},     {"A3", 14},    {"A4", 42},   {"A5", 132},
        {"D4", 50},   {"D5", 182},   {"D6", 672},   {"E6", 833},  {"E7", 4160},
        {"E8", 25080}, {"B3", 20},   {"B4", 70},    {"C2", 6},    {"C3", 20},
        {"F4", 105},  {"H3", 32},    {"H4", 280},   {"I2(5)", 7}, {"I2(9)", 11},
    };
    for (const auto& e : table) {
        CAPTURE(e.label);
        CHECK(catalan_count(parse_type(e.label)) == Integer(e.expected));
    }
    // product formula sanity on every supported type: integrality
    for (const auto& type : supported_types()) CHECK(catalan_count(type) > 0);
}

TEST_CASE("diagrams have the right shape") {
    CHECK(diagram(parse_type("A4")).size() == 3);
    CHECK(diagram(parse_type("D5")).size() == 4);
    CHECK(diagram(parse_type("E8")).size() == 7);
    // E-series attaches vertex 2 to vertex 4
    const auto e6 = diagram(parse_type("E6"));
    CHECK(std::any_of(e6.begin(), e6.end(), [](const DiagramEdge& e) {
        return (e.a == 2 && e.b == 4) || (e.a == 4 && e.b == 2);
    }));
    // bonds: B/C carry one 4, F4 one 4, H one 5, I2(m) one m
    auto bond_of = [](const char* label) {
        int high = 3;
        for (const auto& e : diagram(parse_type(label))) high = std::max(high, e.bond);
        return high;
    };
    CHECK(bond_of("A5") == 3);
    CHECK(bond_of("B4") == 4);
    CHECK(bond_of("C3") == 4);
    CHECK(bond_of("F4") == 4);
    CHECK(bond_of("H4") == 5);
    CHECK(bond_of("I2(7)") == 7);
}

TEST_CASE("alternating orientation makes the first vertex a source") {
    const auto a3 = build_quiver(parse_type("A3"));
    CHECK(a3.has_arrow(1, 2));
    CHECK(a3.has_arrow(3, 2));
    CHECK_FALSE(a3.has_arrow(2, 1));

    const auto d4 = build_quiver(parse_type("D4"));
    CHECK(d4.has_arrow(1, 2));
    CHECK(d4.has_arrow(3, 2));
    CHECK(d4.has_arrow(4, 2));

    // every edge is oriented, no vertex has both in- and out-arrows
    for (const char* label : {"A5", "D6", "E7", "E8"}) {
        CAPTURE(label);
        const auto q = build_quiver(parse_type(label));
        CHECK(q.arrows.size() == diagram(q.type).size());
        for (int v = 1; v <= q.rank; ++v) {
            bool in = false, out = false;
            for (const auto& a : q.arrows) {
                if (a.from == v) out = true;
                if (a.to == v) in = true;
            }
            CHECK_FALSE((in && out));
        }
    }
}

TEST_CASE("explicit orientations are validated") {
    const auto flipped = build_quiver(parse_type("A3"), {{2, 1}, {2, 3}});
    CHECK(flipped.has_arrow(2, 1));
    CHECK(flipped.has_arrow(2, 3));
    // linear orientation is fine too
    CHECK(build_quiver(parse_type("A3"), {{1, 2}, {2, 3}}).has_arrow(2, 3));
    // non-edges, duplicates, and missing edges are rejected
    CHECK_THROWS_AS(build_quiver(parse_type("A3"), {{1, 3}, {1, 2}}), Error);
    CHECK_THROWS_AS(build_quiver(parse_type("A3"), {{1, 2}, {2, 1}}), Error);
    CHECK_THROWS_AS(build_quiver(parse_type("A3"), {{1, 2}}), Error);
}

TEST_CASE("reflection tables") {
    // entries are 0-based: R[i][j] describes vertices i+1 and j+1
    const auto rational = natural_field(parse_type("A2"));
    const auto a2 = reflection_table(parse_type("A2"), rational);
    CHECK(a2[0][1] == Scalar::from_int(rational, -1));
    CHECK(a2[1][0] == Scalar::from_int(rational, -1));
    CHECK(a2[0][0] == Scalar::from_int(rational, 2));

    // B3: double bond between vertices 2 and 3, asymmetric
    const auto b3 = reflection_table(parse_type("B3"), rational);
    CHECK(b3[1][2] == Scalar::from_int(rational, -2));
    CHECK(b3[2][1] == Scalar::from_int(rational, -1));
    const auto c3 = reflection_table(parse_type("C3"), rational);
    CHECK(c3[1][2] == Scalar::from_int(rational, -1));
    CHECK(c3[2][1] == Scalar::from_int(rational, -2));
    const auto f4 = reflection_table(parse_type("F4"), rational);
    CHECK(f4[1][2] == Scalar::from_int(rational, -2));
    CHECK(f4[2][1] == Scalar::from_int(rational, -1));

    // H3: the bond-5 entry is -2cos(pi/5) = -phi, symmetric
    const auto phi_field = natural_field(parse_type("H3"));
    const auto h3 = reflection_table(parse_type("H3"), phi_field);
    const Scalar phi = Scalar::generator(phi_field);
    CHECK(h3[1][2] == -phi);
    CHECK(h3[2][1] == -phi);
}

TEST_CASE("natural fields") {
    CHECK(natural_field(parse_type("A5"))->is_rational());
    CHECK(natural_field(parse_type("B4"))->is_rational());
    CHECK(natural_field(parse_type("F4"))->is_rational());
    CHECK(natural_field(parse_type("H3"))->m == 5);
    CHECK(natural_field(parse_type("H4"))->m == 5);
    CHECK(natural_field(parse_type("I2(7)"))->m == 7);
    CHECK(natural_field(parse_type("I2(6)"))->m == 6);
    CHECK(required_field_order(parse_type("E8")) == 3);
}

TEST_CASE("root systems close up to the right size") {
    for (const char* label : {"A3", "A5", "D4", "D6", "E6", "B3", "C3", "F4",
                              "H3", "I2(5)", "I2(8)"}) {
        CAPTURE(label);
        const auto type = parse_type(label);
        const auto field = natural_field(type);
        const auto quiver = build_quiver(type);
        const auto roots = build_root_system(quiver, field);
        CHECK(static_cast<int>(roots.positive_roots().size()) ==
              coxeter_data(type).positive_root_count);
        CHECK(static_cast<int>(roots.almost_positive().size()) ==
              coxeter_data(type).positive_root_count + type.rank);
        // simple roots are positive roots
        for (int i = 1; i <= type.rank; ++i)
            CHECK(roots.is_positive_root(roots.simple_root(i)));
    }
}

TEST_CASE("highest roots are found") {
    auto int_root = [](const assocfold::exactfield::FieldPtr& field,
                       std::vector<int> entries) {
        std::vector<Scalar> out;
        for (int e : entries) out.push_back(Scalar::from_int(field, e));
        return out;
    };
    // D4: alpha1 + 2 alpha2 + alpha3 + alpha4 (vertex 2 is the branch point)
    {
        const auto type = parse_type("D4");
        const auto field = natural_field(type);
        const auto roots = build_root_system(build_quiver(type), field);
        CHECK(roots.is_positive_root(int_root(field, {1, 2, 1, 1})));
        CHECK_FALSE(roots.is_positive_root(int_root(field, {2, 2, 1, 1})));
    }
    // E8: coefficients (2,3,4,6,5,4,3,2) on vertices 1..8
    {
        const auto type = parse_type("E8");
        const auto field = natural_field(type);
        const auto roots = build_root_system(build_quiver(type), field);
        CHECK(roots.is_positive_root(int_root(field, {2, 3, 4, 6, 5, 4, 3, 2})));
    }
    // A3: exactly the intervals
    {
        const auto type = parse_type("A3");
        const auto field = natural_field(type);
        const auto roots = build_root_system(build_quiver(type), field);
        int intervals = 0;
        for (int i = 1; i <= 3; ++i)
            for (int j = i; j <= 3; ++j) {
                std::vector<int> v{0, 0, 0};
                for (int k = i; k <= j; ++k) v[k - 1] = 1;
                intervals += roots.is_positive_root(int_root(field, v)) ? 1 : 0;
            }
        CHECK(intervals == 6);
    }
}

TEST_CASE("arrow weights carry the bond labels") {
    const auto type = parse_type("B3");
    const auto field = natural_field(type);
    const auto quiver = build_quiver(type);
    const auto weights = arrow_weights(quiver, field);
    REQUIRE(weights.size() == quiver.arrows.size());
    for (std::size_t a = 0; a < weights.size(); ++a) {
        const bool doubled = quiver.bonds[a] == 4;
        const Scalar two = Scalar::from_int(field, 2);
        const Scalar one = Scalar::from_int(field, 1);
        if (doubled)
            CHECK(((weights[a].first == two && weights[a].second == one) ||
                   (weights[a].first == one && weights[a].second == two)));
        else
            CHECK((weights[a].first == one && weights[a].second == one));
    }
}

TEST_CASE("supported type list is complete and ordered") {
    const auto types = supported_types();
    CHECK(types.size() > 25);
    std::set<std::string> labels;
    for (const auto& t : types) labels.insert(t.str());
    for (const char* needed : {"A1", "A8", "D4", "D8", "E6", "E8", "B3", "B6",
                               "C2", "C6", "F4", "H3", "H4", "I2(5)", "I2(12)"})
        CHECK(labels.count(needed) == 1);
}
