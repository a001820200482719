#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "assocfold/affine.hpp"
#include "assocfold/arquiver.hpp"
#include "assocfold/polytope.hpp"
#include "assocfold/rootsystem.hpp"
#include "doctest.h"

using assocfold::Error;
using assocfold::ErrorKind;
using assocfold::Rational;
using assocfold::arquiver::ObjId;
using assocfold::exactfield::FieldPtr;
using assocfold::exactfield::Scalar;
using namespace assocfold::polytope;
namespace affine = assocfold::affine;
namespace arquiver = assocfold::arquiver;
namespace exactfield = assocfold::exactfield;
namespace rootsystem = assocfold::rootsystem;

namespace {

Polytope ambient(const char* label, long num = 1, long den = 1) {
    const auto mq = arquiver::knit(rootsystem::build_quiver(rootsystem::parse_type(label)));
    const auto field = exactfield::rational_field();
    const auto forms = affine::propagate_forms(
        mq, affine::uniform_params(mq, Scalar::from_rational(field, Rational(num, den))));
    return build_polytope(facet_forms(forms, field));
}

std::vector<Rational> rational_coords(const Vertex& v) {
    std::vector<Rational> out;
    out.reserve(v.coords.size());
    for (const auto& c : v.coords) out.push_back(c.rational_value());
    return out;
}

/** Hand-built facet over an arbitrary field, with rational data. */
FacetForm facet(const FieldPtr& field, int k, int i, const std::vector<long>& linear,
                long constant) {
    FacetForm f;
    f.label = {k, i};
    for (long c : linear) f.linear.push_back(Scalar::from_int(field, c));
    f.constant = Scalar::from_int(field, constant);
    return f;
}

/**
 * Plain Gauss elimination with partial pivoting over the rationals, written
 * from scratch so the brute-force enumeration below shares no code with the
 * pivoting implementation under test.  Returns false on a singular matrix.
 */
bool gauss(std::vector<std::vector<Rational>> m, std::vector<Rational> b,
           std::vector<Rational>& x) {
    const std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return false;
        std::swap(m[p], m[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
            b[r] -= f * b[c];
        }
    }
    x.assign(n, 0);
    for (std::size_t r = n; r-- > 0;) {
        Rational acc = b[r];
        for (std::size_t j = r + 1; j < n; ++j) acc -= m[r][j] * x[j];
        x[r] = acc / m[r][r];
    }
    return true;
}

/**
 * Independent vertex enumeration: try every dim-subset of facets, solve for
 * the common point, and keep it when it satisfies every inequality.  Only
 * usable over the rationals and for small inputs, which is the point.
 */
std::set<std::vector<Rational>> brute_force_vertices(const std::vector<FacetForm>& facets) {
    const std::size_t dim = facets[0].linear.size();
    std::vector<std::vector<Rational>> lin;
    std::vector<Rational> cst;
    for (const auto& f : facets) {
        std::vector<Rational> row;
        for (const auto& c : f.linear) row.push_back(c.rational_value());
        lin.push_back(std::move(row));
        cst.push_back(f.constant.rational_value());
    }

    std::set<std::vector<Rational>> found;
    std::vector<std::size_t> pick(dim);
    // Odometer over all strictly increasing index tuples of length dim.
    for (std::size_t i = 0; i < dim; ++i) pick[i] = i;
    while (true) {
        std::vector<std::vector<Rational>> m;
        std::vector<Rational> b;
        for (std::size_t i : pick) {
            m.push_back(lin[i]);
            b.push_back(-cst[i]);
        }
        std::vector<Rational> x;
        if (gauss(std::move(m), std::move(b), x)) {
            bool inside = true;
            for (std::size_t g = 0; g < facets.size() && inside; ++g) {
                Rational value = cst[g];
                for (std::size_t j = 0; j < dim; ++j) value += lin[g][j] * x[j];
                if (value < 0) inside = false;
            }
            if (inside) found.insert(std::move(x));
        }

        std::size_t i = dim;
        while (i-- > 0) {
            if (pick[i] + (dim - i) < facets.size()) break;
            if (i == 0) return found;
        }
        ++pick[i];
        for (std::size_t j = i + 1; j < dim; ++j) pick[j] = pick[j - 1] + 1;
    }
}

/** Every edge swaps exactly one facet between the endpoint clusters. */
void check_flips(const Polytope& poly) {
    for (const auto& [a, b] : poly.edges) {
        const auto& ta = poly.vertices[static_cast<std::size_t>(a)].tight;
        const auto& tb = poly.vertices[static_cast<std::size_t>(b)].tight;
        std::vector<int> shared;
        std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(),
                              std::back_inserter(shared));
        CHECK(shared.size() == ta.size() - 1);
    }
}

void check_simple_and_tight(const Polytope& poly) {
    std::vector<int> degree(poly.vertices.size(), 0);
    for (const auto& [a, b] : poly.edges) {
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
    }
    for (std::size_t iv = 0; iv < poly.vertices.size(); ++iv) {
        const auto& v = poly.vertices[iv];
        CHECK(v.tight.size() == static_cast<std::size_t>(poly.dim));
        CHECK(degree[iv] == poly.dim);
        // Facet values: zero exactly on the tight set, positive elsewhere.
        for (std::size_t g = 0; g < poly.facets.size(); ++g) {
            Scalar value = poly.facets[g].constant;
            for (std::size_t x = 0; x < v.coords.size(); ++x)
                value += poly.facets[g].linear[x] * v.coords[x];
            const bool tight =
                std::binary_search(v.tight.begin(), v.tight.end(), static_cast<int>(g));
            CHECK(value.sign() == (tight ? 0 : 1));
        }
    }
}

}  // namespace

TEST_CASE("segment: the smallest case, written out") {
    const auto poly = ambient("A1");
    REQUIRE(poly.dim == 1);
    REQUIRE(poly.facets.size() == 2);
    CHECK(poly.facets[0].label == ObjId{1, 1});
    CHECK(poly.facets[1].label == ObjId{2, 1});
    REQUIRE(poly.vertices.size() == 2);
    CHECK(rational_coords(poly.vertices[0]) == std::vector<Rational>{0});
    CHECK(rational_coords(poly.vertices[1]) == std::vector<Rational>{1});
    CHECK(poly.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(f_vector(poly) == std::vector<long long>{2});
}

TEST_CASE("pentagon: all vertices, clusters, and edges frozen") {
    const auto poly = ambient("A2");
    REQUIRE(poly.dim == 2);

    // Facets stay in knitting order.
    const std::vector<ObjId> labels{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}};
    REQUIRE(poly.facets.size() == labels.size());
    for (std::size_t g = 0; g < labels.size(); ++g) CHECK(poly.facets[g].label == labels[g]);

    const std::vector<std::vector<Rational>> coords{
        {0, 0}, {0, 2}, {1, 0}, {2, 1}, {2, 2}};
    const std::vector<std::vector<int>> tights{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}};
    REQUIRE(poly.vertices.size() == coords.size());
    for (std::size_t iv = 0; iv < coords.size(); ++iv) {
        CHECK(rational_coords(poly.vertices[iv]) == coords[iv]);
        CHECK(poly.vertices[iv].tight == tights[iv]);
    }
    CHECK(poly.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 4}, {2, 3}, {3, 4}});
    CHECK(f_vector(poly) == std::vector<long long>{5, 5});
    check_flips(poly);
    check_fan_complete(poly, 9001, 1000);
}

TEST_CASE("three-dimensional case agrees with brute-force enumeration") {
    const auto poly = ambient("A3");
    CHECK(f_vector(poly) == std::vector<long long>{14, 21, 9});

    std::set<std::vector<Rational>> pivoted;
    for (const auto& v : poly.vertices) pivoted.insert(rational_coords(v));
    REQUIRE(pivoted.size() == 14);
    CHECK(pivoted == brute_force_vertices(poly.facets));

    check_flips(poly);
    check_fan_complete(poly, 9001, 1000);
}

TEST_CASE("brute-force cross-check with a non-unit parameter") {
    const auto poly = ambient("A3", 5, 3);
    std::set<std::vector<Rational>> pivoted;
    for (const auto& v : poly.vertices) pivoted.insert(rational_coords(v));
    REQUIRE(pivoted.size() == 14);
    CHECK(pivoted == brute_force_vertices(poly.facets));
}

TEST_CASE("face counts for the midsize ambient polytopes") {
    CHECK(f_vector(ambient("A4")) == std::vector<long long>{42, 84, 14});
    CHECK(f_vector(ambient("D4")) == std::vector<long long>{50, 100, 16});
}

TEST_CASE("local structure at every vertex") {
    for (const char* label : {"A3", "D4"}) {
        CAPTURE(label);
        const auto poly = ambient(label);
        check_simple_and_tight(poly);
        check_flips(poly);
    }
}

TEST_CASE("normal fan: rays follow the facet order, cones the vertex order") {
    const auto poly = ambient("A3");
    const auto fan = normal_fan(poly);
    REQUIRE(fan.rays.size() == poly.facets.size());
    REQUIRE(fan.cones.size() == poly.vertices.size());
    for (std::size_t g = 0; g < fan.rays.size(); ++g) {
        // First nonzero entry is +-1 and the ray is parallel to the facet normal.
        std::size_t lead = 0;
        while (fan.rays[g][lead].is_zero()) ++lead;
        CHECK(fan.rays[g][lead].rational_value() * fan.rays[g][lead].rational_value() == 1);
        const Rational scale =
            poly.facets[g].linear[lead].rational_value() / fan.rays[g][lead].rational_value();
        for (std::size_t x = 0; x < fan.rays[g].size(); ++x)
            CHECK(poly.facets[g].linear[x].rational_value() ==
                  scale * fan.rays[g][x].rational_value());
    }
    for (std::size_t iv = 0; iv < fan.cones.size(); ++iv)
        CHECK(fan.cones[iv] == poly.vertices[iv].tight);
}

TEST_CASE("ray normalization") {
    const auto field = exactfield::rational_field();
    const auto ray = normalize_ray({Scalar::from_int(field, 0), Scalar::from_int(field, -3),
                                    Scalar::from_int(field, 6)});
    CHECK(ray[0].is_zero());
    CHECK(ray[1].rational_value() == -1);
    CHECK(ray[2].rational_value() == 2);
    CHECK_THROWS_AS(normalize_ray({Scalar::from_int(field, 0)}), Error);
}

TEST_CASE("polytope over the golden-ratio field") {
    const auto field = exactfield::make_field(5);
    const Scalar phi = Scalar::generator(field);

    // Triangle 0 <= s2 <= phi - phi s1, s1 >= 0; one normal is irrational.
    FacetForm slant;
    slant.label = {2, 1};
    slant.linear = {-phi, Scalar::from_int(field, -1)};
    slant.constant = phi;
    const std::vector<FacetForm> facets{facet(field, 1, 1, {1, 0}, 0),
                                        facet(field, 1, 2, {0, 1}, 0), slant};

    const auto poly = build_polytope(facets);
    REQUIRE(poly.vertices.size() == 3);
    CHECK(f_vector(poly) == std::vector<long long>{3, 3});
    CHECK(poly.vertices[0].coords[0].is_zero());
    CHECK(poly.vertices[0].coords[1].is_zero());
    CHECK(poly.vertices[1].coords[0].is_zero());
    CHECK(poly.vertices[1].coords[1] == phi);
    CHECK(poly.vertices[2].coords[0] == Scalar::from_int(field, 1));
    CHECK(poly.vertices[2].coords[1].is_zero());
    check_fan_complete(poly, 9001, 500);
}

TEST_CASE("rejected inputs") {
    const auto field = exactfield::rational_field();

    CHECK_THROWS_AS(build_polytope({}), Error);

    // Mixed dimensions.
    CHECK_THROWS_AS(build_polytope({facet(field, 1, 1, {1, 0}, 0), facet(field, 1, 2, {1}, 0)}),
                    Error);

    SUBCASE("negative value at the origin") {
        try {
            build_polytope({facet(field, 1, 1, {1}, 0), facet(field, 2, 1, {1}, -1)});
            FAIL("expected a verification error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Verification);
            CHECK(std::string(e.what()).find("negative value at the origin") !=
                  std::string::npos);
        }
    }

    SUBCASE("origin is not a vertex") {
        try {
            build_polytope({facet(field, 1, 1, {1, 0}, 0), facet(field, 2, 1, {-1, 0}, 1)});
            FAIL("expected a verification error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Verification);
            CHECK(std::string(e.what()).find("through the origin") != std::string::npos);
        }
    }

    SUBCASE("unbounded region") {
        try {
            build_polytope({facet(field, 1, 1, {1}, 0)});
            FAIL("expected a verification error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Verification);
            CHECK(std::string(e.what()).find("unbounded") != std::string::npos);
        }
    }

    SUBCASE("parallel facets through one vertex") {
        try {
            build_polytope({facet(field, 1, 1, {1, 0}, 0), facet(field, 1, 2, {2, 0}, 0),
                            facet(field, 2, 1, {-1, 0}, 1), facet(field, 2, 2, {0, -1}, 1)});
            FAIL("expected a verification error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Verification);
            CHECK(std::string(e.what()).find("not simple") != std::string::npos);
        }
    }

    SUBCASE("three facets meeting at a corner of a square") {
        try {
            build_polytope({facet(field, 1, 1, {1, 0}, 0), facet(field, 1, 2, {0, 1}, 0),
                            facet(field, 2, 1, {-1, 0}, 1), facet(field, 2, 2, {0, -1}, 1),
                            facet(field, 3, 1, {-1, -1}, 2)});
            FAIL("expected a verification error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Verification);
            CHECK(std::string(e.what()).find("not simple") != std::string::npos);
        }
    }

    SUBCASE("a facet the region never touches fails the face count") {
        const auto poly = build_polytope(
            {facet(field, 1, 1, {1, 0}, 0), facet(field, 1, 2, {0, 1}, 0),
             facet(field, 2, 1, {-1, 0}, 1), facet(field, 2, 2, {0, -1}, 1),
             facet(field, 3, 1, {-1, 0}, 10)});
        CHECK(poly.vertices.size() == 4);  // the square itself is fine
        try {
            f_vector(poly);
            FAIL("expected a verification error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Verification);
            CHECK(std::string(e.what()).find("touches only 0 vertices") != std::string::npos);
        }
    }
}
