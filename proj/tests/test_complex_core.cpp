#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mal/errors.hpp"
#include "mal/examples.hpp"
#include "mal/simplicial_complex.hpp"

using namespace mal;

namespace {

std::vector<Int> ints(std::initializer_list<long long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("vertex set basics") {
    VertexSet s = VertexSet::of({1, 3, 5});
    CHECK(s.count() == 3);
    CHECK(s.contains(3));
    CHECK(!s.contains(2));
    CHECK(s.rank_below(1) == 0);
    CHECK(s.rank_below(3) == 1);
    CHECK(s.rank_below(6) == 3);
    CHECK(s.with(2).count() == 4);
    CHECK(s.without(3) == VertexSet::of({1, 5}));
    CHECK(VertexSet::of({1, 3}).subset_of(s));
    CHECK(s.to_string() == "{1,3,5}");
    CHECK(VertexSet::full(4) == VertexSet::of({1, 2, 3, 4}));
    CHECK(s.vertices() == std::vector<int>{1, 3, 5});
}

TEST_CASE("build_complex basics") {
    auto full = SimplicialComplex::from_facets({VertexSet::of({1, 2, 3})}, 3);
    CHECK(full.n() == 3);
    CHECK(full.is_full_simplex());

    auto circle = examples::boundary_simplex(2);
    CHECK(circle.n() == 2);
    CHECK(!circle.is_full_simplex());
    CHECK(circle.f_vector().f == ints({3, 3}));

    auto dominated =
        SimplicialComplex::from_facets({VertexSet::of({1, 2}), VertexSet::of({1, 2, 3})}, 3);
    CHECK(dominated.facets().size() == 1);
    CHECK(dominated.facets()[0] == VertexSet::of({1, 2, 3}));
}

TEST_CASE("build_complex rejects bad input") {
    CHECK_THROWS_AS(SimplicialComplex::from_facets({}, 3), InputError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({VertexSet::of({4})}, 3), InputError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({VertexSet::of({1})}, 0), InputError);
}

TEST_CASE("f-vectors") {
    CHECK(examples::boundary_simplex(3).f_vector().f == ints({4, 6, 4}));
    CHECK(examples::torus9().f_vector().f == ints({9, 27, 18}));
    auto pt = SimplicialComplex::from_facets({VertexSet::of({1})}, 1);
    CHECK(pt.f_vector().f == ints({1}));
    CHECK(pt.f_vector().at(-1) == 1);
}

TEST_CASE("h-vectors") {
    CHECK(examples::torus9().h_vector().h == ints({1, 6, 12, -1}));
    CHECK(examples::boundary_simplex(3).h_vector().h == ints({1, 1, 1, 1}));
    auto pt = SimplicialComplex::from_facets({VertexSet::of({1})}, 1);
    CHECK(pt.h_vector().h == ints({1, 0}));
}

TEST_CASE("euler numbers") {
    CHECK(examples::torus9().euler_number() == 0);
    CHECK(examples::boundary_simplex(3).euler_number() == 2);
    CHECK(examples::boundary_simplex(2).euler_number() == 0);
    CHECK(SimplicialComplex::from_facets({VertexSet::of({1})}, 1).euler_number() == 1);
}

TEST_CASE("chi equals 1 + (-1)^(n-1) h_n") {
    for (const auto& K : {examples::torus9(), examples::boundary_simplex(4),
                          examples::disjoint_points(3), examples::cyclic_polytope_boundary(4, 7)}) {
        const Int hn = K.h_vector().at(K.n());
        const Int sign = (K.n() - 1) % 2 == 0 ? 1 : -1;
        CHECK(K.euler_number() == 1 + sign * hn);
    }
}

TEST_CASE("links") {
    auto circle = examples::boundary_simplex(2);
    auto lk = circle.link(VertexSet::of({1}));
    CHECK(lk.f_vector().f == ints({2}));  // two isolated points

    auto sphere = examples::boundary_simplex(3);
    auto lke = sphere.link(VertexSet::of({1, 2}));
    CHECK(lke.f_vector().f == ints({2}));

    auto self = sphere.link(VertexSet());
    CHECK(self.f_vector() == sphere.f_vector());

    CHECK_THROWS_AS(circle.link(VertexSet::of({1, 2, 3})), InputError);
}

TEST_CASE("barycentric subdivision") {
    auto bs_circle = examples::boundary_simplex(2).barycentric_subdivision();
    CHECK(bs_circle.f_vector().f == ints({6, 6}));

    auto pt = SimplicialComplex::from_facets({VertexSet::of({1})}, 1);
    CHECK(pt.barycentric_subdivision().f_vector().f == ints({1}));

    auto edge = SimplicialComplex::from_facets({VertexSet::of({1, 2})}, 2);
    CHECK(edge.barycentric_subdivision().f_vector().f == ints({3, 2}));
}

TEST_CASE("bs vertex count equals total simplex count") {
    for (const auto& K : {examples::torus9(), examples::boundary_simplex(3),
                          examples::random_complex(6, 7)}) {
        Int total = 0;
        for (const auto& fi : K.f_vector().f) total += fi;
        auto bs = K.barycentric_subdivision();
        CHECK(bs.f_vector().at(0) == total);
        CHECK(bs.n() == K.n());
    }
}

TEST_CASE("manifold status") {
    auto sphere = examples::boundary_simplex(3).manifold_status(false);
    CHECK(sphere.is_pure);
    CHECK(sphere.is_closed_pseudomanifold);
    CHECK(sphere.is_strongly_connected);
    REQUIRE(sphere.is_orientable.has_value());
    CHECK(*sphere.is_orientable);

    auto torus = examples::torus9().manifold_status(true);
    CHECK(torus.is_closed_pseudomanifold);
    CHECK(torus.is_strongly_connected);
    REQUIRE(torus.is_orientable.has_value());
    CHECK(*torus.is_orientable);
    CHECK(torus.user_attested_manifold);
    for (const auto& [v, chi] : torus.link_euler_numbers) CHECK(chi == 0);  // links are 6-cycles

    auto points = examples::disjoint_points(3).manifold_status(false);
    CHECK(points.is_pure);
    CHECK(!points.is_closed_pseudomanifold);
}

TEST_CASE("two disjoint points are a closed 0-pseudomanifold") {
    auto s0 = examples::disjoint_points(2).manifold_status(false);
    CHECK(s0.is_closed_pseudomanifold);
    REQUIRE(s0.is_orientable.has_value());
    CHECK(*s0.is_orientable);
}

TEST_CASE("h-vector expansion agrees with alternating-sum formula") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        auto K = examples::random_complex(3 + static_cast<int>(rng() % 5), rng());
        const auto f = K.f_vector();
        const auto h = K.h_vector();
        const int n = K.n();
        for (int k = 0; k <= n; ++k) {
            Int rhs = 0;
            for (int i = 0; i <= k; ++i) {
                Int term = binomial(n - i, k - i) * f.at(i - 1);
                rhs += ((k - i) % 2 == 0) ? term : -term;
            }
            CHECK(h.at(k) == rhs);
        }
    }
}
