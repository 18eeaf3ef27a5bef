#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mal/cubical.hpp"
#include "mal/examples.hpp"

using namespace mal;

TEST_CASE("cub of three points is three cube vertices") {
    auto C = cub(examples::disjoint_points(3));
    CHECK(C.faces().size() == 3);
    CHECK(C.dimension() == 0);
    for (const auto& f : C.faces()) {
        CHECK(f.I == f.J);
        CHECK(f.I.count() == 1);
    }
}

TEST_CASE("cub of the triangle boundary") {
    auto C = cub(examples::boundary_simplex(2));
    // J singleton: 3 vertices; J edge: 2 subface vertices each is counted via
    // I = J, plus the 6 dim-1 faces F_{i in ij}.
    CHECK(C.faces().size() == 12);
    CHECK(C.dimension() == 1);
    CHECK(C.euler_number() == 0);  // |cub K| is homeomorphic to |K| = S^1
}

TEST_CASE("cub of a single vertex") {
    auto C = cub(examples::disjoint_points(1));
    CHECK(C.faces().size() == 1);
    CHECK(C.faces()[0] == CubicalFacePair{VertexSet::of({1}), VertexSet::of({1})});
}

TEST_CASE("cc of three points: three edges meeting at (1,1,1)") {
    auto C = cc(examples::disjoint_points(3));
    // faces: F_{empty in empty} + per point F_{empty in i} and F_{i in i}.
    CHECK(C.faces().size() == 7);
    CHECK(C.dimension() == 1);
    CHECK(C.contains({VertexSet(), VertexSet()}));
    CHECK(C.euler_number() == 1);  // cone
}

TEST_CASE("cc face count equals sum of 2^|J|") {
    for (const auto& K : {examples::boundary_simplex(2), examples::torus9(),
                          examples::random_complex(5, 11)}) {
        auto C = cc(K);
        std::size_t expected = 0;
        for (const auto& J : K.simplices()) expected += 1ULL << J.count();
        CHECK(C.faces().size() == expected);
        CHECK(C.euler_number() == 1);
        CHECK(C.dimension() == K.n());
        CHECK(cub(K).dimension() == K.n() - 1);
    }
}

TEST_CASE("cub is the I-nonempty part of cc") {
    auto K = examples::boundary_simplex(2);
    auto inner = cub(K);
    auto cone = cc(K);
    for (const auto& f : inner.faces()) CHECK(cone.contains(f));
    std::size_t empties = 0;
    for (const auto& f : cone.faces()) {
        if (f.I.empty())
            ++empties;
        else
            CHECK(inner.contains(f));
    }
    CHECK(inner.faces().size() + empties == cone.faces().size());
}

TEST_CASE("cub euler number equals chi(K)") {
    for (const auto& K : {examples::boundary_simplex(3), examples::torus9(),
                          examples::disjoint_points(3), examples::random_complex(6, 3)}) {
        CHECK(cub(K).euler_number() == K.euler_number());
    }
}

TEST_CASE("cube vertex coordinates") {
    CHECK(cube_vertex(VertexSet(), 3) == std::vector<int>{1, 1, 1});
    CHECK(cube_vertex(VertexSet::of({1, 2, 3}), 3) == std::vector<int>{0, 0, 0});
    CHECK(cube_vertex(VertexSet::of({2}), 3) == std::vector<int>{1, 0, 1});
}

TEST_CASE("contains matches the materialized face list") {
    auto K = examples::random_complex(5, 99);
    auto C = cub(K);
    std::size_t hits = 0;
    for (std::uint64_t i = 0; i < 32; ++i)
        for (std::uint64_t j = 0; j < 32; ++j)
            if (C.contains({VertexSet(i), VertexSet(j)})) ++hits;
    CHECK(hits == C.faces().size());
}

TEST_CASE("OFF dump shape") {
    auto C = cub(examples::boundary_simplex(2));
    std::ostringstream os;
    C.write_off(os);
    std::istringstream in(os.str());
    std::string header;
    in >> header;
    CHECK(header == "OFF");
    int nv, nf, ne;
    in >> nv >> nf >> ne;
    CHECK(nv == 6);
    CHECK(nf == 12);
}
