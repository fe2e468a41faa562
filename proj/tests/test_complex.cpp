#include <doctest.h>

#include <random>

#include "enrhom/complex.hpp"
#include "enrhom/generators.hpp"
#include "support/brute.hpp"

using namespace enrhom;

namespace {

SimplicialComplex triangle_boundary() {
    return SimplicialComplex::from_facets(3, {{1, 2}, {2, 3}, {1, 3}});
}

}  // namespace

TEST_SUITE("complex") {

TEST_CASE("from_facets normalizes and validates") {
    const auto tri = triangle_boundary();
    CHECK(tri.facets().size() == 3);
    CHECK(tri.dimension() == 1);

    const auto dominated = SimplicialComplex::from_facets(3, {{1, 2}, {1, 2, 3}});
    CHECK(dominated.facets() == std::vector<Mask>{bits::mask_of({1, 2, 3})});
    CHECK(dominated.is_full_simplex());

    CHECK_THROWS_AS(SimplicialComplex::from_facets(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{4}}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{0}}), std::invalid_argument);
}

TEST_CASE("torus generator counts match direct enumeration") {
    const auto t = gen::torus_seven();
    CHECK(t.f_vector() == FVector({1, 7, 21, 14}));
    CHECK(brute::f_vector(t.facets(), t.ground()) == std::vector<long long>{1, 7, 21, 14});
    // unreduced Euler characteristic of the torus
    CHECK(7 - 21 + 14 == 0);
    CHECK(t.dimension() == 2);
    CHECK(t.cardinality_d() == 3);
}

TEST_CASE("void complex and empty simplex conventions") {
    const auto v = SimplicialComplex::void_complex(3);
    const auto e = SimplicialComplex::empty_simplex(3);
    CHECK(v.is_void());
    CHECK(!e.is_void());
    CHECK(e.is_empty_simplex());
    CHECK(e.cardinality_d() == 0);
    CHECK(e.dimension() == -1);
    CHECK_THROWS_AS(v.cardinality_d(), VoidComplexError);
    CHECK_THROWS_AS(v.frame_c(), VoidComplexError);
    CHECK(v.f_vector() == FVector{});
    CHECK(e.f_vector() == FVector({1}));
}

TEST_CASE("frame_c") {
    for (int n = 4; n <= 8; ++n) CHECK(gen::cycle(n).frame_c() == 1);
    CHECK(SimplicialComplex::full_simplex(4).frame_c() == 4);
    CHECK(gen::cyclic_polytope_boundary(8, 4).frame_c() == 2);
    // 2-neighbourly: all pairs present, some triple missing
    const auto c84 = gen::cyclic_polytope_boundary(8, 4);
    CHECK(c84.f_vector().at(2) == 28);
    CHECK(c84.f_vector().at(3) == 40);
    CHECK(40 < 56);
    CHECK(SimplicialComplex::empty_simplex(3).frame_c() == 0);
    // missing vertex forces c = 0
    CHECK(SimplicialComplex::from_facets(3, {{1, 2}}).frame_c() == 0);
}

TEST_CASE("restriction and deletion") {
    const auto c6 = gen::cycle(6);
    const auto path5 = c6.deletion(bits::mask_of({6}));
    CHECK(path5.f_vector() == FVector({1, 5, 4}));
    CHECK(path5.ground() == bits::mask_of({1, 2, 3, 4, 5}));

    const auto torus = gen::torus_seven();
    const auto r6 = torus.restriction(bits::mask_of({1, 2, 3, 4, 5, 6}));
    CHECK(r6.f_vector().at(1) == 6);
    CHECK(r6.f_vector().at(2) == 15);  // 2-neighbourly: all pairs survive

    CHECK(torus.restriction(0) == SimplicialComplex::empty_simplex(0));
}

TEST_CASE("link") {
    const auto c6 = gen::cycle(6);
    const auto lk = c6.link(bits::mask_of({1}));
    CHECK(lk.facets() == std::vector<Mask>{bits::mask_of({2}), bits::mask_of({6})});

    CHECK(c6.link(0) == c6);

    const auto torus = gen::torus_seven();
    for (int v = 1; v <= 7; ++v) {
        const auto vl = torus.link(bits::vertex_bit(v));
        CHECK(vl.facets().size() == 6);
        CHECK(vl.connected_components() == 1);
        for (Mask f : vl.facets()) CHECK(bits::popcount(f) == 2);
    }

    // link of a non-face is void
    CHECK(c6.link(bits::mask_of({1, 3})).is_void());
}

TEST_CASE("alexander dual") {
    CHECK(triangle_boundary().alexander_dual() == SimplicialComplex::empty_simplex(3));
    const auto torus = gen::torus_seven();
    CHECK(torus.alexander_dual().alexander_dual() == torus);
    CHECK(SimplicialComplex::full_simplex(4).alexander_dual().is_void());
    CHECK(SimplicialComplex::void_complex(4).alexander_dual().is_full_simplex());

    const auto fano = gen::fano_plane();
    const auto dual = fano.alexander_dual();
    CHECK(fano.frame_c() + dual.cardinality_d() + 1 == 7);
    // dual facets are complements of minimal non-faces, brute-forced
    std::vector<Mask> expected;
    for (Mask nf : brute::minimal_nonfaces(fano.facets(), fano.ground()))
        expected.push_back(fano.ground() & ~nf);
    CHECK(dual.facets() == maximal_antichain(std::move(expected)));
    CHECK(dual.facets().size() == 28);
}

TEST_CASE("skeleton, minimal nonfaces, cones, components") {
    const auto s = SimplicialComplex::full_simplex(5).skeleton(2);
    CHECK(s.f_vector() == FVector({1, 5, 10, 10}));

    CHECK(triangle_boundary().minimal_nonfaces() == std::vector<Mask>{bits::mask_of({1, 2, 3})});

    CHECK(SimplicialComplex::full_simplex(4).cone_apex().has_value());
    CHECK(!gen::cycle(5).cone_apex().has_value());

    CHECK(gen::cycle(5).connected_components() == 1);
    CHECK(SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}}).connected_components() == 2);
    CHECK(SimplicialComplex::empty_simplex(2).connected_components() == 0);
}

TEST_CASE("large-ground paths avoid the dense cache") {
    const auto c22 = gen::cycle(22);
    CHECK(c22.frame_c() == 1);
    const auto nf = c22.minimal_nonfaces();
    CHECK(nf.size() == 22 * 21 / 2 - 22);
    for (Mask m : nf) {
        CHECK(bits::popcount(m) == 2);
        CHECK(!c22.is_face(m));
    }
}

TEST_CASE("properties on random complexes") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const auto k = gen::random_complex(n, 8, rng);
        const Mask ground = k.ground();
        const Mask r = rng() & ground;

        CHECK(k.restriction(r) == k.deletion(ground & ~r));
        if (!k.is_full_simplex()) {
            CHECK(k.alexander_dual().alexander_dual() == k);
            CHECK(k.frame_c() + k.alexander_dual().cardinality_d() + 1 == k.ground_size());
        }
        const auto dual = k.alexander_dual();
        const Mask f = rng() & ground;
        CHECK(brute::is_face(k.facets(), f) == !brute::is_face(dual.facets(), ground & ~f));

        Mask q1 = rng() & ground;
        Mask q2 = rng() & ground & ~q1;
        CHECK(k.link(q1 | q2) == k.link(q1).link(q2));

        CHECK(k.minimal_nonfaces() == brute::minimal_nonfaces(k.facets(), ground));
        std::vector<long long> bf = brute::f_vector(k.facets(), ground);
        CHECK(k.f_vector() == FVector(bf));
    }
}

}  // TEST_SUITE
