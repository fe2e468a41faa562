#include <doctest.h>

#include <random>

#include "enrhom/classify.hpp"
#include "enrhom/design.hpp"
#include "enrhom/generators.hpp"
#include "support/brute.hpp"

using namespace enrhom;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::gf(2);

SimplicialComplex tree_star() {
    return SimplicialComplex::from_facets(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
}

std::vector<SimplicialComplex> small_corpus(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::vector<SimplicialComplex> out;
    out.push_back(gen::cycle(4));
    out.push_back(gen::cycle(6));
    out.push_back(gen::path(5));
    out.push_back(gen::torus_seven());
    out.push_back(gen::rp2_six());
    out.push_back(gen::fano_plane());
    out.push_back(gen::simplex_skeleton(5, 2));
    out.push_back(SimplicialComplex::full_simplex(4));
    out.push_back(SimplicialComplex::empty_simplex(3));
    while (static_cast<int>(out.size()) < count)
        out.push_back(gen::random_complex(2 + static_cast<int>(rng() % 5), 6, rng));
    return out;
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("cohen-macaulay") {
    CHECK(is_cm(tree_star(), kQ).checked("cm"));
    CHECK(is_cm(gen::path(6), kQ).checked("cm"));

    const auto disjoint = SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}});
    const auto res = is_cm(disjoint, kQ);
    CHECK(!res.checked("cm"));
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->subset == 0);
    CHECK(res.witness->p == 0);

    const auto torus = is_cm(gen::torus_seven(), kQ);
    CHECK(!torus.checked("cm"));
    CHECK(torus.witness->subset == 0);
    CHECK(torus.witness->p == 1);

    CHECK(is_cm(SimplicialComplex::empty_simplex(3), kQ).checked("cm"));
    CHECK_THROWS_AS(is_cm(SimplicialComplex::void_complex(2), kQ), VoidComplexError);
}

TEST_CASE("l-CM levels") {
    for (int n = 4; n <= 7; ++n) {
        CHECK(is_lcm(gen::cycle(n), 2, kQ).checked("lcm"));
        CHECK(lcm_level(gen::cycle(n), kQ) == 2);
    }
    CHECK(lcm_level(tree_star(), kQ) == 1);
    CHECK(lcm_level(gen::path(4), kQ) == 1);

    // the (n-l)-skeleton of the simplex is l-CM
    CHECK(is_lcm(gen::simplex_skeleton(6, 4), 2, kQ).checked("lcm"));
    CHECK(is_lcm(gen::simplex_skeleton(6, 3), 3, kQ).checked("lcm"));
    CHECK(!is_lcm(gen::simplex_skeleton(6, 3), 4, kQ).checked("lcm"));

    CHECK(lcm_level(gen::torus_seven(), kQ) == 0);
}

TEST_CASE("buchsbaum") {
    CHECK(is_buchsbaum(gen::torus_seven(), kQ).checked("bb"));
    CHECK(is_buchsbaum(gen::rp2_six(), kF2).checked("bb"));
    CHECK(is_buchsbaum(gen::rp2_six(), kQ).checked("bb"));
    // two triangles glued at one vertex: the shared link is disconnected
    const auto wedge = SimplicialComplex::from_facets(5, {{1, 2, 3}, {1, 4, 5}});
    const auto res = is_buchsbaum(wedge, kQ);
    CHECK(!res.checked("bb"));
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->subset == bits::mask_of({1}));
    // disconnected one-manifolds are Buchsbaum but not CM
    const auto two_edges = SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}});
    CHECK(is_buchsbaum(two_edges, kQ).checked("bb"));
    CHECK(!is_cm(two_edges, kQ).checked("cm"));
}

TEST_CASE("gorenstein*") {
    for (int n = 3; n <= 7; ++n) CHECK(is_gorenstein_star(gen::cycle(n), kQ).checked("gor"));
    for (int n = 3; n <= 6; ++n)
        CHECK(is_gorenstein_star(SimplicialComplex::full_simplex(n).skeleton(n - 2), kQ)
                  .checked("gor"));
    CHECK(!is_gorenstein_star(tree_star(), kQ).checked("gor"));
    CHECK(!is_gorenstein_star(gen::path(3), kQ).checked("gor"));

    // zero-dimensional convention: exactly two points
    CHECK(is_gorenstein_star(SimplicialComplex::from_facets(2, {{1}, {2}}), kQ).checked("gor"));
    CHECK(!is_gorenstein_star(SimplicialComplex::from_facets(3, {{1}, {2}, {3}}), kQ).checked("gor"));
    CHECK(!is_gorenstein_star(SimplicialComplex::from_facets(2, {{1}}), kQ).checked("gor"));

    const auto e = is_gorenstein_star(SimplicialComplex::empty_simplex(2), kQ);
    CHECK(!e.value);
    CHECK(e.convention == "empty_simplex_excluded");

    // cones are never Gorenstein*
    CHECK(!is_gorenstein_star(SimplicialComplex::full_simplex(4), kQ).checked("gor"));
}

TEST_CASE("orientable homology manifold") {
    CHECK(is_orientable_homology_manifold(gen::torus_seven(), kQ).checked("mani"));
    CHECK(is_orientable_homology_manifold(gen::torus_seven(), kF2).checked("mani"));
    CHECK(!is_orientable_homology_manifold(gen::rp2_six(), kQ).checked("mani"));
    CHECK(is_orientable_homology_manifold(gen::rp2_six(), kF2).checked("mani"));
    // polygons are 1-spheres
    CHECK(is_orientable_homology_manifold(gen::cycle(5), kQ).checked("mani"));
    // a path is a manifold-with-boundary, not a closed one
    CHECK(!is_orientable_homology_manifold(gen::path(4), kQ).checked("mani"));
    const auto pts = is_orientable_homology_manifold(SimplicialComplex::from_facets(2, {{1}, {2}}), kQ);
    CHECK(!pts.value);
    CHECK(pts.convention == "dimension_below_one");
}

TEST_CASE("bi-CM") {
    CHECK(is_bicm(gen::path(5), kQ).checked("bicm"));
    CHECK(is_bicm(tree_star(), kQ).checked("bicm"));
    for (int n = 4; n <= 7; ++n) CHECK(!is_bicm(gen::cycle(n), kQ).checked("bicm"));

    // boundary of the simplex: dual is the empty simplex, convention branch
    const auto tri = gen::cycle(3);
    const auto res = is_bicm(tri, kQ);
    CHECK(!res.value);
    CHECK(res.convention == "dual_empty_simplex");

    const auto full = is_bicm(SimplicialComplex::full_simplex(3), kQ);
    CHECK(full.value);
    CHECK(full.convention == "full_simplex_dual_void");

    // proper complete skeleta (complete graphs included) are excluded by
    // convention; both classical routes would accept them
    for (const auto& k : {gen::simplex_skeleton(5, 2), gen::simplex_skeleton(4, 1),
                          gen::simplex_skeleton(6, 1), SimplicialComplex::empty_simplex(3)}) {
        const auto res = is_bicm(k, kQ);
        CHECK(!res.value);
        CHECK(res.convention == "complete_skeleton");
    }

    // a stacked ball: CM with tree-like dual
    CHECK(is_bicm(SimplicialComplex::from_facets(4, {{1, 2, 3}, {2, 3, 4}}), kQ).checked("bicm"));
}

TEST_CASE("trees are exactly the bi-CM graphs") {
    // all connected graphs on 5 labelled vertices
    int trees = 0, bicms = 0;
    for (std::uint32_t edges = 0; edges < (1u << 10); ++edges) {
        std::vector<std::vector<int>> fs;
        int e = 0;
        for (int i = 1, bit = 0; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j, ++bit)
                if (edges & (1u << bit)) {
                    fs.push_back({i, j});
                    ++e;
                }
        if (fs.empty()) continue;
        const auto g = SimplicialComplex::from_facets(5, fs);
        if (g.connected_components() != 1 || bits::popcount(g.vertex_support()) != 5) continue;
        if (g.dimension() != 1) continue;
        const bool acyclic = brute::graph_is_acyclic(g.facets());
        const bool bicm = is_bicm(g, kQ).checked("bicm");
        CHECK(acyclic == bicm);
        trees += acyclic;
        bicms += bicm;
    }
    CHECK(trees == 125);  // Cayley: 5^3
    CHECK(bicms == trees);
}

TEST_CASE("l-CM designs") {
    CHECK(is_lcm_design(gen::cyclic_polytope_boundary(8, 4), 2, kQ).checked("design"));
    CHECK(is_lcm_design(gen::path(5), 1, kQ).checked("design"));
    CHECK(is_lcm_design(tree_star(), 1, kQ).checked("design"));
    for (int n = 4; n <= 7; ++n) CHECK(is_lcm_design(gen::cycle(n), 2, kQ).checked("design"));

    // non-designs
    CHECK(!is_lcm_design(gen::torus_seven(), 2, kQ).checked("design"));
    CHECK(!is_lcm_design(gen::cycle(5), 3, kQ).checked("design"));

    // excluded skeleton: the complete 1-skeleton on 5 vertices at l = 2 has p = 3 > 2
    const auto sk = gen::simplex_skeleton(5, 1);
    const auto res = is_lcm_design(sk, 2, kQ);
    CHECK(!res.checked("design"));
    CHECK(res.convention == "excluded_skeleton");
    // but the (n-l)-skeleton itself qualifies
    CHECK(is_lcm_design(gen::simplex_skeleton(5, 3), 2, kQ).checked("design"));
}

TEST_CASE("(a,b)-designs") {
    CHECK(is_ab_design(gen::rp2_six(), 1, 1, kQ).checked("ab"));
    CHECK(is_ab_design(gen::rp2_six(), 1, 1, kF2).checked("ab"));
    CHECK(is_ab_design(gen::torus_seven(), 1, 1, kQ).checked("ab"));
    CHECK(is_ab_design(gen::fano_plane(), 0, 2, kQ).checked("ab"));
    CHECK(is_ab_design(gen::fano_plane().alexander_dual(), 2, 0, kQ).checked("ab"));
    CHECK(!is_ab_design(gen::torus_seven(), 2, 0, kQ).checked("ab"));
    // bi-CM complexes are (0,0)-designs
    CHECK(is_ab_design(gen::path(4), 0, 0, kQ).checked("ab"));
}

TEST_CASE("fano dual is a 3-CM design") {
    const auto dual = gen::fano_plane().alexander_dual();
    CHECK(dual.cardinality_d() == 4);
    CHECK(dual.frame_c() == 3);
    CHECK(is_lcm_design(dual, 3, kQ).checked("design"));
    const auto lambda = block_design_check(dual, 2);
    REQUIRE(lambda.has_value());
    CHECK(*lambda == 8);
    CHECK(Rational(static_cast<long>(*lambda)) == lcm_design_lambda(7, 4, 3, 3));
}

TEST_CASE("submaximal d characterization") {
    // dual of the Fano complex at l = 3
    const auto fano_dual = gen::fano_plane().alexander_dual();
    const auto rep = submaximal_d_checks(fano_dual, 3, kQ);
    CHECK(rep.lcm_with_submaximal_d);
    CHECK(rep.agree);
    REQUIRE(rep.addendum_agree.has_value());
    CHECK(*rep.addendum_agree);
    CHECK(*rep.girth_maximal);

    // partition complexes: dual has d = n-2 and is 2-CM
    const auto partition = SimplicialComplex::from_facets(6, {{1, 2}, {3, 4}, {5, 6}});
    const auto dual = partition.alexander_dual();
    CHECK(dual.cardinality_d() == 4);
    CHECK(is_lcm(dual, 2, kQ).checked("lcm"));
    const auto rep2 = submaximal_d_checks(dual, 2, kQ);
    CHECK(rep2.lcm_with_submaximal_d);
    CHECK(rep2.agree);

    // boundary of the simplex fails every route at l = 2
    const auto rep3 = submaximal_d_checks(gen::simplex_skeleton(4, 2), 2, kQ);
    CHECK(!rep3.lcm_with_submaximal_d);
    CHECK(rep3.agree);

    // three-way agreement over random complexes
    std::mt19937_64 rng(54321);
    for (int trial = 0; trial < 40; ++trial) {
        const auto k = gen::random_complex(3 + static_cast<int>(rng() % 4), 6, rng);
        for (int l = 1; l <= 3; ++l) CHECK(submaximal_d_checks(k, l, kQ).agree);
    }
}

TEST_CASE("conjecture scan") {
    std::vector<SimplicialComplex> all4;
    gen::enumerate_all_complexes(4, [&](const SimplicialComplex& k) { all4.push_back(k); });
    CHECK(all4.size() == 168);
    CHECK(conjecture_scan(all4, 2, kQ).empty());

    // skeleton streams are excluded by the skeleton clause
    std::vector<SimplicialComplex> skeletons;
    for (int n = 3; n <= 6; ++n)
        for (int kk = 0; kk < n; ++kk) skeletons.push_back(gen::simplex_skeleton(n, kk));
    for (int l = 1; l <= 3; ++l) CHECK(conjecture_scan(skeletons, l, kQ).empty());

    // bi-CM complexes have c >= 0, so l = 1 never yields candidates
    std::vector<SimplicialComplex> bicms{gen::path(4), tree_star(), gen::simplex_skeleton(5, 2)};
    CHECK(conjecture_scan(bicms, 1, kQ).empty());
}

TEST_CASE("route agreement on a mixed corpus") {
    const auto corpus = small_corpus(40, 777);
    for (const auto& k : corpus) {
        for (const FieldSpec& field : {kQ, kF2}) {
            const auto cm = is_cm(k, field);
            CHECK(cm.routes.size() == 3);
            (void)cm.checked("cm");
            const auto bb = is_buchsbaum(k, field);
            CHECK(bb.routes.size() == 2);
            (void)bb.checked("bb");
            for (int l = 1; l <= 3; ++l) {
                (void)is_lcm(k, l, field).checked("lcm");
                (void)is_lcm_design(k, l, field).checked("design");
            }
            if (!k.is_full_simplex()) (void)is_bicm(k, field).checked("bicm");
            for (int a = 0; a <= 1; ++a)
                for (int b = 0; b <= 1; ++b)
                    if (a + b <= k.ground_size()) (void)is_ab_design(k, a, b, field).checked("ab");
        }
    }
}

TEST_CASE("skeleton promotion and join closure") {
    // codimension-r skeleton of an l-CM complex is (l+r)-CM
    const std::vector<std::pair<SimplicialComplex, int>> lcms = {
        {gen::cycle(6), 2}, {gen::simplex_skeleton(6, 3), 3}, {gen::cyclic_polytope_boundary(7, 4), 2}};
    for (const auto& [k, l] : lcms) {
        REQUIRE(is_lcm(k, l, kQ).checked("lcm"));
        for (int r = 1; r <= k.dimension(); ++r) {
            const auto sk = k.skeleton(k.dimension() - r);
            CHECK(is_lcm(sk, l + r, kQ).checked("lcm"));
        }
    }

    // joins of l-CM complexes are l-CM
    const auto join24 = gen::join(SimplicialComplex::from_facets(2, {{1}, {2}}),
                                  SimplicialComplex::from_facet_masks(
                                      bits::mask_of({3, 4}), {bits::mask_of({3}), bits::mask_of({4})}));
    CHECK(join24.f_vector() == FVector({1, 4, 4}));  // the 4-cycle
    CHECK(is_lcm(join24, 2, kQ).checked("lcm"));

    const auto c4 = gen::cycle(4);
    const auto two_pts = SimplicialComplex::from_facet_masks(bits::mask_of({5, 6}),
                                                             {bits::mask_of({5}), bits::mask_of({6})});
    const auto sphere = gen::join(c4, two_pts);
    CHECK(is_lcm(sphere, 2, kQ).checked("lcm"));
    CHECK(is_gorenstein_star(sphere, kQ).checked("gor"));
}

TEST_CASE("suspension of a polygon is a 2-sphere") {
    const auto s2 = gen::suspension(gen::cycle(5), 2);
    CHECK(is_gorenstein_star(s2, kQ).checked("gor"));
    CHECK(is_orientable_homology_manifold(s2, kQ).checked("mani"));
}

TEST_CASE("girth and dimension bounds for l-CM complexes") {
    const auto corpus = small_corpus(60, 888);
    for (const auto& k : corpus) {
        if (k.is_void() || k.is_empty_simplex()) continue;
        const int g = k.ground_size();
        const int level = lcm_level(k, kQ);
        for (int l = 1; l <= level; ++l) {
            CHECK(girth(k, kQ) <= g + 2 - l);
            if (k.cardinality_d() > g - l) {
                // only the complete (g-l)-skeleton may exceed the bound
                CHECK(k == gen::simplex_skeleton(g, g - l));
            }
        }
    }
}

TEST_CASE("exhaustive route audit on four vertices") {
    for (int n = 1; n <= 4; ++n) {
        gen::enumerate_all_complexes(n, [&](const SimplicialComplex& k) {
            if (k.is_void()) return;
            for (const FieldSpec& field : {kQ, kF2}) {
                CHECK(is_cm(k, field).routes_agree());
                CHECK(is_buchsbaum(k, field).routes_agree());
                if (!k.is_full_simplex()) CHECK(is_bicm(k, field).routes_agree());
                for (int l = 1; l <= 3; ++l) {
                    CHECK(is_lcm(k, l, field).routes_agree());
                    CHECK(is_lcm_design(k, l, field).routes_agree());
                    CHECK(submaximal_d_checks(k, l, field).agree);
                }
                for (int a = 0; a <= 2; ++a)
                    for (int b = 0; a + b <= 2; ++b)
                        if (a + b <= k.ground_size())
                            CHECK(is_ab_design(k, a, b, field).routes_agree());
            }
        });
    }
}

TEST_CASE("classification report ladder invariants") {
    const auto corpus = small_corpus(25, 999);
    for (const auto& k : corpus) {
        for (const FieldSpec& field : {kQ, kF2}) {
            const auto rep = classify(k, field);
            CHECK((rep.lcm_level >= 1) == rep.is_cm);
            if (rep.is_gorenstein_star) CHECK(rep.is_cm);
            if (rep.is_cm) CHECK(rep.is_buchsbaum);
            if (rep.lcm_level >= 1 && !k.is_empty_simplex())
                CHECK(rep.girth <= rep.n + 2 - rep.lcm_level);
            CHECK(rep.field == field);
        }
    }
}

}  // TEST_SUITE
