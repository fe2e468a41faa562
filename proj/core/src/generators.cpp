#include "enrhom/generators.hpp"

#include <algorithm>
#include <numeric>

namespace enrhom {
namespace gen {

SimplicialComplex simplex_skeleton(int n, int k) {
    if (n < 1 || n > 63) throw std::invalid_argument("simplex_skeleton: n out of range");
    if (k < -1 || k > n - 1) throw std::out_of_range("simplex_skeleton: need -1 <= k <= n-1");
    if (k == -1) return SimplicialComplex::empty_simplex(n);
    std::vector<Mask> facets;
    bits::for_each_subset_of_card(bits::full_mask(n), k + 1,
                                  [&](Mask s) { facets.push_back(s); });
    return SimplicialComplex::from_facet_masks(bits::full_mask(n), std::move(facets));
}

SimplicialComplex full_simplex(int n) { return SimplicialComplex::full_simplex(n); }

SimplicialComplex cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<std::vector<int>> facets;
    for (int i = 1; i < n; ++i) facets.push_back({i, i + 1});
    facets.push_back({n, 1});
    return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    if (n == 1) return SimplicialComplex::from_facets(1, {{1}});
    std::vector<std::vector<int>> facets;
    for (int i = 1; i < n; ++i) facets.push_back({i, i + 1});
    return SimplicialComplex::from_facets(n, facets);
}

namespace {

bool gale_even(Mask s, int n) {
    // every run of chosen elements between two consecutive missing ones
    // must have even length; head and tail runs are unconstrained
    int run = 0;
    bool seen_missing = false;
    for (int v = 1; v <= n; ++v) {
        if (s & bits::vertex_bit(v)) {
            ++run;
        } else {
            if (seen_missing && run % 2 != 0) return false;
            seen_missing = true;
            run = 0;
        }
    }
    return true;
}

long long binom_ll(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void verify_closed_surface(const SimplicialComplex& k, const FVector& expected_f, int link_len,
                           const char* name) {
    if (k.f_vector() != expected_f)
        throw std::logic_error(std::string(name) + ": f-vector verification failed");
    for (Mask e : k.faces_of_card(2)) {
        int count = 0;
        for (Mask f : k.facets())
            if ((e & f) == e) ++count;
        if (count != 2)
            throw std::logic_error(std::string(name) + ": edge not in exactly two triangles");
    }
    for (Mask v : k.faces_of_card(1)) {
        const SimplicialComplex lk = k.link(v);
        if (static_cast<int>(lk.facets().size()) != link_len || lk.connected_components() != 1)
            throw std::logic_error(std::string(name) + ": vertex link is not a " +
                                   std::to_string(link_len) + "-cycle");
        for (Mask f : lk.facets())
            if (bits::popcount(f) != 2)
                throw std::logic_error(std::string(name) + ": vertex link is not a graph cycle");
        for (Mask w : lk.faces_of_card(1)) {
            int deg = 0;
            for (Mask f : lk.facets())
                if ((w & f) == w) ++deg;
            if (deg != 2)
                throw std::logic_error(std::string(name) + ": vertex link is not 2-regular");
        }
    }
}

}  // namespace

SimplicialComplex cyclic_polytope_boundary(int n, int dd) {
    if (dd < 2 || dd % 2 != 0)
        throw std::invalid_argument("cyclic_polytope_boundary: dimension must be even and >= 2");
    if (n < dd + 2 || n > 63)
        throw std::invalid_argument("cyclic_polytope_boundary: need dd + 2 <= n <= 63");
    std::vector<Mask> facets;
    bits::for_each_subset_of_card(bits::full_mask(n), dd, [&](Mask s) {
        if (gale_even(s, n)) facets.push_back(s);
    });
    const long long expected = binom_ll(n - dd / 2, dd / 2) + binom_ll(n - dd / 2 - 1, dd / 2 - 1);
    if (static_cast<long long>(facets.size()) != expected)
        throw std::logic_error("cyclic_polytope_boundary: facet count verification failed");
    return SimplicialComplex::from_facet_masks(bits::full_mask(n), std::move(facets));
}

SimplicialComplex torus_seven() {
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back({i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
        facets.push_back({i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
    }
    SimplicialComplex k = SimplicialComplex::from_facets(7, facets);
    verify_closed_surface(k, FVector({1, 7, 21, 14}), 6, "torus_seven");
    return k;
}

SimplicialComplex rp2_six() {
    // icosahedron: poles 0 and 11, upper ring 1..5, lower ring 6..10
    auto up = [](int i) { return 1 + (i % 5 + 5) % 5; };
    auto low = [](int i) { return 6 + (i % 5 + 5) % 5; };
    std::vector<std::vector<int>> icosa;
    for (int i = 0; i < 5; ++i) {
        icosa.push_back({0, up(i), up(i + 1)});
        icosa.push_back({11, low(i), low(i + 1)});
        icosa.push_back({up(i), low(i), up(i + 1)});
        icosa.push_back({low(i), up(i + 1), low(i + 1)});
    }
    if (icosa.size() != 20) throw std::logic_error("rp2_six: icosahedron build failed");
    // antipodal classes: {0,11} -> 1, {up(i), low(i+2)} -> i + 2
    auto cls = [&](int v) {
        if (v == 0 || v == 11) return 1;
        if (v >= 1 && v <= 5) return v + 1;
        return (v - 6 - 2 + 5) % 5 + 2;  // low(j) pairs up(j-2)
    };
    std::vector<Mask> quotient;
    for (const auto& tri : icosa) {
        Mask m = 0;
        for (int v : tri) m |= bits::vertex_bit(cls(v));
        if (bits::popcount(m) != 3)
            throw std::logic_error("rp2_six: antipodal map identified a triangle edge");
        quotient.push_back(m);
    }
    std::sort(quotient.begin(), quotient.end());
    quotient.erase(std::unique(quotient.begin(), quotient.end()), quotient.end());
    if (quotient.size() != 10) throw std::logic_error("rp2_six: quotient is not 10 triangles");
    SimplicialComplex k = SimplicialComplex::from_facet_masks(bits::full_mask(6), std::move(quotient));
    verify_closed_surface(k, FVector({1, 6, 15, 10}), 5, "rp2_six");
    return k;
}

SimplicialComplex fano_plane() {
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < 7; ++i)
        blocks.push_back({i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
    return steiner_complex(blocks, 7);
}

SimplicialComplex steiner_complex(const std::vector<std::vector<int>>& blocks, int n) {
    if (blocks.empty()) throw std::invalid_argument("steiner_complex: no blocks");
    const size_t card = blocks.front().size();
    for (const auto& b : blocks)
        if (b.size() != card)
            throw std::invalid_argument("steiner_complex: blocks must share one cardinality");
    return SimplicialComplex::from_facets(n, blocks);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if ((a.ground() & b.ground()) != 0)
        throw std::invalid_argument("join: ground sets must be disjoint");
    std::vector<Mask> facets;
    for (Mask fa : a.facets())
        for (Mask fb : b.facets()) facets.push_back(fa | fb);
    return SimplicialComplex::from_facet_masks(a.ground() | b.ground(), std::move(facets));
}

namespace {

int next_free_label(Mask ground) {
    for (int v = 1; v <= 63; ++v)
        if (!(ground & bits::vertex_bit(v))) return v;
    throw std::invalid_argument("no free vertex label below 64");
}

}  // namespace

SimplicialComplex cone(const SimplicialComplex& k, int apex) {
    if (apex == 0) apex = next_free_label(k.ground());
    const Mask abit = bits::vertex_bit(apex);
    if (k.ground() & abit) throw std::invalid_argument("cone: apex already in the ground set");
    const SimplicialComplex point = SimplicialComplex::from_facet_masks(abit, {abit});
    return join(k, point);
}

SimplicialComplex suspension(const SimplicialComplex& k, int points) {
    if (points < 1) throw std::invalid_argument("suspension: need at least one point");
    Mask ground = 0;
    std::vector<Mask> facets;
    Mask used = k.ground();
    for (int i = 0; i < points; ++i) {
        const Mask b = bits::vertex_bit(next_free_label(used));
        used |= b;
        ground |= b;
        facets.push_back(b);
    }
    return join(k, SimplicialComplex::from_facet_masks(ground, std::move(facets)));
}

void enumerate_all_complexes(int n, const std::function<void(const SimplicialComplex&)>& fn) {
    if (n < 1 || n > 5) throw std::invalid_argument("enumerate_all_complexes: supported for n <= 5");
    const int total = 1 << n;
    std::vector<Mask> order;
    order.reserve(static_cast<size_t>(total));
    for (Mask m = 0; m < static_cast<Mask>(total); ++m) order.push_back(m);
    std::sort(order.begin(), order.end(), [](Mask a, Mask b) {
        int pa = bits::popcount(a), pb = bits::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<char> included(static_cast<size_t>(total), 0);
    const Mask ground = bits::full_mask(n);

    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == order.size()) {
            std::vector<Mask> faces;
            for (Mask m = 0; m < static_cast<Mask>(total); ++m)
                if (included[m]) faces.push_back(m);
            fn(SimplicialComplex::from_facet_masks(ground, maximal_antichain(std::move(faces))));
            return;
        }
        const Mask s = order[idx];
        bool closure_ok = true;
        for (Mask t = s; t; t &= t - 1)
            if (!included[s & ~(t & (~t + 1))]) { closure_ok = false; break; }
        if (closure_ok) {
            included[s] = 1;
            rec(idx + 1);
            included[s] = 0;
        }
        rec(idx + 1);
    };
    rec(0);
}

SimplicialComplex random_complex(int n, int max_facets, std::mt19937_64& rng) {
    if (n < 1 || n > 63) throw std::invalid_argument("random_complex: n out of range");
    if (max_facets < 1) throw std::invalid_argument("random_complex: need max_facets >= 1");
    std::uniform_int_distribution<int> facet_count(1, max_facets);
    std::uniform_int_distribution<int> card_dist(1, n);
    const int m = facet_count(rng);
    std::vector<Mask> facets;
    std::vector<int> labels(static_cast<size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    for (int i = 0; i < m; ++i) {
        const int card = card_dist(rng);
        for (int j = 0; j < card; ++j) {
            std::uniform_int_distribution<int> pick(j, n - 1);
            std::swap(labels[static_cast<size_t>(j)], labels[static_cast<size_t>(pick(rng))]);
        }
        Mask f = 0;
        for (int j = 0; j < card; ++j) f |= bits::vertex_bit(labels[static_cast<size_t>(j)]);
        facets.push_back(f);
    }
    return SimplicialComplex::from_facet_masks(bits::full_mask(n), std::move(facets));
}

}  // namespace gen
}  // namespace enrhom
