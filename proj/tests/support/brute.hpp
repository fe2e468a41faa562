// Independent brute-force oracles for the test suites. Everything here
// recomputes from first principles (set enumeration, dense textbook
// elimination) without touching the library's face caches, sparse
// matrices or classification routes.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "enrhom/complex.hpp"
#include "enrhom/field.hpp"

namespace brute {

using enrhom::FieldSpec;
using enrhom::Mask;

inline bool is_face(const std::vector<Mask>& facets, Mask f) {
    for (Mask t : facets)
        if ((f & t) == f) return true;
    return false;
}

// all faces grouped by cardinality, by walking every subset of the ground
inline std::vector<std::vector<Mask>> faces_by_card(const std::vector<Mask>& facets, Mask ground) {
    const int g = enrhom::bits::popcount(ground);
    std::vector<Mask> bitlist;
    for (Mask t = ground; t; t &= t - 1) bitlist.push_back(t & (~t + 1));
    std::vector<std::vector<Mask>> out(static_cast<size_t>(g + 1));
    for (std::uint64_t m = 0; m < (1ull << g); ++m) {
        Mask s = 0;
        for (int b = 0; b < g; ++b)
            if (m & (1ull << b)) s |= bitlist[static_cast<size_t>(b)];
        if (is_face(facets, s)) out[static_cast<size_t>(enrhom::bits::popcount(s))].push_back(s);
    }
    return out;
}

inline std::vector<long long> f_vector(const std::vector<Mask>& facets, Mask ground) {
    auto by_card = faces_by_card(facets, ground);
    while (!by_card.empty() && by_card.back().empty()) by_card.pop_back();
    std::vector<long long> f;
    for (const auto& layer : by_card) f.push_back(static_cast<long long>(layer.size()));
    return f;
}

// plain textbook row reduction over Q
inline int rank_q(std::vector<std::vector<mpq_class>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[r], a[pivot]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][col] == 0) continue;
            mpq_class f = a[i][col] / a[r][col];
            for (int j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

inline int rank_p(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t acc = 1;
        b %= p;
        while (e) {
            if (e & 1) acc = acc * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return acc;
    };
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][col] % p != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[r], a[pivot]);
        const std::uint64_t inv = powmod(a[r][col], p - 2);
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][col] % p == 0) continue;
            const std::uint64_t f = a[i][col] % p * inv % p;
            for (int j = col; j < cols; ++j)
                a[i][j] = (a[i][j] % p + p - f * (a[r][j] % p) % p) % p;
        }
        ++r;
    }
    return r;
}

// dense signed boundary matrix: rows = (i-1)-card faces, cols = i-card
inline std::vector<std::vector<long long>> boundary_dense(const std::vector<Mask>& lower,
                                                          const std::vector<Mask>& upper) {
    std::vector<std::vector<long long>> m(lower.size(),
                                          std::vector<long long>(upper.size(), 0));
    for (size_t c = 0; c < upper.size(); ++c) {
        int j = 0;
        for (Mask t = upper[c]; t; t &= t - 1, ++j) {
            const Mask sub = upper[c] & ~(t & (~t + 1));
            for (size_t r = 0; r < lower.size(); ++r) {
                if (lower[r] == sub) {
                    m[r][c] = j % 2 == 0 ? 1 : -1;
                    break;
                }
            }
        }
    }
    return m;
}

inline int rank_signed(const std::vector<std::vector<long long>>& m, const FieldSpec& field) {
    if (m.empty() || m[0].empty()) return 0;
    if (field.is_rational()) {
        std::vector<std::vector<mpq_class>> a(m.size(), std::vector<mpq_class>(m[0].size()));
        for (size_t i = 0; i < m.size(); ++i)
            for (size_t j = 0; j < m[0].size(); ++j) a[i][j] = static_cast<long>(m[i][j]);
        return rank_q(std::move(a));
    }
    const std::uint64_t p = field.modulus();
    std::vector<std::vector<std::uint64_t>> a(m.size(), std::vector<std::uint64_t>(m[0].size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j)
            a[i][j] = static_cast<std::uint64_t>((m[i][j] % static_cast<long long>(p) +
                                                  static_cast<long long>(p)) %
                                                 static_cast<long long>(p));
    return rank_p(std::move(a), p);
}

// reduced Betti numbers indexed from p = -1 (slot 0)
inline std::vector<int> betti(const std::vector<Mask>& facets, Mask ground,
                              const FieldSpec& field) {
    if (facets.empty()) return {};
    auto by_card = faces_by_card(facets, ground);
    while (!by_card.empty() && by_card.back().empty()) by_card.pop_back();
    const int d = static_cast<int>(by_card.size()) - 1;  // max cardinality
    std::vector<int> ranks(static_cast<size_t>(d + 2), 0);  // ranks[i] = rank of d_i : card i+?
    // ranks[k] = rank of the map from k-card faces to (k-1)-card faces
    for (int k = 1; k <= d; ++k)
        ranks[static_cast<size_t>(k)] =
            rank_signed(boundary_dense(by_card[static_cast<size_t>(k - 1)],
                                       by_card[static_cast<size_t>(k)]),
                        field);
    std::vector<int> out(static_cast<size_t>(d + 1));
    for (int k = 0; k <= d; ++k) {  // k = p + 1
        const int chains = static_cast<int>(by_card[static_cast<size_t>(k)].size());
        const int low = ranks[static_cast<size_t>(k)];
        const int high = k + 1 <= d ? ranks[static_cast<size_t>(k + 1)] : 0;
        out[static_cast<size_t>(k)] = chains - low - high;
    }
    return out;
}

inline int betti_at(const std::vector<int>& b, int p) {
    const int idx = p + 1;
    if (idx < 0 || idx >= static_cast<int>(b.size())) return 0;
    return b[static_cast<size_t>(idx)];
}

inline std::vector<Mask> restrict_facets(const std::vector<Mask>& facets, Mask r) {
    std::vector<Mask> out;
    for (Mask f : facets) out.push_back(f & r);
    return enrhom::maximal_antichain(std::move(out));
}

// girth by raw subset enumeration in increasing cardinality
inline int girth(const std::vector<Mask>& facets, Mask ground, const FieldSpec& field) {
    const int g = enrhom::bits::popcount(ground);
    int top = -1;
    for (Mask f : facets) top = std::max(top, enrhom::bits::popcount(f));
    const int top_p = top - 1;
    for (int card = 0; card <= g; ++card) {
        bool found = false;
        enrhom::bits::for_each_subset_of_card(ground, card, [&](Mask r) {
            if (found) return;
            if (betti_at(betti(restrict_facets(facets, r), r, field), top_p) != 0) found = true;
        });
        if (found) return card;
    }
    return g + 1;
}

inline std::vector<Mask> minimal_nonfaces(const std::vector<Mask>& facets, Mask ground) {
    const int g = enrhom::bits::popcount(ground);
    std::vector<Mask> bitlist;
    for (Mask t = ground; t; t &= t - 1) bitlist.push_back(t & (~t + 1));
    std::vector<Mask> out;
    for (std::uint64_t m = 0; m < (1ull << g); ++m) {
        Mask s = 0;
        for (int b = 0; b < g; ++b)
            if (m & (1ull << b)) s |= bitlist[static_cast<size_t>(b)];
        if (is_face(facets, s)) continue;
        bool minimal = true;
        for (Mask t = s; t; t &= t - 1)
            if (!is_face(facets, s & ~(t & (~t + 1)))) { minimal = false; break; }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// acyclicity of a graph complex given by its edge/vertex facets
inline bool graph_is_acyclic(const std::vector<Mask>& facets) {
    std::vector<int> parent(64);
    for (int i = 0; i < 64; ++i) parent[static_cast<size_t>(i)] = i;
    std::function<int(int)> find = [&](int x) {
        return parent[static_cast<size_t>(x)] == x ? x : parent[static_cast<size_t>(x)] = find(parent[static_cast<size_t>(x)]);
    };
    for (Mask f : facets) {
        if (enrhom::bits::popcount(f) != 2) continue;
        const int a = std::countr_zero(f);
        const int b = std::countr_zero(f & (f - 1));
        if (find(a) == find(b)) return false;
        parent[static_cast<size_t>(find(a))] = find(b);
    }
    return true;
}

}  // namespace brute
