#include "enrhom/enriched.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace enrhom {

namespace {

void check_cap(const SimplicialComplex& k) {
    if (k.ground_size() > kTableGroundCap) throw SizeCapError(k.ground_size());
}

// All submasks of `ground`, grouped is not needed; plain 2^g walk over the
// compacted positions.
template <typename Fn>
void for_each_subset(Mask ground, Fn&& fn) {
    std::vector<Mask> bits_of;
    for (Mask t = ground; t; t &= t - 1) bits_of.push_back(t & (~t + 1));
    const std::size_t g = bits_of.size();
    for (std::size_t m = 0; m < (std::size_t{1} << g); ++m) {
        Mask s = 0;
        for (std::size_t b = 0; b < g; ++b)
            if (m & (std::size_t{1} << b)) s |= bits_of[b];
        fn(s);
    }
}

}  // namespace

SquarefreeTable enriched_homology(const SimplicialComplex& k, int p, const FieldSpec& field,
                                  BettiCache& cache) {
    if (k.is_void()) throw VoidComplexError("enriched_homology");
    if (p < -1 || p > k.dimension())
        throw std::out_of_range("enriched_homology: p out of range");
    check_cap(k);
    SquarefreeTable t;
    t.ground = k.ground();
    t.p = p;
    t.kind = TableKind::homology;
    t.field = field;
    for_each_subset(k.ground(), [&](Mask r) {
        const int d = cache.betti(k.restriction(r), field).at(p);
        if (d != 0) t.dims[r] = d;
    });
    return t;
}

SquarefreeTable enriched_cohomology(const SimplicialComplex& k, int p, const FieldSpec& field,
                                    BettiCache& cache) {
    if (k.is_void()) throw VoidComplexError("enriched_cohomology");
    if (p < -1 || p > k.dimension())
        throw std::out_of_range("enriched_cohomology: p out of range");
    check_cap(k);
    SquarefreeTable t;
    t.ground = k.ground();
    t.p = p;
    t.kind = TableKind::cohomology;
    t.field = field;
    for_each_subset(k.ground(), [&](Mask r) {
        const Mask q = k.ground() & ~r;
        const int qc = bits::popcount(q);
        const int d = cache.cobetti(k.link(q), field).at(p - qc);
        if (d != 0) t.dims[r] = d;
    });
    return t;
}

SquarefreeTable table_alexander_dual(const SquarefreeTable& t) {
    SquarefreeTable out = t;
    out.dims.clear();
    for (const auto& [mask, d] : t.dims) out.dims[t.ground & ~mask] = d;
    return out;
}

namespace {

// dim H~_{d-1} of a restriction that contains a maximum facet: the top
// chain group has no faces above it, so only one rank is needed.
bool top_homology_nonzero(const SimplicialComplex& restricted, int top_dim,
                          const FieldSpec& field) {
    if (restricted.is_void()) return false;
    if (restricted.dimension() != top_dim) return false;
    if (top_dim == -1) return restricted.is_empty_simplex();
    const int chains = static_cast<int>(restricted.faces_of_card(top_dim + 1).size());
    return chains - rank(boundary_matrix(restricted, top_dim, field), field) > 0;
}

}  // namespace

namespace {

// shortest cycle through each edge via breadth-first search with the
// edge removed
int graph_girth(const SimplicialComplex& k) {
    const int g = k.ground_size();
    std::vector<Mask> edges;
    for (Mask f : k.facets())
        if (bits::popcount(f) == 2) edges.push_back(f);
    std::vector<std::vector<int>> adj(64);
    for (Mask e : edges) {
        const int a = std::countr_zero(e);
        const int b = std::countr_zero(e & (e - 1));
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    int best = g + 1;
    for (Mask e : edges) {
        const int a = std::countr_zero(e);
        const int b = std::countr_zero(e & (e - 1));
        std::array<int, 64> dist;
        dist.fill(-1);
        dist[static_cast<size_t>(a)] = 0;
        std::vector<int> queue{a};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            for (int v : adj[static_cast<size_t>(u)]) {
                if (u == a && v == b) continue;  // skip the removed edge
                if (u == b && v == a) continue;
                if (dist[static_cast<size_t>(v)] < 0) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    queue.push_back(v);
                }
            }
        }
        if (dist[static_cast<size_t>(b)] >= 0) best = std::min(best, dist[static_cast<size_t>(b)] + 1);
    }
    return best;
}

}  // namespace

int girth(const SimplicialComplex& k, const FieldSpec& field, BettiCache&) {
    if (k.is_void()) throw VoidComplexError("girth");
    const int d = k.cardinality_d();
    const int g = k.ground_size();
    // the top homology of a graph is independent of the field and a
    // minimal support is a minimal graph cycle
    if (d == 2) return graph_girth(k);
    if (d == 0) {
        // top module is H_{-1} of restrictions for the empty simplex,
        // H_0 otherwise: two vertices already carry a 0-cycle
        Mask support = 0;
        for (Mask f : k.facets()) support |= f;
        if (k.is_empty_simplex()) return 0;
        return bits::popcount(support) >= 2 ? 2 : g + 1;
    }
    std::vector<Mask> top_facets;
    for (Mask f : k.facets())
        if (bits::popcount(f) == d) top_facets.push_back(f);

    std::unordered_set<Mask> seen;
    std::map<int, std::vector<Mask>> frontier;
    for (Mask f : top_facets)
        if (seen.insert(f).second) frontier[bits::popcount(f)].push_back(f);
    while (!frontier.empty()) {
        auto it = frontier.begin();
        const std::vector<Mask> level = std::move(it->second);
        frontier.erase(it);
        for (Mask u : level)
            if (top_homology_nonzero(k.restriction(u), d - 1, field)) return bits::popcount(u);
        for (Mask u : level) {
            for (Mask f : top_facets) {
                const Mask merged = u | f;
                if (merged == u) continue;
                if (seen.insert(merged).second)
                    frontier[bits::popcount(merged)].push_back(merged);
            }
        }
    }
    return g + 1;
}

bool h_minus1_is_k(const SimplicialComplex& k) {
    if (k.is_void()) return false;
    Mask support = 0;
    for (Mask f : k.facets()) support |= f;
    return support == k.ground();
}

bool homology_module_nonzero(const SimplicialComplex& k, int p, const FieldSpec& field,
                             BettiCache& cache) {
    if (k.is_void()) return false;
    check_cap(k);
    bool found = false;
    for_each_subset(k.ground(), [&](Mask r) {
        if (found) return;
        if (cache.betti(k.restriction(r), field).at(p) != 0) found = true;
    });
    return found;
}

bool homology_module_codim_at_least(const SimplicialComplex& k, int p, int bound,
                                    const FieldSpec& field, Mask* witness, BettiCache& cache) {
    if (k.is_void() || bound <= 0) return true;
    const int g = k.ground_size();
    // violating supports have size > g - bound
    const int min_card = std::max(0, g - bound + 1);
    for (int card = g; card >= min_card; --card) {
        bool violated = false;
        Mask bad = 0;
        bits::for_each_subset_of_card(k.ground(), card, [&](Mask r) {
            if (violated) return;
            if (cache.betti(k.restriction(r), field).at(p) != 0) {
                violated = true;
                bad = r;
            }
        });
        if (violated) {
            if (witness) *witness = bad;
            return false;
        }
    }
    return true;
}

int nonvanishing_module_count(const SimplicialComplex& k, int limit_p, const FieldSpec& field,
                              BettiCache& cache) {
    if (k.is_void()) return 0;
    check_cap(k);
    const bool exception = h_minus1_is_k(k);
    int count = 0;
    for (int p = -1; p <= limit_p; ++p) {
        if (p == -1 && exception) continue;
        if (homology_module_nonzero(k, p, field, cache)) ++count;
    }
    return count;
}

}  // namespace enrhom
