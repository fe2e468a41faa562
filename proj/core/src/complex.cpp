#include "enrhom/complex.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace enrhom {

namespace bits {

std::vector<int> vertices(Mask m) {
    std::vector<int> out;
    for (Mask t = m; t; t &= t - 1) out.push_back(std::countr_zero(t) + 1);
    return out;
}

Mask mask_of(const std::vector<int>& vs) {
    Mask m = 0;
    for (int v : vs) {
        if (v < 1 || v > 63) throw std::invalid_argument("vertex label out of range 1..63");
        m |= vertex_bit(v);
    }
    return m;
}

}  // namespace bits

std::string to_string(const FVector& f) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < f.counts.size(); ++i) {
        if (i) os << ',';
        os << f.counts[i];
    }
    os << ')';
    return os.str();
}

std::vector<Mask> maximal_antichain(std::vector<Mask> sets) {
    std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
        return bits::popcount(a) > bits::popcount(b);
    });
    std::vector<Mask> kept;
    for (Mask s : sets) {
        bool dominated = false;
        for (Mask k : kept) {
            if ((s & k) == s) { dominated = true; break; }
        }
        if (!dominated) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

SimplicialComplex::SimplicialComplex(Mask ground, std::vector<Mask> facets)
    : ground_(ground), facets_(std::move(facets)), cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex SimplicialComplex::from_facet_masks(Mask ground, std::vector<Mask> facets) {
    for (Mask f : facets) {
        if ((f & ~ground) != 0)
            throw std::invalid_argument("facet contains a vertex outside the ground set");
    }
    return SimplicialComplex(ground, maximal_antichain(std::move(facets)));
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<std::vector<int>>& facets) {
    if (n < 1 || n > 63) throw std::invalid_argument("ground-set size must be in 1..63");
    std::vector<Mask> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) {
        Mask m = bits::mask_of(f);
        if ((m & ~bits::full_mask(n)) != 0)
            throw std::invalid_argument("facet vertex exceeds ground-set size n=" + std::to_string(n));
        masks.push_back(m);
    }
    return from_facet_masks(bits::full_mask(n), std::move(masks));
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
    if (n < 0 || n > 63) throw std::invalid_argument("ground-set size must be in 0..63");
    return SimplicialComplex(bits::full_mask(n), {});
}

SimplicialComplex SimplicialComplex::empty_simplex(int n) {
    if (n < 0 || n > 63) throw std::invalid_argument("ground-set size must be in 0..63");
    return SimplicialComplex(bits::full_mask(n), {0});
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
    if (n < 1 || n > 63) throw std::invalid_argument("ground-set size must be in 1..63");
    return SimplicialComplex(bits::full_mask(n), {bits::full_mask(n)});
}

Mask SimplicialComplex::vertex_support() const {
    Mask s = 0;
    for (Mask f : facets_) s |= f;
    return s;
}

Mask SimplicialComplex::compact_mask(const FaceCache& fc, Mask m) const {
    Mask out = 0;
    for (Mask t = m; t; t &= t - 1)
        out |= Mask{1} << fc.compact_pos[static_cast<size_t>(std::countr_zero(t))];
    return out;
}

Mask SimplicialComplex::expand_mask(Mask compact) const {
    Mask out = 0;
    int pos = 0;
    for (Mask g = ground_; g; g &= g - 1, ++pos) {
        if (compact & (Mask{1} << pos)) out |= g & (~g + 1);
    }
    return out;
}

void SimplicialComplex::ensure_dense(FaceCache& fc) const {
    if (fc.dense_built.load(std::memory_order_acquire)) return;
    const int g = ground_size();
    fc.compact_pos.assign(64, -1);
    int pos = 0;
    for (Mask t = ground_; t; t &= t - 1)
        fc.compact_pos[static_cast<size_t>(std::countr_zero(t))] = pos++;
    const std::size_t size = std::size_t{1} << g;
    fc.dense.assign(size, 0);
    for (Mask f : facets_) fc.dense[compact_mask(fc, f)] = 1;
    // downward closure: every subset of a marked set gets marked
    for (std::size_t m = size; m-- > 0;) {
        if (!fc.dense[m]) continue;
        for (Mask t = m; t; t &= t - 1) fc.dense[m & ~(t & (~t + 1))] = 1;
    }
    fc.dense_built.store(true, std::memory_order_release);
}

bool SimplicialComplex::is_face(Mask f) const {
    if ((f & ~ground_) != 0) return false;
    if (cache_->dense_built.load(std::memory_order_acquire))
        return cache_->dense[compact_mask(*cache_, f)] != 0;
    for (Mask t : facets_)
        if ((f & t) == f) return true;
    return false;
}

int SimplicialComplex::cardinality_d() const {
    if (is_void()) throw VoidComplexError("cardinality_d");
    int d = 0;
    for (Mask f : facets_) d = std::max(d, bits::popcount(f));
    return d;
}

int SimplicialComplex::dimension() const { return cardinality_d() - 1; }

bool SimplicialComplex::find_nonface_of_card(int k, Mask prefix, int min_bit, Mask* out) const {
    // extends face prefixes one vertex at a time; a non-face appears the
    // moment a one-vertex extension leaves the complex
    if (bits::popcount(prefix) == k) return false;
    for (int b = min_bit; b < 64; ++b) {
        Mask bit = Mask{1} << b;
        if (!(ground_ & bit) || (prefix & bit)) continue;
        Mask cand = prefix | bit;
        if (!is_face(cand)) {
            if (bits::popcount(cand) == k) { *out = cand; return true; }
            continue;  // smaller non-face already reported at its own k
        }
        if (find_nonface_of_card(k, cand, b + 1, out)) return true;
    }
    return false;
}

int SimplicialComplex::frame_c() const {
    if (is_void()) throw VoidComplexError("frame_c");
    const int g = ground_size();
    if (is_full_simplex()) return g;
    if (dense_eligible()) {
        std::lock_guard lock(cache_->mu);
        ensure_dense(*cache_);
        int best = g + 1;
        for (std::size_t m = 0; m < cache_->dense.size(); ++m)
            if (!cache_->dense[m]) best = std::min(best, std::popcount(m));
        return best - 1;
    }
    const int d = cardinality_d();
    for (int k = 1; k <= d + 1; ++k) {
        Mask out = 0;
        if (find_nonface_of_card(k, 0, 0, &out)) return k - 1;
    }
    return g;  // unreachable for a non-full-simplex
}

const std::vector<Mask>& SimplicialComplex::faces_of_card(int k) const {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->by_card.find(k);
    if (it != cache_->by_card.end()) return it->second;

    std::vector<Mask> faces;
    if (k >= 0 && !is_void()) {
        if (dense_eligible()) {
            ensure_dense(*cache_);
            for (std::size_t m = 0; m < cache_->dense.size(); ++m)
                if (cache_->dense[m] && std::popcount(m) == k)
                    faces.push_back(expand_mask(static_cast<Mask>(m)));
            std::sort(faces.begin(), faces.end());
        } else {
            for (Mask f : facets_)
                bits::for_each_subset_of_card(f, k, [&](Mask s) { faces.push_back(s); });
            std::sort(faces.begin(), faces.end());
            faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        }
    }
    return cache_->by_card.emplace(k, std::move(faces)).first->second;
}

std::vector<Mask> SimplicialComplex::all_faces() const {
    std::vector<Mask> out;
    if (is_void()) return out;
    const int d = cardinality_d();
    for (int k = 0; k <= d; ++k) {
        const auto& fs = faces_of_card(k);
        out.insert(out.end(), fs.begin(), fs.end());
    }
    return out;
}

FVector SimplicialComplex::f_vector() const {
    FVector f;
    if (is_void()) return f;
    const int d = cardinality_d();
    for (int k = 0; k <= d; ++k)
        f.counts.push_back(static_cast<long long>(faces_of_card(k).size()));
    return f;
}

SimplicialComplex SimplicialComplex::restriction(Mask r) const {
    Mask g = ground_ & r;
    if (is_void()) return SimplicialComplex(g, {});
    std::vector<Mask> fs;
    fs.reserve(facets_.size());
    for (Mask f : facets_) fs.push_back(f & g);
    return SimplicialComplex(g, maximal_antichain(std::move(fs)));
}

SimplicialComplex SimplicialComplex::deletion(Mask r) const {
    return restriction(ground_ & ~r);
}

SimplicialComplex SimplicialComplex::link(Mask q) const {
    Mask g = ground_ & ~q;
    if (!is_face(q)) return SimplicialComplex(g, {});
    std::vector<Mask> fs;
    for (Mask f : facets_)
        if ((f & q) == q) fs.push_back(f & ~q);
    return SimplicialComplex(g, maximal_antichain(std::move(fs)));
}

namespace {

// Incremental minimal-transversal computation (Berge): after processing
// every hyperedge, `trans` holds the inclusion-minimal sets hitting all
// of them.
std::vector<Mask> minimal_transversals(const std::vector<Mask>& edges) {
    std::vector<Mask> trans{0};
    for (Mask e : edges) {
        std::vector<Mask> merged;
        for (Mask t : trans) {
            if (t & e) {
                merged.push_back(t);
            } else {
                for (Mask b = e; b; b &= b - 1) merged.push_back(t | (b & (~b + 1)));
            }
        }
        std::sort(merged.begin(), merged.end(), [](Mask a, Mask b) {
            int pa = bits::popcount(a), pb = bits::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        std::vector<Mask> mins;
        for (Mask c : merged) {
            bool dominated = false;
            for (Mask k : mins)
                if ((k & c) == k) { dominated = true; break; }
            if (!dominated) mins.push_back(c);
        }
        trans = std::move(mins);
    }
    std::sort(trans.begin(), trans.end());
    return trans;
}

}  // namespace

std::vector<Mask> SimplicialComplex::minimal_nonfaces() const {
    if (is_void()) return {0};
    if (dense_eligible()) {
        std::lock_guard lock(cache_->mu);
        ensure_dense(*cache_);
        std::vector<Mask> out;
        for (std::size_t m = 0; m < cache_->dense.size(); ++m) {
            if (cache_->dense[m]) continue;
            bool minimal = true;
            for (Mask t = m; t; t &= t - 1) {
                if (!cache_->dense[m & ~(t & (~t + 1))]) { minimal = false; break; }
            }
            if (minimal) out.push_back(expand_mask(static_cast<Mask>(m)));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    // non-faces are exactly the sets hitting every facet complement
    std::vector<Mask> edges;
    edges.reserve(facets_.size());
    for (Mask f : facets_) edges.push_back(ground_ & ~f);
    return minimal_transversals(edges);
}

SimplicialComplex SimplicialComplex::alexander_dual() const {
    std::vector<Mask> duals;
    for (Mask n : minimal_nonfaces()) duals.push_back(ground_ & ~n);
    return SimplicialComplex(ground_, maximal_antichain(std::move(duals)));
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
    const int d = cardinality_d();
    if (k < -1 || k + 1 > d) throw std::out_of_range("skeleton: need -1 <= k <= dimension");
    if (k == -1) return SimplicialComplex(ground_, {0});
    std::vector<Mask> fs = faces_of_card(k + 1);
    for (Mask f : facets_)
        if (bits::popcount(f) <= k) fs.push_back(f);
    return SimplicialComplex(ground_, maximal_antichain(std::move(fs)));
}

std::optional<int> SimplicialComplex::cone_apex() const {
    if (is_void()) return std::nullopt;
    Mask common = ~Mask{0};
    for (Mask f : facets_) common &= f;
    common &= ground_;
    if (common == 0) return std::nullopt;
    return std::countr_zero(common) + 1;
}

int SimplicialComplex::connected_components() const {
    if (is_void() || is_empty_simplex()) return 0;
    std::array<int, 64> parent;
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
    for (Mask f : facets_) {
        int first = -1;
        for (Mask t = f; t; t &= t - 1) {
            int b = std::countr_zero(t);
            if (first < 0) first = b;
            else unite(first, b);
        }
    }
    Mask support = vertex_support();
    int comps = 0;
    for (Mask t = support; t; t &= t - 1)
        if (find(std::countr_zero(t)) == std::countr_zero(t)) ++comps;
    return comps;
}

}  // namespace enrhom
