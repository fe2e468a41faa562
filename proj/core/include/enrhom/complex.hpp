#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace enrhom {

/// Vertex subsets of {1,...,n}, n <= 63, as machine-word bit patterns.
/// Vertex v occupies bit v-1.
using Mask = std::uint64_t;

namespace bits {

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) {
    return n == 0 ? 0 : (n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1));
}

inline Mask vertex_bit(int v) { return Mask{1} << (v - 1); }

/// 1-based vertex labels of a mask, increasing.
std::vector<int> vertices(Mask m);

Mask mask_of(const std::vector<int>& vertices);

/// Calls fn(submask) for every subset of m with exactly k bits.
template <typename Fn>
void for_each_subset_of_card(Mask m, int k, Fn&& fn) {
    std::vector<int> positions;
    for (Mask t = m; t; t &= t - 1) positions.push_back(std::countr_zero(t));
    const int nb = static_cast<int>(positions.size());
    if (k < 0 || k > nb) return;
    std::vector<int> idx;
    idx.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx.push_back(i);
    while (true) {
        Mask s = 0;
        for (int i = 0; i < k; ++i) s |= Mask{1} << positions[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        fn(s);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == nb - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

}  // namespace bits

/// Face counts by cardinality: counts[i] = f_{i-1} = number of i-sets in
/// the complex. A non-void complex always has counts[0] = 1.
struct FVector {
    std::vector<long long> counts;

    FVector() = default;
    explicit FVector(std::vector<long long> c) : counts(std::move(c)) {}

    long long at(int card) const {
        if (card < 0 || card >= static_cast<int>(counts.size())) return 0;
        return counts[static_cast<size_t>(card)];
    }

    friend bool operator==(const FVector&, const FVector&) = default;
};

std::string to_string(const FVector& f);

struct VoidComplexError : std::domain_error {
    VoidComplexError(const std::string& op)
        : std::domain_error(op + ": undefined on the void complex") {}
};

/// Simplicial complex on a ground set of at most 63 labelled vertices,
/// stored by its facets (inclusion-maximal faces).
///
/// Two degenerate values are distinct: the void complex (no faces at all)
/// and the empty simplex (whose only face is the empty set). Restrictions
/// and links keep the original vertex labels on a sub-ground-set.
/// Instances are immutable after construction; the face enumeration cache
/// is shared between copies and guarded for concurrent readers.
class SimplicialComplex {
public:
    SimplicialComplex() : SimplicialComplex(void_complex(1)) {}

    /// Normalizes the generated complex: duplicates and dominated sets
    /// are removed. An empty facet list yields the void complex; a list
    /// containing the empty set yields at least the empty simplex.
    static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facets);
    static SimplicialComplex from_facet_masks(Mask ground, std::vector<Mask> facets);
    static SimplicialComplex void_complex(int n);
    static SimplicialComplex empty_simplex(int n);
    static SimplicialComplex full_simplex(int n);

    Mask ground() const { return ground_; }
    int ground_size() const { return bits::popcount(ground_); }

    /// Facet masks, sorted ascending. Empty for the void complex; {0} for
    /// the empty simplex.
    const std::vector<Mask>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_simplex() const { return facets_.size() == 1 && facets_[0] == 0; }
    bool is_full_simplex() const { return facets_.size() == 1 && facets_[0] == ground_; }

    bool is_face(Mask f) const;

    /// Union of all facets; vertices of the complex (may be a proper
    /// subset of the ground set).
    Mask vertex_support() const;

    /// d = maximal facet cardinality. Throws VoidComplexError on the void
    /// complex; the empty simplex has d = 0.
    int cardinality_d() const;
    /// dim = d - 1; the empty simplex has dimension -1.
    int dimension() const;

    /// Largest c such that every c-subset of the ground set is a face;
    /// the frame dimension is c - 1. Equals ground_size() exactly for the
    /// full simplex.
    int frame_c() const;

    FVector f_vector() const;

    /// Faces of cardinality k, sorted; cached on first request.
    const std::vector<Mask>& faces_of_card(int k) const;
    std::vector<Mask> all_faces() const;

    /// Faces contained in r; the result lives on ground set r.
    SimplicialComplex restriction(Mask r) const;
    /// restriction to the complement of r.
    SimplicialComplex deletion(Mask r) const;
    /// Faces f disjoint from q with q union f a face, on ground \ q.
    /// The void complex results when q is not a face.
    SimplicialComplex link(Mask q) const;

    /// Subsets whose ground-complement is a non-face; an involution.
    /// Dual of the full simplex is void, dual of void is the full simplex.
    SimplicialComplex alexander_dual() const;

    /// Faces of cardinality <= k+1. Requires -1 <= k <= dimension().
    SimplicialComplex skeleton(int k) const;

    /// Inclusion-minimal non-faces, sorted. The void complex has {∅}; the
    /// full simplex has none.
    std::vector<Mask> minimal_nonfaces() const;

    /// A vertex contained in every facet, if one exists.
    std::optional<int> cone_apex() const;

    /// Connected components among the vertices of the complex.
    int connected_components() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.ground_ == b.ground_ && a.facets_ == b.facets_;
    }

private:
    SimplicialComplex(Mask ground, std::vector<Mask> facets);

    struct FaceCache {
        std::mutex mu;
        std::map<int, std::vector<Mask>> by_card;
        std::atomic<bool> dense_built{false};  // set after dense/compact_pos are filled
        std::vector<std::uint8_t> dense;       // indexed by compacted subset of ground
        std::vector<int> compact_pos;          // ground bit -> dense bit
    };

    bool dense_eligible() const { return ground_size() <= 20; }
    void ensure_dense(FaceCache& fc) const;
    Mask compact_mask(const FaceCache& fc, Mask m) const;
    Mask expand_mask(Mask compact) const;
    bool find_nonface_of_card(int k, Mask prefix, int min_vertex, Mask* out) const;

    Mask ground_ = 0;
    std::vector<Mask> facets_;
    std::shared_ptr<FaceCache> cache_;
};

/// Antichain normalization: sorted maximal elements of the given family.
std::vector<Mask> maximal_antichain(std::vector<Mask> sets);

}  // namespace enrhom
