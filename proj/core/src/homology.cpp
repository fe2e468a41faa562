#include "enrhom/homology.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <string>
#include <unordered_map>

namespace enrhom {

namespace {

int face_index(const std::vector<Mask>& faces, Mask f) {
    auto it = std::lower_bound(faces.begin(), faces.end(), f);
    return static_cast<int>(it - faces.begin());
}

Rational sign_value(int j, const FieldSpec& field) {
    if (j % 2 == 0) return Rational(1);
    if (field.is_rational()) return Rational(-1);
    return Rational(static_cast<unsigned long>(field.modulus() - 1));
}

}  // namespace

ExactMatrix boundary_matrix(const SimplicialComplex& k, int i, const FieldSpec& field) {
    if (k.is_void()) throw VoidComplexError("boundary_matrix");
    const int dim = k.dimension();
    if (i < -1 || i > dim) throw std::out_of_range("boundary_matrix: index out of range");
    const auto& sources = k.faces_of_card(i + 1);
    if (i == -1) return ExactMatrix(0, static_cast<int>(sources.size()));
    const auto& targets = k.faces_of_card(i);
    ExactMatrix m(static_cast<int>(targets.size()), static_cast<int>(sources.size()));
    for (size_t c = 0; c < sources.size(); ++c) {
        const Mask f = sources[c];
        int j = 0;
        for (Mask t = f; t; t &= t - 1, ++j) {
            const Mask removed = t & (~t + 1);
            m.add_entry(static_cast<int>(c), face_index(targets, f & ~removed),
                        sign_value(j, field));
        }
    }
    return m;
}

BettiVector reduced_betti(const SimplicialComplex& k, const FieldSpec& field) {
    BettiVector b;
    b.field = field;
    if (k.is_void()) return b;
    const int dim = k.dimension();
    // betti[p] = dim ker d_p - rank d_{p+1}; ranks[p+1] = rank d_p
    std::vector<int> ranks(static_cast<size_t>(dim + 3), 0);
    for (int p = -1; p <= dim; ++p)
        ranks[static_cast<size_t>(p + 1)] = rank(boundary_matrix(k, p, field), field);
    b.dims.resize(static_cast<size_t>(dim + 2));
    for (int p = -1; p <= dim; ++p) {
        const int chains = static_cast<int>(k.faces_of_card(p + 1).size());
        b.dims[static_cast<size_t>(p + 1)] =
            chains - ranks[static_cast<size_t>(p + 1)] - ranks[static_cast<size_t>(p + 2)];
    }
    return b;
}

BettiVector reduced_cobetti(const SimplicialComplex& k, const FieldSpec& field) {
    BettiVector b;
    b.field = field;
    if (k.is_void()) return b;
    const int dim = k.dimension();
    b.dims.resize(static_cast<size_t>(dim + 2));
    for (int p = -1; p <= dim; ++p) {
        const int cochains = static_cast<int>(k.faces_of_card(p + 1).size());
        const int rank_up = p == dim ? 0 : rank(boundary_matrix(k, p + 1, field).transposed(), field);
        const int rank_down = rank(boundary_matrix(k, p, field).transposed(), field);
        b.dims[static_cast<size_t>(p + 1)] = cochains - rank_up - rank_down;
    }
    return b;
}

struct BettiCache::Impl {
    std::mutex mu;
    std::unordered_map<std::string, BettiVector> map;
};

std::shared_ptr<BettiCache::Impl> BettiCache::make_impl() { return std::make_shared<Impl>(); }

namespace {

// Canonical key: facets with labels compacted onto 0..s-1. Homology sees
// only the face family, never the ambient ground set.
std::string cache_key(const SimplicialComplex& k, const FieldSpec& field, char kind) {
    Mask support = 0;
    for (Mask f : k.facets()) support |= f;
    std::array<int, 64> pos{};
    int next = 0;
    for (Mask t = support; t; t &= t - 1) pos[static_cast<size_t>(std::countr_zero(t))] = next++;
    std::string key;
    key.reserve(2 + 5 + k.facets().size() * 8);
    key.push_back(kind);
    key.push_back(k.is_void() ? 'v' : (k.is_empty_simplex() ? 'e' : 'c'));
    const std::uint32_t fp = field.is_rational() ? 0 : field.modulus();
    key.append(reinterpret_cast<const char*>(&fp), sizeof fp);
    for (Mask f : k.facets()) {
        Mask cf = 0;
        for (Mask t = f; t; t &= t - 1)
            cf |= Mask{1} << pos[static_cast<size_t>(std::countr_zero(t))];
        key.append(reinterpret_cast<const char*>(&cf), sizeof cf);
    }
    return key;
}

}  // namespace

BettiVector BettiCache::betti(const SimplicialComplex& k, const FieldSpec& field) {
    const std::string key = cache_key(k, field, 'h');
    {
        std::lock_guard lock(impl_->mu);
        auto it = impl_->map.find(key);
        if (it != impl_->map.end()) return it->second;
    }
    BettiVector b = reduced_betti(k, field);
    std::lock_guard lock(impl_->mu);
    return impl_->map.emplace(std::move(key), std::move(b)).first->second;
}

BettiVector BettiCache::cobetti(const SimplicialComplex& k, const FieldSpec& field) {
    const std::string key = cache_key(k, field, 'H');
    {
        std::lock_guard lock(impl_->mu);
        auto it = impl_->map.find(key);
        if (it != impl_->map.end()) return it->second;
    }
    BettiVector b = reduced_cobetti(k, field);
    std::lock_guard lock(impl_->mu);
    return impl_->map.emplace(std::move(key), std::move(b)).first->second;
}

std::size_t BettiCache::size() const {
    std::lock_guard lock(impl_->mu);
    return impl_->map.size();
}

BettiCache& BettiCache::global() {
    static BettiCache cache;
    return cache;
}

namespace {

struct HomologyBasis {
    std::vector<Mask> faces;                      // p-faces of the complex
    std::vector<std::vector<Rational>> cycles;    // representatives
    ExactMatrix im_and_reps;                      // image columns then reps
    int image_rank = 0;
};

// Cycle representatives completing the boundary image to the full kernel:
// greedily keep the kernel vectors that grow the rank of [image | kernel].
HomologyBasis homology_basis(const SimplicialComplex& k, int p, const FieldSpec& field) {
    HomologyBasis out;
    if (k.is_void()) return out;
    const int dim = k.dimension();
    if (p < -1 || p > dim) return out;
    out.faces = k.faces_of_card(p + 1);
    const int chains = static_cast<int>(out.faces.size());
    const ExactMatrix d_p = boundary_matrix(k, p, field);
    const ExactMatrix d_up = p == dim ? ExactMatrix(chains, 0) : boundary_matrix(k, p + 1, field);
    const auto kernel = kernel_basis(d_p, field);
    out.image_rank = rank(d_up, field);

    ExactMatrix probe(chains, 0);
    probe.columns = d_up.columns;
    probe.cols = d_up.cols;
    int current = out.image_rank;
    for (const auto& vec : kernel) {
        ExactMatrix trial = probe;
        trial.columns.emplace_back();
        trial.cols += 1;
        for (int r = 0; r < chains; ++r)
            if (sgn(vec[static_cast<size_t>(r)]) != 0)
                trial.add_entry(trial.cols - 1, r, vec[static_cast<size_t>(r)]);
        const int r2 = rank(trial, field);
        if (r2 > current) {
            current = r2;
            probe = std::move(trial);
            out.cycles.push_back(vec);
        }
    }
    out.im_and_reps = std::move(probe);
    return out;
}

}  // namespace

InducedMap inclusion_induced_map(const SimplicialComplex& k, Mask r, int vertex, int p,
                                 const FieldSpec& field) {
    const Mask vbit = bits::vertex_bit(vertex);
    if ((r & vbit) != 0) throw std::invalid_argument("inclusion_induced_map: vertex already in R");
    if ((k.ground() & vbit) == 0)
        throw std::invalid_argument("inclusion_induced_map: vertex outside the ground set");
    const SimplicialComplex source = k.restriction(r);
    const SimplicialComplex target = k.restriction(r | vbit);

    HomologyBasis src = homology_basis(source, p, field);
    HomologyBasis tgt = homology_basis(target, p, field);

    InducedMap out;
    out.source_faces = src.faces;
    out.target_faces = tgt.faces;
    out.source_basis = src.cycles;
    out.target_basis = tgt.cycles;
    const int hs = static_cast<int>(src.cycles.size());
    const int ht = static_cast<int>(tgt.cycles.size());
    out.matrix = ExactMatrix(ht, hs);
    if (hs == 0 || tgt.faces.empty()) return out;

    for (int c = 0; c < hs; ++c) {
        // embed the source cycle into the target chain coordinates
        std::vector<Rational> embedded(tgt.faces.size(), Rational(0));
        for (size_t i = 0; i < src.faces.size(); ++i) {
            if (sgn(src.cycles[static_cast<size_t>(c)][i]) == 0) continue;
            embedded[static_cast<size_t>(face_index(tgt.faces, src.faces[i]))] =
                src.cycles[static_cast<size_t>(c)][i];
        }
        if (ht == 0) continue;
        const auto x = solve_consistent(tgt.im_and_reps, embedded, field);
        for (int h = 0; h < ht; ++h) {
            const Rational& coeff = x[static_cast<size_t>(tgt.image_rank + h)];
            if (sgn(coeff) != 0) out.matrix.add_entry(c, h, coeff);
        }
    }
    return out;
}

}  // namespace enrhom
