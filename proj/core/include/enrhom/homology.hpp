#pragma once

#include <vector>

#include "enrhom/complex.hpp"
#include "enrhom/field.hpp"
#include "enrhom/matrix.hpp"

namespace enrhom {

/// Reduced (co)homology dimensions over a fixed field, indexed by
/// p = -1 .. dim. dims[0] holds H~_{-1}; entries outside the stored range
/// are zero. The void complex has an empty vector.
struct BettiVector {
    FieldSpec field = FieldSpec::rationals();
    std::vector<int> dims;

    int at(int p) const {
        const int idx = p + 1;
        if (idx < 0 || idx >= static_cast<int>(dims.size())) return 0;
        return dims[static_cast<size_t>(idx)];
    }

    int max_p() const { return static_cast<int>(dims.size()) - 2; }

    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Matrix of the boundary map from i-dimensional faces to (i-1)-dimensional
/// faces, with incidence sign (-1)^j when the j-th smallest vertex is
/// removed (j counted from 0). The map for i = 0 is the augmentation onto
/// the empty face. Requires -1 <= i <= dim.
ExactMatrix boundary_matrix(const SimplicialComplex& k, int i, const FieldSpec& field);

BettiVector reduced_betti(const SimplicialComplex& k, const FieldSpec& field);

/// Same dimensions over a field, computed through the transposed matrices
/// as an independent route.
BettiVector reduced_cobetti(const SimplicialComplex& k, const FieldSpec& field);

/// Process-wide memo of Betti vectors keyed by the label-compacted facet
/// family and the field. Concurrent insert-or-get; results are
/// deterministic so races are benign.
class BettiCache {
public:
    BettiVector betti(const SimplicialComplex& k, const FieldSpec& field);
    BettiVector cobetti(const SimplicialComplex& k, const FieldSpec& field);

    std::size_t size() const;
    static BettiCache& global();

private:
    struct Impl;
    std::shared_ptr<Impl> impl_ = make_impl();
    static std::shared_ptr<Impl> make_impl();
};

/// Matrix of H~_p(K_R) -> H~_p(K_{R+i}) induced by the chain-level
/// inclusion, together with the chosen cycle-representative bases.
/// Basis vectors are coordinates in the p-face lists, which are returned
/// alongside.
struct InducedMap {
    ExactMatrix matrix;  // target dim x source dim
    std::vector<Mask> source_faces;
    std::vector<Mask> target_faces;
    std::vector<std::vector<Rational>> source_basis;
    std::vector<std::vector<Rational>> target_basis;
};

/// Requires vertex i not in R and R + i inside the ground set.
InducedMap inclusion_induced_map(const SimplicialComplex& k, Mask r, int vertex, int p,
                                 const FieldSpec& field);

}  // namespace enrhom
