#pragma once

#include <limits>
#include <map>
#include <optional>

#include "enrhom/homology.hpp"

namespace enrhom {

/// Full-table constructions enumerate all 2^n subsets; past this ground
/// size they refuse. Girth and codimension queries use early-exit
/// enumeration instead and are not capped.
inline constexpr int kTableGroundCap = 20;

struct SizeCapError : std::runtime_error {
    explicit SizeCapError(int n)
        : std::runtime_error("ground-set size " + std::to_string(n) + " exceeds the 2^n table cap of " +
                             std::to_string(kTableGroundCap)) {}
};

enum class TableKind { homology, cohomology };

/// Multigraded dimension table of an enriched module: only the nonzero
/// pieces are stored, keyed by the support subset.
struct SquarefreeTable {
    Mask ground = 0;
    int p = 0;
    TableKind kind = TableKind::homology;
    FieldSpec field = FieldSpec::rationals();
    std::map<Mask, int> dims;

    static constexpr int kInfiniteCodim = std::numeric_limits<int>::max();

    /// Dimension of the full-support piece; the module rank.
    int rank() const {
        auto it = dims.find(ground);
        return it == dims.end() ? 0 : it->second;
    }

    /// n minus the largest support size carrying a nonzero piece;
    /// kInfiniteCodim for the zero table.
    int codim() const {
        if (dims.empty()) return kInfiniteCodim;
        int best = -1;
        for (const auto& [mask, d] : dims)
            if (d > 0) best = std::max(best, bits::popcount(mask));
        return best < 0 ? kInfiniteCodim : bits::popcount(ground) - best;
    }

    friend bool operator==(const SquarefreeTable&, const SquarefreeTable&) = default;
};

/// Piece at R is dim H~_p of the restriction to R.
SquarefreeTable enriched_homology(const SimplicialComplex& k, int p, const FieldSpec& field,
                                  BettiCache& cache = BettiCache::global());

/// Piece at R is dim H~^{p-q} of the link of the complement Q, q = |Q|.
SquarefreeTable enriched_cohomology(const SimplicialComplex& k, int p, const FieldSpec& field,
                                    BettiCache& cache = BettiCache::global());

/// dims*[F] = dims[ground \ F]; an involution.
SquarefreeTable table_alexander_dual(const SquarefreeTable& t);

/// Smallest cardinality of R with nonzero top homology of the restriction
/// to R; ground size + 1 when the top module vanishes. Enumerates unions
/// of maximum-cardinality facets in increasing size with early exit (a
/// top-dimensional cycle lives on the union of its supporting facets).
int girth(const SimplicialComplex& k, const FieldSpec& field,
          BettiCache& cache = BettiCache::global());

/// H_{-1} is the module k exactly when every ground vertex is a vertex of
/// the complex; theorems carrying the "exception of H_{-1}" clause key on
/// this flag.
bool h_minus1_is_k(const SimplicialComplex& k);

/// True when some piece of H_p is nonzero; full scan, capped.
bool homology_module_nonzero(const SimplicialComplex& k, int p, const FieldSpec& field,
                             BettiCache& cache = BettiCache::global());

/// Checks codim H_p >= bound by scanning only supports larger than
/// ground - bound; uncapped. A violating support is reported if present.
bool homology_module_codim_at_least(const SimplicialComplex& k, int p, int bound,
                                    const FieldSpec& field, Mask* witness = nullptr,
                                    BettiCache& cache = BettiCache::global());

/// Number of indices i in [-1, limit_p] with H_i nonzero, skipping i = -1
/// when H_{-1} is the module k. Capped full scan.
int nonvanishing_module_count(const SimplicialComplex& k, int limit_p, const FieldSpec& field,
                              BettiCache& cache = BettiCache::global());

}  // namespace enrhom
