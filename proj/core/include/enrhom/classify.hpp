#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "enrhom/enriched.hpp"

namespace enrhom {

/// Subset and homological index pinpointing a failed criterion.
struct Witness {
    Mask subset = 0;
    int p = 0;
};

/// Raised when two provably equivalent classification routes disagree;
/// the most serious error class the tool can report.
struct RouteDisagreement : std::logic_error {
    RouteDisagreement(const std::string& predicate, const std::string& detail)
        : std::logic_error("route disagreement in " + predicate + ": " + detail) {}
};

/// Verdict of one predicate: the value, each evaluated route by name, an
/// optional violating witness and an optional convention branch that
/// bypassed the routes.
struct PredicateResult {
    bool value = false;
    std::vector<std::pair<std::string, bool>> routes;
    std::optional<Witness> witness;
    std::optional<std::string> convention;

    bool routes_agree() const {
        for (const auto& [name, v] : routes)
            if (v != value) return false;
        return true;
    }

    /// Value with route agreement enforced.
    bool checked(const std::string& predicate) const;
};

/// Cohen-Macaulay over the field: every face link has vanishing reduced
/// homology below its top dimension. Cross-checked against the
/// cohomology-module vanishing route and the restriction-codimension
/// route (both capped at 2^n enumeration size).
PredicateResult is_cm(const SimplicialComplex& k, const FieldSpec& field,
                      BettiCache& cache = BettiCache::global());

/// Deletions of fewer than l vertices stay CM of the same dimension;
/// cross-checked against codim H_{dim-i} >= (l-1)+i for i >= 1.
PredicateResult is_lcm(const SimplicialComplex& k, int l, const FieldSpec& field,
                       BettiCache& cache = BettiCache::global());

/// Largest l with is_lcm(k, l); 0 when not CM.
int lcm_level(const SimplicialComplex& k, const FieldSpec& field,
              BettiCache& cache = BettiCache::global(), int max_l = 64);

/// Link criterion restricted to non-empty faces; cross-checked against
/// the table form of the cohomology criterion.
PredicateResult is_buchsbaum(const SimplicialComplex& k, const FieldSpec& field,
                             BettiCache& cache = BettiCache::global());

/// CM with every face link's top reduced homology one-dimensional
/// (including the empty face, which rules out cones).
PredicateResult is_gorenstein_star(const SimplicialComplex& k, const FieldSpec& field,
                                   BettiCache& cache = BettiCache::global());

/// Connected, one-dimensional top homology, and every proper link
/// Gorenstein*. Requires dimension >= 1.
PredicateResult is_orientable_homology_manifold(const SimplicialComplex& k, const FieldSpec& field,
                                                BettiCache& cache = BettiCache::global());

/// Both the complex and its Alexander dual are CM. Cross-checked against
/// the count of non-vanishing homology modules (H_{-1} = k excepted).
/// Degenerate duals take documented convention branches: the full simplex
/// counts as bi-CM, the boundary of the full simplex does not.
PredicateResult is_bicm(const SimplicialComplex& k, const FieldSpec& field,
                        BettiCache& cache = BettiCache::global());

/// Every (l-1)-vertex deletion is bi-CM with unchanged dimension and
/// frame, and the complex is not a skeleton excluded by the definition;
/// cross-checked against l-CM + maximal girth + single non-vanishing
/// module below the top.
PredicateResult is_lcm_design(const SimplicialComplex& k, int l, const FieldSpec& field,
                              BettiCache& cache = BettiCache::global());

/// Every (lk B) - A with |A| = a, |B| = b is bi-CM with dimension and
/// frame reduced by b; cross-checked through the Alexander dual with the
/// roles of a and b swapped.
PredicateResult is_ab_design(const SimplicialComplex& k, int a, int b, const FieldSpec& field,
                             BettiCache& cache = BettiCache::global());

/// The three equivalent faces of the submaximal-d characterization, plus
/// the maximal-girth addendum.
struct SubmaximalReport {
    int l = 0;
    bool lcm_with_submaximal_d = false;   // homological route
    bool nonface_union_bound = false;     // |F u G| >= n+2-l for distinct minimal non-faces
    bool dual_facet_intersection = false; // c* = l-1 and dual facets meet in < l-1 vertices
    bool agree = false;
    // addendum, evaluated when the three-way condition holds
    std::optional<bool> girth_maximal;
    std::optional<bool> nonface_card_bound;
    std::optional<bool> dual_facet_card_bound;
    std::optional<bool> addendum_agree;
};

SubmaximalReport submaximal_d_checks(const SimplicialComplex& k, int l, const FieldSpec& field,
                                     BettiCache& cache = BettiCache::global());

/// One conjecture-scan hit: l-CM of maximal girth, not an excluded
/// skeleton, with frame c below l-1.
struct ConjectureCandidate {
    SimplicialComplex complex;
    int l = 0;
    int c = 0;
    int girth = 0;
};

std::vector<ConjectureCandidate> conjecture_scan(const std::vector<SimplicialComplex>& stream,
                                                 int l, const FieldSpec& field,
                                                 BettiCache& cache = BettiCache::global());

/// Streaming form: returns the candidate verdict for a single complex.
std::optional<ConjectureCandidate> conjecture_candidate(const SimplicialComplex& k, int l,
                                                        const FieldSpec& field,
                                                        BettiCache& cache = BettiCache::global());

/// The full ladder for one complex over one field. Table-backed verdicts
/// are skipped (with a reason) above the 2^n cap.
struct ClassificationReport {
    FieldSpec field = FieldSpec::rationals();
    int n = 0;
    int d = 0;
    int c = 0;
    int dim = -1;
    bool is_cm = false;
    int lcm_level = 0;
    bool is_buchsbaum = false;
    bool is_gorenstein_star = false;
    bool is_orientable_homology_manifold = false;
    std::optional<bool> is_bicm;
    int girth = 0;
    bool h_minus1_is_k = false;
    bool is_cone = false;
    std::map<std::string, Witness> witnesses;
    std::map<std::string, std::string> conventions;
    std::map<std::string, std::string> skipped;
};

struct ClassifyOptions {
    std::optional<int> max_l;
};

ClassificationReport classify(const SimplicialComplex& k, const FieldSpec& field,
                              const ClassifyOptions& options = {},
                              BettiCache& cache = BettiCache::global());

}  // namespace enrhom
