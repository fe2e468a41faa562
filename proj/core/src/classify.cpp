#include "enrhom/classify.hpp"

#include <algorithm>
#include <sstream>

namespace enrhom {

namespace {

bool table_capped(const SimplicialComplex& k) { return k.ground_size() > kTableGroundCap; }

// Hochster link criterion: reduced homology of every face link vanishes
// strictly below the complementary top dimension.
bool cm_link_route(const SimplicialComplex& k, const FieldSpec& field, BettiCache& cache,
                   Witness* witness = nullptr) {
    const int dim = k.dimension();
    for (Mask r : k.all_faces()) {
        const int rc = bits::popcount(r);
        if (dim - rc <= -1) continue;
        const BettiVector link_betti = cache.betti(k.link(r), field);
        for (int p = -1; p + rc < dim; ++p) {
            if (link_betti.at(p) != 0) {
                if (witness) *witness = Witness{r, p};
                return false;
            }
        }
    }
    return true;
}

// Cohomology-module route: every module below the top vanishes, piece by
// piece over all supports.
bool cm_cohomology_route(const SimplicialComplex& k, const FieldSpec& field, BettiCache& cache) {
    const int dim = k.dimension();
    const Mask ground = k.ground();
    for (int p = -1; p < dim; ++p) {
        bool bad = false;
        for (int card = 0; card <= k.ground_size() && !bad; ++card) {
            bits::for_each_subset_of_card(ground, card, [&](Mask r) {
                if (bad) return;
                const Mask q = ground & ~r;
                if (cache.cobetti(k.link(q), field).at(p - bits::popcount(q)) != 0) bad = true;
            });
        }
        if (bad) return false;
    }
    return true;
}

// Restriction route: codim H_{dim-i} >= i for every i >= 1.
bool cm_codim_route(const SimplicialComplex& k, const FieldSpec& field, BettiCache& cache) {
    const int dim = k.dimension();
    for (int i = 1; i <= dim + 1; ++i)
        if (!homology_module_codim_at_least(k, dim - i, i, field, nullptr, cache)) return false;
    return true;
}

bool buchsbaum_link_route(const SimplicialComplex& k, const FieldSpec& field, BettiCache& cache,
                          Witness* witness = nullptr) {
    const int dim = k.dimension();
    for (Mask r : k.all_faces()) {
        if (r == 0) continue;
        const int rc = bits::popcount(r);
        if (dim - rc <= -1) continue;
        const BettiVector link_betti = cache.betti(k.link(r), field);
        for (int p = -1; p + rc < dim; ++p) {
            if (link_betti.at(p) != 0) {
                if (witness) *witness = Witness{r, p};
                return false;
            }
        }
    }
    return true;
}

// Table form: below the top, pieces vanish away from full support and the
// full-support piece is the reduced cohomology of the complex itself.
bool buchsbaum_table_route(const SimplicialComplex& k, const FieldSpec& field, BettiCache& cache) {
    const int dim = k.dimension();
    const Mask ground = k.ground();
    for (int p = -1; p < dim; ++p) {
        bool bad = false;
        for (int card = 0; card < k.ground_size() && !bad; ++card) {
            bits::for_each_subset_of_card(ground, card, [&](Mask r) {
                if (bad) return;
                const Mask q = ground & ~r;
                if (cache.cobetti(k.link(q), field).at(p - bits::popcount(q)) != 0) bad = true;
            });
        }
        if (bad) return false;
    }
    return true;
}

// Criterion valid for any non-void complex, including the empty simplex
// (which satisfies it); used directly by the manifold predicate.
bool gorenstein_star_raw(const SimplicialComplex& k, const FieldSpec& field, BettiCache& cache,
                         Witness* witness = nullptr) {
    if (!cm_link_route(k, field, cache, witness)) return false;
    const int dim = k.dimension();
    for (Mask r : k.all_faces()) {
        const int rc = bits::popcount(r);
        if (cache.betti(k.link(r), field).at(dim - rc) != 1) {
            if (witness) *witness = Witness{r, dim - rc};
            return false;
        }
    }
    return true;
}

bool is_complete_skeleton(const SimplicialComplex& k) {
    if (k.is_void()) return false;
    const int d = k.cardinality_d();
    Integer expected;
    mpz_bin_uiui(expected.get_mpz_t(), static_cast<unsigned long>(k.ground_size()),
                 static_cast<unsigned long>(d));
    if (!expected.fits_slong_p()) return false;
    for (Mask f : k.facets())
        if (bits::popcount(f) != d) return false;
    return static_cast<long long>(k.facets().size()) == expected.get_si();
}

}  // namespace

bool PredicateResult::checked(const std::string& predicate) const {
    if (!routes_agree()) {
        std::ostringstream os;
        for (const auto& [name, v] : routes) os << ' ' << name << '=' << (v ? "true" : "false");
        throw RouteDisagreement(predicate, "value=" + std::string(value ? "true" : "false") +
                                               " routes:" + os.str());
    }
    return value;
}

PredicateResult is_cm(const SimplicialComplex& k, const FieldSpec& field, BettiCache& cache) {
    if (k.is_void()) throw VoidComplexError("is_cm");
    PredicateResult res;
    Witness w;
    res.value = cm_link_route(k, field, cache, &w);
    if (!res.value) res.witness = w;
    res.routes.emplace_back("link", res.value);
    if (!table_capped(k)) {
        res.routes.emplace_back("cohomology_vanishing", cm_cohomology_route(k, field, cache));
        res.routes.emplace_back("homology_codimension", cm_codim_route(k, field, cache));
    }
    return res;
}

PredicateResult is_lcm(const SimplicialComplex& k, int l, const FieldSpec& field,
                       BettiCache& cache) {
    if (k.is_void()) throw VoidComplexError("is_lcm");
    if (l < 1) throw std::invalid_argument("is_lcm: l must be >= 1");
    PredicateResult res;
    const int dim = k.dimension();
    bool def = true;
    Witness w;
    for (int card = 0; card <= l - 1 && def; ++card) {
        if (card > k.ground_size()) break;
        bits::for_each_subset_of_card(k.ground(), card, [&](Mask r) {
            if (!def) return;
            const SimplicialComplex del = k.deletion(r);
            if (del.is_void() || del.dimension() != dim || !cm_link_route(del, field, cache)) {
                def = false;
                w = Witness{r, 0};
            }
        });
    }
    res.value = def;
    if (!def) res.witness = w;
    res.routes.emplace_back("deletion_definition", def);
    if (!table_capped(k)) {
        bool codim_ok = true;
        for (int i = 1; i <= dim + 1 && codim_ok; ++i)
            codim_ok = homology_module_codim_at_least(k, dim - i, (l - 1) + i, field, nullptr, cache);
        res.routes.emplace_back("codimension_bound", codim_ok);
    }
    return res;
}

int lcm_level(const SimplicialComplex& k, const FieldSpec& field, BettiCache& cache, int max_l) {
    if (k.is_void()) throw VoidComplexError("lcm_level");
    const int cap = std::min(max_l, k.ground_size() + 1);
    int level = 0;
    for (int l = 1; l <= cap; ++l) {
        if (!is_lcm(k, l, field, cache).checked("is_lcm")) break;
        level = l;
    }
    return level;
}

PredicateResult is_buchsbaum(const SimplicialComplex& k, const FieldSpec& field,
                             BettiCache& cache) {
    if (k.is_void()) throw VoidComplexError("is_buchsbaum");
    PredicateResult res;
    Witness w;
    res.value = buchsbaum_link_route(k, field, cache, &w);
    if (!res.value) res.witness = w;
    res.routes.emplace_back("link", res.value);
    if (!table_capped(k))
        res.routes.emplace_back("cohomology_table", buchsbaum_table_route(k, field, cache));
    return res;
}

PredicateResult is_gorenstein_star(const SimplicialComplex& k, const FieldSpec& field,
                                   BettiCache& cache) {
    if (k.is_void()) throw VoidComplexError("is_gorenstein_star");
    PredicateResult res;
    if (k.is_empty_simplex()) {
        res.value = false;
        res.convention = "empty_simplex_excluded";
        return res;
    }
    Witness w;
    res.value = gorenstein_star_raw(k, field, cache, &w);
    if (!res.value) res.witness = w;
    res.routes.emplace_back("link_criterion", res.value);
    return res;
}

PredicateResult is_orientable_homology_manifold(const SimplicialComplex& k,
                                                const FieldSpec& field, BettiCache& cache) {
    if (k.is_void()) throw VoidComplexError("is_orientable_homology_manifold");
    PredicateResult res;
    if (k.dimension() < 1) {
        res.value = false;
        res.convention = "dimension_below_one";
        return res;
    }
    const int dim = k.dimension();
    const BettiVector b = cache.betti(k, field);
    if (b.at(0) != 0) {
        res.value = false;
        res.witness = Witness{0, 0};
        res.routes.emplace_back("link_criterion", false);
        return res;
    }
    if (b.at(dim) != 1) {
        res.value = false;
        res.witness = Witness{k.ground(), dim};
        res.routes.emplace_back("link_criterion", false);
        return res;
    }
    for (Mask q : k.all_faces()) {
        if (q == 0) continue;
        Witness w;
        if (!gorenstein_star_raw(k.link(q), field, cache, &w)) {
            res.value = false;
            res.witness = Witness{q, w.p};
            res.routes.emplace_back("link_criterion", false);
            return res;
        }
    }
    res.value = true;
    res.routes.emplace_back("link_criterion", true);
    return res;
}

PredicateResult is_bicm(const SimplicialComplex& k, const FieldSpec& field, BettiCache& cache) {
    if (k.is_void()) throw VoidComplexError("is_bicm");
    PredicateResult res;
    if (k.is_full_simplex()) {
        res.value = true;
        res.convention = "full_simplex_dual_void";
        return res;
    }
    const SimplicialComplex dual = k.alexander_dual();
    if (dual.is_empty_simplex()) {
        res.value = false;
        res.convention = "dual_empty_simplex";
        return res;
    }
    // proper complete skeleta of the ground simplex are excluded by
    // convention, keeping bi-CM aligned with the 1-design hierarchy (the
    // tree characterization of bi-CM graphs pins the complete graphs)
    if (is_complete_skeleton(k)) {
        res.value = false;
        res.convention = "complete_skeleton";
        return res;
    }
    Witness w;
    const bool self_cm = cm_link_route(k, field, cache, &w);
    if (!self_cm) res.witness = w;
    bool dual_cm = false;
    if (self_cm) {
        Witness dw;
        dual_cm = cm_link_route(dual, field, cache, &dw);
        if (!dual_cm) res.witness = dw;
    }
    res.value = self_cm && dual_cm;
    res.routes.emplace_back("dual_cm", res.value);
    if (!table_capped(k)) {
        const int count = nonvanishing_module_count(k, k.dimension(), field, cache);
        res.routes.emplace_back("single_module", self_cm && count <= 1);
    }
    return res;
}

PredicateResult is_lcm_design(const SimplicialComplex& k, int l, const FieldSpec& field,
                              BettiCache& cache) {
    if (k.is_void()) throw VoidComplexError("is_lcm_design");
    if (l < 1) throw std::invalid_argument("is_lcm_design: l must be >= 1");
    PredicateResult res;
    // the design theory assumes a complex that is neither empty nor too
    // small to delete l-1 vertices from
    if (k.is_empty_simplex()) {
        res.value = false;
        res.convention = "empty_simplex_excluded";
        return res;
    }
    if (l - 1 > k.ground_size()) {
        res.value = false;
        res.convention = "l_exceeds_ground";
        return res;
    }
    const int dim = k.dimension();
    const int d = k.cardinality_d();
    const int c = k.frame_c();
    const int g = k.ground_size();

    bool def = true;
    Witness w;
    // excluded skeleta: complete (g-p)-skeletons with p > l
    if (is_complete_skeleton(k) && g - d + 1 > l) {
        def = false;
        w = Witness{k.ground(), 0};
        res.convention = "excluded_skeleton";
    }
    if (def && l - 1 <= g) {
        bits::for_each_subset_of_card(k.ground(), l - 1, [&](Mask r) {
            if (!def) return;
            const SimplicialComplex del = k.deletion(r);
            bool ok = !del.is_void() && del.dimension() == dim;
            if (ok) {
                PredicateResult sub = is_bicm(del, field, cache);
                ok = sub.checked("is_bicm(deletion)");
            }
            if (ok) ok = del.frame_c() == c;
            if (!ok) {
                def = false;
                w = Witness{r, 0};
            }
        });
    }
    res.value = def;
    if (!def && !res.witness) res.witness = w;
    res.routes.emplace_back("deletion_definition", def);

    if (!table_capped(k)) {
        bool characterization = is_lcm(k, l, field, cache).checked("is_lcm");
        if (characterization) characterization = girth(k, field, cache) == g + 2 - l;
        if (characterization)
            characterization = nonvanishing_module_count(k, dim - 1, field, cache) <= 1;
        res.routes.emplace_back("girth_vanishing", characterization);
    }
    return res;
}

namespace {

struct AbDefinition {
    bool value = false;
    bool accepted_full_simplex = false;  // some qualifying sub was a full simplex
    bool rejected_for_void = false;      // the deciding failure was a void link
};

AbDefinition ab_definition(const SimplicialComplex& k, int a, int b, const FieldSpec& field,
                           BettiCache& cache, Witness* witness) {
    AbDefinition out;
    if (k.is_void()) return out;
    const int dim = k.dimension();
    const int c = k.frame_c();
    bool ok = true;
    bits::for_each_subset_of_card(k.ground(), b, [&](Mask bset) {
        if (!ok) return;
        const SimplicialComplex lk = k.link(bset);
        bits::for_each_subset_of_card(k.ground() & ~bset, a, [&](Mask aset) {
            if (!ok) return;
            const SimplicialComplex sub = lk.deletion(aset);
            bool good = !sub.is_void() && sub.dimension() == dim - b;
            if (good) good = is_bicm(sub, field, cache).checked("is_bicm(ab)");
            if (good) good = sub.frame_c() == c - b;
            if (!good) {
                ok = false;
                out.rejected_for_void = sub.is_void();
                if (witness) *witness = Witness{bset | aset, 0};
            } else if (sub.is_full_simplex()) {
                out.accepted_full_simplex = true;
            }
        });
    });
    out.value = ok;
    return out;
}

}  // namespace

PredicateResult is_ab_design(const SimplicialComplex& k, int a, int b, const FieldSpec& field,
                             BettiCache& cache) {
    if (k.is_void()) throw VoidComplexError("is_ab_design");
    if (a < 0 || b < 0 || a + b > k.ground_size())
        throw std::invalid_argument("is_ab_design: need a, b >= 0 and a + b <= n");
    PredicateResult res;
    Witness w;
    const AbDefinition primal = ab_definition(k, a, b, field, cache, &w);
    res.value = primal.value;
    if (!res.value) res.witness = w;
    res.routes.emplace_back("definition", res.value);
    // the dual of (lk B) - A is (lk A) - B in the dual complex; for
    // non-degenerate subcomplexes the dual route's conditions are
    // equivalent, but a full-simplex sub dualizes to a void one, so those
    // pairs fall outside the cross-check
    const SimplicialComplex dual = k.alexander_dual();
    if (k.is_empty_simplex() || dual.is_void() || dual.is_empty_simplex()) {
        res.convention = "degenerate_dual_pair";
        return res;
    }
    const AbDefinition swapped = ab_definition(dual, b, a, field, cache, nullptr);
    if (swapped.value != primal.value &&
        ((primal.value && primal.accepted_full_simplex && swapped.rejected_for_void) ||
         (swapped.value && swapped.accepted_full_simplex && primal.rejected_for_void))) {
        res.convention = "degenerate_subcomplexes";
        return res;
    }
    res.routes.emplace_back("dual_swapped", swapped.value);
    return res;
}

SubmaximalReport submaximal_d_checks(const SimplicialComplex& k, int l, const FieldSpec& field,
                                     BettiCache& cache) {
    if (k.is_void()) throw VoidComplexError("submaximal_d_checks");
    if (l < 1) throw std::invalid_argument("submaximal_d_checks: l must be >= 1");
    SubmaximalReport rep;
    rep.l = l;
    const int g = k.ground_size();
    const int d = k.cardinality_d();
    const bool submax = d == g - l;

    rep.lcm_with_submaximal_d = submax && is_lcm(k, l, field, cache).checked("is_lcm");

    const auto nonfaces = k.minimal_nonfaces();
    bool unions_ok = true;
    for (size_t i = 0; i < nonfaces.size() && unions_ok; ++i)
        for (size_t j = i + 1; j < nonfaces.size() && unions_ok; ++j)
            if (bits::popcount(nonfaces[i] | nonfaces[j]) < g + 2 - l) unions_ok = false;
    rep.nonface_union_bound = submax && unions_ok;

    const SimplicialComplex dual = k.alexander_dual();
    bool dual_ok = false;
    if (!dual.is_void()) {
        dual_ok = dual.frame_c() == l - 1;
        const auto& dfacets = dual.facets();
        for (size_t i = 0; i < dfacets.size() && dual_ok; ++i)
            for (size_t j = i + 1; j < dfacets.size() && dual_ok; ++j)
                if (bits::popcount(dfacets[i] & dfacets[j]) >= l - 1) dual_ok = false;
    }
    rep.dual_facet_intersection = dual_ok;

    rep.agree = rep.lcm_with_submaximal_d == rep.nonface_union_bound &&
                rep.nonface_union_bound == rep.dual_facet_intersection;

    if (rep.lcm_with_submaximal_d) {
        rep.girth_maximal = girth(k, field, cache) == g + 2 - l;
        bool card_ok = true;
        for (Mask nf : nonfaces)
            if (bits::popcount(nf) > g - l) card_ok = false;
        rep.nonface_card_bound = card_ok;
        bool dual_card_ok = !dual.is_void();
        for (Mask f : dual.facets())
            if (bits::popcount(f) < l) dual_card_ok = false;
        rep.dual_facet_card_bound = dual_card_ok;
        rep.addendum_agree = *rep.girth_maximal == *rep.nonface_card_bound &&
                             *rep.nonface_card_bound == *rep.dual_facet_card_bound;
    }
    return rep;
}

std::optional<ConjectureCandidate> conjecture_candidate(const SimplicialComplex& k, int l,
                                                        const FieldSpec& field,
                                                        BettiCache& cache) {
    if (k.is_void() || k.is_empty_simplex()) return std::nullopt;
    const int g = k.ground_size();
    if (!is_lcm(k, l, field, cache).checked("is_lcm")) return std::nullopt;
    const int gr = girth(k, field, cache);
    if (gr != g + 2 - l) return std::nullopt;
    // skip the r-skeleton of the (l+r-1)-simplex, r = g - l
    if (is_complete_skeleton(k) && k.cardinality_d() == g - l + 1) return std::nullopt;
    const int c = k.frame_c();
    if (c >= l - 1) return std::nullopt;
    return ConjectureCandidate{k, l, c, gr};
}

std::vector<ConjectureCandidate> conjecture_scan(const std::vector<SimplicialComplex>& stream,
                                                 int l, const FieldSpec& field,
                                                 BettiCache& cache) {
    std::vector<ConjectureCandidate> out;
    for (const auto& k : stream)
        if (auto cand = conjecture_candidate(k, l, field, cache)) out.push_back(std::move(*cand));
    return out;
}

ClassificationReport classify(const SimplicialComplex& k, const FieldSpec& field,
                              const ClassifyOptions& options, BettiCache& cache) {
    if (k.is_void()) throw VoidComplexError("classify");
    ClassificationReport rep;
    rep.field = field;
    rep.n = k.ground_size();
    rep.d = k.cardinality_d();
    rep.dim = rep.d - 1;
    rep.c = k.frame_c();
    rep.girth = girth(k, field, cache);
    rep.h_minus1_is_k = h_minus1_is_k(k);
    rep.is_cone = k.cone_apex().has_value();

    const PredicateResult cm = is_cm(k, field, cache);
    rep.is_cm = cm.checked("is_cm");
    if (cm.witness) rep.witnesses["cm"] = *cm.witness;

    rep.lcm_level = lcm_level(k, field, cache, options.max_l.value_or(64));
    if ((rep.lcm_level >= 1) != rep.is_cm)
        throw RouteDisagreement("lcm_level", "lcm_level and is_cm are inconsistent");

    const PredicateResult bb = is_buchsbaum(k, field, cache);
    rep.is_buchsbaum = bb.checked("is_buchsbaum");
    if (bb.witness) rep.witnesses["buchsbaum"] = *bb.witness;
    if (rep.is_cm && !rep.is_buchsbaum)
        throw RouteDisagreement("is_buchsbaum", "CM complex reported non-Buchsbaum");

    const PredicateResult gor = is_gorenstein_star(k, field, cache);
    rep.is_gorenstein_star = gor.value;
    if (gor.witness) rep.witnesses["gorenstein_star"] = *gor.witness;
    if (gor.convention) rep.conventions["gorenstein_star"] = *gor.convention;
    if (rep.is_gorenstein_star && !rep.is_cm)
        throw RouteDisagreement("is_gorenstein_star", "Gorenstein* complex reported non-CM");

    const PredicateResult mani = is_orientable_homology_manifold(k, field, cache);
    rep.is_orientable_homology_manifold = mani.value;
    if (mani.witness) rep.witnesses["manifold"] = *mani.witness;
    if (mani.convention) rep.conventions["manifold"] = *mani.convention;

    if (table_capped(k) && !k.is_full_simplex()) {
        rep.skipped["is_bicm"] = "size cap";
    } else {
        const PredicateResult bi = is_bicm(k, field, cache);
        rep.is_bicm = bi.checked("is_bicm");
        if (bi.witness) rep.witnesses["bicm"] = *bi.witness;
        if (bi.convention) rep.conventions["bicm"] = *bi.convention;
    }
    return rep;
}

}  // namespace enrhom
