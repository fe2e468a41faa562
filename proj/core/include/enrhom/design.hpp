#pragma once

#include <optional>

#include "enrhom/complex.hpp"
#include "enrhom/field.hpp"

namespace enrhom {

struct NonIntegralError : std::domain_error {
    explicit NonIntegralError(const std::string& what) : std::domain_error(what) {}
};

/// f-vector of a bi-CM complex with n vertices, facet cardinality d and
/// frame c: the expansion of
///   (1+t)^(d-c) * (1 + (n-d+c) t + ... + binom(n-d+c, c) t^c).
/// Degenerate complexes (missing vertices, the empty simplex) reach c = 0
/// or d = 0, so the domain is 0 <= c <= d <= n.
FVector bicm_f_polynomial(int n, int d, int c);

/// f-vector of a complex on n vertices whose one-vertex deletions all
/// share the f-vector f: entry i becomes n/(n-i) * f_{i-1}. Throws
/// NonIntegralError when a coefficient fails to divide.
FVector f_shriek(const FVector& f, int n);

/// f-vector of a complex on n vertices whose vertex links all share the
/// f-vector f: 1 + n * sum f_{i-1}/(i+1) t^{i+1}.
FVector f_sharp(const FVector& f, int n);

/// Derivative of the f-polynomial divided by the vertex count; inverts
/// f_sharp and steps from a complex to its common vertex-link f-vector.
FVector f_sharp_inverse(const FVector& f, int n);

/// Block-design lambda of an l-CM design with invariants (n, d, c):
///   binom(n-d+c+1-l, c+1-l) * binom(c, l-1)^-1 * binom(d, l-1)  (c >= l-1)
///   binom(n-d, l-1-c)^-1 * binom(l-1, c) * binom(d, l-1)        (c <= l-1)
/// Both branches are evaluated at c = l-1 and must agree. Non-integral
/// output is meaningful: no such design exists.
Rational lcm_design_lambda(int n, int d, int c, int l);

/// lambda if every t-subset of the ground set lies in the same number of
/// facets, otherwise nothing. The complex must be pure.
std::optional<long long> block_design_check(const SimplicialComplex& k, int t);

/// Predicted f-vector of the link of a q-set in an l-CM design with
/// invariants (n, d, c): the bi-CM base f-vector for (n+1-l, d, c) pushed
/// up through l-1 one-vertex undeletion steps and then down through q
/// link steps, exact rational arithmetic throughout. Requires q <= l-1.
FVector link_fvector_prediction(int n, int d, int c, int l, int q);

Integer binomial(long long n, long long k);

}  // namespace enrhom
