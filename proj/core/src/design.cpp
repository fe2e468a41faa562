#include "enrhom/design.hpp"

#include <algorithm>

namespace enrhom {

Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

namespace {

FVector from_mpz(const std::vector<Integer>& v, const std::string& op) {
    FVector f;
    f.counts.reserve(v.size());
    for (const auto& x : v) {
        if (!x.fits_slong_p()) throw std::overflow_error(op + ": coefficient exceeds int64");
        f.counts.push_back(x.get_si());
    }
    while (!f.counts.empty() && f.counts.back() == 0) f.counts.pop_back();
    return f;
}

FVector from_mpq(const std::vector<Rational>& v, const std::string& op) {
    std::vector<Integer> ints;
    ints.reserve(v.size());
    for (const auto& x : v) {
        if (x.get_den() != 1)
            throw NonIntegralError(op + ": coefficient " + x.get_str() + " is not an integer");
        ints.push_back(x.get_num());
    }
    return from_mpz(ints, op);
}

}  // namespace

FVector bicm_f_polynomial(int n, int d, int c) {
    if (!(0 <= c && c <= d && d <= n))
        throw std::invalid_argument("bicm_f_polynomial: need 0 <= c <= d <= n");
    // truncated binomial series of (1+t)^(n-d+c) up to t^c
    std::vector<Integer> poly;
    for (int i = 0; i <= c; ++i) poly.push_back(binomial(n - d + c, i));
    // multiply by (1+t)^(d-c)
    for (int step = 0; step < d - c; ++step) {
        std::vector<Integer> next(poly.size() + 1, Integer(0));
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] += poly[i];
        }
        poly = std::move(next);
    }
    return from_mpz(poly, "bicm_f_polynomial");
}

FVector f_shriek(const FVector& f, int n) {
    const int len = static_cast<int>(f.counts.size());
    if (n < len)
        throw std::invalid_argument("f_shriek: n must exceed the maximal face cardinality");
    std::vector<Rational> out(f.counts.size());
    for (int i = 0; i < len; ++i)
        out[static_cast<size_t>(i)] = Rational(n) * Rational(static_cast<long>(f.counts[static_cast<size_t>(i)])) / Rational(n - i);
    return from_mpq(out, "f_shriek");
}

FVector f_sharp(const FVector& f, int n) {
    std::vector<Rational> out(f.counts.size() + 1, Rational(0));
    out[0] = 1;
    for (size_t i = 0; i < f.counts.size(); ++i)
        out[i + 1] = Rational(n) * Rational(static_cast<long>(f.counts[i])) / Rational(static_cast<long>(i + 1));
    return from_mpq(out, "f_sharp");
}

FVector f_sharp_inverse(const FVector& f, int n) {
    if (n <= 0) throw std::invalid_argument("f_sharp_inverse: n must be positive");
    if (f.counts.empty()) return FVector{};
    std::vector<Rational> out;
    for (size_t i = 1; i < f.counts.size(); ++i)
        out.push_back(Rational(static_cast<long>(i)) * Rational(static_cast<long>(f.counts[i])) / Rational(n));
    return from_mpq(out, "f_sharp_inverse");
}

Rational lcm_design_lambda(int n, int d, int c, int l) {
    if (l < 1 || c < 0 || d < c || n < d)
        throw std::invalid_argument("lcm_design_lambda: parameter out of range");
    auto upper = [&]() -> Rational {
        const Integer denom = binomial(c, l - 1);
        if (sgn(denom) == 0)
            throw std::invalid_argument("lcm_design_lambda: binom(c, l-1) vanishes");
        return Rational(binomial(n - d + c + 1 - l, c + 1 - l)) * Rational(binomial(d, l - 1)) /
               Rational(denom);
    };
    auto lower = [&]() -> Rational {
        const Integer denom = binomial(n - d, l - 1 - c);
        if (sgn(denom) == 0)
            throw std::invalid_argument("lcm_design_lambda: binom(n-d, l-1-c) vanishes");
        return Rational(binomial(l - 1, c)) * Rational(binomial(d, l - 1)) / Rational(denom);
    };
    if (c == l - 1) {
        const Rational a = upper();
        const Rational b = lower();
        if (a != b)
            throw std::logic_error("lcm_design_lambda: branch mismatch at c = l-1");
        return a;
    }
    return c > l - 1 ? upper() : lower();
}

std::optional<long long> block_design_check(const SimplicialComplex& k, int t) {
    if (k.is_void()) throw VoidComplexError("block_design_check");
    const int d = k.cardinality_d();
    for (Mask f : k.facets())
        if (bits::popcount(f) != d)
            throw std::invalid_argument("block_design_check: complex is not pure");
    if (t < 0 || t > d) throw std::invalid_argument("block_design_check: need 0 <= t <= d");
    std::optional<long long> lambda;
    bool uniform = true;
    bits::for_each_subset_of_card(k.ground(), t, [&](Mask s) {
        if (!uniform) return;
        long long count = 0;
        for (Mask f : k.facets())
            if ((s & f) == s) ++count;
        if (!lambda) lambda = count;
        else if (*lambda != count) uniform = false;
    });
    if (!uniform) return std::nullopt;
    return lambda;
}

FVector link_fvector_prediction(int n, int d, int c, int l, int q) {
    if (l < 1 || q < 0 || q > l - 1)
        throw std::invalid_argument("link_fvector_prediction: need l >= 1 and 0 <= q <= l-1");
    FVector f = bicm_f_polynomial(n + 1 - l, d, c);
    // undelete l-1 vertices, then step down into q links
    for (int ground = n + 2 - l; ground <= n; ++ground) f = f_shriek(f, ground);
    for (int j = 0; j < q; ++j) f = f_sharp_inverse(f, n - j);
    return f;
}

}  // namespace enrhom
