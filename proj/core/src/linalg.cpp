#include "enrhom/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>

namespace enrhom {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // deterministic Miller-Rabin below 3.2e9 with bases 2, 3, 5, 7
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t acc = 1;
        b %= n;
        while (e) {
            if (e & 1) acc = acc * b % n;
            b = b * b % n;
            e >>= 1;
        }
        return acc;
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

FieldSpec FieldSpec::parse(std::string_view s) {
    if (s == "q" || s == "Q") return rationals();
    if (s.rfind("gf:", 0) == 0) {
        const std::string num(s.substr(3));
        char* end = nullptr;
        unsigned long p = std::strtoul(num.c_str(), &end, 10);
        if (end == nullptr || *end != '\0' || num.empty())
            throw std::invalid_argument("FieldSpec: cannot parse modulus in '" + std::string(s) + "'");
        if (p >= (1ul << 31))
            throw std::invalid_argument("FieldSpec: modulus must be < 2^31");
        return gf(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("FieldSpec: expected 'q' or 'gf:<p>', got '" + std::string(s) + "'");
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.add_entry(i, i, Rational(1));
    return m;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols, rows);
    for (int c = 0; c < cols; ++c)
        for (const auto& [r, v] : columns[static_cast<size_t>(c)]) t.add_entry(r, c, v);
    return t;
}

namespace {

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1;
    b %= p;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return powmod_u64(a, p - 2, p); }

std::uint64_t rational_mod_p(const Rational& v, std::uint32_t p) {
    std::uint64_t num = mpz_fdiv_ui(mpq_numref(v.get_mpq_t()), p);
    std::uint64_t den = mpz_fdiv_ui(mpq_denref(v.get_mpq_t()), p);
    if (den == 0)
        throw std::domain_error("matrix entry has denominator divisible by the field characteristic");
    return num % p == 0 ? 0 : num % p * inv_mod(den % p, p) % p;
}

std::vector<std::vector<std::uint64_t>> dense_mod_p(const ExactMatrix& m, std::uint32_t p) {
    std::vector<std::vector<std::uint64_t>> a(static_cast<size_t>(m.rows),
                                              std::vector<std::uint64_t>(static_cast<size_t>(m.cols), 0));
    for (int c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.columns[static_cast<size_t>(c)])
            a[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                (a[static_cast<size_t>(r)][static_cast<size_t>(c)] + rational_mod_p(v, p)) % p;
    return a;
}

int rank_mod_p(std::vector<std::vector<std::uint64_t>> a, std::uint32_t p) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(a[static_cast<size_t>(r)], a[static_cast<size_t>(pr)]);
        const std::uint64_t inv = inv_mod(a[static_cast<size_t>(r)][static_cast<size_t>(col)], p);
        for (int i = r + 1; i < rows; ++i) {
            std::uint64_t f = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (f == 0) continue;
            f = f * inv % p;
            for (int j = col; j < cols; ++j) {
                std::uint64_t sub = f * a[static_cast<size_t>(r)][static_cast<size_t>(j)] % p;
                auto& x = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
                x = (x + p - sub) % p;
            }
        }
        ++r;
    }
    return r;
}

// Column-wise denominator clearing; rank is unchanged by scaling columns.
std::optional<std::vector<std::vector<long long>>> dense_integer_ll(const ExactMatrix& m) {
    std::vector<std::vector<long long>> a(static_cast<size_t>(m.rows),
                                          std::vector<long long>(static_cast<size_t>(m.cols), 0));
    for (int c = 0; c < m.cols; ++c) {
        Integer l(1);
        for (const auto& [r, v] : m.columns[static_cast<size_t>(c)])
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), mpq_denref(v.get_mpq_t()));
        for (const auto& [r, v] : m.columns[static_cast<size_t>(c)]) {
            Integer scaled = Integer(v.get_num()) * (l / Integer(v.get_den()));
            if (!scaled.fits_slong_p()) return std::nullopt;
            a[static_cast<size_t>(r)][static_cast<size_t>(c)] += scaled.get_si();
        }
    }
    return a;
}

std::vector<std::vector<Integer>> dense_integer_mpz(const ExactMatrix& m) {
    std::vector<std::vector<Integer>> a(static_cast<size_t>(m.rows),
                                        std::vector<Integer>(static_cast<size_t>(m.cols), Integer(0)));
    for (int c = 0; c < m.cols; ++c) {
        Integer l(1);
        for (const auto& [r, v] : m.columns[static_cast<size_t>(c)])
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), mpq_denref(v.get_mpq_t()));
        for (const auto& [r, v] : m.columns[static_cast<size_t>(c)])
            a[static_cast<size_t>(r)][static_cast<size_t>(c)] += Integer(v.get_num()) * (l / Integer(v.get_den()));
    }
    return a;
}

// One-step fraction-free (Bareiss) elimination over the integers. Returns
// the rank, or nullopt when an intermediate value leaves the int64 range.
std::optional<int> bareiss_rank_ll(std::vector<std::vector<long long>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    long long prev = 1;
    int r = 0;
    auto absll = [](long long x) { return x < 0 ? -x : x; };
    for (int col = 0; col < cols && r < rows; ++col) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            long long v = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (v == 0) continue;
            if (pr < 0 || absll(v) < absll(a[static_cast<size_t>(pr)][static_cast<size_t>(col)])) pr = i;
            if (absll(v) == 1) break;
        }
        if (pr < 0) continue;
        std::swap(a[static_cast<size_t>(r)], a[static_cast<size_t>(pr)]);
        const long long piv = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
        for (int i = r + 1; i < rows; ++i) {
            const long long aic = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
            for (int j = col + 1; j < cols; ++j) {
                __int128 num = static_cast<__int128>(piv) * a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                               static_cast<__int128>(aic) * a[static_cast<size_t>(r)][static_cast<size_t>(j)];
                if (num % prev != 0) return std::nullopt;
                __int128 q = num / prev;
                if (q > std::numeric_limits<long long>::max() || q < std::numeric_limits<long long>::min())
                    return std::nullopt;
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<long long>(q);
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(col)] = 0;
        }
        prev = piv;
        ++r;
    }
    return r;
}

std::optional<int> bareiss_rank_mpz(std::vector<std::vector<Integer>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    Integer prev(1);
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            const Integer& v = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (sgn(v) == 0) continue;
            if (pr < 0 || cmp(abs(v), abs(a[static_cast<size_t>(pr)][static_cast<size_t>(col)])) < 0) pr = i;
            if (abs(v) == 1) break;
        }
        if (pr < 0) continue;
        std::swap(a[static_cast<size_t>(r)], a[static_cast<size_t>(pr)]);
        const Integer piv = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
        for (int i = r + 1; i < rows; ++i) {
            const Integer aic = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
            for (int j = col + 1; j < cols; ++j) {
                Integer num = piv * a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                              aic * a[static_cast<size_t>(r)][static_cast<size_t>(j)];
                Integer q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (sgn(rem) != 0) return std::nullopt;
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = q;
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(col)] = 0;
        }
        prev = piv;
        ++r;
    }
    return r;
}

std::vector<std::vector<Rational>> dense_q(const ExactMatrix& m) {
    std::vector<std::vector<Rational>> a(static_cast<size_t>(m.rows),
                                         std::vector<Rational>(static_cast<size_t>(m.cols), Rational(0)));
    for (int c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.columns[static_cast<size_t>(c)])
            a[static_cast<size_t>(r)][static_cast<size_t>(c)] += v;
    return a;
}

int rank_q_gauss(std::vector<std::vector<Rational>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(a[static_cast<size_t>(i)][static_cast<size_t>(col)]) != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(a[static_cast<size_t>(r)], a[static_cast<size_t>(pr)]);
        for (int i = r + 1; i < rows; ++i) {
            if (sgn(a[static_cast<size_t>(i)][static_cast<size_t>(col)]) == 0) continue;
            Rational f = a[static_cast<size_t>(i)][static_cast<size_t>(col)] /
                         a[static_cast<size_t>(r)][static_cast<size_t>(col)];
            for (int j = col; j < cols; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * a[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
        ++r;
    }
    return r;
}

// Reduced row echelon form over an abstract field; returns pivot columns.
// Ops must provide: T, zero(), is_zero, add, sub, mul, div, from_rational.
template <typename Ops>
std::vector<int> rref(const Ops& ops, std::vector<std::vector<typename Ops::T>>& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!ops.is_zero(a[static_cast<size_t>(i)][static_cast<size_t>(col)])) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(a[static_cast<size_t>(r)], a[static_cast<size_t>(pr)]);
        const auto inv_piv = ops.div(ops.one(), a[static_cast<size_t>(r)][static_cast<size_t>(col)]);
        for (int j = col; j < cols; ++j)
            a[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                ops.mul(a[static_cast<size_t>(r)][static_cast<size_t>(j)], inv_piv);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const auto f = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (ops.is_zero(f)) continue;
            for (int j = col; j < cols; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    ops.sub(a[static_cast<size_t>(i)][static_cast<size_t>(j)],
                            ops.mul(f, a[static_cast<size_t>(r)][static_cast<size_t>(j)]));
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

struct QOps {
    using T = Rational;
    T one() const { return Rational(1); }
    bool is_zero(const T& x) const { return sgn(x) == 0; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T div(const T& a, const T& b) const { return a / b; }
    T neg(const T& a) const { return -a; }
    T from_rational(const Rational& v) const { return v; }
    Rational to_rational(const T& v) const { return v; }
};

struct ZpOps {
    std::uint32_t p;
    using T = std::uint64_t;
    T one() const { return 1; }
    bool is_zero(const T& x) const { return x % p == 0; }
    T add(const T& a, const T& b) const { return (a % p + b % p) % p; }
    T sub(const T& a, const T& b) const { return (a % p + p - b % p) % p; }
    T mul(const T& a, const T& b) const { return a % p * (b % p) % p; }
    T div(const T& a, const T& b) const { return mul(a, inv_mod(b % p, p)); }
    T neg(const T& a) const { return (p - a % p) % p; }
    T from_rational(const Rational& v) const { return rational_mod_p(v, p); }
    Rational to_rational(const T& v) const { return Rational(static_cast<unsigned long>(v % p)); }
};

template <typename Ops>
std::vector<std::vector<typename Ops::T>> dense_for(const Ops& ops, const ExactMatrix& m) {
    std::vector<std::vector<typename Ops::T>> a(
        static_cast<size_t>(m.rows),
        std::vector<typename Ops::T>(static_cast<size_t>(m.cols), typename Ops::T{}));
    for (int c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.columns[static_cast<size_t>(c)]) {
            auto& slot = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
            slot = ops.add(slot, ops.from_rational(v));
        }
    return a;
}

template <typename Ops>
std::vector<std::vector<Rational>> kernel_basis_impl(const Ops& ops, const ExactMatrix& m) {
    auto a = dense_for(ops, m);
    const std::vector<int> pivots = rref(ops, a);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int pc : pivots) is_pivot[static_cast<size_t>(pc)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[static_cast<size_t>(fc)]) continue;
        std::vector<Rational> x(static_cast<size_t>(m.cols), Rational(0));
        x[static_cast<size_t>(fc)] = Rational(1);
        for (size_t k = 0; k < pivots.size(); ++k) {
            const auto& coeff = a[k][static_cast<size_t>(fc)];
            x[static_cast<size_t>(pivots[k])] = ops.to_rational(ops.neg(coeff));
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

template <typename Ops>
std::vector<Rational> solve_impl(const Ops& ops, const ExactMatrix& m,
                                 const std::vector<Rational>& b) {
    auto a = dense_for(ops, m);
    for (int i = 0; i < m.rows; ++i)
        a[static_cast<size_t>(i)].push_back(ops.from_rational(b[static_cast<size_t>(i)]));
    const std::vector<int> pivots = rref(ops, a);
    if (!pivots.empty() && pivots.back() == m.cols)
        throw std::logic_error("solve_consistent: inconsistent system");
    std::vector<Rational> x(static_cast<size_t>(m.cols), Rational(0));
    for (size_t k = 0; k < pivots.size(); ++k)
        x[static_cast<size_t>(pivots[k])] = ops.to_rational(a[k][static_cast<size_t>(m.cols)]);
    return x;
}

}  // namespace

int rank(const ExactMatrix& m, const FieldSpec& field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (!field.is_rational()) return rank_mod_p(dense_mod_p(m, field.modulus()), field.modulus());
    if (auto ll = dense_integer_ll(m)) {
        if (auto r = bareiss_rank_ll(std::move(*ll))) return *r;
    }
    if (auto r = bareiss_rank_mpz(dense_integer_mpz(m))) return *r;
    return rank_q_gauss(dense_q(m));
}

std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m, const FieldSpec& field) {
    if (m.cols == 0) return {};
    if (m.rows == 0) {
        std::vector<std::vector<Rational>> basis;
        for (int c = 0; c < m.cols; ++c) {
            std::vector<Rational> x(static_cast<size_t>(m.cols), Rational(0));
            x[static_cast<size_t>(c)] = Rational(1);
            basis.push_back(std::move(x));
        }
        return basis;
    }
    if (field.is_rational()) return kernel_basis_impl(QOps{}, m);
    return kernel_basis_impl(ZpOps{field.modulus()}, m);
}

std::vector<Rational> solve_consistent(const ExactMatrix& m, const std::vector<Rational>& b,
                                       const FieldSpec& field) {
    if (static_cast<int>(b.size()) != m.rows)
        throw std::invalid_argument("solve_consistent: rhs size mismatch");
    if (m.rows == 0) return std::vector<Rational>(static_cast<size_t>(m.cols), Rational(0));
    if (field.is_rational()) return solve_impl(QOps{}, m, b);
    return solve_impl(ZpOps{field.modulus()}, m, b);
}

}  // namespace enrhom
