#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace enrhom {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime_u32(std::uint32_t n);

/// Coefficient field: the rationals or a prime field GF(p), p < 2^31.
/// Every homology dimension and classification verdict is relative to one
/// of these.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }

    static FieldSpec gf(std::uint32_t p) {
        if (p >= (1u << 31))
            throw std::invalid_argument("FieldSpec: modulus must be < 2^31");
        if (!is_prime_u32(p))
            throw std::invalid_argument("FieldSpec: modulus " + std::to_string(p) +
                                        " is not prime");
        return FieldSpec(p);
    }

    /// Accepts "q" or "gf:<p>".
    static FieldSpec parse(std::string_view s);

    bool is_rational() const { return p_ == 0; }

    std::uint32_t modulus() const {
        if (p_ == 0)
            throw std::logic_error("FieldSpec: rationals have no modulus");
        return p_;
    }

    std::string name() const {
        return p_ == 0 ? std::string("q") : "gf:" + std::to_string(p_);
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;  // 0 encodes the rationals
};

}  // namespace enrhom
