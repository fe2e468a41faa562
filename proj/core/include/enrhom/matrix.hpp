#pragma once

#include <utility>
#include <vector>

#include "enrhom/field.hpp"

namespace enrhom {

/// Exact matrix stored as sparse columns of (row, value) pairs.
/// Boundary matrices have at most d nonzeros per column, so column lists
/// stay tiny even when the face counts grow combinatorially.
struct ExactMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, Rational>>> columns;

    ExactMatrix() = default;
    ExactMatrix(int r, int c) : rows(r), cols(c), columns(static_cast<size_t>(c)) {}

    static ExactMatrix identity(int n);

    void add_entry(int col, int row, Rational v) {
        columns[static_cast<size_t>(col)].emplace_back(row, std::move(v));
    }

    ExactMatrix transposed() const;

    std::size_t nonzeros() const {
        std::size_t s = 0;
        for (const auto& c : columns) s += c.size();
        return s;
    }
};

/// Exact rank over the given field. Over the rationals this clears
/// denominators and runs fraction-free (Bareiss) elimination, with a
/// word-sized fast path that escalates to arbitrary precision on overflow.
int rank(const ExactMatrix& m, const FieldSpec& field);

/// Basis of ker(m) over the given field; dim ker = cols - rank.
/// Over GF(p) the basis vectors carry integer representatives in [0, p).
std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m,
                                                const FieldSpec& field);

/// Solves A x = b, returning one solution if the system is consistent.
std::vector<Rational> solve_consistent(const ExactMatrix& a,
                                       const std::vector<Rational>& b,
                                       const FieldSpec& field);

}  // namespace enrhom
