#pragma once

#include <cstdint>
#include <vector>

#include "esscoh/error.hpp"

namespace esscoh {

// Arithmetic in F_p with residues stored in [0, p). p prime, p < 2^16, so a
// product of residues fits in uint32_t and a dot product of any realistic
// length fits in uint64_t accumulated lazily.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return (a * b) % p_;
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

// Dense matrix over F_p, row major.
class FpMatrix {
public:
    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

    static FpMatrix identity(std::uint32_t p, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t p() const { return field_.p(); }
    const PrimeField& field() const { return field_; }

    std::uint32_t at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, std::uint32_t v) {
        data_[r * cols_ + c] = v;
    }

    std::vector<std::uint32_t> row(std::size_t r) const;
    void append_row(const std::vector<std::uint32_t>& v);

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

FpMatrix matrix_product(const FpMatrix& a, const FpMatrix& b);
std::vector<std::uint32_t> apply_matrix(const FpMatrix& m,
                                        const std::vector<std::uint32_t>& v);

struct RrefResult {
    FpMatrix matrix;                  // fully reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

// Canonical form: unit pivots, zeros above and below, zero rows dropped.
RrefResult rref(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

// Subspace of F_p^ambient held as an RREF row basis, so equal subspaces have
// identical representations and operator== is literal comparison.
class Subspace {
public:
    Subspace(std::uint32_t p, std::size_t ambient);  // zero subspace
    static Subspace full(std::uint32_t p, std::size_t ambient);
    static Subspace row_span(const FpMatrix& m);

    std::uint32_t p() const { return basis_.p(); }
    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const FpMatrix& basis() const { return basis_; }

    bool contains(const std::vector<std::uint32_t>& v) const;
    bool contains_subspace(const Subspace& other) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    explicit Subspace(FpMatrix rref_basis) : basis_(std::move(rref_basis)) {}
    FpMatrix basis_;
};

// Basis of {v : m v = 0}, canonicalized.
Subspace kernel_basis(const FpMatrix& m);

Subspace sum(const Subspace& a, const Subspace& b);

// Solves for coefficient vectors expressing a common element of a and b.
Subspace intersect(const Subspace& a, const Subspace& b);

// Fold over a list; the empty list is the full ambient space.
Subspace intersect_all(std::uint32_t p, std::size_t ambient,
                       const std::vector<Subspace>& spaces);

}  // namespace esscoh
