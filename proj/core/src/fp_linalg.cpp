#include "esscoh/fp_linalg.hpp"

#include <utility>

namespace esscoh {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 16)) throw DomainError("p must be below 2^16");
    if (!is_prime(p)) throw DomainError("p must be prime: " + std::to_string(p));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw DomainError("division by zero in F_p");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return reduce(t);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint64_t base = a % p_, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : field_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

std::vector<std::uint32_t> FpMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void FpMatrix::append_row(const std::vector<std::uint32_t>& v) {
    if (v.size() != cols_) throw DimensionError("row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

FpMatrix matrix_product(const FpMatrix& a, const FpMatrix& b) {
    if (a.p() != b.p()) throw DomainError("field mismatch in matrix product");
    if (a.cols() != b.rows()) throw DimensionError("inner dimension mismatch");
    const std::uint32_t p = a.p();
    FpMatrix out(p, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint64_t aik = a.at(i, k);
            if (!aik) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                std::uint64_t v = out.at(i, j) + aik * b.at(k, j);
                out.set(i, j, static_cast<std::uint32_t>(v % p));
            }
        }
    }
    return out;
}

std::vector<std::uint32_t> apply_matrix(const FpMatrix& m,
                                        const std::vector<std::uint32_t>& v) {
    if (v.size() != m.cols()) throw DimensionError("vector length mismatch");
    const std::uint32_t p = m.p();
    std::vector<std::uint32_t> out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            acc += static_cast<std::uint64_t>(m.at(i, j)) * v[j];
        out[i] = static_cast<std::uint32_t>(acc % p);
    }
    return out;
}

RrefResult rref(const FpMatrix& m) {
    const PrimeField& f = m.field();
    FpMatrix w = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < w.rows() && w.at(pivot, c) == 0) ++pivot;
        if (pivot == w.rows()) continue;
        if (pivot != r)
            for (std::size_t j = c; j < w.cols(); ++j) {
                std::uint32_t t = w.at(r, j);
                w.set(r, j, w.at(pivot, j));
                w.set(pivot, j, t);
            }
        const std::uint32_t s = f.inv(w.at(r, c));
        if (s != 1)
            for (std::size_t j = c; j < w.cols(); ++j)
                w.set(r, j, f.mul(w.at(r, j), s));
        for (std::size_t i = 0; i < w.rows(); ++i) {
            if (i == r) continue;
            const std::uint32_t v = w.at(i, c);
            if (!v) continue;
            for (std::size_t j = c; j < w.cols(); ++j)
                w.set(i, j, f.sub(w.at(i, j), f.mul(v, w.at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    FpMatrix out(m.p(), r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, w.at(i, j));
    return {std::move(out), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return rref(m).matrix.rows(); }

Subspace::Subspace(std::uint32_t p, std::size_t ambient)
    : basis_(p, 0, ambient) {}

Subspace Subspace::full(std::uint32_t p, std::size_t ambient) {
    return Subspace(FpMatrix::identity(p, ambient));
}

Subspace Subspace::row_span(const FpMatrix& m) {
    return Subspace(rref(m).matrix);
}

bool Subspace::contains(const std::vector<std::uint32_t>& v) const {
    if (v.size() != ambient()) throw DimensionError("ambient mismatch");
    const PrimeField& f = basis_.field();
    std::vector<std::uint32_t> w = v;
    std::size_t col = 0;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        while (col < ambient() && basis_.at(i, col) == 0) ++col;
        // col is row i's pivot; basis rows are RREF
        const std::uint32_t c = w[col];
        if (c)
            for (std::size_t j = col; j < ambient(); ++j)
                w[j] = f.sub(w[j], f.mul(c, basis_.at(i, j)));
    }
    for (std::uint32_t x : w)
        if (x) return false;
    return true;
}

bool Subspace::contains_subspace(const Subspace& other) const {
    if (other.ambient() != ambient()) throw DimensionError("ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace kernel_basis(const FpMatrix& m) {
    const PrimeField& f = m.field();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    FpMatrix rows(m.p(), 0, m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<std::uint32_t> v(m.cols(), 0);
        v[c] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = f.neg(r.matrix.at(i, c));
        rows.append_row(v);
    }
    return Subspace::row_span(rows);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.p() != b.p()) throw DomainError("field mismatch");
    if (a.ambient() != b.ambient()) throw DimensionError("ambient mismatch");
    FpMatrix rows(a.p(), 0, a.ambient());
    for (std::size_t i = 0; i < a.dim(); ++i) rows.append_row(a.basis().row(i));
    for (std::size_t i = 0; i < b.dim(); ++i) rows.append_row(b.basis().row(i));
    return Subspace::row_span(rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.p() != b.p()) throw DomainError("field mismatch");
    if (a.ambient() != b.ambient()) throw DimensionError("ambient mismatch");
    const std::uint32_t p = a.p();
    const PrimeField& f = a.basis().field();
    const std::size_t n = a.ambient(), ka = a.dim(), kb = b.dim();
    if (ka == 0 || kb == 0) return Subspace(p, n);
    // columns: coefficients on a's basis, then on b's; rows: ambient equations
    FpMatrix sys(p, n, ka + kb);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j < ka; ++j) sys.set(r, j, a.basis().at(j, r));
        for (std::size_t j = 0; j < kb; ++j)
            sys.set(r, ka + j, f.neg(b.basis().at(j, r)));
    }
    Subspace coeffs = kernel_basis(sys);
    FpMatrix rows(p, 0, n);
    for (std::size_t i = 0; i < coeffs.dim(); ++i) {
        std::vector<std::uint32_t> v(n, 0);
        for (std::size_t j = 0; j < ka; ++j) {
            const std::uint32_t c = coeffs.basis().at(i, j);
            if (!c) continue;
            for (std::size_t r = 0; r < n; ++r)
                v[r] = f.add(v[r], f.mul(c, a.basis().at(j, r)));
        }
        rows.append_row(v);
    }
    return Subspace::row_span(rows);
}

Subspace intersect_all(std::uint32_t p, std::size_t ambient,
                       const std::vector<Subspace>& spaces) {
    Subspace acc = Subspace::full(p, ambient);
    for (const Subspace& s : spaces) acc = intersect(acc, s);
    return acc;
}

}  // namespace esscoh
