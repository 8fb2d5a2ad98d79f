// Exact linear algebra over GF(q): dense matrices, the canonical (RREF)
// subspace representation, sum/intersection (Zassenhaus), and the subspace
// metric dist(V1, V2) = dim(V1 + V2) - dim(V1 ∩ V2).
//
// Subspaces are always stored by their reduced row echelon basis with zero
// rows dropped, so equality of subspaces is entry-wise equality of bases.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace veronet {

/// Dense row-major matrix over a single field; entries are encoded values.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), v_(rows * cols, 0) {
        if (!field_) throw std::invalid_argument("matrix needs a field");
    }

    static Matrix from_rows(FieldPtr field,
                            const std::vector<std::vector<std::uint32_t>>& rows,
                            std::size_t cols) {
        Matrix m(std::move(field), rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols)
                throw std::invalid_argument("ragged row in matrix construction");
            for (std::size_t c = 0; c < cols; ++c) {
                if (rows[r][c] >= m.field()->order())
                    throw std::invalid_argument("matrix entry out of field range");
                m(r, c) = rows[r][c];
            }
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }
    std::uint32_t& operator()(std::size_t r, std::size_t c) { return v_[r * cols_ + c]; }

    FieldElem at(std::size_t r, std::size_t c) const { return field_->element((*this)(r, c)); }

    std::vector<std::uint32_t> row(std::size_t r) const {
        return {v_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                v_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap(v_[a * cols_ + c], v_[b * cols_ + c]);
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && *field_ == *o.field_ && v_ == o.v_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> v_;
};

/// Matrix product; row count of b must match column count of a.
inline Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul shape mismatch");
    if (*a.field() != *b.field()) throw std::invalid_argument("matmul field mismatch");
    const Field& f = *a.field();
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint32_t aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
        }
    return out;
}

struct RrefResult {
    Matrix matrix;
    std::size_t rank;
};

/// Unique reduced row echelon form (Gauss-Jordan); input left untouched.
inline RrefResult rref(Matrix m) {
    const Field& f = *m.field();
    std::size_t pr = 0;  // next pivot row
    for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
        std::size_t sel = pr;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pr) m.swap_rows(sel, pr);
        const std::uint32_t scale = f.inv(m(pr, col));
        if (scale != 1)
            for (std::size_t c = col; c < m.cols(); ++c)
                m(pr, c) = f.mul(m(pr, c), scale);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pr || m(r, col) == 0) continue;
            const std::uint32_t factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) = f.sub(m(r, c), f.mul(factor, m(pr, c)));
        }
        ++pr;
    }
    return {std::move(m), pr};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/**
 * An F_q-linear subspace of F_q^N in canonical form: the basis matrix is the
 * RREF of any generating set with zero rows removed, so two Subspace values
 * are equal exactly when they describe the same subspace.
 */
class Subspace {
public:
    /// Canonical subspace spanned by the rows of `generators`.
    static Subspace span_rows(const Matrix& generators) {
        RrefResult r = rref(generators);
        Matrix basis(generators.field(), r.rank, generators.cols());
        for (std::size_t i = 0; i < r.rank; ++i)
            for (std::size_t c = 0; c < generators.cols(); ++c)
                basis(i, c) = r.matrix(i, c);
        return Subspace(std::move(basis));
    }

    /// Span of explicit coordinate vectors; the empty list spans {0}.
    static Subspace span(FieldPtr field, std::size_t ambient_dim,
                         const std::vector<std::vector<std::uint32_t>>& vectors) {
        return span_rows(Matrix::from_rows(std::move(field), vectors, ambient_dim));
    }

    static Subspace zero(FieldPtr field, std::size_t ambient_dim) {
        return Subspace(Matrix(std::move(field), 0, ambient_dim));
    }

    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const FieldPtr& field() const { return basis_.field(); }

    /// Residual of v after eliminating against the RREF basis; zero iff v
    /// lies in the subspace.
    std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const {
        if (v.size() != ambient_dim())
            throw std::invalid_argument("vector length does not match ambient dimension");
        const Field& f = *field();
        for (std::size_t r = 0; r < basis_.rows(); ++r) {
            const std::size_t p = pivot_cols_[r];
            const std::uint32_t c = v[p];
            if (c == 0) continue;
            for (std::size_t j = p; j < v.size(); ++j)
                v[j] = f.sub(v[j], f.mul(c, basis_(r, j)));
        }
        return v;
    }

    bool contains(const std::vector<std::uint32_t>& v) const {
        const std::vector<std::uint32_t> res = reduce(v);
        for (std::uint32_t x : res)
            if (x != 0) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_dim() != ambient_dim())
            throw std::invalid_argument("ambient dimension mismatch");
        for (std::size_t r = 0; r < other.dim(); ++r)
            if (!contains(other.basis_.row(r))) return false;
        return true;
    }

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {
        pivot_cols_.reserve(basis_.rows());
        for (std::size_t r = 0; r < basis_.rows(); ++r) {
            std::size_t c = 0;
            while (c < basis_.cols() && basis_(r, c) == 0) ++c;
            pivot_cols_.push_back(c);
        }
    }

    Matrix basis_;                     // RREF, no zero rows
    std::vector<std::size_t> pivot_cols_;
};

namespace detail {

inline void require_compatible(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("ambient dimension mismatch");
    if (*a.field() != *b.field())
        throw std::invalid_argument("subspaces over different fields");
}

inline Matrix stack(const Subspace& a, const Subspace& b) {
    Matrix m(a.field(), a.dim() + b.dim(), a.ambient_dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.ambient_dim(); ++c) m(r, c) = a.basis()(r, c);
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < b.ambient_dim(); ++c) m(a.dim() + r, c) = b.basis()(r, c);
    return m;
}

}  // namespace detail

inline Subspace sum(const Subspace& a, const Subspace& b) {
    detail::require_compatible(a, b);
    return Subspace::span_rows(detail::stack(a, b));
}

/// Intersection basis by the Zassenhaus stacked-block reduction: rows (v|v)
/// for v in the first basis and (w|0) for w in the second; after reduction
/// the right halves of the rows whose left half vanished span V1 ∩ V2.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
    detail::require_compatible(a, b);
    const std::size_t n = a.ambient_dim();
    Matrix block(a.field(), a.dim() + b.dim(), 2 * n);
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) {
            block(r, c) = a.basis()(r, c);
            block(r, n + c) = a.basis()(r, c);
        }
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) block(a.dim() + r, c) = b.basis()(r, c);

    RrefResult red = rref(std::move(block));
    std::vector<std::vector<std::uint32_t>> inter_rows;
    for (std::size_t r = 0; r < red.matrix.rows(); ++r) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c)
            if (red.matrix(r, c) != 0) left_zero = false;
        if (!left_zero) continue;
        std::vector<std::uint32_t> right(n);
        bool nonzero = false;
        for (std::size_t c = 0; c < n; ++c) {
            right[c] = red.matrix(r, n + c);
            nonzero = nonzero || right[c] != 0;
        }
        if (nonzero) inter_rows.push_back(std::move(right));
    }
    return Subspace::span(a.field(), n, inter_rows);
}

/// dist(V1, V2) = dim(V1 + V2) - dim(V1 ∩ V2) = 2 dim(V1 + V2) - dim V1 - dim V2.
inline std::size_t subspace_distance(const Subspace& a, const Subspace& b) {
    detail::require_compatible(a, b);
    const std::size_t s = rref(detail::stack(a, b)).rank;
    return 2 * s - a.dim() - b.dim();
}

namespace detail {

inline std::uint64_t checked_space_size(std::uint64_t q, std::size_t dim) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (count > kMaxFieldOrder / q)
            throw std::invalid_argument("q^dim exceeds the 2^20 enumeration cap");
        count *= q;
    }
    return count;
}

}  // namespace detail

/// Every vector of V exactly once, as all F_q-combinations of the basis rows
/// (combination index decomposed base q, digit i scaling row i).
inline std::vector<std::vector<std::uint32_t>> enumerate_vectors(const Subspace& v) {
    const std::uint64_t q = v.field()->order();
    const std::uint64_t count = detail::checked_space_size(q, v.dim());
    const Field& f = *v.field();
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<std::uint32_t> vec(v.ambient_dim(), 0);
        std::uint64_t t = idx;
        for (std::size_t r = 0; r < v.dim(); ++r) {
            const auto coeff = static_cast<std::uint32_t>(t % q);
            t /= q;
            if (coeff == 0) continue;
            for (std::size_t c = 0; c < v.ambient_dim(); ++c)
                vec[c] = f.add(vec[c], f.mul(coeff, v.basis()(r, c)));
        }
        out.push_back(std::move(vec));
    }
    return out;
}

/// Brute-force intersection dimension: counts the vectors of V1 lying in V2
/// by membership test and returns log_q of the count.  Deliberately avoids
/// the Zassenhaus route so the two can check each other.
inline std::size_t intersect_oracle(const Subspace& v1, const Subspace& v2) {
    detail::require_compatible(v1, v2);
    const std::uint64_t q = v1.field()->order();
    const std::uint64_t total = detail::checked_space_size(q, v1.dim());
    const Field& f = *v1.field();
    std::uint64_t members = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<std::uint32_t> vec(v1.ambient_dim(), 0);
        std::uint64_t t = idx;
        for (std::size_t r = 0; r < v1.dim(); ++r) {
            const auto coeff = static_cast<std::uint32_t>(t % q);
            t /= q;
            if (coeff == 0) continue;
            for (std::size_t c = 0; c < v1.ambient_dim(); ++c)
                vec[c] = f.add(vec[c], f.mul(coeff, v1.basis()(r, c)));
        }
        if (v2.contains(vec)) ++members;
    }
    std::size_t k = 0;
    std::uint64_t power = 1;
    while (power < members) {
        power *= q;
        ++k;
    }
    if (power != members)
        throw std::logic_error("intersection cardinality is not a power of q");
    return k;
}

/// All k-dimensional subspaces of F_q^N, one canonical RREF basis each.
/// Guarded by the 2^20 cap on the number of subspaces produced.
inline std::vector<Subspace> all_subspaces(const FieldPtr& field, std::size_t n,
                                           std::size_t k) {
    if (k > n) throw std::invalid_argument("subspace dimension exceeds ambient");
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(Subspace::zero(field, n));
        return out;
    }
    const std::uint32_t q = field->order();
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;

    auto emit_for_pivots = [&]() {
        // positions that may hold arbitrary field values
        std::vector<std::pair<std::size_t, std::size_t>> free_cells;
        std::vector<bool> is_pivot(n, false);
        for (std::size_t p : pivots) is_pivot[p] = true;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = pivots[r] + 1; c < n; ++c)
                if (!is_pivot[c]) free_cells.emplace_back(r, c);

        std::vector<std::uint32_t> assign(free_cells.size(), 0);
        while (true) {
            Matrix basis(field, k, n);
            for (std::size_t r = 0; r < k; ++r) basis(r, pivots[r]) = 1;
            for (std::size_t i = 0; i < free_cells.size(); ++i)
                basis(free_cells[i].first, free_cells[i].second) = assign[i];
            out.push_back(Subspace::span_rows(basis));
            if (out.size() > kMaxFieldOrder)
                throw std::invalid_argument("subspace enumeration exceeds the 2^20 cap");
            std::size_t i = 0;
            while (i < assign.size() && assign[i] == q - 1) assign[i++] = 0;
            if (i == assign.size()) break;
            ++assign[i];
        }
    };

    while (true) {
        emit_for_pivots();
        // next pivot combination
        std::size_t i = k;
        while (i-- > 0) {
            if (pivots[i] + 1 <= n - (k - i)) {
                ++pivots[i];
                for (std::size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

/// All k-dimensional subspaces of V (enumerated in V's coordinate space and
/// mapped through its basis).
inline std::vector<Subspace> subspaces_of(const Subspace& v, std::size_t k) {
    if (k > v.dim()) throw std::invalid_argument("subspace dimension exceeds dim V");
    std::vector<Subspace> out;
    for (const Subspace& coeffs : all_subspaces(v.field(), v.dim(), k)) {
        if (coeffs.dim() == 0) {
            out.push_back(Subspace::zero(v.field(), v.ambient_dim()));
            continue;
        }
        out.push_back(Subspace::span_rows(matmul(coeffs.basis(), v.basis())));
    }
    return out;
}

}  // namespace veronet
