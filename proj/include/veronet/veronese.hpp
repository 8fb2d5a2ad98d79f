// Monomial combinatorics for spaces of degree-d forms, the d-uple map
// L -> L^d, and the affine cone of the k-osculating space of the image
// variety at a rational point.
//
// The monomial order is graded lexicographic descending with
// X0 > X1 > ... > Xn: position 0 is X0^d, the last position is Xn^d.  All
// coefficient vectors in this library are coordinates with respect to that
// order, and the order is part of the serialization contract.

#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gf.hpp"
#include "linalg.hpp"

namespace veronet {

/// Exponent tuple (e0, ..., en) of a monomial X0^e0 ... Xn^en.
using MultiIndex = std::vector<std::uint32_t>;

/// Exact C(a, b); the operands stay far below overflow at desk scale.
inline std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;  // exact at every step
    }
    return r;
}

namespace detail {

/// C(n+d, d) with the desk-scale cap enforced before anything allocates.
inline std::size_t form_space_dim(std::uint32_t n, std::uint32_t d) {
    if (n < 1) throw std::invalid_argument("need at least two variables (n >= 1)");
    if (d < 1) throw std::invalid_argument("degree must be at least 1");
    if (std::uint64_t{n} + d > 64)
        throw std::invalid_argument("form space C(n+d, d) exceeds the 2^20 cap");
    const std::uint64_t size = binomial(n + d, d);
    if (size > kMaxFieldOrder)
        throw std::invalid_argument("form space C(n+d, d) exceeds the 2^20 cap");
    return static_cast<std::size_t>(size);
}

}  // namespace detail

/**
 * The ordered basis of monomials of total degree d in X0..Xn together with
 * the position <-> exponent-tuple bijection.  Size is C(n+d, d).
 */
class MonomialBasis {
public:
    MonomialBasis(std::uint32_t n, std::uint32_t d) : n_(n), d_(d) {
        monomials_.reserve(detail::form_space_dim(n, d));
        MultiIndex current(n + 1, 0);
        emit(current, 0, d);
        for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = i;
    }

    std::uint32_t n() const { return n_; }
    std::uint32_t degree() const { return d_; }
    std::size_t size() const { return monomials_.size(); }

    const MultiIndex& monomial_at(std::size_t i) const { return monomials_.at(i); }
    const std::vector<MultiIndex>& all() const { return monomials_; }

    std::size_t index_of(const MultiIndex& exps) const {
        auto it = index_.find(exps);
        if (it == index_.end())
            throw std::invalid_argument("multi-index not in this monomial basis");
        return it->second;
    }

private:
    void emit(MultiIndex& current, std::size_t var, std::uint32_t remaining) {
        if (var == n_) {  // last variable takes the rest
            current[var] = remaining;
            monomials_.push_back(current);
            current[var] = 0;
            return;
        }
        for (std::uint32_t e = remaining + 1; e-- > 0;) {
            current[var] = e;
            emit(current, var + 1, remaining - e);
        }
        current[var] = 0;
    }

    std::uint32_t n_, d_;
    std::vector<MultiIndex> monomials_;
    std::map<MultiIndex, std::size_t> index_;
};

/**
 * A dense homogeneous polynomial of fixed total degree: the coefficient
 * vector of a point of the space of degree-d forms, in monomial-basis order.
 */
class Form {
public:
    Form(FieldPtr field, std::uint32_t n, std::uint32_t d)
        : field_(std::move(field)), n_(n), d_(d),
          coeffs_(detail::form_space_dim(n, d), 0) {
        if (!field_) throw std::invalid_argument("form needs a field");
    }

    /// coeff * X^exps as a Form of degree |exps|.
    static Form monomial(FieldPtr field, const MultiIndex& exps, std::uint32_t coeff = 1) {
        if (exps.size() < 2) throw std::invalid_argument("need at least two variables");
        const std::uint32_t n = static_cast<std::uint32_t>(exps.size()) - 1;
        const std::uint32_t d = std::accumulate(exps.begin(), exps.end(), 0u);
        Form f(std::move(field), n, d);
        MonomialBasis basis(n, d);
        f.set_coeff(basis.index_of(exps), coeff);
        return f;
    }

    std::uint32_t n() const { return n_; }
    std::uint32_t degree() const { return d_; }
    const FieldPtr& field() const { return field_; }
    const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

    std::uint32_t coeff_at(std::size_t i) const { return coeffs_.at(i); }
    void set_coeff(std::size_t i, std::uint32_t v) {
        if (v >= field_->order()) throw std::invalid_argument("coefficient out of range");
        coeffs_.at(i) = v;
    }

    bool is_zero() const {
        for (std::uint32_t c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    Form operator+(const Form& o) const {
        require_same_shape(o);
        Form r(field_, n_, d_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            r.coeffs_[i] = field_->add(coeffs_[i], o.coeffs_[i]);
        return r;
    }

    Form scaled(std::uint32_t c) const {
        Form r(field_, n_, d_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            r.coeffs_[i] = field_->mul(coeffs_[i], c);
        return r;
    }

    bool operator==(const Form& o) const {
        return n_ == o.n_ && d_ == o.d_ && *field_ == *o.field_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Form& o) const { return !(*this == o); }

private:
    void require_same_shape(const Form& o) const {
        if (n_ != o.n_ || d_ != o.d_) throw std::invalid_argument("form shape mismatch");
        if (*field_ != *o.field_) throw std::invalid_argument("forms over different fields");
    }

    friend Form operator*(const Form& a, const Form& b);

    FieldPtr field_;
    std::uint32_t n_, d_;
    std::vector<std::uint32_t> coeffs_;
};

/// Exact product of forms: coefficient convolution with exponent-wise
/// addition of multi-indices.  Multiplication by a nonzero form is injective
/// (the polynomial ring over a field has no zero divisors).
inline Form operator*(const Form& a, const Form& b) {
    if (a.n() != b.n()) throw std::invalid_argument("forms in different variable counts");
    if (*a.field() != *b.field()) throw std::invalid_argument("forms over different fields");
    const Field& f = *a.field();
    Form out(a.field(), a.n(), a.degree() + b.degree());
    MonomialBasis ba(a.n(), a.degree());
    MonomialBasis bb(b.n(), b.degree());
    MonomialBasis bp(a.n(), a.degree() + b.degree());
    for (std::size_t i = 0; i < ba.size(); ++i) {
        if (a.coeff_at(i) == 0) continue;
        const MultiIndex& ea = ba.monomial_at(i);
        for (std::size_t j = 0; j < bb.size(); ++j) {
            if (b.coeff_at(j) == 0) continue;
            const MultiIndex& eb = bb.monomial_at(j);
            MultiIndex e(ea.size());
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            const std::size_t idx = bp.index_of(e);
            out.coeffs_[idx] = f.add(out.coeffs_[idx], f.mul(a.coeff_at(i), b.coeff_at(j)));
        }
    }
    return out;
}

/// f^e by repeated multiplication (e >= 1); sidesteps characteristic-p
/// pitfalls in factorial arithmetic entirely.
inline Form form_pow(const Form& f, std::uint32_t e) {
    if (e < 1) throw std::invalid_argument("exponent must be at least 1");
    Form r = f;
    for (std::uint32_t i = 1; i < e; ++i) r = r * f;
    return r;
}

/**
 * A nonzero linear form c0 X0 + ... + cn Xn normalized so its first nonzero
 * coefficient is 1: the canonical representative of a projective point of
 * the space of linear forms.
 */
class LinearForm {
public:
    LinearForm(FieldPtr field, std::vector<std::uint32_t> coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        if (!field_) throw std::invalid_argument("linear form needs a field");
        if (coeffs_.size() < 2)
            throw std::invalid_argument("need at least two variables (n >= 1)");
        std::size_t lead = coeffs_.size();
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] >= field_->order())
                throw std::invalid_argument("coefficient out of range");
            if (coeffs_[i] != 0 && lead == coeffs_.size()) lead = i;
        }
        if (lead == coeffs_.size())
            throw std::invalid_argument("linear form must be nonzero");
        if (coeffs_[lead] != 1) {
            const std::uint32_t s = field_->inv(coeffs_[lead]);
            for (auto& c : coeffs_) c = field_->mul(c, s);
        }
    }

    std::uint32_t n() const { return static_cast<std::uint32_t>(coeffs_.size()) - 1; }
    const FieldPtr& field() const { return field_; }
    const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

    /// The same data as a degree-1 Form (monomial order puts Xi at index i).
    Form as_form() const {
        Form f(field_, n(), 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) f.set_coeff(i, coeffs_[i]);
        return f;
    }

    bool operator==(const LinearForm& o) const {
        return *field_ == *o.field_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const LinearForm& o) const { return !(*this == o); }

private:
    FieldPtr field_;
    std::vector<std::uint32_t> coeffs_;
};

/// The d-uple map: the coefficient vector of L^d in the degree-d basis.
inline Form veronese_point(const LinearForm& l, std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("degree must be at least 1");
    return form_pow(l.as_form(), d);
}

/**
 * Affine cone of the k-osculating space at the point corresponding to L:
 * the span of { L^{d-k} * X^alpha : |alpha| = k } inside the C(n+d, d)-
 * dimensional coordinate space of degree-d forms.  Defined for 1 <= k < d;
 * its dimension is exactly C(k+n, n) in every characteristic, and it
 * contains the point L^d itself (take X^alpha -> L^k).
 */
inline Subspace osculating_cone(const LinearForm& l, std::uint32_t d, std::uint32_t k) {
    if (k < 1 || k >= d)
        throw std::invalid_argument("osculating order k must satisfy 1 <= k < d");
    const std::uint32_t n = l.n();
    const Form shift = form_pow(l.as_form(), d - k);
    MonomialBasis degree_k(n, k);
    const std::size_t ambient = binomial(n + d, d);
    Matrix rows(l.field(), degree_k.size(), ambient);
    for (std::size_t i = 0; i < degree_k.size(); ++i) {
        const Form row = shift * Form::monomial(l.field(), degree_k.monomial_at(i));
        for (std::size_t c = 0; c < ambient; ++c) rows(i, c) = row.coeff_at(c);
    }
    return Subspace::span_rows(rows);
}

}  // namespace veronet
