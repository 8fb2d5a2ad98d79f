// Exact arithmetic in finite fields GF(p^m), the coefficient domain for
// everything else in this library.
//
// Elements are stored in the polynomial basis over GF(p): an element is a
// vector (c0, ..., c_{m-1}) of residues mod p, encoded as the integer
// sum c_i * p^i.  With that encoding every integer in [0, q) names exactly
// one element, zero is 0 and one is 1, and enumeration order is simply
// increasing encoded value.  Extension fields reduce modulo an explicit
// monic irreducible; when none is supplied the smallest one (in encoded
// value of its non-leading coefficients) is found by exhaustive search, so
// two runs always agree on the representation.

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace veronet {

/// Desk-scale cap on field order; keeps exhaustive searches and tables sound.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

class Field;
class FieldElem;

/// Fields are immutable and always handled through shared pointers.
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

/// p^m with the kMaxFieldOrder cap enforced; throws instead of overflowing.
inline std::uint64_t checked_pow(std::uint64_t p, std::uint32_t m) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (q > kMaxFieldOrder / p)
            throw std::invalid_argument("field order p^m exceeds 2^20 cap");
        q *= p;
    }
    if (q > kMaxFieldOrder)
        throw std::invalid_argument("field order p^m exceeds 2^20 cap");
    return q;
}

// Polynomials over GF(p) as coefficient vectors (index i = coefficient of
// x^i), used only for modulus bookkeeping.  Leading zeros are allowed.

inline std::size_t poly_degree(const std::vector<std::uint32_t>& a) {
    std::size_t d = a.size();
    while (d > 0 && a[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;  // degree of the zero polynomial treated as 0
}

inline bool poly_is_zero(const std::vector<std::uint32_t>& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

/// Remainder of a divided by monic b, both over GF(p).
inline std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a,
                                           const std::vector<std::uint32_t>& b,
                                           std::uint32_t p) {
    const std::size_t db = poly_degree(b);
    while (!poly_is_zero(a) && poly_degree(a) >= db) {
        const std::size_t da = poly_degree(a);
        const std::uint64_t c = a[da];  // b is monic, no inverse needed
        for (std::size_t j = 0; j <= db; ++j) {
            std::uint64_t sub = (c * b[j]) % p;
            a[da - db + j] = static_cast<std::uint32_t>((a[da - db + j] + p - sub) % p);
        }
    }
    return a;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool poly_is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const std::size_t deg = poly_degree(f);
    if (deg < 1) return false;
    for (std::size_t e = 1; 2 * e <= deg; ++e) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < e; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            std::vector<std::uint32_t> div(e + 1, 0);
            std::uint64_t v = t;
            for (std::size_t i = 0; i < e; ++i) {
                div[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            div[e] = 1;
            if (poly_is_zero(poly_rem(f, div, p))) return false;
        }
    }
    return true;
}

inline char digit_char(std::uint32_t d) {
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + (d - 10));
}

inline std::uint32_t digit_value(char c) {
    if (c >= '0' && c <= '9') return static_cast<std::uint32_t>(c - '0');
    if (c >= 'a' && c <= 'z') return static_cast<std::uint32_t>(c - 'a' + 10);
    throw std::invalid_argument(std::string("invalid field element digit '") + c + "'");
}

}  // namespace detail

/**
 * A finite field GF(p^m), p prime, with exact arithmetic on encoded element
 * values in [0, q).  For q <= 256 the addition/multiplication tables are
 * precomputed at construction; larger fields fall back to digit arithmetic.
 */
class Field : public std::enable_shared_from_this<Field> {
public:
    /// Builds GF(p^m).  `irreducible` is the full coefficient list
    /// (c0, ..., c_{m-1}, 1) of a monic degree-m polynomial over GF(p); it is
    /// ignored for m = 1 and searched for exhaustively when omitted.
    static FieldPtr make(std::uint32_t p, std::uint32_t m = 1,
                         std::vector<std::uint32_t> irreducible = {}) {
        return FieldPtr(new Field(p, m, std::move(irreducible)));
    }

    /// Builds the field of order q = p^m with the default irreducible,
    /// deriving p and m from the factorization of q.
    static FieldPtr from_order(std::uint64_t q) {
        if (q < 2) throw std::invalid_argument("field order must be at least 2");
        std::uint64_t p = 2;
        while (q % p != 0) {
            ++p;
            if (p * p > q) {
                p = q;
                break;
            }
        }
        std::uint32_t m = 0;
        std::uint64_t t = q;
        while (t % p == 0) {
            t /= p;
            ++m;
        }
        if (t != 1)
            throw std::invalid_argument("field order " + std::to_string(q) +
                                        " is not a prime power");
        return make(static_cast<std::uint32_t>(p), m);
    }

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t extension_degree() const { return m_; }
    std::uint32_t order() const { return q_; }

    /// Modulus coefficients (c0, ..., c_{m-1}, 1); empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return irreducible_; }

    bool operator==(const Field& o) const {
        return p_ == o.p_ && m_ == o.m_ && irreducible_ == o.irreducible_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    // -- arithmetic on encoded values ---------------------------------------

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        check_value(a);
        check_value(b);
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return add_slow(a, b);
    }

    std::uint32_t neg(std::uint32_t a) const {
        check_value(a);
        if (!neg_table_.empty()) return neg_table_[a];
        return neg_slow(a);
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        check_value(a);
        check_value(b);
        if (!mul_table_.empty()) return mul_table_[a * q_ + b];
        return mul_slow(a, b);
    }

    std::uint32_t inv(std::uint32_t a) const {
        check_value(a);
        if (a == 0) throw std::invalid_argument("inverse of zero");
        if (!inv_table_.empty()) return inv_table_[a];
        return pow(a, q_ - 2);
    }

    /// Square-and-multiply; pow(a, 0) = 1 for every a.
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        check_value(a);
        std::uint32_t r = 1;
        std::uint32_t base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    // -- representation ------------------------------------------------------

    /// The m residues (c0, ..., c_{m-1}) of an encoded value.
    std::vector<std::uint32_t> digits(std::uint32_t v) const {
        check_value(v);
        std::vector<std::uint32_t> d(m_);
        for (std::uint32_t i = 0; i < m_; ++i) {
            d[i] = v % p_;
            v /= p_;
        }
        return d;
    }

    std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const {
        if (d.size() != m_) throw std::invalid_argument("digit vector has wrong length");
        std::uint64_t v = 0;
        for (std::size_t i = m_; i-- > 0;) {
            if (d[i] >= p_) throw std::invalid_argument("digit out of range");
            v = v * p_ + d[i];
        }
        return static_cast<std::uint32_t>(v);
    }

    /// Text form: m digits base p, lowest coefficient first (GF(4)'s x+1 is
    /// "11").  Digits use 0-9a-z; prime fields with p > 36 use plain decimal.
    std::string to_text(std::uint32_t v) const {
        check_value(v);
        if (p_ > 36) {
            if (m_ != 1)
                throw std::invalid_argument("no digit alphabet for p > 36 with m > 1");
            return std::to_string(v);
        }
        std::string s;
        s.reserve(m_);
        for (std::uint32_t i = 0; i < m_; ++i) {
            s.push_back(detail::digit_char(v % p_));
            v /= p_;
        }
        return s;
    }

    std::uint32_t parse_text(std::string_view s) const {
        if (p_ > 36) {
            if (m_ != 1)
                throw std::invalid_argument("no digit alphabet for p > 36 with m > 1");
            std::uint64_t v = 0;
            if (s.empty()) throw std::invalid_argument("empty field element token");
            for (char c : s) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("invalid decimal field element token");
                v = v * 10 + static_cast<std::uint64_t>(c - '0');
                if (v >= q_) throw std::invalid_argument("field element token out of range");
            }
            return static_cast<std::uint32_t>(v);
        }
        if (s.size() != m_)
            throw std::invalid_argument("field element token has wrong length");
        std::vector<std::uint32_t> d(m_);
        for (std::uint32_t i = 0; i < m_; ++i) {
            d[i] = detail::digit_value(s[i]);
            if (d[i] >= p_) throw std::invalid_argument("field element digit out of range");
        }
        return from_digits(d);
    }

    // -- elements ------------------------------------------------------------

    FieldElem element(std::uint32_t v) const;
    FieldElem zero() const;
    FieldElem one() const;

    /// All q elements, zero first, in increasing encoded value.
    std::vector<FieldElem> elements() const;

private:
    Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> irreducible)
        : p_(p), m_(m) {
        if (!detail::is_prime(p))
            throw std::invalid_argument(std::to_string(p) + " is not prime");
        if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
        q_ = static_cast<std::uint32_t>(detail::checked_pow(p, m));
        if (m_ == 1) {
            irreducible_.clear();  // ignored for prime fields
        } else if (irreducible.empty()) {
            irreducible_ = find_irreducible();
        } else {
            if (irreducible.size() != m_ + 1 || irreducible[m_] != 1)
                throw std::invalid_argument("modulus must be monic of degree m");
            for (std::uint32_t c : irreducible)
                if (c >= p_) throw std::invalid_argument("modulus coefficient out of range");
            if (!detail::poly_is_irreducible(irreducible, p_))
                throw std::invalid_argument("supplied modulus is reducible");
            irreducible_ = std::move(irreducible);
        }
        if (q_ <= kTableLimit) build_tables();
    }

    static constexpr std::uint32_t kTableLimit = 256;

    void check_value(std::uint32_t v) const {
        if (v >= q_) throw std::invalid_argument("encoded field value out of range");
    }

    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
        if (m_ == 1) return (a + b) % p_;
        std::uint32_t r = 0;
        std::uint32_t scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            r += ((a % p_ + b % p_) % p_) * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return r;
    }

    std::uint32_t neg_slow(std::uint32_t a) const {
        if (m_ == 1) return a == 0 ? 0 : p_ - a;
        std::uint32_t r = 0;
        std::uint32_t scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint32_t d = a % p_;
            r += (d == 0 ? 0 : p_ - d) * scale;
            a /= p_;
            scale *= p_;
        }
        return r;
    }

    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
        if (m_ == 1) return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % p_);
        // schoolbook product of the digit polynomials, then reduce
        std::vector<std::uint32_t> t(2 * m_ - 1, 0);
        std::vector<std::uint32_t> da = digits(a), db = digits(b);
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (da[i] == 0) continue;
            for (std::uint32_t j = 0; j < m_; ++j)
                t[i + j] = static_cast<std::uint32_t>(
                    (t[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
        }
        for (std::size_t i = t.size(); i-- > m_;) {
            const std::uint64_t c = t[i];
            if (c == 0) continue;
            t[i] = 0;
            for (std::uint32_t j = 0; j < m_; ++j) {
                std::uint64_t sub = (c * irreducible_[j]) % p_;
                t[i - m_ + j] = static_cast<std::uint32_t>((t[i - m_ + j] + p_ - sub) % p_);
            }
        }
        std::uint32_t r = 0;
        std::uint32_t scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            r += t[i] * scale;
            scale *= p_;
        }
        return r;
    }

    /// Smallest monic irreducible of degree m, ordered by the encoded value
    /// of its non-leading coefficients.
    std::vector<std::uint32_t> find_irreducible() const {
        for (std::uint64_t t = 0; t < q_; ++t) {
            std::vector<std::uint32_t> f(m_ + 1, 0);
            std::uint64_t v = t;
            for (std::uint32_t i = 0; i < m_; ++i) {
                f[i] = static_cast<std::uint32_t>(v % p_);
                v /= p_;
            }
            f[m_] = 1;
            if (detail::poly_is_irreducible(f, p_)) return f;
        }
        throw std::logic_error("no irreducible polynomial found");  // unreachable
    }

    void build_tables() {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        mul_table_.resize(static_cast<std::size_t>(q_) * q_);
        neg_table_.resize(q_);
        inv_table_.resize(q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            neg_table_[a] = neg_slow(a);
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_table_[a * q_ + b] = add_slow(a, b);
                mul_table_[a * q_ + b] = mul_slow(a, b);
            }
        }
        inv_table_[0] = 0;  // never read; inv(0) throws first
        for (std::uint32_t a = 1; a < q_; ++a) {
            for (std::uint32_t b = 1; b < q_; ++b) {
                if (mul_table_[a * q_ + b] == 1) {
                    inv_table_[a] = b;
                    break;
                }
            }
        }
    }

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> irreducible_;
    std::vector<std::uint32_t> add_table_;
    std::vector<std::uint32_t> mul_table_;
    std::vector<std::uint32_t> neg_table_;
    std::vector<std::uint32_t> inv_table_;
};

/**
 * A single field element: an encoded value tied to its field.  Operations on
 * elements of different fields are rejected, never coerced.
 */
class FieldElem {
public:
    FieldElem(FieldPtr field, std::uint32_t value)
        : field_(std::move(field)), v_(value) {
        if (!field_) throw std::invalid_argument("field element needs a field");
        if (v_ >= field_->order())
            throw std::invalid_argument("encoded field value out of range");
    }

    std::uint32_t value() const { return v_; }
    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return v_ == 0; }

    FieldElem operator+(const FieldElem& o) const {
        return FieldElem(field_, field_->add(v_, same_field(o).v_));
    }
    FieldElem operator-(const FieldElem& o) const {
        return FieldElem(field_, field_->sub(v_, same_field(o).v_));
    }
    FieldElem operator*(const FieldElem& o) const {
        return FieldElem(field_, field_->mul(v_, same_field(o).v_));
    }
    FieldElem operator/(const FieldElem& o) const {
        return FieldElem(field_, field_->mul(v_, field_->inv(same_field(o).v_)));
    }
    FieldElem operator-() const { return FieldElem(field_, field_->neg(v_)); }

    FieldElem inverse() const { return FieldElem(field_, field_->inv(v_)); }
    FieldElem pow(std::uint64_t e) const { return FieldElem(field_, field_->pow(v_, e)); }

    bool operator==(const FieldElem& o) const {
        return *field_ == *o.field_ && v_ == o.v_;
    }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    std::string to_text() const { return field_->to_text(v_); }

private:
    const FieldElem& same_field(const FieldElem& o) const {
        if (field_ != o.field_ && *field_ != *o.field_)
            throw std::invalid_argument("operands belong to different fields");
        return o;
    }

    FieldPtr field_;
    std::uint32_t v_;
};

inline FieldElem Field::element(std::uint32_t v) const {
    return FieldElem(shared_from_this(), v);
}

inline FieldElem Field::zero() const { return element(0); }
inline FieldElem Field::one() const { return element(1); }

inline std::vector<FieldElem> Field::elements() const {
    std::vector<FieldElem> out;
    out.reserve(q_);
    for (std::uint32_t v = 0; v < q_; ++v) out.push_back(element(v));
    return out;
}

}  // namespace veronet
