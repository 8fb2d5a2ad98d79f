// Construction of the k-osculating linear network code of the degree-d
// Veronese variety over GF(q): one codeword subspace per rational point of
// projective n-space, each the affine cone of the k-osculating space at that
// point.  Alongside the constructive route, closed-form parameter predictions
// and an exhaustive verifier that checks the two against each other.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf.hpp"
#include "linalg.hpp"
#include "veronese.hpp"

namespace veronet {

/// Type-and-normalized parameters [N, dim, log_q |C|, D] of a constant-
/// dimension subspace code.
struct CodeParams {
    std::size_t packet_length = 0;  // N, ambient dimension
    std::size_t dim = 0;            // codeword dimension
    std::uint64_t size = 0;         // |C|
    double log_q_size = 0.0;
    std::size_t min_distance = 0;   // D
    double lambda = 0.0;            // dim / N
    double rate = 0.0;              // log_q|C| / (N * dim)
    double delta = 0.0;             // D / (2 * dim)

    bool operator==(const CodeParams& o) const {
        return packet_length == o.packet_length && dim == o.dim && size == o.size &&
               log_q_size == o.log_q_size && min_distance == o.min_distance &&
               lambda == o.lambda && rate == o.rate && delta == o.delta;
    }
    bool operator!=(const CodeParams& o) const { return !(*this == o); }
};

/// Fills the derived fields from the four integer parameters.
inline CodeParams make_code_params(std::size_t packet_length, std::size_t dim,
                                   std::uint64_t size, std::size_t min_distance,
                                   std::uint64_t q) {
    CodeParams p;
    p.packet_length = packet_length;
    p.dim = dim;
    p.size = size;
    p.min_distance = min_distance;
    p.log_q_size = std::log(static_cast<double>(size)) / std::log(static_cast<double>(q));
    p.lambda = static_cast<double>(dim) / static_cast<double>(packet_length);
    p.rate = p.log_q_size / (static_cast<double>(packet_length) * static_cast<double>(dim));
    p.delta = static_cast<double>(min_distance) / (2.0 * static_cast<double>(dim));
    return p;
}

struct Codeword {
    LinearForm label;  // the projective point the cone osculates at
    Subspace space;
};

class Code {
public:
    Code(FieldPtr field, std::uint32_t n, std::uint32_t d, std::uint32_t k,
         std::vector<Codeword> words, CodeParams params)
        : field_(std::move(field)), n_(n), d_(d), k_(k),
          words_(std::move(words)), params_(params) {}

    const FieldPtr& field() const { return field_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t d() const { return d_; }
    std::uint32_t k() const { return k_; }
    const std::vector<Codeword>& codewords() const { return words_; }
    const CodeParams& params() const { return params_; }
    std::size_t size() const { return words_.size(); }

private:
    FieldPtr field_;
    std::uint32_t n_, d_, k_;
    std::vector<Codeword> words_;
    CodeParams params_;
};

/// The 1 + q + ... + q^n points of projective n-space as normalized linear
/// forms, ordered by position of the leading 1 and then by the remaining
/// coordinates (leftmost most significant, each in element enumeration
/// order).
inline std::vector<LinearForm> projective_points(const FieldPtr& field, std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("projective dimension must be at least 1");
    const std::uint64_t q = field->order();
    std::uint64_t count = 0;
    std::uint64_t power = 1;
    for (std::uint32_t i = 0; i <= n; ++i) {
        count += power;
        if (count > kMaxFieldOrder)
            throw std::invalid_argument("projective point count exceeds the 2^20 cap");
        power *= q;
    }
    std::vector<LinearForm> out;
    out.reserve(count);
    for (std::uint32_t lead = 0; lead <= n; ++lead) {
        const std::uint32_t tail = n - lead;
        std::vector<std::uint32_t> suffix(tail, 0);
        while (true) {
            std::vector<std::uint32_t> coeffs(n + 1, 0);
            coeffs[lead] = 1;
            for (std::uint32_t i = 0; i < tail; ++i) coeffs[lead + 1 + i] = suffix[i];
            out.emplace_back(field, coeffs);
            std::size_t i = tail;
            while (i-- > 0) {
                if (suffix[i] + 1 < q) {
                    ++suffix[i];
                    for (std::size_t j = i + 1; j < tail; ++j) suffix[j] = 0;
                    break;
                }
                if (i == 0) {
                    i = tail;  // odometer exhausted
                    break;
                }
            }
            if (i == tail || tail == 0) break;
        }
    }
    return out;
}

namespace detail {

inline CodeParams observed_params(const std::vector<Codeword>& words, std::uint64_t q,
                                  std::size_t packet_length) {
    if (words.size() < 2)
        throw std::invalid_argument("code parameters need at least two codewords");
    std::size_t min_dist = 0;
    bool first = true;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const std::size_t dist = subspace_distance(words[i].space, words[j].space);
            if (first || dist < min_dist) {
                min_dist = dist;
                first = false;
            }
        }
    return make_code_params(packet_length, words[0].space.dim(), words.size(), min_dist, q);
}

}  // namespace detail

/// Observed parameters of a code: minimum distance by exhaustive pairwise
/// subspace distance, everything else read off the codewords.
inline CodeParams code_params(const Code& code) {
    return detail::observed_params(code.codewords(), code.field()->order(),
                                   code.codewords().at(0).space.ambient_dim());
}

/// One osculating cone per projective point.
inline Code build_code(const FieldPtr& field, std::uint32_t n, std::uint32_t d,
                       std::uint32_t k) {
    if (k < 1 || k >= d)
        throw std::invalid_argument("osculating order k must satisfy 1 <= k < d");
    std::vector<Codeword> words;
    for (const LinearForm& point : projective_points(field, n))
        words.push_back(Codeword{point, osculating_cone(point, d, k)});
    CodeParams params = detail::observed_params(words, field->order(),
                                                binomial(n + d, d));
    return Code(field, n, d, k, std::move(words), params);
}

/// Intersection dimension of two distinct codewords: C(2k-d+n, n) when
/// 2k >= d, zero when 2k < d.  At 2k = d the intersection is the line
/// spanned by L1^{d-k} L2^{d-k}, so the first case's value (here C(n, n)
/// = 1) is the one the construction realizes on the boundary.
inline std::size_t predicted_intersection_dim(std::uint32_t n, std::uint32_t d,
                                              std::uint32_t k) {
    if (k < 1 || k >= d)
        throw std::invalid_argument("osculating order k must satisfy 1 <= k < d");
    (void)detail::form_space_dim(n, d);  // same desk-scale domain as the construction
    if (2 * k < d) return 0;
    return binomial(2 * k - d + n, n);
}

/// Closed-form parameters with no code construction.
inline CodeParams predicted_params(std::uint32_t n, std::uint32_t d, std::uint32_t k,
                                   std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    if (k < 1 || k >= d)
        throw std::invalid_argument("osculating order k must satisfy 1 <= k < d");
    const std::size_t packet_length = detail::form_space_dim(n, d);
    const std::size_t dim = binomial(k + n, n);
    std::uint64_t size = 0;
    std::uint64_t power = 1;
    for (std::uint32_t i = 0; i <= n; ++i) {
        size += power;
        if (size > kMaxFieldOrder)
            throw std::invalid_argument("projective point count exceeds the 2^20 cap");
        power *= q;
    }
    const std::size_t min_distance = 2 * (dim - predicted_intersection_dim(n, d, k));
    return make_code_params(packet_length, dim, size, min_distance, q);
}

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::uint64_t q = 0;
    std::uint32_t n = 0, d = 0, k = 0;
    std::vector<Check> checks;

    bool all_pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline std::string pair_label(const Codeword& a, const Codeword& b) {
    std::ostringstream os;
    os << "pair (";
    for (std::size_t i = 0; i < a.label.coeffs().size(); ++i)
        os << (i ? " " : "") << a.label.field()->to_text(a.label.coeffs()[i]);
    os << ") / (";
    for (std::size_t i = 0; i < b.label.coeffs().size(); ++i)
        os << (i ? " " : "") << b.label.field()->to_text(b.label.coeffs()[i]);
    os << ")";
    return os.str();
}

/// span{ L1^{d-k} L2^{d-k} X^beta : |beta| = 2k-d }, the subspace the
/// intersection of two distinct cones must equal when 2k >= d.
inline Subspace predicted_intersection_space(const Codeword& a, const Codeword& b,
                                             std::uint32_t d, std::uint32_t k) {
    const std::uint32_t n = a.label.n();
    const FieldPtr& field = a.label.field();
    const Form product = form_pow(a.label.as_form(), d - k) *
                         form_pow(b.label.as_form(), d - k);
    const std::size_t ambient = binomial(n + d, d);
    if (2 * k == d) {  // R_0: the product itself spans the intersection
        Matrix row(field, 1, ambient);
        for (std::size_t c = 0; c < ambient; ++c) row(0, c) = product.coeff_at(c);
        return Subspace::span_rows(row);
    }
    MonomialBasis basis(n, 2 * k - d);
    Matrix rows(field, basis.size(), ambient);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Form row = product * Form::monomial(field, basis.monomial_at(i));
        for (std::size_t c = 0; c < ambient; ++c) rows(i, c) = row.coeff_at(c);
    }
    return Subspace::span_rows(rows);
}

}  // namespace detail

/**
 * Exhaustively checks every claim about the code of parameters (q, n, d, k):
 * codeword dimension, cardinality, pairwise intersection dimension and (for
 * 2k >= d) the intersection subspace itself, equidistance, the minimum
 * distance value, and agreement of the brute-force intersection oracle where
 * q^dim fits under `oracle_cap`.  Failures become report entries with a
 * counterexample, never exceptions.
 */
inline VerifyReport verify_theorem(const FieldPtr& field, std::uint32_t n,
                                   std::uint32_t d, std::uint32_t k,
                                   std::uint64_t oracle_cap = std::uint64_t{1} << 12) {
    const Code code = build_code(field, n, d, k);
    const CodeParams predicted = predicted_params(n, d, k, field->order());
    const std::size_t expected_int_dim = predicted_intersection_dim(n, d, k);
    const auto& words = code.codewords();

    VerifyReport report;
    report.q = field->order();
    report.n = n;
    report.d = d;
    report.k = k;

    Check dim_check{"equidimensional", true, ""};
    for (const Codeword& w : words) {
        if (w.space.dim() != predicted.dim) {
            dim_check.pass = false;
            dim_check.detail = "codeword has dimension " + std::to_string(w.space.dim()) +
                               ", expected " + std::to_string(predicted.dim);
            break;
        }
    }

    Check size_check{"cardinality", true, ""};
    if (words.size() != predicted.size) {
        size_check.pass = false;
        size_check.detail = "built " + std::to_string(words.size()) + " codewords, expected " +
                            std::to_string(predicted.size);
    } else {
        std::set<std::vector<std::uint32_t>> seen;
        for (const Codeword& w : words) {
            std::vector<std::uint32_t> key;
            for (std::size_t r = 0; r < w.space.dim(); ++r)
                for (std::size_t c = 0; c < w.space.ambient_dim(); ++c)
                    key.push_back(w.space.basis()(r, c));
            if (!seen.insert(std::move(key)).second) {
                size_check.pass = false;
                size_check.detail = "duplicate codeword subspace";
                break;
            }
        }
    }

    Check int_dim_check{"intersection-dimension", true, ""};
    Check int_space_check{"intersection-subspace", true,
                          2 * k < d ? "not applicable (2k < d)" : ""};
    Check equidist_check{"equidistance", true, ""};
    Check min_dist_check{"min-distance", true, ""};
    Check oracle_check{"oracle-agreement", true, ""};
    std::uint64_t oracle_pairs = 0;

    std::size_t common_dist = 0;
    std::size_t observed_min = 0;
    bool first_pair = true;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const Subspace inter = intersect(words[i].space, words[j].space);
            if (int_dim_check.pass && inter.dim() != expected_int_dim) {
                int_dim_check.pass = false;
                int_dim_check.detail = detail::pair_label(words[i], words[j]) +
                                       " intersects in dimension " +
                                       std::to_string(inter.dim()) + ", expected " +
                                       std::to_string(expected_int_dim);
            }
            if (2 * k >= d && int_space_check.pass) {
                const Subspace expected =
                    detail::predicted_intersection_space(words[i], words[j], d, k);
                if (inter != expected) {
                    int_space_check.pass = false;
                    int_space_check.detail = detail::pair_label(words[i], words[j]) +
                                             " has unexpected intersection subspace";
                }
            }
            const std::size_t dist = subspace_distance(words[i].space, words[j].space);
            observed_min = first_pair ? dist : std::min(observed_min, dist);
            if (first_pair) {
                common_dist = dist;
                first_pair = false;
            } else if (equidist_check.pass && dist != common_dist) {
                equidist_check.pass = false;
                equidist_check.detail = detail::pair_label(words[i], words[j]) +
                                        " at distance " + std::to_string(dist) +
                                        ", previous pairs at " + std::to_string(common_dist);
            }
            std::uint64_t enum_size = 1;
            bool within_cap = true;
            for (std::size_t t = 0; t < words[i].space.dim() && within_cap; ++t) {
                enum_size *= field->order();
                if (enum_size > oracle_cap) within_cap = false;
            }
            if (within_cap) {
                ++oracle_pairs;
                if (oracle_check.pass &&
                    intersect_oracle(words[i].space, words[j].space) != inter.dim()) {
                    oracle_check.pass = false;
                    oracle_check.detail = detail::pair_label(words[i], words[j]) +
                                          ": oracle disagrees with Zassenhaus dimension";
                }
            }
        }
    }
    if (oracle_check.pass)
        oracle_check.detail = std::to_string(oracle_pairs) + " pairs within cap";

    if (observed_min != predicted.min_distance) {
        min_dist_check.pass = false;
        min_dist_check.detail = "observed minimum distance " + std::to_string(observed_min) +
                                ", predicted " + std::to_string(predicted.min_distance);
    }
    if (min_dist_check.pass && code.params().min_distance != predicted.min_distance) {
        min_dist_check.pass = false;
        min_dist_check.detail = "constructed params disagree with prediction";
    }

    report.checks = {dim_check,      size_check,    int_dim_check, int_space_check,
                     equidist_check, min_dist_check, oracle_check};
    return report;
}

}  // namespace veronet
