// Operator-channel simulation and the minimum-subspace-distance decoder.
//
// A transmission keeps a uniformly random (dim V - rho)-dimensional subspace
// H of the sent codeword V and adds a uniformly random t-dimensional error
// space E with E ∩ V = 0, so the received space H ⊕ E sits at distance
// exactly rho + t from V.  The decoder is the exhaustive argmin of the
// subspace metric over the codebook; ties are reported, never broken.
//
// Randomness: std::mt19937_64 streams.  Trial i of a simulation is seeded
// with splitmix64(seed + (i+1) * 0x9E3779B97F4A7C15), so trials are
// independent and any execution order reproduces the same statistics.
// Bounded draws use rejection sampling on the raw 64-bit output; nothing
// here depends on implementation-defined distribution code.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <random>
#include <vector>

#include "code.hpp"
#include "linalg.hpp"

namespace veronet {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic random stream with unbiased bounded draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform draw from [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("empty draw range");
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % bound;
    }

private:
    std::mt19937_64 eng_;
};

struct ChannelConfig {
    std::size_t erasures = 0;  // dimensions deleted from the transmitted space
    std::size_t errors = 0;    // dimension of the injected error space
    std::uint64_t seed = 0;
};

struct ChannelOutcome {
    Subspace transmitted;
    Subspace received;
    std::size_t realized_distance = 0;  // always erasures + errors
};

namespace detail {

inline Matrix random_matrix(const FieldPtr& field, std::size_t rows, std::size_t cols,
                            Rng& rng) {
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = static_cast<std::uint32_t>(rng.below(field->order()));
    return m;
}

}  // namespace detail

/// Uniformly random k-dimensional subspace of F_q^N (resampled until the
/// generating matrix has full rank).
inline Subspace random_subspace(const FieldPtr& field, std::size_t n, std::size_t k,
                                Rng& rng) {
    if (k > n) throw std::invalid_argument("subspace dimension exceeds ambient");
    if (k == 0) return Subspace::zero(field, n);
    while (true) {
        const Matrix m = detail::random_matrix(field, k, n, rng);
        const Subspace s = Subspace::span_rows(m);
        if (s.dim() == k) return s;
    }
}

/// Uniformly random k-dimensional subspace of V.
inline Subspace random_subspace_of(const Subspace& v, std::size_t k, Rng& rng) {
    if (k > v.dim()) throw std::invalid_argument("subspace dimension exceeds dim V");
    if (k == 0) return Subspace::zero(v.field(), v.ambient_dim());
    while (true) {
        const Matrix coeffs = detail::random_matrix(v.field(), k, v.dim(), rng);
        const Subspace s = Subspace::span_rows(matmul(coeffs, v.basis()));
        if (s.dim() == k) return s;
    }
}

/// Uniformly random t-dimensional E with E ∩ avoid = 0 (rejection on the
/// rank of the stacked bases).
inline Subspace random_error_space(const Subspace& avoid, std::size_t t, Rng& rng) {
    const std::size_t n = avoid.ambient_dim();
    if (avoid.dim() + t > n)
        throw std::invalid_argument("no room for an error space of that dimension");
    if (t == 0) return Subspace::zero(avoid.field(), n);
    while (true) {
        const Matrix m = detail::random_matrix(avoid.field(), t, n, rng);
        const Subspace e = Subspace::span_rows(m);
        if (e.dim() != t) continue;
        if (intersect(avoid, e).dim() == 0) return e;
    }
}

/// One channel use with an explicit random stream.
inline ChannelOutcome transmit(const Subspace& v, const ChannelConfig& cfg, Rng& rng) {
    if (cfg.erasures > v.dim())
        throw std::invalid_argument("cannot erase more dimensions than transmitted");
    const Subspace kept = random_subspace_of(v, v.dim() - cfg.erasures, rng);
    const Subspace error = random_error_space(v, cfg.errors, rng);
    const Subspace received = sum(kept, error);
    return ChannelOutcome{v, received, subspace_distance(v, received)};
}

/// One channel use; deterministic given cfg.seed.
inline ChannelOutcome transmit(const Subspace& v, const ChannelConfig& cfg) {
    Rng rng(splitmix64(cfg.seed));
    return transmit(v, cfg, rng);
}

/// Decoder output: every codeword index attaining the minimum distance.
/// A unique minimizer is a decode; several are an explicit ambiguity.
struct DecodeResult {
    std::vector<std::size_t> minimizers;
    std::size_t distance = 0;

    bool unique() const { return minimizers.size() == 1; }
    std::size_t index() const {
        if (!unique()) throw std::logic_error("ambiguous decode has no single index");
        return minimizers.front();
    }
};

/// Exhaustive minimum-distance decoding of `received` against the codebook.
/// If dist(received, V) < D/2 for some codeword V, the result is uniquely V.
inline DecodeResult md_decode(const Code& code, const Subspace& received) {
    if (code.codewords().empty()) throw std::invalid_argument("empty code");
    const Subspace& first = code.codewords().front().space;
    if (received.ambient_dim() != first.ambient_dim() || *received.field() != *first.field())
        throw std::invalid_argument("received space does not match the code's ambient space");
    DecodeResult result;
    for (std::size_t i = 0; i < code.codewords().size(); ++i) {
        const std::size_t dist = subspace_distance(code.codewords()[i].space, received);
        if (result.minimizers.empty() || dist < result.distance) {
            result.minimizers = {i};
            result.distance = dist;
        } else if (dist == result.distance) {
            result.minimizers.push_back(i);
        }
    }
    return result;
}

struct SimulationStats {
    ChannelConfig config;
    std::uint64_t trials = 0;
    std::uint64_t correct = 0;
    std::uint64_t wrong = 0;
    std::uint64_t ambiguous = 0;
    double success_rate = 0.0;
};

/// Round-robin transmission of the codebook through the channel followed by
/// minimum-distance decoding.  Trials use independently derived seeds, so
/// the statistics depend only on (code, cfg, trials).
inline SimulationStats simulate(const Code& code, const ChannelConfig& cfg,
                                std::uint64_t trials) {
    if (trials == 0) throw std::invalid_argument("need at least one trial");
    const std::size_t dim = code.params().dim;
    const std::size_t ambient = code.params().packet_length;
    if (cfg.erasures > dim)
        throw std::invalid_argument("cannot erase more dimensions than the codeword has");
    if (dim + cfg.errors > ambient)
        throw std::invalid_argument("no room for an error space of that dimension");

    SimulationStats stats;
    stats.config = cfg;
    stats.trials = trials;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const std::size_t word = trial % code.size();
        Rng rng(splitmix64(cfg.seed + (trial + 1) * 0x9E3779B97F4A7C15ULL));
        const ChannelOutcome outcome = transmit(code.codewords()[word].space, cfg, rng);
        const DecodeResult decoded = md_decode(code, outcome.received);
        if (!decoded.unique())
            ++stats.ambiguous;
        else if (decoded.index() == word)
            ++stats.correct;
        else
            ++stats.wrong;
    }
    stats.success_rate = static_cast<double>(stats.correct) / static_cast<double>(trials);
    return stats;
}

}  // namespace veronet
