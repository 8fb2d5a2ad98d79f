// Acceptance suite: runs every release criterion end to end and prints one
// pass/fail line per criterion.  Exits nonzero if any criterion fails.
//
// All comparisons are exact; there are no tolerances anywhere.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <veronet/channel.hpp>
#include <veronet/code.hpp>
#include <veronet/gf.hpp>
#include <veronet/io.hpp>
#include <veronet/linalg.hpp>
#include <veronet/veronese.hpp>

namespace {

using namespace veronet;

constexpr std::uint64_t kGridQ[] = {2, 3, 4, 5, 7, 8, 9};
constexpr std::uint32_t kGridN[] = {1, 2};
constexpr std::uint32_t kGridD[] = {2, 3, 4};

struct Criterion {
    std::string name;
    bool pass = true;
    std::string detail = "";
};

struct GridOutcome {
    std::vector<VerifyReport> reports;
    std::uint64_t tuples = 0;
};

GridOutcome run_grid() {
    GridOutcome out;
    for (std::uint64_t q : kGridQ) {
        const FieldPtr field = Field::from_order(q);
        for (std::uint32_t n : kGridN)
            for (std::uint32_t d : kGridD)
                for (std::uint32_t k = 1; k < d; ++k) {
                    out.reports.push_back(verify_theorem(field, n, d, k));
                    ++out.tuples;
                }
    }
    return out;
}

std::string tuple_of(const VerifyReport& r) {
    std::ostringstream os;
    os << "(q=" << r.q << ", n=" << r.n << ", d=" << r.d << ", k=" << r.k << ")";
    return os.str();
}

// Criterion 1: every closed-form claim over the whole grid, exact.
Criterion check_grid_conformance(const GridOutcome& grid) {
    Criterion c{"theorem grid conformance"};
    std::uint64_t failures = 0;
    for (const VerifyReport& r : grid.reports)
        for (const Check& check : r.checks) {
            if (check.name == "intersection-subspace" || check.name == "oracle-agreement")
                continue;  // counted by criteria 2 and 3
            if (!check.pass) {
                ++failures;
                if (c.pass) {
                    c.pass = false;
                    c.detail = tuple_of(r) + " " + check.name + ": " + check.detail;
                }
            }
        }
    if (c.pass)
        c.detail = std::to_string(grid.tuples) + " tuples, every check exact";
    return c;
}

// Criterion 2: canonical equality of each pairwise intersection with the
// product span whenever 2k >= d, across the grid.
Criterion check_intersection_identity(const GridOutcome& grid) {
    Criterion c{"intersection-subspace identity"};
    for (const VerifyReport& r : grid.reports)
        for (const Check& check : r.checks)
            if (check.name == "intersection-subspace" && !check.pass) {
                c.pass = false;
                c.detail = tuple_of(r) + ": " + check.detail;
                return c;
            }
    c.detail = "all pairs with 2k >= d match the product span";
    return c;
}

// Criterion 3: the enumeration oracle against the Zassenhaus dimension, on
// all in-cap codeword pairs of the grid plus 1000 random pairs per field.
Criterion check_oracle(const GridOutcome& grid) {
    Criterion c{"oracle cross-check"};
    for (const VerifyReport& r : grid.reports)
        for (const Check& check : r.checks)
            if (check.name == "oracle-agreement" && !check.pass) {
                c.pass = false;
                c.detail = tuple_of(r) + ": " + check.detail;
                return c;
            }

    constexpr std::uint64_t kCap = std::uint64_t{1} << 12;
    constexpr std::size_t kAmbient = 8;
    std::uint64_t pairs = 0;
    for (std::uint64_t q : kGridQ) {
        const FieldPtr field = Field::from_order(q);
        std::size_t max_dim = 0;
        for (std::uint64_t power = q; power <= kCap && max_dim < kAmbient; power *= q)
            ++max_dim;
        Rng rng(0xACCE55 + q);
        for (int i = 0; i < 1000; ++i) {
            const Subspace a =
                random_subspace(field, kAmbient, rng.below(max_dim + 1), rng);
            const Subspace b =
                random_subspace(field, kAmbient, rng.below(kAmbient + 1), rng);
            if (intersect_oracle(a, b) != intersect(a, b).dim()) {
                c.pass = false;
                c.detail = "random pair disagreement over GF(" + std::to_string(q) + ")";
                return c;
            }
            ++pairs;
        }
    }
    c.detail = "all grid codeword pairs within cap plus " + std::to_string(pairs) +
               " random pairs agree";
    return c;
}

// Criterion 4: metric axioms and the dimension formula on 10^4 random
// triples per field over GF(2), GF(3), GF(4).
Criterion check_metric_axioms() {
    Criterion c{"metric axioms"};
    constexpr std::size_t kAmbient = 6;
    for (std::uint64_t q : {2, 3, 4}) {
        const FieldPtr field = Field::from_order(q);
        Rng rng(0x3E7A1C + q);
        for (int i = 0; i < 10000; ++i) {
            const Subspace a = random_subspace(field, kAmbient, rng.below(kAmbient + 1), rng);
            const Subspace b = random_subspace(field, kAmbient, rng.below(kAmbient + 1), rng);
            const Subspace t = random_subspace(field, kAmbient, rng.below(kAmbient + 1), rng);
            const std::size_t ab = subspace_distance(a, b);
            const std::size_t bc = subspace_distance(b, t);
            const std::size_t ac = subspace_distance(a, t);
            const bool symmetric = ab == subspace_distance(b, a);
            const bool identity = (ab == 0) == (a == b);
            const bool triangle = ac <= ab + bc;
            const bool dims = a.dim() + b.dim() ==
                              sum(a, b).dim() + intersect(a, b).dim();
            if (!(symmetric && identity && triangle && dims)) {
                c.pass = false;
                c.detail = "violation over GF(" + std::to_string(q) + ") at triple " +
                           std::to_string(i);
                return c;
            }
        }
    }
    c.detail = "30000 triples, zero violations";
    return c;
}

// Criterion 5: cone dimension and flag inclusion in the characteristics
// where expansion coefficients can vanish (q = p in {2, 3}).
Criterion check_characteristic_robustness() {
    Criterion c{"characteristic-p robustness"};
    std::uint64_t cones = 0;
    for (std::uint64_t q : {2, 3}) {
        const FieldPtr field = Field::from_order(q);
        for (std::uint32_t n : kGridN)
            for (std::uint32_t d : kGridD)
                for (const LinearForm& point : projective_points(field, n)) {
                    std::vector<Subspace> chain;
                    for (std::uint32_t k = 1; k < d; ++k) {
                        const Subspace cone = osculating_cone(point, d, k);
                        ++cones;
                        if (cone.dim() != binomial(k + n, n)) {
                            c.pass = false;
                            c.detail = "cone dimension " + std::to_string(cone.dim()) +
                                       " != C(k+n,n) at q=" + std::to_string(q) +
                                       " n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                       " k=" + std::to_string(k);
                            return c;
                        }
                        chain.push_back(cone);
                    }
                    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                        if (intersect(chain[i], chain[i + 1]) != chain[i]) {
                            c.pass = false;
                            c.detail = "flag inclusion fails at q=" + std::to_string(q) +
                                       " n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                       " k=" + std::to_string(i + 1);
                            return c;
                        }
                }
    }
    c.detail = std::to_string(cones) + " cones: dimensions exact, flags nested";
    return c;
}

// Every channel outcome with rho + t < D/2 for one codeword, exhaustively.
bool exhaust_decoder(const Code& code, std::uint64_t& cases, std::string& fail) {
    const std::size_t dim = code.params().dim;
    const std::size_t ambient = code.params().packet_length;
    const std::size_t half = code.params().min_distance / 2;
    for (std::size_t w = 0; w < code.size(); ++w) {
        const Subspace& v = code.codewords()[w].space;
        for (std::size_t rho = 0; rho <= dim; ++rho)
            for (std::size_t t = 0; rho + t < half; ++t) {
                if (rho > dim || dim + t > ambient) continue;
                for (const Subspace& kept : subspaces_of(v, dim - rho)) {
                    std::vector<Subspace> errors;
                    if (t == 0) {
                        errors.push_back(Subspace::zero(code.field(), ambient));
                    } else {
                        for (const Subspace& e : all_subspaces(code.field(), ambient, t))
                            if (intersect(v, e).dim() == 0) errors.push_back(e);
                    }
                    for (const Subspace& e : errors) {
                        const Subspace received = sum(kept, e);
                        const DecodeResult r = md_decode(code, received);
                        ++cases;
                        if (!r.unique() || r.index() != w) {
                            fail = "codeword " + std::to_string(w) + " with rho=" +
                                   std::to_string(rho) + " t=" + std::to_string(t);
                            return false;
                        }
                    }
                }
            }
    }
    return true;
}

// Criterion 6: decoder guarantee, exhaustive on the two small codes and
// sampled (1000 trials each) on larger grid entries.
Criterion check_decoder_guarantee() {
    Criterion c{"decoder guarantee below D/2"};
    std::uint64_t cases = 0;
    std::string fail;
    const Code small1 = build_code(Field::from_order(2), 1, 3, 1);
    const Code small2 = build_code(Field::from_order(2), 2, 2, 1);
    if (!exhaust_decoder(small1, cases, fail) || !exhaust_decoder(small2, cases, fail)) {
        c.pass = false;
        c.detail = "exhaustive decode failure: " + fail;
        return c;
    }

    struct Sampled {
        std::uint64_t q;
        std::uint32_t n, d, k;
        std::size_t rho, t;
    };
    // rho + t < D/2 in every row
    const std::vector<Sampled> sampled = {
        {3, 1, 3, 1, 1, 0},  // D = 4
        {3, 1, 3, 1, 0, 1},
        {3, 2, 2, 1, 1, 0},  // D = 4
        {4, 1, 4, 1, 0, 1},  // D = 4
        {9, 2, 3, 2, 1, 1},  // D = 6
        {5, 2, 4, 3, 2, 1},  // D = 8
    };
    std::uint64_t trials_total = 0;
    for (const Sampled& s : sampled) {
        const Code code = build_code(Field::from_order(s.q), s.n, s.d, s.k);
        if (s.rho + s.t >= code.params().min_distance / 2) {
            c.pass = false;
            c.detail = "sampled configuration is not below D/2";
            return c;
        }
        const SimulationStats stats =
            simulate(code, ChannelConfig{s.rho, s.t, 0xC0DE + s.q}, 1000);
        trials_total += stats.trials;
        if (stats.success_rate != 1.0) {
            c.pass = false;
            c.detail = "sampled success rate " + std::to_string(stats.success_rate) +
                       " at q=" + std::to_string(s.q) + " n=" + std::to_string(s.n) +
                       " d=" + std::to_string(s.d) + " k=" + std::to_string(s.k);
            return c;
        }
    }
    c.detail = std::to_string(cases) + " exhaustive outcomes and " +
               std::to_string(trials_total) + " sampled trials, all decoded correctly";
    return c;
}

// Criterion 7: at rho = D/2 the guarantee is tight; over all nine
// (codeword, erasure) outcomes of the (1,2,1,q=2) code at least one decode
// is ambiguous.
Criterion check_boundary_tightness() {
    Criterion c{"D/2 boundary tightness"};
    const Code code = build_code(Field::from_order(2), 1, 2, 1);  // D = 2
    std::uint64_t outcomes = 0, ambiguous = 0;
    for (std::size_t w = 0; w < code.size(); ++w)
        for (const Subspace& kept : subspaces_of(code.codewords()[w].space, 1)) {
            ++outcomes;
            if (!md_decode(code, kept).unique()) ++ambiguous;
        }
    if (outcomes != 9) {
        c.pass = false;
        c.detail = "expected 9 outcomes, saw " + std::to_string(outcomes);
        return c;
    }
    if (ambiguous == 0) {
        c.pass = false;
        c.detail = "no ambiguity at rho = D/2";
        return c;
    }
    c.detail = std::to_string(ambiguous) + " of 9 erasure outcomes are ambiguous";
    return c;
}

// Criterion 8: build -> serialize -> parse -> compare, bit-exact, for every
// grid entry.
Criterion check_serialization_roundtrip() {
    Criterion c{"serialization round-trip"};
    std::uint64_t entries = 0;
    for (std::uint64_t q : kGridQ) {
        const FieldPtr field = Field::from_order(q);
        for (std::uint32_t n : kGridN)
            for (std::uint32_t d : kGridD)
                for (std::uint32_t k = 1; k < d; ++k) {
                    const Code code = build_code(field, n, d, k);
                    const std::string text = code_to_json(code).dump(2);
                    const Code back = code_from_json(json::parse(text));
                    bool same = back.size() == code.size() &&
                                back.params() == code.params() &&
                                *back.field() == *code.field();
                    for (std::size_t i = 0; same && i < code.size(); ++i)
                        same = back.codewords()[i].label == code.codewords()[i].label &&
                               back.codewords()[i].space == code.codewords()[i].space;
                    if (!same || code_to_json(back).dump(2) != text) {
                        c.pass = false;
                        c.detail = "mismatch at q=" + std::to_string(q) +
                                   " n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                   " k=" + std::to_string(k);
                        return c;
                    }
                    ++entries;
                }
    }
    c.detail = std::to_string(entries) + " grid entries identical after the round trip";
    return c;
}

}  // namespace

int main() {
    const auto started = std::chrono::steady_clock::now();
    const GridOutcome grid = run_grid();

    std::vector<Criterion> criteria;
    criteria.push_back(check_grid_conformance(grid));
    criteria.push_back(check_intersection_identity(grid));
    criteria.push_back(check_oracle(grid));
    criteria.push_back(check_metric_axioms());
    criteria.push_back(check_characteristic_robustness());
    criteria.push_back(check_decoder_guarantee());
    criteria.push_back(check_boundary_tightness());
    criteria.push_back(check_serialization_roundtrip());

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        all = all && c.pass;
        std::cout << "[" << i + 1 << "/" << criteria.size() << "] "
                  << (c.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << c.detail
                  << '\n';
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILURES above")
              << " (" << elapsed.count() << " ms)" << '\n';
    return all ? 0 : 1;
}
