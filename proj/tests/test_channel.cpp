#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include <veronet/channel.hpp>

using veronet::ChannelConfig;
using veronet::ChannelOutcome;
using veronet::Code;
using veronet::DecodeResult;
using veronet::Field;
using veronet::FieldPtr;
using veronet::Rng;
using veronet::Subspace;

TEST_CASE("bounded draws are unbiased and in range", "[channel]") {
    Rng rng(42);
    std::vector<std::uint64_t> counts(5, 0);
    for (int i = 0; i < 5000; ++i) ++counts[rng.below(5)];
    for (std::uint64_t c : counts) {
        CHECK(c > 800);
        CHECK(c < 1200);
    }
    CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
}

TEST_CASE("transmit", "[channel]") {
    const FieldPtr f2 = Field::make(2);
    const Subspace v = Subspace::span(f2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});

    SECTION("identity channel") {
        const ChannelOutcome out = veronet::transmit(v, ChannelConfig{0, 0, 123});
        CHECK(out.received == v);
        CHECK(out.realized_distance == 0);
    }

    SECTION("one erasure keeps a line of V") {
        const auto lines = veronet::subspaces_of(v, 1);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const ChannelOutcome out = veronet::transmit(v, ChannelConfig{1, 0, seed});
            CHECK(out.realized_distance == 1);
            CHECK(std::find(lines.begin(), lines.end(), out.received) != lines.end());
        }
    }

    SECTION("one injected error dimension") {
        const ChannelOutcome out = veronet::transmit(v, ChannelConfig{0, 1, 7});
        CHECK(out.realized_distance == 1);
        CHECK(out.received.dim() == 3);
        CHECK(out.received.contains(v));
        CHECK(veronet::intersect(out.received, v) == v);
    }

    SECTION("realized distance is always erasures + errors") {
        for (std::size_t rho = 0; rho <= 2; ++rho)
            for (std::size_t t = 0; t <= 2; ++t)
                for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                    const ChannelOutcome out =
                        veronet::transmit(v, ChannelConfig{rho, t, seed});
                    REQUIRE(out.realized_distance == rho + t);
                    REQUIRE(veronet::subspace_distance(out.transmitted, out.received) ==
                            rho + t);
                }
    }

    SECTION("identical seeds reproduce the outcome") {
        const ChannelOutcome a = veronet::transmit(v, ChannelConfig{1, 1, 99});
        const ChannelOutcome b = veronet::transmit(v, ChannelConfig{1, 1, 99});
        CHECK(a.received == b.received);
    }

    SECTION("infeasible parameters are rejected") {
        CHECK_THROWS_AS(veronet::transmit(v, ChannelConfig{3, 0, 1}),
                        std::invalid_argument);
        CHECK_THROWS_AS(veronet::transmit(v, ChannelConfig{0, 3, 1}),
                        std::invalid_argument);
    }
}

TEST_CASE("md_decode", "[channel]") {
    const FieldPtr f2 = Field::make(2);

    SECTION("a codeword decodes to itself") {
        const Code code = veronet::build_code(f2, 1, 3, 1);
        const DecodeResult r = veronet::md_decode(code, code.codewords()[1].space);
        REQUIRE(r.unique());
        CHECK(r.index() == 1);
        CHECK(r.distance == 0);
    }

    SECTION("erasure within half the distance decodes correctly") {
        const Code code = veronet::build_code(f2, 1, 3, 1);  // D = 4
        const Subspace u = Subspace::span(f2, 4, {{1, 0, 0, 0}});
        const DecodeResult r = veronet::md_decode(code, u);
        REQUIRE(r.unique());
        CHECK(r.index() == 0);  // the cone at X0 is span{X0^3, X0^2 X1}
        CHECK(r.distance == 1);
    }

    SECTION("ties are reported, not broken") {
        const Code code = veronet::build_code(f2, 1, 2, 1);  // D = 2
        const Subspace u = Subspace::span(f2, 3, {{0, 1, 0}});
        const DecodeResult r = veronet::md_decode(code, u);
        CHECK(!r.unique());
        CHECK(r.distance == 1);
        CHECK(r.minimizers == std::vector<std::size_t>{0, 2});
        CHECK_THROWS_AS(r.index(), std::logic_error);
    }

    SECTION("ambient mismatch is rejected") {
        const Code code = veronet::build_code(f2, 1, 2, 1);
        CHECK_THROWS_AS(veronet::md_decode(code, Subspace::zero(f2, 4)),
                        std::invalid_argument);
        CHECK_THROWS_AS(veronet::md_decode(code, Subspace::zero(Field::make(3), 3)),
                        std::invalid_argument);
    }
}

TEST_CASE("simulate", "[channel]") {
    const FieldPtr f2 = Field::make(2);

    SECTION("identity channel is always correct") {
        const Code code = veronet::build_code(f2, 1, 2, 1);
        const auto stats = veronet::simulate(code, ChannelConfig{0, 0, 5}, 100);
        CHECK(stats.trials == 100);
        CHECK(stats.correct == 100);
        CHECK(stats.wrong == 0);
        CHECK(stats.ambiguous == 0);
        CHECK(stats.success_rate == 1.0);
    }

    SECTION("below half the minimum distance every trial decodes") {
        const Code code = veronet::build_code(f2, 1, 3, 1);  // D = 4, one erasure is fine
        const auto stats = veronet::simulate(code, ChannelConfig{1, 0, 11}, 300);
        CHECK(stats.correct == 300);
        CHECK(stats.success_rate == 1.0);
    }

    SECTION("at exactly half the distance ambiguities appear") {
        const Code code = veronet::build_code(f2, 1, 2, 1);  // D = 2, erasure hits D/2
        const auto stats = veronet::simulate(code, ChannelConfig{1, 0, 13}, 300);
        CHECK(stats.ambiguous > 0);
        CHECK(stats.correct + stats.wrong + stats.ambiguous == 300);
        CHECK(stats.success_rate < 1.0);
    }

    SECTION("statistics are reproducible and seed-sensitive") {
        const Code code = veronet::build_code(f2, 1, 2, 1);
        const auto a = veronet::simulate(code, ChannelConfig{1, 0, 21}, 50);
        const auto b = veronet::simulate(code, ChannelConfig{1, 0, 21}, 50);
        CHECK(a.correct == b.correct);
        CHECK(a.ambiguous == b.ambiguous);
        CHECK(a.wrong == b.wrong);
    }

    SECTION("bad configurations are rejected") {
        const Code code = veronet::build_code(f2, 1, 2, 1);
        CHECK_THROWS_AS(veronet::simulate(code, ChannelConfig{0, 0, 1}, 0),
                        std::invalid_argument);
        CHECK_THROWS_AS(veronet::simulate(code, ChannelConfig{5, 0, 1}, 10),
                        std::invalid_argument);
        CHECK_THROWS_AS(veronet::simulate(code, ChannelConfig{0, 5, 1}, 10),
                        std::invalid_argument);
    }
}
