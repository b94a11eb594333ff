#include <doctest.h>

#include <cmath>
#include <random>

#include "obswave/schedule.hpp"
#include "test_util.hpp"

using namespace obswave;
using testutil::rp;

namespace {

constexpr double kPi = std::numbers::pi;

Schedule<Rational> one_endpoint_forever() {
    Schedule<Rational> s;
    s.segments.push_back({Endpoint::zero, rp(0), std::nullopt});
    s.validate();
    return s;
}

Schedule<Rational> single_exchange_schedule(const Rational& t0) {
    Schedule<Rational> s;
    s.segments.push_back({Endpoint::zero, rp(0), t0});
    s.segments.push_back({Endpoint::pi, t0, std::nullopt});
    s.validate();
    return s;
}

} // namespace

TEST_CASE("schedule validation") {
    Schedule<Rational> s;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s.segments.push_back({Endpoint::zero, rp(1), rp(2)});
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);  // must start at 0
    s.segments[0].from = rp(0);
    s.segments.push_back({Endpoint::pi, rp(3), rp(4)});
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);  // gap
    s.segments[1].from = rp(2);
    CHECK_NOTHROW(s.validate());
}

TEST_CASE("is_observable_at basic cases") {
    Schedule<Rational> full;
    full.segments.push_back({Endpoint::zero, rp(0), rp(2)});
    CHECK(is_observable_at(full, 0));

    Schedule<double> short_window;
    short_window.segments.push_back({Endpoint::zero, 0.0, 2.0 * kPi - 0.1});
    CHECK_FALSE(is_observable_at(short_window, 0));

    // T0 = pi/3 alternates without ever covering
    const auto s = make_constant_rate<Rational>(rp(1, 3), 60);
    for (std::size_t n = 0; n < 60; ++n) CHECK_FALSE(is_observable_at(s, n));

    CHECK_THROWS_AS(is_observable_at(full, 5), std::out_of_range);
}

TEST_CASE("monotonicity of the covering condition") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<long long> inc(1, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> bps;
        Rational t(0);
        for (int k = 0; k < 12; ++k) {
            t += Rational(inc(rng), 6);
            bps.push_back(t);
        }
        const auto s = make_alternating<Rational>(bps);
        bool seen = false;
        for (std::size_t n = 0; n < bps.size(); ++n) {
            const bool obs = is_observable_at(s, n);
            if (seen) CHECK(obs);
            if (obs) seen = true;
        }
    }
}

TEST_CASE("optimal_time on the one-endpoint family gives 2pi") {
    const auto rep = optimal_time(one_endpoint_forever());
    REQUIRE(rep.observable);
    CHECK(*rep.t_opt == rp(2));
    CHECK(*rep.least_index_h == 0);
}

TEST_CASE("optimal_time matches the single-exchange closed form") {
    SUBCASE("T0 = 3pi/2") {
        const auto rep = optimal_time(single_exchange_schedule(rp(3, 2)));
        REQUIRE(rep.observable);
        CHECK(*rep.t_opt == rp(3));
        CHECK(*rep.least_index_h == 1);
    }
    SUBCASE("T0 = pi/2") {
        const auto rep = optimal_time(single_exchange_schedule(rp(1, 2)));
        REQUIRE(rep.observable);
        CHECK(*rep.t_opt == rp(5, 2));
    }
    SUBCASE("T0 = pi boundary") {
        const auto rep = optimal_time(single_exchange_schedule(rp(1)));
        REQUIRE(rep.observable);
        CHECK(*rep.t_opt == rp(3));
    }
}

TEST_CASE("single_exchange_topt closed form and oracle agreement") {
    const auto hi = single_exchange_topt<Rational>(rp(3, 2));
    CHECK(hi.t_opt == rp(3));
    REQUIRE(hi.reduced.size() == 2);
    CHECK(hi.reduced[1].from == rp(5, 2));
    CHECK(hi.reduced[1].to == rp(3));
    CHECK_FALSE(hi.alternative.has_value());

    const auto lo = single_exchange_topt<Rational>(rp(1, 2));
    CHECK(lo.t_opt == rp(5, 2));
    CHECK(lo.reduced[1].from == rp(1));
    REQUIRE(lo.alternative.has_value());
    CHECK((*lo.alternative)[0].from == rp(1, 2));

    CHECK_THROWS_AS(single_exchange_topt<Rational>(rp(2)), std::domain_error);
    CHECK_THROWS_AS(single_exchange_topt<Rational>(rp(0)), std::domain_error);

    std::mt19937_64 rng(303);
    for (int i = 0; i < 100; ++i) {
        const Rational t0 = testutil::random_rate(rng, 60);
        const auto closed = single_exchange_topt<Rational>(t0);
        const auto swept = optimal_time(single_exchange_schedule(t0));
        REQUIRE(swept.observable);
        CHECK(closed.t_opt == *swept.t_opt);
    }
}

TEST_CASE("t_opt lies in the closure of the covering segment and is >= 2pi") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<long long> inc(1, 8);
    int observed = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> bps;
        Rational t(0);
        for (int k = 0; k < 14; ++k) {
            t += Rational(inc(rng), 4);
            bps.push_back(t);
        }
        const auto s = make_alternating<Rational>(bps);
        const auto rep = optimal_time(s);
        if (!rep.observable) continue;
        ++observed;
        CHECK(*rep.t_opt >= rp(2));
        const auto& seg = s.segments[*rep.least_index_h];
        CHECK(seg.from <= *rep.t_opt);
        CHECK(*rep.t_opt <= *seg.to);
        // h is the least covering index
        if (*rep.least_index_h > 0)
            CHECK_FALSE(is_observable_at(s, *rep.least_index_h - 1));
        CHECK(is_observable_at(s, *rep.least_index_h));
    }
    CHECK(observed > 50);
}

TEST_CASE("sweep self-consistency at t_opt +- epsilon in float mode") {
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> inc(0.3, 2.5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<double> bps;
        double t = 0;
        for (int k = 0; k < 12; ++k) {
            t += inc(rng);
            bps.push_back(t);
        }
        const auto s = make_alternating<double>(bps);
        const auto rep = optimal_time(s);
        if (!rep.observable) continue;
        const double topt = *rep.t_opt;
        CHECK(is_observable_in_time(s, topt + 1e-9));
        CHECK_FALSE(is_observable_in_time(s, topt - 1e-9));
    }
}

TEST_CASE("not observable within the examined segments reports the residual") {
    const auto s = make_constant_rate<Rational>(rp(1, 3), 60);
    const auto rep = optimal_time(s);
    CHECK_FALSE(rep.observable);
    CHECK_FALSE(rep.uncovered.empty());
    CHECK(rep.segments_examined == 60);
    // Residual of the pi/3 family: (T0, 2T0), (3T0, 4T0), (5T0, 6T0).
    const auto expect = ArcSet<Rational>::circle_arc(rp(1, 3), rp(2, 3))
                            .union_with(ArcSet<Rational>::circle_arc(rp(1), rp(4, 3)))
                            .union_with(ArcSet<Rational>::circle_arc(rp(5, 3), rp(2)));
    CHECK(rep.uncovered == expect);
}

TEST_CASE("disjointify splits the circle into pullbacks summing to 2pi") {
    SUBCASE("single unbounded segment") {
        const auto s = one_endpoint_forever();
        const auto d = disjointify(s, 0);
        CHECK(d.total_measure == rp(2));
        REQUIRE(d.intervals.size() == 1);
        REQUIRE(d.intervals[0].size() == 1);
        CHECK(d.intervals[0][0].first == rp(0));
        CHECK(d.intervals[0][0].second == rp(2));
    }
    SUBCASE("single exchange T0 = pi/2") {
        const auto s = single_exchange_schedule(rp(1, 2));
        const auto d = disjointify(s, 1);
        CHECK(d.total_measure == rp(2));
        REQUIRE(d.intervals[0].size() == 1);
        CHECK(d.intervals[0][0] == std::pair<Rational, Rational>(rp(0), rp(1, 2)));
        Rational len(0);
        for (const auto& [a, b] : d.intervals[1]) len += b - a;
        CHECK(rp(1, 2) + len == rp(2));
    }
    SUBCASE("constant rate T0 = pi/2") {
        const auto s = make_constant_rate<Rational>(rp(1, 2), 8);
        REQUIRE(is_observable_at(s, 3));
        const auto d = disjointify(s, 3);
        CHECK(d.total_measure == rp(2));
        // pullbacks of each segment stay inside the segment
        for (std::size_t k = 0; k < d.intervals.size(); ++k) {
            for (const auto& [a, b] : d.intervals[k]) {
                CHECK(s.segments[k].from <= a);
                CHECK(b <= *s.segments[k].to);
            }
        }
    }
    SUBCASE("projections of the pullbacks are pairwise disjoint") {
        const auto s = make_constant_rate<Rational>(rp(2, 5), 12);
        const auto rep = optimal_time(s);
        REQUIRE(rep.observable);
        const auto d = disjointify(s, *rep.least_index_h);
        CHECK(d.total_measure == rp(2));
        ArcSet<Rational> seen = ArcSet<Rational>::empty_set();
        for (std::size_t k = 0; k < d.intervals.size(); ++k) {
            for (const auto& [a, b] : d.intervals[k]) {
                const auto piece =
                    project_interval<Rational>(a, b, s.segments[k].shift());
                CHECK(piece.intersect_with(seen).empty());
                // J~_k is contained in I~_k
                CHECK(piece.minus(project_segment(s.segments[k])).empty());
                seen = seen.union_with(piece);
            }
        }
        CHECK(seen.covers_circle());
    }
    SUBCASE("precondition") {
        const auto s = make_constant_rate<Rational>(rp(1, 2), 8);
        CHECK_THROWS_AS(disjointify(s, 1), std::invalid_argument);
    }
}

TEST_CASE("generalized two-endpoint families") {
    GeneralizedSchedule<Rational> b;
    CHECK_FALSE(is_generalized_observable(b));  // both families empty

    b.zero_intervals.push_back({rp(0), rp(2)});
    CHECK(is_generalized_observable(b));  // classic one-endpoint case

    GeneralizedSchedule<Rational> both;
    both.zero_intervals.push_back({rp(0), rp(1)});
    both.pi_intervals.push_back({rp(0), rp(1)});
    CHECK(is_generalized_observable(both));

    GeneralizedSchedule<Rational> gap;
    gap.zero_intervals.push_back({rp(0), rp(1)});
    gap.pi_intervals.push_back({rp(0), rp(1, 2)});
    CHECK_FALSE(is_generalized_observable(gap));

    GeneralizedSchedule<Rational> bad;
    bad.zero_intervals.push_back({rp(0), rp(1)});
    bad.zero_intervals.push_back({rp(1, 2), rp(3, 2)});
    CHECK_THROWS_AS(is_generalized_observable(bad), std::invalid_argument);
}

TEST_CASE("default horizon policy") {
    const auto s = make_constant_rate<Rational>(rp(1, 3), 5);
    // 10 * ceil(2pi / (pi/3)) = 60
    CHECK(default_horizon_segments(s) == 60);
    const auto u = one_endpoint_forever();
    CHECK(default_horizon_segments(u) == 1);
}
