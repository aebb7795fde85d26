#include <doctest.h>

#include "oracles.hpp"

using namespace reebhom;

namespace {

EllipsoidParams near_round() {
    return {{make_rational(1), make_rational(101, 100)}, Rational(1)};
}

} // namespace

TEST_CASE("cz_ellipsoid spot values") {
    CHECK(cz_ellipsoid(near_round(), 1, 1) == 3); // 1 + 2(1 + 0)
    CHECK(cz_ellipsoid(near_round(), 2, 1) == 5); // 1 + 2(1 + 1)
    EllipsoidParams resonant{{make_rational(1), make_rational(2)}, Rational(1)};
    CHECK_THROWS_WITH_AS(cz_ellipsoid(resonant, 2, 1),
                         doctest::Contains("ResonantParameter"), reeb_error);
}

TEST_CASE("cz_ellipsoid is strictly increasing in the iterate") {
    EllipsoidParams params{{make_rational(1), make_rational(103, 100),
                            make_rational(107, 100)},
                           Rational(1)};
    for (size_t k = 1; k <= 3; ++k) {
        long long prev = cz_ellipsoid(params, k, 1);
        for (long long n = 2; n <= 7; ++n) {
            long long cur = cz_ellipsoid(params, k, n);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("cz_ellipsoid agrees with the crossing-count oracle") {
    auto gen = oracles::make_rng(160913);
    int done = 0;
    while (done < 40) {
        size_t n = static_cast<size_t>(oracles::rand_int(gen, 2, 4));
        std::vector<Rational> a;
        Rational prev(0);
        for (size_t i = 0; i < n; ++i) {
            prev += make_rational(oracles::rand_int(gen, 1, 30),
                                  oracles::rand_int(gen, 17, 29));
            a.push_back(prev);
        }
        EllipsoidParams params{a, make_rational(oracles::rand_int(gen, 1, 3))};
        size_t k = static_cast<size_t>(oracles::rand_int(gen, 1, n));
        long long it = oracles::rand_int(gen, 1, 8);
        try {
            long long closed_form = cz_ellipsoid(params, k, it);
            CHECK(closed_form == oracles::crossing_count_cz(params, k, it));
            ++done;
        } catch (const reeb_error& e) {
            CHECK(e.code() == errc::resonant_parameter); // resample
        }
    }
}

TEST_CASE("enumerate_orbits for the near-round ellipsoid") {
    SUBCASE("two simple orbits below 2*pi") {
        auto s = enumerate_orbits(near_round(), pi_action(Rational(2)));
        validate_spectrum(s);
        REQUIRE(s.records.size() == 2);
        CHECK(s.records[0].action == pi_action(Rational(1)));
        CHECK(*s.records[0].cz_index == 3);
        CHECK(s.records[1].action == pi_action(make_rational(101, 100)));
        CHECK(*s.records[1].cz_index == 5);
        for (const auto& r : s.records) CHECK(r.is_good);
    }
    SUBCASE("records need action strictly below the cutoff") {
        // the short orbit has action exactly pi, so cutoff pi excludes it
        CHECK(enumerate_orbits(near_round(), pi_action(Rational(1))).records.empty());
        auto s = enumerate_orbits(near_round(), pi_action(make_rational(201, 200)));
        REQUIRE(s.records.size() == 1);
        CHECK(s.records[0].base_id == "e01");
        CHECK(enumerate_orbits(near_round(), pi_action(make_rational(1, 2))).records.empty());
    }
    SUBCASE("resonant axes are refused") {
        EllipsoidParams resonant{{make_rational(1), make_rational(2)}, Rational(1)};
        CHECK_THROWS_WITH_AS(enumerate_orbits(resonant, pi_action(Rational(3))),
                             doctest::Contains("GenericityFailed"), reeb_error);
    }
}

TEST_CASE("all ellipsoid records are good on random valid parameters") {
    auto gen = oracles::make_rng(271828);
    int done = 0;
    while (done < 10) {
        size_t n = static_cast<size_t>(oracles::rand_int(gen, 2, 3));
        std::vector<Rational> a;
        Rational prev(0);
        for (size_t i = 0; i < n; ++i) {
            prev += make_rational(oracles::rand_int(gen, 50, 80),
                                  oracles::rand_int(gen, 47, 53));
            a.push_back(prev);
        }
        EllipsoidParams params{a, Rational(1)};
        try {
            auto s = enumerate_orbits(params, pi_action(a.front() * 4));
            validate_spectrum(s);
            CHECK(!s.records.empty());
            for (const auto& r : s.records) CHECK(r.is_good);
            ++done;
        } catch (const reeb_error& e) {
            CHECK(e.code() == errc::genericity_failed); // resample
        }
    }
}

TEST_CASE("scaling the axes against r^2 changes nothing") {
    EllipsoidParams base{{make_rational(1), make_rational(101, 100)}, Rational(2)};
    EllipsoidParams scaled{{make_rational(3), make_rational(303, 100)},
                           make_rational(2, 3)};
    auto sb = enumerate_orbits(base, pi_action(Rational(4)));
    auto sc = enumerate_orbits(scaled, pi_action(Rational(4)));
    REQUIRE(sb.records.size() == sc.records.size());
    for (size_t i = 0; i < sb.records.size(); ++i) {
        CHECK(sb.records[i].action == sc.records[i].action);
        CHECK(sb.records[i].cz_index == sc.records[i].cz_index);
        CHECK(sb.records[i].iterate == sc.records[i].iterate);
    }
}

TEST_CASE("Ekeland-Lasry certificate for the desk instance") {
    std::vector<Rational> a{make_rational(1), make_rational(101, 100),
                            make_rational(102, 100)};
    auto cert = ekeland_lasry_certificate(a, Rational(1), make_rational(169, 100));

    CHECK(cert.n == 3);
    CHECK(cert.pinching_ok);
    CHECK(cert.window_lo == pi_action(make_rational(17238, 10000)));
    CHECK(cert.window_hi == pi_action(Rational(2)));
    CHECK(cert.chosen_t == pi_action(make_rational(18619, 10000)));
    REQUIRE(cert.generator_actions.size() == 3);
    CHECK(cert.generator_actions[0] == pi_action(make_rational(169, 100)));
    CHECK(cert.generator_actions[1] == pi_action(make_rational(17069, 10000)));
    CHECK(cert.generator_actions[2] == pi_action(make_rational(17238, 10000)));
    CHECK(cert.min_period_bound == pi_action(Rational(1)));
    CHECK(cert.distinct_count == 3);
    for (const auto& ineq : cert.audit) CHECK(ineq.holds);

    SUBCASE("the certificate level really isolates the simple orbits") {
        EllipsoidParams outer{a, make_rational(169, 100)};
        auto s = enumerate_orbits(outer, cert.chosen_t);
        REQUIRE(s.records.size() == 3);
        for (const auto& r : s.records) CHECK(r.iterate == 1);
    }
}

TEST_CASE("Ekeland-Lasry failure modes") {
    std::vector<Rational> a{make_rational(1), make_rational(101, 100)};
    CHECK_THROWS_WITH_AS(ekeland_lasry_certificate(a, Rational(1), Rational(2)),
                         doctest::Contains("PinchingViolated"), reeb_error);
    // pinching fine but window empty: a_n r2^2 >= 2 a_1 r1^2
    std::vector<Rational> spread{make_rational(1), make_rational(21, 10)};
    CHECK_THROWS_WITH_AS(
        ekeland_lasry_certificate(spread, Rational(1), make_rational(199, 100)),
        doctest::Contains("WindowEmpty"), reeb_error);
}

TEST_CASE("degenerate pinch r1 = r2 still certifies") {
    std::vector<Rational> a{make_rational(1), make_rational(101, 100),
                            make_rational(103, 100)};
    auto cert = ekeland_lasry_certificate(a, Rational(1), Rational(1));
    CHECK(cert.window_lo == pi_action(make_rational(103, 100)));
    CHECK(cert.window_hi == pi_action(Rational(2)));
    CHECK(cert.distinct_count == 3);
}
