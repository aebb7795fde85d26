#include <doctest.h>

#include "oracles.hpp"
#include "reebhom/ellipsoid.hpp"

using namespace reebhom;

TEST_CASE("is_lacunary") {
    CHECK(is_lacunary({}));
    CHECK(is_lacunary({0, 2, 4, 18}));
    CHECK(!is_lacunary({3, 4}));
    CHECK(is_lacunary({-5, -3, 0, 2}));
    CHECK(!is_lacunary({-4, -3}));
}

TEST_CASE("lacunarity is inherited by subsets") {
    auto gen = oracles::make_rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        std::set<long long> s;
        for (int i = 0; i < 8; ++i) s.insert(oracles::rand_int(gen, -10, 10));
        if (!is_lacunary(s)) continue;
        std::set<long long> subset;
        for (long long v : s)
            if (gen() % 2) subset.insert(v);
        CHECK(is_lacunary(subset));
    }
}

TEST_CASE("classify_orbit compares parities") {
    CHECK(classify_orbit(3, 5) == GoodBad::good);
    CHECK(classify_orbit(3, 4) == GoodBad::bad);
    CHECK(classify_orbit(2, 2) == GoodBad::good);
    CHECK(classify_orbit(-3, 5) == GoodBad::good);
    CHECK(classify_orbit(-2, 7) == GoodBad::bad);
    auto gen = oracles::make_rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        long long a = oracles::rand_int(gen, -40, 40);
        long long b = oracles::rand_int(gen, -40, 40);
        CHECK(classify_orbit(a, b) ==
              classify_orbit(((a % 2) + 2) % 2, ((b % 2) + 2) % 2));
    }
}

TEST_CASE("actions refuse cross-unit comparison") {
    CHECK_THROWS_WITH_AS((void)(pi_action(Rational(1)) < plain_action(Rational(2))),
                         doctest::Contains("UnitMismatch"), reeb_error);
}

TEST_CASE("truncate_spectrum on the two-orbit ellipsoid") {
    EllipsoidParams params{{make_rational(1), make_rational(101, 100)}, Rational(1)};
    auto s = enumerate_orbits(params, pi_action(Rational(2)));
    validate_spectrum(s);
    REQUIRE(s.records.size() == 2);
    CHECK(s.records[0].action == pi_action(Rational(1)));
    CHECK(s.records[1].action == pi_action(make_rational(101, 100)));

    SUBCASE("truncating at the certified cutoff is the identity") {
        CHECK(truncate_spectrum(s, s.action_cutoff) == s);
    }
    SUBCASE("tighter cutoff drops the longer orbit") {
        auto t = truncate_spectrum(s, pi_action(make_rational(101, 100)));
        REQUIRE(t.records.size() == 1);
        CHECK(t.records[0].base_id == "e01");
        validate_spectrum(t);
    }
    SUBCASE("cutoff above the certified range is refused") {
        CHECK_THROWS_WITH_AS(truncate_spectrum(s, pi_action(Rational(3))),
                             doctest::Contains("CutoffExceedsValidity"), reeb_error);
    }
    SUBCASE("double truncation equals truncation at the minimum") {
        auto t1 = pi_action(make_rational(3, 2));
        auto t2 = pi_action(make_rational(7, 4));
        auto a = truncate_spectrum(truncate_spectrum(s, t2), t1);
        auto b = truncate_spectrum(s, t1);
        CHECK(a == b);
    }
}

TEST_CASE("rank_lower_bound sums the ranks") {
    GradedRankModule m;
    CHECK(rank_lower_bound(m) == 0);
    m.ranks[-18] = 1;
    m.ranks[-2] = 1;
    m.ranks[-4] = 1;
    CHECK(rank_lower_bound(m) == 3);
}

TEST_CASE("parity_report") {
    OrbitSpectrum s;
    s.action_cutoff = pi_action(Rational(10));
    CHECK(parity_report(s) == ParityClass::all_even); // vacuous convention

    ReebOrbitRecord a;
    a.base_id = "x";
    a.action = pi_action(Rational(1));
    a.cz_index = 2;
    s.records.push_back(a);
    CHECK(parity_report(s) == ParityClass::all_even);

    ReebOrbitRecord b = a;
    b.base_id = "y";
    b.cz_index = 3;
    s.records.push_back(b);
    CHECK(parity_report(s) == ParityClass::mixed);

    s.records.erase(s.records.begin());
    CHECK(parity_report(s) == ParityClass::all_odd);
}

TEST_CASE("validate_spectrum rejects broken structures") {
    OrbitSpectrum s;
    s.action_cutoff = pi_action(Rational(10));
    ReebOrbitRecord r;
    r.base_id = "x";
    r.iterate = 2; // missing iterate 1
    r.action = pi_action(Rational(2));
    r.cz_index = 4;
    s.records.push_back(r);
    CHECK_THROWS_WITH_AS(validate_spectrum(s), doctest::Contains("InvalidSpectrum"),
                         reeb_error);
}
