#include <doctest.h>

#include "reebhom/line_bundle.hpp"

using namespace reebhom;

TEST_CASE("catalog: complex projective spaces") {
    auto cp3 = catalog("cp", 3);
    CHECK(cp3.label == "CP^2");
    CHECK(cp3.morse_indices == std::vector<int>{0, 2, 4});
    CHECK(cp3.betti == std::vector<long long>{1, 0, 1, 0, 1});
    for (long long n = 1; n <= 10; ++n) CHECK(orbit_lower_bound(catalog("cp", n)) == n);
}

TEST_CASE("catalog: oriented 2-plane Grassmannians") {
    auto g2 = catalog("grassmannian", 2);
    CHECK(g2.morse_indices == std::vector<int>{0, 2, 2, 4});
    CHECK(g2.betti == std::vector<long long>{1, 0, 2, 0, 1});
    CHECK(orbit_lower_bound(g2) == 4);

    auto g3 = catalog("grassmannian", 3);
    CHECK(g3.morse_indices == std::vector<int>{0, 2, 4, 4, 6, 8});
    CHECK(orbit_lower_bound(g3) == 6);
}

TEST_CASE("catalog errors") {
    CHECK_THROWS_WITH_AS(catalog("nope", 2), doctest::Contains("UnknownCatalog"), reeb_error);
    CHECK_THROWS_WITH_AS(catalog("cp", 0), doctest::Contains("BadDimension"), reeb_error);
    CHECK_THROWS_WITH_AS(catalog("grassmannian", 1), doctest::Contains("BadDimension"),
                         reeb_error);
}

TEST_CASE("orbit_lower_bound sums Betti numbers") {
    BaseManifoldData point{"point", {1}, {0}};
    CHECK(orbit_lower_bound(point) == 1);
    CHECK(orbit_lower_bound(catalog("cp", 3)) == 3);
    // perfectness: the bound equals the number of critical points
    for (long long n = 1; n <= 6; ++n) {
        auto c = catalog("cp", n);
        CHECK(orbit_lower_bound(c) == static_cast<long long>(c.morse_indices.size()));
    }
    for (long long n = 2; n <= 6; ++n) {
        auto g = catalog("grassmannian", n);
        CHECK(orbit_lower_bound(g) == static_cast<long long>(g.morse_indices.size()));
    }
}

TEST_CASE("circle_bundle_spectrum counts fiber iterates") {
    auto cp1 = catalog("cp", 2); // base CP^1, two critical points
    auto s = circle_bundle_spectrum(cp1, Rational(1), plain_action(Rational(3)));
    validate_spectrum(s);
    CHECK(s.records.size() == 4); // 2 points x iterates 1, 2
    for (const auto& r : s.records) {
        CHECK(r.action.unit == ActionUnit::plain);
        CHECK(!r.cz_index.has_value());
        CHECK(r.morse_index.has_value());
        CHECK(r.is_good);
    }

    CHECK(circle_bundle_spectrum(cp1, Rational(1), plain_action(make_rational(1, 2)))
              .records.empty());

    auto g2 = catalog("grassmannian", 2);
    auto sg = circle_bundle_spectrum(g2, Rational(1), plain_action(Rational(2)));
    CHECK(sg.records.size() == 4); // one per critical point, N = 1 only
    for (const auto& r : sg.records) CHECK(r.iterate == 1);
}

TEST_CASE("circle_bundle_spectrum record count formula") {
    auto base = catalog("grassmannian", 3);
    Rational rsq = make_rational(3, 7);
    Action cutoff = plain_action(make_rational(19, 6));
    auto s = circle_bundle_spectrum(base, rsq, cutoff);
    size_t per_point = 0;
    while (to_rational(static_cast<long long>(per_point + 1)) * rsq < cutoff.value)
        ++per_point;
    CHECK(s.records.size() == base.morse_indices.size() * per_point);
}

TEST_CASE("every shipped catalog has a lacunary index set") {
    for (long long n = 1; n <= 8; ++n) {
        auto c = catalog("cp", n);
        std::set<long long> s(c.morse_indices.begin(), c.morse_indices.end());
        CHECK(is_lacunary(s));
    }
    for (long long n = 2; n <= 8; ++n) {
        auto g = catalog("grassmannian", n);
        std::set<long long> s(g.morse_indices.begin(), g.morse_indices.end());
        CHECK(is_lacunary(s));
    }
}

TEST_CASE("bundle cutoffs must be plain actions") {
    CHECK_THROWS_WITH_AS(
        circle_bundle_spectrum(catalog("cp", 2), Rational(1), pi_action(Rational(3))),
        doctest::Contains("UnitMismatch"), reeb_error);
}

TEST_CASE("check_bundle_hypotheses") {
    SUBCASE("cp catalog with 3/2 pinching passes") {
        for (long long n = 1; n <= 5; ++n) {
            auto rep = check_bundle_hypotheses(catalog("cp", n), Rational(1),
                                               make_rational(3, 2), true, true);
            CHECK(rep.pinching_ok);
            CHECK(rep.lacunary_ok);
            CHECK(rep.lower_bound == n);
            CHECK(rep.failures.empty());
        }
    }
    SUBCASE("consecutive Morse indices break lacunarity") {
        BaseManifoldData bad{"torus-ish", {1, 1}, {0, 1}};
        auto rep = check_bundle_hypotheses(bad, Rational(1), make_rational(3, 2), true, true);
        CHECK(!rep.lacunary_ok);
        CHECK(rep.lower_bound == 0);
    }
    SUBCASE("pinching boundary fails") {
        auto rep = check_bundle_hypotheses(catalog("cp", 3), Rational(1), Rational(2), true,
                                           true);
        CHECK(!rep.pinching_ok);
        CHECK(rep.lower_bound == 0);
    }
    SUBCASE("caller assertions are required") {
        auto rep = check_bundle_hypotheses(catalog("cp", 3), Rational(1),
                                           make_rational(3, 2), false, true);
        CHECK(rep.lower_bound == 0);
        CHECK(rep.failures.size() == 1);
    }
    SUBCASE("decreasing r2^2 never breaks pinching") {
        auto base = catalog("cp", 4);
        bool prev_ok = false;
        for (long long num = 30; num >= 10; --num) {
            auto rep = check_bundle_hypotheses(base, Rational(1), make_rational(num, 15),
                                               true, true);
            if (prev_ok) CHECK(rep.pinching_ok);
            prev_ok = rep.pinching_ok;
        }
    }
}
