#include <doctest.h>

#include "oracles.hpp"
#include "reebhom/graded_complex.hpp"

using namespace reebhom;

namespace {

RationalMatrix scalar1x1(const Rational& v) {
    RationalMatrix m(1, 1);
    m.at(0, 0) = v;
    return m;
}

// Random complex with known homology: a direct sum of free generators
// (rank 1 contribution each) and two-term pieces with an invertible
// boundary (contribute nothing).
struct KnownComplex {
    GradedComplex complex;
    std::map<Degree, size_t> homology;
};

KnownComplex random_known_complex(std::mt19937& gen, Degree lo, Degree hi) {
    KnownComplex out;
    std::map<Degree, size_t> ranks;
    struct Disk { Degree top; size_t row, col; Rational value; };
    std::vector<Disk> disks;
    for (Degree d = lo; d <= hi; ++d) {
        size_t free_gens = static_cast<size_t>(oracles::rand_int(gen, 0, 2));
        if (free_gens) out.homology[d] = free_gens;
        ranks[d] += free_gens;
        if (d > lo) {
            size_t pairs = static_cast<size_t>(oracles::rand_int(gen, 0, 2));
            for (size_t i = 0; i < pairs; ++i) {
                disks.push_back({d, ranks[d - 1]++, ranks[d]++,
                                 make_rational(oracles::rand_int(gen, 1, 5))});
            }
        }
    }
    for (const auto& [d, r] : ranks) out.complex.set_chain_rank(d, r);
    for (Degree d = lo; d <= hi; ++d) {
        RationalMatrix b(out.complex.chain_rank(d - 1), out.complex.chain_rank(d));
        for (const auto& disk : disks)
            if (disk.top == d) b.at(disk.row, disk.col) = disk.value;
        if (b.rows() && b.cols()) out.complex.set_boundary(d, std::move(b));
    }
    return out;
}

// boundary'(d) = P_{d-1} boundary(d) P_d^{-1} for random invertible P_d.
GradedComplex conjugate(const GradedComplex& c, std::mt19937& gen) {
    std::map<Degree, std::pair<RationalMatrix, RationalMatrix>> basis;
    for (const auto& [d, r] : c.chain_ranks()) basis.emplace(d, oracles::rand_invertible(gen, r));
    GradedComplex out;
    for (const auto& [d, r] : c.chain_ranks()) out.set_chain_rank(d, r);
    for (const auto& [d, r] : c.chain_ranks()) {
        (void)r;
        if (out.chain_rank(d) == 0 || out.chain_rank(d - 1) == 0) continue;
        RationalMatrix m = c.boundary(d);
        m = basis.at(d - 1).first * m;
        m = m * basis.at(d).second;
        out.set_boundary(d, std::move(m));
    }
    return out;
}

} // namespace

TEST_CASE("verify_complex on the trivial cases") {
    GradedComplex zero;
    zero.set_chain_rank(0, 1);
    zero.set_chain_rank(1, 2);
    CHECK(verify_complex(zero));

    GradedComplex bad;
    bad.set_chain_rank(0, 1);
    bad.set_chain_rank(1, 1);
    bad.set_chain_rank(2, 1);
    bad.set_boundary(1, scalar1x1(Rational(1)));
    bad.set_boundary(2, scalar1x1(Rational(1)));
    CHECK(!verify_complex(bad));
    CHECK_THROWS_WITH_AS(homology_ranks(bad), doctest::Contains("ComplexInvalid"), reeb_error);
}

TEST_CASE("homology of a zero-differential complex is the chain ranks") {
    GradedComplex c;
    c.set_chain_rank(0, 1);
    c.set_chain_rank(1, 2);
    auto h = homology_ranks(c);
    CHECK(h == std::map<Degree, size_t>{{0, 1}, {1, 2}});
}

TEST_CASE("multiplication by 2 is invertible over Q, so homology vanishes") {
    GradedComplex c;
    c.set_chain_rank(0, 1);
    c.set_chain_rank(1, 1);
    c.set_boundary(1, scalar1x1(Rational(2)));
    CHECK(homology_ranks(c).empty());
}

TEST_CASE("random complexes: known homology, independent oracle, Euler characteristic") {
    auto gen = oracles::make_rng(90125);
    for (int trial = 0; trial < 25; ++trial) {
        auto known = random_known_complex(gen, -2, 2);
        GradedComplex scrambled = conjugate(known.complex, gen);
        REQUIRE(verify_complex(scrambled));
        auto h = homology_ranks(scrambled);
        CHECK(h == known.homology);

        // independent route: ranks by minor expansion instead of elimination
        std::map<Degree, size_t> via_minors;
        for (const auto& [d, rank] : scrambled.chain_ranks()) {
            size_t cycles = rank - oracles::minor_rank(scrambled.boundary(d));
            size_t image = oracles::minor_rank(scrambled.boundary(d + 1));
            if (cycles > image) via_minors[d] = cycles - image;
        }
        CHECK(h == via_minors);

        long long chain_euler = 0, hom_euler = 0;
        for (const auto& [d, r] : scrambled.chain_ranks())
            chain_euler += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(r);
        for (const auto& [d, r] : h)
            hom_euler += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(r);
        CHECK(chain_euler == hom_euler);
    }
}

TEST_CASE("homology is invariant under change of basis") {
    auto gen = oracles::make_rng(424242);
    for (int trial = 0; trial < 10; ++trial) {
        auto known = random_known_complex(gen, 0, 3);
        auto before = homology_ranks(known.complex);
        auto after = homology_ranks(conjugate(known.complex, gen));
        CHECK(before == after);
        CHECK(after == known.homology);
    }
}

TEST_CASE("direct sums add chain ranks and homology") {
    auto gen = oracles::make_rng(777);
    auto a = random_known_complex(gen, -1, 2);
    auto b = random_known_complex(gen, 0, 3);
    auto sum = direct_sum(a.complex, b.complex);
    REQUIRE(verify_complex(sum));
    std::map<Degree, size_t> expected = a.homology;
    for (const auto& [d, r] : b.homology) expected[d] += r;
    CHECK(homology_ranks(sum) == expected);
}
