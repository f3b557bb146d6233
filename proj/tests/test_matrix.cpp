#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lozenge/matrix.hpp"
#include "lozenge/region.hpp"
#include "test_util.hpp"

using namespace lozenge;

namespace {

// Cofactor-expansion determinant, the independent small-n oracle.
Int detCofactor(const std::vector<std::vector<Int>>& a) {
    const size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Int total = 0;
    for (size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
        for (size_t i = 1; i < n; ++i) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[i - 1][cc++] = a[i][c];
            }
        }
        Int term = a[0][j] * detCofactor(minor);
        if (j % 2) term = -term;
        total += term;
    }
    return total;
}

// Permutation-sum permanent, the independent small-n oracle.
Int perBrute(const std::vector<std::vector<Int>>& a) {
    const size_t n = a.size();
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    Int total = 0;
    do {
        Int prod = 1;
        for (size_t i = 0; i < n && prod != 0; ++i) prod *= a[i][perm[i]];
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n == 0 ? Int(1) : total;
}

std::vector<std::vector<Int>> randomMatrix(std::mt19937_64& rng, size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (auto& row : a)
        for (auto& e : row) e = dist(rng);
    return a;
}

MonomialIdeal cycleVars(const MonomialIdeal& I) {
    std::vector<Monomial> gens;
    for (const Monomial& g : I.gens()) gens.emplace_back(g.ez, g.ex, g.ey);
    return MonomialIdeal(gens);
}

}  // namespace

TEST_CASE("bi-adjacency matrix of the side-6 hexagon, entrywise") {
    TriRegion T = buildRegion(parseIdeal("x^3,y^4,z^5"), 6);
    LabeledIntMatrix Z = zMatrix(T);
    REQUIRE(Z.rows() == 11);
    REQUIRE(Z.cols() == 11);
    const char* rows[11] = {
        "11000000000", "01100000000", "00110000000", "10001000000", "01001100000", "00100110000",
        "00010011000", "00001000100", "00000100110", "00000010011", "00000001001"};
    for (size_t i = 0; i < 11; ++i)
        for (size_t j = 0; j < 11; ++j) CHECK(Z.entries[i][j] == rows[i][j] - '0');
    CHECK(Z.rowLabels[0] == "x^2*y^2");
    CHECK(Z.rowLabels[10] == "z^4");
    CHECK(Z.colLabels[0] == "x^2*y^3");
    CHECK(detExact(Z) == 10);
    CHECK(permanentExact(Z) == 10);
}

TEST_CASE("bi-adjacency matrix basics") {
    CHECK(zMatrix(buildRegion(parseIdeal("1"), 4)).rows() == 0);
    LabeledIntMatrix Z = zMatrix(buildRegion(parseIdeal("x^2,y^2,z^2"), 3));
    REQUIRE(Z.rows() == 3);
    REQUIRE(Z.cols() == 3);
    for (size_t i = 0; i < 3; ++i) {
        Int sum = 0;
        for (size_t j = 0; j < 3; ++j) sum += Z.entries[i][j];
        CHECK(sum == 2);
    }
    CHECK(detExact(Z) == -2);
    CHECK(permanentExact(Z) == 2);
}

TEST_CASE("lattice path matrix of a mirror-symmetric region") {
    TriRegion T = buildRegion(parseIdeal("x^3,y^4,z^4,y^2z^2"), 5);
    LabeledIntMatrix N = nMatrix(T);
    REQUIRE(N.rows() == 2);
    REQUIRE(N.cols() == 2);
    CHECK(N.entries[0][0] == 4);
    CHECK(N.entries[0][1] == 2);
    CHECK(N.entries[1][0] == 6);
    CHECK(N.entries[1][1] == 1);
    CHECK(detExact(N) == -8);
    CHECK(abs(detExact(zMatrix(T))) == 8);
}

TEST_CASE("lattice points bookkeeping") {
    TriRegion T = buildRegion(parseIdeal("x^3,y^4,z^5"), 6);
    LatticePoints L = latticePoints(T);
    CHECK(static_cast<long long>(L.A.size()) - static_cast<long long>(L.E.size()) == T.balance());
    for (const auto& a : L.A) {
        CHECK(a.u == T.d() - 1 - a.label.ey);
        CHECK(a.v == a.label.ex);
        CHECK(T.hasUp(a.label));
    }
    CHECK(nMatrix(buildRegion(parseIdeal("1"), 3)).rows() == 0);
}

TEST_CASE("determinant and permanent against brute-force oracles") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = 1 + trial % 6;
        auto a = randomMatrix(rng, n, -5, 5);
        CHECK(detExact(a) == detCofactor(a));
        CHECK(permanentExact(a) == perBrute(a));
    }
    CHECK(detExact(std::vector<std::vector<Int>>{}) == 1);
    CHECK(permanentExact(std::vector<std::vector<Int>>{}) == 1);
    std::vector<std::vector<Int>> big(35, std::vector<Int>(35, 1));
    CHECK_THROWS_AS(permanentExact(big), std::length_error);
}

TEST_CASE("det and per of the pinned punctured region") {
    TriRegion T = buildRegion(parseIdeal("x^5,y^5,z^5,x^2y^2z^2"), 7);
    LabeledIntMatrix Z = zMatrix(T);
    CHECK(abs(detExact(Z)) == 50);
    CHECK(permanentExact(Z) == 54);
    CHECK(abs(detExact(nMatrix(T))) == 50);
}

TEST_CASE("|det Z| = |det N| on random balanced regions") {
    std::mt19937_64 rng(47);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 60; ++trial) {
        TriRegion T = testutil::randomRegion(rng, 10);
        if (!T.balanced() || T.up().size() > 30) continue;
        ++checked;
        CHECK(abs(detExact(zMatrix(T))) == abs(detExact(nMatrix(T))));
    }
    CHECK(checked >= 40);
}

TEST_CASE("Z and N have maximal rank together") {
    std::mt19937_64 rng(53);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 60; ++trial) {
        TriRegion T = testutil::randomRegion(rng, 9);
        if (T.up().size() > 30) continue;
        ++checked;
        LabeledIntMatrix Z = zMatrix(T), N = nMatrix(T);
        RankResult rz = rankExact(Z.entries), rn = rankExact(N.entries);
        bool zMax = rz.rank == static_cast<long long>(std::min(Z.rows(), Z.cols()));
        bool nMax = rn.rank == static_cast<long long>(std::min(N.rows(), N.cols()));
        CHECK(zMax == nMax);
    }
    CHECK(checked >= 40);
}

TEST_CASE("cyclic relabeling of the variables preserves |det N|") {
    std::mt19937_64 rng(59);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 40; ++trial) {
        int d = 0;
        std::uniform_int_distribution<int> dDist(2, 8);
        d = dDist(rng);
        MonomialIdeal I = testutil::randomIdeal(rng, d);
        TriRegion T = buildRegion(I, d);
        if (!T.balanced() || T.up().size() > 25) continue;
        ++checked;
        Int base = abs(detExact(nMatrix(T)));
        MonomialIdeal J = cycleVars(I);
        CHECK(abs(detExact(nMatrix(buildRegion(J, d)))) == base);
        CHECK(abs(detExact(nMatrix(buildRegion(cycleVars(J), d)))) == base);
    }
    CHECK(checked >= 25);
}

TEST_CASE("block law for balanced monomial subregions") {
    std::mt19937_64 rng(61);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 25; ++trial) {
        int d = 0;
        TriRegion T = testutil::randomRegion(rng, 8, &d);
        if (!T.balanced() || T.up().size() > 18 || T.up().empty()) continue;
        for (const Monomial& m : monomialsOfDegree(1)) {
            TriRegion U = monomialSubregion(T, m);
            if (!U.balanced() || U.empty() || U.up().size() == T.up().size()) continue;
            // complement of the triangles of U inside T
            std::vector<Monomial> up, down;
            for (const Monomial& u : T.up())
                if (!(m.divides(u) && U.hasUp(u / m))) up.push_back(u);
            for (const Monomial& v : T.down())
                if (!(m.divides(v) && U.hasDown(v / m))) down.push_back(v);
            TriRegion rest(d, up, down);
            CHECK(permanentExact(zMatrix(T)) ==
                  permanentExact(zMatrix(rest)) * permanentExact(zMatrix(U)));
            CHECK(abs(detExact(zMatrix(T))) ==
                  abs(detExact(zMatrix(rest)) * detExact(zMatrix(U))));
            ++checked;
            break;
        }
    }
    CHECK(checked >= 10);
}

TEST_CASE("rank profile on square matrices reports the det primes") {
    LabeledIntMatrix Z = zMatrix(buildRegion(parseIdeal("x^3,y^4,z^5"), 6));
    RankProfile r = rankProfile(Z, {Int(2), Int(3), Int(5)});
    CHECK(r.rankQ == 11);
    CHECK(r.maximalQ);
    CHECK(r.minorGcd == 10);
    CHECK(r.failingPrimes == std::vector<Int>{2, 5});
    CHECK(r.rankAtPrimes[2] < 11);
    CHECK(r.rankAtPrimes[3] == 11);
    CHECK(r.rankAtPrimes[5] < 11);
}

TEST_CASE("rank profile prime support matches modular ranks on rectangles") {
    std::mt19937_64 rng(67);
    std::vector<Int> testPrimes = {2, 3, 5, 7, 11, 13};
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 30; ++trial) {
        TriRegion T = testutil::randomRegion(rng, 8);
        LabeledIntMatrix Z = zMatrix(T);
        if (Z.rows() == 0 || Z.cols() == 0 || Z.rows() == Z.cols()) continue;
        RankProfile r = rankProfile(Z, testPrimes);
        if (!r.maximalQ) continue;
        ++checked;
        std::set<Int> failing(r.failingPrimes.begin(), r.failingPrimes.end());
        for (const Int& p : testPrimes)
            CHECK((r.rankAtPrimes[p] < r.rankQ) == (failing.count(p) > 0));
    }
    CHECK(checked >= 15);
}

TEST_CASE("integer factoring") {
    auto f = factorInteger(Int(10));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<Int, int>{2, 1});
    CHECK(f.factors[1] == std::pair<Int, int>{5, 1});

    auto g = factorInteger(Int(-3072));  // -2^10 * 3
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0] == std::pair<Int, int>{2, 10});
    CHECK(g.factors[1] == std::pair<Int, int>{3, 1});

    // semiprime past the trial-division bound
    Int p1("1000003"), p2("1000033");
    auto h = factorInteger(p1 * p2);
    CHECK(h.complete);
    REQUIRE(h.factors.size() == 2);
    CHECK(h.factors[0] == std::pair<Int, int>{p1, 1});
    CHECK(h.factors[1] == std::pair<Int, int>{p2, 1});

    CHECK(factorInteger(Int(20554657)).factors ==
          std::vector<std::pair<Int, int>>{{20554657, 1}});
    CHECK(factorInteger(Int(1)).factors.empty());
    CHECK(factorInteger(Int(0)).factors.empty());
}

TEST_CASE("maximal minors of the pinned unbalanced regions") {
    TriRegion T5 = buildRegion(parseIdeal("x^4,y^4,z^4,x^2z^2"), 5);
    auto all5 = maximalMinors(T5, false);
    REQUIRE(all5.size() == 11);
    std::set<Int> mags5;
    for (auto& w : all5) mags5.insert(w.absDet);
    CHECK(mags5 == std::set<Int>{0, 4, 8});

    auto res5 = maximalMinors(T5, true);
    REQUIRE(res5.size() == 2);
    CHECK(res5[0].absDet == 4);
    CHECK(res5[1].absDet == 4);

    TriRegion T6 = buildRegion(parseIdeal("x^4,y^4,z^4,x^2z^2"), 6);
    auto all6 = maximalMinors(T6, false);
    REQUIRE(all6.size() == 55);
    std::set<Int> mags6;
    for (auto& w : all6) mags6.insert(w.absDet);
    CHECK(mags6 == std::set<Int>{0, 1, 2, 3, 5, 8});

    // balanced region: the single determinant
    auto one = maximalMinors(buildRegion(parseIdeal("x^3,y^4,z^5"), 6), false);
    REQUIRE(one.size() == 1);
    CHECK(one[0].absDet == 10);
    CHECK(one[0].removed.empty());
}

TEST_CASE("serialization formats") {
    LabeledIntMatrix Z = zMatrix(buildRegion(parseIdeal("x^2,y^2,z^2"), 3));
    CHECK(Z.toGrid() == "1 1 0\n1 0 1\n0 1 1\n");
    CHECK(Z.toCsv() == ",x*y,x*z,y*z\nx,1,1,0\ny,1,0,1\nz,0,1,1\n");
}
