#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <vector>

#include "lozenge/lefschetz.hpp"
#include "lozenge/matrix.hpp"
#include "lozenge/region.hpp"
#include "lozenge/tiling.hpp"
#include "test_util.hpp"

using namespace lozenge;

namespace {

MonomialIdeal aci(int a, int b, int c, int al, int be, int ga) {
    return MonomialIdeal({Monomial(a, 0, 0), Monomial(0, b, 0), Monomial(0, 0, c),
                          Monomial(al, be, ga)});
}

std::vector<Int> intPrimes(std::initializer_list<long long> v) {
    std::vector<Int> out;
    for (long long p : v) out.emplace_back(p);
    return out;
}

long long binomSmall(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// dim of the degree-t piece of (x^a, y^b, x^al y^be (x+y)^ga) in K[x, y];
// al = be = 0 gives the pure-bracket third generator (x+y)^ga.
long long dimRestricted3(int a, int b, int al, int be, int ga, int t) {
    if (t < 0) return 0;
    std::vector<std::vector<Int>> rows;
    for (int u = 0; u + a <= t; ++u) {
        std::vector<Int> r(t + 1);
        r[a + u] = 1;
        rows.push_back(std::move(r));
    }
    for (int u = 0; u + b <= t; ++u) {
        std::vector<Int> r(t + 1);
        r[u] = 1;  // column index = x-exponent
        rows.push_back(std::move(r));
    }
    int s = al + be + ga;
    for (int u = 0; u + s <= t; ++u) {
        std::vector<Int> r(t + 1);
        for (int k = 0; k <= ga; ++k) r[al + u + k] = binomSmall(ga, k);
        rows.push_back(std::move(r));
    }
    if (rows.empty()) return 0;
    return rankExact(rows).rank;
}

// Castelnuovo-Mumford regularity via the twists of the rank-2 syzygy module.
long long regDirect3(int a, int b, int al, int be, int ga) {
    std::array<int, 3> degs{a, b, al + be + ga};
    std::vector<int> tw;
    int D = a + b + al + be + ga;
    for (int t = 0; t <= D; ++t) {
        long long free3 = 0;
        for (int g : degs) free3 += std::max(0, t - g + 1);
        long long syz = free3 - dimRestricted3(a, b, al, be, ga, t);
        long long expect = 0;
        for (int n : tw) expect += std::max(0, t - n + 1);
        for (long long i = 0; i < syz - expect; ++i) tw.push_back(t);
    }
    REQUIRE(tw.size() == 2);
    return std::max(tw[0], tw[1]) - 1;
}

// t generators of degrees 2t-4, d-1, d-1, then d-2 (t-3 times), with every
// pairwise lcm of degree at least d+1; has maximal-rank multiplications and
// a semistable syzygy bundle.
MonomialIdeal wlpSemistableFamily(int t, int d) {
    REQUIRE(t >= 3);
    REQUIRE(d >= 2 * t - 3);
    std::vector<Monomial> g{Monomial(2 * t - 4, 0, 0), Monomial(0, d - 1, 0),
                            Monomial(0, 0, d - 1)};
    if (t >= 4) g.emplace_back(1, 1, d - 4);
    if (t >= 5) g.emplace_back(3, 2, d - 7);
    for (int i = 6; i <= t; ++i) {
        if (i % 2 == 0)
            g.emplace_back(1, 2 * i - 7, d + 4 - 2 * i);
        else
            g.emplace_back(2 * i - 8, 2, d + 4 - 2 * i);
    }
    return MonomialIdeal(g);
}

}  // namespace

TEST_CASE("weak Lefschetz report pins") {
    auto r = wlpReport(parseIdeal("x^4,y^4,z^4,x^2*z^2"));
    CHECK(r.wlpQ);
    CHECK(r.failChars == intPrimes({2}));
    CHECK(r.socleDegrees == std::vector<int>{7, 7});
    CHECK(static_cast<int>(r.degrees.size()) == 8);
    for (const auto& dg : r.degrees) CHECK(dg.delta == 0);

    CHECK(wlpReport(parseIdeal("x^2,y^2,z^2")).failChars == intPrimes({2}));

    auto r2 = wlpReport(parseIdeal("x^5,y^5,z^3,x*y*z^2"));
    CHECK(r2.wlpQ);
    CHECK(r2.failChars == intPrimes({5}));
    for (const auto& dg : r2.degrees)
        if (dg.j != 5) CHECK(dg.primes.empty());

    CHECK_FALSE(wlpReport(parseIdeal("x^3,y^5,z^5,x*y^2*z^2")).wlpQ);
    CHECK_FALSE(wlpReport(parseIdeal("x^7,y^7,z^7,x^3*y^3*z^3")).wlpQ);

    auto r3 = wlpReport(parseIdeal("x^6,y^7,z^8,x^3*y^3*z^3"));
    CHECK(r3.wlpQ);
    CHECK(abs(detExact(nMatrix(buildRegion(aci(6, 7, 8, 3, 3, 3), 10)))) == 1764);
}

TEST_CASE("Frobenius-power primes are genuine failures") {
    CHECK(frobeniusFailPrimes(parseIdeal("x^4,y^4,z^4,x^2*z^2")) == intPrimes({2}));
    CHECK(frobeniusFailPrimes(parseIdeal("x^2,y^2,z^2")) == intPrimes({2}));

    std::mt19937_64 rng(7101);
    for (int it = 0; it < 40; ++it) {
        MonomialIdeal I = testutil::randomIdeal(rng, 6);
        auto fp = frobeniusFailPrimes(I);
        auto rep = wlpReport(I);
        if (rep.wlpQ)
            for (const Int& p : fp)
                CHECK(std::find(rep.failChars.begin(), rep.failChars.end(), p) !=
                      rep.failChars.end());
    }
}

TEST_CASE("complete intersection criterion agrees with rank computation") {
    CHECK(ciWlp(2, 2, 2).failingPrimes == intPrimes({2}));
    CHECK(ciWlp(3, 4, 5).failingPrimes == intPrimes({2, 5}));
    CHECK(ciWlp(3, 4, 5).criticalValue == 10);
    CHECK(ciWlp(10, 3, 4).alwaysWlp);
    CHECK(ciWlp(3, 4, 4).failingPrimes == intPrimes({2}));

    for (int a = 1; a <= 8; ++a)
        for (int b = a; b <= 8; ++b)
            for (int c = b; c <= 8; ++c) {
                auto cw = ciWlp(a, b, c);
                auto rep = wlpReport(MonomialIdeal(
                    {Monomial(a, 0, 0), Monomial(0, b, 0), Monomial(0, 0, c)}));
                CHECK(rep.wlpQ);
                CHECK(rep.failChars == cw.failingPrimes);
                for (const Int& p : cw.failingPrimes) CHECK(p < (a + b + c) / 2);
                Int bound = hadamardCharBound(parseIdeal(
                    "x^" + std::to_string(a) + ",y^" + std::to_string(b) + ",z^" +
                    std::to_string(c)));
                for (const Int& p : cw.failingPrimes) CHECK(p <= bound);
            }
}

TEST_CASE("characteristic bound pin") {
    CHECK(hadamardCharBound(parseIdeal("x^2,y^2,z^2")) == 243);
    CHECK_THROWS_AS(hadamardCharBound(parseIdeal("x^2,y^2")), std::invalid_argument);
}

TEST_CASE("socle type two: classification") {
    auto f = typeTwoClassify(parseIdeal("x^4,y^4,z^4,x^3*y,x^3*z"));
    CHECK(f.form == 2);
    CHECK(f.a == 4);
    CHECK(f.al == 3);
    CHECK(f.be == 1);
    CHECK(f.ga == 1);

    // mixed generators on a permuted variable
    auto g = typeTwoClassify(parseIdeal("x^4,y^4,z^4,x*y^3,y^3*z"));
    CHECK(g.form == 2);
    CHECK(g.al == 3);
    CHECK(g.perm[0] == 1);  // normal first variable is the input y

    auto h = typeTwoClassify(parseIdeal("x^4,y^5,z^6,x^2*y^3"));
    CHECK(h.form == 1);
    CHECK(h.a == 4);
    CHECK(h.al == 2);
    CHECK(h.be == 3);

    CHECK_THROWS_AS(typeTwoClassify(parseIdeal("x^2,y^2,z^2")), std::invalid_argument);
}

TEST_CASE("socle type two: verdict pins and level algebras") {
    CHECK(typeTwoWlp(typeTwoClassify(parseIdeal("x^4,y^4,z^4,x^3*y,x^3*z"))).failingD ==
          std::vector<int>{5});
    CHECK(typeTwoWlp(typeTwoClassify(parseIdeal("x^3,y^7,z^7,x*y^2,x*z^2"))).failingD ==
          std::vector<int>{5, 6});
    CHECK(typeTwoWlp(typeTwoClassify(parseIdeal("x^2,y^4,z^4,x*y,x*z"))).failingD ==
          std::vector<int>{3});

    // level (two socle generators in one degree) forces maximal rank
    auto I = parseIdeal("x^5,y^4,z^4,x^2*y^3,x^2*z^2");
    auto si = socleInfo(I);
    REQUIRE(si.type == 2);
    REQUIRE(si.level);
    CHECK(typeTwoWlp(typeTwoClassify(I)).wlpQ);
    CHECK(wlpReport(I).wlpQ);
}

TEST_CASE("socle type two: verdict agrees with rank computation") {
    int checked = 0;
    for (int a = 2; a <= 5; ++a)
        for (int b = 2; b <= 5; ++b)
            for (int c = 2; c <= 5; ++c)
                for (int al = 1; al < a; ++al)
                    for (int be = 1; be < b; ++be)
                        for (int ga = 1; ga < c; ++ga) {
                            MonomialIdeal I({Monomial(a, 0, 0), Monomial(0, b, 0),
                                             Monomial(0, 0, c), Monomial(al, be, 0),
                                             Monomial(al, 0, ga)});
                            if (static_cast<int>(I.gens().size()) != 5) continue;
                            if (socleInfo(I).type != 2) continue;
                            auto tw = typeTwoWlp(typeTwoClassify(I));
                            auto rep = wlpReport(I);
                            CHECK(tw.wlpQ == rep.wlpQ);
                            std::set<int> fromRank, fromFormula;
                            for (const auto& dg : rep.degrees)
                                if (dg.delta > 0) fromRank.insert(dg.j);
                            for (int d : tw.failingD) fromFormula.insert(d - 1);
                            CHECK(fromRank == fromFormula);
                            ++checked;
                        }
    CHECK(checked > 200);

    // four-generator normal form always has maximal ranks over Q
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 60; ++it) {
        int a = 2 + static_cast<int>(rng() % 8), b = 2 + static_cast<int>(rng() % 8);
        int c = 2 + static_cast<int>(rng() % 8);
        int al = 1 + static_cast<int>(rng() % (a - 1)), be = 1 + static_cast<int>(rng() % (b - 1));
        MonomialIdeal I({Monomial(a, 0, 0), Monomial(0, b, 0), Monomial(0, 0, c),
                         Monomial(al, be, 0)});
        if (static_cast<int>(I.gens().size()) != 4 || socleInfo(I).type != 2) continue;
        CHECK(typeTwoWlp(typeTwoClassify(I)).wlpQ);
        CHECK(wlpReport(I).wlpQ);
    }
}

TEST_CASE("almost complete intersections: decision pins") {
    CHECK(amaciDecide(3, 5, 5, 1, 2, 2).verdict == AmaciVerdict::kFails);
    CHECK(amaciDecide(7, 7, 7, 3, 3, 3).verdict == AmaciVerdict::kFails);
    CHECK(amaciDecide(6, 7, 8, 3, 3, 3).verdict == AmaciVerdict::kWlp);
    auto d4 = amaciDecide(5, 5, 3, 1, 1, 2);
    CHECK(d4.verdict == AmaciVerdict::kWlp);  // characteristic-zero verdict
    CHECK(d4.reason == "not-semistable");
    CHECK(amaciDecide(20, 20, 20, 3, 8, 13).verdict == AmaciVerdict::kWlp);
    CHECK_THROWS_AS(amaciDecide(3, 3, 3, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(amaciDecide(3, 3, 3, 3, 1, 1), std::invalid_argument);
}

TEST_CASE("almost complete intersections: decision agrees with rank computation") {
    std::mt19937_64 rng(90210);
    int needsMatrix = 0;
    for (int it = 0; it < 220; ++it) {
        int a = 2 + static_cast<int>(rng() % 8), b = 2 + static_cast<int>(rng() % 8);
        int c = 2 + static_cast<int>(rng() % 8);
        int al = 1 + static_cast<int>(rng() % (a - 1)), be = 1 + static_cast<int>(rng() % (b - 1));
        int ga = 1 + static_cast<int>(rng() % (c - 1));
        auto dec = amaciDecide(a, b, c, al, be, ga);
        auto rep = wlpReport(aci(a, b, c, al, be, ga));
        if (dec.verdict == AmaciVerdict::kWlp) CHECK(rep.wlpQ);
        if (dec.verdict == AmaciVerdict::kFails) CHECK_FALSE(rep.wlpQ);
        if (dec.verdict == AmaciVerdict::kNeedsMatrix) {
            ++needsMatrix;
            Int det = detExact(zMatrix(buildRegion(aci(a, b, c, al, be, ga), dec.d)));
            CHECK(rep.wlpQ == (det != 0));
        }
        if (dec.onlyDegreeDCanFail)
            for (const auto& dg : rep.degrees)
                if (dg.j != dec.d - 1) CHECK(dg.delta == 0);
    }
    INFO("needs-matrix cases seen: ", needsMatrix);
}

TEST_CASE("splitting type: oracle pins") {
    CHECK(splittingTypeOracle(7, 7, 7, 3, 3, 3) == SplittingType{-11, -10, -9});
    CHECK(splittingTypeOracle(6, 7, 8, 3, 3, 3) == SplittingType{-10, -10, -10});
    CHECK(splittingTypeOracle(4, 5, 5, 3, 1, 1) == SplittingType{-7, -6, -6});
}

TEST_CASE("splitting type: closed form agrees with the oracle") {
    for (int a = 2; a <= 5; ++a)
        for (int b = 2; b <= 5; ++b)
            for (int c = 2; c <= 5; ++c)
                for (int al = 1; al < a; ++al)
                    for (int be = 1; be < b; ++be)
                        for (int ga = 1; ga < c; ++ga) {
                            auto cl = splittingTypeClosed(a, b, c, al, be, ga);
                            auto orc = splittingTypeOracle(a, b, c, al, be, ga);
                            CHECK(cl.type == orc);
                        }

    std::mt19937_64 rng(5150);
    for (int it = 0; it < 1500; ++it) {
        int a = 2 + static_cast<int>(rng() % 11), b = 2 + static_cast<int>(rng() % 11);
        int c = 2 + static_cast<int>(rng() % 11);
        int al = 1 + static_cast<int>(rng() % (a - 1)), be = 1 + static_cast<int>(rng() % (b - 1));
        int ga = 1 + static_cast<int>(rng() % (c - 1));
        auto cl = splittingTypeClosed(a, b, c, al, be, ga);
        CHECK(cl.type == splittingTypeOracle(a, b, c, al, be, ga));
        CHECK(-(cl.type.p + cl.type.q + cl.type.r) == a + b + c + al + be + ga);
        CHECK(cl.type.p <= cl.type.q);
        CHECK(cl.type.q <= cl.type.r);
    }

    // one-sided redundancy on a general line: z-power alone drops out
    CHECK(splittingTypeClosed(2, 4, 7, 1, 1, 1).type == SplittingType{-7, -5, -4});
}

TEST_CASE("regularity of restricted ideals matches the closed formulas") {
    // two pure powers plus a bracketed power
    for (int a = 2; a <= 7; ++a)
        for (int b = 2; b <= 7; ++b)
            for (int c = 1; c <= 7; ++c) {
                if (c > a + b - 2 || a > b + c - 2 || b > a + c - 2) continue;  // redundancy
                long long want = -1 + std::min({a + b, a + c, b + c, (a + b + c + 1) / 2});
                CHECK(regDirect3(a, b, 0, 0, c) == want);
            }
    // two pure powers plus a mixed bracketed generator
    for (int a = 2; a <= 7; ++a)
        for (int b = 2; b <= 7; ++b)
            for (int al = 1; al < a; ++al)
                for (int be = 1; be < b; ++be)
                    for (int ga = 1; ga <= 4; ++ga) {
                        if (al + be + ga > a + b - 2) continue;  // redundancy
                        long long want =
                            -1 + std::max({static_cast<long long>(a + be),
                                           static_cast<long long>(b + al),
                                           std::min<long long>({a + b, a + be + ga, b + al + ga,
                                                                (a + b + al + be + ga + 1) / 2})});
                        CHECK(regDirect3(a, b, al, be, ga) == want);
                    }
}

TEST_CASE("semistability pins") {
    auto s1 = semistable(parseIdeal("x^3,y^3,z^3,x*y*z,x^2*y,x^2*z"), 3);
    CHECK_FALSE(s1.semistable);
    REQUIRE(s1.witness.size() == 3);
    Monomial g = s1.witness[0];
    for (const Monomial& m : s1.witness) g = Monomial::gcd(g, m);
    CHECK(g == Monomial(2, 0, 0));

    auto s2 = semistable(parseIdeal("x^2,y^2,z^2,x*y,x*z"), 2);
    CHECK(s2.semistable);
    CHECK_FALSE(s2.stable);

    auto s3 = semistable(parseIdeal("x^3,x^2*y,x^2*z,x*y^2,x*y*z,x*z^2,y^3,y^2*z,y*z^2,z^3"), 3);
    CHECK(s3.semistable);
    CHECK(s3.stable);

    CHECK(slope(parseIdeal("x^2,y^2,z^2"), 2) == Rat(-3));
    CHECK(slope(parseIdeal("x^3,y^3,z^3,x*y*z"), 4) == Rat(-4));  // -(3+3+3+3)/3
    CHECK_THROWS_AS(semistable(parseIdeal("x^2,y^2,z^2"), 1), std::invalid_argument);
}

TEST_CASE("perfectly punctured, tileable, semistable: two imply the third") {
    std::mt19937_64 rng(1123);
    int tested = 0;
    while (tested < 120) {
        int d = 0;
        TriRegion T = testutil::randomRegion(rng, 9, &d);
        if (T.empty()) continue;
        MonomialIdeal I = idealOfRegion(T);
        int m = 0;
        for (const Monomial& gme : I.gens())
            if (gme.degree() <= d) ++m;
        if (m < 2 || !I.isArtinian()) continue;
        bool pp = perfectlyPunctured(T);
        bool til = isTileable(T);
        bool ss = semistable(I, d).semistable;
        if (pp + til + ss >= 2) {
            CHECK(pp);
            CHECK(til);
            CHECK(ss);
        }
        ++tested;
    }
}

TEST_CASE("balanced but untileable regions have singular bi-adjacency matrices") {
    std::mt19937_64 rng(3345);
    int seen = 0;
    for (int it = 0; it < 200; ++it) {
        int d = 3 + static_cast<int>(rng() % 5);
        auto ups = monomialsOfDegree(d - 1), downs = monomialsOfDegree(d - 2);
        std::shuffle(ups.begin(), ups.end(), rng);
        std::shuffle(downs.begin(), downs.end(), rng);
        size_t k = 1 + rng() % std::min(ups.size(), downs.size());
        ups.resize(k);
        downs.resize(k);
        TriRegion T(d, ups, downs);
        if (isTileable(T)) continue;
        ++seen;
        CHECK(detExact(zMatrix(T)) == 0);
    }
    CHECK(seen > 5);
}

TEST_CASE("maximal-rank family with semistable syzygy bundles") {
    for (int t = 3; t <= 7; ++t)
        for (int d = std::max(2 * t - 3, 4); d <= 14; ++d) {
            MonomialIdeal I = wlpSemistableFamily(t, d);
            REQUIRE(static_cast<int>(I.gens().size()) == t);
            long long degSum = 0;
            for (const Monomial& g : I.gens()) degSum += g.degree();
            REQUIRE(degSum == static_cast<long long>(d) * (t - 1));
            for (const Monomial& g : I.gens()) REQUIRE(g.degree() < d);
            REQUIRE(lcmDegreeCheck(I, d).noTouch);
            CHECK(wlpReport(I).wlpQ);
            CHECK(semistable(I, d).semistable);
        }
}

TEST_CASE("maximal rank is equivalent to semistability under the parity hypotheses") {
    int hits = 0;
    for (int a = 2; a <= 7; ++a)
        for (int b = a; b <= 7; ++b)
            for (int c = b; c <= 7; ++c)
                for (int al = 1; al < a; ++al)
                    for (int be = 1; be < b; ++be)
                        for (int ga = 1; ga < c; ++ga) {
                            int s = al + be + ga, sum = a + b + c + s;
                            if (sum % 3) continue;
                            int d = sum / 3;
                            if (d <= a || d <= b || d <= c || d <= s) continue;
                            if ((d - s) % 2) continue;
                            MonomialIdeal I = aci(a, b, c, al, be, ga);
                            if (!lcmDegreeCheck(I, d).noTouch) continue;
                            CHECK(wlpReport(I).wlpQ == semistable(I, d).semistable);
                            ++hits;
                        }
    CHECK(hits > 10);
}

TEST_CASE("unit reduction") {
    std::mt19937_64 rng(8086);
    int reduced = 0;
    for (int it = 0; it < 120; ++it) {
        TriRegion T = testutil::randomRegion(rng, 9);
        TriRegion U = unitReduction(T);
        for (const Puncture& p : punctures(U)) CHECK(p.side <= 1);
        CHECK(U.balance() == T.balance());
        for (const Monomial& m : T.up()) CHECK(U.hasUp(m));
        for (const Monomial& m : T.down()) CHECK(U.hasDown(m));
        auto zt = zMatrix(T), zu = zMatrix(U);
        bool maxT = rankExact(zt.entries).rank ==
                    static_cast<long long>(std::min(zt.rows(), zt.cols()));
        bool maxU = rankExact(zu.entries).rank ==
                    static_cast<long long>(std::min(zu.rows(), zu.cols()));
        CHECK(maxT == maxU);
        CHECK(unitReduction(U) == U);
        if (!(U == T)) ++reduced;
    }
    CHECK(reduced > 10);
}

TEST_CASE("rank deficits of single-degree ideals") {
    auto t1 = togliattiDelta(parseIdeal("x^3,y^3,z^3,x*y*z"), 3);
    CHECK(t1.delta == 1);
    CHECK(t1.isTogliatti);
    CHECK(static_cast<int>(t1.inverseSystem.size()) == 6);

    CHECK(togliattiDelta(parseIdeal("x^4,y^4,z^4,x^2*y*z,y^2*z^2"), 4).delta == 1);
    CHECK(togliattiDelta(parseIdeal("x^5,y^5,z^5,x^4*y,x^4*z"), 5).delta == 1);
    CHECK(togliattiDelta(parseIdeal("x^6,y^6,z^6,x^5*y,x^5*z"), 6).delta == 1);
    // an even-degree analogue of the minimal example is nonsingular
    CHECK(togliattiDelta(parseIdeal("x^4,y^4,z^4,x^2*y^2"), 4).delta == 0);

    CHECK_THROWS_AS(togliattiDelta(parseIdeal("x^3,y^3,z^3,x*y*z"), 4), std::invalid_argument);
    CHECK_THROWS_AS(togliattiDelta(parseIdeal("x^2,x*y,y^2,x*z,y*z,z^2"), 2),
                    std::invalid_argument);  // more than d+1 generators
}

TEST_CASE("single-degree families with prescribed deficits") {
    MonomialIdeal J = parseIdeal("x^3,y^3,z^3,x*y*z");
    MonomialIdeal I = buildTogliattiFamily(J, 13, 2, 0);
    CHECK(static_cast<int>(I.gens().size()) == 14);
    CHECK(togliattiDelta(I, 13).delta == 2);
    auto Z15 = zMatrix(buildRegion(I, 15));
    CHECK(rankExact(Z15.entries).rank ==
          static_cast<long long>(std::min(Z15.rows(), Z15.cols())));

    MonomialIdeal I2 = buildTogliattiFamily(J, 9, 1, 2);
    CHECK(static_cast<int>(I2.gens().size()) == 8);  // d + 1 - k
    CHECK(togliattiDelta(I2, 9).delta >= 1);

    MonomialIdeal J6 = parseIdeal("x^3,y^3,z^3,x^2*y,x*z^2,y^2*z");
    MonomialIdeal I3 = buildTogliattiFamily(J6, 8, 1, 0);
    CHECK(togliattiDelta(I3, 8).delta >= 2);

    CHECK_THROWS_AS(buildTogliattiFamily(J, 13, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(buildTogliattiFamily(J, 13, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(buildTogliattiFamily(J, 13, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(buildTogliattiFamily(parseIdeal("x^2,y^3,z^3"), 9, 1, 0),
                    std::invalid_argument);  // not generated in one degree
}

TEST_CASE("large prime factors of determinants") {
    CHECK(abs(detExact(zMatrix(buildRegion(parseIdeal("x^3,y^4,z^5,x*z^3,y^2*z^2"), 5)))) == 5);
    CHECK(abs(detExact(zMatrix(
              buildRegion(parseIdeal("x^5,y^5,z^5,x^3*y^2,x^2*z^3,y^3*z^2"), 6)))) == 35);
    CHECK(abs(detExact(zMatrix(buildRegion(aci(9, 10, 11, 4, 4, 4), 14)))) ==
          Int(4) * 81 * 1331 * 13);
    CHECK(abs(detExact(zMatrix(buildRegion(aci(7, 12, 13, 1, 7, 2), 14)))) == 13 * 17 * 23);
}
