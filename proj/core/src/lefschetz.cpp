#include "lozenge/lefschetz.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <set>
#include <stdexcept>
#include <utility>

#include "lozenge/formulas.hpp"

namespace lozenge {

namespace {

Int binomInt(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::vector<Int> primeSupport(const Int& n) {
    Int m = abs(n);
    if (m == 0) throw std::invalid_argument("primeSupport: zero has no prime support");
    Factorization f = factorInteger(m);
    if (!f.complete) throw std::logic_error("primeSupport: incomplete factorization");
    std::vector<Int> out;
    for (const auto& [p, e] : f.factors) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

bool isPrimeSmall(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

int varExp(const Monomial& m, int v) { return v == 0 ? m.ex : v == 1 ? m.ey : m.ez; }

void checkAciExponents(int a, int b, int c, int al, int be, int ga) {
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("pure-power exponents must be positive");
    if (al < 1 || be < 1 || ga < 1)
        throw std::invalid_argument("mixed-generator exponents must all be positive");
    if (al >= a || be >= b || ga >= c)
        throw std::invalid_argument("mixed generator must not be divisible by a pure power");
}

}  // namespace

WlpReport wlpReport(const MonomialIdeal& I) {
    SocleInfo si = socleInfo(I);  // throws unless Artinian
    WlpReport rep;
    for (const Monomial& m : si.monomials) rep.socleDegrees.push_back(m.degree());
    std::sort(rep.socleDegrees.begin(), rep.socleDegrees.end());

    int sd = si.socleDegree;
    std::vector<long long> h(sd + 3, 0);
    for (int j = 0; j <= sd + 1; ++j) h[j] = hilbert(I, j);

    for (int j = 1; j <= sd + 1; ++j) {
        TriRegion T = buildRegion(I, j + 1);
        RankProfile rp = rankProfile(zMatrix(T));
        WlpDegree dg;
        dg.j = j;
        dg.expected = std::min(h[j - 1], h[j]);
        dg.rankQ = rp.rankQ;
        dg.delta = dg.expected - dg.rankQ;
        if (dg.delta < 0) throw std::logic_error("wlpReport: rank exceeds expected rank");
        if (dg.delta == 0) {
            dg.primes = rp.failingPrimes;
        } else {
            rep.wlpQ = false;
            rep.notes.push_back("degree " + std::to_string(j) +
                                " fails maximal rank in every characteristic (deficit " +
                                std::to_string(dg.delta) + ")");
        }
        rep.degrees.push_back(dg);
    }

    std::set<Int> chars;
    for (const WlpDegree& dg : rep.degrees)
        if (dg.delta == 0) chars.insert(dg.primes.begin(), dg.primes.end());
    rep.failChars.assign(chars.begin(), chars.end());

    // Consistency: once a map is surjective over Q, all later ones are.
    bool surj = false;
    for (const WlpDegree& dg : rep.degrees) {
        bool s = dg.rankQ == h[dg.j];
        if (surj && !s) throw std::logic_error("wlpReport: surjectivity failed to persist");
        surj = surj || s;
    }
    // Consistency: with all socle degrees >= j-1, injectivity into degree j
    // forces injectivity into every earlier degree.
    int minSoc = rep.socleDegrees.empty() ? 0 : rep.socleDegrees.front();
    int jStar = 0;
    for (const WlpDegree& dg : rep.degrees)
        if (dg.rankQ == h[dg.j - 1] && minSoc >= dg.j - 1) jStar = dg.j;
    for (const WlpDegree& dg : rep.degrees)
        if (dg.j <= jStar && dg.rankQ != h[dg.j - 1])
            throw std::logic_error("wlpReport: injectivity failed to persist");

    return rep;
}

std::vector<Int> frobeniusFailPrimes(const MonomialIdeal& I) {
    if (!I.isArtinian()) throw std::invalid_argument("frobeniusFailPrimes: ideal must be Artinian");
    long long a = 0;
    for (int v = 0; v < 3; ++v) a = std::max<long long>(a, *I.purePowerExponent(v));
    SocleInfo si = socleInfo(I);
    long long s = 0, prev = 1;
    for (int j = 1; j <= si.socleDegree + 1; ++j) {
        long long hj = hilbert(I, j);
        if (hj < prev) break;
        s = j;
        prev = hj;
    }
    std::vector<Int> out;
    for (long long p = 2; p <= s; ++p) {
        if (!isPrimeSmall(p)) continue;
        for (long long pm = p; pm <= s; pm *= p)
            if (pm >= a) {
                out.push_back(p);
                break;
            }
    }
    return out;
}

CiWlpResult ciWlp(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("ciWlp: exponents must be positive");
    CiWlpResult res;
    long long sum = static_cast<long long>(a) + b + c;
    long long d = sum / 2;
    long long mx = std::max({a, b, c});
    if (d < mx) {
        res.alwaysWlp = true;
        return res;
    }
    if (sum % 2 == 0) {
        res.criticalValue = mac(d - a, d - b, d - c);
    } else {
        // gcd over the one-column-deleted square subregions of the twin-peaks
        // degree; maximal rank holds iff some minor survives.
        Int num = hyperfactorial(d - a + 1) * hyperfactorial(d - b + 1) *
                  hyperfactorial(d - c + 1) * hyperfactorial(d);
        Int den = hyperfactorial(a) * hyperfactorial(b) * hyperfactorial(c) * hyperfactorial(1);
        Int g = 0;
        for (long long i = d - b; i <= a - 1; ++i) {
            Int v = mac(a - 1 - i, d - a, 1) * mac(i + b - d, d - b, 1) * num;
            if (v % den != 0) throw std::logic_error("ciWlp: minor is not integral");
            g = gcd(g, Int(v / den));
        }
        if (g == 0) throw std::logic_error("ciWlp: no admissible minor");
        res.criticalValue = g;
    }
    res.failingPrimes = res.criticalValue == 1 ? std::vector<Int>{} : primeSupport(res.criticalValue);
    res.alwaysWlp = res.failingPrimes.empty();
    return res;
}

Rat slope(const MonomialIdeal& I, int d) {
    long long m = 0;
    for (const Monomial& g : I.gens())
        if (g.degree() <= d) ++m;
    if (m < 2) throw std::invalid_argument("slope: need at least two generators of degree <= d");
    return Rat(-d) + Rat(overPuncturing(I, d), m - 1);
}

SemistabilityResult semistable(const MonomialIdeal& I, int d) {
    std::vector<Monomial> gens;
    for (const Monomial& g : I.gens())
        if (g.degree() <= d) gens.push_back(g);
    const int m = static_cast<int>(gens.size());
    if (m < 2) throw std::invalid_argument("semistable: need at least two generators of degree <= d");
    if (m > 22) throw std::length_error("semistable: more than 22 generators");

    long long sumAll = 0;
    for (const Monomial& g : gens) sumAll += g.degree();

    SemistabilityResult res;
    // best violating / tight subset, ordered by (size, mask)
    std::pair<int, unsigned> vio{INT_MAX, 0}, tie{INT_MAX, 0};
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        int sz = __builtin_popcount(mask);
        if (sz < 2 || sz == m) continue;
        Monomial gcdM;
        long long sumJ = 0;
        bool first = true;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) {
                gcdM = first ? gens[i] : Monomial::gcd(gcdM, gens[i]);
                first = false;
                sumJ += gens[i].degree();
            }
        // subsheaf slope vs bundle slope, cross-multiplied (both denominators > 0)
        long long lhs = (gcdM.degree() - sumJ) * (m - 1);
        long long rhs = -sumAll * (sz - 1);
        std::pair<int, unsigned> key{sz, mask};
        if (lhs > rhs) {
            if (key < vio) vio = key;
        } else if (lhs == rhs) {
            if (key < tie) tie = key;
        }
    }
    auto subsetOf = [&](unsigned mask) {
        std::vector<Monomial> out;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) out.push_back(gens[i]);
        return out;
    };
    if (vio.first != INT_MAX) {
        res.semistable = false;
        res.stable = false;
        res.witness = subsetOf(vio.second);
    } else if (tie.first != INT_MAX) {
        res.stable = false;
        res.witness = subsetOf(tie.second);
    }
    return res;
}

TypeTwoForm typeTwoClassify(const MonomialIdeal& I) {
    SocleInfo si = socleInfo(I);
    if (si.type != 2)
        throw std::invalid_argument("typeTwoClassify: socle type is " + std::to_string(si.type) +
                                    ", not 2");
    std::array<int, 3> pure{};
    for (int v = 0; v < 3; ++v) pure[v] = *I.purePowerExponent(v);
    std::vector<Monomial> mixed;
    for (const Monomial& g : I.gens()) {
        int pos = (g.ex > 0) + (g.ey > 0) + (g.ez > 0);
        if (pos >= 2) mixed.push_back(g);
    }

    std::array<int, 3> pm{0, 1, 2};
    std::sort(pm.begin(), pm.end());
    do {
        TypeTwoForm f;
        f.a = pure[pm[0]];
        f.b = pure[pm[1]];
        f.c = pure[pm[2]];
        f.perm[0] = pm[0];
        f.perm[1] = pm[1];
        f.perm[2] = pm[2];
        if (mixed.size() == 1) {
            const Monomial& g = mixed[0];
            int e0 = varExp(g, pm[0]), e1 = varExp(g, pm[1]), e2 = varExp(g, pm[2]);
            if (e2 == 0 && e0 > 0 && e1 > 0) {
                f.form = 1;
                f.al = e0;
                f.be = e1;
                return f;
            }
        } else if (mixed.size() == 2) {
            for (int swap = 0; swap < 2; ++swap) {
                const Monomial& g1 = mixed[swap];
                const Monomial& g2 = mixed[1 - swap];
                int a0 = varExp(g1, pm[0]), a1 = varExp(g1, pm[1]), a2 = varExp(g1, pm[2]);
                int b0 = varExp(g2, pm[0]), b1 = varExp(g2, pm[1]), b2 = varExp(g2, pm[2]);
                if (a2 == 0 && b1 == 0 && a0 > 0 && a1 > 0 && b0 > 0 && b2 > 0 && a0 == b0) {
                    f.form = 2;
                    f.al = a0;
                    f.be = a1;
                    f.ga = b2;
                    return f;
                }
            }
        }
    } while (std::next_permutation(pm.begin(), pm.end()));
    throw std::logic_error("typeTwoClassify: type-two ideal matches no normal form");
}

TypeTwoWlp typeTwoWlp(const TypeTwoForm& f) {
    TypeTwoWlp res;
    if (f.form == 1) return res;
    long long a = f.a, b = f.b, c = f.c, al = f.al, be = f.be, ga = f.ga;
    for (long long d = 1; d < al + b; ++d) {
        bool fail = d > a && d > al + be && d > al + ga && 2 * d > a + al + be + ga &&
                    d < a + be + ga && 2 * d < al + b + c && d < b + c && d < al + c && d < al + b;
        if (fail) res.failingD.push_back(static_cast<int>(d));
    }
    res.wlpQ = res.failingD.empty();
    return res;
}

namespace {

// A hexagonal frame with a central puncture whose corners sit on the three
// axes of symmetry, up to permuting the variables.  A, B, C are the corner
// puncture sides, al/be/ga the mixed-generator exponents.
bool axesCentralMatch(long long A, long long B, long long C, long long al, long long be,
                      long long ga) {
    std::array<long long, 3> S{A, B, C}, E{al, be, ga};
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end());
    do {
        long long A2 = S[idx[0]], B2 = S[idx[1]], C2 = S[idx[2]];
        long long e0 = E[idx[0]], e1 = E[idx[1]], e2 = E[idx[2]];
        int pa = A2 & 1, pb = B2 & 1, pc = C2 & 1;
        if (pa == pb && pb == pc) {
            if (2 * e0 == B2 + C2 && 2 * e1 == A2 + C2 && 2 * e2 == A2 + B2) return true;
        } else if (pa == pb) {
            if (2 * e0 == B2 + C2 + 1 && 2 * e1 == A2 + C2 - 1 && 2 * e2 == A2 + B2) return true;
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return false;
}

}  // namespace

AmaciDecision amaciDecide(int a, int b, int c, int al, int be, int ga) {
    checkAciExponents(a, b, c, al, be, ga);
    AmaciDecision dec;
    long long s = static_cast<long long>(al) + be + ga;
    long long sum = static_cast<long long>(a) + b + c + s;
    long long lcmX = a + be + ga, lcmY = b + al + ga, lcmZ = c + al + be;
    bool cond1 = 3 * std::max({static_cast<long long>(a), static_cast<long long>(b),
                               static_cast<long long>(c), s}) <= sum;
    bool cond2 = 3 * std::min({lcmX, lcmY, lcmZ}) >= sum;
    bool cond3 = 3 * std::min({static_cast<long long>(a) + b, static_cast<long long>(a) + c,
                               static_cast<long long>(b) + c}) >= sum;
    bool cond4 = sum % 3 == 0;
    if (cond4) dec.d = static_cast<int>(sum / 3);
    if (!(cond1 && cond2 && cond3)) {
        dec.reason = "not-semistable";
        return dec;
    }
    if (!cond4) {
        dec.reason = "degree-sum-not-multiple-of-3";
        return dec;
    }
    long long d = sum / 3;
    dec.onlyDegreeDCanFail = true;
    if (3 * std::min({lcmX, lcmY, lcmZ}) == sum) {
        dec.reason = "inner-puncture-touches";
        return dec;
    }
    if ((d - s) % 2 == 0) {
        dec.reason = "even-inner-side";
        return dec;
    }
    if (d == a || d == b || d == c) {
        dec.reason = "corner-side-zero";
        return dec;
    }
    long long A = d - a, B = d - b, C = d - c, M = d - s;
    if (axesCentralMatch(A, B, C, al, be, ga)) {
        if ((A & 1) && (B & 1) && (C & 1) && (M & 1)) {
            dec.verdict = AmaciVerdict::kFails;
            dec.reason = "axes-central-all-odd";
        } else {
            dec.reason = "axes-central-even-side";
        }
        return dec;
    }
    auto mirror = [&](long long p1, long long e1, long long p2, long long e2, long long p3,
                      long long e3) -> int {
        if (p1 != p2 || e1 != e2) return 0;
        return (p3 % 2 && e3 % 2) ? 2 : 1;
    };
    for (int v : {mirror(a, al, b, be, c, ga), mirror(a, al, c, ga, b, be),
                  mirror(b, be, c, ga, a, al)}) {
        if (v == 1) {
            dec.reason = "mirror-symmetric-even";
            return dec;
        }
        if (v == 2) {
            dec.verdict = AmaciVerdict::kFails;
            dec.reason = "mirror-symmetric-odd";
            return dec;
        }
    }
    dec.verdict = AmaciVerdict::kNeedsMatrix;
    dec.reason = "needs-matrix";
    return dec;
}

namespace {

// dim of the degree-t piece of (x^a, y^b, (x+y)^c, x^al y^be (x+y)^ga) in
// K[x, y], by exact rank of the spanning shifts reduced modulo (x^a, y^b).
long long restrictedIdealDim(long long a, long long b, long long c, long long al, long long be,
                             long long ga, long long t) {
    if (t < 0) return 0;
    long long dimPure = std::max(0LL, t - a + 1) + std::max(0LL, t - b + 1) -
                        std::max(0LL, t - a - b + 1);
    long long vLo = std::max(0LL, t - b + 1), vHi = std::min(t, a - 1);
    if (vLo > vHi) return dimPure;  // (x^a, y^b) already fills degree t
    long long s4 = al + be + ga;
    std::vector<std::vector<Int>> rows;
    for (long long u = 0; u + c <= t; ++u) {
        std::vector<Int> r(vHi - vLo + 1);
        for (long long v = vLo; v <= vHi; ++v) r[v - vLo] = binomInt(c, v - u);
        rows.push_back(std::move(r));
    }
    for (long long u = 0; u + s4 <= t; ++u) {
        std::vector<Int> r(vHi - vLo + 1);
        for (long long v = vLo; v <= vHi; ++v) r[v - vLo] = binomInt(ga, v - al - u);
        rows.push_back(std::move(r));
    }
    if (rows.empty()) return dimPure;
    return dimPure + rankExact(rows).rank;
}

}  // namespace

SplittingType splittingTypeOracle(int a, int b, int c, int al, int be, int ga) {
    checkAciExponents(a, b, c, al, be, ga);
    long long s4 = static_cast<long long>(al) + be + ga;
    long long D = a + b + c + s4;
    std::array<long long, 4> degs{a, b, c, s4};
    std::vector<long long> twists;
    for (long long t = 0; t <= D + 1; ++t) {
        long long free4 = 0;
        for (long long g : degs) free4 += std::max(0LL, t - g + 1);
        long long syz = free4 - restrictedIdealDim(a, b, c, al, be, ga, t);
        long long expect = 0;
        for (long long n : twists) expect += std::max(0LL, t - n + 1);
        long long delta = syz - expect;
        if (delta < 0 || twists.size() + delta > 3)
            throw std::logic_error("splittingTypeOracle: syzygy Hilbert function fits no rank-3 splitting");
        for (long long i = 0; i < delta; ++i) twists.push_back(t);
    }
    if (twists.size() != 3 || twists[0] + twists[1] + twists[2] != D)
        throw std::logic_error("splittingTypeOracle: syzygy Hilbert function fits no rank-3 splitting");
    std::sort(twists.begin(), twists.end());
    return {-twists[2], -twists[1], -twists[0]};
}

ClosedSplitting splittingTypeClosed(int a0, int b0, int c0, int al0, int be0, int ga0) {
    checkAciExponents(a0, b0, c0, al0, be0, ga0);
    std::array<std::pair<long long, long long>, 3> pr{
        {{a0, al0}, {b0, be0}, {c0, ga0}}};
    std::stable_sort(pr.begin(), pr.end(),
                     [](const auto& u, const auto& v) { return u.first < v.first; });
    long long a = pr[0].first, al = pr[0].second;
    long long b = pr[1].first, be = pr[1].second;
    long long c = pr[2].first, ga = pr[2].second;
    long long s = al + be + ga, sum = a + b + c + s;
    long long lcmX = a + be + ga, lcmY = b + al + ga, lcmZ = c + al + be;

    ClosedSplitting out;
    bool ss = 3 * std::max({a, b, c, s}) <= sum && 3 * std::min({lcmX, lcmY, lcmZ}) >= sum &&
              3 * std::min({a + b, a + c, b + c}) >= sum;
    if (ss) {
        long long k = sum / 3;
        if (sum % 3 == 1) {
            out.type = {-k - 1, -k, -k};
        } else if (sum % 3 == 2) {
            out.type = {-k - 1, -k - 1, -k};
        } else {
            out.usedWlp = true;
            bool wlp;
            AmaciDecision dec = amaciDecide(a0, b0, c0, al0, be0, ga0);
            if (dec.verdict == AmaciVerdict::kNeedsMatrix) {
                MonomialIdeal I({Monomial(a0, 0, 0), Monomial(0, b0, 0), Monomial(0, 0, c0),
                                 Monomial(al0, be0, ga0)});
                wlp = detExact(zMatrix(buildRegion(I, static_cast<int>(k)))) != 0;
            } else {
                wlp = dec.verdict == AmaciVerdict::kWlp;
            }
            out.type = wlp ? SplittingType{-k, -k, -k} : SplittingType{-k - 1, -k, -k + 1};
        }
        return out;
    }

    std::vector<SplittingType> cands;
    auto push = [&](long long p, long long q, long long r) {
        std::array<long long, 3> v{p, q, r};
        std::sort(v.begin(), v.end());
        SplittingType t{v[0], v[1], v[2]};
        if (std::find(cands.begin(), cands.end(), t) == cands.end()) cands.push_back(t);
    };
    if (std::min(s, c) >= a + b - 1) {
        // both non-pure generators are extraneous on a general line
        push(-c, -s, -a - b);
    } else if (c >= a + b - 1) {
        // only the z-power is extraneous; the rest is minimally 3-generated
        long long reg3 = -1 + std::max({a + be, b + al,
                                        std::min({a + b, lcmX, lcmY, (a + b + s + 1) / 2})});
        long long q = -(1 + reg3);
        push(-c, q, -(a + b + s) - q);
    } else if (s >= a + b - 1) {
        // only the mixed generator is extraneous
        long long regc = -1 + std::min({a + b, a + c, b + c, (a + b + c + 1) / 2});
        long long q = -(1 + regc);
        push(-s, q, -(a + b + c) - q);
    } else {
        long long m3 = std::min({lcmX, lcmY, lcmZ});
        if (a + b + c <= 2 * m3 && c <= s)
            push(-s, -((a + b + c + 1) / 2), -((a + b + c) / 2));
        if (a + b + s <= 2 * m3 && s <= c) {
            long long q = -std::min({lcmX, lcmY, (a + b + s + 1) / 2});
            push(-c, q, -(a + b + s) - q);
        }
        if (2 * m3 < std::min(a + b + s, a + b + c)) {
            long long X = m3 - sum;  // p + q
            long long p = X >= 0 ? X / 2 : -((-X + 1) / 2);
            push(p, X - p, -m3);
        }
    }
    if (cands.size() == 1) {
        out.type = cands[0];
        return out;
    }
    out.usedOracle = true;
    out.type = splittingTypeOracle(a0, b0, c0, al0, be0, ga0);
    return out;
}

TriRegion unitReduction(const TriRegion& T) {
    TriRegion cur = T;
    long long guard = 4LL * T.d() * T.d() + 16;
    while (guard-- > 0) {
        std::vector<Puncture> ps = punctures(cur);
        int row = INT_MAX;
        for (const Puncture& p : ps)
            if (p.side >= 2) row = std::min(row, p.corner.ex);
        if (row == INT_MAX) return cur;

        const int d = cur.d();
        const int W = d - row;  // upward triangles in the row
        auto upAt = [&](int i) {
            int ey = W - 1 - i / 2;
            return Monomial(row, ey, d - 1 - row - ey);
        };
        auto downAt = [&](int i) {
            int ey = W - 1 - (i + 1) / 2;
            return Monomial(row, ey, d - 2 - row - ey);
        };
        auto present = [&](int i) {
            return i % 2 == 0 ? cur.hasUp(upAt(i)) : cur.hasDown(downAt(i));
        };

        // left-most maximal removed run containing a removed downward triangle
        int runStart = -1, start = -1, end = -1;
        bool sawDown = false;
        for (int i = 0; i <= 2 * W - 1; ++i) {
            bool removed = i <= 2 * W - 2 && !present(i);
            if (removed) {
                if (runStart < 0) {
                    runStart = i;
                    sawDown = false;
                }
                if (i % 2 == 1) sawDown = true;
            } else if (runStart >= 0) {
                if (sawDown) {
                    start = runStart;
                    end = i - 1;
                    break;
                }
                runStart = -1;
            }
        }
        if (start < 0) throw std::logic_error("unitReduction: no strip under a wide puncture");
        if (start % 2 != 0 || end % 2 != 0)
            throw std::logic_error("unitReduction: strip does not end on upward triangles");

        // restore the strip except its left-most upward triangle
        std::vector<Monomial> up = cur.up(), down = cur.down();
        for (int i = start + 1; i <= end; ++i) {
            if (i % 2 == 0)
                up.push_back(upAt(i));
            else
                down.push_back(downAt(i));
        }
        std::sort(up.begin(), up.end(), readingBefore);
        std::sort(down.begin(), down.end(), readingBefore);
        cur = TriRegion(d, std::move(up), std::move(down), cur.zeroPunctures());
    }
    throw std::logic_error("unitReduction: failed to terminate");
}

TogliattiResult togliattiDelta(const MonomialIdeal& I, int d) {
    if (I.gens().empty()) throw std::invalid_argument("togliattiDelta: ideal has no generators");
    for (const Monomial& g : I.gens())
        if (g.degree() != d)
            throw std::invalid_argument("togliattiDelta: generator " + g.str() +
                                        " does not have degree " + std::to_string(d));
    long long r = static_cast<long long>(I.gens().size());
    if (r > d + 1)
        throw std::invalid_argument("togliattiDelta: more than d+1 generators");
    TogliattiResult res;
    TriRegion T = buildRegion(I, d + 1);
    long long rows = hilbert(I, d - 1);
    res.delta = rows - rankExact(zMatrix(T).entries).rank;
    res.isTogliatti = res.delta > 0;
    for (const Monomial& m : monomialsOfDegree(d))
        if (!I.contains(m)) res.inverseSystem.push_back(m);
    return res;
}

MonomialIdeal buildTogliattiFamily(const MonomialIdeal& J, int d, int j, int k) {
    if (!J.isArtinian()) throw std::invalid_argument("buildTogliattiFamily: J must be Artinian");
    const int m = static_cast<int>(J.gens().size());
    const int e = J.gens().front().degree();
    for (const Monomial& g : J.gens())
        if (g.degree() != e)
            throw std::invalid_argument("buildTogliattiFamily: J is not generated in one degree");
    if (e > d) throw std::invalid_argument("buildTogliattiFamily: need e <= d");
    if (j < 1) throw std::invalid_argument("buildTogliattiFamily: need j >= 1");
    if (static_cast<long long>(m) * j > d - 1)
        throw std::invalid_argument("buildTogliattiFamily: need m*j <= d-1");
    if (static_cast<long long>(e + 1) * j > d + 1)
        throw std::invalid_argument("buildTogliattiFamily: need (e+1)*j <= d+1");
    if (k < 0 || k > d - m * j - 1)
        throw std::invalid_argument("buildTogliattiFamily: need 0 <= k <= d-m*j-1");

    std::vector<Monomial> gens;
    const Monomial shift(d + 1 - (e + 1) * j, 0, 0);
    for (const Monomial& g : J.gens())
        for (int t = 0; t < j; ++t)
            gens.push_back(g * shift * Monomial((e + 1) * t, (e + 1) * (j - 1 - t), 0));
    gens.emplace_back(0, d, 0);
    // z^{mj+k+1} * (y, z)^{d-1-mj-k} contributes y^i z^{d-i}, i <= d-1-mj-k
    for (int i = 0; i <= d - 1 - m * j - k; ++i) gens.emplace_back(0, i, d - i);
    MonomialIdeal I(std::move(gens));
    if (static_cast<int>(I.gens().size()) != d + 1 - k)
        throw std::logic_error("buildTogliattiFamily: expected " + std::to_string(d + 1 - k) +
                               " generators, got " + std::to_string(I.gens().size()));
    return I;
}

Int hadamardCharBound(const MonomialIdeal& I) {
    long long abc = 0;
    for (int v = 0; v < 3; ++v) {
        auto p = I.purePowerExponent(v);
        if (!p) throw std::invalid_argument("hadamardCharBound: ideal must contain pure powers");
        abc += *p;
    }
    long long h = abc / 2;
    long long t = (h + 2) * (h + 1) / 2;
    return pow(Int(3), static_cast<unsigned>((t + 1) / 2));
}

}  // namespace lozenge
