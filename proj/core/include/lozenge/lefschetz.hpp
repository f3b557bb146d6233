#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lozenge/ideal.hpp"
#include "lozenge/matrix.hpp"
#include "lozenge/region.hpp"

namespace lozenge {

// One degree of a weak-Lefschetz report: the multiplication map
// [R/I]_{j-1} -> [R/I]_j by x+y+z, examined through Z(T_{j+1}(I)).
struct WlpDegree {
    int j = 0;
    long long expected = 0;  // min of the two Hilbert values
    long long rankQ = 0;
    long long delta = 0;        // expected - rankQ; 0 means maximal rank over Q
    std::vector<Int> primes;    // characteristics where this degree drops below rankQ
};

struct WlpReport {
    std::vector<WlpDegree> degrees;  // j = 1 .. socleDegree + 1
    bool wlpQ = true;                // maximal rank in every degree over Q
    // Finite set of positive characteristics with a rank drop in some degree
    // that is maximal over Q.  When wlpQ is false some degree fails in every
    // characteristic; that is recorded in notes, not here.
    std::vector<Int> failChars;
    std::vector<int> socleDegrees;
    std::vector<std::string> notes;
};
WlpReport wlpReport(const MonomialIdeal& I);

// Primes p admitting a power p^m with a <= p^m <= s, where a is the least
// exponent with all of x^a, y^a, z^a in I and s is the last degree up to
// which the Hilbert function weakly increases.  Each is a guaranteed
// weak-Lefschetz failure in characteristic p (Frobenius kernel argument).
std::vector<Int> frobeniusFailPrimes(const MonomialIdeal& I);

// Weak Lefschetz for the complete intersection (x^a, y^b, z^c), by closed
// formula.  failingPrimes is exact: the algebra fails exactly in those
// characteristics, and never fails when alwaysWlp is true.
struct CiWlpResult {
    bool alwaysWlp = false;
    Int criticalValue = 1;  // integer whose prime support is the failure set
    std::vector<Int> failingPrimes;
};
CiWlpResult ciWlp(int a, int b, int c);

// Slope of the syzygy bundle of I at ambient side d.
Rat slope(const MonomialIdeal& I, int d);

// Brenner's subset-slope test over every proper generator subset of size
// >= 2.  witness holds a violating subset when not semistable.  Generator
// count is capped at 22 (the scan is exponential); throws std::length_error
// beyond that.
struct SemistabilityResult {
    bool semistable = true;
    bool stable = true;
    std::vector<Monomial> witness;
};
SemistabilityResult semistable(const MonomialIdeal& I, int d);

// Normal form of an Artinian monomial algebra of socle type two: form 1 is
// (x^a, y^b, z^c, x^al y^be), form 2 adds x^al z^ga.  perm maps the normal
// variables to the input variables (normal variable i = input variable
// perm[i]).
struct TypeTwoForm {
    int form = 1;
    int a = 0, b = 0, c = 0, al = 0, be = 0, ga = 0;  // ga = 0 for form 1
    int perm[3] = {0, 1, 2};
};
TypeTwoForm typeTwoClassify(const MonomialIdeal& I);

// Characteristic-zero weak Lefschetz for a type-two algebra.  failingD lists
// the integers d for which [R/I]_{d-2} -> [R/I]_{d-1} fails maximal rank
// (report degree d-1); empty iff wlpQ.
struct TypeTwoWlp {
    bool wlpQ = true;
    std::vector<int> failingD;
};
TypeTwoWlp typeTwoWlp(const TypeTwoForm& f);

// Characteristic-zero decision for (x^a, y^b, z^c, x^al y^be z^ga) with
// al, be, ga all positive.  When the verdict is needs-matrix the only degree
// that can fail maximal rank corresponds to region side d.
enum class AmaciVerdict { kWlp, kFails, kNeedsMatrix };
struct AmaciDecision {
    AmaciVerdict verdict = AmaciVerdict::kWlp;
    std::string reason;
    int d = -1;                      // degree-sum / 3 when integral
    bool onlyDegreeDCanFail = false;  // true when the four balance conditions hold
};
AmaciDecision amaciDecide(int a, int b, int c, int al, int be, int ga);

// Generic splitting type (p, q, r), p <= q <= r <= 0, of the syzygy bundle
// of (x^a, y^b, z^c, x^al y^be z^ga); -(p+q+r) equals the degree sum.
struct SplittingType {
    long long p = 0, q = 0, r = 0;
    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

// From the two-variable restriction (x^a, y^b, (x+y)^c, x^al y^be (x+y)^ga):
// exact ranks of coefficient matrices, then a fit of the syzygy Hilbert
// function against three twists.  Throws std::logic_error if the fit fails.
SplittingType splittingTypeOracle(int a, int b, int c, int al, int be, int ga);

// Closed-form splitting type; falls back to a rank computation only where
// the case analysis requires the weak-Lefschetz verdict or is ambiguous.
struct ClosedSplitting {
    SplittingType type;
    bool usedWlp = false;
    bool usedOracle = false;
};
ClosedSplitting splittingTypeClosed(int a, int b, int c, int al, int be, int ga);

// Grows T to a region with only unit punctures, preserving the up/down
// balance and whether Z has maximal rank.  Deterministic: always restores
// the bottom-most row, left-most strip, keeping the strip's left-most
// upward triangle as the surviving unit puncture.
TriRegion unitReduction(const TriRegion& T);

// For an ideal generated by r <= d+1 monomials of degree d: the rank deficit
// of the injectivity-side map [R/I]_{d-1} -> [R/I]_d, and the degree-d
// monomials outside I (the inverse system).
struct TogliattiResult {
    bool isTogliatti = false;
    long long delta = 0;
    std::vector<Monomial> inverseSystem;
};
TogliattiResult togliattiDelta(const MonomialIdeal& I, int d);

// J * x^{d+1-(e+1)j} * (x^{e+1}, y^{e+1})^{j-1} + (y^d)
//   + z^{mj+k+1} * (y, z)^{d-1-mj-k},
// for J Artinian with m generators, all of degree e <= d.  Produces an ideal
// with d+1-k generators of degree d whose rank deficits are controlled by j
// and k.
MonomialIdeal buildTogliattiFamily(const MonomialIdeal& J, int d, int j, int k);

// 3 to the power ceil(C(floor((a+b+c)/2) + 2, 2) / 2) for the pure-power
// exponents a, b, c of I: every characteristic in which the weak Lefschetz
// property can differ from characteristic zero is below this bound.
Int hadamardCharBound(const MonomialIdeal& I);

}  // namespace lozenge
