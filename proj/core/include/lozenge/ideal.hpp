#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lozenge/monomial.hpp"

namespace lozenge {

// A monomial ideal, stored as its unique minimal (antichain) generating set,
// sorted in reading order.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::vector<Monomial> gens);

    const std::vector<Monomial>& gens() const { return gens_; }
    bool isZero() const { return gens_.empty(); }
    bool isUnit() const;

    bool contains(const Monomial& m) const;

    // True when the generators include a pure power of each of x, y, z.
    bool isArtinian() const;
    // Exponent of the pure power of the given variable (0 = x, 1 = y, 2 = z),
    // if one is a generator.
    std::optional<int> purePowerExponent(int var) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

    std::string str() const;

private:
    std::vector<Monomial> gens_;
};

// Parses a comma-separated generator list: terms like `x^3*y*z^2`, `x3yz2`,
// or `1`; `^` and `*` are optional.  Throws std::invalid_argument with the
// offending position on syntax errors.
MonomialIdeal parseIdeal(const std::string& text);
Monomial parseMonomial(const std::string& text);

// Number of degree-j monomials not in I (0 for j < 0).  Direct enumeration
// for j <= 64, inclusion-exclusion over generator lcms beyond; see
// hilbertDirect / hilbertInclusionExclusion for the two paths.
long long hilbert(const MonomialIdeal& I, long long j);
long long hilbertDirect(const MonomialIdeal& I, int j);
long long hilbertInclusionExclusion(const MonomialIdeal& I, long long j);

// All monomials m not in I with x*m, y*m, z*m all in I, sorted in reading
// order.  Throws if I is not Artinian.
std::vector<Monomial> socleMonomials(const MonomialIdeal& I);

struct SocleInfo {
    std::vector<Monomial> monomials;
    int socleDegree = 0;  // max degree of a socle monomial
    int type = 0;         // number of socle monomials
    bool level = false;   // all socle monomials in one degree
};
SocleInfo socleInfo(const MonomialIdeal& I);

// Over-puncturing coefficient: sum of side lengths (d - deg g) over
// generators of degree < d, minus d.  Generators of degree >= d contribute 0.
long long overPuncturing(const MonomialIdeal& I, int d);

struct LcmDegreeCheck {
    bool noOverlap = false;  // every pairwise lcm degree >= d
    bool noTouch = false;    // every pairwise lcm degree >= d + 1
};
LcmDegreeCheck lcmDegreeCheck(const MonomialIdeal& I, int d);

}  // namespace lozenge
