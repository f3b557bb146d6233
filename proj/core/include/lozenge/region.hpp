#pragma once

#include <optional>
#include <vector>

#include "lozenge/ideal.hpp"
#include "lozenge/monomial.hpp"

namespace lozenge {

// A removed upward triangle of side `side` whose lower-left position is
// given by its corner generator x^a y^b z^c: a rows from the bottom, b from
// the upper-right edge, c from the upper-left edge.
struct Puncture {
    Monomial corner;
    int side = 0;
    bool floating = false;       // not chained (touch/overlap) to the boundary
    bool axial = false;          // symmetric about the y<->z mirror axis
    bool cornerOfAmbient = false;  // sits in a corner of the ambient triangle

    friend bool operator==(const Puncture&, const Puncture&) = default;
};

// A subregion of the side-d triangle of unit triangles.  Upward triangles
// carry degree-(d-1) labels, downward ones degree-(d-2) labels.  Label lists
// are kept sorted in reading order.
class TriRegion {
public:
    TriRegion() = default;
    TriRegion(int d, std::vector<Monomial> up, std::vector<Monomial> down,
              std::vector<Monomial> zeroPunctures = {});

    int d() const { return d_; }
    const std::vector<Monomial>& up() const { return up_; }
    const std::vector<Monomial>& down() const { return down_; }
    // Degree-d generators of the defining ideal; they remove no triangles and
    // matter only to semistability (side-length-0 punctures).
    const std::vector<Monomial>& zeroPunctures() const { return zeroPunctures_; }

    bool hasUp(const Monomial& m) const;
    bool hasDown(const Monomial& m) const;

    long long balance() const {
        return static_cast<long long>(up_.size()) - static_cast<long long>(down_.size());
    }
    bool balanced() const { return balance() == 0; }
    bool upHeavy() const { return balance() > 0; }
    bool downHeavy() const { return balance() < 0; }
    bool empty() const { return up_.empty() && down_.empty(); }

    friend bool operator==(const TriRegion&, const TriRegion&) = default;

private:
    int d_ = 1;
    std::vector<Monomial> up_;
    std::vector<Monomial> down_;
    std::vector<Monomial> zeroPunctures_;
};

// The part of the side-d triangle whose labels avoid I.
TriRegion buildRegion(const MonomialIdeal& I, int d);

// The unique largest monomial ideal J with T inside the region of J: a
// monomial m of degree < d lies in J exactly when every multiple of m of
// degree d-2 or d-1 is absent from T.  Returned with the minimal generators
// of degree < d only, so the round-trip buildRegion(idealOfRegion(T), d) == T
// holds on triangles.
MonomialIdeal idealOfRegion(const TriRegion& T);

// Punctures of the region itself (minimal generators of idealOfRegion with
// degree < d), with side lengths and geometric flags filled in.
std::vector<Puncture> punctures(const TriRegion& T);

// The triangles of T inside the upward triangle associated to m, re-housed
// as a region of ambient side d - deg(m) via division by m.
TriRegion monomialSubregion(const TriRegion& T, const Monomial& m);

// Over-puncturing coefficient of the region: overPuncturing(idealOfRegion(T), d).
long long overPuncturing(const TriRegion& T);
bool perfectlyPunctured(const TriRegion& T);

// ---- puncture geometry helpers (shared with the tiling module) ----

// Overlap measure of two upward triangles (a1,c1,s1), (a2,c2,s2) given by
// (rows from bottom, rows from upper-left edge, side): negative = disjoint,
// 0 = touch in exactly one point, >= 1 = share at least an edge.
int triangleOverlap(const Monomial& g1, int s1, const Monomial& g2, int s2);

// Whether the puncture of g (side s) touches the boundary of the ambient
// side-d triangle.
bool touchesBoundary(const Monomial& g, int s, int d);

// Whether the puncture of q lies in the shadow of the puncture of p: below p
// and to the right of the line extending p's upper-right edge.
bool inShadow(const Monomial& p, int ps, const Monomial& q, int qs);

}  // namespace lozenge
