#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lozenge/region.hpp"

namespace lozenge {

// A lozenge pairs a downward triangle with an adjacent upward one; the
// upward label is the downward label times one variable.
struct Lozenge {
    Monomial down;
    Monomial up;
    friend bool operator==(const Lozenge&, const Lozenge&) = default;
};

// A tiling covers every present triangle exactly once; stored sorted by
// downward label in reading order.
struct Tiling {
    std::vector<Lozenge> lozenges;
    friend bool operator==(const Tiling&, const Tiling&) = default;

    // `down-label:up-label` pairs, comma separated, in reading order.
    std::string str() const;
};

// True iff T admits a lozenge tiling (perfect matching of the adjacency
// graph, found with augmenting paths).  Equivalently: T is balanced and has
// no downward-heavy monomial subregion; that scan is exposed separately as a
// small-d oracle.
bool isTileable(const TriRegion& T);
bool noDownHeavyMonomialSubregion(const TriRegion& T);

// First tiling in the deterministic backtracking order (smallest unmatched
// downward triangle in reading order, partner tried x then y then z); empty
// exactly when T is not tileable.
std::optional<Tiling> canonicalTiling(const TriRegion& T);

// All tilings, in the deterministic backtracking order.  Throws
// std::length_error once more than `cap` tilings are found.
std::vector<Tiling> enumerateTilings(const TriRegion& T, unsigned long long cap = 1'000'000);

// Signature of the downward->upward bijection induced by the tiling, with
// both sides indexed in reading order (the matrix row/column order).
int pmSign(const TriRegion& T, const Tiling& tau);

// The non-intersecting lattice-path family the tiling induces, one path per
// A-vertex, as orthogonalized (u, v) coordinate sequences; and the signature
// of the A->E endpoint permutation.
std::vector<std::vector<std::pair<int, int>>> tilingToPaths(const TriRegion& T, const Tiling& tau);
int lpSign(const TriRegion& T, const Tiling& tau);

// True iff every floating puncture -- after replacing each group of mutually
// overlapping punctures by its minimal covering region -- that has another
// puncture in its shadow has even side length.  A sufficient condition for
// per Z(T) = |det Z(T)|.
bool floatingShadowCheck(const TriRegion& T);

}  // namespace lozenge
