#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "lozenge/region.hpp"

namespace lozenge {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Exact integer matrix with labelled rows and columns (triangle labels for
// the bi-adjacency matrix, lattice-vertex labels for the path matrix).
struct LabeledIntMatrix {
    std::vector<std::string> rowLabels;
    std::vector<std::string> colLabels;
    std::vector<std::vector<Int>> entries;  // rowLabels.size() x colLabels.size()

    size_t rows() const { return rowLabels.size(); }
    size_t cols() const { return colLabels.size(); }

    std::string toCsv() const;   // labelled CSV
    std::string toGrid() const;  // plain integer grid, one row per line
};

// Bi-adjacency matrix Z(T): rows = downward triangles, columns = upward
// triangles (both in reading order), entry 1 iff the triangles share an
// edge.  Equals the transpose of the multiplication-by-(x+y+z) matrix
// between the two label degrees.
LabeledIntMatrix zMatrix(const TriRegion& T);

// A lattice vertex sits at the midpoint of each present triangle's edge
// parallel to the upper-left boundary; it is named by the upward triangle
// whose upper-left edge carries it and is drawn at (d-1-b, a) for label
// x^a y^b z^c.
struct LatticeVertex {
    Monomial label;
    int u = 0;  // horizontal coordinate d-1-b
    int v = 0;  // vertical coordinate a
    friend bool operator==(const LatticeVertex&, const LatticeVertex&) = default;
};

struct LatticePoints {
    std::vector<LatticeVertex> A;  // on upward triangles only, ascending
    std::vector<LatticeVertex> E;  // on downward triangles only, ascending
};
LatticePoints latticePoints(const TriRegion& T);

// Lattice path matrix N(T): rows = A-vertices, columns = E-vertices, entry =
// number of right/down lattice paths between them, i.e. C((x-u)+(v-y), x-u),
// zero when either step count is negative.
LabeledIntMatrix nMatrix(const TriRegion& T);

// Exact determinant by fraction-free elimination; 0x0 gives 1.
Int detExact(const LabeledIntMatrix& M);
Int detExact(std::vector<std::vector<Int>> a);

// Exact permanent by Gray-code Ryser; 0x0 gives 1.  Hard cap of 34 columns.
inline constexpr size_t kPermanentCap = 34;
Int permanentExact(const LabeledIntMatrix& M);
Int permanentExact(const std::vector<std::vector<Int>>& a);

// Rank over Q by fraction-free elimination with full pivoting; also reports
// one nonzero maximal minor (absolute value) built from the pivot rows/cols.
struct RankResult {
    long long rank = 0;
    Int pivotMinor = 1;  // |det| of the pivot submatrix; 1 when rank is 0
    std::vector<size_t> pivotRows, pivotCols;
};
RankResult rankExact(const std::vector<std::vector<Int>>& a);

long long rankModP(const std::vector<std::vector<Int>>& a, const Int& p);

struct Factorization {
    std::vector<std::pair<Int, int>> factors;  // prime, exponent
    bool complete = true;                      // false if a composite cofactor remains
    Int cofactor = 1;                          // the unfactored part, 1 when complete
};
Factorization factorInteger(Int n);

struct RankProfile {
    size_t rows = 0, cols = 0;
    long long rankQ = 0;
    bool maximalQ = false;  // rankQ == min(rows, cols)
    // gcd of the sampled maximal minors; its prime support is exactly the
    // set of primes where the rank drops (verified modularly), though the
    // exponents may exceed those of the gcd over *all* maximal minors.
    Int minorGcd = 0;
    Factorization minorFactorization;
    std::vector<Int> failingPrimes;          // rank mod p < rankQ
    std::map<Int, long long> rankAtPrimes;   // for explicitly requested primes
};
RankProfile rankProfile(const LabeledIntMatrix& M, const std::vector<Int>& primes = {});

// Balanced subregions of an unbalanced T obtained by deleting |balance|
// triangles from the heavy side, with the |det Z| of each choice.  In
// restricted mode only triangles carrying an A-vertex (upward) or E-vertex
// (downward) may be deleted.  Throws when the number of choices exceeds cap.
struct MinorWitness {
    std::vector<Monomial> removed;
    Int absDet;
};
std::vector<MinorWitness> maximalMinors(const TriRegion& T, bool restricted,
                                        unsigned long long cap = 1'000'000);

}  // namespace lozenge
