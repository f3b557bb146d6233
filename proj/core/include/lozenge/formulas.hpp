#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lozenge/ideal.hpp"
#include "lozenge/matrix.hpp"

namespace lozenge {

// H(n) = 0! * 1! * ... * (n-1)!
Int hyperfactorial(long long n);

// Number of plane partitions in an a x b x c box:
// H(a)H(b)H(c)H(a+b+c) / (H(a+b)H(a+c)H(b+c)); 1 when any argument is 0.
Int mac(long long a, long long b, long long c);

// Rising factorial (x)_k = x(x+1)...(x+k-1); (x)_0 = 1.
Rat shiftedFactorial(const Rat& x, long long k);

// |det Z| = per Z of T_d(x^a, y^b, z^c) with d = (a+b+c)/2.
Int hexagonDet(int a, int b, int c);

// |det Z| of T_d(x^{a+alpha}, y^b, z^c, x^a y^beta z^gamma), d = (a+b+c)/2,
// when the inner puncture splits off: alpha + beta + gamma <= (b+c-a)/2.
Int ciSplitDet(int a, int b, int c, int alpha, int beta, int gamma);

// |det Z| of T_d(x^{a+alpha}, y^b, z^c, x^a y^beta, x^a z^gamma) when both
// the outer frame (a,b,c) and the nested frame (alpha,beta,gamma) are
// hexagonal: a + alpha + beta + gamma = b + c.
Int ciNestDet(int a, int b, int c, int alpha, int beta, int gamma);

// |det Z| of T_d(x^a, y^b, x^alpha y^beta z^{2d-(a+b+alpha+beta)}):
// punctures in two corners plus one more on the far edge.
Int twoCornerDet(int a, int b, int alpha, int beta, int d);

// Determinant of the n x n matrix M with M[i][j] = C(p, q+j-i) for j <= m
// and C(p, q+r+j-i) for j > m (1-based i,j).
Int splitBinomDet(int p, int q, int r, int m, int n);

// |det Z| = per Z of T_d(x^a, y^b, z^c, x^alpha y^beta), d = (a+b+c+alpha+beta)/3.
Int twoMahonianDet(int a, int b, int c, int alpha, int beta);

// A mirror symmetric region: corner punctures of side b at the two base
// corners plus axial punctures (h_i, d_i) = (height, side), i = 1..s from
// the top; the top one sits in the apex corner.
struct MirrorParams {
    int b = 0;
    std::vector<std::pair<int, int>> axials;  // (h_i, d_i)

    int s() const { return static_cast<int>(axials.size()); }
    int d() const;
    void validate() const;  // throws std::invalid_argument naming the constraint
};

// Accepts "b=..; axials=(h1,d1),(h2,d2),..." (whitespace ignored).
MirrorParams parseMirrorParams(const std::string& text);

// The ideal cutting out the region, together with its ambient side d.
std::pair<MonomialIdeal, int> mirrorIdeal(const MirrorParams& P);

// Index data feeding the product formulas below.
struct CiucuIndex {
    int a = 0;           // side of the top axial puncture
    int k = 0;           // total side of the remaining axial punctures
    std::vector<int> p;  // strictly increasing positive integers
    std::vector<int> q;
    int m() const { return static_cast<int>(p.size()); }
    int n() const { return static_cast<int>(q.size()); }
};
CiucuIndex mirrorIndex(const MirrorParams& P);

// The two families of monic polynomials and their companion constants and
// products, evaluated exactly (half-integer arguments arise).
Rat ciucuB(int m, int n, const Rat& x);
Rat ciucuBbar(int m, int n, const Rat& x);
Rat ciucuC(const std::vector<int>& p, const std::vector<int>& q);
Rat ciucuCbar(const std::vector<int>& p, const std::vector<int>& q);
Rat ciucuP(const std::vector<int>& p, const std::vector<int>& q, const Rat& x);
Rat ciucuPbar(const std::vector<int>& p, const std::vector<int>& q, const Rat& x);

// Closed-form enumeration for a mirror symmetric region.  The permanent is
// always produced; the determinant is per up to sign except in one case
// (top side even, bottom axial side odd, bottom axial strictly above the
// base), where no product formula is known and detKnown is false.
struct MirrorEnumeration {
    Int per = 0;
    bool detKnown = true;
    Int absDet = 0;       // |det Z|, valid when detKnown
    std::string caseTag;  // which dispatch branch fired
};
MirrorEnumeration mirrorEnumeration(const MirrorParams& P);

}  // namespace lozenge
