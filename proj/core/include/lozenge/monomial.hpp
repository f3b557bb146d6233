#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lozenge {

// A monomial x^ex * y^ey * z^ez with nonnegative exponents.
struct Monomial {
    int ex = 0;
    int ey = 0;
    int ez = 0;

    constexpr Monomial() = default;
    constexpr Monomial(int x_, int y_, int z_) : ex(x_), ey(y_), ez(z_) {
        if (x_ < 0 || y_ < 0 || z_ < 0)
            throw std::invalid_argument("monomial exponents must be nonnegative");
    }

    constexpr int degree() const { return ex + ey + ez; }

    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

    // Graded reverse-lexicographic order: lower degree is smaller; within a
    // degree, m1 > m2 when the last non-zero entry of the exponent
    // difference (m1 - m2) is negative.  E.g. x^3 > x^2y > xy^2 > y^3 >
    // x^2z > xyz > y^2z > xz^2 > yz^2 > z^3.
    friend constexpr bool operator<(const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.ez != b.ez) return a.ez > b.ez;
        if (a.ey != b.ey) return a.ey > b.ey;
        return false;
    }
    friend constexpr bool operator>(const Monomial& a, const Monomial& b) { return b < a; }
    friend constexpr bool operator<=(const Monomial& a, const Monomial& b) { return !(b < a); }
    friend constexpr bool operator>=(const Monomial& a, const Monomial& b) { return !(a < b); }

    constexpr bool divides(const Monomial& m) const {
        return ex <= m.ex && ey <= m.ey && ez <= m.ez;
    }

    friend constexpr Monomial operator*(const Monomial& a, const Monomial& b) {
        return Monomial(a.ex + b.ex, a.ey + b.ey, a.ez + b.ez);
    }
    // Exact division; throws if not divisible.
    friend constexpr Monomial operator/(const Monomial& a, const Monomial& b) {
        if (!b.divides(a)) throw std::invalid_argument("monomial division is not exact");
        return Monomial(a.ex - b.ex, a.ey - b.ey, a.ez - b.ez);
    }

    static constexpr Monomial lcm(const Monomial& a, const Monomial& b) {
        return Monomial(a.ex > b.ex ? a.ex : b.ex, a.ey > b.ey ? a.ey : b.ey,
                        a.ez > b.ez ? a.ez : b.ez);
    }
    static constexpr Monomial gcd(const Monomial& a, const Monomial& b) {
        return Monomial(a.ex < b.ex ? a.ex : b.ex, a.ey < b.ey ? a.ey : b.ey,
                        a.ez < b.ez ? a.ez : b.ez);
    }

    // Canonical text form x^a*y^b*z^c, omitting exponent-0 variables and ^1;
    // the constant monomial prints as "1".
    std::string str() const;
};

// "Reading order" used for matrix row/column labels and vertex lists: within
// a degree, sort by x-exponent descending, then y-exponent descending.  On a
// triangular picture this enumerates triangles top row first, left to right.
// Lower degree sorts first so mixed-degree lists stay well defined.
constexpr bool readingBefore(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.ex != b.ex) return a.ex > b.ex;
    if (a.ey != b.ey) return a.ey > b.ey;
    return false;
}

// All monomials of the given degree, in reading order.  Empty for deg < 0.
std::vector<Monomial> monomialsOfDegree(int deg);

}  // namespace lozenge
