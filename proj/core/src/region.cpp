#include "lozenge/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace lozenge {

TriRegion::TriRegion(int d, std::vector<Monomial> up, std::vector<Monomial> down,
                     std::vector<Monomial> zeroPunctures)
    : d_(d), up_(std::move(up)), down_(std::move(down)), zeroPunctures_(std::move(zeroPunctures)) {
    if (d < 1) throw std::invalid_argument("ambient side must be >= 1");
    for (const Monomial& m : up_)
        if (m.degree() != d - 1) throw std::invalid_argument("upward label of wrong degree");
    for (const Monomial& m : down_)
        if (m.degree() != d - 2) throw std::invalid_argument("downward label of wrong degree");
    for (const Monomial& m : zeroPunctures_)
        if (m.degree() != d) throw std::invalid_argument("zero-puncture label of wrong degree");
    std::sort(up_.begin(), up_.end(), readingBefore);
    std::sort(down_.begin(), down_.end(), readingBefore);
    std::sort(zeroPunctures_.begin(), zeroPunctures_.end(), readingBefore);
}

bool TriRegion::hasUp(const Monomial& m) const {
    return std::binary_search(up_.begin(), up_.end(), m, readingBefore);
}

bool TriRegion::hasDown(const Monomial& m) const {
    return std::binary_search(down_.begin(), down_.end(), m, readingBefore);
}

TriRegion buildRegion(const MonomialIdeal& I, int d) {
    std::vector<Monomial> up, down, zero;
    for (const Monomial& m : monomialsOfDegree(d - 1))
        if (!I.contains(m)) up.push_back(m);
    for (const Monomial& m : monomialsOfDegree(d - 2))
        if (!I.contains(m)) down.push_back(m);
    for (const Monomial& g : I.gens())
        if (g.degree() == d) zero.push_back(g);
    return TriRegion(d, std::move(up), std::move(down), std::move(zero));
}

MonomialIdeal idealOfRegion(const TriRegion& T) {
    const int d = T.d();
    // inJ[j] indexed over monomialsOfDegree(j) in reading order.
    std::vector<std::vector<bool>> inJ(static_cast<size_t>(d));
    auto index = [](const Monomial& m) {
        // position of m within monomialsOfDegree(deg m) in reading order
        int deg = m.degree();
        int before = 0;
        for (int a = deg; a > m.ex; --a) before += deg - a + 1;
        before += deg - m.ex - m.ey;
        return before;
    };
    for (int j = d - 1; j >= 0; --j) {
        auto monos = monomialsOfDegree(j);
        inJ[j].assign(monos.size(), false);
        for (size_t t = 0; t < monos.size(); ++t) {
            const Monomial& m = monos[t];
            if (j == d - 1) {
                inJ[j][t] = !T.hasUp(m);
            } else if (j == d - 2) {
                inJ[j][t] = !T.hasDown(m) && inJ[j + 1][index(Monomial(m.ex + 1, m.ey, m.ez))] &&
                            inJ[j + 1][index(Monomial(m.ex, m.ey + 1, m.ez))] &&
                            inJ[j + 1][index(Monomial(m.ex, m.ey, m.ez + 1))];
            } else {
                inJ[j][t] = inJ[j + 1][index(Monomial(m.ex + 1, m.ey, m.ez))] &&
                            inJ[j + 1][index(Monomial(m.ex, m.ey + 1, m.ez))] &&
                            inJ[j + 1][index(Monomial(m.ex, m.ey, m.ez + 1))];
            }
        }
    }
    std::vector<Monomial> gens;
    for (int j = 0; j <= d - 1; ++j) {
        auto monos = monomialsOfDegree(j);
        for (size_t t = 0; t < monos.size(); ++t) {
            if (!inJ[j][t]) continue;
            const Monomial& m = monos[t];
            bool minimal = true;
            if (m.ex > 0 && inJ[j - 1][index(Monomial(m.ex - 1, m.ey, m.ez))]) minimal = false;
            if (m.ey > 0 && inJ[j - 1][index(Monomial(m.ex, m.ey - 1, m.ez))]) minimal = false;
            if (m.ez > 0 && inJ[j - 1][index(Monomial(m.ex, m.ey, m.ez - 1))]) minimal = false;
            if (minimal) gens.push_back(m);
        }
    }
    return MonomialIdeal(std::move(gens));
}

int triangleOverlap(const Monomial& g1, int s1, const Monomial& g2, int s2) {
    int a = std::max(g1.ex, g2.ex);
    int c = std::max(g1.ez, g2.ez);
    return std::min(g1.ez + g1.ex + s1, g2.ez + g2.ex + s2) - c - a;
}

bool touchesBoundary(const Monomial& g, int /*s*/, int /*d*/) {
    return g.ex == 0 || g.ey == 0 || g.ez == 0;
}

bool inShadow(const Monomial& p, int ps, const Monomial& q, int qs) {
    return q.ex < p.ex && q.ez + q.ex + qs > p.ez + p.ex + ps;
}

std::vector<Puncture> punctures(const TriRegion& T) {
    const int d = T.d();
    std::vector<Puncture> out;
    MonomialIdeal J = idealOfRegion(T);
    for (const Monomial& g : J.gens()) {
        Puncture p;
        p.corner = g;
        p.side = d - g.degree();
        p.axial = g.ey == g.ez;
        int zeros = (g.ex == 0) + (g.ey == 0) + (g.ez == 0);
        p.cornerOfAmbient = zeros >= 2 && g.degree() > 0;
        out.push_back(p);
    }
    // floating: fixpoint of "chained to the boundary by touch/overlap"
    std::vector<bool> grounded(out.size(), false);
    for (size_t i = 0; i < out.size(); ++i)
        grounded[i] = touchesBoundary(out[i].corner, out[i].side, d);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < out.size(); ++i) {
            if (grounded[i]) continue;
            for (size_t j = 0; j < out.size(); ++j) {
                if (i == j || !grounded[j]) continue;
                if (triangleOverlap(out[i].corner, out[i].side, out[j].corner, out[j].side) >= 0) {
                    grounded[i] = true;
                    changed = true;
                    break;
                }
            }
        }
    }
    for (size_t i = 0; i < out.size(); ++i) out[i].floating = !grounded[i];
    return out;
}

TriRegion monomialSubregion(const TriRegion& T, const Monomial& m) {
    if (m.degree() >= T.d()) throw std::invalid_argument("subregion monomial degree must be < d");
    std::vector<Monomial> up, down;
    for (const Monomial& u : T.up())
        if (m.divides(u)) up.push_back(u / m);
    for (const Monomial& v : T.down())
        if (m.divides(v)) down.push_back(v / m);
    return TriRegion(T.d() - m.degree(), std::move(up), std::move(down));
}

long long overPuncturing(const TriRegion& T) {
    return overPuncturing(idealOfRegion(T), T.d());
}

bool perfectlyPunctured(const TriRegion& T) { return overPuncturing(T) == 0; }

}  // namespace lozenge
