#include "lozenge/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lozenge {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), readingBefore);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& h : gens)
            if (h != g && h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens) : gens_(minimalize(std::move(gens))) {}

bool MonomialIdeal::isUnit() const {
    return gens_.size() == 1 && gens_[0].degree() == 0;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

std::optional<int> MonomialIdeal::purePowerExponent(int var) const {
    std::optional<int> best;
    for (const Monomial& g : gens_) {
        int e[3] = {g.ex, g.ey, g.ez};
        if (e[var] == g.degree() && g.degree() > 0)
            if (!best || e[var] < *best) best = e[var];
    }
    return best;
}

bool MonomialIdeal::isArtinian() const {
    return purePowerExponent(0) && purePowerExponent(1) && purePowerExponent(2);
}

std::string MonomialIdeal::str() const {
    std::string out;
    for (const Monomial& g : gens_) {
        if (!out.empty()) out += ", ";
        out += g.str();
    }
    return out;
}

Monomial parseMonomial(const std::string& text) {
    int e[3] = {0, 0, 0};
    size_t i = 0;
    auto skipWs = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
    };
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("monomial syntax error at position " + std::to_string(i) +
                                    ": " + what + " in '" + text + "'");
    };
    skipWs();
    if (i < text.size() && text[i] == '1') {
        ++i;
        skipWs();
        if (i != text.size()) fail("trailing characters after '1'");
        return Monomial();
    }
    bool any = false;
    while (i < text.size()) {
        char v = text[i];
        int idx;
        if (v == 'x') idx = 0;
        else if (v == 'y') idx = 1;
        else if (v == 'z') idx = 2;
        else fail("expected variable x, y, or z");
        ++i;
        long long exp = 1;
        bool caret = i < text.size() && text[i] == '^';
        if (caret) ++i;
        if (i < text.size() && text[i] == '-') fail("negative exponent");
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            exp = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                exp = exp * 10 + (text[i] - '0');
                if (exp > 1'000'000) fail("exponent too large");
                ++i;
            }
        } else if (caret) {
            fail("expected digits after '^'");
        }
        e[idx] += static_cast<int>(exp);
        any = true;
        skipWs();
    }
    if (!any) fail("empty term");
    return Monomial(e[0], e[1], e[2]);
}

MonomialIdeal parseIdeal(const std::string& text) {
    std::vector<Monomial> gens;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string term = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
        bool blank = term.find_first_not_of(" \t") == std::string::npos;
        if (!blank) gens.push_back(parseMonomial(term));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return MonomialIdeal(std::move(gens));
}

long long hilbertDirect(const MonomialIdeal& I, int j) {
    if (j < 0) return 0;
    long long count = 0;
    for (const Monomial& m : monomialsOfDegree(j))
        if (!I.contains(m)) ++count;
    return count;
}

namespace {
// Number of degree-j monomials in three variables: C(j+2, 2).
long long fullCount(long long j) { return j < 0 ? 0 : (j + 1) * (j + 2) / 2; }
}  // namespace

long long hilbertInclusionExclusion(const MonomialIdeal& I, long long j) {
    if (j < 0) return 0;
    const auto& gens = I.gens();
    if (gens.size() > 30)
        throw std::invalid_argument("inclusion-exclusion path limited to 30 generators");
    // Count multiples of at least one generator by inclusion-exclusion over
    // lcms, pruning subsets whose lcm degree already exceeds j.
    long long inIdeal = 0;
    struct Frame {
        Monomial lcm;
        size_t next;
        int size;
    };
    std::vector<Frame> frames{{Monomial(), 0, 0}};
    while (!frames.empty()) {
        Frame f = frames.back();
        frames.pop_back();
        if (f.size > 0) {
            long long c = fullCount(j - f.lcm.degree());
            inIdeal += (f.size % 2 == 1) ? c : -c;
        }
        for (size_t k = f.next; k < gens.size(); ++k) {
            Monomial l = f.size == 0 ? gens[k] : Monomial::lcm(f.lcm, gens[k]);
            if (l.degree() <= j) frames.push_back({l, k + 1, f.size + 1});
        }
    }
    return fullCount(j) - inIdeal;
}

long long hilbert(const MonomialIdeal& I, long long j) {
    if (j < 0) return 0;
    if (j <= 64) return hilbertDirect(I, static_cast<int>(j));
    return hilbertInclusionExclusion(I, j);
}

std::vector<Monomial> socleMonomials(const MonomialIdeal& I) {
    if (!I.isArtinian())
        throw std::invalid_argument("socle requires an Artinian ideal (pure powers of x, y, z)");
    int a = *I.purePowerExponent(0), b = *I.purePowerExponent(1), c = *I.purePowerExponent(2);
    std::vector<Monomial> out;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            for (int k = 0; k < c; ++k) {
                Monomial m(i, j, k);
                if (I.contains(m)) continue;
                if (I.contains(Monomial(i + 1, j, k)) && I.contains(Monomial(i, j + 1, k)) &&
                    I.contains(Monomial(i, j, k + 1)))
                    out.push_back(m);
            }
    std::sort(out.begin(), out.end(), readingBefore);
    return out;
}

SocleInfo socleInfo(const MonomialIdeal& I) {
    SocleInfo info;
    info.monomials = socleMonomials(I);
    info.type = static_cast<int>(info.monomials.size());
    info.socleDegree = 0;
    bool first = true;
    int minDeg = 0;
    for (const Monomial& m : info.monomials) {
        if (first || m.degree() > info.socleDegree) info.socleDegree = m.degree();
        if (first || m.degree() < minDeg) minDeg = m.degree();
        first = false;
    }
    info.level = !info.monomials.empty() && minDeg == info.socleDegree;
    return info;
}

long long overPuncturing(const MonomialIdeal& I, int d) {
    long long sum = 0;
    for (const Monomial& g : I.gens())
        if (g.degree() < d) sum += d - g.degree();
    return sum - d;
}

LcmDegreeCheck lcmDegreeCheck(const MonomialIdeal& I, int d) {
    LcmDegreeCheck r{true, true};
    const auto& gens = I.gens();
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            int deg = Monomial::lcm(gens[i], gens[j]).degree();
            if (deg < d) r.noOverlap = false;
            if (deg < d + 1) r.noTouch = false;
        }
    return r;
}

}  // namespace lozenge
