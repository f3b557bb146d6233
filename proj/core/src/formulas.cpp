#include "lozenge/formulas.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

#include "lozenge/region.hpp"

namespace lozenge {

namespace {

Int factorial(long long n) {
    Int f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

Rat pow2(long long e) {
    if (e >= 0) return Rat(Int(1) << e);
    return Rat(1, Int(1) << (-e));
}

Int requireIntegral(const Rat& v, const char* what) {
    if (denominator(v) != 1) throw std::logic_error(std::string(what) + ": value is not integral");
    return numerator(v);
}

// t(t-1)/2 for any integer t (the quadratic extends below t = 2).
long long choose2(long long t) { return t * (t - 1) / 2; }

void checkIncreasing(const std::vector<int>& v, const char* name) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1) throw std::invalid_argument(std::string(name) + ": entries must be positive");
        if (i > 0 && v[i] <= v[i - 1])
            throw std::invalid_argument(std::string(name) + ": entries must strictly increase");
    }
}

std::vector<int> dropLeadingOne(const std::vector<int>& p) {
    std::vector<int> r;
    size_t start = (!p.empty() && p[0] == 1) ? 1 : 0;
    for (size_t i = start; i < p.size(); ++i) r.push_back(p[i] - 1);
    return r;
}

std::vector<int> dropLast(const std::vector<int>& p) {
    if (p.empty()) return p;
    return std::vector<int>(p.begin(), p.end() - 1);
}

}  // namespace

Int hyperfactorial(long long n) {
    if (n < 0) throw std::invalid_argument("hyperfactorial: negative argument");
    Int h = 1, f = 1;
    for (long long i = 1; i < n; ++i) {
        f *= i;
        h *= f;
    }
    return h;
}

Int mac(long long a, long long b, long long c) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("mac: negative argument");
    if (a == 0 || b == 0 || c == 0) return 1;
    Rat v = Rat(hyperfactorial(a) * hyperfactorial(b)) * Rat(hyperfactorial(c)) *
            Rat(hyperfactorial(a + b + c)) /
            (Rat(hyperfactorial(a + b)) * Rat(hyperfactorial(a + c)) * Rat(hyperfactorial(b + c)));
    return requireIntegral(v, "mac");
}

Rat shiftedFactorial(const Rat& x, long long k) {
    if (k < 0) throw std::invalid_argument("shiftedFactorial: negative length");
    Rat r = 1;
    for (long long t = 0; t < k; ++t) r *= x + t;
    return r;
}

Int hexagonDet(int a, int b, int c) {
    if (a <= 0 || b <= 0 || c <= 0) throw std::invalid_argument("hexagonDet: exponents must be positive");
    if ((a + b + c) % 2 != 0) throw std::invalid_argument("hexagonDet: a+b+c must be even");
    int d = (a + b + c) / 2;
    if (a > d || b > d || c > d)
        throw std::invalid_argument("hexagonDet: each exponent must be at most (a+b+c)/2");
    return mac(d - a, d - b, d - c);
}

Int ciSplitDet(int a, int b, int c, int alpha, int beta, int gamma) {
    if (a <= 0 || b <= 0 || c <= 0)
        throw std::invalid_argument("ciSplitDet: frame exponents must be positive");
    if (alpha <= 0) throw std::invalid_argument("ciSplitDet: alpha must be positive");
    if (beta < 0 || gamma < 0) throw std::invalid_argument("ciSplitDet: beta, gamma must be nonnegative");
    if (beta == 0 && gamma == 0)
        throw std::invalid_argument("ciSplitDet: beta and gamma must not both vanish");
    if ((a + b + c) % 2 != 0) throw std::invalid_argument("ciSplitDet: a+b+c must be even");
    int d = (a + b + c) / 2;
    if (a > d || b > d || c > d)
        throw std::invalid_argument("ciSplitDet: frame must satisfy the hexagon bounds");
    if (2 * (alpha + beta + gamma) > b + c - a)
        throw std::invalid_argument("ciSplitDet: alpha+beta+gamma must be at most (b+c-a)/2");
    return mac(d - a, d - b, d - c);
}

Int ciNestDet(int a, int b, int c, int alpha, int beta, int gamma) {
    if (a <= 0 || b <= 0 || c <= 0)
        throw std::invalid_argument("ciNestDet: frame exponents must be positive");
    if (alpha < 0 || beta < 0 || gamma < 0)
        throw std::invalid_argument("ciNestDet: inner exponents must be nonnegative");
    if ((a + b + c) % 2 != 0) throw std::invalid_argument("ciNestDet: a+b+c must be even");
    int d = (a + b + c) / 2;
    if (a > d || b > d || c > d)
        throw std::invalid_argument("ciNestDet: frame must satisfy the hexagon bounds");
    int e = d - a;  // side of the nested frame
    if (alpha + beta + gamma != 2 * e)
        throw std::invalid_argument("ciNestDet: alpha+beta+gamma must equal b+c-a");
    if (alpha > e || beta > e || gamma > e)
        throw std::invalid_argument("ciNestDet: nested frame must satisfy the hexagon bounds");
    return mac(d - a, d - b, d - c) * mac(e - alpha, e - beta, e - gamma);
}

Int twoCornerDet(int a, int b, int alpha, int beta, int d) {
    if (a <= 0 || b <= 0 || alpha < 0 || beta < 0 || d <= 0)
        throw std::invalid_argument("twoCornerDet: bad parameter signs");
    if (alpha + b > d || a + beta > d)
        throw std::invalid_argument("twoCornerDet: need alpha+b <= d and a+beta <= d");
    if (d > a + b) throw std::invalid_argument("twoCornerDet: need d <= a+b");
    return mac(a + b - d, d - (alpha + b), d - (a + beta));
}

Int splitBinomDet(int p, int q, int r, int m, int n) {
    if (m < 1 || m > n) throw std::invalid_argument("splitBinomDet: need 1 <= m <= n");
    if (p < 0 || q < 0 || r < 0) throw std::invalid_argument("splitBinomDet: p,q,r must be nonnegative");
    if (p - q - r < 0) throw std::invalid_argument("splitBinomDet: need p >= q + r");
    Rat v = Rat(mac(m, q, r)) * Rat(mac(n - m, p - q - r, r)) *
            Rat(hyperfactorial(q + r) * hyperfactorial(p - q)) *
            Rat(hyperfactorial(n + r) * hyperfactorial(n + p)) /
            (Rat(hyperfactorial(n + p - q) * hyperfactorial(n + q + r)) *
             Rat(hyperfactorial(p) * hyperfactorial(r)));
    return requireIntegral(v, "splitBinomDet");
}

Int twoMahonianDet(int a, int b, int c, int alpha, int beta) {
    if (a <= 0 || b <= 0 || c <= 0) throw std::invalid_argument("twoMahonianDet: bad corner exponents");
    if (alpha <= 0 || alpha >= a || beta <= 0 || beta >= b)
        throw std::invalid_argument("twoMahonianDet: need 0 < alpha < a and 0 < beta < b");
    if ((a + b + c + alpha + beta) % 3 != 0)
        throw std::invalid_argument("twoMahonianDet: a+b+c+alpha+beta must be divisible by 3");
    int d = (a + b + c + alpha + beta) / 3;
    int ab = alpha + beta;
    if (std::max({a, b, c, ab}) > d)
        throw std::invalid_argument("twoMahonianDet: need max{a,b,c,alpha+beta} <= d");
    if (d > std::min({a + beta, alpha + b, a + c, b + c}))
        throw std::invalid_argument("twoMahonianDet: need d <= min{a+beta, alpha+b, a+c, b+c}");
    Rat v = Rat(mac(a + beta - d, d - a, d - ab)) * Rat(mac(alpha + b - d, d - b, d - ab)) *
            Rat(hyperfactorial(2 * d - a - ab) * hyperfactorial(2 * d - b - ab)) *
            Rat(hyperfactorial(2 * d - c - ab) * hyperfactorial(d)) /
            (Rat(hyperfactorial(a) * hyperfactorial(b)) *
             Rat(hyperfactorial(c) * hyperfactorial(d - ab)));
    return requireIntegral(v, "twoMahonianDet");
}

// ---------- mirror symmetric regions ----------

int MirrorParams::d() const {
    int sum = 2 * b;
    for (auto& [h, di] : axials) sum += di;
    return sum;
}

void MirrorParams::validate() const {
    if (b < 0) throw std::invalid_argument("mirror: corner side b must be nonnegative");
    if (axials.empty()) throw std::invalid_argument("mirror: at least one axial puncture required");
    const int D = d();
    for (auto& [h, di] : axials) {
        if (di < 1) throw std::invalid_argument("mirror: axial sides must be positive");
        if (h < 0) throw std::invalid_argument("mirror: axial heights must be nonnegative");
        if ((D - di - h) % 2 != 0)
            throw std::invalid_argument("mirror: h_i and d - d_i must have equal parity");
    }
    if (axials[0].first != D - axials[0].second)
        throw std::invalid_argument("mirror: top puncture must fill the apex (h_1 = d - d_1)");
    for (size_t i = 0; i + 1 < axials.size(); ++i)
        if (axials[i].first - axials[i + 1].first <= axials[i + 1].second)
            throw std::invalid_argument("mirror: need h_i - h_{i+1} > d_{i+1}");
    // corner punctures must not touch the axial ones
    if (b > 0) {
        for (size_t i = 1; i < axials.size(); ++i) {
            auto [h, di] = axials[i];
            int w = (D - di - h) / 2;
            Monomial g(h, w, w);
            if (triangleOverlap(g, di, Monomial(0, D - b, 0), b) >= 0 ||
                triangleOverlap(g, di, Monomial(0, 0, D - b), b) >= 0)
                throw std::invalid_argument("mirror: an axial puncture touches a corner puncture");
        }
    }
}

MirrorParams parseMirrorParams(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    std::smatch m;
    static const std::regex outer(R"(^b=(\d+);axials=((\(\d+,\d+\),?)+)$)");
    if (!std::regex_match(t, m, outer))
        throw std::invalid_argument("mirror: expected \"b=..; axials=(h1,d1),(h2,d2),...\"");
    MirrorParams P;
    P.b = std::stoi(m[1]);
    static const std::regex pair(R"(\((\d+),(\d+)\))");
    std::string rest = m[2];
    for (auto it = std::sregex_iterator(rest.begin(), rest.end(), pair);
         it != std::sregex_iterator(); ++it)
        P.axials.emplace_back(std::stoi((*it)[1]), std::stoi((*it)[2]));
    P.validate();
    return P;
}

std::pair<MonomialIdeal, int> mirrorIdeal(const MirrorParams& P) {
    P.validate();
    const int D = P.d();
    std::vector<Monomial> gens;
    gens.emplace_back(P.axials[0].first, 0, 0);
    gens.emplace_back(0, D - P.b, 0);
    gens.emplace_back(0, 0, D - P.b);
    for (size_t i = 1; i < P.axials.size(); ++i) {
        auto [h, di] = P.axials[i];
        int w = (D - di - h) / 2;
        gens.emplace_back(h, w, w);
    }
    return {MonomialIdeal(std::move(gens)), D};
}

CiucuIndex mirrorIndex(const MirrorParams& P) {
    P.validate();
    const int s = P.s();
    for (int i = 1; i + 1 < s; ++i)
        if (P.axials[i].second % 2 != 0)
            throw std::invalid_argument("mirror: interior axial sides must be even");
    auto h = [&](int i) { return P.axials[i - 1].first; };    // 1-based
    auto dd = [&](int i) { return P.axials[i - 1].second; };  // 1-based
    CiucuIndex ix;
    ix.a = dd(1);
    for (int i = 2; i <= s; ++i) ix.k += dd(i);
    auto range = [](std::vector<int>& out, int lo, int hi) {
        for (int v = lo; v <= hi; ++v) out.push_back(v);
    };
    if (ix.k % 2 == 0) {
        // all lower axial sides even
        if (s == 1) {
            range(ix.p, 1, (h(1) + 1) / 2);
        } else {
            range(ix.p, 1, h(s) / 2);
            for (int i = s; i >= 3; --i) range(ix.p, (dd(i) + h(i)) / 2 + 1, h(i - 1) / 2);
            range(ix.p, (dd(2) + h(2)) / 2 + 1, (h(1) + 1) / 2);
        }
    } else {
        range(ix.p, 1, h(s) / 2);
        for (int i = s; i >= 2; --i)
            range(ix.q, (dd(i) + h(i) - h(s)) / 2 + 1, (h(i - 1) - h(s)) / 2);
    }
    return ix;
}

Rat ciucuB(int m, int n, const Rat& x) {
    if (m < 0 || n < 0) throw std::invalid_argument("ciucuB: negative index");
    Rat v = pow2(-static_cast<long long>(m) * n - choose2(m)) * shiftedFactorial(x + n + 1, m) *
            shiftedFactorial(x + n + 2, m);
    for (int i = 1; 2 * i <= n - 1 + 1; ++i) v *= shiftedFactorial(x + 1 + i, n + 1 - 2 * i);
    for (int i = 1; 2 * i <= n + 1; ++i) v *= shiftedFactorial(x + Rat(1, 2) + i, n + 2 - 2 * i);
    for (int i = 1; i <= n; ++i)
        v *= shiftedFactorial(x + i, m) / shiftedFactorial(x + i + Rat(1, 2), m);
    for (int i = 1; i <= m; ++i) v *= shiftedFactorial(2 * x + n + i + 2, n + i - 1);
    return v;
}

Rat ciucuBbar(int m, int n, const Rat& x) {
    if (m < 0 || n < 0) throw std::invalid_argument("ciucuBbar: negative index");
    Rat v = pow2(-static_cast<long long>(m) * n - static_cast<long long>(n) * (n + 1) / 2) *
            shiftedFactorial(x + m + 1, n);
    for (int i = 1; 2 * i <= m + 1; ++i) v *= shiftedFactorial(x + i, m + 2 - 2 * i);
    for (int i = 1; 2 * i <= m - 1 + 1; ++i)
        v *= shiftedFactorial(x + Rat(1, 2) + i, m + 1 - 2 * i);
    for (int i = 1; i <= m; ++i)
        v *= shiftedFactorial(x + i, n) / shiftedFactorial(x + i + Rat(1, 2), n);
    for (int i = 1; i <= n; ++i) v *= shiftedFactorial(2 * x + m + i + 1, m + i);
    return v;
}

namespace {

Rat ciucuCCommon(const std::vector<int>& p, const std::vector<int>& q, bool bar) {
    checkIncreasing(p, "ciucuC: p");
    checkIncreasing(q, "ciucuC: q");
    const int m = static_cast<int>(p.size()), n = static_cast<int>(q.size());
    Rat v = pow2(choose2(n - m) - m);
    for (int pi : p) v /= Rat(factorial(bar ? 2 * pi - 1 : 2 * pi));
    for (int qi : q) v /= Rat(factorial(bar ? 2 * qi : 2 * qi - 1));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) v *= p[j] - p[i];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) v *= q[j] - q[i];
    for (int pi : p)
        for (int qi : q) v /= pi + qi;
    return v;
}

}  // namespace

Rat ciucuC(const std::vector<int>& p, const std::vector<int>& q) {
    return ciucuCCommon(p, q, false);
}

Rat ciucuCbar(const std::vector<int>& p, const std::vector<int>& q) {
    return ciucuCCommon(p, q, true);
}

Rat ciucuP(const std::vector<int>& p, const std::vector<int>& q, const Rat& x) {
    const int m = static_cast<int>(p.size()), n = static_cast<int>(q.size());
    const int pm = p.empty() ? 0 : p.back();
    Rat v = ciucuC(p, q) * ciucuB(m, n, x + pm - m);
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= p[i - 1] - 1; ++j)
            v *= (x + pm - j) * (x + pm - m + n + j + 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= q[i - 1] - 1; ++j)
            v *= (x + pm - m + n - j + 1) * (x + pm + j + 1);
    return v;
}

Rat ciucuPbar(const std::vector<int>& p, const std::vector<int>& q, const Rat& x) {
    const int m = static_cast<int>(p.size()), n = static_cast<int>(q.size());
    const int pm = p.empty() ? 0 : p.back();
    Rat v = ciucuCbar(p, q) * ciucuBbar(m, n, x + pm - m);
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= p[i - 1] - 1; ++j)
            v *= (x + pm - j) * (x + pm - m + n + j + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= q[i - 1] - 1; ++j)
            v *= (x + pm - m + n - j) * (x + pm + j + 1);
    return v;
}

MirrorEnumeration mirrorEnumeration(const MirrorParams& P) {
    CiucuIndex ix = mirrorIndex(P);  // validates, including interior parity
    const int a = ix.a, k = ix.k;
    const int mn = ix.m() + ix.n();
    MirrorEnumeration out;
    Rat per;
    if (k % 2 == 0 && a % 2 == 0 && !ix.p.empty() && ix.p[0] == 1) {
        out.caseTag = "even-even-grounded";
        per = pow2(ix.m()) * ciucuP({}, ix.p, Rat(a + k - 2, 2)) *
              ciucuPbar(dropLeadingOne(ix.p), {}, Rat(a, 2));
        out.absDet = out.per = requireIntegral(per, "mirrorEnumeration");
    } else if (k % 2 == 0 && a % 2 == 0) {
        out.caseTag = "even-even-lifted";
        per = pow2(ix.m()) * ciucuP({}, ix.p, Rat(a + k - 2, 2)) *
              ciucuP(dropLeadingOne(ix.p), {}, Rat(a, 2));
        out.absDet = out.per = requireIntegral(per, "mirrorEnumeration");
    } else if (k % 2 == 0) {
        out.caseTag = "even-odd-top";
        per = pow2(ix.m()) * ciucuP({}, dropLast(ix.p), Rat(a + k - 1, 2)) *
              ciucuPbar(ix.p, {}, Rat(a - 1, 2));
        out.absDet = out.per = requireIntegral(per, "mirrorEnumeration");
    } else if (a % 2 == 0 && ix.p.empty()) {
        out.caseTag = "odd-bottom-on-base";
        per = pow2(mn) * ciucuPbar({}, ix.q, Rat(a + k - 1, 2)) * ciucuPbar(ix.q, {}, Rat(a, 2));
        out.absDet = out.per = requireIntegral(per, "mirrorEnumeration");
    } else if (a % 2 == 0) {
        out.caseTag = "odd-bottom-lifted";
        per = pow2(mn) * ciucuPbar(ix.p, ix.q, Rat(a + k - 1, 2)) *
              ciucuP(ix.q, dropLast(ix.p), Rat(a, 2));
        out.per = requireIntegral(per, "mirrorEnumeration");
        out.detKnown = false;  // no product formula; compute |det Z| numerically
    } else {
        out.caseTag = "odd-top-and-bottom";
        per = pow2(mn) * ciucuPbar(ix.p, dropLast(ix.q), Rat(a + k, 2)) *
              ciucuP(ix.q, ix.p, Rat(a - 1, 2));
        out.per = requireIntegral(per, "mirrorEnumeration");
        out.absDet = 0;  // two odd axial punctures force a vanishing determinant
    }
    return out;
}

}  // namespace lozenge
