#include "lozenge/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <bit>
#include <random>
#include <stdexcept>

#include <boost/multiprecision/miller_rabin.hpp>

namespace lozenge {

namespace {

Int binomialInt(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace

std::string LabeledIntMatrix::toCsv() const {
    std::string out;
    for (const auto& c : colLabels) out += "," + c;
    out += "\n";
    for (size_t i = 0; i < rows(); ++i) {
        out += rowLabels[i];
        for (size_t j = 0; j < cols(); ++j) out += "," + entries[i][j].str();
        out += "\n";
    }
    return out;
}

std::string LabeledIntMatrix::toGrid() const {
    std::string out;
    for (size_t i = 0; i < rows(); ++i) {
        for (size_t j = 0; j < cols(); ++j) {
            if (j) out += ' ';
            out += entries[i][j].str();
        }
        out += "\n";
    }
    return out;
}

LabeledIntMatrix zMatrix(const TriRegion& T) {
    LabeledIntMatrix M;
    for (const Monomial& v : T.down()) M.rowLabels.push_back(v.str());
    for (const Monomial& u : T.up()) M.colLabels.push_back(u.str());
    M.entries.assign(T.down().size(), std::vector<Int>(T.up().size(), 0));
    for (size_t i = 0; i < T.down().size(); ++i) {
        const Monomial& v = T.down()[i];
        for (size_t j = 0; j < T.up().size(); ++j) {
            const Monomial& u = T.up()[j];
            if (v.divides(u)) M.entries[i][j] = 1;
        }
    }
    return M;
}

LatticePoints latticePoints(const TriRegion& T) {
    LatticePoints L;
    const int d = T.d();
    for (const Monomial& m : monomialsOfDegree(d - 1)) {
        bool onUp = T.hasUp(m);
        bool onDown = m.ez >= 1 && T.hasDown(Monomial(m.ex, m.ey, m.ez - 1));
        if (onUp == onDown) continue;
        LatticeVertex v{m, d - 1 - m.ey, m.ex};
        if (onUp)
            L.A.push_back(v);
        else
            L.E.push_back(v);
    }
    auto ascending = [](const LatticeVertex& a, const LatticeVertex& b) {
        return readingBefore(b.label, a.label);
    };
    std::sort(L.A.begin(), L.A.end(), ascending);
    std::sort(L.E.begin(), L.E.end(), ascending);
    return L;
}

LabeledIntMatrix nMatrix(const TriRegion& T) {
    LatticePoints L = latticePoints(T);
    LabeledIntMatrix M;
    for (const auto& a : L.A) M.rowLabels.push_back(a.label.str());
    for (const auto& e : L.E) M.colLabels.push_back(e.label.str());
    M.entries.assign(L.A.size(), std::vector<Int>(L.E.size(), 0));
    for (size_t i = 0; i < L.A.size(); ++i)
        for (size_t j = 0; j < L.E.size(); ++j) {
            long long right = L.E[j].u - L.A[i].u;
            long long down = L.A[i].v - L.E[j].v;
            if (right >= 0 && down >= 0) M.entries[i][j] = binomialInt(right + down, right);
        }
    return M;
}

Int detExact(std::vector<std::vector<Int>> a) {
    const size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("determinant needs a square matrix");
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Int detExact(const LabeledIntMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant needs a square matrix");
    return detExact(M.entries);
}

Int permanentExact(const std::vector<std::vector<Int>>& a) {
    const size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("permanent needs a square matrix");
    if (n == 0) return 1;
    if (n > kPermanentCap) throw std::length_error("permanent capped at 34 columns");
    // Ryser with Gray-code column updates:
    //   per(A) = (-1)^n * sum_{S != 0} (-1)^|S| prod_i sum_{j in S} a[i][j]
    std::vector<Int> sums(n, 0);
    Int total = 0;
    uint64_t gray = 0;
    int popcount = 0;
    const uint64_t limit = 1ull << n;
    for (uint64_t k = 1; k < limit; ++k) {
        uint64_t next = k ^ (k >> 1);
        uint64_t flipped = next ^ gray;
        int j = std::countr_zero(flipped);
        if (next & flipped) {
            for (size_t i = 0; i < n; ++i) sums[i] += a[i][j];
            ++popcount;
        } else {
            for (size_t i = 0; i < n; ++i) sums[i] -= a[i][j];
            --popcount;
        }
        gray = next;
        Int prod = 1;
        for (size_t i = 0; i < n && prod != 0; ++i) prod *= sums[i];
        if (((n - popcount) & 1) == 0)
            total += prod;
        else
            total -= prod;
    }
    return total;
}

Int permanentExact(const LabeledIntMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("permanent needs a square matrix");
    return permanentExact(M.entries);
}

RankResult rankExact(const std::vector<std::vector<Int>>& input) {
    std::vector<std::vector<Int>> a = input;
    const size_t m = a.size();
    const size_t n = m ? a[0].size() : 0;
    std::vector<size_t> rowIdx(m), colIdx(n);
    std::iota(rowIdx.begin(), rowIdx.end(), 0);
    std::iota(colIdx.begin(), colIdx.end(), 0);
    RankResult r;
    Int prev = 1;
    size_t k = 0;
    while (k < m && k < n) {
        size_t pr = m, pc = n;
        for (size_t i = k; i < m && pr == m; ++i)
            for (size_t j = k; j < n; ++j)
                if (a[i][j] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == m) break;
        std::swap(a[pr], a[k]);
        std::swap(rowIdx[pr], rowIdx[k]);
        for (size_t i = 0; i < m; ++i) std::swap(a[i][pc], a[i][k]);
        std::swap(colIdx[pc], colIdx[k]);
        for (size_t i = k + 1; i < m; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
        ++k;
    }
    r.rank = static_cast<long long>(k);
    r.pivotMinor = k ? abs(prev) : Int(1);
    r.pivotRows.assign(rowIdx.begin(), rowIdx.begin() + k);
    r.pivotCols.assign(colIdx.begin(), colIdx.begin() + k);
    std::sort(r.pivotRows.begin(), r.pivotRows.end());
    std::sort(r.pivotCols.begin(), r.pivotCols.end());
    return r;
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool isPrimeU64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

uint64_t pollardRho(uint64_t n) {
    if ((n & 1) == 0) return 2;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ n);
    while (true) {
        uint64_t x = rng() % n, y = x, c = rng() % n + 1, d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = std::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factorU64(uint64_t n, std::map<uint64_t, int>& out) {
    if (n == 1) return;
    if (isPrimeU64(n)) {
        ++out[n];
        return;
    }
    uint64_t d = pollardRho(n);
    factorU64(d, out);
    factorU64(n / d, out);
}

}  // namespace

Factorization factorInteger(Int n) {
    Factorization f;
    n = abs(n);
    if (n <= 1) return f;
    std::map<Int, int> found;
    for (int small : {2, 3, 5}) {
        Int p = small;
        while (n % p == 0) {
            ++found[p];
            n /= p;
        }
    }
    for (Int p = 7; p <= 1'000'000 && p * p <= n; p += 2) {
        while (n % p == 0) {
            ++found[p];
            n /= p;
        }
    }
    if (n > 1) {
        if (n < Int("18446744073709551616")) {
            std::map<uint64_t, int> rest;
            factorU64(static_cast<uint64_t>(n), rest);
            for (auto& [p, e] : rest) found[Int(p)] += e;
        } else if (boost::multiprecision::miller_rabin_test(n, 40)) {
            ++found[n];
        } else {
            f.complete = false;
            f.cofactor = n;
        }
    }
    for (auto& [p, e] : found) f.factors.emplace_back(p, e);
    return f;
}

long long rankModP(const std::vector<std::vector<Int>>& input, const Int& p) {
    if (p > Int("9223372036854775807"))
        throw std::invalid_argument("modular rank limited to word-size primes");
    const uint64_t q = static_cast<uint64_t>(p);
    const size_t m = input.size();
    const size_t n = m ? input[0].size() : 0;
    std::vector<std::vector<uint64_t>> a(m, std::vector<uint64_t>(n));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) {
            Int e = input[i][j] % p;
            if (e < 0) e += p;
            a[i][j] = static_cast<uint64_t>(e);
        }
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < m; ++col) {
        size_t piv = rank;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[rank]);
        uint64_t inv = powmod(a[rank][col], q - 2, q);
        for (size_t i = rank + 1; i < m; ++i) {
            if (a[i][col] == 0) continue;
            uint64_t f = mulmod(a[i][col], inv, q);
            for (size_t j = col; j < n; ++j) {
                uint64_t sub = mulmod(f, a[rank][j], q);
                a[i][j] = (a[i][j] + q - sub) % q;
            }
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

namespace {

// Exact |det| of the submatrix given by sorted row/col index sets.
Int submatrixAbsDet(const std::vector<std::vector<Int>>& a, const std::vector<size_t>& rows,
                    const std::vector<size_t>& cols) {
    std::vector<std::vector<Int>> sub(rows.size(), std::vector<Int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) sub[i][j] = a[rows[i]][cols[j]];
    return abs(detExact(std::move(sub)));
}

// Pivot rows/cols of a mod-p elimination; used to exhibit a maximal minor
// that p does not divide.
void pivotsModP(const std::vector<std::vector<Int>>& input, const Int& p,
                std::vector<size_t>& rowsOut, std::vector<size_t>& colsOut) {
    const uint64_t q = static_cast<uint64_t>(p);
    const size_t m = input.size();
    const size_t n = m ? input[0].size() : 0;
    std::vector<std::vector<uint64_t>> a(m, std::vector<uint64_t>(n));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) {
            Int e = input[i][j] % p;
            if (e < 0) e += p;
            a[i][j] = static_cast<uint64_t>(e);
        }
    std::vector<size_t> rowIdx(m);
    std::iota(rowIdx.begin(), rowIdx.end(), 0);
    rowsOut.clear();
    colsOut.clear();
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < m; ++col) {
        size_t piv = rank;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[rank]);
        std::swap(rowIdx[piv], rowIdx[rank]);
        uint64_t inv = powmod(a[rank][col], q - 2, q);
        for (size_t i = rank + 1; i < m; ++i) {
            if (a[i][col] == 0) continue;
            uint64_t f = mulmod(a[i][col], inv, q);
            for (size_t j = col; j < n; ++j) {
                uint64_t sub = mulmod(f, a[rank][j], q);
                a[i][j] = (a[i][j] + q - sub) % q;
            }
        }
        rowsOut.push_back(rowIdx[rank]);
        colsOut.push_back(col);
        ++rank;
    }
    std::sort(rowsOut.begin(), rowsOut.end());
}

}  // namespace

RankProfile rankProfile(const LabeledIntMatrix& M, const std::vector<Int>& primes) {
    RankProfile r;
    r.rows = M.rows();
    r.cols = M.cols();
    const auto& a = M.entries;
    RankResult rq = rankExact(a);
    r.rankQ = rq.rank;
    const long long maxRank = static_cast<long long>(std::min(r.rows, r.cols));
    r.maximalQ = r.rankQ == maxRank;

    if (r.maximalQ && r.rankQ > 0) {
        if (r.rows == r.cols) {
            r.minorGcd = abs(detExact(a));
        } else {
            // gcd of a handful of maximal minors, then trim primes that some
            // maximal minor avoids (found via mod-p pivoting) so the prime
            // support is exactly the set of rank-dropping primes.
            Int g = rq.pivotMinor;
            std::mt19937_64 rng(12345);
            for (int trial = 0; trial < 4 && g > 1; ++trial) {
                std::vector<std::vector<Int>> shuffled;
                std::vector<size_t> order(r.rows > r.cols ? r.rows : r.cols);
                std::iota(order.begin(), order.end(), 0);
                std::shuffle(order.begin(), order.end(), rng);
                if (r.rows > r.cols) {
                    std::vector<std::vector<Int>> b;
                    for (size_t i : order) b.push_back(a[i]);
                    RankResult rr = rankExact(b);
                    if (rr.rank == r.rankQ) g = gcd(g, rr.pivotMinor);
                } else {
                    std::vector<std::vector<Int>> b(r.rows, std::vector<Int>(r.cols));
                    for (size_t i = 0; i < r.rows; ++i)
                        for (size_t j = 0; j < r.cols; ++j) b[i][j] = a[i][order[j]];
                    RankResult rr = rankExact(b);
                    if (rr.rank == r.rankQ) g = gcd(g, rr.pivotMinor);
                }
            }
            bool changed = true;
            while (changed && g > 1) {
                changed = false;
                Factorization fg = factorInteger(g);
                for (auto& [p, e] : fg.factors) {
                    if (rankModP(a, p) == r.rankQ) {
                        std::vector<size_t> rows, cols;
                        pivotsModP(a, p, rows, cols);
                        g = gcd(g, submatrixAbsDet(a, rows, cols));
                        changed = true;
                        break;
                    }
                }
            }
            r.minorGcd = g;
        }
        r.minorFactorization = factorInteger(r.minorGcd);
        for (auto& [p, e] : r.minorFactorization.factors) {
            if (r.rows == r.cols || rankModP(a, p) < r.rankQ) r.failingPrimes.push_back(p);
        }
    }
    for (const Int& p : primes) r.rankAtPrimes[p] = rankModP(M.entries, p);
    return r;
}

namespace {

// x -> y -> z -> x applied `times` times to the exponents.
Monomial rotateMonomial(const Monomial& m, int times) {
    Monomial r = m;
    for (int t = 0; t < times; ++t) r = Monomial(r.ez, r.ex, r.ey);
    return r;
}

TriRegion rotateRegion(const TriRegion& T, int times) {
    std::vector<Monomial> up, down, zero;
    for (const Monomial& m : T.up()) up.push_back(rotateMonomial(m, times));
    for (const Monomial& m : T.down()) down.push_back(rotateMonomial(m, times));
    for (const Monomial& m : T.zeroPunctures()) zero.push_back(rotateMonomial(m, times));
    return TriRegion(T.d(), std::move(up), std::move(down), std::move(zero));
}

}  // namespace

std::vector<MinorWitness> maximalMinors(const TriRegion& T, bool restricted,
                                        unsigned long long cap) {
    const long long bal = T.balance();
    std::vector<MinorWitness> out;
    if (bal == 0) {
        out.push_back({{}, abs(detExact(zMatrix(T)))});
        return out;
    }
    const bool removeUp = bal > 0;
    const size_t k = static_cast<size_t>(removeUp ? bal : -bal);
    std::vector<Monomial> candidates;
    if (!restricted) {
        candidates = removeUp ? T.up() : T.down();
    } else {
        // The start/end vertex sets depend on which corner of the ambient
        // triangle plays the role of the origin; all three rotations give the
        // same |det| values, so use the one with the fewest removal choices.
        std::vector<Monomial> best;
        for (int rot = 0; rot < 3; ++rot) {
            LatticePoints L = latticePoints(rotateRegion(T, rot));
            std::vector<Monomial> cur;
            if (removeUp) {
                for (const auto& v : L.A) cur.push_back(rotateMonomial(v.label, 3 - rot));
            } else {
                for (const auto& v : L.E)
                    cur.push_back(rotateMonomial(
                        Monomial(v.label.ex, v.label.ey, v.label.ez - 1), 3 - rot));
            }
            if (rot == 0 || cur.size() < best.size()) best = std::move(cur);
        }
        candidates = std::move(best);
        std::sort(candidates.begin(), candidates.end(), readingBefore);
    }
    if (candidates.size() < k) return out;
    // count choices against the cap
    unsigned long long choices = 1;
    for (size_t i = 0; i < k; ++i) {
        choices = choices * (candidates.size() - i) / (i + 1);
        if (choices > cap) throw std::length_error("maximal-minor enumeration exceeds cap");
    }
    std::vector<size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::vector<Monomial> removed;
        for (size_t i : pick) removed.push_back(candidates[i]);
        std::vector<Monomial> up = T.up(), down = T.down();
        auto& side = removeUp ? up : down;
        for (const Monomial& m : removed)
            side.erase(std::remove(side.begin(), side.end(), m), side.end());
        TriRegion sub(T.d(), std::move(up), std::move(down));
        out.push_back({removed, abs(detExact(zMatrix(sub)))});
        // next k-combination
        size_t i = k;
        while (i > 0) {
            --i;
            if (pick[i] != i + candidates.size() - k) {
                ++pick[i];
                for (size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
        if (k == 0) return out;
    }
}

}  // namespace lozenge
