#include "lozenge/tiling.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "lozenge/matrix.hpp"

namespace lozenge {

namespace {

// Adjacency between downs (rows) and ups (cols), both in reading order.
std::vector<std::vector<int>> adjacency(const TriRegion& T) {
    std::vector<std::vector<int>> adj(T.down().size());
    std::map<Monomial, int> upIndex;
    for (size_t j = 0; j < T.up().size(); ++j) upIndex[T.up()[j]] = static_cast<int>(j);
    for (size_t i = 0; i < T.down().size(); ++i) {
        const Monomial& v = T.down()[i];
        for (Monomial u : {Monomial(v.ex + 1, v.ey, v.ez), Monomial(v.ex, v.ey + 1, v.ez),
                           Monomial(v.ex, v.ey, v.ez + 1)}) {
            auto it = upIndex.find(u);
            if (it != upIndex.end()) adj[i].push_back(it->second);
        }
    }
    return adj;
}

bool augment(const std::vector<std::vector<int>>& adj, int i, std::vector<int>& matchUp,
             std::vector<char>& seen) {
    for (int j : adj[i]) {
        if (seen[j]) continue;
        seen[j] = 1;
        if (matchUp[j] < 0 || augment(adj, matchUp[j], matchUp, seen)) {
            matchUp[j] = i;
            return true;
        }
    }
    return false;
}

struct Enumerator {
    const TriRegion& T;
    std::vector<std::vector<int>> adj;
    std::vector<int> partner;    // down index -> up index
    std::vector<char> usedUp;
    std::vector<Tiling>* out = nullptr;  // null: stop at first
    std::optional<Tiling> first;
    unsigned long long cap;

    Enumerator(const TriRegion& t, unsigned long long c) : T(t), adj(adjacency(t)), cap(c) {
        partner.assign(T.down().size(), -1);
        usedUp.assign(T.up().size(), 0);
    }

    Tiling current() const {
        Tiling tau;
        for (size_t i = 0; i < partner.size(); ++i)
            tau.lozenges.push_back({T.down()[i], T.up()[partner[i]]});
        return tau;
    }

    // returns false to abort the search (first-solution mode)
    bool search(size_t i) {
        if (i == partner.size()) {
            if (out) {
                if (out->size() >= cap) throw std::length_error("tiling enumeration exceeds cap");
                out->push_back(current());
                return true;
            }
            first = current();
            return false;
        }
        for (int j : adj[i]) {
            if (usedUp[j]) continue;
            usedUp[j] = 1;
            partner[i] = j;
            bool keep = search(i + 1);
            usedUp[j] = 0;
            partner[i] = -1;
            if (!keep) return false;
        }
        return true;
    }
};

}  // namespace

std::string Tiling::str() const {
    std::string s;
    for (const Lozenge& l : lozenges) {
        if (!s.empty()) s += ",";
        s += l.down.str() + ":" + l.up.str();
    }
    return s;
}

bool isTileable(const TriRegion& T) {
    if (!T.balanced()) return false;
    if (T.empty()) return true;
    auto adj = adjacency(T);
    std::vector<int> matchUp(T.up().size(), -1);
    size_t matched = 0;
    for (size_t i = 0; i < adj.size(); ++i) {
        std::vector<char> seen(T.up().size(), 0);
        if (augment(adj, static_cast<int>(i), matchUp, seen)) ++matched;
    }
    return matched == T.down().size();
}

bool noDownHeavyMonomialSubregion(const TriRegion& T) {
    for (int deg = 1; deg < T.d(); ++deg)
        for (const Monomial& m : monomialsOfDegree(deg))
            if (monomialSubregion(T, m).downHeavy()) return false;
    return true;
}

std::optional<Tiling> canonicalTiling(const TriRegion& T) {
    if (!T.balanced()) return std::nullopt;
    if (T.empty()) return Tiling{};
    Enumerator e(T, 1);
    e.search(0);
    return e.first;
}

std::vector<Tiling> enumerateTilings(const TriRegion& T, unsigned long long cap) {
    std::vector<Tiling> out;
    if (!T.balanced()) return out;
    if (T.empty()) {
        out.push_back(Tiling{});
        return out;
    }
    Enumerator e(T, cap);
    e.out = &out;
    e.search(0);
    return out;
}

namespace {

void checkTiling(const TriRegion& T, const Tiling& tau) {
    if (tau.lozenges.size() != T.down().size() || tau.lozenges.size() != T.up().size())
        throw std::invalid_argument("not a tiling of this region");
    for (const Lozenge& l : tau.lozenges) {
        if (!T.hasDown(l.down) || !T.hasUp(l.up)) throw std::invalid_argument("tiling uses absent triangle");
        Monomial q = l.up / l.down;  // throws when not adjacent
        if (q.degree() != 1) throw std::invalid_argument("lozenge triangles not adjacent");
    }
}

size_t indexOf(const std::vector<Monomial>& v, const Monomial& m) {
    auto it = std::lower_bound(v.begin(), v.end(), m, readingBefore);
    return static_cast<size_t>(it - v.begin());
}

int permutationSign(const std::vector<size_t>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = perm[j];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace

int pmSign(const TriRegion& T, const Tiling& tau) {
    checkTiling(T, tau);
    std::vector<size_t> perm(T.down().size());
    std::vector<char> upUsed(T.up().size(), 0);
    for (const Lozenge& l : tau.lozenges) {
        size_t i = indexOf(T.down(), l.down);
        size_t j = indexOf(T.up(), l.up);
        if (upUsed[j]) throw std::invalid_argument("tiling reuses an upward triangle");
        upUsed[j] = 1;
        perm[i] = j;
    }
    return permutationSign(perm);
}

std::vector<std::vector<std::pair<int, int>>> tilingToPaths(const TriRegion& T, const Tiling& tau) {
    checkTiling(T, tau);
    const int d = T.d();
    // Every non-z lozenge {D, U} contributes one path step from the vertex
    // labeled U to the vertex labeled D*z (rightward for U = D*y, downward
    // for U = D*x).
    std::map<Monomial, Monomial> next;
    for (const Lozenge& l : tau.lozenges) {
        Monomial target(l.down.ex, l.down.ey, l.down.ez + 1);
        if (l.up != target) next.emplace(l.up, target);
    }
    LatticePoints L = latticePoints(T);
    std::vector<std::vector<std::pair<int, int>>> paths;
    for (const LatticeVertex& a : L.A) {
        std::vector<std::pair<int, int>> path;
        Monomial cur = a.label;
        path.emplace_back(d - 1 - cur.ey, cur.ex);
        auto it = next.find(cur);
        while (it != next.end()) {
            cur = it->second;
            path.emplace_back(d - 1 - cur.ey, cur.ex);
            it = next.find(cur);
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

int lpSign(const TriRegion& T, const Tiling& tau) {
    auto paths = tilingToPaths(T, tau);
    LatticePoints L = latticePoints(T);
    if (paths.size() != L.E.size()) throw std::invalid_argument("unbalanced region has no path sign");
    std::vector<size_t> perm(paths.size());
    for (size_t i = 0; i < paths.size(); ++i) {
        auto [u, v] = paths[i].back();
        size_t j = 0;
        while (j < L.E.size() && !(L.E[j].u == u && L.E[j].v == v)) ++j;
        if (j == L.E.size()) throw std::logic_error("path does not end at an end vertex");
        perm[i] = j;
    }
    return permutationSign(perm);
}

bool floatingShadowCheck(const TriRegion& T) {
    const int d = T.d();
    std::vector<Puncture> ps = punctures(T);
    // group mutually overlapping punctures (sharing at least an edge)
    std::vector<int> comp(ps.size());
    for (size_t i = 0; i < ps.size(); ++i) comp[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j)
            if (triangleOverlap(ps[i].corner, ps[i].side, ps[j].corner, ps[j].side) >= 1)
                comp[find(static_cast<int>(i))] = find(static_cast<int>(j));
    // minimal covering region of each group
    std::map<int, std::vector<size_t>> groups;
    for (size_t i = 0; i < ps.size(); ++i) groups[find(static_cast<int>(i))].push_back(i);
    std::vector<std::pair<Monomial, int>> items;  // (corner, side)
    for (auto& [root, members] : groups) {
        int a = ps[members[0]].corner.ex, c = ps[members[0]].corner.ez;
        int end = 0;
        for (size_t i : members) {
            a = std::min(a, ps[i].corner.ex);
            c = std::min(c, ps[i].corner.ez);
            end = std::max(end, ps[i].corner.ez + ps[i].corner.ex + ps[i].side);
        }
        int side = end - c - a;
        items.emplace_back(Monomial(a, d - a - c - side, c), side);
    }
    // floating status of the items
    std::vector<char> grounded(items.size(), 0);
    for (size_t i = 0; i < items.size(); ++i)
        grounded[i] = touchesBoundary(items[i].first, items[i].second, d);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < items.size(); ++i) {
            if (grounded[i]) continue;
            for (size_t j = 0; j < items.size(); ++j)
                if (j != i && grounded[j] &&
                    triangleOverlap(items[i].first, items[i].second, items[j].first,
                                    items[j].second) >= 0) {
                    grounded[i] = 1;
                    changed = true;
                    break;
                }
        }
    }
    for (size_t i = 0; i < items.size(); ++i) {
        if (grounded[i] || items[i].second % 2 == 0) continue;
        for (size_t j = 0; j < items.size(); ++j)
            if (j != i && inShadow(items[i].first, items[i].second, items[j].first, items[j].second))
                return false;
    }
    return true;
}

}  // namespace lozenge
