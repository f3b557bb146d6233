// loz: command-line front end for the lozenge library.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lozenge/formulas.hpp"
#include "lozenge/lefschetz.hpp"
#include "lozenge/matrix.hpp"
#include "lozenge/region.hpp"
#include "lozenge/tiling.hpp"

using json = nlohmann::ordered_json;
using namespace lozenge;

namespace {

json jint(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return static_cast<long long>(v);
    return v.str();
}

json jints(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(jint(x));
    return a;
}

json jmons(const std::vector<Monomial>& v) {
    json a = json::array();
    for (const Monomial& m : v) a.push_back(m.str());
    return a;
}

json regionDump(const TriRegion& T) {
    return json{{"d", T.d()},
                {"up", jmons(T.up())},
                {"down", jmons(T.down())},
                {"zeroPunctures", jmons(T.zeroPunctures())}};
}

bool prettyFlag = false;

void emit(const json& j) { std::cout << j.dump(prettyFlag ? 2 : -1) << "\n"; }

unsigned long long defaultCap() {
    if (const char* s = std::getenv("LOZ_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1'000'000ULL;
}

// Canonical ambient side: floor(sum/2) for three pure powers, sum/3 for a
// four-generator almost complete intersection when integral.
int resolveD(const MonomialIdeal& I, int dFlag) {
    if (dFlag > 0) return dFlag;
    long long sum = 0;
    for (const Monomial& g : I.gens()) sum += g.degree();
    bool pure[3] = {false, false, false};
    for (int v = 0; v < 3; ++v) pure[v] = I.purePowerExponent(v).has_value();
    if (pure[0] && pure[1] && pure[2]) {
        if (I.gens().size() == 3) return static_cast<int>(sum / 2);
        if (I.gens().size() == 4 && sum % 3 == 0) return static_cast<int>(sum / 3);
    }
    throw std::invalid_argument("--d is required: no canonical ambient side for this ideal");
}

std::vector<int> parseIntList(const std::string& s, size_t want, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (out.size() != want)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(want) +
                                    " comma-separated integers");
    return out;
}

// ---- rendering ----

// Row a (0 = bottom) holds d-a upward and d-a-1 downward triangles; the
// j-th upward cell from the left is x^a y^{d-1-a-j} z^j, the j-th downward
// cell is x^a y^{d-2-a-j} z^j.
std::string asciiRender(const TriRegion& T) {
    std::string out;
    int d = T.d();
    for (int a = d - 1; a >= 0; --a) {
        out.append(a, ' ');
        int W = d - a;
        for (int j = 0; j < 2 * W - 1; ++j) {
            int slot = j / 2;
            if (j % 2 == 0) {
                Monomial m(a, W - 1 - slot, d - 1 - a - (W - 1 - slot));
                out.push_back(T.hasUp(m) ? '^' : '.');
            } else {
                Monomial m(a, W - 2 - slot, d - 2 - a - (W - 2 - slot));
                out.push_back(T.hasDown(m) ? 'v' : '.');
            }
        }
        out.push_back('\n');
    }
    return out;
}

struct Pt {
    double x, y;
};

Pt upCenter(int d, const Monomial& m, double h, double H) {
    int a = m.ex, j = (d - a - 1) - m.ey;
    return {10.0 * a + 20.0 * j + 10.0, H - h * a - h / 3.0};
}

Pt downCenter(int d, const Monomial& m, double h, double H) {
    int a = m.ex, j = (d - a - 2) - m.ey;
    return {10.0 * a + 20.0 * j + 20.0, H - h * a - 2.0 * h / 3.0};
}

std::string svgRender(const TriRegion& T, const std::optional<Tiling>& tau) {
    int d = T.d();
    const double h = 17.320508;
    const double H = h * d;
    std::ostringstream svg;
    svg.setf(std::ios::fixed);
    svg.precision(2);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 20 * d << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << 20 * d << " " << H << "\">\n";
    svg << "<rect width=\"" << 20 * d << "\" height=\"" << H
        << "\" fill=\"white\" stroke=\"black\"/>\n";
    for (int a = 0; a < d; ++a) {
        int W = d - a;
        double yb = H - h * a, yt = H - h * (a + 1);
        for (int j = 0; j < W; ++j) {
            Monomial m(a, W - 1 - j, d - 1 - a - (W - 1 - j));
            double x0 = 10.0 * a + 20.0 * j;
            svg << "<polygon class=\"" << (T.hasUp(m) ? "up" : "hole") << "\" points=\"" << x0
                << "," << yb << " " << x0 + 20 << "," << yb << " " << x0 + 10 << "," << yt
                << "\" fill=\"" << (T.hasUp(m) ? "#eeeeee" : "#444444")
                << "\" stroke=\"#999999\"/>\n";
        }
        for (int j = 0; j + 1 < W; ++j) {
            Monomial m(a, W - 2 - j, d - 2 - a - (W - 2 - j));
            double x0 = 10.0 * a + 20.0 * j;
            svg << "<polygon class=\"" << (T.hasDown(m) ? "down" : "hole") << "\" points=\""
                << x0 + 10 << "," << yt << " " << x0 + 30 << "," << yt << " " << x0 + 20 << ","
                << yb << "\" fill=\"" << (T.hasDown(m) ? "#eeeeee" : "#444444")
                << "\" stroke=\"#999999\"/>\n";
        }
    }
    if (tau)
        for (const Lozenge& l : tau->lozenges) {
            Pt p = downCenter(d, l.down, h, H), q = upCenter(d, l.up, h, H);
            svg << "<line class=\"lozenge\" x1=\"" << p.x << "\" y1=\"" << p.y << "\" x2=\""
                << q.x << "\" y2=\"" << q.y
                << "\" stroke=\"#3366cc\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
        }
    svg << "</svg>\n";
    return svg.str();
}

// ---- experiments ----

void runZeroMirror(int maxCases, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    json rows = json::array();
    int made = 0, agree = 0;
    while (made < maxCases) {
        MirrorParams P;
        P.b = static_cast<int>(rng() % 3);
        int s = 1 + static_cast<int>(rng() % 3);
        int hgt = 0;
        for (int i = 0; i < s; ++i) {
            int side = 1 + static_cast<int>(rng() % 3);
            hgt += side + (i == 0 ? 0 : static_cast<int>(rng() % 3));
            P.axials.emplace_back(hgt, side);
        }
        try {
            P.validate();
        } catch (const std::invalid_argument&) {
            continue;
        }
        auto [I, d] = mirrorIdeal(P);
        if (d > 12) continue;
        Int det = detExact(zMatrix(buildRegion(I, d)));
        int odd = 0;
        for (size_t i = 1; i < P.axials.size(); ++i)
            if (P.axials[i].second % 2) ++odd;
        bool predictZero = odd % 4 == 2 || odd % 4 == 3;
        json ax = json::array();
        for (auto [hh, dd] : P.axials) ax.push_back(json::array({hh, dd}));
        rows.push_back(json{{"b", P.b},
                            {"axials", ax},
                            {"d", d},
                            {"oddAxialBelowTop", odd},
                            {"mod4", odd % 4},
                            {"detZero", det == 0},
                            {"matchesPattern", (det == 0) == predictZero}});
        agree += (det == 0) == predictZero;
        ++made;
    }
    emit(json{{"experiment", "zero-mirror"},
              {"note", "conjecture — not asserted"},
              {"cases", made},
              {"matchingPattern", agree},
              {"rows", rows}});
}

void runTypeTwoChar(int maxCases, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    json rows = json::array();
    int made = 0, within = 0;
    while (made < maxCases) {
        int a = 2 + static_cast<int>(rng() % 6), b = 2 + static_cast<int>(rng() % 6);
        int c = 2 + static_cast<int>(rng() % 6);
        int al = 1 + static_cast<int>(rng() % (a - 1)), be = 1 + static_cast<int>(rng() % (b - 1));
        std::vector<Monomial> g{Monomial(a, 0, 0), Monomial(0, b, 0), Monomial(0, 0, c),
                                Monomial(al, be, 0)};
        if (rng() % 2) g.emplace_back(al, 0, 1 + static_cast<int>(rng() % (c - 1)));
        MonomialIdeal I(g);
        if (I.gens().size() != g.size() || socleInfo(I).type != 2) continue;
        auto rep = wlpReport(I);
        Rat bound = Rat(a + b + c) / 2;
        bool ok = true;
        for (const Int& p : rep.failChars)
            if (Rat(p) > bound) ok = false;
        rows.push_back(json{{"ideal", I.str()},
                            {"wlpQ", rep.wlpQ},
                            {"failChars", jints(rep.failChars)},
                            {"bound", (a + b + c) / 2.0},
                            {"withinBound", ok}});
        within += ok;
        ++made;
    }
    emit(json{{"experiment", "type-two-char"},
              {"note", "conjecture — not asserted"},
              {"cases", made},
              {"withinBound", within},
              {"rows", rows}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lozenge tilings of punctured triangular regions"};
    app.require_subcommand(1);
    app.add_flag("--pretty", prettyFlag, "indent JSON output");

    std::string ideal, params, base, aciSpec, ciSpec, svgPath;
    int dFlag = 0, jParam = 1, kParam = 0, maxCases = 40;
    unsigned long long cap = defaultCap(), seed = 0;
    bool dump = false, ascii = false, restricted = false, withTiling = false;

    auto addIdeal = [&](CLI::App* c, bool needIdeal = true) {
        auto* o = c->add_option("--ideal", ideal, "comma-separated monomial generators");
        if (needIdeal) o->required();
        c->add_option("--d", dFlag, "ambient side length");
    };

    auto* cRegion = app.add_subcommand("region", "describe the triangular region of an ideal");
    addIdeal(cRegion);
    cRegion->add_flag("--dump", dump, "emit only the round-trippable region data");

    auto* cRender = app.add_subcommand("render", "draw a region");
    addIdeal(cRender);
    cRender->add_flag("--ascii", ascii, "rows of ^ and v on stdout");
    cRender->add_option("--svg", svgPath, "write an SVG file");
    cRender->add_flag("--tiling", withTiling, "overlay the canonical tiling");

    auto* cDet = app.add_subcommand("det", "determinant and permanent of the adjacency matrix");
    addIdeal(cDet);
    auto* cPer = app.add_subcommand("per", "permanent of the adjacency matrix");
    addIdeal(cPer);

    auto* cTil = app.add_subcommand("tilings", "count all lozenge tilings");
    addIdeal(cTil);
    cTil->add_option("--cap", cap, "abort once this many tilings are found");

    auto* cWlp = app.add_subcommand("wlp", "maximal-rank report for multiplication by x+y+z");
    addIdeal(cWlp);

    auto* cPrimes = app.add_subcommand("primes", "failing characteristics from closed formulas");
    cPrimes->add_option("--ci", ciSpec, "a,b,c for three pure powers");
    cPrimes->add_option("--ideal", ideal, "ideal for the prime-power interval test");

    auto* cSemi = app.add_subcommand("semistable", "subset-slope test for the syzygy bundle");
    addIdeal(cSemi);

    auto* cSplit = app.add_subcommand("splitting-type", "generic splitting type of the syzygy bundle");
    cSplit->add_option("--aci", aciSpec, "a,b,c,alpha,beta,gamma")->required();

    auto* cMirror = app.add_subcommand("mirror", "closed-form counts for a mirror symmetric region");
    cMirror->add_option("--params", params, "b=..; axials=(h1,d1),(h2,d2),...")->required();

    auto* cTog = app.add_subcommand("togliatti", "rank deficit of a single-degree ideal");
    addIdeal(cTog);

    auto* cReduce = app.add_subcommand("reduce-unit", "shrink punctures to unit size");
    addIdeal(cReduce);

    auto* cFam = app.add_subcommand("family", "single-degree family with a prescribed deficit");
    cFam->add_option("--base", base, "Artinian seed ideal, generated in one degree")->required();
    cFam->add_option("--d", dFlag, "target degree")->required();
    cFam->add_option("--j", jParam, "deficit multiplier");
    cFam->add_option("--k", kParam, "generator-count offset");

    auto* cExp = app.add_subcommand("experiment", "tabulate conjecture data (never asserted)");
    std::string which;
    cExp->add_option("what", which, "zero-mirror | type-two-char")->required();
    cExp->add_option("--max", maxCases, "number of sampled cases");
    cExp->add_option("--seed", seed, "sample seed");

    try {
        app.parse(argc, argv);

        if (*cRegion) {
            MonomialIdeal I = parseIdeal(ideal);
            int d = resolveD(I, dFlag);
            TriRegion T = buildRegion(I, d);
            if (dump) {
                emit(regionDump(T));
                return 0;
            }
            json j = regionDump(T);
            j["balance"] = T.balance();
            json ps = json::array();
            for (const Puncture& p : punctures(T))
                ps.push_back(json{{"corner", p.corner.str()},
                                  {"side", p.side},
                                  {"floating", p.floating},
                                  {"axial", p.axial},
                                  {"cornerOfAmbient", p.cornerOfAmbient}});
            j["punctures"] = ps;
            j["overPuncturing"] = overPuncturing(T);
            j["perfectlyPunctured"] = perfectlyPunctured(T);
            j["tileable"] = isTileable(T);
            emit(j);
        } else if (*cRender) {
            MonomialIdeal I = parseIdeal(ideal);
            TriRegion T = buildRegion(I, resolveD(I, dFlag));
            std::optional<Tiling> tau;
            if (withTiling) tau = canonicalTiling(T);
            if (!svgPath.empty()) {
                std::ofstream f(svgPath);
                if (!f) throw std::invalid_argument("cannot write " + svgPath);
                f << svgRender(T, tau);
            }
            if (ascii || svgPath.empty()) std::cout << asciiRender(T);
        } else if (*cDet || *cPer) {
            MonomialIdeal I = parseIdeal(ideal);
            auto Z = zMatrix(buildRegion(I, resolveD(I, dFlag)));
            json j;
            if (*cDet) j["det"] = jint(detExact(Z));
            if (std::min(Z.rows(), Z.cols()) <= kPermanentCap)
                j["per"] = jint(permanentExact(Z));
            else
                j["per"] = nullptr;
            emit(j);
        } else if (*cTil) {
            MonomialIdeal I = parseIdeal(ideal);
            TriRegion T = buildRegion(I, resolveD(I, dFlag));
            auto all = enumerateTilings(T, cap);
            long long signSum = 0;
            for (const Tiling& t : all) signSum += pmSign(T, t);
            emit(json{{"count", all.size()}, {"signSum", signSum}});
        } else if (*cWlp) {
            auto rep = wlpReport(parseIdeal(ideal));
            json degs = json::array();
            for (const auto& dg : rep.degrees)
                degs.push_back(json{{"j", dg.j},
                                    {"expected", dg.expected},
                                    {"rankQ", dg.rankQ},
                                    {"delta", dg.delta},
                                    {"primes", jints(dg.primes)}});
            emit(json{{"wlpQ", rep.wlpQ},
                      {"failChars", jints(rep.failChars)},
                      {"socleDegrees", rep.socleDegrees},
                      {"degrees", degs},
                      {"notes", rep.notes}});
        } else if (*cPrimes) {
            if (!ciSpec.empty()) {
                auto v = parseIntList(ciSpec, 3, "--ci");
                auto r = ciWlp(v[0], v[1], v[2]);
                emit(json{{"alwaysWlp", r.alwaysWlp},
                          {"criticalValue", jint(r.criticalValue)},
                          {"failingPrimes", jints(r.failingPrimes)}});
            } else if (!ideal.empty()) {
                emit(json{{"frobeniusPrimes", jints(frobeniusFailPrimes(parseIdeal(ideal)))}});
            } else {
                throw std::invalid_argument("primes: need --ci or --ideal");
            }
        } else if (*cSemi) {
            MonomialIdeal I = parseIdeal(ideal);
            int d = resolveD(I, dFlag);
            auto r = semistable(I, d);
            Rat mu = slope(I, d);
            emit(json{{"semistable", r.semistable},
                      {"stable", r.stable},
                      {"witness", jmons(r.witness)},
                      {"slope", mu.str()}});
        } else if (*cSplit) {
            auto v = parseIntList(aciSpec, 6, "--aci");
            auto r = splittingTypeClosed(v[0], v[1], v[2], v[3], v[4], v[5]);
            emit(json{{"type", json::array({r.type.p, r.type.q, r.type.r})},
                      {"usedWlp", r.usedWlp},
                      {"usedOracle", r.usedOracle}});
        } else if (*cMirror) {
            MirrorParams P = parseMirrorParams(params);
            auto [I, d] = mirrorIdeal(P);
            auto r = mirrorEnumeration(P);
            json j{{"d", d},
                   {"ideal", I.str()},
                   {"per", jint(r.per)},
                   {"detKnown", r.detKnown},
                   {"caseTag", r.caseTag}};
            j["absDet"] = r.detKnown ? jint(r.absDet) : json(nullptr);
            emit(j);
        } else if (*cTog) {
            MonomialIdeal I = parseIdeal(ideal);
            int d = dFlag > 0 ? dFlag : I.gens().front().degree();
            auto r = togliattiDelta(I, d);
            emit(json{{"d", d},
                      {"isTogliatti", r.isTogliatti},
                      {"delta", r.delta},
                      {"inverseSystem", jmons(r.inverseSystem)}});
        } else if (*cReduce) {
            MonomialIdeal I = parseIdeal(ideal);
            TriRegion T = buildRegion(I, resolveD(I, dFlag));
            TriRegion U = unitReduction(T);
            emit(json{{"original", regionDump(T)},
                      {"reduced", regionDump(U)},
                      {"ideal", idealOfRegion(U).str()}});
        } else if (*cFam) {
            MonomialIdeal I = buildTogliattiFamily(parseIdeal(base), dFlag, jParam, kParam);
            auto r = togliattiDelta(I, dFlag);
            emit(json{{"gens", jmons(I.gens())},
                      {"count", I.gens().size()},
                      {"delta", r.delta}});
        } else if (*cExp) {
            if (which == "zero-mirror")
                runZeroMirror(maxCases, seed);
            else if (which == "type-two-char")
                runTypeTwoChar(maxCases, seed);
            else
                throw std::invalid_argument("unknown experiment: " + which);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
