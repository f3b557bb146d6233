#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

#include "lozenge/ideal.hpp"
#include "lozenge/region.hpp"

using json = nlohmann::json;
using namespace lozenge;

namespace {

std::string lozPath;

struct RunResult {
    int exitCode = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = "'" + lozPath + "' " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.exitCode = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-loz> [doctest options]\n");
        return 1;
    }
    lozPath = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    return ctx.run();
}

TEST_CASE("worked examples") {
    auto det = run("det --ideal \"x^3,y^4,z^5\" --d 6");
    CHECK(det.exitCode == 0);
    CHECK(det.out == "{\"det\":10,\"per\":10}\n");

    auto wlp = run("wlp --ideal \"x^4,y^4,z^4,x^2*z^2\"");
    CHECK(wlp.exitCode == 0);
    json jw = json::parse(wlp.out);
    CHECK(jw["wlpQ"] == true);
    CHECK(jw["failChars"] == json::array({2}));

    auto st = run("splitting-type --aci 6,7,8,3,3,3");
    CHECK(st.exitCode == 0);
    CHECK(json::parse(st.out)["type"] == json::array({-10, -10, -10}));
}

TEST_CASE("output is deterministic") {
    auto a = run("wlp --ideal \"x^5,y^5,z^3,x*y*z^2\"");
    auto b = run("wlp --ideal \"x^5,y^5,z^3,x*y*z^2\"");
    CHECK(a.exitCode == 0);
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out)["failChars"] == json::array({5}));
}

TEST_CASE("region dump round-trips") {
    auto r = run("region --ideal \"x^2,y^3,z^3,x*y*z\" --d 4 --dump");
    REQUIRE(r.exitCode == 0);
    json j = json::parse(r.out);
    std::vector<Monomial> up, down, zero;
    for (const auto& s : j["up"]) up.push_back(parseMonomial(s.get<std::string>()));
    for (const auto& s : j["down"]) down.push_back(parseMonomial(s.get<std::string>()));
    for (const auto& s : j["zeroPunctures"]) zero.push_back(parseMonomial(s.get<std::string>()));
    TriRegion rebuilt(j["d"].get<int>(), up, down, zero);
    CHECK(rebuilt == buildRegion(parseIdeal("x^2,y^3,z^3,x*y*z"), 4));
}

TEST_CASE("region report fields") {
    auto r = run("region --ideal \"x^3,y^4,z^5\"");  // canonical d = 6
    REQUIRE(r.exitCode == 0);
    json j = json::parse(r.out);
    CHECK(j["d"] == 6);
    CHECK(j["balance"] == 0);
    CHECK(j["perfectlyPunctured"] == true);
    CHECK(j["tileable"] == true);
    CHECK(j["punctures"].size() == 3);
}

TEST_CASE("ascii render counts triangles") {
    auto r = run("render --ideal \"x*y,y^2,z^3\" --d 4 --ascii");
    REQUIRE(r.exitCode == 0);
    TriRegion T = buildRegion(parseIdeal("x*y,y^2,z^3"), 4);
    size_t ups = 0, downs = 0, holes = 0;
    for (char c : r.out) {
        ups += c == '^';
        downs += c == 'v';
        holes += c == '.';
    }
    CHECK(ups == T.up().size());
    CHECK(downs == T.down().size());
    CHECK(holes == 16 - ups - downs);  // removed triangles of the side-4 ambient
}

TEST_CASE("svg render counts elements") {
    std::string path = "loz_test_render.svg";
    auto r = run("render --ideal \"x^3,y^4,z^5\" --svg " + path + " --tiling");
    REQUIRE(r.exitCode == 0);
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string svg;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) svg.append(buf, n);
    fclose(f);
    remove(path.c_str());
    auto count = [&](const std::string& needle) {
        size_t c = 0, pos = 0;
        while ((pos = svg.find(needle, pos)) != std::string::npos) ++c, pos += needle.size();
        return c;
    };
    TriRegion T = buildRegion(parseIdeal("x^3,y^4,z^5"), 6);
    CHECK(count("class=\"up\"") == T.up().size());
    CHECK(count("class=\"down\"") == T.down().size());
    CHECK(count("class=\"hole\"") == 36 - T.up().size() - T.down().size());
    CHECK(count("class=\"lozenge\"") == T.up().size());  // one lozenge per present triangle pair
}

TEST_CASE("tilings, primes, semistable, mirror, togliatti verbs") {
    CHECK(json::parse(run("tilings --ideal \"x^2,y^2,z^2\"").out)["count"] == 2);

    json p = json::parse(run("primes --ci 3,4,5").out);
    CHECK(p["failingPrimes"] == json::array({2, 5}));
    CHECK(p["criticalValue"] == 10);
    CHECK(json::parse(run("primes --ideal \"x^2,y^2,z^2\"").out)["frobeniusPrimes"] ==
          json::array({2}));

    json s = json::parse(run("semistable --ideal \"x^2,y^2,z^2,x*y,x*z\" --d 2").out);
    CHECK(s["semistable"] == true);
    CHECK(s["stable"] == false);

    json m = json::parse(run("mirror --params \"b=1; axials=(3,2),(0,1)\"").out);
    CHECK(m["per"] == 8);
    CHECK(m["absDet"] == 8);

    json t = json::parse(run("togliatti --ideal \"x^3,y^3,z^3,x*y*z\"").out);
    CHECK(t["delta"] == 1);
    CHECK(t["isTogliatti"] == true);

    json f = json::parse(run("family --base \"x^3,y^3,z^3,x*y*z\" --d 13 --j 2 --k 0").out);
    CHECK(f["count"] == 14);
    CHECK(f["delta"] == 2);

    json u = json::parse(run("reduce-unit --ideal \"x^7,y^7,z^7,x^2*y^2*z\" --d 7").out);
    CHECK(u["original"]["d"] == 7);
    CHECK(u["reduced"]["up"].size() >= u["original"]["up"].size());
}

TEST_CASE("experiments are labelled as conjecture data") {
    auto z = run("experiment zero-mirror --max 4 --seed 11");
    CHECK(z.exitCode == 0);
    CHECK(json::parse(z.out)["note"] == "conjecture — not asserted");
    auto t = run("experiment type-two-char --max 4 --seed 11");
    CHECK(t.exitCode == 0);
    CHECK(json::parse(t.out)["note"] == "conjecture — not asserted");
    // seeded runs are reproducible
    CHECK(run("experiment zero-mirror --max 4 --seed 11").out == z.out);
}

TEST_CASE("exit codes") {
    CHECK(run("det --ideal \"x^3,y^4\"").exitCode == 2);        // no canonical d
    CHECK(run("det --ideal \"x^3,y^4,z^5\" --bogus").exitCode == 2);  // unknown flag
    CHECK(run("bogus-verb").exitCode == 2);
    CHECK(run("tilings --ideal \"x^3,y^4,z^5\" --cap 5").exitCode == 3);
    CHECK(run("wlp --ideal \"x^2,y^2\"").exitCode == 2);  // not Artinian
    CHECK(run("--help").exitCode == 0);
}

TEST_CASE("cap default comes from the environment") {
    RunResult r;
    std::string cmd = "LOZ_CAP=5 '" + lozPath + "' tilings --ideal \"x^3,y^4,z^5\" 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    int st = pclose(p);
    CHECK((WIFEXITED(st) ? WEXITSTATUS(st) : -1) == 3);
}
