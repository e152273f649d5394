#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = k4::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: dimension queries") {
    auto r = run({"dim", "--object", "R.phi", "--degree", "5,0,0,0"});
    CHECK(r.code == 0);
    CHECK(r.out == "11\n");
    CHECK(run({"dim", "--object", "EK4.t-form", "--degree", "0"}).out == "1\n");
    CHECK(run({"dim", "--object", "EK4.euler", "--degree", "A0+A1+B"}).out == "4\n");
}

TEST_CASE("cli: CSV box output is sorted and has a header") {
    auto r = run({"--csv", "dim", "--object", "EK4.t-form", "--box", "1"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "c1,a0,a1,b,dim");
    std::vector<std::string> rows;
    while (std::getline(in, line)) rows.push_back(line);
    CHECK(rows.size() == 81);
    CHECK(rows.front().rfind("-1,-1,-1,-1,", 0) == 0);
    CHECK(rows.back() == "1,1,1,1,5");
}

TEST_CASE("cli: JSON output is deterministic and parses") {
    std::vector<std::string> args{"--json", "audit-les", "--box", "1"};
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    json j = json::parse(a.out);
    CHECK(j["rows"].size() == 81);
    auto s = run({"--json", "audit-les", "--box", "1", "--serial"});
    CHECK(json::parse(s.out)["rows"] == j["rows"]);
}

TEST_CASE("cli: basis and points") {
    auto b = run({"basis", "--object", "CokerDu", "--degree", "2,-2,0,0"});
    CHECK(b.code == 0);
    CHECK(b.out.find("Sigma^-1*a_a0^-1*u_a0^-1") != std::string::npos);
    auto p = run({"--json", "points"});
    CHECK(p.code == 0);
    CHECK(json::parse(p.out)["points"].size() == 4);
}

TEST_CASE("cli: Steenrod operations") {
    auto r = run({"steenrod", "--op", "Sq(0,1)", "--poly", "t"});
    CHECK(r.code == 0);
    CHECK(r.out == "t^4\n");
    auto c = run({"steenrod", "--op", "Sq^1", "--poly", "c^2", "--names", "c"});
    CHECK(c.out == "0\n");
}

TEST_CASE("cli: conjugation checks") {
    auto r = run({"--json", "conjcheck", "--model", "hp", "--n", "3", "--multiplicativity", "--purity"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["purity"]["cells"] == json::array({0, 1, 2, 3}));
    auto one = run({"conjcheck", "--model", "hp", "--n", "1", "--class", "y"});
    CHECK(one.code == 0);
    CHECK(one.out.find("c*t^2*t'") != std::string::npos);
}

TEST_CASE("cli: maximality") {
    auto r = run({"--json", "maximality", "--betti-x", "1,0,0,0,1", "--betti-fixed", "1,1"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["smith_thom"]["status"] == "maximal");
    auto v = run({"maximality", "--betti-x", "1", "--betti-fixed", "1,1"});
    CHECK(v.code == 1);
}

TEST_CASE("cli: errors exit 2 with a structured message") {
    auto u = run({"dim", "--object", "S0", "--degree", "0"});
    CHECK(u.code == 2);
    CHECK_FALSE(u.err.empty());
    auto j = run({"--json", "dim", "--object", "S0", "--degree", "0"});
    CHECK(j.code == 2);
    json e = json::parse(j.out.empty() ? j.err : j.out);
    CHECK(e.contains("error"));
    CHECK(e.contains("message"));
    CHECK(run({"dim", "--object", "R.phi", "--degree", "1,2"}).code == 2);
    CHECK(run({"--json", "--csv", "points"}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
}
