#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = normcurve::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

void assert_no_floats(const json& j) {
    if (j.is_number_float()) FAIL("floating point value in JSON output: " << j.dump());
    if (j.is_object())
        for (const auto& [k, v] : j.items()) assert_no_floats(v);
    if (j.is_array())
        for (const auto& v : j) assert_no_floats(v);
}

}  // namespace

TEST_CASE("construct: auto picks the trinomial for a trinomial-shaped f") {
    Result r = run({"construct", "--field", "0,2", "--f", "t^3+6*t+t+1"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["method"] == "trinomial");
    CHECK(j["certificate"]["residual_zero"] == true);
    CHECK(j["curve"]["t"]["num"].size() > 0);
    assert_no_floats(j);

    // the canonical explicit call matches
    Result r2 = run({"construct", "--field", "0,2", "--f", "t^3+6*t+t+1", "--method",
                     "trinomial", "--m", "1"});
    CHECK(r2.code == 0);
    CHECK(r2.out == r.out);
}

TEST_CASE("construct: domain errors exit with code 2") {
    Result red = run({"construct", "--field", "0,8", "--f", "t^2+1", "--point", "1,0,0,0"});
    CHECK(red.code == 2);
    CHECK(json::parse(red.err)["error"]["code"] == "Reducible");

    Result exc = run({"construct", "--field", "0,2", "--f", "t^6+t^3+1", "--point",
                      "1,0,0,inf-normalized"});
    CHECK(exc.code == 2);
    CHECK(json::parse(exc.err)["error"]["code"] == "ExceptionalForm");
}

TEST_CASE("construct: degree-5 degenerate family is rejected with ConditionFailed") {
    // c1=6, c3=0 forces (c2,c4,c5) = (15,-45,-54)
    Result r = run({"construct", "--field", "0,2", "--f",
                    "1+6*t+15*t^2-45*t^4-54*t^5", "--point", "1,0,0,0", "--method", "pure6"});
    CHECK(r.code == 2);
    CHECK(json::parse(r.err)["error"]["code"] == "ConditionFailed");
}

TEST_CASE("construct: parse errors exit with code 3 and carry the offset") {
    Result r = run({"construct", "--field", "0,2", "--f", "t^^2"});
    CHECK(r.code == 3);
    json e = json::parse(r.err);
    CHECK(e["error"]["code"] == "SyntaxError");
    CHECK(e["error"]["offset"] == 2);

    Result bad_flag = run({"construct", "--no-such-flag"});
    CHECK(bad_flag.code == 3);
}

TEST_CASE("sample: deterministic, exact, re-verified") {
    std::vector<std::string> args{"sample",  "--field", "0,2",    "--f", "t^6+6*t^2+t+1",
                                  "--count", "3",       "--seed", "7"};
    Result a = run(args);
    Result b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    json ja = json::parse(a.out);
    REQUIRE(ja.is_array());
    REQUIRE(ja.size() == 3);
    for (const auto& rec : ja) {
        CHECK(rec["u"].is_string());
        CHECK(rec["point"].size() == 4);
        CHECK(rec["norm_value"].is_string());
    }
    assert_no_floats(ja);

    Result empty = run({"sample", "--field", "0,2", "--f", "t^6+6*t^2+t+1", "--count", "0"});
    CHECK(empty.code == 0);
    CHECK(json::parse(empty.out).is_array());
    CHECK(json::parse(empty.out).empty());
}

TEST_CASE("construct -> file -> verify and sample --in round trip") {
    Result c = run({"construct", "--field", "1,1", "--f", "t^6+t^4+t+1"});
    REQUIRE(c.code == 0);
    std::string path = "cli_roundtrip_tmp.json";
    {
        std::ofstream f(path);
        f << c.out;
    }
    Result v = run({"verify", "--in", path});
    CHECK(v.code == 0);
    CHECK(json::parse(v.out)["residual_zero"] == true);

    Result s = run({"sample", "--in", path, "--count", "2", "--seed", "5"});
    CHECK(s.code == 0);
    CHECK(json::parse(s.out).size() == 2);
    std::remove(path.c_str());
}

TEST_CASE("instance file with inline override") {
    std::string path = "cli_instance_tmp.json";
    {
        std::ofstream f(path);
        f << R"({"field": {"a": "0", "b": "2"}, "f": "t^4+9", "point": ["1","1","1","0"]})";
    }
    Result r = run({"construct", "--file", path});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["method"] == "deg4");
    CHECK(j["normalized"]["c"][3] == "1/9");
    // inline --f overrides the file's polynomial
    Result o = run({"construct", "--file", path, "--f", "t^6+6*t^2+t+1"});
    REQUIRE(o.code == 0);
    CHECK(json::parse(o.out)["method"] == "trinomial");
    std::remove(path.c_str());
}

TEST_CASE("norm subcommand") {
    Result n = run({"norm", "--field", "0,2", "--elem", "1,1,1", "--format", "text"});
    CHECK(n.code == 0);
    CHECK(n.out == "9\n");
    Result i = run({"norm", "--field", "0,2", "--elem", "1,1,1", "--inv", "--format", "text"});
    CHECK(i.out == "1/3,-1/3,0\n");
    Result z = run({"norm", "--field", "0,2", "--elem", "0,0,0", "--inv"});
    CHECK(z.code == 2);
    CHECK(json::parse(z.err)["error"]["code"] == "ZeroElement");
    Result j = run({"norm", "--field", "0,2", "--elem", "1,1,1"});
    CHECK(json::parse(j.out)["norm"] == "9");
}

TEST_CASE("factor subcommand") {
    Result r = run({"factor", "--c1", "6", "--c3", "0"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["identity_check"] == "ok");
    CHECK(j["forced"]["c2"] == "15");
    CHECK(j["forced"]["c4"] == "-45");
    CHECK(j["forced"]["c5"] == "-54");
    assert_no_floats(j);
}

TEST_CASE("construct JSON carries curve, report, certificate and no floats") {
    Result r = run({"construct", "--field", "0,2", "--f", "t^2+1", "--point", "1,0,0,0"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["method"] == "pure6");
    CHECK(j.contains("curve"));
    CHECK(j.contains("report"));
    CHECK(j["report"]["residual"].contains("A5"));
    CHECK(j["report"]["residual"].contains("A6"));
    CHECK(j["certificate"]["residual_zero"] == true);
    CHECK(j["curve"]["back_transform"].is_array());
    assert_no_floats(j);

    Result text = run({"construct", "--field", "0,2", "--f", "t^2+1", "--point", "1,0,0,0",
                       "--format", "text"});
    CHECK(text.code == 0);
    CHECK(text.out.find("certificate: ok") != std::string::npos);
}
