#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <homcalc/cli.hpp>
#include <homcalc/errors.hpp>
#include <homcalc/fixtures.hpp>
#include <homcalc/io.hpp>

#include "gen.hpp"

using namespace homcalc;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string &path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string last_line(const std::string &text)
{
    std::string t = text;
    while (!t.empty() && t.back() == '\n') {
        t.pop_back();
    }
    const auto pos = t.rfind('\n');
    return pos == std::string::npos ? t : t.substr(pos + 1);
}

std::string temp_path(const char *name)
{
    return std::string("homcalc_test_") + name + ".json";
}

} // namespace

TEST_CASE("algebroid files round-trip through json")
{
    for (const auto &name : builtin_algebroid_names()) {
        const HomAlgebroid ab = builtin_algebroid(name);
        CHECK(algebroid_from_json(algebroid_to_json(ab)) == ab);
    }
    const HomAlgebroid fx3 = algebroid_from_json(read_json_file(gen::data_path("twisted-line.json")));
    CHECK(fx3 == twisted_line());
    CHECK(dump_json(algebroid_to_json(fx3)) == slurp(gen::data_path("twisted-line.json")));
}

TEST_CASE("instance kinds are detected")
{
    CHECK(detect_kind(read_json_file(gen::data_path("twisted-line.json"))) == InstanceKind::algebroid);
    CHECK(detect_kind(read_json_file(gen::data_path("aff2-twisted.json"))) == InstanceKind::homlie);
    CHECK(detect_kind(read_json_file(gen::data_path("aff2-adjoint.json")))
          == InstanceKind::representation);
    const Representation r = representation_from_json(read_json_file(gen::data_path("aff2-adjoint.json")));
    CHECK(representation_from_json(representation_to_json(r)).rho() == r.rho());
}

TEST_CASE("malformed input is a positioned parse error")
{
    try {
        algebroid_from_json(read_json_file(gen::data_path("malformed-polynomial.json")));
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(std::string(e.what()).find("$.anchor[0][0]") != std::string::npos);
        CHECK(e.position() == 1);
    }
    CHECK_THROWS_AS(parse_json_text("{\"rank\": "), ParseError);
    CHECK_THROWS_AS(algebroid_from_json(Json::parse(R"({"base": {"vars": ["x"], "phi": ["-x"]},
        "rank": 1, "alpha": [["1"]], "anchor": [["1"]], "bracket": [[["0"]]], "variant": "C"})")),
                    ParseError);
    CHECK_THROWS_AS(algebroid_from_json(Json::parse(R"({"base": {"vars": ["x"], "phi": ["-x"]},
        "rank": 2, "alpha": [["1"]], "anchor": [["1"]], "bracket": [[["0"]]], "variant": "A"})")),
                    ParseError);
}

TEST_CASE("section and cochain literals")
{
    const HomAlgebroid aff = twisted_affine();
    const auto secs = parse_sections("[e1, x*e1 - (x^2 + 1)*e2, 0]", aff);
    REQUIRE(secs.size() == 3);
    CHECK(secs[0] == aff.basis(0));
    CHECK(secs[1].to_string() == "x*e1 - (x^2 + 1)*e2");
    CHECK(secs[2].is_zero());
    CHECK_THROWS_AS(parse_sections("[e1*e2]", aff), ParseError);
    CHECK_THROWS_AS(parse_sections("[e3]", aff), ParseError);

    const Cochain c = cochain_from_json(
        Json::parse(R"({"kind": "basis", "k": 2, "twist": 1, "components": {"2,1": "x"}})"), aff.base());
    CHECK(c.degree() == 2);
    CHECK(c.node().components.at({0, 1}) == aff.base().parse("-x"));
    CHECK(cochain_from_json(Json::parse(R"({"kind": "function", "poly": "x^2"})"), aff.base()).degree() == 0);
    CHECK_THROWS_AS(cochain_from_json(Json::parse(R"({"kind": "basis", "k": 1, "twist": 2,
        "components": {"1": "1"}})"), aff.base()), Error);
}

TEST_CASE("check: exit codes")
{
    CHECK(run({"check", "--input", gen::data_path("twisted-line.json")}).code == 0);
    CHECK(run({"check", "--builtin", "tangent-line"}).code == 0);
    CHECK(run({"check", "--input", "builtin:heisenberg"}).code == 0);
    CHECK(run({"check", "--input", gen::data_path("aff2-adjoint.json")}).code == 0);
    CHECK(run({"check", "--input", gen::data_path("malformed-polynomial.json")}).code == 2);
    CHECK(run({"check", "--input", "does-not-exist.json"}).code == 2);
    CHECK(run({"check"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);

    const Run bad = run({"check", "--builtin", "twisted-line", "--perturb", "bracket"});
    CHECK(bad.code == 1);
    CHECK(last_line(bad.out) == "first failure: (2) antisymmetry");
}

TEST_CASE("check: twisted line with the variant flipped to B")
{
    // Accepted in this model; see the algebroid suite for the hand expansion.
    const Run r = run({"check", "--input", gen::data_path("twisted-line-variant-b.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("3) hom_leibniz") != std::string::npos);
}

TEST_CASE("differential examples")
{
    const std::string fx3 = gen::data_path("twisted-line.json");
    CHECK(last_line(run({"differential", "--input", fx3, "--function", "x", "--s", "0", "--args", "[e1]"}).out) == "1");
    CHECK(last_line(run({"differential", "--input", fx3, "--function", "x", "--s", "1", "--args", "[e1]"}).out) == "-1");
    CHECK(last_line(run({"differential", "--builtin", "tangent-line", "--function", "x^3", "--s", "0",
                         "--args", "[e1]"}).out)
          == "3*x^2");
    CHECK(last_line(run({"differential", "--input", fx3, "--cochain",
                         R"({"kind": "basis", "k": 1, "twist": 0, "components": {"1": "1"}})",
                         "--s", "0", "--args", "[x*e1, e1]"}).out)
          == "0");
    CHECK(run({"differential", "--input", fx3, "--function", "x", "--args", "[e1, e1]"}).code == 2);
    CHECK(run({"differential", "--input", fx3, "--function", "3x^", "--args", "[e1]"}).code == 2);
}

TEST_CASE("reconstruct emits the input file")
{
    const std::string out = temp_path("reconstruct");
    const std::string in = gen::data_path("twisted-line.json");
    CHECK(run({"reconstruct", "--input", in, "--out", out}).code == 0);
    CHECK(slurp(out) == slurp(in));
    std::remove(out.c_str());
}

TEST_CASE("convert writes the variant-B anchor and refuses singular alpha")
{
    const std::string out = temp_path("convert");
    CHECK(run({"convert", "--input", gen::data_path("twisted-line.json"), "--target", "B", "--out", out})
              .code
          == 0);
    const Json j = read_json_file(out);
    CHECK(j.at("variant") == "B");
    CHECK(j.at("anchor") == Json::parse(R"([["-1"]])"));
    std::remove(out.c_str());

    const Run refused = run({"convert", "--input", gen::data_path("singular-alpha.json"), "--target", "B"});
    CHECK(refused.code == 1);
    CHECK(last_line(refused.out) == "first failure: alpha_invertible");
}

TEST_CASE("proptest examples")
{
    CHECK(run({"proptest", "--input", "builtin:twisted-line", "--seed", "7"}).code == 0);
    CHECK(run({"proptest", "--input", "builtin:tangent-line", "--seed", "7"}).code == 0);
    CHECK(run({"proptest", "--builtin", "aff2"}).code == 0);
    const Run bad = run({"proptest", "--input", "builtin:twisted-line", "--perturb", "bracket"});
    CHECK(bad.code == 1);
    CHECK(last_line(bad.out).rfind("first failure: ", 0) == 0);
}

TEST_CASE("json reports are byte-identical across runs")
{
    const std::vector<std::string> check = {"check", "--input", gen::data_path("twisted-line.json"),
                                            "--emit", "json", "--seed", "42"};
    const Run a = run(check), b = run(check);
    CHECK(a.out == b.out);
    const Json j = Json::parse(a.out);
    CHECK(j.at("config").at("seed") == 42);
    CHECK(j.at("summary").at("failed") == 0);
    for (const auto &item : j.at("checks")) {
        CHECK(item.at("status") == "pass");
    }

    const std::vector<std::string> prop = {"proptest", "--builtin", "twisted-line", "--emit", "json",
                                           "--trials", "3"};
    CHECK(run(prop).out == run(prop).out);

    const Run other = run({"check", "--input", gen::data_path("twisted-line.json"), "--emit", "json",
                           "--seed", "43"});
    CHECK(other.out != a.out);
}
