#include <doctest.h>

#include "cartan/poly_parser.hpp"
#include "cartan/relations.hpp"
#include "cartan/serialize.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace cartan;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(CARTAN_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("cartan_cli_" + name)).string();
}

}  // namespace

TEST_CASE("g2 degree 2 relations, form level and modulo exact forms") {
    auto r = run("relations g2 --rep graded-tangent --degree 2 --json");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"relations\":[]}\n");
    auto c = run("relations g2 --rep graded-tangent --degree 2 --json --modulo-exact");
    CHECK(c.code == 0);
    CHECK(c.out == "{\"relations\":[{\"monomials\":[\"c2\",\"c1^2\"],\"coefficients\":[\"25\",\"-11\"]}]}\n");
}

TEST_CASE("relations output equals the library result") {
    auto b = projective(3);
    Json arr = Json::array();
    for (const auto& rel : find_relations(b.model, b.rep("tangent"), 3)) arr.push_back(to_json(rel));
    auto r = run("relations projective --n 3 --rep tangent --degree 3 --json");
    CHECK(r.out == Json{{"relations", arr}}.dump() + "\n");
    auto sub = run("relations projective --n 3 --degree 3 --monomials c3,c1^3 --json");
    CHECK(sub.out == "{\"relations\":[{\"monomials\":[\"c3\",\"c1^3\"],\"coefficients\":[\"16\",\"-1\"]}]}\n");
}

TEST_CASE("chern report for projective(2)") {
    auto r = run("chern projective --n 2 --rep tangent --max 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("c1 = -3*tau w1^wb1 - 3*tau w2^wb2") != std::string::npos);
    CHECK(r.out.find("relation (degree 2): 3*c2 - c1^2 = 0") != std::string::npos);
    auto j = Json::parse(run("chern projective --n 2 --rep tangent --max 2 --json").out);
    auto b = projective(2);
    auto c = chern_forms(b.model, b.rep("tangent"), 2);
    CHECK(j["chern"][1]["form"] == to_json(c[1], b.model.names()));
    CHECK(j["relations"][1]["relations"][0]["coefficients"] == Json::array({"3", "-1"}));
}

TEST_CASE("g2 primitive from the command line") {
    auto r = run("primitive g2 --target \"5^5*c5-3*c1^5\" --json --expect-exact");
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["grade"] == "(4,1,4)");
    CHECK(j["primitive"].is_array());
    CHECK(j["target_closed"] == true);
    auto b = g2_flag();
    Form target = cs_class(b.model, b.rep("graded-tangent"), parse_poly("5^5*c5-3*c1^5"));
    CHECK(j["target"] == to_json(target, b.model.names()));
}

TEST_CASE("not exact gives exit 1 only with --expect-exact") {
    auto a = run("primitive projective --n 1 --of chern --target c1 --min-minus 1 --no-invariant --json");
    CHECK(a.code == 0);
    CHECK(Json::parse(a.out)["primitive"] == "not_exact");
    auto b = run("primitive projective --n 1 --of chern --target c1 --min-minus 1 --expect-exact");
    CHECK(b.code == 1);
}

TEST_CASE("usage and schema errors exit 2") {
    CHECK(run("").code == 2);
    CHECK(run("bogus").code == 2);
    CHECK(run("relations g2 --degree").code == 2);
    CHECK(run("chern projective").code == 2);
    CHECK(run("cs g2 --poly 'c1^'").code == 2);
    CHECK(run("chern g2 --rep nope").code == 2);
    std::string path = temp_path("bad.json");
    std::ofstream(path) << R"({"dims":[1,1,1],"names":["f","h","e"],"brackets":[[0,1,[[99,"1"]]]],"reps":{}})";
    CHECK(run("model validate " + path).code == 2);
    CHECK(run("--help").code == 0);
}

TEST_CASE("model build output re-parses and validates") {
    std::string path = temp_path("g2.json");
    auto r = run("model build g2 -o " + path);
    CHECK(r.code == 0);
    auto v = run("model validate " + path + " --json");
    CHECK(v.code == 0);
    CHECK(Json::parse(v.out)["valid"] == true);
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    CHECK(text == dump_model(g2_flag()));
    CHECK(run("model build projective --n 1").out == dump_model(projective(1)));
}

TEST_CASE("corrupted model fails validation with exit 1") {
    Json j = model_to_json(sl2_model());
    // [e, f] = e instead of h
    for (auto& b : j["brackets"])
        if (b[0] == 0 && b[1] == 2) b[2] = Json::array({Json::array({2, "1"})});
    std::string path = temp_path("corrupt.json");
    std::ofstream(path) << j.dump();
    auto r = run("model validate " + path + " --json");
    CHECK(r.code == 1);
    auto out = Json::parse(r.out);
    CHECK(out["valid"] == false);
    CHECK_FALSE(out["model"].empty());
}

TEST_CASE("structure report") {
    auto g = run("report g2");
    CHECK(g.out.find("dS w1 = 0\n") != std::string::npos);
    CHECK(g.out.find("dS w2 = 0\n") != std::string::npos);
    CHECK(g.out.find("dS v7 = -2 v5^v6\n") != std::string::npos);
    auto s = Json::parse(run("report split --p 1 --q 1 --json").out);
    for (const auto& row : s["generators"]) CHECK(row["part"] != "+");
    CHECK(s["generators"].size() == 4);
}

TEST_CASE("cs, audit and conformal coefficients") {
    CHECK(run("cs projective --n 1 --poly c1").out == "T[tr1] = tau w1_1\n");
    auto full = Json::parse(run("cs projective --n 2 --poly ch2 --full --json").out);
    auto b = projective(2);
    CHECK(full["chern_simons"] == to_json(chern_simons_form(b.model, b.rep("tangent"), InvPoly::character(2)), b.model.names()));
    auto a = Json::parse(run("audit projective --n 2 --json").out);
    CHECK(a["audit"].size() == 3);
    CHECK(run("audit projective --n 2 --expect-exact").code == 0);
    CHECK(run("conformal-coeffs 4 --json").out == "{\"n\":4,\"coefficients\":[\"4\",\"7\",\"6\",\"3\"]}\n");
    CHECK(run("conformal-coeffs 3").out == "3 4 2\n");
}

TEST_CASE("json output is deterministic across runs and thread counts") {
    auto a = run("chern g2 --json");
    auto b = run("chern g2 --json");
    CHECK(a.out == b.out);
    auto one = run("relations g2 --degree 4 --modulo-exact --json");
    setenv("CARTAN_INVARIANTS_THREADS", "1", 1);
    auto serial = run("relations g2 --degree 4 --modulo-exact --json");
    unsetenv("CARTAN_INVARIANTS_THREADS");
    CHECK(one.out == serial.out);
}
