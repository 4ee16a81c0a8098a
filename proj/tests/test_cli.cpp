#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limroot/errors.hpp>
#include <limroot/json_io.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

using namespace limroot;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the CLI binary from the build directory (where ctest executes).
RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = "./limroot " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), f)) > 0) r.out.append(buf, n);
    int status = pclose(f);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const char* kSlTower = R"({"family":"SL","field":"R","initial":2,"r":[1],"t":[1],"depth":3})";
const char* kSuTower =
    R"({"family":"SU","field":"C","initial":[4,1],"r":[1],"t1":[2],"t2":[1],"depth":3})";

}  // namespace

TEST_CASE("rational JSON round trip") {
    CHECK(rat_from_json(Json(3)) == Rat(3));
    CHECK(rat_from_json(Json("-5/2")) == Rat(-5, 2));
    CHECK(rat_json(Rat(-5, 2)) == Json("-5/2"));
    CHECK(rat_json(Rat(4)) == Json("4"));
    CHECK(rat_from_json(rat_json(Rat(22, 7))) == Rat(22, 7));
    CHECK_THROWS_AS(rat_from_json(Json("x")), InputError);
    CHECK_THROWS_AS(rat_from_json(Json("1/0")), InputError);
    CHECK_THROWS_AS(rat_from_json(Json(1.5)), InputError);
}

TEST_CASE("real form descriptor parsing") {
    auto d = real_form_from_json(parse_json(R"({"family":"SU","field":"C","params":[2,1]})"));
    CHECK(d.family == Family::SU);
    CHECK(d.p == 2);
    CHECK(d.q == 1);
    auto back = real_form_from_json(real_form_json(d));
    CHECK(back.family == d.family);
    CHECK(back.p == d.p);
    CHECK(back.q == d.q);

    CHECK_THROWS_AS(real_form_from_json(parse_json(R"({"family":"SU","field":"C"})")), InputError);
    CHECK_THROWS_AS(real_form_from_json(parse_json(R"({"family":"ZZ","field":"C","params":[2]})")),
                    InputError);
    CHECK_THROWS_AS(parse_json("{not json"), InputError);
}

TEST_CASE("diagonal system descriptor round trip") {
    auto d = diagonal_system_from_json(parse_json(kSuTower));
    CHECK(d.family == Family::SU);
    CHECK(d.initial == std::vector<long>{4, 1});
    CHECK(d.depth == 3);
    auto back = diagonal_system_from_json(diagonal_system_json(d));
    CHECK(back.family == d.family);
    CHECK(back.field == d.field);
    CHECK(back.initial == d.initial);
    CHECK(back.r == d.r);
    CHECK(back.t1 == d.t1);
    CHECK(back.t2 == d.t2);
    CHECK(back.depth == d.depth);

    // missing required keys, malformed sequences, negative depth
    CHECK_THROWS_AS(diagonal_system_from_json(parse_json(R"({"family":"SL","field":"R"})")),
                    InputError);
    CHECK_THROWS_AS(diagonal_system_from_json(parse_json(
                        R"({"family":"SL","field":"R","initial":2,"r":"x","depth":2})")),
                    InputError);
    CHECK_THROWS_AS(diagonal_system_from_json(parse_json(
                        R"({"family":"SL","field":"R","initial":2,"r":[1],"t":[1],"depth":-1})")),
                    InputError);
    // family rules surface as invariant violations
    CHECK_THROWS_AS(diagonal_system_from_json(parse_json(
                        R"({"family":"SL","field":"R","initial":2,"r":[0],"t":[1],"depth":2})")),
                    InvariantViolation);
}

TEST_CASE("weight spec round trip") {
    auto w = weight_spec_from_json(parse_json(R"({"coords":{"1":-2,"3":"1/2"},"psi":[0,2]})"));
    CHECK(w.coords.at(1) == Rat(-2));
    CHECK(w.coords.at(3) == Rat(1, 2));
    CHECK(w.psi == std::vector<std::size_t>{0, 2});
    auto back = weight_spec_from_json(weight_spec_json(w));
    CHECK(back.coords == w.coords);
    CHECK(back.psi == w.psi);
    CHECK_THROWS_AS(weight_spec_from_json(parse_json(R"({"coords":{"a":1}})")), InputError);
    CHECK_THROWS_AS(weight_spec_from_json(parse_json(R"({"psi":[-1]})")), InputError);
}

TEST_CASE("emitted reports re-parse as JSON") {
    auto desc = diagonal_system_from_json(parse_json(kSuTower));
    auto verdict_doc = system_verdict_json(system_verdict(desc));
    auto reparsed = parse_json(verdict_doc.dump());
    CHECK(reparsed == verdict_doc);

    auto nu = weight_spec_from_json(parse_json(R"({"coords":{"1":-2,"2":1,"3":1}})"));
    auto report_doc = degree_report_json(finiteness_verdict(nu, desc));
    CHECK(parse_json(report_doc.dump()) == report_doc);
    CHECK(report_doc["verdict"] == "classically cohomologically finite");
    CHECK(report_doc["q"] == 2);
}

TEST_CASE("cli: computed results exit 0, including false verdicts") {
    auto roots = run(std::string("roots '") +
                     R"({"family":"SU","field":"C","params":[2,1]})" + "'");
    CHECK(roots.code == 0);
    CHECK(roots.out.find("BC_1") != std::string::npos);
    CHECK(roots.out.find("(2) : 1") != std::string::npos);

    auto bad = run(std::string("dirsys '") +
                   R"({"family":"SL","field":"R","initial":2,"r":[2],"t":[0],"depth":3})" +
                   "' --format json");
    CHECK(bad.code == 0);
    auto doc = parse_json(bad.out);
    CHECK(doc["verdict"]["weakly_parabolic"]["value"] == false);
    CHECK(doc["verdict"]["classical_type"]["value"] == false);

    auto cls = run(std::string("classify '") + kSlTower + "' --format json");
    CHECK(cls.code == 0);
    CHECK(parse_json(cls.out)["case"] == "a");
}

TEST_CASE("cli: error exit codes") {
    CHECK(run("roots '{\"family\":\"ZZ\",\"field\":\"C\",\"params\":[2]}'").code == 1);
    CHECK(run("roots 'not-a-file.json'").code == 1);
    CHECK(run("roots '{malformed'").code == 1);
    // a step with r + s = 0 violates the direct-system rules
    auto viol = run(std::string("dirsys '") +
                    R"({"family":"SL","field":"R","initial":2,"r":[0],"t":[1],"depth":2})" + "'");
    CHECK(viol.code == 2);
}

TEST_CASE("cli: deterministic byte-identical output") {
    std::vector<std::string> cmds = {
        std::string("roots '") + R"({"family":"Sp","field":"H","params":[3,2]})" +
            "' --format json",
        std::string("satake '") + R"({"family":"SU","field":"C","params":[3,2]})" + "' --dot",
        std::string("dirsys '") + kSuTower + "' --format json",
        std::string("cohdeg '") + kSuTower +
            "' --weight '{\"coords\":{\"1\":-2,\"2\":1,\"3\":1}}' --format json",
    };
    for (const auto& cmd : cmds) {
        auto a = run(cmd);
        auto b = run(cmd);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("cli: satake deletion and depth override") {
    auto del = run(std::string("satake '") + R"({"family":"SL","field":"R","params":[4]})" +
                   "' --delete 2 --format json");
    CHECK(del.code == 0);
    auto doc = parse_json(del.out);
    CHECK(doc["diagram"]["vertices"].size() == 2);

    auto deep = run(std::string("cohdeg '") + kSuTower +
                    "' --weight '{\"coords\":{}}' --depth 5 --format json");
    CHECK(deep.code == 0);
    CHECK(parse_json(deep.out)["report"]["levels"].size() == 6);
}
