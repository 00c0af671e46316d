#include "support.hpp"

#include "bezout/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = bezout::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / ("bezout_cli_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST_CASE("classify worked values")
{
    const Outcome six = invoke({"classify", "Z", "6", "--json"});
    REQUIRE(six.code == 0);
    const auto j6 = six.json();
    CHECK(j6["schema"] == 1);
    CHECK(j6["atom"] == false);
    CHECK(j6["inpseudo_irreducible"] == true);
    CHECK(j6["pseudo_irreducible"] == false);

    const auto j4 = invoke({"classify", "Z", "4", "--json"}).json();
    CHECK(j4["pseudo_irreducible"] == true);
    CHECK(j4["quotient_indecomposable"] == true);

    const Outcome split = invoke({"classify", "Z", "360", "--b", "14", "--json"});
    REQUIRE(split.code == 0);
    const auto adequate = split.json()["witnesses"]["adequate"];
    CHECK(adequate["r"] == 45);
    CHECK(adequate["s"] == 8);
    CHECK(adequate["violations"].empty());

    const auto via_flag = invoke({"classify", "6", "--ring", "Z", "--json"}).json();
    CHECK(via_flag["inpseudo_irreducible"] == true);
}

TEST_CASE("classify over polynomial rings and oversize quotients")
{
    const auto j = invoke({"classify", "F2[x]", "[1,1,1]", "--json"}).json();
    CHECK(j["atom"] == true);
    CHECK(j["quotient_field"] == true);

    const Outcome big = invoke({"classify", "Z", "100003", "--json", "--quadratic-cap", "100"});
    REQUIRE(big.code == 0);
    CHECK_FALSE(big.json()["skipped"].empty());
}

TEST_CASE("classify rejects bad input")
{
    CHECK(invoke({"classify", "Z", "1"}).code == 1);
    CHECK(invoke({"classify", "Z", "0"}).code == 1);
    CHECK(invoke({"classify", "W", "5"}).code == 1);
    CHECK(invoke({"classify", "Z", "x"}).code == 1);
    CHECK(invoke({"classify"}).code == 1);
}

TEST_CASE("reduce from a file")
{
    const std::string path = temp_file("thm21.json", R"({"ring": "Z", "matrix": [[2, 0], [1, 3]]})");
    const Outcome thm = invoke({"reduce", path, "--method", "thm21", "--json"});
    REQUIRE(thm.code == 0);
    const auto j = thm.json();
    CHECK(j["diagonal"] == nlohmann::json::parse("[1, 6]"));
    CHECK(j["verified"] == true);
    CHECK(j.contains("trace"));

    const Outcome generic = invoke({"reduce", path, "--json"});
    REQUIRE(generic.code == 0);
    CHECK(generic.json()["diagonal"] == nlohmann::json::parse("[1, 6]"));

    const std::string identity = temp_file("id.json", R"({"ring": "Z", "matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})");
    const auto id = invoke({"reduce", identity, "--json"}).json();
    CHECK(id["diagonal"] == nlohmann::json::parse("[1, 1, 1]"));

    const std::string bad = temp_file("bad.json", R"({"ring": "Z", "matrix": [[4, 0], [2, 6]]})");
    const Outcome pre = invoke({"reduce", bad, "--method", "thm21"});
    CHECK(pre.code == 1);
    CHECK(pre.err.find("precondition aR+bR+cR=R fails") != std::string::npos);

    const std::string poly = temp_file("poly.json", R"({"ring": "F5[x]", "matrix": [[[0, 1], [1]], [[2], [1, 1]]]})");
    CHECK(invoke({"reduce", poly, "--json"}).code == 0);

    CHECK(invoke({"reduce", temp_file("garbage.json", "not json")}).code == 1);
    CHECK(invoke({"reduce", "/nonexistent/matrix.json"}).code == 1);
    CHECK(invoke({"reduce", temp_file("q.json", R"({"ring": "Z/12", "matrix": [[2]]})")}).code == 1);
}

TEST_CASE("reduce writes to --out")
{
    const std::string in = temp_file("out_in.json", R"({"ring": "Z", "matrix": [[2, 4], [6, 8]]})");
    const auto out = std::filesystem::temp_directory_path() / "bezout_cli_test_out.json";
    std::filesystem::remove(out);
    REQUIRE(invoke({"reduce", in, "--json", "--out", out.string()}).code == 0);
    std::ifstream f(out);
    const auto j = nlohmann::json::parse(f);
    CHECK(j["diagonal"] == nlohmann::json::parse("[2, 4]"));
}

TEST_CASE("comax, split and analyze-ring")
{
    const auto comax = invoke({"comax", "Z", "360", "--json"}).json();
    CHECK(comax["factorization"]["factors"] == nlohmann::json::parse("[8, 9, 5]"));

    const Outcome avoidable = invoke({"split", "Z", "30", "--kind", "avoidable", "--b", "4", "--c", "9", "--json"});
    REQUIRE(avoidable.code == 0);
    CHECK(avoidable.json()["witness"]["r"] == 15);
    CHECK(avoidable.json()["witness"]["s"] == 2);

    CHECK(invoke({"split", "Z", "30", "--kind", "avoidable", "--b", "-3", "--c", "9"}).code == 1);
    CHECK(invoke({"split", "Z", "30", "--kind", "avoidable", "--b", "-4", "--c", "9"}).code == 0);
    CHECK(invoke({"split", "Z", "30", "--kind", "bogus", "--b", "4"}).code == 1);

    const Outcome poly = invoke({"split", "F3[x]", "[0,0,1,1]", "--kind", "adequate", "--b", "[0,1]", "--json"});
    REQUIRE(poly.code == 0);
    CHECK(poly.json()["witness"]["s"] == nlohmann::json::parse("[0, 0, 1]"));

    const Outcome radical = invoke({"split", "Z", "12", "--kind", "semipotent", "--b", "6", "--json"});
    CHECK(radical.code == 0);
    CHECK(radical.json()["in_radical"] == true);

    // A prime power a with b a unit admits no split into two non-units.
    CHECK(invoke({"split", "Z", "4", "--kind", "semipotent", "--b", "1", "--json"}).code == 3);

    const auto ring = invoke({"analyze-ring", "Z/12", "--json"}).json();
    CHECK(ring["report"]["cardinality"] == 12);
    CHECK(ring["report"]["flags"]["clean"]["holds"] == true);
    CHECK(invoke({"analyze-ring", "Z"}).code == 1);
    CHECK(invoke({"analyze-ring", "Z/0"}).code == 1);
}

TEST_CASE("verify sweeps")
{
    const Outcome ok = invoke({"verify", "--theorems", "thm9,thm11", "--range", "2..500", "--json"});
    CHECK(ok.code == 0);
    const auto j = ok.json();
    CHECK(j["total_violations"] == 0);
    CHECK(j["theorems"]["thm9"]["checked"] == 499);

    const Outcome prop7 = invoke({"verify", "--theorems", "prop7", "--range", "2..200", "--json"});
    CHECK(prop7.code == 0);
    CHECK(prop7.json()["theorems"]["prop7"]["violation_count"] == 0);

    CHECK(invoke({"verify", "--range", "2..1"}).code == 1);
    CHECK(invoke({"verify", "--range", "abc"}).code == 1);
    CHECK(invoke({"verify", "--theorems", "thm99"}).code == 1);
}

TEST_CASE("reports are deterministic")
{
    const std::vector<std::string> args{"verify", "--theorems", "thm12,thm14,cor10", "--range", "2..60", "--seed", "9", "--json"};
    const Outcome first = invoke(args), second = invoke(args);
    CHECK(first.out == second.out);
    CHECK(first.json()["seed"] == 9);
    const Outcome other = invoke({"verify", "--theorems", "thm12", "--range", "2..60", "--seed", "10", "--json"});
    CHECK(other.code == 0);
}

TEST_CASE("text rendering")
{
    const Outcome text = invoke({"classify", "Z", "6", "--pretty"});
    CHECK(text.code == 0);
    CHECK(text.out.find("inpseudo_irreducible: true") != std::string::npos);
}
