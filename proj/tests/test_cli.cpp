#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lppforge/cli_app.hpp"
#include "lppforge/serialize.hpp"

using namespace lppforge;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto dir = std::filesystem::temp_directory_path() / "lppforge_cli_tests";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("field subcommand") {
    SUBCASE("order-9 descriptor with an explicit modulus") {
        auto r = cli({"field", "3", "2", "--modulus", "2,2,1"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j["p"] == 3);
        CHECK(j["r"] == 2);
        CHECK(j["modulus"] == json::array({2, 2, 1}));
        CHECK(j["order"].size() == 9);
    }
    SUBCASE("prime field") {
        auto r = cli({"field", "7", "1"});
        CHECK(r.code == 0);
        CHECK(json::parse(r.out)["p"] == 7);
    }
    SUBCASE("composite characteristic exits 2") {
        auto r = cli({"field", "4", "1"});
        CHECK(r.code == 2);
        CHECK(r.err.find("NotPrime") != std::string::npos);
    }
}

TEST_CASE("klenian subcommand") {
    SUBCASE("order-7 cycle reproduces the reference polynomial") {
        auto r = cli({"klenian", "-p", "7", "-r", "1", "--base-cycle", "(2,0,1,3,5,6,4)"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j["is_lpp"] == true);
        CHECK(j["poly_string"] ==
              "x^5 + 6*y^5 + 6*x^4 + y^4 + 3*x^3 + 4*y^3 + 2*x^2 + 5*y^2 + x + 6*y + 6");
        CHECK(j["grid"][0] == json::array({6, 0, 5, 1, 4, 2, 3}));
    }
    SUBCASE("order-9 cycle yields 58 monomials of degree 14") {
        auto r = cli({"klenian", "-p", "3", "-r", "2", "--modulus", "2,2,1", "--order",
                      "0;u;u+1;2u+1;2;2u;2u+2;u+2;1", "--base-cycle",
                      "(0,2u+1,u+2,u,u+1,2u+2,1,2,2u)"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j["monomials"] == 58);
        CHECK(j["degree"] == 14);
    }
    SUBCASE("canonical block generators") {
        auto r = cli({"klenian", "-p", "2", "-r", "2", "--e", "1", "--canonical"});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out)["is_lpp"] == true);
    }
    SUBCASE("broken generators exit 3") {
        auto r = cli({"klenian", "-p", "2", "-r", "2", "--e", "1", "--generators",
                      "(0,1,u,u+1);(0,u)(1,u+1)"});
        CHECK(r.code == 3);
    }
    SUBCASE("deterministic output") {
        std::vector<std::string> args{"klenian", "-p", "5", "-r", "1", "--base-cycle",
                                      "(0,1,2,3,4)"};
        CHECK(cli(args).out == cli(args).out);
    }
}

TEST_CASE("companion subcommand") {
    SUBCASE("order-7 reference companion with certificate") {
        auto r = cli({"companion", "-p", "7", "-r", "1", "--klenian", "--base-cycle",
                      "(2,0,1,3,5,6,4)"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j["g_string"] ==
              "2*x^5 + 6*y^5 + 5*x^4 + y^4 + 6*x^3 + 4*y^3 + 4*x^2 + 5*y^2 + 2*x + 6*y + 4");
        CHECK(j["orthogonal"] == true);
        CHECK(j["certificate"]["all_distinct"] == true);
        CHECK(j["certificate"]["superimposed_pairs"].size() == 49);
    }
    SUBCASE("even order exits 4 on the construction path") {
        auto r = cli({"companion", "-p", "2", "-r", "2", "--klenian", "--e", "1",
                      "--canonical"});
        CHECK(r.code == 4);
    }
    SUBCASE("search on the order-4 cycle polynomial exits 5") {
        auto r = cli({"companion", "-p", "2", "-r", "2", "--order", "0;1;u;u+1", "--klenian",
                      "--base-cycle", "(0,1,u,u+1)", "--search"});
        CHECK(r.code == 5);
        CHECK(r.err.find("no LPP companion") != std::string::npos);
    }
    SUBCASE("input polynomial path finds a linear companion") {
        auto F3 = Field::make(3, 1);
        MPoly f = add(MPoly::variable(F3, 2, 0), MPoly::variable(F3, 2, 1));
        auto path = write_temp("f3_linear.json", poly_to_json(f).dump());
        auto r = cli({"companion", "-p", "3", "-r", "1", "--input", path.string()});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out)["orthogonal"] == true);
    }
    SUBCASE("order-9 companion has 57 monomials of degree 14") {
        auto r = cli({"companion", "-p", "3", "-r", "2", "--modulus", "2,2,1", "--order",
                      "0;u;u+1;2u+1;2;2u;2u+2;u+2;1", "--klenian", "--base-cycle",
                      "(0,2u+1,u+2,u,u+1,2u+2,1,2,2u)"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j["g_monomials"] == 57);
        CHECK(j["g_degree"] == 14);
        CHECK(j["orthogonal"] == true);
    }
}

TEST_CASE("mols subcommand") {
    SUBCASE("separated identity polynomials over F5") {
        auto r = cli({"mols", "-p", "5", "-r", "1", "--separated", "id", "id"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j["size"] == 4);
        CHECK(j["complete"] == true);
        CHECK(j["pairwise_orthogonal"] == true);
    }
    SUBCASE("power maps over F7") {
        auto r = cli({"mols", "-p", "7", "-r", "1", "--separated", "x^5", "x^5"});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out)["size"] == 6);
    }
    SUBCASE("non-permutation input exits 6") {
        auto r = cli({"mols", "-p", "5", "-r", "1", "--separated", "x^2", "id"});
        CHECK(r.code == 6);
    }
    SUBCASE("companion pair over F7 yields six squares") {
        auto F7 = Field::make(7, 1);
        Perm beta = perm_from_cycle_string(*F7, "(2,0,1,3,5,6,4)");
        auto G = cycle_group(F7, beta);
        MPoly f = eklenian_poly(G, beta);
        MPoly g = klenian_companion(G, f);
        auto pf = write_temp("f7_pair_f.json", poly_to_json(f).dump());
        auto pg = write_temp("f7_pair_g.json", poly_to_json(g).dump());
        auto r = cli({"mols", "-p", "7", "-r", "1", "--pair", pf.string(), pg.string()});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j["size"] == 6);
        CHECK(j["pairwise_orthogonal"] == true);
        CHECK(j["complete"] == true);
    }
    SUBCASE("grid files are written") {
        auto dir = std::filesystem::temp_directory_path() / "lppforge_cli_tests" / "mols_out";
        std::filesystem::create_directories(dir);
        auto r = cli({"mols", "-p", "3", "-r", "1", "--separated", "id", "id", "--out",
                      dir.string()});
        REQUIRE(r.code == 0);
        CHECK(std::filesystem::exists(dir / "grid_1.csv"));
        CHECK(std::filesystem::exists(dir / "grid_2.csv"));
        CHECK(std::filesystem::exists(dir / "report.json"));
    }
}

TEST_CASE("verify subcommand") {
    auto F5 = Field::make(5, 1);
    SUBCASE("x^(q-1)+y is not an LPP: exit 1") {
        MPoly f = add(MPoly::monomial(F5, 2, {4, 0}, F5->one()), MPoly::variable(F5, 2, 1));
        auto path = write_temp("f5_pp_not_lpp.json", poly_to_json(f).dump());
        auto r = cli({"verify", "-p", "5", "-r", "1", "--what", "lpp", "--input", path.string()});
        CHECK(r.code == 1);
        CHECK(json::parse(r.out)["ok"] == false);
        auto r2 = cli({"verify", "-p", "5", "-r", "1", "--what", "pp", "--input", path.string()});
        CHECK(r2.code == 0);
    }
    SUBCASE("addition table is a Latin square: exit 0") {
        std::string csv = "0,1,2\n1,2,0\n2,0,1\n";
        auto path = write_temp("f3_addition.csv", csv);
        auto r = cli({"verify", "-p", "3", "-r", "1", "--what", "latin", "--grid", path.string()});
        CHECK(r.code == 0);
    }
    SUBCASE("orthogonal pair: exit 0") {
        MPoly f = add(MPoly::variable(F5, 2, 0), MPoly::variable(F5, 2, 1));
        MPoly g = add(MPoly::variable(F5, 2, 0), scale(MPoly::variable(F5, 2, 1), 2));
        auto pf = write_temp("f5_f.json", poly_to_json(f).dump());
        auto pg = write_temp("f5_g.json", poly_to_json(g).dump());
        auto r = cli({"verify", "-p", "5", "-r", "1", "--what", "orthogonal", "--input",
                      pf.string(), "--input", pg.string()});
        CHECK(r.code == 0);
        auto rm = cli({"verify", "-p", "5", "-r", "1", "--what", "mols", "--input",
                       pf.string(), "--input", pg.string()});
        CHECK(rm.code == 0);
        json jm = json::parse(rm.out);
        CHECK(jm["details"]["members_latin"] == true);
    }
}

TEST_CASE("census subcommand") {
    SUBCASE("order 4 report") {
        auto r = cli({"census", "-p", "2", "-r", "2"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j["total_lpps"] == 576);
        CHECK(j["eklenian_counts"]["0"] == 72);
        CHECK(j["eklenian_counts"]["1"] == 24);
        CHECK(j["equivalent_to_eklenian"] == 576);
        CHECK(j["lpps_with_lpp_companion"] == 144);
        CHECK(j["companion_counts"]["48"] == 144);
    }
    SUBCASE("over the limit exits 7") {
        auto r = cli({"census", "-p", "7", "-r", "1"});
        CHECK(r.code == 7);
        CHECK(r.err.find("exceeds enumeration limit") != std::string::npos);
    }
    SUBCASE("LPP_FORGE_LIMIT raises the cap") {
        setenv("LPP_FORGE_LIMIT", "6", 1);
        auto r = cli({"census", "-p", "7", "-r", "1"});
        unsetenv("LPP_FORGE_LIMIT");
        CHECK(r.code == 7);
        CHECK(r.err.find("limit 6") != std::string::npos);
    }
    SUBCASE("workers do not change the report") {
        auto a = cli({"census", "-p", "3", "-r", "1"});
        auto b = cli({"--workers", "3", "census", "-p", "3", "-r", "1"});
        CHECK(a.out == b.out);
    }
    SUBCASE("tuple streaming emits one JSON line per tuple") {
        auto r = cli({"census", "-p", "3", "-r", "1", "--stream"});
        REQUIRE(r.code == 0);
        std::istringstream lines(r.out);
        std::string line;
        int n = 0;
        while (std::getline(lines, line)) {
            json j = json::parse(line);
            CHECK(j["tuple"].size() == 3);
            ++n;
        }
        CHECK(n == 12);
    }
}
