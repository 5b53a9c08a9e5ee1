#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matcharr/cli.hpp"

#include "json.hpp"

#include <sstream>

using namespace matcharr;
using namespace matcharr::cli;

namespace {

const std::string data_dir = MATCHARR_TEST_DATA;

struct Outcome {
    int code = -1;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "matcharr");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    Outcome o;
    const auto config = parse_args(static_cast<int>(argv.size()), argv.data(), out, err, o.code);
    if (config)
        o.code = run(*config, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

} // namespace

TEST_CASE("parse_args reads every option")
{
    const std::vector<const char*> argv{"matcharr", "probe", "-i", "g.txt", "--numbering", "2,1,3",
                                        "--weights", "5,-1,0", "--samples", "50", "--seed", "9",
                                        "--format", "json", "--theorem", "T5_tree"};
    std::ostringstream out, err;
    int code = -1;
    const auto c = parse_args(static_cast<int>(argv.size()), argv.data(), out, err, code);
    REQUIRE(c);
    CHECK(code == exit_ok);
    CHECK(c->command == Command::probe);
    CHECK(c->input_path == "g.txt");
    CHECK(c->numbering == std::vector<std::size_t>{2, 1, 3});
    CHECK(c->weights == std::vector<long>{5, -1, 0});
    CHECK(c->samples == 50);
    CHECK(c->seed == 9);
    CHECK(c->format == Format::json);
    CHECK(c->theorem == "T5_tree");
    CHECK_FALSE(c->limits_raised);
}

TEST_CASE("malformed flags are input errors")
{
    CHECK(invoke({"explode"}).code == exit_input_error);
    CHECK(invoke({"charpoly", "--format", "yaml"}).code == exit_input_error);
    CHECK(invoke({"charpoly", "--numbering", "1,x"}).code == exit_input_error);
    CHECK(invoke({"charpoly", "--bogus"}).code == exit_input_error);
    CHECK(invoke({"charpoly", "--limits", "path_edges"}).code == exit_input_error);
    CHECK(invoke({}).code == exit_input_error);
}

TEST_CASE("help exits cleanly")
{
    const Outcome o = invoke({"--help"});
    CHECK(o.code == exit_ok);
    CHECK(o.out.find("--weights") != std::string::npos);
}

TEST_CASE("parse_limits")
{
    const Limits l = parse_limits("path_edges=14,max_lattice_hyperplanes=50");
    CHECK(l.max_path_edges == 14);
    CHECK(l.max_lattice_hyperplanes == 50);
    CHECK(l.max_iso_vertices == Limits{}.max_iso_vertices);
    CHECK_THROWS(parse_limits("nonsense=3"));
    CHECK_THROWS(parse_limits("lattice_hyperplanes=65"));
    CHECK_THROWS(parse_limits("path_edges=-1"));
}

TEST_CASE("charpoly")
{
    const Outcome json = invoke({"charpoly", "-i", data_dir + "/p3.txt", "--format", "json"});
    CHECK(json.code == exit_ok);
    CHECK(json.out == "{\"chi\":[2,-3,1]}\n");

    const Outcome text = invoke({"charpoly", "-i", data_dir + "/k3.txt"});
    CHECK(text.code == exit_ok);
    CHECK(text.out == "t^3 - 6*t^2 + 11*t - 6 = (t - 1)(t - 2)(t - 3)\n");
}

TEST_CASE("regions")
{
    CHECK(invoke({"regions", "-i", data_dir + "/k3.txt"}).out == "24\n");
    CHECK(invoke({"regions", "-i", data_dir + "/p3.txt", "--format", "json"}).out == "{\"regions\":6}\n");
}

TEST_CASE("matching")
{
    const Outcome o = invoke({"matching", "-i", data_dir + "/k3.txt", "--weights", "3,1,1", "--format", "json"});
    CHECK(o.code == exit_ok);
    CHECK(o.out == "{\"argmax\":[[1]]}\n");
    CHECK(invoke({"matching", "-i", data_dir + "/k3.txt"}).code == exit_input_error);
    CHECK(invoke({"matching", "-i", data_dir + "/k3.txt", "--weights", "1,2"}).code == exit_input_error);
    const Outcome renumbered = invoke({"matching", "-i", data_dir + "/k3.txt", "--weights", "3,1,1",
                                       "--numbering", "2,3,1", "--format", "json"});
    CHECK(renumbered.out == "{\"argmax\":[[1]]}\n");
}

TEST_CASE("arrangement")
{
    const Outcome o = invoke({"arrangement", "-i", data_dir + "/p3.txt", "--format", "json"});
    REQUIRE(o.code == exit_ok);
    const auto j = nlohmann::json::parse(o.out);
    CHECK(j.at("dimension") == 2);
    CHECK(j.at("hyperplanes") == nlohmann::json::parse("[[1,0],[1,-1],[0,1]]"));

    const Outcome text = invoke({"arrangement", "-i", data_dir + "/c4.txt"});
    CHECK(text.out.find("13 hyperplanes") != std::string::npos);
    CHECK(text.out.find("x1 - x2 + x3 - x4 = 0") != std::string::npos);
}

TEST_CASE("probe")
{
    const Outcome o = invoke({"probe", "-i", data_dir + "/c4.txt", "--samples", "100", "--seed", "42",
                              "--format", "json"});
    REQUIRE(o.code == exit_ok);
    const auto j = nlohmann::json::parse(o.out);
    CHECK(j.at("samples") == 100);
    CHECK(j.at("seed") == 42);
    CHECK(j.at("constancy_violations") == 0);
    CHECK(j.at("uniqueness_violations") == 0);
}

TEST_CASE("verify")
{
    const Outcome all = invoke({"verify"});
    CHECK(all.code == exit_ok);
    CHECK(all.out.find("all passed") != std::string::npos);
    CHECK(all.out.find("FAIL") == std::string::npos);

    const Outcome one = invoke({"verify", "--theorem", "T1_exception", "--format", "json"});
    CHECK(one.code == exit_ok);
    const auto j = nlohmann::json::parse(one.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0].at("theorem_id") == "T1_exception");
    CHECK(j[0].at("pass") == true);

    const Outcome on_file = invoke({"verify", "-i", data_dir + "/c4.txt"});
    CHECK(on_file.code == exit_ok);
    CHECK(invoke({"verify", "--theorem", "T9"}).code == exit_input_error);
}

TEST_CASE("input errors and guards")
{
    const Outcome missing = invoke({"charpoly", "-i", data_dir + "/absent.txt"});
    CHECK(missing.code == exit_input_error);
    CHECK(missing.err.rfind("error:", 0) == 0);
    CHECK(invoke({"charpoly"}).code == exit_input_error);
    CHECK(invoke({"charpoly", "-i", data_dir + "/k3.txt", "--numbering", "1,1,2"}).code == exit_input_error);
    CHECK(invoke({"charpoly", "-i", data_dir + "/k3.txt", "--numbering", "1,2"}).code == exit_input_error);

    const Outcome guarded = invoke({"charpoly", "-i", data_dir + "/k3.txt", "--limits", "lattice_hyperplanes=3"});
    CHECK(guarded.code == exit_input_error);

    const Outcome raised = invoke({"regions", "-i", data_dir + "/k3.txt", "--limits", "path_edges=13"});
    CHECK(raised.code == exit_ok);
    CHECK(raised.err.find("warning") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs")
{
    const std::vector<std::string> args{"probe", "-i", data_dir + "/k3.txt", "--samples", "60"};
    CHECK(invoke(args).out == invoke(args).out);
}
