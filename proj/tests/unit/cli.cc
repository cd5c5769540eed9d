/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "fixtures.hh"

#include <ordsub/cli.hh>
#include <ordsub/errors.hh>
#include <ordsub/og_format.hh>

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

using namespace ordsub;
using namespace fixtures;

namespace
{
    struct Outcome
    {
        int code;
        std::string out, err;
    };

    auto run(std::vector<std::string> args) -> Outcome
    {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return Outcome{ code, out.str(), err.str() };
    }

    struct Scratch
    {
        std::filesystem::path dir = std::filesystem::temp_directory_path() / ("ordsub_unit_" + std::to_string(::getpid()));

        Scratch()
        {
            std::filesystem::create_directories(dir);
        }

        ~Scratch()
        {
            std::error_code ignored;
            std::filesystem::remove_all(dir, ignored);
        }
    };

    auto scratch() -> const std::filesystem::path &
    {
        static Scratch s;
        return s.dir;
    }

    auto save(const std::string & name, const OrderedGraph & g) -> std::string
    {
        auto path = (scratch() / name).string();
        write_og_file(path, g);
        return path;
    }

    auto save_text(const std::string & name, const std::string & text) -> std::string
    {
        auto path = (scratch() / name).string();
        std::ofstream(path) << text;
        return path;
    }

    auto slurp(const std::string & path) -> std::string
    {
        std::ifstream in(path);
        return std::string{ std::istreambuf_iterator<char>{ in }, { } };
    }
}

TEST_SUITE("cli")
{
    TEST_CASE("og round trip")
    {
        for (auto & g : { cycle(5), complete_bipartite(2, 3), make_directed(3, std::vector<Edge>{ { 2, 0 }, { 1, 1 }, { 0, 2 } }),
                make_undirected(0, std::vector<Edge>{ }) }) {
            auto text = print_og(g);
            CHECK(print_og(parse_og(text)) == text);
            CHECK(parse_og(text).edges() == g.edges());
        }
        CHECK(print_og(path(2)) == "og 1\nkind undirected\nn 2\nm 1\ne 1 2\n");
    }

    TEST_CASE("og parser rejects malformed input")
    {
        CHECK_THROWS_AS((void) parse_og("og 2\nkind undirected\nn 1\nm 0\n"), ParseError);
        CHECK_THROWS_AS((void) parse_og("og 1\nkind undirected\nn 2\nm 1\ne 2 1\n"), ParseError);
        CHECK_THROWS_AS((void) parse_og("og 1\nkind undirected\nn 2\nm 1\ne 1 1\n"), ParseError);
        CHECK_THROWS_AS((void) parse_og("og 1\nkind undirected\nn 2\nm 2\ne 1 2\n"), ParseError);
        CHECK_THROWS_AS((void) parse_og("og 1\nkind bipartite\nn 2\nside 00\nm 1\ne 1 2\n"), ParseError);
        CHECK_NOTHROW((void) parse_og("# comment\nog 1\nkind directed\nn 1\nm 1\ne 1 1 # loop\n"));
    }

    TEST_CASE("verify exit codes")
    {
        auto k4 = run({ "verify", "--kind", "interval", save("k4.og", clique(4)) });
        CHECK(k4.code == exit_code::yes);
        CHECK(k4.out == "OK\n");

        auto c4 = run({ "verify", "--kind", "interval", save("c4.og", cycle(4)) });
        CHECK(c4.code == exit_code::no);
        CHECK(c4.out.starts_with("FAIL witness=(1,2,4)"));

        auto bad = run({ "verify", "--kind", "interval", save_text("bad.og", "og 1\nkind undirected\nn x\n") });
        CHECK(bad.code == exit_code::invalid);
        CHECK_FALSE(bad.err.empty());

        CHECK(run({ "verify", "--kind", "nonsense", save("k4.og", clique(4)) }).code == exit_code::usage);
        CHECK(run({ "frobnicate" }).code == exit_code::usage);
    }

    TEST_CASE("solve on identical files")
    {
        auto g = save("p5.og", path(5));
        auto human = run({ "solve", "--problem", "mcois", g, g });
        CHECK(human.code == exit_code::yes);
        CHECK(human.out.starts_with("VALUE 5\n"));

        auto json = run({ "solve", "--problem", "mcois", "--json", g, g });
        auto j = nlohmann::json::parse(json.out);
        CHECK(j["value"] == 5);
        CHECK(j["pairs"].size() == 5);
    }

    TEST_CASE("json and human decisions agree")
    {
        auto g = save("c6.og", cycle(6));
        auto yes = save("p3.og", path(3));
        auto no = save("k3.og", clique(3));
        for (auto & h : { yes, no })
            for (std::string problem : { "osi", "oisi" }) {
                auto human = run({ "solve", "--problem", problem, g, h });
                auto json = run({ "solve", "--problem", problem, "--json", g, h });
                CHECK(human.code == json.code);
                auto j = nlohmann::json::parse(json.out);
                CHECK(human.out.starts_with(j["decision"].get<std::string>()));
            }
    }

    TEST_CASE("solve precondition and guard exit codes")
    {
        auto c4 = save("c4u.og", cycle(4));
        CHECK(run({ "solve", "--problem", "osi", "--algo", "shift2dor", c4, c4 }).code == exit_code::invalid);

        auto big = save("big.og", path(30));
        CHECK(run({ "solve", "--problem", "mcois", "--algo", "brute", big, big }).code == exit_code::guard);
    }

    TEST_CASE("reduce reproduces the example instance")
    {
        auto prefix = (scratch() / "example").string();
        CHECK(run({ "reduce", "--from", "ops", "--to", "spider", "--pi", "4,2,1,6,3,5", "--rho", "2,3,1", "--out", prefix }).code == exit_code::yes);
        CHECK(slurp(prefix + ".G.og") == slurp(ORDSUB_GOLDEN_DIR "/example_spider.G.og"));
        CHECK(slurp(prefix + ".H.og") == slurp(ORDSUB_GOLDEN_DIR "/example_spider.H.og"));
        CHECK(run({ "reduce", "--from", "ops", "--to", "spider", "--pi", "1,1", "--rho", "1" }).code == exit_code::invalid);
    }

    TEST_CASE("gen with no vertices")
    {
        auto r = run({ "gen", "--class", "threshold", "--n", "0" });
        CHECK(r.code == exit_code::yes);
        auto g = parse_og(r.out);
        CHECK(g.size() == 0);
        CHECK(g.edge_count() == 0);
    }

    TEST_CASE("bench writes one row per case")
    {
        auto r = run({ "bench", "--suite", "shiftmin" });
        REQUIRE(r.code == exit_code::yes);
        CHECK(r.out.starts_with("instance,problem,algo,value_or_decision,millis,states_visited\n"));
        CHECK(std::ranges::count(r.out, '\n') == 9);
    }
}
