/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordsub/cli.hh>
#include <ordsub/errors.hh>
#include <ordsub/inclusion_dp.hh>
#include <ordsub/instances.hh>
#include <ordsub/og_format.hh>
#include <ordsub/oracle.hh>
#include <ordsub/orderings.hh>
#include <ordsub/pathwidth_dp.hh>
#include <ordsub/shift.hh>
#include <ordsub/vertex_cover_dp.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace ordsub
{
    using std::to_string;

    namespace
    {
        // Thrown for bad flag combinations that CLI11 cannot see.
        struct UsageError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        auto witness_text(const VerifyReport & r) -> string
        {
            string s = "(";
            if (r.witness)
                for (std::size_t i = 0 ; i < r.witness->size() ; ++i)
                    s += (i ? "," : "") + std::to_string((*r.witness)[i] + 1);
            return s + ")";
        }

        enum class Problem
        {
            osi,
            oisi,
            mcos,
            mcois
        };

        const std::map<string, Problem> problem_names{
            { "osi", Problem::osi }, { "oisi", Problem::oisi }, { "mcos", Problem::mcos }, { "mcois", Problem::mcois } };

        const vector<string> algo_names{ "auto", "brute", "shift2dor", "shiftmin", "dpinclusion", "dppathwidth", "dpvc" };

        auto is_decision(Problem p) -> bool
        {
            return p == Problem::osi || p == Problem::oisi;
        }

        auto mco_variant(Problem p) -> McoVariant
        {
            return p == Problem::mcos ? McoVariant::mcos : McoVariant::mcois;
        }

        // Widths and cover sizes up to which auto prefers a parameterised DP
        // over the brute-force search.
        constexpr int auto_pathwidth_limit = 5;
        constexpr int auto_cover_limit = 8;

        struct Outcome
        {
            string algo;
            optional<bool> decision;
            optional<OrderPreservingMap> map;
            optional<CommonSolution> solution;
            long states = 0;
        };

        auto has_common_inclusion_class(const OrderedGraph & g, const OrderedGraph & h) -> bool
        {
            if (g.directed() || h.directed() || ! g.has_sides() || ! h.has_sides())
                return false;
            if (! verify_ordering(OrderingKind::inclusion, g) || ! verify_ordering(OrderingKind::inclusion, h))
                return false;
            for (auto a : inclusion_classes(g))
                for (auto b : inclusion_classes(h))
                    if (a == b)
                        return true;
            return false;
        }

        auto pick_auto(Problem problem, const OrderedGraph & g, const OrderedGraph & h) -> string
        {
            if (problem == Problem::osi) {
                if (g.kind() == GraphKind::bipartite && h.kind() == GraphKind::bipartite
                        && verify_ordering(OrderingKind::comparability_weak, g))
                    return "shift2dor";
                if (g.directed() && h.directed() && verify_ordering(OrderingKind::min, g))
                    return "shiftmin";
                return "brute";
            }
            if (problem == Problem::oisi)
                return "brute";
            if (problem == Problem::mcois && has_common_inclusion_class(g, h))
                return "dpinclusion";
            if (std::max(ordering_pathwidth(g), ordering_pathwidth(h)) <= auto_pathwidth_limit)
                return "dppathwidth";
            if (! g.directed() && ! h.directed()
                    && std::max(minimum_vertex_cover(g).size(), minimum_vertex_cover(h).size()) <= std::size_t(auto_cover_limit))
                return "dpvc";
            return "brute";
        }

        auto solve(Problem problem, const string & requested, const OrderedGraph & g, const OrderedGraph & h, bool unguarded) -> Outcome
        {
            if (g.directed() != h.directed())
                throw std::invalid_argument("G and H must both be directed or both undirected");

            Outcome result;
            result.algo = requested == "auto" ? pick_auto(problem, g, h) : requested;
            auto & algo = result.algo;

            auto needs = [&] (bool ok) {
                if (! ok)
                    throw UsageError("algorithm " + algo + " does not solve this problem");
            };

            if (algo == "brute") {
                OracleOptions options;
                options.unguarded = unguarded;
                if (is_decision(problem)) {
                    result.map = brute_ordered_iso(problem == Problem::osi ? IsoVariant::osi : IsoVariant::oisi, g, h, options);
                    result.decision = result.map.has_value();
                }
                else
                    result.solution = brute_mco(mco_variant(problem), g, h, options);
            }
            else if (algo == "shift2dor" || algo == "shiftmin") {
                needs(problem == Problem::osi);
                ShiftOptions options;
                options.record_steps = false;
                auto r = algo == "shift2dor" ? osi_shift_2dor(g, h, options) : osi_shift_signed_interval(g, h, options);
                result.map = r.map;
                result.decision = r.map.has_value();
                result.states = r.trace.iterations;
            }
            else if (algo == "dpinclusion") {
                needs(problem == Problem::mcois);
                result.solution = mcois_inclusion(g, h);
            }
            else if (algo == "dppathwidth") {
                needs(! is_decision(problem));
                PathwidthStats stats;
                result.solution = mco_pathwidth(mco_variant(problem), g, nice_decomposition_from_ordering(g),
                        h, nice_decomposition_from_ordering(h), &stats);
                result.states = stats.states;
            }
            else if (algo == "dpvc") {
                needs(! is_decision(problem));
                VertexCoverOptions options;
                options.unguarded = unguarded;
                VertexCoverStats stats;
                result.solution = mco_vertex_cover(mco_variant(problem), g, h, options, &stats);
                result.states = stats.dp_runs;
            }
            else
                throw UsageError("unknown algorithm " + algo);
            return result;
        }

        auto print_outcome(std::ostream & out, const Outcome & o, const string & problem, bool json) -> void
        {
            if (json) {
                nlohmann::ordered_json j;
                j["problem"] = problem;
                j["algo"] = o.algo;
                if (o.decision) {
                    j["decision"] = *o.decision ? "YES" : "NO";
                    auto images = nlohmann::ordered_json::array();
                    if (o.map)
                        for (int v : o.map->images())
                            images.push_back(v + 1);
                    j["map"] = images;
                }
                else {
                    j["value"] = o.solution->value;
                    auto pairs = nlohmann::ordered_json::array();
                    for (auto [a, b] : o.solution->pairs)
                        pairs.push_back({ b + 1, a + 1 });
                    j["pairs"] = pairs;
                }
                out << j.dump() << '\n';
                return;
            }

            if (o.decision) {
                out << (*o.decision ? "YES" : "NO") << '\n';
                if (o.map)
                    for (int i = 0 ; i < o.map->size() ; ++i)
                        out << i + 1 << " -> " << (*o.map)[i] + 1 << '\n';
            }
            else {
                out << "VALUE " << o.solution->value << '\n';
                for (auto [a, b] : o.solution->pairs)
                    out << b + 1 << " -> " << a + 1 << '\n';
            }
        }

        auto cmd_verify(const string & kind_name, const string & file, bool json, std::ostream & out) -> int
        {
            auto kind = parse_ordering_kind(kind_name);
            if (! kind)
                throw UsageError("unknown ordering kind " + kind_name);
            auto g = read_og_file(file);
            if (! ordering_applies(*kind, g))
                throw std::invalid_argument("ordering kind " + kind_name + " does not apply to a " + string(to_string(g.kind())) + " graph");
            auto report = verify_ordering(*kind, g);
            if (json) {
                nlohmann::ordered_json j;
                j["kind"] = kind_name;
                j["ok"] = report.ok;
                if (! report.ok) {
                    auto w = nlohmann::ordered_json::array();
                    for (int v : *report.witness)
                        w.push_back(v + 1);
                    j["witness"] = w;
                    j["reason"] = report.detail;
                }
                out << j.dump() << '\n';
            }
            else if (report.ok)
                out << "OK\n";
            else
                out << "FAIL witness=" << witness_text(report) << " reason=" << report.detail << '\n';
            return report.ok ? exit_code::yes : exit_code::no;
        }

        auto cmd_solve(const string & problem_name, const string & algo, const string & gfile, const string & hfile,
                bool json, bool unguarded, std::ostream & out) -> int
        {
            auto problem = problem_names.at(problem_name);
            auto g = read_og_file(gfile);
            auto h = read_og_file(hfile);
            auto outcome = solve(problem, algo, g, h, unguarded);
            print_outcome(out, outcome, problem_name, json);
            if (outcome.decision)
                return *outcome.decision ? exit_code::yes : exit_code::no;
            return exit_code::yes;
        }

        auto ops_from_flags(const string & pi, const string & rho) -> OpsInstance
        {
            if (pi.empty() || rho.empty())
                throw UsageError("--pi and --rho are required for --from ops");
            OpsInstance ops{ parse_int_list(pi), parse_int_list(rho) };
            validate_ops(ops);
            return ops;
        }

        auto cmd_reduce(const string & from, const string & to, const string & pi, const string & rho,
                const string & graph, int k, bool drop_mid, const string & prefix, std::ostream & out) -> int
        {
            optional<ReducedInstance> r;
            if (from == "ops") {
                auto ops = ops_from_flags(pi, rho);
                if (to == "spider")
                    r = ops_to_spiders(ops);
                else if (to == "tperfect")
                    r = ops_to_trivially_perfect(ops);
                else if (to == "edges")
                    r = ops_to_disjoint_edges(ops);
                else if (to == "threshold")
                    r = ops_to_inclusion_class(InclusionClass::threshold, ops, drop_mid);
                else if (to == "chain")
                    r = ops_to_inclusion_class(InclusionClass::chain, ops, drop_mid);
                else if (to == "cochain")
                    r = ops_to_inclusion_class(InclusionClass::cochain, ops, drop_mid);
                else if (to == "interval")
                    r = ops_to_interval_ordered(IntervalFlavour::interval, ops, drop_mid);
                else if (to == "interval_bigraph")
                    r = ops_to_interval_ordered(IntervalFlavour::interval_bigraph, ops, drop_mid);
                else
                    throw UsageError("--from ops cannot target " + to);
            }
            else {
                if (graph.empty() || k < 1)
                    throw UsageError("--graph and a positive --k are required for --from bb");
                auto g = read_og_file(graph);
                if (g.kind() != GraphKind::bipartite)
                    throw std::invalid_argument("balanced biclique source must be bipartite");
                if (to == "split")
                    r = bb_to_ordered(BicliqueTarget::split, g, k);
                else if (to == "cobipartite")
                    r = bb_to_ordered(BicliqueTarget::cobipartite, g, k);
                else
                    throw UsageError("--from bb cannot target " + to);
            }

            write_og_file(prefix + ".G.og", r->g);
            write_og_file(prefix + ".H.og", r->h);
            out << r->reduction << ": wrote " << prefix << ".G.og (n=" << r->g.size() << ", m=" << r->g.edge_count()
                << ") and " << prefix << ".H.og (n=" << r->h.size() << ", m=" << r->h.edge_count() << ")\n";
            return exit_code::yes;
        }

        auto cmd_gen(const string & class_name, int n, double density, std::uint64_t seed, int parameter,
                const string & file, std::ostream & out) -> int
        {
            auto cls = parse_generator_class(class_name);
            if (! cls)
                throw UsageError("unknown generator class " + class_name);
            if ((*cls == GeneratorClass::bounded_pathwidth || *cls == GeneratorClass::bounded_vc) && parameter < 0)
                throw UsageError("--param is required for " + class_name);
            if (n < 0 || ! (density >= 0.0 && density <= 1.0))
                throw UsageError("need --n >= 0 and --density in [0, 1]");
            auto g = random_instance(GeneratorSpec{ *cls, parameter }, n, density, seed);
            if (file.empty() || file == "-")
                out << print_og(g);
            else
                write_og_file(file, g);
            return exit_code::yes;
        }

        struct BenchCase
        {
            string name;
            Problem problem;
            string problem_name, algo;
            OrderedGraph g, h;
        };

        // G from the generator, H either an induced subgraph of G (so that the
        // answer is yes) or a fresh small graph of the same class.
        auto bench_pair(GeneratorSpec spec, int ng, int nh, double density, std::uint64_t seed) -> std::pair<OrderedGraph, OrderedGraph>
        {
            auto g = random_instance(spec, ng, density, seed);
            if (seed % 2 == 0) {
                vector<int> pick;
                for (int v = 0 ; v < ng && static_cast<int>(pick.size()) < nh ; v += std::max(1, ng / nh))
                    pick.push_back(v);
                return { g, induced_subgraph(g, pick) };
            }
            return { g, random_instance(spec, nh, density, seed + 1000) };
        }

        auto bench_suite(const string & suite) -> vector<BenchCase>
        {
            struct Family
            {
                string name;
                GeneratorSpec spec;
                Problem problem;
                string problem_name, algo;
                int ng, nh;
                double density;
            };
            const vector<Family> families{
                { "shift2dor", { GeneratorClass::two_dor }, Problem::osi, "osi", "shift2dor", 200, 20, 0.5 },
                { "shiftmin", { GeneratorClass::signed_interval }, Problem::osi, "osi", "shiftmin", 100, 10, 0.05 },
                { "inclusion", { GeneratorClass::threshold }, Problem::mcois, "mcois", "dpinclusion", 12, 10, 0.5 },
                { "pathwidth", { GeneratorClass::bounded_pathwidth, 3 }, Problem::mcos, "mcos", "dppathwidth", 12, 10, 0.5 },
                { "vc", { GeneratorClass::bounded_vc, 3 }, Problem::mcois, "mcois", "dpvc", 12, 10, 0.5 },
                { "brute", { GeneratorClass::arbitrary }, Problem::mcois, "mcois", "brute", 9, 8, 0.4 } };

            vector<BenchCase> cases;
            bool any = false;
            for (auto & f : families) {
                if (suite != "all" && suite != f.name)
                    continue;
                any = true;
                for (std::uint64_t s = 0 ; s < 8 ; ++s) {
                    auto [g, h] = bench_pair(f.spec, f.ng, f.nh, f.density, s);
                    cases.push_back(BenchCase{ f.name + "-" + std::to_string(s), f.problem, f.problem_name, f.algo, g, h });
                }
            }
            if (! any)
                throw UsageError("unknown suite " + suite);
            return cases;
        }

        auto cmd_bench(const string & suite, const string & file, std::ostream & out) -> int
        {
            auto cases = bench_suite(suite);
            std::ostringstream csv;
            csv << "instance,problem,algo,value_or_decision,millis,states_visited\n";
            for (auto & c : cases) {
                auto start = std::chrono::steady_clock::now();
                auto o = solve(c.problem, c.algo, c.g, c.h, false);
                auto millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                string value = o.decision ? (*o.decision ? "YES" : "NO") : std::to_string(o.solution->value);
                csv << c.name << ',' << c.problem_name << ',' << o.algo << ',' << value << ','
                    << std::llround(millis) << ',' << o.states << '\n';
            }
            if (file.empty() || file == "-")
                out << csv.str();
            else {
                std::ofstream f(file, std::ios::binary);
                f << csv.str();
                if (! f)
                    throw std::runtime_error("cannot write '" + file + "'");
            }
            return exit_code::yes;
        }
    }

    auto parse_int_list(const string & s) -> vector<int>
    {
        vector<int> result;
        std::stringstream in(s);
        string item;
        while (std::getline(in, item, ',')) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(item, &used);
            }
            catch (const std::exception &) {
                throw std::invalid_argument("not an integer: '" + item + "'");
            }
            if (used != item.size())
                throw std::invalid_argument("not an integer: '" + item + "'");
            result.push_back(v);
        }
        return result;
    }

    auto run_cli(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "Ordered subgraph isomorphism and maximum common ordered subgraph solvers", "ordsub" };
        app.require_subcommand(1);

        string kind, file, problem, algo = "auto", gfile, hfile, from, to, pi, rho, graph, prefix, cls, suite, out_file;
        bool json = false, unguarded = false, drop_mid = false;
        int k = 0, n = 0, parameter = -1;
        double density = 0.5;
        std::uint64_t seed = 0;

        auto verify = app.add_subcommand("verify", "Check a graph's ordering against an ordering kind");
        verify->add_option("--kind", kind, "Ordering kind")->required();
        verify->add_option("file", file, ".og file")->required();
        verify->add_flag("--json", json, "Emit JSON");

        vector<string> problems;
        for (auto & [name, _] : problem_names)
            problems.push_back(name);
        auto solve_cmd = app.add_subcommand("solve", "Solve OSI, OISI, MCOS or MCOIS on two .og files");
        solve_cmd->add_option("--problem", problem, "Problem")->required()->check(CLI::IsMember(problems));
        solve_cmd->add_option("--algo", algo, "Algorithm")->check(CLI::IsMember(algo_names));
        solve_cmd->add_option("gfile", gfile, "Host graph G")->required();
        solve_cmd->add_option("hfile", hfile, "Pattern graph H")->required();
        solve_cmd->add_flag("--json", json, "Emit JSON");
        solve_cmd->add_flag("--unguarded", unguarded, "Lift the exponential size guards");

        auto reduce = app.add_subcommand("reduce", "Build a hard instance pair from OPS or balanced biclique");
        reduce->add_option("--from", from, "Source problem")->required()->check(CLI::IsMember({ "ops", "bb" }));
        reduce->add_option("--to", to, "Target class")->required()->check(CLI::IsMember({ "spider", "tperfect", "edges",
                    "threshold", "chain", "cochain", "interval", "interval_bigraph", "split", "cobipartite" }));
        reduce->add_option("--pi", pi, "Text permutation, comma separated");
        reduce->add_option("--rho", rho, "Pattern permutation, comma separated");
        reduce->add_option("--graph", graph, "Bipartite .og file for --from bb");
        reduce->add_option("--k", k, "Biclique size for --from bb");
        reduce->add_flag("--drop-mid", drop_mid, "Omit the mid vertices");
        reduce->add_option("--out", prefix, "Output prefix; writes PREFIX.G.og and PREFIX.H.og")->default_val("reduced");

        vector<string> classes;
        for (auto c : { GeneratorClass::interval, GeneratorClass::interval_bigraph, GeneratorClass::two_dor,
                GeneratorClass::signed_interval, GeneratorClass::threshold, GeneratorClass::chain, GeneratorClass::cochain,
                GeneratorClass::arbitrary, GeneratorClass::bounded_pathwidth, GeneratorClass::bounded_vc })
            classes.emplace_back(to_string(c));
        auto gen = app.add_subcommand("gen", "Generate a random graph of a class");
        gen->add_option("--class", cls, "Graph class")->required()->check(CLI::IsMember(classes));
        gen->add_option("--n", n, "Vertex count")->required();
        gen->add_option("--density", density, "Density in [0, 1]");
        gen->add_option("--seed", seed, "Seed");
        gen->add_option("--param", parameter, "Width or cover size for the bounded classes");
        gen->add_option("--out", out_file, "Output file, - for stdout");

        auto bench = app.add_subcommand("bench", "Run a benchmark suite and write CSV");
        bench->add_option("--suite", suite, "shift2dor, shiftmin, inclusion, pathwidth, vc, brute or all")->required();
        bench->add_option("--out", out_file, "CSV file, - for stdout");

        vector<string> argv_storage{ "ordsub" };
        argv_storage.insert(argv_storage.end(), args.begin(), args.end());
        vector<char *> argv;
        for (auto & a : argv_storage)
            argv.push_back(a.data());

        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_code::yes;
        }
        catch (const CLI::ParseError & e) {
            err << "ordsub: " << e.what() << '\n';
            return exit_code::usage;
        }

        try {
            if (verify->parsed())
                return cmd_verify(kind, file, json, out);
            if (solve_cmd->parsed())
                return cmd_solve(problem, algo, gfile, hfile, json, unguarded, out);
            if (reduce->parsed())
                return cmd_reduce(from, to, pi, rho, graph, k, drop_mid, prefix, out);
            if (gen->parsed())
                return cmd_gen(cls, n, density, seed, parameter, out_file, out);
            return cmd_bench(suite, out_file, out);
        }
        catch (const UsageError & e) {
            err << "ordsub: " << e.what() << '\n';
            return exit_code::usage;
        }
        catch (const PreconditionFailed & e) {
            err << "ordsub: precondition failed: " << e.what() << " witness=" << witness_text(e.report())
                << " reason=" << e.report().detail << '\n';
            return exit_code::invalid;
        }
        catch (const GuardExceeded & e) {
            err << "ordsub: " << e.what() << '\n';
            return exit_code::guard;
        }
        catch (const ParseError & e) {
            err << "ordsub: " << e.what() << '\n';
            return exit_code::invalid;
        }
        catch (const std::invalid_argument & e) {
            err << "ordsub: " << e.what() << '\n';
            return exit_code::invalid;
        }
        catch (const std::exception & e) {
            err << "ordsub: " << e.what() << '\n';
            return exit_code::invalid;
        }
    }
}
