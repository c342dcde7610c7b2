#include "cli.hh"

#include <folklab/arrowing.hh>
#include <folklab/certifier.hh>
#include <folklab/clique.hh>
#include <folklab/expr.hh>
#include <folklab/registry.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

using std::optional;
using std::ostream;
using std::string;
using std::vector;

namespace folklab::cli
{
    namespace
    {
        // Raised for conditions that map straight onto an exit code.
        struct Exit
        {
            int code;
            string message;
        };

        struct GraphSource
        {
            string expression;      // positional or --graph / --expr
            string graph6;
            string file;

            auto attach(CLI::App & app, const string & positional_name) -> void
            {
                app.add_option(positional_name, expression, "Construction expression, e.g. \"join(K3,C5)\"");
                app.add_option("--graph,--expr", expression, "Construction expression");
                app.add_option("--graph6", graph6, "Graph as a graph6 line");
                app.add_option("--graph-file", file, "File whose first non-empty line is graph6");
            }
        };

        struct BudgetFlags
        {
            optional<std::uint64_t> max_nodes = 100'000'000;
            optional<double> max_seconds = 60.0;
            bool unlimited = false;
            int workers = 0;

            auto attach(CLI::App & app) -> void
            {
                app.add_option("--max-nodes", max_nodes, "Node budget (default 1e8)");
                app.add_option("--max-seconds", max_seconds, "Wall-clock budget in seconds (default 60)");
                app.add_flag("--unlimited", unlimited, "Search without node or time limits");
                app.add_option("--workers", workers, "Worker threads (default: hardware concurrency)")->check(CLI::NonNegativeNumber);
            }

            auto budget() const -> SearchBudget
            {
                SearchBudget b;
                if (! unlimited) {
                    if (max_nodes && *max_nodes > 0)
                        b.max_nodes = *max_nodes;
                    if (max_seconds && *max_seconds > 0)
                        b.max_time = std::chrono::milliseconds(static_cast<long long>(*max_seconds * 1000));
                }
                b.workers = workers > 0 ? workers : std::max(1u, std::thread::hardware_concurrency());
                return b;
            }

            auto to_json() const -> json
            {
                auto b = budget();
                return json{
                    {"max_nodes", b.max_nodes ? json(*b.max_nodes) : json(nullptr)},
                    {"max_seconds", b.max_time ? json(b.max_time->count() / 1000.0) : json(nullptr)}};
            }
        };

        class Context
        {
            public:
                auto q_resolver() -> QResolver
                {
                    return [this] {
                        if (! _q)
                            _q = reconstruct_q().graph;
                        return *_q;
                    };
                }

                auto load(const GraphSource & src) -> Graph
                {
                    int given = ! src.expression.empty() + ! src.graph6.empty() + ! src.file.empty();
                    if (given != 1)
                        throw Exit{exit_usage, "exactly one graph source required (expression, --graph6 or --graph-file)"};
                    if (! src.graph6.empty())
                        return parse_graph6(src.graph6);
                    if (! src.file.empty()) {
                        std::ifstream in(src.file);
                        if (! in)
                            throw Exit{exit_usage, "cannot open graph file '" + src.file + "'"};
                        string line;
                        while (std::getline(in, line))
                            if (line.find_first_not_of(" \t\r") != string::npos)
                                return parse_graph6(line);
                        throw Exit{exit_usage, "graph file '" + src.file + "' is empty"};
                    }
                    return parse_expression(src.expression, q_resolver());
                }

            private:
                optional<Graph> _q;
        };

        auto describe(const Graph & g) -> string
        {
            return "order " + std::to_string(g.order()) + ", " + std::to_string(g.edge_count()) + " edges, graph6 " + emit_graph6(g);
        }

        auto print_witness(ostream & out, const ArrowVerdict & v, int colours) -> void
        {
            if (auto w = v.vertex_witness())
                for (int c = 1 ; c <= colours ; ++c) {
                    out << "  colour " << c << ":";
                    for (std::size_t i = 0 ; i < w->colours.size() ; ++i)
                        if (w->colours[i] == c)
                            out << ' ' << i;
                    out << '\n';
                }
            if (auto w = v.edge_witness())
                for (int c = 1 ; c <= colours ; ++c) {
                    out << "  colour " << c << ":";
                    for (std::size_t i = 0 ; i < w->edges.size() ; ++i)
                        if (w->colours[i] == c)
                            out << ' ' << w->edges[i].u << '-' << w->edges[i].v;
                    out << '\n';
                }
        }

        auto print_check(ostream & out, const HypothesisCheck & c) -> void
        {
            out << "  [" << std::setw(7) << std::left << to_string(c.status) << "] " << c.label << ": " << c.statement;
            if (c.informational)
                out << " (informational)";
            if (c.evidence.contains("text"))
                out << "  -- " << c.evidence["text"].get<string>();
            else if (c.evidence.contains("verdict"))
                out << "  -- " << c.evidence["verdict"]["outcome"].get<string>()
                    << " after " << c.evidence["verdict"]["stats"]["nodes"].get<std::uint64_t>() << " nodes";
            else if (c.evidence.contains("clique_number"))
                out << "  -- clique number " << c.evidence["clique_number"].get<int>();
            else if (c.evidence.contains("independence_number"))
                out << "  -- independence number " << c.evidence["independence_number"].get<int>();
            out << '\n';
        }

        auto print_report(ostream & out, const TheoremReport & r) -> void
        {
            auto j = r.to_json();
            out << "theorem " << r.theorem << " certification\n";
            out << "instance: " << j["instance"].dump() << '\n';
            out << "checks:\n";
            for (auto & c : r.checks)
                print_check(out, c);
            auto & k = j["construction"];
            out << "construction: " << k["description"].get<string>() << ", order " << k["order"].get<int>()
                << ", clique number " << k["clique_number"].get<int>() << (k["clique_below_q"].get<bool>() ? " < " : " >= ")
                << k["q"].get<int>() << " = q\n";
            out << "bound: " << r.bound.text() << '\n';
            out << "overall: " << to_string(r.overall) << '\n';
        }

        auto emit_json(ostream & out, const json & j) -> void
        {
            out << j.dump(2) << '\n';
        }

        auto parse_outcome(const string & s) -> Outcome
        {
            if (s == "arrows")
                return Outcome::arrows;
            if (s == "free")
                return Outcome::free;
            if (s == "unknown")
                return Outcome::unknown;
            throw Exit{exit_usage, "--expect takes arrows, free or unknown, got '" + s + "'"};
        }

        auto recheck(const Graph & g, const ArrowTuple & t, const ArrowVerdict & v) -> bool
        {
            if (auto w = v.vertex_witness())
                return check_vertex_colouring_free(g, t, *w);
            if (auto w = v.edge_witness())
                return check_edge_colouring_free(g, t, *w);
            return true;
        }

        auto load_registry(const string & path) -> Registry
        {
            return path.empty() ? Registry::from_environment() : Registry::load(path);
        }
    }

    auto run(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        CLI::App app{"folklab: edge and vertex Folkman arrowing laboratory", "folklab"};
        app.require_subcommand(1);
        app.set_version_flag("--version", string(tool_version));

        bool as_json = false;
        string registry_file;
        Context context;
        app.add_option("--registry", registry_file, "Registry table file (default: $FOLKLAB_REGISTRY or the built-in table)");
        auto registry = [&] { return load_registry(registry_file); };

        // arrow-edge / arrow-vertex
        struct
        {
            GraphSource graph;
            string tuple, tuple_positional, expect;
            BudgetFlags budget;
            bool recheck = false;
        } arrow;
        auto add_arrow = [&] (const string & name, const string & help) {
            auto * sub = app.add_subcommand(name, help);
            arrow.graph.attach(*sub, "EXPR");
            sub->add_option("TUPLE", arrow.tuple_positional, "Tuple such as 3,4");
            sub->add_option("--tuple", arrow.tuple, "Tuple such as 3,4");
            sub->add_option("--expect", arrow.expect, "Exit 3 unless the outcome is arrows, free or unknown");
            sub->add_flag("--recheck", arrow.recheck, "Re-validate any witness with the independent checker");
            sub->add_flag("--json", as_json, "Emit JSON");
            arrow.budget.attach(*sub);
            return sub;
        };
        auto * arrow_edge = add_arrow("arrow-edge", "Decide G ->e (a_1,...,a_r)");
        auto * arrow_vertex = add_arrow("arrow-vertex", "Decide G ->v (a_1,...,a_r)");

        struct
        {
            GraphSource graph;
            optional<int> expect;
        } clique;
        auto * clique_cmd = app.add_subcommand("clique", "Clique and independence numbers");
        clique.graph.attach(*clique_cmd, "EXPR");
        clique_cmd->add_option("--expect", clique.expect, "Exit 3 unless the clique number equals this");
        clique_cmd->add_flag("--json", as_json, "Emit JSON");

        struct
        {
            GraphSource graph;
            string emit = "summary";
        } build;
        auto * build_cmd = app.add_subcommand("build", "Evaluate a construction expression");
        build.graph.attach(*build_cmd, "EXPR");
        build_cmd->add_option("--emit", build.emit, "summary, graph6 or edges")->check(CLI::IsMember({"summary", "graph6", "edges"}));
        build_cmd->add_flag("--json", as_json, "Emit JSON");

        struct
        {
            GraphSource graph;
            string tuple, tuple_positional, mode = "edge", output;
        } cnf;
        auto * cnf_cmd = app.add_subcommand("cnf", "Export a two-colour free-colouring instance as DIMACS CNF");
        cnf.graph.attach(*cnf_cmd, "EXPR");
        cnf_cmd->add_option("TUPLE", cnf.tuple_positional, "Tuple such as 3,3");
        cnf_cmd->add_option("--tuple", cnf.tuple, "Tuple such as 3,3");
        cnf_cmd->add_option("--mode", cnf.mode, "vertex or edge")->check(CLI::IsMember({"vertex", "edge"}));
        cnf_cmd->add_option("--out", cnf.output, "Write DIMACS here instead of standard output");
        cnf_cmd->add_flag("--json", as_json, "Emit JSON");

        struct
        {
            int a = 5, alpha = 0;
            string u = "Q", u_graph6, expect;
            BudgetFlags budget;
        } thm1;
        auto * thm1_cmd = app.add_subcommand("certify-thm1", "Check the hypotheses of the K_{R-2a+alpha+4} + U construction");
        thm1_cmd->add_option("--a", thm1.a, "Clique size a (>= 4)");
        thm1_cmd->add_option("--alpha", thm1.alpha, "Non-negative alpha");
        thm1_cmd->add_option("--U", thm1.u, "Expression for U (default Q)");
        thm1_cmd->add_option("--U-graph6", thm1.u_graph6, "U as a graph6 line");
        thm1_cmd->add_option("--expect", thm1.expect, "Exit 3 unless overall equals certified, refuted-hypothesis or inconclusive");
        thm1_cmd->add_flag("--json", as_json, "Emit JSON");
        thm1.budget.attach(*thm1_cmd);

        struct
        {
            string q = "Q", q_graph6, expect;
            bool no_probes = false;
            double full_run_seconds = 0;
            BudgetFlags budget;
        } thm2;
        auto * thm2_cmd = app.add_subcommand("certify-thm2", "Check the structural facts behind K_12 + Q ->e (4,4)");
        thm2_cmd->add_option("--Q", thm2.q, "Expression for Q (default: the reconstructed Q)");
        thm2_cmd->add_option("--Q-graph6", thm2.q_graph6, "Q as a graph6 line");
        thm2_cmd->add_flag("--no-probes", thm2.no_probes, "Skip the Q ->e (3,4) and Q ->v (4,4) probes");
        thm2_cmd->add_option("--full-run-seconds", thm2.full_run_seconds, "Also run K_12 + Q ->e (4,4) for this many seconds");
        thm2_cmd->add_option("--expect", thm2.expect, "Exit 3 unless overall equals the given value");
        thm2_cmd->add_flag("--json", as_json, "Emit JSON");
        thm2.budget.attach(*thm2_cmd);

        auto * registry_cmd = app.add_subcommand("registry", "List known Ramsey values and Folkman bounds");
        registry_cmd->add_flag("--json", as_json, "Emit JSON");

        struct
        {
            vector<string> entries;
            bool strict = false;
            BudgetFlags budget;
        } verify;
        auto * verify_cmd = app.add_subcommand("verify-known", "Re-verify small registry entries by search");
        verify_cmd->add_option("--entry", verify.entries, "Only entries whose statement contains this text, e.g. \"R(3,4)\"");
        verify_cmd->add_flag("--strict", verify.strict, "Exit 3 on any failed entry, 4 on any undecided one");
        verify_cmd->add_flag("--json", as_json, "Emit JSON");
        verify.budget.attach(*verify_cmd);

        vector<const char *> argv;
        for (auto & a : args)
            argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::CallForAllHelp &) {
            out << app.help("", CLI::AppFormatMode::All);
            return exit_ok;
        }
        catch (const CLI::CallForVersion &) {
            out << tool_version << '\n';
            return exit_ok;
        }
        catch (const CLI::ParseError & e) {
            err << "folklab: " << e.what() << '\n';
            return exit_usage;
        }

        try {
            if (arrow_edge->parsed() || arrow_vertex->parsed()) {
                Mode mode = arrow_edge->parsed() ? Mode::edge : Mode::vertex;
                string command = arrow_edge->parsed() ? "arrow-edge" : "arrow-vertex";
                if (arrow.tuple.empty() == arrow.tuple_positional.empty())
                    throw Exit{exit_usage, "give the tuple exactly once (positional or --tuple)"};
                auto tuple = ArrowTuple::parse(arrow.tuple.empty() ? arrow.tuple_positional : arrow.tuple);
                optional<Outcome> expected;
                if (! arrow.expect.empty())
                    expected = parse_outcome(arrow.expect);

                Graph g = context.load(arrow.graph);
                auto budget = arrow.budget.budget();
                auto verdict = decide(mode, g, tuple, budget);

                optional<bool> rechecked;
                if (arrow.recheck && verdict.outcome == Outcome::free)
                    rechecked = recheck(g, tuple, verdict);

                if (as_json) {
                    json j{
                        {"command", command},
                        {"graph", graph_json(g)},
                        {"mode", to_string(mode)},
                        {"tuple", tuple.entries()},
                        {"budget", arrow.budget.to_json()},
                        {"workers", budget.workers}};
                    j.update(verdict_json(verdict, true));
                    if (rechecked)
                        j["witness_rechecked"] = *rechecked;
                    emit_json(out, j);
                }
                else {
                    out << "graph: " << describe(g) << '\n';
                    out << "relation: G ->" << (mode == Mode::edge ? "e" : "v") << " (" << tuple.to_string() << ")\n";
                    out << "outcome: " << to_string(verdict.outcome) << '\n';
                    out << "nodes: " << verdict.stats.nodes << " (" << verdict.stats.subtrees << " subtrees";
                    if (verdict.outcome == Outcome::unknown)
                        out << ", " << verdict.stats.frontier << " undecided";
                    out << ")\n";
                    out << "time: " << std::fixed << std::setprecision(3) << verdict.stats.seconds << " s\n";
                    if (verdict.outcome == Outcome::free) {
                        out << "free colouring:\n";
                        print_witness(out, verdict, tuple.size());
                    }
                    if (rechecked)
                        out << "witness recheck: " << (*rechecked ? "ok" : "FAILED") << '\n';
                }

                if (rechecked && ! *rechecked) {
                    err << "folklab: witness failed independent recheck\n";
                    return exit_validation;
                }
                if (expected) {
                    if (verdict.outcome == *expected)
                        return exit_ok;
                    if (verdict.outcome == Outcome::unknown)
                        return exit_budget;
                    err << "folklab: expected " << to_string(*expected) << ", got " << to_string(verdict.outcome) << '\n';
                    return exit_mismatch;
                }
                return verdict.outcome == Outcome::unknown ? exit_budget : exit_ok;
            }

            if (clique_cmd->parsed()) {
                Graph g = context.load(clique.graph);
                auto cl = clique_number(g);
                auto ind = independence_number(g);
                if (as_json)
                    emit_json(out, json{
                            {"command", "clique"},
                            {"graph", graph_json(g)},
                            {"clique_number", cl.size},
                            {"clique_witness", cl.witness.members()},
                            {"independence_number", ind.size},
                            {"independence_witness", ind.witness.members()}});
                else {
                    out << "graph: " << describe(g) << '\n';
                    out << "clique number: " << cl.size << " {";
                    for (int v : cl.witness.members())
                        out << ' ' << v;
                    out << " }\nindependence number: " << ind.size << " {";
                    for (int v : ind.witness.members())
                        out << ' ' << v;
                    out << " }\n";
                }
                if (clique.expect && *clique.expect != cl.size) {
                    err << "folklab: expected clique number " << *clique.expect << ", got " << cl.size << '\n';
                    return exit_mismatch;
                }
                return exit_ok;
            }

            if (build_cmd->parsed()) {
                Graph g = context.load(build.graph);
                if (as_json) {
                    json edges = json::array();
                    for (auto & e : g.edges())
                        edges.push_back(json::array({e.u, e.v}));
                    auto j = graph_json(g);
                    j["command"] = "build";
                    j["edge_list"] = edges;
                    emit_json(out, j);
                }
                else if (build.emit == "graph6")
                    out << emit_graph6(g) << '\n';
                else if (build.emit == "edges") {
                    for (auto & e : g.edges())
                        out << e.u << ' ' << e.v << '\n';
                }
                else
                    out << "graph: " << describe(g) << '\n';
                return exit_ok;
            }

            if (cnf_cmd->parsed()) {
                if (cnf.tuple.empty() == cnf.tuple_positional.empty())
                    throw Exit{exit_usage, "give the tuple exactly once (positional or --tuple)"};
                auto tuple = ArrowTuple::parse(cnf.tuple.empty() ? cnf.tuple_positional : cnf.tuple);
                Graph g = context.load(cnf.graph);
                auto doc = export_cnf(g, tuple, cnf.mode == "vertex" ? Mode::vertex : Mode::edge);
                auto text = doc.to_dimacs();
                if (! cnf.output.empty()) {
                    std::ofstream file(cnf.output);
                    if (! file)
                        throw Exit{exit_usage, "cannot write '" + cnf.output + "'"};
                    file << text;
                }
                if (as_json)
                    emit_json(out, json{
                            {"command", "cnf"},
                            {"graph", graph_json(g)},
                            {"mode", cnf.mode},
                            {"tuple", tuple.entries()},
                            {"variables", doc.variables},
                            {"clauses", doc.clauses.size()},
                            {"dimacs", cnf.output.empty() ? json(text) : json(nullptr)},
                            {"output", cnf.output.empty() ? json(nullptr) : json(cnf.output)}});
                else if (cnf.output.empty())
                    out << text;
                else
                    out << "wrote " << doc.variables << " variables, " << doc.clauses.size() << " clauses to " << cnf.output << '\n';
                return exit_ok;
            }

            auto finish_report = [&] (const string & command, const TheoremReport & report, const string & expect) {
                if (as_json) {
                    auto j = report.to_json();
                    j["command"] = command;
                    emit_json(out, j);
                }
                else
                    print_report(out, report);
                if (! expect.empty() && to_string(report.overall) != expect) {
                    err << "folklab: expected overall " << expect << ", got " << to_string(report.overall) << '\n';
                    return int(exit_mismatch);
                }
                return int(exit_ok);
            };

            if (thm1_cmd->parsed()) {
                TheoremInstance inst;
                inst.a = thm1.a;
                inst.alpha = thm1.alpha;
                if (! thm1.u_graph6.empty()) {
                    inst.u = parse_graph6(thm1.u_graph6);
                    inst.u_label = thm1.u_graph6;
                }
                else {
                    inst.u = parse_expression(thm1.u, context.q_resolver());
                    inst.u_label = thm1.u;
                }
                auto report = certify_theorem1(inst, registry(), thm1.budget.budget());
                return finish_report("certify-thm1", report, thm1.expect);
            }

            if (thm2_cmd->parsed()) {
                Graph q = thm2.q_graph6.empty() ? parse_expression(thm2.q, context.q_resolver()) : parse_graph6(thm2.q_graph6);
                Theorem2Options options;
                options.probe_edge_34 = options.probe_vertex_44 = ! thm2.no_probes;
                if (thm2.full_run_seconds > 0) {
                    SearchBudget full;
                    full.max_time = std::chrono::milliseconds(static_cast<long long>(thm2.full_run_seconds * 1000));
                    full.workers = thm2.budget.budget().workers;
                    options.full_run = full;
                }
                auto report = certify_theorem2(q, registry(), thm2.budget.budget(), options);
                return finish_report("certify-thm2", report, thm2.expect);
            }

            if (registry_cmd->parsed()) {
                auto r = registry();
                if (as_json) {
                    json entries = json::array();
                    for (auto & e : r.entries())
                        entries.push_back(e.to_json());
                    emit_json(out, json{{"command", "registry"}, {"registry-snapshot-hash", r.snapshot_hash()}, {"entries", entries}});
                }
                else {
                    out << "registry snapshot " << r.snapshot_hash() << '\n';
                    for (auto & e : r.entries())
                        out << "  " << std::setw(22) << std::left << e.statement() << std::setw(20) << to_string(e.provenance)
                            << e.source << '\n';
                }
                return exit_ok;
            }

            if (verify_cmd->parsed()) {
                auto r = registry();
                auto budget = verify.budget.budget();
                json checks = json::array();
                bool any_fail = false, any_unknown = false;
                for (std::size_t i = 0 ; i < r.entries().size() ; ++i) {
                    auto statement = r.entries()[i].statement();
                    if (! verify.entries.empty() && std::none_of(verify.entries.begin(), verify.entries.end(),
                                [&] (const string & s) { return statement.find(s) != string::npos; }))
                        continue;
                    auto check = r.verify_small(i, budget);
                    any_fail |= check.status == CheckStatus::fail;
                    any_unknown |= check.status == CheckStatus::unknown;
                    auto j = to_json(check);
                    j["provenance"] = to_string(r.entries()[i].provenance);
                    checks.push_back(j);
                    if (! as_json)
                        out << "  [" << std::setw(7) << std::left << to_string(check.status) << "] " << statement
                            << "  -> " << to_string(r.entries()[i].provenance) << '\n';
                }
                if (as_json)
                    emit_json(out, json{{"command", "verify-known"}, {"registry-snapshot-hash", r.snapshot_hash()},
                            {"budget", verify.budget.to_json()}, {"checks", checks}});
                if (verify.strict && any_fail)
                    return exit_mismatch;
                if (verify.strict && any_unknown)
                    return exit_budget;
                return exit_ok;
            }
        }
        catch (const Exit & e) {
            err << "folklab: " << e.message << '\n';
            return e.code;
        }
        catch (const ValidationError & e) {
            err << "folklab: " << e.what() << '\n';
            return exit_validation;
        }
        catch (const std::exception & e) {
            err << "folklab: error: " << e.what() << '\n';
            return exit_usage;
        }
        return exit_usage;
    }
}
