// Command-line front end: every subcommand reads/writes the JSON formats of
// json_io.hpp and exits 0 on success, 1 on invalid input, 2 on an exhausted
// search budget (partial results still emitted), 3 on an internal
// consistency failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "arith/critgroup.hpp"
#include "arith/egyptian.hpp"
#include "arith/enumerate.hpp"
#include "arith/errors.hpp"
#include "arith/extend.hpp"
#include "arith/json_io.hpp"
#include "arith/structures.hpp"

namespace {

using namespace arith;

int log_level() {
    const char* env = std::getenv("ARITH_LOG");
    return env ? std::atoi(env) : 0;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[arith] " << msg << "\n";
}

void emit(const Json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

// Renders a structure as an aligned table; everything else stays JSON.
void emit_structure_table(const Multigraph& g, const RationalStructure& s) {
    size_t width = 6;
    for (const auto& v : g.vertices()) width = std::max(width, v.size());
    std::cout << std::string(width, ' ') << "  d\tr\n";
    for (int i = 0; i < g.size(); ++i) {
        std::cout << g.label(i) << std::string(width - g.label(i).size(), ' ') << "  "
                  << s.d(i).str() << "\t" << s.r(i).get_str() << "\n";
    }
}

Multigraph load_graph(const std::string& path) {
    Multigraph g = graph_from_json(read_json_file(path));
    if (g.size() == 0) throw InvalidInput("graph has no vertices: " + path);
    return g;
}

RationalStructure load_structure(const Multigraph& g, const std::string& path) {
    return structure_from_json(g, read_json_file(path));
}

// "graph.json:structure.json:vertex" for glue factors.
GlueFactor parse_factor(const std::string& spec) {
    auto first = spec.find(':');
    auto second = spec.rfind(':');
    if (first == std::string::npos || second == first)
        throw InvalidInput("factor must be graph.json:structure.json:vertex, got '" + spec + "'");
    GlueFactor f;
    f.graph = load_graph(spec.substr(0, first));
    f.structure = load_structure(f.graph, spec.substr(first + 1, second - first - 1));
    f.vertex = spec.substr(second + 1);
    f.graph.index_of(f.vertex);
    return f;
}

Rat random_rat(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 25) - 12;
    if (num == 0) num = 1;
    long den = 1 + static_cast<long>(rng() % 9);
    return Rat(Int(num), Int(den));
}

int run(int argc, char** argv) {
    CLI::App app{"exact toolkit for arithmetical structures on multigraphs"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable rendering instead of compact JSON");

    std::string graph_path, structure_path, at_vertex, relaxed_csv;
    std::string left_spec, right_spec, strategy = "greedy", engine_name = "auto";
    long long r_max = 64, node_limit = 10'000'000, seed = 0, trials = 100;
    int threads = 1;

    auto* verify_cmd = app.add_subcommand("verify", "check a structure against a graph");
    verify_cmd->add_option("--graph", graph_path)->required();
    verify_cmd->add_option("--structure", structure_path)->required();
    verify_cmd->add_option("--relaxed", relaxed_csv,
                           "comma-separated vertices exempt from integrality");

    auto* enum_cmd = app.add_subcommand("enumerate", "list structures as JSON lines");
    enum_cmd->add_option("--graph", graph_path)->required();
    enum_cmd->add_option("--r-max", r_max, "largest r entry searched");
    enum_cmd->add_option("--node-limit", node_limit, "search node budget");
    enum_cmd->add_option("--engine", engine_name)
        ->check(CLI::IsMember({"auto", "brute", "star", "tree"}));
    enum_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);

    auto* glue_cmd = app.add_subcommand("glue", "wedge two anchored structures");
    glue_cmd->add_option("--left", left_spec, "graph.json:structure.json:vertex")->required();
    glue_cmd->add_option("--right", right_spec, "graph.json:structure.json:vertex")->required();

    auto* split_cmd = app.add_subcommand("split", "factor a structure at a cut vertex");
    split_cmd->add_option("--graph", graph_path)->required();
    split_cmd->add_option("--structure", structure_path)->required();
    split_cmd->add_option("--at", at_vertex)->required();

    auto* extend_cmd =
        app.add_subcommand("extend", "complete a rational structure on a supergraph");
    extend_cmd->add_option("--graph", graph_path)->required();
    extend_cmd->add_option("--structure", structure_path)->required();
    extend_cmd->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"greedy", "repeat", "path"}));

    auto* crit_cmd = app.add_subcommand("critgroup", "invariant factors of the critical group");
    crit_cmd->add_option("--graph", graph_path)->required();
    crit_cmd->add_option("--structure", structure_path)->required();

    auto* det_cmd =
        app.add_subcommand("det-check", "determinant splitting identity at a cut vertex");
    det_cmd->add_option("--graph", graph_path)->required();
    det_cmd->add_option("--at", at_vertex)->required();
    det_cmd->add_option("--seed", seed)->required();
    det_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);

    auto* blocks_cmd = app.add_subcommand("blocks", "block decomposition and cut vertices");
    blocks_cmd->add_option("--graph", graph_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (verify_cmd->parsed()) {
        Multigraph g = load_graph(graph_path);
        RationalStructure s = load_structure(g, structure_path);
        std::vector<VertexId> relaxed = s.relaxed;
        if (!relaxed_csv.empty()) {
            std::stringstream ss(relaxed_csv);
            std::string item;
            while (std::getline(ss, item, ',')) relaxed.push_back(item);
        }
        VerifyReport rep = verify_rational(g, relaxed, s.d, s.r);
        emit(to_json(g, rep), pretty);
        return rep.valid() ? 0 : 1;
    }

    if (enum_cmd->parsed()) {
        Multigraph g = load_graph(graph_path);
        EnumerationBudget budget;
        budget.r_max = Int(static_cast<long>(r_max));
        budget.node_limit = node_limit;
        Engine engine = Engine::Auto;
        if (engine_name == "brute") engine = Engine::Brute;
        if (engine_name == "star") engine = Engine::Star;
        if (engine_name == "tree") engine = Engine::Tree;

        auto report = [&](const Enumeration& e, bool exhausted) {
            for (const auto& s : e.structures) emit(to_json(g, s), pretty);
            Json summary;
            summary["count"] = e.structures.size();
            summary["complete"] = e.full;
            summary["budget"] =
                Json{{"r_max", r_max}, {"node_limit", node_limit}, {"exhausted", exhausted}};
            emit(summary, pretty);
        };
        try {
            Enumeration e = enumerate_structures(g, budget, engine, threads);
            log_info("enumerated " + std::to_string(e.structures.size()) + " structures");
            report(e, false);
            return 0;
        } catch (const BudgetExhausted& ex) {
            log_info("node limit exhausted; emitting partial results");
            report(ex.partial, true);
            return 2;
        }
    }

    if (glue_cmd->parsed()) {
        GlueResult res = glue(parse_factor(left_spec), parse_factor(right_spec));
        if (pretty) {
            emit_structure_table(res.graph, res.structure);
            return 0;
        }
        Json j;
        j["graph"] = to_json(res.graph);
        j["structure"] = to_json(res.graph, res.structure);
        j["merged"] = res.merged;
        Json left_names, right_names;
        for (const auto& [from, to] : res.left_names) left_names[from] = to;
        for (const auto& [from, to] : res.right_names) right_names[from] = to;
        j["left_names"] = std::move(left_names);
        j["right_names"] = std::move(right_names);
        emit(j, false);
        return 0;
    }

    if (split_cmd->parsed()) {
        Multigraph g = load_graph(graph_path);
        ArithmeticalStructure s = as_arithmetical(load_structure(g, structure_path));
        auto parts = split(g, at_vertex, s);
        Json out = Json::array();
        for (const auto& p : parts) {
            Json j;
            j["graph"] = to_json(p.graph);
            j["structure"] = to_json(p.graph, p.structure);
            out.push_back(std::move(j));
        }
        emit(out, pretty);
        return 0;
    }

    if (extend_cmd->parsed()) {
        Multigraph g = load_graph(graph_path);
        RationalStructure s = load_structure(g, structure_path);
        Extension ext =
            strategy == "path"
                ? extend_path(g, s)
                : extend_star(g, s,
                              strategy == "repeat" ? EgyptianStrategy::Repeat
                                                   : EgyptianStrategy::Greedy);
        if (pretty) {
            emit_structure_table(ext.graph, as_rational(ext.structure));
            return 0;
        }
        Json j;
        j["graph"] = to_json(ext.graph);
        j["structure"] = to_json(ext.graph, ext.structure);
        j["added"] = ext.added;
        emit(j, false);
        return 0;
    }

    if (crit_cmd->parsed()) {
        Multigraph g = load_graph(graph_path);
        ArithmeticalStructure s = as_arithmetical(load_structure(g, structure_path));
        GroupInvariants inv = critical_group(g, s);
        if (is_tree(g)) {
            // Independent cross-check available on trees.
            Int expected = tree_order_formula(g, s);
            if (expected != group_order(inv))
                throw InternalError("tree order formula disagrees with the Smith normal form");
        }
        emit(to_json(inv), pretty);
        return 0;
    }

    if (det_cmd->parsed()) {
        Multigraph g = load_graph(graph_path);
        int vi = g.index_of(at_vertex);
        std::mt19937_64 rng(static_cast<unsigned long long>(seed));
        Json j;
        j["at"] = at_vertex;
        j["seed"] = seed;
        j["trials"] = trials;
        for (long long t = 0; t < trials; ++t) {
            RatVector x(g.size());
            for (int i = 0; i < g.size(); ++i) x(i) = random_rat(rng);
            Rat t1 = random_rat(rng), t2 = random_rat(rng);
            DetIdentity id = det_identity(g, at_vertex, x, t1, t2);
            if (!id.holds()) {
                Json cx;
                Json assign;
                for (int i = 0; i < g.size(); ++i)
                    if (i != vi) assign[g.label(i)] = x(i).str();
                cx["assignment"] = std::move(assign);
                cx["t1"] = t1.str();
                cx["t2"] = t2.str();
                cx["lhs"] = id.lhs.str();
                cx["rhs"] = id.rhs.str();
                j["all_equal"] = false;
                j["counterexample"] = std::move(cx);
                emit(j, pretty);
                return 3;
            }
        }
        j["all_equal"] = true;
        emit(j, pretty);
        return 0;
    }

    if (blocks_cmd->parsed()) {
        Multigraph g = load_graph(graph_path);
        emit(to_json(blocks_and_cut_vertices(g)), pretty);
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InternalError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
