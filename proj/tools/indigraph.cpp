// indigraph: build, analyze and verify independence graphs of finite groups.

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "indep/error.hpp"
#include "indep/io.hpp"
#include "indep/verify.hpp"

using namespace indep;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3;

struct GraphOptions {
    std::string group;
    std::string kind = "full";
    std::size_t u = 0;
    bool induced = false;
    std::string out;
    std::string format;
    std::uint64_t budget_nodes = SearchLimits{}.node_budget;
    std::size_t max_order = 1024;
};

CatalogEntry entry_for(const std::string& spec) {
    if (fs::is_regular_file(spec)) return {fs::path(spec).filename().string(), "", spec, ""};
    return resolve_group(spec);
}

GraphKind parse_kind(const std::string& k) {
    if (k == "full") return GraphKind::Full;
    if (k == "rank") return GraphKind::Rank;
    if (k == "swap") return GraphKind::Swap;
    throw CLI::ValidationError("--kind", "expected full, rank or swap, got " + k);
}

struct Built {
    FiniteGroup group;
    IndependenceGraph graph;
};

Built build(const GraphOptions& o) {
    FiniteGroup g = load_group(entry_for(o.group), o.max_order);
    SubgroupLattice lat(g);
    const GraphKind kind = parse_kind(o.kind);
    SearchLimits limits;
    limits.node_budget = o.budget_nodes;
    std::size_t u = o.u;
    if (kind == GraphKind::Rank && u == 0) throw CLI::ValidationError("--u", "--kind rank needs --u >= 1");
    if (kind == GraphKind::Swap && u == 0) u = relative_rank(lat, {}, limits);
    return {g, build_graph(lat, kind, u, o.induced, limits)};
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_text_file(out, text);
}

std::string infer_format(const std::string& format, const std::string& out, const std::string& fallback) {
    if (!format.empty()) return format;
    const auto ext = fs::path(out).extension().string();
    if (ext == ".dot" || ext == ".gv") return "dot";
    if (ext == ".json") return "json";
    if (ext == ".csv") return "csv";
    return fallback;
}

const std::vector<ElementSet>* classes_for(const FiniteGroup& g, const IndependenceGraph& graph,
                                           std::vector<ElementSet>& storage) {
    if (graph.kind == GraphKind::Swap) return nullptr;
    storage = class_partition(g);
    return &storage;
}

int cmd_graph(const GraphOptions& o) {
    auto b = build(o);
    const auto format = infer_format(o.format, o.out, "dot");
    std::vector<ElementSet> classes;
    if (format == "dot")
        emit(export_dot(b.graph, b.group, classes_for(b.group, b.graph, classes)), o.out);
    else if (format == "json")
        emit(graph_to_json(b.graph, b.group).dump(2) + "\n", o.out);
    else
        throw CLI::ValidationError("--format", "graph supports dot or json");
    return kOk;
}

std::string join_sizes(const std::vector<std::size_t>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "}";
}

int cmd_analyze(const GraphOptions& o) {
    auto b = build(o);
    std::vector<ElementSet> classes;
    const auto report = analyze(b.graph, classes_for(b.group, b.graph, classes));
    const auto format = infer_format(o.format, o.out, "text");
    if (format == "json") {
        emit(report_to_json(report, b.graph, b.group).dump(2) + "\n", o.out);
        return kOk;
    }
    if (format != "text") throw CLI::ValidationError("--format", "analyze supports text or json");
    std::ostringstream out;
    out << "graph=" << report.graph_name << '\n'
        << "vertices=" << report.vertex_count << '\n'
        << "edges=" << report.edge_count << '\n'
        << "components=" << report.components.count() << '\n'
        << "planar=" << (report.planarity.planar ? "true" : "false") << '\n'
        << "clique_number=" << report.clique.size << '\n'
        << "independence_number=" << report.independent.size << '\n';
    if (report.hamilton) {
        const auto s = report.hamilton->status;
        out << "hamiltonian=" << (s == HamiltonStatus::Yes ? "yes" : s == HamiltonStatus::No ? "no" : "unknown")
            << '\n';
    } else {
        out << "hamiltonian=n/a\n";
    }
    out << "parts=" << (report.multipartite.parts ? join_sizes(*report.multipartite.parts) : "none") << '\n';
    emit(out.str(), o.out);
    return kOk;
}

std::vector<CatalogEntry> catalog_for(const std::string& spec, std::size_t max_order) {
    if (spec.empty() || spec == "default") return default_catalog(max_order);
    return load_catalog_file(spec);
}

int cmd_verify(const std::string& catalog, const std::string& group, std::size_t max_order, const std::string& suite,
               const std::string& report_path, const std::string& format_opt, bool timing, std::uint64_t budget) {
    std::vector<CatalogEntry> entries =
        group.empty() ? catalog_for(catalog, max_order) : std::vector<CatalogEntry>{entry_for(group)};
    std::vector<CheckId> checks;
    if (suite == "all") {
        checks = all_checks();
    } else {
        std::stringstream ss(suite);
        std::string name;
        while (std::getline(ss, name, ',')) {
            auto id = parse_check(name);
            if (!id) throw CLI::ValidationError("--suite", "unknown check " + name);
            checks.push_back(*id);
        }
    }
    VerifyLimits limits;
    limits.max_order = max_order;
    limits.search.node_budget = budget;
    const auto report = run_suite(entries, checks, limits);

    const auto format = infer_format(format_opt, report_path, "json");
    std::string text;
    if (format == "json")
        text = report_to_json(report, timing).dump(2) + "\n";
    else if (format == "csv")
        text = report_to_csv(report);
    else
        throw CLI::ValidationError("--format", "verify supports json or csv");
    if (!report_path.empty()) write_text_file(report_path, text);

    std::cerr << "entries=" << report.entries.size() << " pass=" << report.count(CheckStatus::Pass)
              << " fail=" << report.count(CheckStatus::Fail)
              << " observation=" << report.count(CheckStatus::Observation)
              << " skipped-not-applicable=" << report.count(CheckStatus::SkippedNotApplicable)
              << " skipped-budget=" << report.count(CheckStatus::SkippedBudget) << '\n';
    for (const auto* f : report.failures())
        std::cerr << "FAIL " << f->group << " " << to_string(f->check) << " " << f->witness.dump() << '\n';
    if (report_path.empty()) std::cout << text;
    return report.failures().empty() ? kOk : kCheckFailed;
}

int cmd_catalog_list(const std::string& catalog, std::size_t max_order) {
    for (const auto& e : catalog_for(catalog, max_order)) {
        std::cout << e.name << '\t' << (e.recipe.empty() ? e.cayley_path : e.recipe);
        if (!e.iso_tag.empty()) std::cout << "\t[" << e.iso_tag << "]";
        std::cout << '\n';
    }
    return kOk;
}

int cmd_import(const std::string& path, const std::string& out) {
    FiniteGroup g = import_cayley(path);
    const auto f = structure_flags(g);
    std::cerr << "order=" << g.order() << " abelian=" << g.is_abelian() << " cyclic=" << f.is_cyclic
              << " nilpotent=" << f.is_nilpotent << " soluble=" << f.is_soluble << '\n';
    emit(write_cayley(g), out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independence graphs of finite groups"};
    app.require_subcommand(1);

    GraphOptions go;
    auto add_graph_options = [&](CLI::App* sub) {
        sub->add_option("--group", go.group, "group: catalog name, alias (sym4, cyclic15, ...), recipe or Cayley file")
            ->required();
        sub->add_option("--kind", go.kind, "full | rank | swap")->check(CLI::IsMember({"full", "rank", "swap"}));
        sub->add_option("--u", go.u, "rank u (or tuple length for swap)");
        sub->add_flag("--induced", go.induced, "drop isolated vertices (Delta form)");
        sub->add_option("--out", go.out, "output file (default stdout)");
        sub->add_option("--budget-nodes", go.budget_nodes, "backtracking node budget");
        sub->add_option("--max-order", go.max_order, "largest group order accepted");
    };
    auto* graph = app.add_subcommand("graph", "build a graph and export it");
    add_graph_options(graph);
    graph->add_option("--format", go.format, "dot | json")->check(CLI::IsMember({"dot", "json"}));

    auto* an = app.add_subcommand("analyze", "exact analysis of one graph");
    add_graph_options(an);
    an->add_option("--format", go.format, "text | json")->check(CLI::IsMember({"text", "json"}));

    std::string catalog = "default", group, suite = "all", report, format;
    std::size_t max_order = 48;
    std::uint64_t budget = SearchLimits{}.node_budget;
    bool timing = false;
    auto* ver = app.add_subcommand("verify", "run the claims suite over a catalog");
    ver->add_option("--catalog", catalog, "'default' or a catalog JSON file");
    ver->add_option("--group", group, "verify a single group instead of a catalog");
    ver->add_option("--max-order", max_order, "skip groups above this order");
    ver->add_option("--suite", suite, "'all' or comma separated check names");
    ver->add_option("--report", report, "report file (default stdout)");
    ver->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    ver->add_option("--budget-nodes", budget, "backtracking node budget");
    ver->add_flag("--timing", timing, "record elapsed_ms in the report");

    auto* cat = app.add_subcommand("catalog", "catalog operations");
    cat->require_subcommand(1);
    auto* list = cat->add_subcommand("list", "list catalog groups");
    std::string list_catalog = "default";
    std::size_t list_max = 48;
    list->add_option("--catalog", list_catalog, "'default' or a catalog JSON file");
    list->add_option("--max-order", list_max, "largest order listed (default catalog)");

    std::string import_path, import_out;
    auto* imp = app.add_subcommand("import", "validate a Cayley table file and print it normalized");
    imp->add_option("path", import_path, "Cayley table file")->required();
    imp->add_option("--out", import_out, "write the normalized table here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : kUsage;
    }

    try {
        if (graph->parsed()) return cmd_graph(go);
        if (an->parsed()) return cmd_analyze(go);
        if (ver->parsed()) return cmd_verify(catalog, group, max_order, suite, report, format, timing, budget);
        if (list->parsed()) return cmd_catalog_list(list_catalog, list_max);
        if (imp->parsed()) return cmd_import(import_path, import_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::BudgetExceeded ? kBudget : kUsage;
    }
    return kUsage;
}
