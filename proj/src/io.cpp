#include "indep/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "indep/error.hpp"

namespace indep {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void malformed(const std::string& source, std::size_t line, const std::string& what) {
    throw Error(ErrorKind::MalformedTable, source + ":" + std::to_string(line) + ": " + what,
                {static_cast<std::int64_t>(line)});
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

json element_json(const FiniteGroup& g, Element x) { return json::array({x, g.label(x)}); }

json vertex_list_json(const IndependenceGraph& graph, const FiniteGroup& g, const std::vector<Vertex>& vs) {
    json out = json::array();
    const auto labels = graph.vertex_labels(g);
    for (Vertex v : vs) {
        if (graph.kind == GraphKind::Swap)
            out.push_back(json::array({v, labels[v]}));
        else
            out.push_back(element_json(g, graph.vertices[v]));
    }
    return out;
}

const char* to_string(HamiltonStatus s) {
    switch (s) {
        case HamiltonStatus::Yes: return "yes";
        case HamiltonStatus::No: return "no";
        case HamiltonStatus::Unknown: return "unknown";
    }
    return "?";
}

const char* to_string(Obstruction o) {
    switch (o) {
        case Obstruction::None: return "none";
        case Obstruction::K5: return "K5";
        case Obstruction::K33: return "K3,3";
    }
    return "?";
}

}  // namespace

FiniteGroup read_cayley(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t lineno = 0;
    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!trim(line).empty()) return true;
        }
        return false;
    };

    if (!next_content_line()) malformed(source, lineno + 1, "missing order line");
    long long n_raw = -1;
    {
        std::istringstream ls(line);
        if (!(ls >> n_raw) || n_raw <= 0) malformed(source, lineno, "order must be a positive integer");
        std::string rest;
        if (ls >> rest) malformed(source, lineno, "unexpected token after order");
    }
    const auto n = static_cast<std::size_t>(n_raw);

    CayleyTable table(n, std::vector<Element>(n));
    for (std::size_t r = 0; r < n; ++r) {
        if (!next_content_line())
            malformed(source, lineno + 1, "table truncated: expected " + std::to_string(n) + " rows, got " +
                                              std::to_string(r));
        std::istringstream ls(line);
        for (std::size_t c = 0; c < n; ++c) {
            long long v;
            if (!(ls >> v)) malformed(source, lineno, "row " + std::to_string(r) + " has fewer than n entries");
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                malformed(source, lineno, "entry " + std::to_string(v) + " out of range");
            table[r][c] = static_cast<Element>(v);
        }
        std::string rest;
        if (ls >> rest) malformed(source, lineno, "row " + std::to_string(r) + " has more than n entries");
    }

    std::vector<std::string> labels;
    while (next_content_line()) {
        std::istringstream ls(line);
        std::string kw;
        long long idx;
        ls >> kw;
        if (kw != "label" || !(ls >> idx)) malformed(source, lineno, "expected 'label <index> <text>'");
        if (idx < 0 || static_cast<std::size_t>(idx) >= n) malformed(source, lineno, "label index out of range");
        std::string text;
        std::getline(ls, text);
        text = trim(text);
        if (text.empty()) malformed(source, lineno, "empty label");
        if (labels.empty()) {
            labels.resize(n);
            for (std::size_t i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
        }
        labels[static_cast<std::size_t>(idx)] = text;
    }
    return FiniteGroup::from_table(table, std::move(labels), source);
}

FiniteGroup import_cayley(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    return read_cayley(in, path.string());
}

std::string write_cayley(const FiniteGroup& g) {
    std::ostringstream out;
    const std::size_t n = g.order();
    out << n << '\n';
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) out << (b ? " " : "") << g.mul(a, b);
        out << '\n';
    }
    for (Element a = 0; a < n; ++a) out << "label " << a << ' ' << g.label(a) << '\n';
    return out.str();
}

std::vector<CatalogEntry> parse_catalog(const json& doc, const std::filesystem::path& base_dir) {
    if (!doc.is_array()) throw Error(ErrorKind::Io, "catalog must be a JSON array");
    std::vector<CatalogEntry> out;
    std::set<std::string> names;
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("name") || !item["name"].is_string())
            throw Error(ErrorKind::Io, "catalog entry without a string \"name\"");
        CatalogEntry e;
        e.name = item["name"].get<std::string>();
        if (!names.insert(e.name).second) throw Error(ErrorKind::Io, "duplicate catalog name " + e.name);
        const bool has_recipe = item.contains("recipe"), has_table = item.contains("cayley");
        if (has_recipe == has_table)
            throw Error(ErrorKind::Io, "catalog entry " + e.name + " needs exactly one of recipe/cayley");
        if (has_recipe) {
            e.recipe = item["recipe"].get<std::string>();
        } else {
            std::filesystem::path p = item["cayley"].get<std::string>();
            e.cayley_path = (p.is_relative() && !base_dir.empty() ? base_dir / p : p).string();
        }
        if (item.contains("iso_tag")) e.iso_tag = item["iso_tag"].get<std::string>();
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CatalogEntry> load_catalog_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::Io, path.string() + ": " + ex.what());
    }
    return parse_catalog(doc, path.parent_path());
}

std::string export_dot(const IndependenceGraph& graph, const FiniteGroup& g, const std::vector<ElementSet>* classes) {
    static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                                    "#ffff33", "#a65628", "#f781bf", "#999999", "#66c2a5"};
    std::ostringstream out;
    out << "graph \"" << dot_escape(graph.name()) << "\" {\n";
    const auto labels = graph.vertex_labels(g);
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        out << "  " << v << " [label=\"" << dot_escape(labels[v]) << '"';
        if (classes && graph.kind != GraphKind::Swap) {
            for (std::size_t c = 0; c < classes->size(); ++c)
                if ((*classes)[c].contains(graph.vertices[v])) {
                    out << ", style=filled, fillcolor=\"" << palette[c % std::size(palette)] << "\", class=" << c;
                    break;
                }
        }
        out << "];\n";
    }
    for (auto [a, b] : graph.graph.edges()) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

json graph_to_json(const IndependenceGraph& graph, const FiniteGroup& g) {
    json out;
    out["name"] = graph.name();
    out["group"] = graph.group_id;
    out["kind"] = to_string(graph.kind);
    out["u"] = graph.u;
    out["induced"] = graph.induced;
    out["vertex_count"] = graph.vertex_count();
    if (graph.kind == GraphKind::Swap)
        out["tuples"] = graph.tuples;
    else
        out["vertices"] = graph.vertices;
    out["labels"] = graph.vertex_labels(g);
    json edges = json::array();
    for (auto [a, b] : graph.graph.edges()) edges.push_back({a, b});
    out["edges"] = std::move(edges);
    return out;
}

IndependenceGraph graph_from_json(const json& doc) {
    try {
        IndependenceGraph out;
        out.group_id = doc.at("group").get<std::string>();
        const auto kind = doc.at("kind").get<std::string>();
        if (kind == "full")
            out.kind = GraphKind::Full;
        else if (kind == "rank")
            out.kind = GraphKind::Rank;
        else if (kind == "swap")
            out.kind = GraphKind::Swap;
        else
            throw Error(ErrorKind::Io, "unknown graph kind " + kind);
        out.u = doc.at("u").get<std::size_t>();
        out.induced = doc.at("induced").get<bool>();
        const auto n = doc.at("vertex_count").get<std::size_t>();
        if (out.kind == GraphKind::Swap)
            out.tuples = doc.at("tuples").get<std::vector<std::vector<Element>>>();
        else
            out.vertices = doc.at("vertices").get<std::vector<Element>>();
        std::vector<Edge> edges;
        for (const auto& e : doc.at("edges")) {
            auto a = e.at(0).get<Vertex>(), b = e.at(1).get<Vertex>();
            if (a >= n || b >= n) throw Error(ErrorKind::Io, "edge endpoint out of range");
            edges.emplace_back(a, b);
        }
        out.graph = Graph::from_edges(n, std::move(edges));
        return out;
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::Io, std::string("malformed graph JSON: ") + ex.what());
    }
}

json report_to_json(const GraphReport& r, const IndependenceGraph& graph, const FiniteGroup& g) {
    json out;
    out["graph"] = r.graph_name;
    out["vertex_count"] = r.vertex_count;
    out["edge_count"] = r.edge_count;
    json comps = json::array();
    for (const auto& m : r.components.members) comps.push_back(m.size());
    out["components"] = {{"count", r.components.count()}, {"sizes", comps}};
    json planar = {{"planar", r.planarity.planar},
                   {"decided_by_edge_bound", r.planarity.decided_by_edge_bound},
                   {"obstruction", to_string(r.planarity.obstruction)}};
    if (!r.planarity.kuratowski.empty()) planar["kuratowski_edges"] = r.planarity.kuratowski;
    out["planarity"] = std::move(planar);
    out["clique"] = {{"size", r.clique.size}, {"witness", vertex_list_json(graph, g, r.clique.witness)}};
    out["independent"] = {{"size", r.independent.size},
                          {"witness", vertex_list_json(graph, g, r.independent.witness)}};
    if (r.hamilton) {
        out["hamiltonian"] = {{"status", to_string(r.hamilton->status)},
                              {"dirac", r.hamilton->dirac},
                              {"cycle", vertex_list_json(graph, g, r.hamilton->cycle)}};
    } else {
        out["hamiltonian"] = nullptr;
    }
    if (r.multipartite.parts)
        out["multipartite"] = {{"parts", *r.multipartite.parts}};
    else if (r.multipartite.violation)
        out["multipartite"] = {{"parts", nullptr}, {"violation", *r.multipartite.violation}};
    out["degrees"] = r.degrees.by_vertex;
    if (!r.degrees.by_class.empty()) {
        json bc = json::array();
        for (const auto& d : r.degrees.by_class) bc.push_back(d ? json(*d) : json(nullptr));
        out["degrees_by_class"] = std::move(bc);
    }
    return out;
}

json report_to_json(const VerificationReport& report, bool timing) {
    json out = json::array();
    for (const auto& e : report.entries) {
        out.push_back({{"group", e.group},
                       {"order", e.order},
                       {"check", to_string(e.check)},
                       {"status", to_string(e.status)},
                       {"witness", e.witness},
                       {"elapsed_ms", timing ? json(e.elapsed_ms) : json(nullptr)}});
    }
    return out;
}

std::string report_to_csv(const VerificationReport& report) {
    std::ostringstream out;
    out << "group,order,check,status\n";
    for (const auto& e : report.entries) {
        std::string name = e.group;
        if (name.find_first_of(",\"") != std::string::npos) {
            std::string q = "\"";
            for (char c : name) q += c == '"' ? std::string("\"\"") : std::string(1, c);
            name = q + "\"";
        }
        out << name << ',' << e.order << ',' << to_string(e.check) << ',' << to_string(e.status) << '\n';
    }
    return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << text;
    if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

}  // namespace indep
