#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "json.hpp"

#include "indep/analysis.hpp"
#include "indep/indigraph.hpp"
#include "indep/verify.hpp"

namespace indep {

// ------------------------------------------------------------ Cayley tables

/// Text format: first line n, then n rows of n space separated 0-based
/// indices (row g lists g*0, g*1, ...), then optional "label <i> <text>"
/// lines. Errors carry the offending line number as witness.
FiniteGroup read_cayley(std::istream& in, const std::string& source = "<stream>");
FiniteGroup import_cayley(const std::filesystem::path& path);
std::string write_cayley(const FiniteGroup& g);

// ------------------------------------------------------------------ catalog

/// JSON list of {"name": ..., "recipe": ...} or {"name": ..., "cayley": path};
/// relative paths resolve against the catalog file's directory.
std::vector<CatalogEntry> parse_catalog(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});
std::vector<CatalogEntry> load_catalog_file(const std::filesystem::path& path);

// ------------------------------------------------------------------- graphs

/// Undirected DOT with vertices in index order; with `classes`, vertices get
/// a fill colour per conjugacy class.
std::string export_dot(const IndependenceGraph& graph, const FiniteGroup& g,
                       const std::vector<ElementSet>* classes = nullptr);

nlohmann::json graph_to_json(const IndependenceGraph& graph, const FiniteGroup& g);
IndependenceGraph graph_from_json(const nlohmann::json& doc);

nlohmann::json report_to_json(const GraphReport& report, const IndependenceGraph& graph, const FiniteGroup& g);

// ------------------------------------------------------------------ reports

/// One object per entry: {group, check, status, witness, elapsed_ms};
/// elapsed_ms is null unless `timing` is set, which keeps output
/// reproducible byte for byte.
nlohmann::json report_to_json(const VerificationReport& report, bool timing = false);
std::string report_to_csv(const VerificationReport& report);

/// Writes `text` to `path`, throwing Error(Io) on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace indep
