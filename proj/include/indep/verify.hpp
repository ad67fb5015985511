#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "indep/analysis.hpp"
#include "indep/gensets.hpp"
#include "indep/indigraph.hpp"

namespace indep {

// ------------------------------------------------------------------ catalog

struct CatalogEntry {
    std::string name;
    /// make_named_group recipe; empty when `cayley_path` is used
    std::string recipe;
    std::string cayley_path;
    /// isomorphism type for the small planar groups ("C2xC2", "C2xC4", "D4",
    /// "Q8", "S3"), fixed by construction; empty otherwise
    std::string iso_tag;
};

/// Cyclic groups up to `max_cyclic` plus the fixed list of named
/// constructions up to order 48, restricted to order <= max_order.
std::vector<CatalogEntry> default_catalog(std::size_t max_order = 48, std::size_t max_cyclic = 210);

/// Resolves a recipe, a catalog name ("sym4", "cyclic15", "C2xC4", ...) or a
/// short alias into a catalog entry.
CatalogEntry resolve_group(const std::string& name_or_recipe);

FiniteGroup load_group(const CatalogEntry& entry, std::size_t max_order = 1024);

// ------------------------------------------------------------------- checks

enum class CheckId {
    ConnectivityMain,
    ConnectivityRankU,
    ConnectivityRankUProbe,
    SwapConnectivity,
    IsolatedCharacterization,
    EdgeLift,
    TarskiRange,
    PlanarityCyclic,
    PlanarityNoncyclic,
    PlanarityQuotientLemma,
    S4Tables,
    S4Extremal,
    WSet,
    DegreeDivisibilityProbe,
    HamiltonianNilpotent,
    HamiltonianProbe,
    C5C4Golden,
};

const std::vector<CheckId>& all_checks();
const char* to_string(CheckId id);
std::optional<CheckId> parse_check(const std::string& name);
/// Probes only ever report observations.
bool is_probe(CheckId id);

enum class CheckStatus { Pass, Fail, SkippedNotApplicable, SkippedBudget, Observation };
const char* to_string(CheckStatus s);

struct CheckSpec {
    CheckId id;
    /// groups above this order are skipped-not-applicable for this check
    std::size_t max_order = 1024;
};

struct VerifyLimits {
    std::size_t max_order = 48;
    SearchLimits search;
    SwapLimits swap;
    AnalysisLimits analysis;
    /// edge lifting is exhaustive up to this order and sampled above it
    std::size_t edge_lift_exhaustive_order = 24;
    std::size_t edge_lift_samples = 1000;
    std::uint64_t seed = 0x5eed;
};

struct ReportEntry {
    std::string group;
    std::size_t order = 0;
    CheckId check = CheckId::ConnectivityMain;
    CheckStatus status = CheckStatus::SkippedNotApplicable;
    nlohmann::json witness;
    double elapsed_ms = 0;
};

struct VerificationReport {
    std::vector<ReportEntry> entries;

    std::size_t count(CheckStatus s) const;
    std::vector<const ReportEntry*> failures() const;
    const ReportEntry* find(const std::string& group, CheckId check) const;
};

/// Runs the checks over the catalog. Entries are sorted by group order, then
/// group name, then check name.
VerificationReport run_suite(const std::vector<CatalogEntry>& catalog, const std::vector<CheckSpec>& checks,
                             const VerifyLimits& limits = {});

VerificationReport run_suite(const std::vector<CatalogEntry>& catalog, const std::vector<CheckId>& checks,
                             const VerifyLimits& limits = {});

// ------------------------------------------------------- exposed predicates

/// Planarity of Gamma(C_n) as a function of n: prime power, p*q with p <= 3,
/// or 4*q with q an odd prime.
bool cyclic_gamma_planar_predicate(std::size_t n);

/// Parses permutation cycle notation such as "(1,2)(3,4)" or "id" on k points
/// into the image list (0-based).
std::vector<int> parse_cycles(const std::string& text, int degree);

/// Element of symmetric(k) with the given cycle notation.
Element permutation_element(const FiniteGroup& sym, const std::string& cycles, int degree);

struct S4TableRow {
    std::string representative;
    /// semicolon separated: class names X2, X3, X4, Y or cycles, "^pm" adds
    /// the inverse
    std::string neighbors;
    std::size_t degree;
};

/// Reference neighbor tables of Gamma_2, Gamma_3 and Gamma for Sym(4); u = 0
/// stands for Gamma.
const std::vector<S4TableRow>& s4_reference_table(std::size_t u);

/// Expands a table row's neighbor description into an element set.
ElementSet expand_s4_description(const FiniteGroup& s4, const std::string& description);

/// Sym(4) class sets by cycle type: "X2", "X3", "X4", "Y".
ElementSet s4_class_set(const FiniteGroup& s4, const std::string& name);

}  // namespace indep
