// Acceptance suite: one PASS/FAIL line per criterion.
//
// Two criteria cannot hold as stated; the computed values contradict them and
// independent brute force confirms the computation. Their exact failure
// signatures are pinned below. Those lines still print FAIL. The process
// exits 0 only if every other criterion passes and each pinned failure
// matches its signature exactly, so any drift in either direction is caught.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "indep/analysis.hpp"
#include "indep/verify.hpp"
#include "oracles.hpp"

using namespace indep;

namespace {

// ------------------------------------------------------------- tolerances

constexpr double kTablesSeconds = 10.0;
constexpr double kMainSeconds = 300.0;
constexpr std::size_t kCatalogOrder = 48;
constexpr std::size_t kMinCatalogGroups = 60;
constexpr std::size_t kCyclicPlanarityMax = 210;
constexpr std::size_t kNoncyclicPlanarityOrder = 32;
constexpr std::size_t kNilpotentOrder = 32;
constexpr std::size_t kOracleOrder = 16;
constexpr std::size_t kPlanarityOracleVertices = 12;
constexpr std::size_t kPermutationOracleVertices = 9;
constexpr std::size_t kEdgeLiftExhaustiveOrder = 24;
constexpr std::size_t kEdgeLiftSamples = 1000;

// ------------------------------------------------------------- plumbing

enum class Outcome { Pass, Fail, PinnedFail };

struct Result {
    Outcome outcome = Outcome::Pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string join(const std::vector<std::string>& xs, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

std::vector<CatalogEntry> catalog_up_to(std::size_t order) { return default_catalog(order); }

VerifyLimits limits_for(std::size_t max_order) {
    VerifyLimits l;
    l.max_order = max_order;
    l.edge_lift_exhaustive_order = kEdgeLiftExhaustiveOrder;
    l.edge_lift_samples = kEdgeLiftSamples;
    return l;
}

/// Groups whose entries for `check` are not pass (ignoring not-applicable).
std::vector<std::string> non_passing(const VerificationReport& r, CheckId check) {
    std::vector<std::string> out;
    for (const auto& e : r.entries)
        if (e.check == check && e.status != CheckStatus::Pass && e.status != CheckStatus::SkippedNotApplicable)
            out.push_back(e.group + ":" + to_string(e.status));
    return out;
}

std::size_t passing(const VerificationReport& r, CheckId check) {
    std::size_t n = 0;
    for (const auto& e : r.entries) n += e.check == check && e.status == CheckStatus::Pass;
    return n;
}

oracle::Adj adjacency(const Graph& g) {
    oracle::Adj a(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
    return a;
}

std::size_t size_cap(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t{1} << (k + 1)) <= n) ++k;
    return k + 1;
}

/// Hamiltonicity by dynamic programming over vertex subsets.
bool held_karp(const oracle::Adj& a) {
    const std::size_t n = a.size();
    if (n < 3) return false;
    std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
    reach[1] = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); mask += 2)
        for (std::size_t v = 0; v < n; ++v) {
            if (!((reach[mask] >> v) & 1u)) continue;
            for (std::size_t w = 0; w < n; ++w)
                if (a[v][w] && !((mask >> w) & 1u)) reach[mask | (1u << w)] |= 1u << w;
        }
    const std::uint32_t full = (1u << n) - 1;
    for (std::size_t v = 1; v < n; ++v)
        if (((reach[full] >> v) & 1u) && a[v][0]) return true;
    return false;
}

/// Oracle adjacency of Gamma (u = 0) or Gamma_u, indexed by element.
oracle::Adj oracle_gamma(const FiniteGroup& g, std::size_t u = 0) {
    return oracle::gamma(g.order(), oracle::min_gen_sets(g.table(), size_cap(g.order())), u);
}

// ------------------------------------------------------------- criteria

Result sym4_tables() {
    const auto t0 = std::chrono::steady_clock::now();
    auto s4 = make_named_group("symmetric(4)");
    const auto report = run_suite({resolve_group("S4")}, std::vector<CheckId>{CheckId::S4Tables});
    const double secs = seconds_since(t0);
    const auto* e = report.find("S4", CheckId::S4Tables);
    bool ok = e && e->status == CheckStatus::Pass && secs < kTablesSeconds;

    // class degrees in the order Y, X2, X3, X4, against the oracle graphs
    const std::map<std::size_t, std::vector<std::size_t>> pinned = {
        {2, {0, 8, 9, 16}}, {3, {14, 12, 12, 0}}, {0, {14, 20, 21, 16}}};
    const char* reps[] = {"(1,2)(3,4)", "(1,2)", "(1,2,3)", "(1,2,3,4)"};
    std::vector<std::string> seen;
    for (const auto& [u, degs] : pinned) {
        const auto a = oracle_gamma(s4, u);
        std::vector<std::string> got;
        for (std::size_t c = 0; c < 4; ++c) {
            const auto d = oracle::degree(a, permutation_element(s4, reps[c], 4));
            got.push_back(std::to_string(d));
            ok = ok && d == degs[c];
        }
        seen.push_back((u ? "Gamma_" + std::to_string(u) : std::string("Gamma")) + "=(" + join(got, ",") + ")");
    }
    std::ostringstream d;
    d << join(seen, " ") << "; library rows match tables: " << (e && e->status == CheckStatus::Pass ? "yes" : "no")
      << "; " << secs << " s (limit " << kTablesSeconds << " s)";
    return {ok ? Outcome::Pass : Outcome::Fail, d.str()};
}

Result sym4_extremal() {
    auto s4 = make_named_group("symmetric(4)");
    SubgroupLattice lat(s4);
    const auto om = enumerate_min_gen_sets(lat);
    struct Value {
        std::string name;
        std::size_t library, oracle_value, expected;
    };
    std::vector<Value> values;
    auto measure = [&](std::size_t u, bool induced, bool independence, std::size_t expected) {
        const auto kind = u ? GraphKind::Rank : GraphKind::Full;
        const auto ig = build_graph(s4, om, kind, u, induced);
        const auto lib = independence ? independence_number(ig.graph).size : clique_number(ig.graph).size;
        auto a = adjacency(ig.graph);
        const auto orc = oracle::clique_number(independence ? oracle::complement(a) : a);
        const std::string graph = std::string(induced ? "Delta" : "Gamma") + (u ? "_" + std::to_string(u) : "");
        values.push_back({std::string(independence ? "alpha(" : "omega(") + graph + ")", lib, orc, expected});
    };
    measure(2, false, false, 4);
    measure(3, false, false, 7);
    measure(0, false, false, 11);
    measure(2, false, true, 12);
    measure(3, true, true, 8);
    measure(0, true, true, 6);
    // reported alongside, not part of the criterion
    measure(3, false, true, 0);
    measure(0, false, true, 0);

    bool all_match = true, oracle_agrees = true;
    std::vector<std::string> parts, mismatched;
    for (const auto& v : values) {
        oracle_agrees = oracle_agrees && v.library == v.oracle_value;
        std::string s = v.name + "=" + std::to_string(v.library);
        if (v.expected) {
            s += v.library == v.expected ? "" : " (expected " + std::to_string(v.expected) + ")";
            if (v.library != v.expected) {
                all_match = false;
                mismatched.push_back(v.name + "=" + std::to_string(v.library));
            }
        }
        parts.push_back(s);
    }
    std::string detail = join(parts) + "; oracle agrees: " + (oracle_agrees ? "yes" : "no");
    if (all_match && oracle_agrees) return {Outcome::Pass, detail};
    // The listed Delta-form values 8 and 6 are unreachable: in Gamma_3 the
    // 4-cycles are isolated, so the listed witnesses lose 7 resp. 1 vertices.
    const bool pinned = oracle_agrees && mismatched == std::vector<std::string>{"alpha(Delta_3)=3", "alpha(Delta)=5"};
    return {pinned ? Outcome::PinnedFail : Outcome::Fail,
            detail + "; Delta-form values 8 and 6 are not attained (Gamma-form values are 10 and 6)"};
}

Result main_connectivity() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto cat = catalog_up_to(kCatalogOrder);
    const auto r = run_suite(cat, std::vector<CheckId>{CheckId::ConnectivityMain}, limits_for(kCatalogOrder));
    const double secs = seconds_since(t0);
    const auto bad = non_passing(r, CheckId::ConnectivityMain);
    const bool ok = bad.empty() && cat.size() >= kMinCatalogGroups && secs < kMainSeconds;
    std::ostringstream d;
    d << cat.size() << " groups, " << passing(r, CheckId::ConnectivityMain) << " pass, failures: "
      << (bad.empty() ? "none" : join(bad)) << "; " << secs << " s (limit " << kMainSeconds << " s)";
    return {ok ? Outcome::Pass : Outcome::Fail, d.str()};
}

Result rank_connectivity() {
    const auto cat = catalog_up_to(kCatalogOrder);
    const auto r = run_suite(cat, std::vector<CheckId>{CheckId::ConnectivityRankU}, limits_for(kCatalogOrder));
    const auto bad = non_passing(r, CheckId::ConnectivityRankU);
    std::size_t soluble = 0;
    for (const auto& e : cat) soluble += structure_flags(load_group(e)).is_soluble;
    const std::size_t pass = passing(r, CheckId::ConnectivityRankU);
    std::ostringstream d;
    d << pass << " of " << soluble << " soluble groups pass every u in [d, m]; failures: "
      << (bad.empty() ? "none" : join(bad));
    return {bad.empty() && pass == soluble ? Outcome::Pass : Outcome::Fail, d.str()};
}

Result planarity() {
    std::vector<CatalogEntry> cyclic, noncyclic;
    for (const auto& e : default_catalog(kCyclicPlanarityMax, kCyclicPlanarityMax)) {
        const bool is_cyclic = e.name.size() > 1 && e.name[0] == 'C' &&
                               e.name.find_first_not_of("0123456789", 1) == std::string::npos;
        if (is_cyclic)
            cyclic.push_back(e);
        else if (load_group(e).order() <= kNoncyclicPlanarityOrder)
            noncyclic.push_back(e);
    }
    const auto rc = run_suite(cyclic, std::vector<CheckId>{CheckId::PlanarityCyclic}, limits_for(kCyclicPlanarityMax));
    const auto rn =
        run_suite(noncyclic, std::vector<CheckId>{CheckId::PlanarityNoncyclic}, limits_for(kNoncyclicPlanarityOrder));
    auto bad = non_passing(rc, CheckId::PlanarityCyclic);
    const auto bad_n = non_passing(rn, CheckId::PlanarityNoncyclic);
    bad.insert(bad.end(), bad_n.begin(), bad_n.end());

    // restate the classification from the tags and the graphs directly
    const std::set<std::string> planar_tags = {"C2xC2", "C2xC4", "D4", "Q8", "S3"};
    std::vector<std::string> planar_groups;
    for (const auto& e : noncyclic) {
        auto g = load_group(e);
        const bool planar = is_planar(build_graph(SubgroupLattice(g), GraphKind::Full, 0, false).graph).planar;
        if (planar) planar_groups.push_back(e.name);
        if (planar != (planar_tags.count(e.iso_tag) > 0)) bad.push_back(e.name + ":classification");
    }
    const std::size_t cyclic_pass = passing(rc, CheckId::PlanarityCyclic);
    std::ostringstream d;
    d << cyclic_pass << " of " << cyclic.size() << " cyclic groups match the predicate; " << noncyclic.size()
      << " non-cyclic groups, planar: " << join(planar_groups) << "; failures: " << (bad.empty() ? "none" : join(bad));
    return {bad.empty() && cyclic_pass == cyclic.size() ? Outcome::Pass : Outcome::Fail, d.str()};
}

Result simple_check(CheckId id, std::size_t order, const std::string& what) {
    const auto cat = catalog_up_to(order);
    const auto r = run_suite(cat, std::vector<CheckId>{id}, limits_for(order));
    const auto bad = non_passing(r, id);
    const std::size_t pass = passing(r, id);
    std::ostringstream d;
    d << pass << " of " << cat.size() << " groups " << what << "; failures: " << (bad.empty() ? "none" : join(bad));
    return {bad.empty() && pass == cat.size() ? Outcome::Pass : Outcome::Fail, d.str()};
}

Result nilpotent_hamiltonicity() {
    const auto cat = catalog_up_to(kNilpotentOrder);
    const auto r =
        run_suite(cat, std::vector<CheckId>{CheckId::HamiltonianNilpotent}, limits_for(kNilpotentOrder));
    std::vector<std::string> degree_fail, cycle_fail, other;
    std::size_t applicable = 0;
    for (const auto& e : r.entries) {
        if (e.check != CheckId::HamiltonianNilpotent || e.status == CheckStatus::SkippedNotApplicable) continue;
        ++applicable;
        if (e.status == CheckStatus::Pass) continue;
        if (e.status != CheckStatus::Fail) {
            other.push_back(e.group + ":" + to_string(e.status));
            continue;
        }
        if (!e.witness["degree_formula_mismatches"].empty()) degree_fail.push_back(e.group);
        if (e.witness["hamiltonian"] != "yes") cycle_fail.push_back(e.group);
    }
    std::ostringstream d;
    d << applicable << " nilpotent non-cyclic groups; no Hamiltonian cycle: "
      << (cycle_fail.empty() ? "none" : join(cycle_fail))
      << "; degree formula fails: " << (degree_fail.empty() ? "none" : join(degree_fail));
    if (degree_fail.empty() && cycle_fail.empty() && other.empty()) return {Outcome::Pass, d.str()};

    // Independent confirmation from subset-filtered graphs.
    // C2 x C6: an element of order 3 has degree 3, the formula gives 9.
    auto c2c6 = make_named_group("direct(cyclic(2),cyclic(6))");
    const auto a = oracle_gamma(c2c6);
    const Element x = *c2c6.find_label("(e,a^2)");
    const bool degree_confirmed = oracle::degree(a, x) == 3;
    // C2 x C10: removing the 3 involutions from Delta leaves the 4 elements of
    // order 5 as singletons, so Delta has no Hamiltonian cycle.
    auto c2c10 = make_named_group("direct(cyclic(2),cyclic(10))");
    const auto [keep, delta] = oracle::delta(oracle_gamma(c2c10));
    std::vector<std::size_t> involutions;
    for (std::size_t i = 0; i < keep.size(); ++i)
        if (element_order(c2c10, keep[i]) == 2) involutions.push_back(i);
    std::vector<bool> drop(keep.size(), false);
    for (auto i : involutions) drop[i] = true;
    oracle::Adj rest;
    std::vector<std::size_t> kept_idx;
    for (std::size_t i = 0; i < keep.size(); ++i)
        if (!drop[i]) kept_idx.push_back(i);
    rest.assign(kept_idx.size(), std::vector<bool>(kept_idx.size(), false));
    for (std::size_t i = 0; i < kept_idx.size(); ++i)
        for (std::size_t j = 0; j < kept_idx.size(); ++j) rest[i][j] = delta[kept_idx[i]][kept_idx[j]];
    const bool cut_confirmed = involutions.size() == 3 && oracle::component_count(rest) > 3;

    const std::vector<std::string> pinned_degree = {"C2xC6", "C3xC6",    "C2xC10", "C2xC12",
                                                    "C2xC2xC6", "C3xD4", "C3xQ8",  "C2xC14"};
    const std::vector<std::string> pinned_cycle = {"C2xC10", "C2xC14"};
    auto sorted = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    const bool pinned = other.empty() && sorted(degree_fail) == sorted(pinned_degree) &&
                        sorted(cycle_fail) == sorted(pinned_cycle) && degree_confirmed && cut_confirmed;
    d << "; brute force confirms deg_C2xC6((e,a^2))=3 vs formula 9: " << (degree_confirmed ? "yes" : "no")
      << "; brute force confirms toughness cut in Delta(C2xC10): " << (cut_confirmed ? "yes" : "no");
    return {pinned ? Outcome::PinnedFail : Outcome::Fail, d.str()};
}

Result golden_scalars() {
    std::vector<std::string> bad, notes;
    auto expect = [&](const std::string& what, std::size_t got, std::size_t want) {
        notes.push_back(what + "=" + std::to_string(got));
        if (got != want) bad.push_back(what + " expected " + std::to_string(want));
    };
    auto s4 = make_named_group("symmetric(4)");
    SubgroupLattice s4lat(s4);
    const auto rb = rank_bounds(s4lat);
    expect("d(S4)", rb.d, 2);
    expect("m(S4)", rb.m, 3);
    const auto sup = vertex_supports(s4lat);
    expect("|W(S4)|", sup.w.size(), 14);
    if (!(sup.w == (s4_class_set(s4, "X2") | s4_class_set(s4, "X3")))) bad.push_back("W(S4) != X2 u X3");

    auto c5c4 = make_named_group("semidirect_c5_c4");
    const auto ca = oracle_gamma(c5c4);
    const auto cdelta = build_graph(SubgroupLattice(c5c4), GraphKind::Full, 0, true);
    expect("|V(Delta(C5:C4))|", cdelta.vertex_count(), 19);
    expect("oracle |V(Delta(C5:C4))|", oracle::delta(ca).first.size(), 19);
    const Element b2 = *c5c4.find_label("b^2");
    expect("deg(b^2)", cdelta.graph.degree(*cdelta.vertex_of(b2)), 8);
    expect("oracle deg(b^2)", oracle::degree(ca, b2), 8);

    auto d6 = make_named_group("dihedral(6)");
    const auto g3 = build_graph(SubgroupLattice(d6), GraphKind::Rank, 3, false);
    const Element a2 = *d6.find_label("a^2");
    std::set<std::string> nbrs;
    for (Vertex v : g3.graph.neighbors(*g3.vertex_of(a2))) nbrs.insert(d6.label(g3.vertices[v]));
    expect("deg_Gamma3(D6; a^2)", nbrs.size(), 7);
    const std::set<std::string> want = {"a^3", "b", "ab", "a^2b", "a^3b", "a^4b", "a^5b"};
    if (nbrs != want) bad.push_back("D6 neighbor set of a^2");
    const auto oa = oracle_gamma(d6, 3);
    std::set<std::string> onbrs;
    for (Element y = 0; y < d6.order(); ++y)
        if (oa[a2][y]) onbrs.insert(d6.label(y));
    if (onbrs != want) bad.push_back("oracle D6 neighbor set of a^2");

    return {bad.empty() ? Outcome::Pass : Outcome::Fail,
            join(notes) + "; D6 neighbors of a^2 {" + join({nbrs.begin(), nbrs.end()}) + "}" +
                (bad.empty() ? "" : "; mismatches: " + join(bad))};
}

Result oracle_equivalence() {
    std::size_t groups = 0, graphs = 0, planarity_checked = 0, hamilton_checked = 0;
    std::vector<std::string> bad;
    for (const auto& entry : catalog_up_to(kOracleOrder)) {
        ++groups;
        auto g = load_group(entry);
        const auto t = g.table();
        const auto naive = oracle::min_gen_sets(t, size_cap(g.order()));
        std::set<oracle::Set> expected(naive.begin(), naive.end());
        SubgroupLattice lat(g);
        const auto om = enumerate_min_gen_sets(lat);
        std::set<oracle::Set> got;
        om.for_each_set([&](std::span<const Element> s) { got.insert(oracle::Set(s.begin(), s.end())); });
        if (got != expected) bad.push_back(entry.name + ":enumeration");

        std::vector<std::size_t> ranks{0};
        for (std::size_t u = om.d; u <= om.m; ++u)
            if (u >= 2) ranks.push_back(u);
        for (std::size_t u : ranks)
            for (bool induced : {false, true}) {
                ++graphs;
                const auto ig = build_graph(g, om, u ? GraphKind::Rank : GraphKind::Full, u, induced);
                const auto full = oracle::gamma(g.order(), naive, u);
                oracle::Adj want = full;
                if (induced) {
                    auto [keep, d] = oracle::delta(full);
                    want = d;
                    if (ig.vertices != keep) bad.push_back(entry.name + ":vertices");
                }
                const auto have = adjacency(ig.graph);
                if (have != want) {
                    bad.push_back(entry.name + ":graph u=" + std::to_string(u));
                    continue;
                }
                if (ig.vertex_count() <= kPlanarityOracleVertices) {
                    ++planarity_checked;
                    if (is_planar(ig.graph).planar != oracle::planar(want))
                        bad.push_back(entry.name + ":planarity u=" + std::to_string(u));
                }
                if (induced && ig.vertex_count() >= 3) {
                    ++hamilton_checked;
                    const bool expect_h = ig.vertex_count() <= kPermutationOracleVertices ? oracle::hamiltonian(want)
                                                                                          : held_karp(want);
                    const auto h = hamiltonian_cycle(ig.graph);
                    const bool ok = (h.status == HamiltonStatus::Yes) == expect_h &&
                                    h.status != HamiltonStatus::Unknown &&
                                    (h.status != HamiltonStatus::Yes || is_hamiltonian_cycle(ig.graph, h.cycle));
                    if (!ok) bad.push_back(entry.name + ":hamiltonian u=" + std::to_string(u));
                }
            }
    }
    std::ostringstream d;
    d << groups << " groups, " << graphs << " graphs; planarity compared on " << planarity_checked
      << " graphs with at most " << kPlanarityOracleVertices << " vertices, Hamiltonicity on " << hamilton_checked
      << "; disagreements: " << (bad.empty() ? "none" : join(bad));
    return {bad.empty() ? Outcome::Pass : Outcome::Fail, d.str()};
}

Result edge_lift() {
    const auto cat = catalog_up_to(kCatalogOrder);
    const auto r = run_suite(cat, std::vector<CheckId>{CheckId::EdgeLift}, limits_for(kCatalogOrder));
    std::vector<std::string> bad;
    std::size_t exhaustive = 0, sampled = 0, na = 0;
    for (const auto& e : r.entries) {
        if (e.status == CheckStatus::SkippedNotApplicable) {
            ++na;
            continue;
        }
        if (e.status != CheckStatus::Pass) {
            bad.push_back(e.group + ":" + to_string(e.status));
            continue;
        }
        const bool is_exhaustive = e.witness["mode"] == "exhaustive";
        if (is_exhaustive != (e.order <= kEdgeLiftExhaustiveOrder)) bad.push_back(e.group + ":mode");
        if (!is_exhaustive && e.witness["tested"].get<std::size_t>() < kEdgeLiftSamples)
            bad.push_back(e.group + ":samples");
        (is_exhaustive ? exhaustive : sampled) += 1;
    }
    std::ostringstream d;
    d << exhaustive << " groups exhaustive, " << sampled << " sampled with " << kEdgeLiftSamples << " triples, " << na
      << " without a quotient edge; counterexamples: " << (bad.empty() ? "none" : join(bad));
    return {bad.empty() ? Outcome::Pass : Outcome::Fail, d.str()};
}

Result probes() {
    auto cat = catalog_up_to(kCatalogOrder);
    cat.push_back(resolve_group("A5"));
    const auto r = run_suite(cat,
                             std::vector<CheckId>{CheckId::DegreeDivisibilityProbe, CheckId::ConnectivityRankUProbe,
                                                  CheckId::HamiltonianProbe},
                             limits_for(60));
    std::vector<std::string> bad, counterexamples;
    bool d6_reproduced = false;
    std::string a5 = "not run";
    for (const auto& e : r.entries) {
        if (e.status == CheckStatus::Pass || e.status == CheckStatus::Fail)
            bad.push_back(e.group + ":" + to_string(e.check) + " asserted");
        if (e.check == CheckId::DegreeDivisibilityProbe && e.status == CheckStatus::Observation) {
            if (e.witness["counterexamples_at_d"].get<std::size_t>() > 0) counterexamples.push_back(e.group);
            if (e.group == "D6")
                for (const auto& row : e.witness["by_u"])
                    if (row["u"] == 3 && !row["non_divisible"].empty()) d6_reproduced = true;
        }
        if (e.check == CheckId::ConnectivityRankUProbe && e.group == "A5") {
            if (e.status == CheckStatus::Observation)
                a5 = e.witness["connected"].get<bool>() ? "connected" : "disconnected";
            else
                a5 = to_string(e.status);
        }
    }
    if (!counterexamples.empty()) bad.push_back("divisibility counterexample at u=d");
    if (!d6_reproduced) bad.push_back("D6 u=3 not reproduced");
    if (a5 != "connected" && a5 != "skipped-budget") bad.push_back("A5 Delta_u " + a5);
    std::ostringstream d;
    d << "all probe entries are observations: " << (bad.empty() ? "yes" : "no")
      << "; degree-divisibility counterexamples at u=d: "
      << (counterexamples.empty() ? "none" : join(counterexamples))
      << "; D6 non-divisibility at u=3 reproduced: " << (d6_reproduced ? "yes" : "no")
      << "; A5 Delta_u for u in [d, m]: " << a5;
    return {bad.empty() ? Outcome::Pass : Outcome::Fail, d.str()};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Result()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "Sym(4) neighbor tables and class degrees", sym4_tables},
        {2, "Sym(4) clique and independence numbers", sym4_extremal},
        {3, "Delta(G) connected over the catalog", main_connectivity},
        {4, "Delta_u(G) connected for soluble G and d <= u <= m", rank_connectivity},
        {5, "planarity classification", planarity},
        {6, "isolated vertices are cyclic generators and Frattini elements",
         [] { return simple_check(CheckId::IsolatedCharacterization, kCatalogOrder, "match"); }},
        {7, "Tarski range and refinement witnesses",
         [] { return simple_check(CheckId::TarskiRange, kCatalogOrder, "have every size and witness"); }},
        {8, "nilpotent Hamiltonicity and degree formula", nilpotent_hamiltonicity},
        {9, "golden scalars", golden_scalars},
        {10, "brute-force oracle equivalence for |G| <= 16", oracle_equivalence},
        {11, "edge lifting through quotients", edge_lift},
        {12, "probes report observations only", probes},
    };
    int unexpected = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& ex) {
            r = {Outcome::Fail, std::string("exception: ") + ex.what()};
        }
        const char* tag = r.outcome == Outcome::Pass ? "PASS" : "FAIL";
        std::printf("%s %2d %s [%.1f s]: %s%s\n", tag, c.id, c.title, seconds_since(t0), r.detail.c_str(),
                    r.outcome == Outcome::PinnedFail ? " (matches the recorded discrepancy)" : "");
        std::fflush(stdout);
        if (r.outcome == Outcome::Fail) ++unexpected;
    }
    return unexpected == 0 ? 0 : 1;
}
