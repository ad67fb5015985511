#include "indep/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "indep/error.hpp"

namespace indep {

using nlohmann::json;

// ----------------------------------------------------------------- registry

namespace {

struct CheckInfo {
    CheckId id;
    const char* name;
    bool probe;
};

constexpr CheckInfo kChecks[] = {
    {CheckId::ConnectivityMain, "connectivity-main", false},
    {CheckId::ConnectivityRankU, "connectivity-rank-u", false},
    {CheckId::ConnectivityRankUProbe, "connectivity-rank-u-probe", true},
    {CheckId::SwapConnectivity, "swap-connectivity", false},
    {CheckId::IsolatedCharacterization, "isolated-characterization", false},
    {CheckId::EdgeLift, "edge-lift", false},
    {CheckId::TarskiRange, "tarski-range", false},
    {CheckId::PlanarityCyclic, "planarity-cyclic", false},
    {CheckId::PlanarityNoncyclic, "planarity-noncyclic", false},
    {CheckId::PlanarityQuotientLemma, "planarity-quotient-lemma", false},
    {CheckId::S4Tables, "s4-tables", false},
    {CheckId::S4Extremal, "s4-extremal", false},
    {CheckId::WSet, "w-set", false},
    {CheckId::DegreeDivisibilityProbe, "degree-divisibility-probe", true},
    {CheckId::HamiltonianNilpotent, "hamiltonian-nilpotent", false},
    {CheckId::HamiltonianProbe, "hamiltonian-probe", true},
    {CheckId::C5C4Golden, "c5c4-golden", false},
};

const CheckInfo& info(CheckId id) {
    for (const auto& c : kChecks)
        if (c.id == id) return c;
    throw Error(ErrorKind::PreconditionViolated, "unknown check id");
}

}  // namespace

const std::vector<CheckId>& all_checks() {
    static const std::vector<CheckId> ids = [] {
        std::vector<CheckId> v;
        for (const auto& c : kChecks) v.push_back(c.id);
        return v;
    }();
    return ids;
}

const char* to_string(CheckId id) { return info(id).name; }

std::optional<CheckId> parse_check(const std::string& name) {
    for (const auto& c : kChecks)
        if (name == c.name) return c.id;
    return std::nullopt;
}

bool is_probe(CheckId id) { return info(id).probe; }

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::SkippedNotApplicable: return "skipped-not-applicable";
        case CheckStatus::SkippedBudget: return "skipped-budget";
        case CheckStatus::Observation: return "observation";
    }
    return "?";
}

std::size_t VerificationReport::count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [&](const ReportEntry& e) { return e.status == s; }));
}

std::vector<const ReportEntry*> VerificationReport::failures() const {
    std::vector<const ReportEntry*> out;
    for (const auto& e : entries)
        if (e.status == CheckStatus::Fail) out.push_back(&e);
    return out;
}

const ReportEntry* VerificationReport::find(const std::string& group, CheckId check) const {
    for (const auto& e : entries)
        if (e.group == group && e.check == check) return &e;
    return nullptr;
}

// --------------------------------------------------------------- predicates

namespace {

std::vector<std::size_t> prime_factors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_prime_power(std::size_t n) {
    auto f = prime_factors(n);
    return f.empty() || f.front() == f.back();
}

}  // namespace

bool cyclic_gamma_planar_predicate(std::size_t n) {
    if (is_prime_power(n)) return true;
    auto f = prime_factors(n);
    if (f.size() == 2 && f[0] != f[1]) return f[0] <= 3;
    return f.size() == 3 && f[0] == 2 && f[1] == 2 && f[2] > 2;
}

std::vector<int> parse_cycles(const std::string& text, int degree) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    if (s.empty() || s == "id") return img;

    auto bad = [&](const std::string& why) -> Error {
        return Error(ErrorKind::PreconditionViolated, "bad cycle notation '" + text + "': " + why);
    };
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '(') throw bad("expected '('");
        const auto close = s.find(')', pos);
        if (close == std::string::npos) throw bad("missing ')'");
        std::vector<int> cyc;
        std::stringstream ss(s.substr(pos + 1, close - pos - 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            int x;
            try {
                x = std::stoi(tok);
            } catch (const std::exception&) {
                throw bad("non-numeric point");
            }
            if (x < 1 || x > degree) throw bad("point out of range");
            if (std::find(cyc.begin(), cyc.end(), x - 1) != cyc.end()) throw bad("repeated point");
            cyc.push_back(x - 1);
        }
        if (cyc.empty()) throw bad("empty cycle");
        // compose left to right: first img, then this cycle
        std::vector<int> step(img.size());
        for (std::size_t i = 0; i < step.size(); ++i) step[i] = static_cast<int>(i);
        for (std::size_t i = 0; i < cyc.size(); ++i)
            step[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
        for (auto& x : img) x = step[static_cast<std::size_t>(x)];
        pos = close + 1;
    }
    return img;
}

namespace {

std::string canonical_cycles(const std::vector<int>& img) {
    std::string s;
    std::vector<char> seen(img.size(), 0);
    for (std::size_t start = 0; start < img.size(); ++start) {
        if (seen[start] || img[start] == static_cast<int>(start)) continue;
        s += "(";
        for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(img[x])) {
            if (x != start) s += ",";
            seen[x] = 1;
            s += std::to_string(x + 1);
        }
        s += ")";
    }
    return s.empty() ? "id" : s;
}

/// Sorted nontrivial cycle lengths.
std::vector<std::size_t> cycle_type(const std::vector<int>& img) {
    std::vector<std::size_t> out;
    std::vector<char> seen(img.size(), 0);
    for (std::size_t s = 0; s < img.size(); ++s) {
        std::size_t len = 0;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(img[x])) {
            seen[x] = 1;
            ++len;
        }
        if (len > 1) out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Element permutation_element(const FiniteGroup& sym, const std::string& cycles, int degree) {
    const auto label = canonical_cycles(parse_cycles(cycles, degree));
    auto e = sym.find_label(label);
    if (!e) throw Error(ErrorKind::PreconditionViolated, "no element labelled " + label + " in " + sym.origin());
    return *e;
}

ElementSet s4_class_set(const FiniteGroup& s4, const std::string& name) {
    std::vector<std::size_t> want;
    if (name == "X2")
        want = {2};
    else if (name == "X3")
        want = {3};
    else if (name == "X4")
        want = {4};
    else if (name == "Y")
        want = {2, 2};
    else
        throw Error(ErrorKind::PreconditionViolated, "unknown class name " + name);
    ElementSet out = s4.empty_set();
    for (Element x = 0; x < s4.order(); ++x)
        if (cycle_type(parse_cycles(s4.label(x), 4)) == want) out.insert(x);
    return out;
}

const std::vector<S4TableRow>& s4_reference_table(std::size_t u) {
    static const std::vector<S4TableRow> gamma2 = {
        {"(1,2)(3,4)", "(empty)", 0},
        {"(1,2)", "(2,3,4)^pm; (1,3,4)^pm; (1,2,3,4)^pm; (1,2,4,3)^pm", 8},
        {"(1,2,3)", "X4; (1,4); (2,4); (3,4)", 9},
        {"(1,2,3,4)", "X3; (1,2); (1,4); (2,3); (3,4); (1,3,2,4)^pm; (1,2,4,3)^pm", 16},
    };
    static const std::vector<S4TableRow> gamma3 = {
        {"(1,2)(3,4)", "X2; X3", 14},
        {"(1,2)", "Y; (1,2,3)^pm; (1,2,4)^pm; (1,3); (1,4); (2,3); (2,4); (3,4)", 12},
        {"(1,2,3)", "Y; (1,2); (1,3); (2,3); (1,2,4)^pm; (1,3,4)^pm; (2,3,4)^pm", 12},
        {"(1,2,3,4)", "(empty)", 0},
    };
    static const std::vector<S4TableRow> gamma = {
        {"(1,2)(3,4)", "X2; X3", 14},
        {"(1,2)", "Y; X3; (1,3); (1,4); (2,3); (2,4); (3,4); (1,2,3,4)^pm; (1,2,4,3)^pm", 20},
        {"(1,2,3)", "Y; X2; X4; (1,2,4)^pm; (1,3,4)^pm; (2,3,4)^pm", 21},
        {"(1,2,3,4)", "X3; (1,2); (1,4); (2,3); (3,4); (1,3,2,4)^pm; (1,2,4,3)^pm", 16},
    };
    switch (u) {
        case 0: return gamma;
        case 2: return gamma2;
        case 3: return gamma3;
    }
    throw Error(ErrorKind::PreconditionViolated, "no reference table for u = " + std::to_string(u));
}

ElementSet expand_s4_description(const FiniteGroup& s4, const std::string& description) {
    ElementSet out = s4.empty_set();
    std::stringstream ss(description);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        tok.erase(0, tok.find_first_not_of(' '));
        tok.erase(tok.find_last_not_of(' ') + 1);
        if (tok.empty() || tok == "(empty)") continue;
        if (tok[0] != '(') {
            out |= s4_class_set(s4, tok);
            continue;
        }
        bool pm = false;
        if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^pm") == 0) {
            pm = true;
            tok.resize(tok.size() - 3);
        }
        Element x = permutation_element(s4, tok, 4);
        out.insert(x);
        if (pm) out.insert(s4.inv(x));
    }
    return out;
}

// ------------------------------------------------------------------- suite

namespace {

json elem(const FiniteGroup& g, Element x) { return json::array({x, g.label(x)}); }

json elems(const FiniteGroup& g, std::span<const Element> xs) {
    json out = json::array();
    for (Element x : xs) out.push_back(elem(g, x));
    return out;
}

json elems(const FiniteGroup& g, const ElementSet& s) { return elems(g, s.elements()); }

/// Lazily computed objects shared by the checks of one group.
class GroupContext {
public:
    GroupContext(CatalogEntry entry, FiniteGroup g, const VerifyLimits& limits)
        : entry_(std::move(entry)), g_(std::move(g)), limits_(limits), flags_(structure_flags(g_)) {}

    const CatalogEntry& entry() const { return entry_; }
    const FiniteGroup& group() const { return g_; }
    const StructureFlags& flags() const { return flags_; }
    const VerifyLimits& limits() const { return limits_; }

    const SubgroupLattice& lattice() {
        if (!lat_) lat_ = std::make_unique<SubgroupLattice>(g_);
        return *lat_;
    }
    const MinGenEnumeration& omega() {
        if (!omega_) {
            omega_ = enumerate_min_gen_sets(lattice(), std::nullopt, limits_.search);
            omega_->require_complete();
        }
        return *omega_;
    }
    const IndependenceGraph& gamma() { return graph(GraphKind::Full, 0, false); }
    const IndependenceGraph& delta() { return graph(GraphKind::Full, 0, true); }
    const IndependenceGraph& graph(GraphKind kind, std::size_t u, bool induced) {
        auto key = std::make_tuple(kind == GraphKind::Full ? 0 : u, kind == GraphKind::Full, induced);
        auto it = graphs_.find(key);
        if (it == graphs_.end()) it = graphs_.emplace(key, build_graph(g_, omega(), kind, u, induced)).first;
        return it->second;
    }
    const PlanarityResult& gamma_planarity() {
        if (!planarity_) planarity_ = is_planar(gamma().graph);
        return *planarity_;
    }
    const VertexSupport& support() {
        if (!support_) support_ = vertex_supports(g_, omega());
        return *support_;
    }

private:
    CatalogEntry entry_;
    FiniteGroup g_;
    VerifyLimits limits_;
    StructureFlags flags_;
    std::unique_ptr<SubgroupLattice> lat_;
    std::optional<MinGenEnumeration> omega_;
    std::map<std::tuple<std::size_t, bool, bool>, IndependenceGraph> graphs_;
    std::optional<PlanarityResult> planarity_;
    std::optional<VertexSupport> support_;
};

struct Outcome {
    CheckStatus status;
    json witness;
};

Outcome not_applicable(const std::string& why) { return {CheckStatus::SkippedNotApplicable, {{"reason", why}}}; }

Outcome verdict(bool ok, json witness) { return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(witness)}; }

json component_summary(const FiniteGroup& g, const IndependenceGraph& graph) {
    const auto comps = components(graph.graph);
    json w = {{"graph", graph.name()}, {"vertices", graph.vertex_count()}, {"components", comps.count()}};
    if (comps.count() > 1) {
        json reps = json::array();
        for (const auto& m : comps.members) reps.push_back(elem(g, graph.vertices[m.front()]));
        w["component_representatives"] = std::move(reps);
    }
    return w;
}

// -- individual checks

Outcome check_connectivity_main(GroupContext& ctx) {
    const auto& delta = ctx.delta();
    json w = component_summary(ctx.group(), delta);
    const bool ok = w["components"].get<std::size_t>() <= 1;
    return verdict(ok, std::move(w));
}

Outcome rank_u_connectivity(GroupContext& ctx, bool observation) {
    const auto& om = ctx.omega();
    json per_u = json::array();
    bool ok = true;
    for (std::size_t u = om.d; u <= om.m; ++u) {
        json w = component_summary(ctx.group(), ctx.graph(GraphKind::Rank, u, true));
        w["u"] = u;
        ok = ok && w["components"].get<std::size_t>() <= 1;
        per_u.push_back(std::move(w));
    }
    json w = {{"d", om.d}, {"m", om.m}, {"connected", ok}, {"by_u", std::move(per_u)}};
    if (observation) return {CheckStatus::Observation, std::move(w)};
    return verdict(ok, std::move(w));
}

Outcome check_connectivity_rank_u(GroupContext& ctx) {
    if (!ctx.flags().is_soluble) return not_applicable("insoluble");
    return rank_u_connectivity(ctx, false);
}

Outcome check_connectivity_rank_u_probe(GroupContext& ctx) {
    if (ctx.flags().is_soluble) return not_applicable("soluble");
    return rank_u_connectivity(ctx, true);
}

Outcome check_swap_connectivity(GroupContext& ctx) {
    if (!ctx.flags().is_soluble) return not_applicable("insoluble");
    const std::size_t d = relative_rank(ctx.lattice(), {}, ctx.limits().search);
    if (d == 0) return not_applicable("trivial group");
    const auto tuples = generating_tuples(ctx.lattice(), d, ctx.limits().swap);
    const auto label = swap_components(tuples);
    const std::size_t comps = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1u;
    json w = {{"d", d}, {"tuples", tuples.count()}, {"components", comps}};
    if (comps > 1) {
        json reps = json::array();
        std::vector<char> seen(comps, 0);
        for (std::size_t k = 0; k < label.size(); ++k)
            if (!seen[label[k]]) {
                seen[label[k]] = 1;
                reps.push_back(elems(ctx.group(), std::span<const Element>(tuples.flat.data() + k * d, d)));
            }
        w["component_representatives"] = std::move(reps);
    }
    return verdict(comps <= 1, std::move(w));
}

Outcome check_isolated(GroupContext& ctx) {
    const auto& g = ctx.group();
    const auto& lat = ctx.lattice();
    const auto& gamma = ctx.gamma();
    ElementSet isolated = g.empty_set(), expected = lat.at(lat.frattini()).elements;
    for (Element x = 0; x < g.order(); ++x) {
        if (gamma.graph.degree(x) == 0) isolated.insert(x);
        if (lat.join(lat.trivial(), x) == lat.whole()) expected.insert(x);
    }
    json w = {{"isolated", isolated.size()}, {"frattini_order", lat.at(lat.frattini()).order()}};
    if (!(isolated == expected)) {
        w["isolated_not_predicted"] = elems(g, isolated - expected);
        w["predicted_not_isolated"] = elems(g, expected - isolated);
    }
    return verdict(isolated == expected, std::move(w));
}

struct QuotientEdges {
    std::size_t normal_idx;
    Quotient q;
    std::vector<Edge> edges;  // in quotient element indices
};

Outcome check_edge_lift(GroupContext& ctx) {
    const auto& g = ctx.group();
    const auto& lat = ctx.lattice();
    const auto& gamma = ctx.gamma();
    std::vector<QuotientEdges> cases;
    for (std::size_t idx : lat.normal()) {
        if (idx == lat.trivial() || idx == lat.whole()) continue;
        Quotient q = quotient(g, lat.at(idx).elements);
        SubgroupLattice qlat(q.group);
        auto qomega = enumerate_min_gen_sets(qlat, std::nullopt, ctx.limits().search);
        auto qgraph = build_graph(q.group, qomega, GraphKind::Full, 0, false);
        auto edges = qgraph.graph.edges();
        if (!edges.empty()) cases.push_back({idx, std::move(q), std::move(edges)});
    }
    if (cases.empty()) return not_applicable("no quotient by a proper nontrivial normal subgroup has an edge");

    std::uint64_t tested = 0;
    json failure;
    auto test = [&](const QuotientEdges& c, const Edge& e, Element n1, Element n2) {
        ++tested;
        const Element x1 = g.mul(c.q.representative[e.first], n1);
        const Element x2 = g.mul(c.q.representative[e.second], n2);
        if (gamma.graph.adjacent(x1, x2)) return true;
        failure = {{"normal_subgroup", elems(g, lat.at(c.normal_idx).elements)},
                   {"coset_edge", json::array({elem(g, c.q.representative[e.first]),
                                               elem(g, c.q.representative[e.second])})},
                   {"lifted_pair", json::array({elem(g, x1), elem(g, x2)})}};
        return false;
    };

    const bool exhaustive = g.order() <= ctx.limits().edge_lift_exhaustive_order;
    if (exhaustive) {
        for (const auto& c : cases) {
            const auto ns = lat.at(c.normal_idx).elements.elements();
            for (const auto& e : c.edges)
                for (Element n1 : ns)
                    for (Element n2 : ns)
                        if (!test(c, e, n1, n2)) goto done;
        }
    } else {
        std::mt19937_64 rng(ctx.limits().seed ^ (g.order() * 0x9e3779b97f4a7c15ULL));
        for (std::size_t s = 0; s < ctx.limits().edge_lift_samples; ++s) {
            const auto& c = cases[rng() % cases.size()];
            const auto& e = c.edges[rng() % c.edges.size()];
            const auto ns = lat.at(c.normal_idx).elements.elements();
            const Element n1 = ns[rng() % ns.size()], n2 = ns[rng() % ns.size()];
            if (!test(c, e, n1, n2)) break;
        }
    }
done:
    json w = {{"mode", exhaustive ? "exhaustive" : "sampled"}, {"normal_subgroups", cases.size()}, {"tested", tested}};
    if (!failure.is_null()) w["counterexample"] = std::move(failure);
    return verdict(failure.is_null(), std::move(w));
}

Outcome check_tarski(GroupContext& ctx) {
    const auto& g = ctx.group();
    const auto& om = ctx.omega();
    json w = {{"d", om.d}, {"m", om.m}};
    json counts = json::object();
    bool ok = true;
    for (std::size_t u = om.d; u <= om.m; ++u) {
        counts[std::to_string(u)] = om.count(u);
        if (om.count(u) == 0 && g.order() > 1) ok = false;
    }
    w["counts"] = std::move(counts);
    json witnesses = json::array();
    for (std::size_t k = om.d; k < om.m; ++k) {
        auto t = tarski_witness(ctx.lattice(), k, ctx.limits().search);
        if (!t) {
            ok = false;
            witnesses.push_back({{"k", k}, {"witness", nullptr}});
            continue;
        }
        const auto refined = t->refined();
        const bool valid = g.mul(t->x1, t->x2) == t->set[t->index] &&
                           is_minimal_generating(ctx.lattice(), t->set) &&
                           is_minimal_generating(ctx.lattice(), refined) && refined.size() == k + 1;
        ok = ok && valid;
        witnesses.push_back({{"k", k},
                             {"set", elems(g, t->set)},
                             {"split", elem(g, t->set[t->index])},
                             {"x1", elem(g, t->x1)},
                             {"x2", elem(g, t->x2)},
                             {"valid", valid}});
    }
    w["witnesses"] = std::move(witnesses);
    return verdict(ok, std::move(w));
}

/// Planarity answer plus an independent validation of its certificate.
json planarity_witness(GroupContext& ctx, bool& certificate_ok) {
    const auto& gamma = ctx.gamma();
    const auto& p = ctx.gamma_planarity();
    json w = {{"planar", p.planar}, {"vertices", gamma.vertex_count()}, {"edges", gamma.graph.edge_count()}};
    if (p.planar) {
        certificate_ok = validate_embedding(gamma.graph, p.rotation);
        w["certificate"] = certificate_ok ? "embedding" : "invalid-embedding";
    } else if (p.decided_by_edge_bound) {
        certificate_ok = gamma.graph.edge_count() > 3 * gamma.vertex_count() - 6;
        w["certificate"] = "edge-bound";
    } else {
        const auto o = classify_kuratowski(gamma.graph, p.kuratowski);
        certificate_ok = o != Obstruction::None;
        w["certificate"] = o == Obstruction::K5 ? "K5" : o == Obstruction::K33 ? "K3,3" : "invalid-subdivision";
    }
    return w;
}

Outcome check_planarity_cyclic(GroupContext& ctx) {
    if (!ctx.flags().is_cyclic) return not_applicable("not cyclic");
    bool cert = false;
    json w = planarity_witness(ctx, cert);
    const bool predicate = cyclic_gamma_planar_predicate(ctx.group().order());
    w["predicate"] = predicate;
    const bool ok = cert && predicate == w["planar"].get<bool>();
    return verdict(ok, std::move(w));
}

Outcome check_planarity_noncyclic(GroupContext& ctx) {
    if (ctx.flags().is_cyclic) return not_applicable("cyclic");
    static const std::set<std::string> planar_types = {"C2xC2", "C2xC4", "D4", "Q8", "S3"};
    const auto& tag = ctx.entry().iso_tag;
    const std::size_t n = ctx.group().order();
    if (tag.empty() && (n == 4 || n == 6 || n == 8))
        return not_applicable("isomorphism type of a small group not fixed by construction");
    bool cert = false;
    json w = planarity_witness(ctx, cert);
    const bool expected = planar_types.count(tag) > 0;
    w["expected_planar"] = expected;
    if (!tag.empty()) w["iso_tag"] = tag;
    const bool ok = cert && expected == w["planar"].get<bool>();
    return verdict(ok, std::move(w));
}

Outcome check_planarity_quotient(GroupContext& ctx) {
    if (!ctx.gamma_planarity().planar) return not_applicable("Gamma(G) is not planar");
    const auto& g = ctx.group();
    const auto& lat = ctx.lattice();
    json checked = json::array();
    for (std::size_t idx : lat.normal()) {
        const auto& nsub = lat.at(idx);
        const std::size_t qn = g.order() / nsub.order();
        bool cyclic_pp = false;
        if (is_prime_power(qn)) cyclic_pp = structure_flags(quotient(g, nsub.elements).group).is_cyclic;
        if (!cyclic_pp && nsub.order() > 2)
            return verdict(false, {{"normal_subgroup", elems(g, nsub.elements)}, {"quotient_order", qn}});
        checked.push_back({{"normal_order", nsub.order()}, {"quotient_cyclic_prime_power", cyclic_pp}});
    }
    return verdict(true, {{"normal_subgroups", std::move(checked)}});
}

bool is_s4(const GroupContext& ctx) { return ctx.group().origin() == "symmetric(4)"; }

const IndependenceGraph& s4_graph(GroupContext& ctx, std::size_t u, bool induced) {
    return u == 0 ? ctx.graph(GraphKind::Full, 0, induced) : ctx.graph(GraphKind::Rank, u, induced);
}

Outcome check_s4_tables(GroupContext& ctx) {
    if (!is_s4(ctx)) return not_applicable("only for symmetric(4)");
    const auto& g = ctx.group();
    const auto classes = class_partition(g);
    const char* class_names[] = {"Y", "X2", "X3", "X4"};
    const std::map<std::size_t, std::vector<std::size_t>> class_degrees = {
        {2, {0, 8, 9, 16}}, {3, {14, 12, 12, 0}}, {0, {14, 20, 21, 16}}};
    bool ok = true;
    json tables = json::array();
    for (std::size_t u : {2u, 3u, 0u}) {
        const auto& graph = s4_graph(ctx, u, false);
        json rows = json::array();
        for (const auto& row : s4_reference_table(u)) {
            const Element rep = permutation_element(g, row.representative, 4);
            const ElementSet expected = expand_s4_description(g, row.neighbors);
            ElementSet actual = g.empty_set();
            for (Vertex v : graph.graph.neighbors(*graph.vertex_of(rep))) actual.insert(graph.vertices[v]);
            const bool row_ok = actual == expected && expected.size() == row.degree;
            ok = ok && row_ok;
            json r = {{"representative", row.representative}, {"degree", actual.size()}, {"match", row_ok}};
            if (!row_ok) {
                r["missing"] = elems(g, expected - actual);
                r["unexpected"] = elems(g, actual - expected);
            }
            rows.push_back(std::move(r));
        }
        json degs = json::array();
        for (std::size_t c = 0; c < 4; ++c) {
            const ElementSet cls = s4_class_set(g, class_names[c]);
            const Element x = cls.elements().front();
            const std::size_t deg = graph.graph.degree(*graph.vertex_of(x));
            bool homogeneous = true;
            cls.for_each([&](Element y) { homogeneous = homogeneous && graph.graph.degree(*graph.vertex_of(y)) == deg; });
            ok = ok && homogeneous && deg == class_degrees.at(u)[c];
            degs.push_back(homogeneous ? json(deg) : json("inhomogeneous"));
        }
        // degree_profile asserts class homogeneity over the full partition
        try {
            degree_profile(graph, &classes);
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::ClassDegreeMismatch) throw;
            ok = false;
        }
        tables.push_back({{"graph", graph.name()}, {"class_degrees_Y_X2_X3_X4", std::move(degs)}, {"rows", std::move(rows)}});
    }
    return verdict(ok, {{"tables", std::move(tables)}});
}

Outcome check_s4_extremal(GroupContext& ctx) {
    if (!is_s4(ctx)) return not_applicable("only for symmetric(4)");
    const auto& g = ctx.group();
    const auto budget = ctx.limits().analysis.clique_budget;
    struct Item {
        const char* what;
        std::size_t u;
        bool induced;
        bool clique;
        std::size_t expected;
    };
    const Item items[] = {
        {"omega(Gamma_2)", 2, false, true, 4},   {"omega(Gamma_3)", 3, false, true, 7},
        {"omega(Gamma)", 0, false, true, 11},    {"alpha(Gamma_2)", 2, false, false, 12},
        {"alpha(Delta_3)", 3, true, false, 8},   {"alpha(Delta)", 0, true, false, 6},
        {"alpha(Gamma_3)", 3, false, false, 0},  {"alpha(Gamma)", 0, false, false, 0},
    };
    bool ok = true;
    json out = json::array();
    for (const auto& it : items) {
        const auto& graph = s4_graph(ctx, it.u, it.induced);
        const auto r = it.clique ? clique_number(graph.graph, budget) : independence_number(graph.graph, budget);
        bool valid = r.witness.size() == r.size;
        for (std::size_t i = 0; i < r.witness.size(); ++i)
            for (std::size_t j = i + 1; j < r.witness.size(); ++j)
                valid = valid && graph.graph.adjacent(r.witness[i], r.witness[j]) == it.clique;
        std::vector<Element> members;
        for (Vertex v : r.witness) members.push_back(graph.vertices[v]);
        json e = {{"value", it.what}, {"size", r.size}, {"witness", elems(g, members)}, {"witness_valid", valid}};
        if (it.expected) {
            e["expected"] = it.expected;
            ok = ok && valid && r.size == it.expected;
        }
        out.push_back(std::move(e));
    }
    return verdict(ok, {{"values", std::move(out)}});
}

Outcome check_w_set(GroupContext& ctx) {
    const auto& g = ctx.group();
    const auto& sup = ctx.support();
    const auto& om = ctx.omega();
    const bool v_eq_w = sup.v == sup.w;
    json w = {{"d", om.d}, {"m", om.m}, {"V", sup.v.size()}, {"W", sup.w.size()}, {"V_equals_W", v_eq_w}};
    bool ok = !v_eq_w || om.d == om.m;
    if (is_s4(ctx)) {
        const ElementSet expected = s4_class_set(g, "X2") | s4_class_set(g, "X3");
        w["W_equals_X2_X3"] = sup.w == expected;
        w["W_elements"] = elems(g, sup.w);
        ok = ok && sup.w == expected && !v_eq_w;
    }
    if (!ctx.flags().is_soluble) return {CheckStatus::Observation, std::move(w)};
    return verdict(ok, std::move(w));
}

Outcome check_degree_divisibility(GroupContext& ctx) {
    const auto& g = ctx.group();
    const auto& om = ctx.omega();
    json by_u = json::array();
    std::size_t at_d = 0;
    for (std::size_t u = om.d; u <= om.m; ++u) {
        if (u == 0) continue;
        const auto& graph = ctx.graph(GraphKind::Rank, u, false);
        json bad = json::array();
        for (Element x = 1; x < g.order(); ++x) {
            const std::size_t deg = graph.graph.degree(x), ord = element_order(g, x);
            if (deg % ord != 0) bad.push_back({{"element", elem(g, x)}, {"order", ord}, {"degree", deg}});
        }
        if (u == om.d) at_d = bad.size();
        by_u.push_back({{"u", u}, {"non_divisible", std::move(bad)}});
    }
    return {CheckStatus::Observation, {{"d", om.d}, {"counterexamples_at_d", at_d}, {"by_u", std::move(by_u)}}};
}

json cycle_json(const FiniteGroup& g, const IndependenceGraph& graph, const std::vector<Vertex>& cycle) {
    std::vector<Element> xs;
    for (Vertex v : cycle) xs.push_back(graph.vertices[v]);
    return elems(g, xs);
}

/// Status plus its evidence: the cycle for yes, the toughness cut for a cut-based no.
void add_hamilton_evidence(json& w, const FiniteGroup& g, const IndependenceGraph& delta, const HamiltonResult& h) {
    w["hamiltonian"] = h.status == HamiltonStatus::Yes ? "yes" : h.status == HamiltonStatus::No ? "no" : "unknown";
    w["dirac"] = h.dirac;
    w["nodes"] = h.nodes;
    if (h.status == HamiltonStatus::Yes) {
        w["cycle"] = cycle_json(g, delta, h.cycle);
        w["cycle_valid"] = is_hamiltonian_cycle(delta.graph, h.cycle);
    }
    if (!h.cut.empty()) {
        w["cut"] = cycle_json(g, delta, h.cut);
        w["components_without_cut"] = components_without(delta.graph, h.cut);
    }
}

Outcome check_hamiltonian_nilpotent(GroupContext& ctx) {
    if (!ctx.flags().is_nilpotent || ctx.flags().is_cyclic) return not_applicable("not nilpotent non-cyclic");
    const auto& g = ctx.group();
    const auto& lat = ctx.lattice();
    const auto& delta = ctx.delta();
    const auto h = hamiltonian_cycle(delta.graph, ctx.limits().analysis.hamilton_budget);
    if (h.status == HamiltonStatus::Unknown)
        return {CheckStatus::SkippedBudget, {{"reason", "hamiltonian search budget"}, {"nodes", h.nodes}}};
    const bool cycle_ok = h.status == HamiltonStatus::Yes && is_hamiltonian_cycle(delta.graph, h.cycle);
    json mismatches = json::array();
    for (Vertex v = 0; v < delta.vertex_count(); ++v) {
        const Element x = delta.vertices[v];
        const std::size_t expected = g.order() - lat.at(lat.join(lat.frattini(), x)).order();
        if (delta.graph.degree(v) != expected)
            mismatches.push_back({{"element", elem(g, x)}, {"degree", delta.graph.degree(v)}, {"formula", expected}});
    }
    json w = {{"vertices", delta.vertex_count()}, {"degree_formula_mismatches", mismatches}};
    add_hamilton_evidence(w, g, delta, h);
    return verdict(cycle_ok && mismatches.empty(), std::move(w));
}

Outcome check_hamiltonian_probe(GroupContext& ctx) {
    if (ctx.flags().is_cyclic) return not_applicable("cyclic");
    const auto& delta = ctx.delta();
    if (delta.vertex_count() < 3)
        return {CheckStatus::Observation, {{"vertices", delta.vertex_count()}, {"hamiltonian", "too-small"}}};
    const auto h = hamiltonian_cycle(delta.graph, ctx.limits().analysis.hamilton_budget);
    json w = {{"vertices", delta.vertex_count()}};
    add_hamilton_evidence(w, ctx.group(), delta, h);
    return {CheckStatus::Observation, std::move(w)};
}

Outcome check_c5c4(GroupContext& ctx) {
    if (ctx.group().origin() != "semidirect_c5_c4") return not_applicable("only for semidirect_c5_c4");
    const auto& g = ctx.group();
    const auto& delta = ctx.delta();
    const Element b2 = *g.find_label("b^2");
    const auto v = delta.vertex_of(b2);
    const std::size_t deg = v ? delta.graph.degree(*v) : 0;
    return verdict(delta.vertex_count() == 19 && deg == 8,
                   {{"vertices", delta.vertex_count()}, {"degree_b^2", deg}, {"element", elem(g, b2)}});
}

Outcome run_check(CheckId id, GroupContext& ctx) {
    switch (id) {
        case CheckId::ConnectivityMain: return check_connectivity_main(ctx);
        case CheckId::ConnectivityRankU: return check_connectivity_rank_u(ctx);
        case CheckId::ConnectivityRankUProbe: return check_connectivity_rank_u_probe(ctx);
        case CheckId::SwapConnectivity: return check_swap_connectivity(ctx);
        case CheckId::IsolatedCharacterization: return check_isolated(ctx);
        case CheckId::EdgeLift: return check_edge_lift(ctx);
        case CheckId::TarskiRange: return check_tarski(ctx);
        case CheckId::PlanarityCyclic: return check_planarity_cyclic(ctx);
        case CheckId::PlanarityNoncyclic: return check_planarity_noncyclic(ctx);
        case CheckId::PlanarityQuotientLemma: return check_planarity_quotient(ctx);
        case CheckId::S4Tables: return check_s4_tables(ctx);
        case CheckId::S4Extremal: return check_s4_extremal(ctx);
        case CheckId::WSet: return check_w_set(ctx);
        case CheckId::DegreeDivisibilityProbe: return check_degree_divisibility(ctx);
        case CheckId::HamiltonianNilpotent: return check_hamiltonian_nilpotent(ctx);
        case CheckId::HamiltonianProbe: return check_hamiltonian_probe(ctx);
        case CheckId::C5C4Golden: return check_c5c4(ctx);
    }
    throw Error(ErrorKind::PreconditionViolated, "unknown check id");
}

}  // namespace

VerificationReport run_suite(const std::vector<CatalogEntry>& catalog, const std::vector<CheckSpec>& checks,
                             const VerifyLimits& limits) {
    VerificationReport report;
    for (const auto& entry : catalog) {
        FiniteGroup g = load_group(entry);
        if (g.order() > limits.max_order) continue;
        GroupContext ctx(entry, std::move(g), limits);
        for (const auto& spec : checks) {
            ReportEntry e;
            e.group = entry.name;
            e.order = ctx.group().order();
            e.check = spec.id;
            const auto start = std::chrono::steady_clock::now();
            if (e.order > spec.max_order) {
                e.status = CheckStatus::SkippedNotApplicable;
                e.witness = {{"reason", "order above check limit " + std::to_string(spec.max_order)}};
            } else {
                try {
                    auto out = run_check(spec.id, ctx);
                    e.status = out.status;
                    e.witness = std::move(out.witness);
                } catch (const Error& err) {
                    if (err.kind() != ErrorKind::BudgetExceeded) throw;
                    e.status = CheckStatus::SkippedBudget;
                    e.witness = {{"reason", err.what()}};
                }
            }
            if (is_probe(spec.id) && (e.status == CheckStatus::Pass || e.status == CheckStatus::Fail))
                e.status = CheckStatus::Observation;
            e.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            report.entries.push_back(std::move(e));
        }
    }
    std::stable_sort(report.entries.begin(), report.entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
        if (a.order != b.order) return a.order < b.order;
        if (a.group != b.group) return a.group < b.group;
        return std::string(to_string(a.check)) < std::string(to_string(b.check));
    });
    return report;
}

VerificationReport run_suite(const std::vector<CatalogEntry>& catalog, const std::vector<CheckId>& checks,
                             const VerifyLimits& limits) {
    std::vector<CheckSpec> specs;
    for (CheckId id : checks) specs.push_back({id});
    return run_suite(catalog, specs, limits);
}

}  // namespace indep
