#include "indep/analysis.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include "indep/error.hpp"

namespace indep {

Components components(const Graph& g) {
    Components c;
    const std::size_t n = g.vertex_count();
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    c.label.assign(n, unset);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (c.label[s] != unset) continue;
        const auto id = static_cast<std::uint32_t>(c.members.size());
        c.members.emplace_back();
        c.label[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            c.members[id].push_back(v);
            for (Vertex w : g.neighbors(v))
                if (c.label[w] == unset) {
                    c.label[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(c.members[id].begin(), c.members[id].end());
    }
    return c;
}

// ---------------------------------------------------------------- planarity

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

}  // namespace

namespace {

// The isolating subgraph can carry pendant paths; they are never part of
// the subdivision itself.
void prune_pendant_edges(std::vector<Edge>& edges) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<Vertex, std::size_t> deg;
        for (auto [a, b] : edges) ++deg[a], ++deg[b];
        auto pendant = [&](const Edge& e) { return deg[e.first] == 1 || deg[e.second] == 1; };
        const auto old = edges.size();
        edges.erase(std::remove_if(edges.begin(), edges.end(), pendant), edges.end());
        changed = edges.size() != old;
    }
}

bool planar_edges(std::size_t n, const std::vector<Edge>& edges) {
    BoostGraph bg(n);
    for (auto [a, b] : edges) boost::add_edge(a, b, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

// Boost's isolating subgraph is non-planar but not always a bare subdivision.
// Dropping every edge whose removal keeps it non-planar leaves an edge-minimal
// non-planar graph, which is a K5 or K3,3 subdivision.
void minimize_nonplanar(std::size_t n, std::vector<Edge>& edges) {
    for (std::size_t i = 0; i < edges.size();) {
        std::vector<Edge> rest = edges;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (planar_edges(n, rest))
            ++i;
        else
            edges = std::move(rest);
    }
}

}  // namespace

PlanarityResult is_planar(const Graph& g) {
    PlanarityResult r;
    const std::size_t v = g.vertex_count(), e = g.edge_count();
    r.decided_by_edge_bound = v >= 3 && e > 3 * v - 6;

    BoostGraph bg(v);
    for (auto [a, b] : g.edges()) boost::add_edge(a, b, bg);
    int next = 0;
    for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(boost::edge_index, bg, *it, next++);

    std::vector<std::vector<BoostEdge>> embedding(v);
    std::vector<BoostEdge> kuratowski;
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    if (r.decided_by_edge_bound && planar)
        throw Error(ErrorKind::PreconditionViolated, "planarity test disagrees with the edge bound");
    r.planar = planar;
    if (planar) {
        r.rotation.resize(v);
        for (Vertex x = 0; x < v; ++x)
            for (const auto& ed : embedding[x]) {
                auto s = static_cast<Vertex>(boost::source(ed, bg));
                auto t = static_cast<Vertex>(boost::target(ed, bg));
                r.rotation[x].push_back(s == x ? t : s);
            }
    } else {
        for (const auto& ed : kuratowski) {
            auto s = static_cast<Vertex>(boost::source(ed, bg));
            auto t = static_cast<Vertex>(boost::target(ed, bg));
            r.kuratowski.emplace_back(std::min(s, t), std::max(s, t));
        }
        std::sort(r.kuratowski.begin(), r.kuratowski.end());
        prune_pendant_edges(r.kuratowski);
        r.obstruction = classify_kuratowski(g, r.kuratowski);
        if (r.obstruction == Obstruction::None) {
            minimize_nonplanar(v, r.kuratowski);
            r.obstruction = classify_kuratowski(g, r.kuratowski);
        }
    }
    return r;
}

bool validate_embedding(const Graph& g, const std::vector<std::vector<Vertex>>& rotation) {
    const std::size_t n = g.vertex_count();
    if (rotation.size() != n) return false;
    // position of each neighbor inside the rotation of v
    std::vector<std::map<Vertex, std::size_t>> pos(n);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> sorted = rotation[v];
        std::sort(sorted.begin(), sorted.end());
        auto nb = g.neighbors(v);
        if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) return false;
        for (std::size_t i = 0; i < rotation[v].size(); ++i) pos[v][rotation[v][i]] = i;
    }
    const Components comp = components(g);
    std::vector<std::size_t> faces(comp.count(), 0);
    std::map<Edge, bool> used;  // directed
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w : rotation[u]) {
            if (used[{u, w}]) continue;
            ++faces[comp.label[u]];
            Vertex a = u, b = w;
            while (!used[{a, b}]) {
                used[{a, b}] = true;
                const auto& rb = rotation[b];
                Vertex c = rb[(pos[b][a] + 1) % rb.size()];
                a = b;
                b = c;
            }
        }
    for (std::size_t c = 0; c < comp.count(); ++c) {
        std::size_t verts = comp.members[c].size(), edges = 0;
        for (Vertex v : comp.members[c]) edges += g.degree(v);
        edges /= 2;
        if (edges == 0) continue;
        if (verts + faces[c] != edges + 2) return false;
    }
    return true;
}

Obstruction classify_kuratowski(const Graph& g, const std::vector<Edge>& edges) {
    std::map<Vertex, std::vector<Vertex>> adj;
    std::vector<Edge> seen;
    for (auto [a, b] : edges) {
        if (a == b || !g.adjacent(a, b)) return Obstruction::None;
        seen.emplace_back(std::min(a, b), std::max(a, b));
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return Obstruction::None;

    std::vector<Vertex> branch;
    for (const auto& [v, nb] : adj) {
        if (nb.size() < 2 || nb.size() > 4) return Obstruction::None;
        if (nb.size() >= 3) branch.push_back(v);
    }
    // follow every path of degree-2 vertices out of each branch vertex
    std::map<Vertex, std::size_t> visits;
    std::vector<Edge> paths;
    for (Vertex b : branch) {
        for (Vertex first : adj[b]) {
            Vertex prev = b, cur = first;
            while (adj[cur].size() == 2) {
                ++visits[cur];
                Vertex nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
                if (cur == b && adj[cur].size() == 2) return Obstruction::None;
            }
            if (cur == b) return Obstruction::None;
            paths.emplace_back(std::min(b, cur), std::max(b, cur));
        }
    }
    // every subdivision vertex lies on exactly one path, walked once from each end
    for (const auto& [v, nb] : adj)
        if (nb.size() == 2 && visits[v] != 2) return Obstruction::None;
    std::sort(paths.begin(), paths.end());
    std::vector<Edge> distinct;
    for (std::size_t i = 0; i < paths.size(); i += 2) {
        if (i + 1 >= paths.size() || paths[i] != paths[i + 1]) return Obstruction::None;
        distinct.push_back(paths[i]);
    }
    if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end()) return Obstruction::None;

    if (branch.size() == 5 && distinct.size() == 10) {
        for (Vertex b : branch)
            if (adj[b].size() != 4) return Obstruction::None;
        return Obstruction::K5;
    }
    if (branch.size() == 6 && distinct.size() == 9) {
        for (Vertex b : branch)
            if (adj[b].size() != 3) return Obstruction::None;
        std::map<Vertex, int> side;
        side[branch[0]] = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto [a, b] : distinct) {
                bool ha = side.count(a), hb = side.count(b);
                if (ha && hb && side[a] == side[b]) return Obstruction::None;
                if (ha && !hb) side[b] = 1 - side[a], changed = true;
                if (hb && !ha) side[a] = 1 - side[b], changed = true;
            }
        }
        int ones = 0;
        for (auto& [v, s] : side) ones += s;
        if (side.size() == 6 && ones == 3) return Obstruction::K33;
    }
    return Obstruction::None;
}

// ------------------------------------------------------------------ cliques

namespace {

class MaxClique {
public:
    MaxClique(const Graph& g, std::uint64_t budget) : adj_(g), budget_(budget) {}

    CliqueResult run(const Graph& g) {
        std::vector<Vertex> p(g.vertex_count());
        std::iota(p.begin(), p.end(), 0);
        std::stable_sort(p.begin(), p.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        if (!p.empty()) expand(p);
        CliqueResult r;
        r.witness = best_;
        std::sort(r.witness.begin(), r.witness.end());
        r.size = r.witness.size();
        return r;
    }

private:
    // greedy sequential colouring; returns vertices ordered by colour with
    // the colour number (1-based) of each
    void colour_sort(const std::vector<Vertex>& p, std::vector<Vertex>& order, std::vector<std::size_t>& colour) {
        std::vector<std::vector<Vertex>> classes;
        for (Vertex v : p) {
            std::size_t k = 0;
            for (; k < classes.size(); ++k) {
                bool clash = false;
                for (Vertex w : classes[k])
                    if (adj_.test(v, w)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (k == classes.size()) classes.emplace_back();
            classes[k].push_back(v);
        }
        order.clear();
        colour.clear();
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (Vertex v : classes[k]) {
                order.push_back(v);
                colour.push_back(k + 1);
            }
    }

    void expand(const std::vector<Vertex>& p) {
        std::vector<Vertex> order;
        std::vector<std::size_t> colour;
        colour_sort(p, order, colour);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (cur_.size() + colour[i] <= best_.size()) return;
            if (++nodes_ > budget_)
                throw Error(ErrorKind::BudgetExceeded, "clique search exceeded its node budget",
                            {static_cast<std::int64_t>(budget_)});
            const Vertex v = order[i];
            cur_.push_back(v);
            std::vector<Vertex> next;
            for (std::size_t k = 0; k < i; ++k)
                if (adj_.test(v, order[k])) next.push_back(order[k]);
            if (next.empty()) {
                if (cur_.size() > best_.size()) best_ = cur_;
            } else {
                expand(next);
            }
            cur_.pop_back();
        }
    }

    BitMatrix adj_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Vertex> cur_, best_;
};

}  // namespace

CliqueResult clique_number(const Graph& g, std::uint64_t node_budget) {
    return MaxClique(g, node_budget).run(g);
}

CliqueResult independence_number(const Graph& g, std::uint64_t node_budget) {
    Graph c = g.complement();
    return MaxClique(c, node_budget).run(c);
}

// ------------------------------------------------------------ hamiltonicity

bool is_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
    const std::size_t n = g.vertex_count();
    if (n < 3 || cycle.size() != n) return false;
    std::vector<char> seen(n, 0);
    for (Vertex v : cycle) {
        if (v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!g.adjacent(cycle[i], cycle[(i + 1) % n])) return false;
    return true;
}

std::size_t components_without(const Graph& g, const std::vector<Vertex>& removed) {
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    for (Vertex v : removed) seen[v] = 1;
    std::size_t count = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++count;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x))
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
    }
    return count;
}

namespace {

/// A neighborhood whose removal leaves more components than its size.
std::optional<std::vector<Vertex>> neighborhood_cut(const Graph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<Vertex> s(g.neighbors(v).begin(), g.neighbors(v).end());
        if (components_without(g, s) > s.size()) return s;
    }
    return std::nullopt;
}

bool ore_condition(const Graph& g) {
    const std::size_t n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v) && g.degree(u) + g.degree(v) < n) return false;
    return true;
}

/// Palmer's algorithm: close gaps in a cyclic ordering by segment reversals.
/// Always succeeds under Ore's condition.
std::optional<std::vector<Vertex>> palmer(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> c(n);
    std::iota(c.begin(), c.end(), 0);
    auto at = [&](std::size_t i) { return c[i % n]; };
    for (std::size_t iter = 0; iter <= n; ++iter) {
        std::optional<std::size_t> gap;
        for (std::size_t i = 0; i < n && !gap; ++i)
            if (!g.adjacent(at(i), at(i + 1))) gap = i;
        if (!gap) return c;
        const std::size_t i = *gap;
        std::optional<std::size_t> jj;
        for (std::size_t k = 2; k < n && !jj; ++k) {
            std::size_t j = i + k;
            if (g.adjacent(at(i), at(j)) && g.adjacent(at(i + 1), at(j + 1))) jj = j;
        }
        if (!jj) return std::nullopt;
        // reverse positions i+1 .. j
        std::size_t lo = i + 1, hi = *jj;
        while (lo < hi) {
            std::swap(c[lo % n], c[hi % n]);
            ++lo;
            --hi;
        }
    }
    return std::nullopt;
}

class HamiltonSearch {
public:
    HamiltonSearch(const Graph& g, std::uint64_t budget)
        : g_(g), adj_(g), budget_(budget), n_(g.vertex_count()), unvisited_(adj_.words(), 0) {}

    HamiltonResult run() {
        HamiltonResult r;
        for (Vertex v = 1; v < n_; ++v) unvisited_[v >> 6] |= std::uint64_t{1} << (v & 63);
        path_.push_back(0);
        bool found = false;
        if (feasible(0)) found = dfs(0);
        r.nodes = nodes_;
        if (found) {
            r.status = HamiltonStatus::Yes;
            r.cycle = path_;
        } else {
            r.status = out_of_budget_ ? HamiltonStatus::Unknown : HamiltonStatus::No;
        }
        return r;
    }

private:
    std::size_t avail_count(Vertex x, Vertex end) const {
        const std::uint64_t* row = adj_.row(x);
        std::size_t c = 0;
        for (std::size_t w = 0; w < unvisited_.size(); ++w) c += static_cast<std::size_t>(std::popcount(row[w] & unvisited_[w]));
        if (adj_.test(x, end)) ++c;
        if (end != 0 && adj_.test(x, 0)) ++c;
        return c;
    }

    // every unvisited vertex must still be enterable and leavable
    bool feasible(Vertex end) const {
        bool any = false;
        for (std::size_t w = 0; w < unvisited_.size(); ++w) {
            std::uint64_t bits = unvisited_[w];
            while (bits) {
                any = true;
                auto x = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
                if (avail_count(x, end) < 2) return false;
            }
        }
        if (!any) return adj_.test(end, 0);
        return true;
    }

    bool dfs(Vertex end) {
        if (path_.size() == n_) return adj_.test(end, 0);
        if (++nodes_ > budget_) {
            out_of_budget_ = true;
            return false;
        }
        std::vector<std::pair<std::size_t, Vertex>> cand;
        for (Vertex w : g_.neighbors(end))
            if ((unvisited_[w >> 6] >> (w & 63)) & 1u) cand.emplace_back(avail_count(w, end), w);
        std::sort(cand.begin(), cand.end());
        for (auto [score, w] : cand) {
            unvisited_[w >> 6] &= ~(std::uint64_t{1} << (w & 63));
            path_.push_back(w);
            if (feasible(w) && dfs(w)) return true;
            path_.pop_back();
            unvisited_[w >> 6] |= std::uint64_t{1} << (w & 63);
            if (out_of_budget_) return false;
        }
        return false;
    }

    const Graph& g_;
    BitMatrix adj_;
    std::uint64_t budget_;
    std::size_t n_;
    std::vector<std::uint64_t> unvisited_;
    std::vector<Vertex> path_;
    std::uint64_t nodes_ = 0;
    bool out_of_budget_ = false;
};

}  // namespace

HamiltonResult hamiltonian_cycle(const Graph& g, std::uint64_t node_budget) {
    const std::size_t n = g.vertex_count();
    if (n < 3)
        throw Error(ErrorKind::PreconditionViolated,
                    "hamiltonian_cycle needs at least 3 vertices, got " + std::to_string(n),
                    {static_cast<std::int64_t>(n)});
    std::size_t min_deg = n;
    for (Vertex v = 0; v < n; ++v) min_deg = std::min(min_deg, g.degree(v));
    const bool dirac = 2 * min_deg >= n;

    if (dirac || ore_condition(g)) {
        if (auto c = palmer(g); c && is_hamiltonian_cycle(g, *c)) {
            HamiltonResult r;
            r.status = HamiltonStatus::Yes;
            r.cycle = std::move(*c);
            r.dirac = dirac;
            return r;
        }
    }
    if (!dirac) {
        if (auto cut = neighborhood_cut(g)) {
            HamiltonResult r;
            r.status = HamiltonStatus::No;
            r.cut = std::move(*cut);
            return r;
        }
    }
    HamiltonResult r = HamiltonSearch(g, node_budget).run();
    r.dirac = dirac;
    if (dirac && r.status != HamiltonStatus::Yes)
        throw Error(ErrorKind::PreconditionViolated, "Dirac graph without a Hamiltonian cycle found");
    return r;
}

// ------------------------------------------------------------ multipartite

MultipartiteResult recognize_complete_multipartite(const Graph& g) {
    const std::size_t n = g.vertex_count();
    MultipartiteResult r;
    std::vector<std::int64_t> part(n, -1);
    std::vector<std::size_t> sizes;
    for (Vertex v = 0; v < n; ++v) {
        if (part[v] >= 0) continue;
        const auto id = static_cast<std::int64_t>(sizes.size());
        std::vector<Vertex> members{v};
        for (Vertex w = 0; w < n; ++w)
            if (w != v && !g.adjacent(v, w)) members.push_back(w);
        for (Vertex w : members) {
            if (part[w] >= 0) {
                // w is non-adjacent to v but already sits in another part
                for (Vertex x = 0; x < n; ++x)
                    if (part[x] == part[w] && x != w && g.adjacent(v, x)) {
                        r.violation = std::array<Vertex, 3>{v, w, x};
                        return r;
                    }
                r.violation = std::array<Vertex, 3>{v, w, w};
                return r;
            }
            part[w] = id;
        }
        // members must be pairwise non-adjacent
        for (std::size_t a = 1; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (g.adjacent(members[a], members[b])) {
                    r.violation = std::array<Vertex, 3>{members[a], v, members[b]};
                    return r;
                }
        sizes.push_back(members.size());
    }
    std::sort(sizes.begin(), sizes.end());
    r.parts = std::move(sizes);
    return r;
}

// ------------------------------------------------------------------ degrees

DegreeProfile degree_profile(const IndependenceGraph& graph, const std::vector<ElementSet>* classes) {
    DegreeProfile p;
    const Graph& g = graph.graph;
    p.by_vertex.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) p.by_vertex[v] = g.degree(v);
    if (!classes) return p;
    if (graph.kind == GraphKind::Swap)
        throw Error(ErrorKind::PreconditionViolated, "class degrees need element-labelled vertices");
    for (const auto& cls : *classes) {
        std::optional<std::size_t> deg;
        std::optional<Element> first;
        bool mismatch = false;
        cls.for_each([&](Element e) {
            if (mismatch) return;
            auto v = graph.vertex_of(e);
            if (!v) return;
            if (!deg) {
                deg = g.degree(*v);
                first = e;
            } else if (*deg != g.degree(*v)) {
                mismatch = true;
                throw Error(ErrorKind::ClassDegreeMismatch,
                            "elements " + std::to_string(*first) + " and " + std::to_string(e) +
                                " are conjugate but have degrees " + std::to_string(*deg) + " and " +
                                std::to_string(g.degree(*v)),
                            {*first, e});
            }
        });
        p.by_class.push_back(deg);
    }
    return p;
}

GraphReport analyze(const IndependenceGraph& graph, const std::vector<ElementSet>* classes,
                    const AnalysisLimits& limits) {
    GraphReport r;
    const Graph& g = graph.graph;
    r.graph_name = graph.name();
    r.vertex_count = g.vertex_count();
    r.edge_count = g.edge_count();
    r.components = components(g);
    r.planarity = is_planar(g);
    r.clique = clique_number(g, limits.clique_budget);
    r.independent = independence_number(g, limits.clique_budget);
    if (g.vertex_count() >= 3) r.hamilton = hamiltonian_cycle(g, limits.hamilton_budget);
    r.multipartite = recognize_complete_multipartite(g);
    r.degrees = degree_profile(graph, graph.kind == GraphKind::Swap ? nullptr : classes);
    return r;
}

}  // namespace indep
