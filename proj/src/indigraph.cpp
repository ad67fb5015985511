#include "indep/indigraph.hpp"

#include <algorithm>
#include <numeric>

#include "indep/error.hpp"

namespace indep {

const char* to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::Full: return "full";
        case GraphKind::Rank: return "rank";
        case GraphKind::Swap: return "swap";
    }
    return "?";
}

std::optional<Vertex> IndependenceGraph::vertex_of(Element g) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), g);
    if (it == vertices.end() || *it != g) return std::nullopt;
    return static_cast<Vertex>(it - vertices.begin());
}

std::vector<std::string> IndependenceGraph::vertex_labels(const FiniteGroup& g) const {
    std::vector<std::string> out;
    if (kind == GraphKind::Swap) {
        for (const auto& t : tuples) {
            std::string s = "(";
            for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "; " : "") + g.label(t[i]);
            out.push_back(s + ")");
        }
    } else {
        for (Element e : vertices) out.push_back(g.label(e));
    }
    return out;
}

std::string IndependenceGraph::name() const {
    std::string base = kind == GraphKind::Swap ? "Sigma" : (induced ? "Delta" : "Gamma");
    if (kind != GraphKind::Full) base += "_" + std::to_string(u);
    return base + "(" + group_id + ")";
}

IndependenceGraph build_graph(const FiniteGroup& g, const MinGenEnumeration& omega, GraphKind kind, std::size_t u,
                              bool induced) {
    if (kind == GraphKind::Swap)
        throw Error(ErrorKind::PreconditionViolated, "swap graphs are built by build_swap_graph");
    omega.require_complete();
    const std::size_t n = g.order();
    std::vector<std::uint64_t> seen(n * ((n + 63) / 64), 0);
    const std::size_t words = (n + 63) / 64;
    std::vector<Edge> edges;
    auto mark = [&](std::span<const Element> s) {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                Element a = s[i], b = s[j];
                auto& w = seen[a * words + (b >> 6)];
                const std::uint64_t bit = std::uint64_t{1} << (b & 63);
                if (w & bit) continue;
                w |= bit;
                edges.emplace_back(a, b);
            }
    };
    if (kind == GraphKind::Rank)
        omega.for_each_set(u, mark);
    else
        omega.for_each_set(mark);

    IndependenceGraph out;
    out.group_id = g.origin();
    out.kind = kind;
    out.u = kind == GraphKind::Rank ? u : 0;
    out.induced = induced;
    Graph full = Graph::from_edges(n, std::move(edges));
    if (!induced) {
        out.vertices.resize(n);
        std::iota(out.vertices.begin(), out.vertices.end(), 0);
        out.graph = std::move(full);
    } else {
        for (Vertex v = 0; v < n; ++v)
            if (full.degree(v) > 0) out.vertices.push_back(v);
        out.graph = full.induced_subgraph(out.vertices);
    }
    return out;
}

IndependenceGraph build_graph(const SubgroupLattice& lat, GraphKind kind, std::size_t u, bool induced,
                              const SearchLimits& limits) {
    if (kind == GraphKind::Swap) return build_swap_graph(lat, u);
    auto omega = enumerate_min_gen_sets(lat, kind == GraphKind::Rank ? std::optional<std::size_t>(u) : std::nullopt,
                                        limits);
    return build_graph(lat.group(), omega, kind, u, induced);
}

VertexSupport vertex_supports(const FiniteGroup& g, const MinGenEnumeration& omega) {
    omega.require_complete();
    VertexSupport s;
    s.group_id = g.origin();
    s.v = g.empty_set();
    for (std::size_t u = omega.d; u <= omega.m; ++u) {
        ElementSet vu = g.empty_set();
        if (u >= 2)
            omega.for_each_set(u, [&](std::span<const Element> xs) {
                for (Element x : xs) vu.insert(x);
            });
        s.v |= vu;
        s.vu.emplace(u, std::move(vu));
    }
    s.w = s.vu.empty() ? g.empty_set() : g.all();
    for (const auto& [u, vu] : s.vu) s.w &= vu;
    return s;
}

VertexSupport vertex_supports(const SubgroupLattice& lat, const SearchLimits& limits) {
    return vertex_supports(lat.group(), enumerate_min_gen_sets(lat, std::nullopt, limits));
}

EdgeCertificate edge_test(const SubgroupLattice& lat, Element x, Element y, std::optional<std::size_t> u,
                          const SearchLimits& limits) {
    const std::size_t n = lat.group().order();
    if (x == y || x >= n || y >= n || x == FiniteGroup::identity() || y == FiniteGroup::identity())
        throw Error(ErrorKind::PreconditionViolated, "edge_test needs two distinct non-identity elements",
                    {x, y});
    EdgeCertificate cert;
    const Element seed[] = {x, y};
    search_min_gen_sets(
        lat, seed, u,
        [&](std::span<const Element> s) {
            cert.adjacent = true;
            cert.witness.assign(s.begin(), s.end());
            return false;
        },
        limits);
    return cert;
}

GeneratingTuples generating_tuples(const SubgroupLattice& lat, std::size_t d, const SwapLimits& limits) {
    const std::size_t n = lat.group().order();
    GeneratingTuples out;
    out.d = d;
    if (d == 0) return out;
    std::vector<Element> cur(d);
    std::vector<std::size_t> closure(d + 1, lat.trivial());
    std::size_t depth = 0;
    cur[0] = 0;
    // iterative odometer over G^d keeping prefix closures
    while (true) {
        closure[depth + 1] = lat.join(closure[depth], cur[depth]);
        if (depth + 1 == d) {
            if (closure[d] == lat.whole()) {
                out.flat.insert(out.flat.end(), cur.begin(), cur.end());
                if (out.count() > limits.max_tuples)
                    throw Error(ErrorKind::BudgetExceeded,
                                "more than " + std::to_string(limits.max_tuples) + " generating " + std::to_string(d) +
                                    "-tuples in " + lat.group().origin(),
                                {static_cast<std::int64_t>(limits.max_tuples)});
            }
            // advance
            while (true) {
                if (++cur[depth] < n) break;
                if (depth == 0) return out;
                --depth;
            }
        } else {
            ++depth;
            cur[depth] = 0;
        }
    }
}

namespace {

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::uint32_t> parent;
};

/// Calls f(run) for every maximal run of tuple indices agreeing off coordinate i.
template <class F>
void for_each_bucket(const GeneratingTuples& t, std::size_t i, F&& f) {
    const std::size_t d = t.d;
    std::vector<std::uint32_t> idx(t.count());
    std::iota(idx.begin(), idx.end(), 0);
    auto key_less = [&](std::uint32_t a, std::uint32_t b) {
        for (std::size_t j = 0; j < d; ++j) {
            if (j == i) continue;
            Element x = t.flat[a * d + j], y = t.flat[b * d + j];
            if (x != y) return x < y;
        }
        return false;
    };
    std::stable_sort(idx.begin(), idx.end(), key_less);
    std::size_t start = 0;
    for (std::size_t k = 1; k <= idx.size(); ++k) {
        if (k == idx.size() || key_less(idx[k - 1], idx[k])) {
            f(std::span<const std::uint32_t>(idx.data() + start, k - start));
            start = k;
        }
    }
}

}  // namespace

std::vector<std::uint32_t> swap_components(const GeneratingTuples& tuples) {
    DisjointSets ds(tuples.count());
    for (std::size_t i = 0; i < tuples.d; ++i)
        for_each_bucket(tuples, i, [&](std::span<const std::uint32_t> run) {
            for (std::size_t k = 1; k < run.size(); ++k) ds.unite(run[0], run[k]);
        });
    std::vector<std::uint32_t> label(tuples.count());
    std::vector<std::int64_t> remap(tuples.count(), -1);
    std::uint32_t next = 0;
    for (std::uint32_t v = 0; v < tuples.count(); ++v) {
        auto r = ds.find(v);
        if (remap[r] < 0) remap[r] = next++;
        label[v] = static_cast<std::uint32_t>(remap[r]);
    }
    return label;
}

IndependenceGraph build_swap_graph(const SubgroupLattice& lat, std::size_t d, const SwapLimits& limits) {
    const std::size_t dg = relative_rank(lat, {});
    if (d != dg)
        throw Error(ErrorKind::PreconditionViolated,
                    "swap graph requires d = d(G) = " + std::to_string(dg) + ", got " + std::to_string(d),
                    {static_cast<std::int64_t>(d), static_cast<std::int64_t>(dg)});
    GeneratingTuples t = generating_tuples(lat, d, limits);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < d; ++i)
        for_each_bucket(t, i, [&](std::span<const std::uint32_t> run) {
            for (std::size_t a = 0; a < run.size(); ++a)
                for (std::size_t b = a + 1; b < run.size(); ++b) edges.emplace_back(run[a], run[b]);
            if (edges.size() > limits.max_edges)
                throw Error(ErrorKind::BudgetExceeded,
                            "swap graph of " + lat.group().origin() + " exceeds " +
                                std::to_string(limits.max_edges) + " edges",
                            {static_cast<std::int64_t>(limits.max_edges)});
        });
    IndependenceGraph out;
    out.group_id = lat.group().origin();
    out.kind = GraphKind::Swap;
    out.u = d;
    out.induced = false;
    out.tuples.reserve(t.count());
    for (std::size_t k = 0; k < t.count(); ++k)
        out.tuples.emplace_back(t.flat.begin() + static_cast<std::ptrdiff_t>(k * d),
                                t.flat.begin() + static_cast<std::ptrdiff_t>((k + 1) * d));
    out.graph = Graph::from_edges(t.count(), std::move(edges));
    return out;
}

}  // namespace indep
