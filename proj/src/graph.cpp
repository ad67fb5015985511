#include "indep/graph.hpp"

#include <algorithm>

namespace indep {

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
    std::vector<Edge> both;
    both.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u == v) continue;
        both.emplace_back(u, v);
        both.emplace_back(v, u);
    }
    std::sort(both.begin(), both.end());
    both.erase(std::unique(both.begin(), both.end()), both.end());

    Graph g(n);
    g.targets_.reserve(both.size());
    for (auto [u, v] : both) {
        ++g.offsets_[u + 1];
        g.targets_.push_back(v);
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced_subgraph(std::span<const Vertex> keep) const {
    std::vector<std::int64_t> pos(vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<std::int64_t>(i);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (Vertex w : neighbors(keep[i]))
            if (pos[w] > static_cast<std::int64_t>(i)) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(pos[w]));
    return from_edges(keep.size(), std::move(es));
}

Graph Graph::complement() const {
    std::vector<Edge> es;
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v = u + 1; v < vertex_count(); ++v)
            if (!adjacent(u, v)) es.emplace_back(u, v);
    return from_edges(vertex_count(), std::move(es));
}

BitMatrix::BitMatrix(const Graph& g)
    : n_(g.vertex_count()), words_((n_ + 63) / 64), bits_(n_ * words_, 0) {
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : g.neighbors(u)) bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
}

}  // namespace indep
