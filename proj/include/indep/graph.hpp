#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace indep {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph in compressed sparse row form. Neighbor lists are
/// sorted; loops and parallel edges are dropped on construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : offsets_(n + 1, 0) {}
    static Graph from_edges(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept {
        return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    bool adjacent(Vertex u, Vertex v) const noexcept;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Subgraph on `keep`; vertex i of the result is keep[i].
    Graph induced_subgraph(std::span<const Vertex> keep) const;
    Graph complement() const;

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
    }

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
};

/// Dense adjacency rows for the exact searches on small graphs.
class BitMatrix {
public:
    explicit BitMatrix(const Graph& g);
    std::size_t size() const noexcept { return n_; }
    std::size_t words() const noexcept { return words_; }
    const std::uint64_t* row(Vertex v) const noexcept { return bits_.data() + v * words_; }
    bool test(Vertex u, Vertex v) const noexcept { return (row(u)[v >> 6] >> (v & 63)) & 1u; }

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace indep
