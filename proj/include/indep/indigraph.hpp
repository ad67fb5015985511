#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indep/gensets.hpp"
#include "indep/graph.hpp"

namespace indep {

enum class GraphKind { Full, Rank, Swap };

const char* to_string(GraphKind kind);

/// Gamma(G), Gamma_u(G) or the swap graph, optionally restricted to the
/// non-isolated vertices (the Delta form).
struct IndependenceGraph {
    std::string group_id;
    GraphKind kind = GraphKind::Full;
    /// rank u for Rank, tuple length d for Swap, unused for Full
    std::size_t u = 0;
    bool induced = false;
    /// group element behind each vertex (Full and Rank kinds)
    std::vector<Element> vertices;
    /// ordered generating tuple behind each vertex (Swap kind)
    std::vector<std::vector<Element>> tuples;
    Graph graph;

    std::size_t vertex_count() const noexcept { return graph.vertex_count(); }
    std::optional<Vertex> vertex_of(Element g) const;
    std::vector<std::string> vertex_labels(const FiniteGroup& g) const;
    std::string name() const;
};

/// Gamma(G) or Gamma_u(G) from an existing enumeration: x ~ y iff x != y and
/// both lie in one enumerated set (of size u for Rank).
IndependenceGraph build_graph(const FiniteGroup& g, const MinGenEnumeration& omega, GraphKind kind,
                              std::size_t u, bool induced);

/// Enumerates and builds; Swap kind is delegated to build_swap_graph with u = d.
IndependenceGraph build_graph(const SubgroupLattice& lat, GraphKind kind, std::size_t u, bool induced,
                              const SearchLimits& limits = {});

struct VertexSupport {
    std::string group_id;
    ElementSet v;
    std::map<std::size_t, ElementSet> vu;
    ElementSet w;
};

VertexSupport vertex_supports(const FiniteGroup& g, const MinGenEnumeration& omega);
VertexSupport vertex_supports(const SubgroupLattice& lat, const SearchLimits& limits = {});

struct EdgeCertificate {
    bool adjacent = false;
    std::vector<Element> witness;  // a minimal generating set containing both ends
};

/// Decides a single edge of Gamma (or Gamma_u) by a search seeded with {x, y}.
EdgeCertificate edge_test(const SubgroupLattice& lat, Element x, Element y, std::optional<std::size_t> u = {},
                          const SearchLimits& limits = {});

struct SwapLimits {
    std::uint64_t max_tuples = 2'000'000;
    std::uint64_t max_edges = 20'000'000;
};

/// Ordered generating d-tuples, flattened, in lexicographic order.
struct GeneratingTuples {
    std::size_t d = 0;
    std::vector<Element> flat;
    std::size_t count() const noexcept { return d ? flat.size() / d : 0; }
};

GeneratingTuples generating_tuples(const SubgroupLattice& lat, std::size_t d, const SwapLimits& limits = {});

/// Component label per tuple, computed by merging tuples that agree off one
/// coordinate; no edge list is materialised. Labels number components by
/// first appearance.
std::vector<std::uint32_t> swap_components(const GeneratingTuples& tuples);

/// The swap graph on ordered generating d-tuples; requires d = d(G).
IndependenceGraph build_swap_graph(const SubgroupLattice& lat, std::size_t d, const SwapLimits& limits = {});

}  // namespace indep
