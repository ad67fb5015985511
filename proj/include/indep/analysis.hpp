#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "indep/graph.hpp"
#include "indep/indigraph.hpp"

namespace indep {

struct Components {
    /// component id per vertex; ids ordered by least member
    std::vector<std::uint32_t> label;
    std::vector<std::vector<Vertex>> members;

    std::size_t count() const noexcept { return members.size(); }
};

Components components(const Graph& g);

enum class Obstruction { None, K5, K33 };

struct PlanarityResult {
    bool planar = false;
    /// e > 3v - 6 settled the answer before the embedding search
    bool decided_by_edge_bound = false;
    /// clockwise neighbor order per vertex (planar case)
    std::vector<std::vector<Vertex>> rotation;
    /// edges of a K5 or K3,3 subdivision (non-planar case)
    std::vector<Edge> kuratowski;
    Obstruction obstruction = Obstruction::None;
};

PlanarityResult is_planar(const Graph& g);

/// Face tracing over the rotation system; true iff every component with an
/// edge satisfies v - e + f = 2 and the rotation matches the adjacency.
bool validate_embedding(const Graph& g, const std::vector<std::vector<Vertex>>& rotation);

/// Which forbidden graph `edges` subdivides (None if neither, or if an edge is
/// not in g).
Obstruction classify_kuratowski(const Graph& g, const std::vector<Edge>& edges);

struct CliqueResult {
    std::size_t size = 0;
    std::vector<Vertex> witness;  // ascending
};

/// Exact maximum clique: branch and bound with greedy colouring bounds.
CliqueResult clique_number(const Graph& g, std::uint64_t node_budget = 100'000'000);

/// Exact maximum independent set via clique_number on the complement.
CliqueResult independence_number(const Graph& g, std::uint64_t node_budget = 100'000'000);

enum class HamiltonStatus { Yes, No, Unknown };

struct HamiltonResult {
    HamiltonStatus status = HamiltonStatus::Unknown;
    std::vector<Vertex> cycle;  // each vertex once; closes back to cycle.front()
    bool dirac = false;         // min degree >= v/2
    /// status No from a toughness cut: removing these vertices leaves more
    /// than cut.size() components
    std::vector<Vertex> cut;
    std::uint64_t nodes = 0;
};

/// Requires at least 3 vertices. Ore-type graphs (which include the Dirac
/// ones) get a cycle from Palmer's gap-closing rotations. Otherwise the
/// neighborhoods N(v) are tried as toughness cuts, then pruned backtracking
/// decides, Unknown once the budget is spent.
HamiltonResult hamiltonian_cycle(const Graph& g, std::uint64_t node_budget = 10'000'000);

bool is_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& cycle);

/// Number of components of g minus `removed`.
std::size_t components_without(const Graph& g, const std::vector<Vertex>& removed);

struct MultipartiteResult {
    /// part sizes, ascending, when non-adjacency is an equivalence relation
    std::optional<std::vector<std::size_t>> parts;
    /// otherwise (a, b, c) with a !~ b, b !~ c but a ~ c
    std::optional<std::array<Vertex, 3>> violation;
};

MultipartiteResult recognize_complete_multipartite(const Graph& g);

struct DegreeProfile {
    std::vector<std::size_t> by_vertex;
    /// per conjugacy class; empty when the class has no vertex in the graph
    std::vector<std::optional<std::size_t>> by_class;
};

/// Degrees per vertex, and per class when `classes` is given. Throws
/// ClassDegreeMismatch with the offending pair if a class is not
/// degree-homogeneous.
DegreeProfile degree_profile(const IndependenceGraph& graph, const std::vector<ElementSet>* classes = nullptr);

struct AnalysisLimits {
    std::uint64_t clique_budget = 100'000'000;
    std::uint64_t hamilton_budget = 10'000'000;
};

struct GraphReport {
    std::string graph_name;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    Components components;
    PlanarityResult planarity;
    CliqueResult clique;
    CliqueResult independent;
    std::optional<HamiltonResult> hamilton;  // absent below 3 vertices
    MultipartiteResult multipartite;
    DegreeProfile degrees;
};

GraphReport analyze(const IndependenceGraph& graph, const std::vector<ElementSet>* classes = nullptr,
                    const AnalysisLimits& limits = {});

}  // namespace indep
