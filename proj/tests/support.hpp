#pragma once

#include <string>
#include <vector>

#include "indep/verify.hpp"
#include "oracles.hpp"

namespace testing_support {

struct NamedGroup {
    std::string name;
    indep::FiniteGroup group;
};

/// Catalog groups of order <= max_order, loaded.
inline std::vector<NamedGroup> catalog_groups(std::size_t max_order) {
    std::vector<NamedGroup> out;
    for (const auto& e : indep::default_catalog(max_order)) out.push_back({e.name, indep::load_group(e)});
    return out;
}

inline oracle::Table table_of(const indep::FiniteGroup& g) { return g.table(); }

inline oracle::Adj adjacency(const indep::Graph& g) {
    oracle::Adj a(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
    return a;
}

inline oracle::Set sorted(std::vector<indep::Element> xs) {
    std::sort(xs.begin(), xs.end());
    return xs;
}

/// floor(log2 n) + 1, one more than any minimal generating set can have.
inline std::size_t size_cap(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t{1} << (k + 1)) <= n) ++k;
    return k + 1;
}

}  // namespace testing_support
