#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "indep/lattice.hpp"

namespace indep {

/// Defaults shared by all generating-set searches.
struct SearchLimits {
    /// Backtracking nodes (candidate extensions examined) before giving up.
    std::uint64_t node_budget = 100'000'000;
    /// Largest set size explored; 0 means ceil(log2 |G|) + 1.
    std::size_t size_cap = 0;
};

std::size_t default_size_cap(std::size_t group_order);

/// All minimal generating sets of a group, grouped by size. Each set is
/// stored ascending and sets of one size are stored back to back in
/// ascending lexicographic order.
struct MinGenEnumeration {
    std::string group_id;
    std::map<std::size_t, std::vector<Element>> flat_by_size;
    std::map<std::size_t, std::size_t> counts;
    std::size_t d = 0;
    std::size_t m = 0;
    bool complete = true;
    std::uint64_t nodes = 0;

    std::size_t count(std::size_t u) const;
    const std::map<std::size_t, std::size_t>& counts_by_size() const noexcept { return counts; }
    std::vector<std::vector<Element>> sets(std::size_t u) const;

    template <class F>
    void for_each_set(std::size_t u, F&& f) const {
        auto it = flat_by_size.find(u);
        if (it == flat_by_size.end()) return;
        const std::size_t c = count(u);
        for (std::size_t i = 0; i < c; ++i) f(std::span<const Element>(it->second.data() + i * u, u));
    }
    template <class F>
    void for_each_set(F&& f) const {
        for (const auto& [u, flat] : flat_by_size) for_each_set(u, f);
    }

    /// Throws BudgetExceeded when the enumeration stopped early.
    void require_complete() const;
};

bool is_generating(const FiniteGroup& g, std::span<const Element> xs);
bool is_generating(const SubgroupLattice& lat, std::span<const Element> xs);
bool is_minimal_generating(const FiniteGroup& g, std::span<const Element> xs);
bool is_minimal_generating(const SubgroupLattice& lat, std::span<const Element> xs);

/// Canonical-order backtracking over sets that stay irredundant modulo the
/// Frattini subgroup. With `size_filter` only sets of that size are kept.
/// On budget exhaustion the partial result comes back with complete=false.
MinGenEnumeration enumerate_min_gen_sets(const SubgroupLattice& lat, std::optional<std::size_t> size_filter = {},
                                         const SearchLimits& limits = {});

struct RankBounds {
    std::size_t d = 0;
    std::size_t m = 0;
};
RankBounds rank_bounds(const SubgroupLattice& lat, const SearchLimits& limits = {});

/// d_X(G): the least r such that some r elements generate G together with X.
std::size_t relative_rank(const SubgroupLattice& lat, std::span<const Element> xs, const SearchLimits& limits = {});

/// Early-terminating search: calls `visit` on every minimal generating set
/// (of size `size` if given) that contains all of `seed`, in canonical order,
/// until it returns false. Returns the number of nodes visited; throws
/// BudgetExceeded if the budget runs out before the search finishes or stops.
std::uint64_t search_min_gen_sets(const SubgroupLattice& lat, std::span<const Element> seed,
                                  std::optional<std::size_t> size,
                                  const std::function<bool(std::span<const Element>)>& visit,
                                  const SearchLimits& limits = {});

struct TarskiWitness {
    std::vector<Element> set;  // {g_1, ..., g_k}
    std::size_t index = 0;     // position of g_i in `set`
    Element x1 = 0;
    Element x2 = 0;            // g_i = x1 * x2

    std::vector<Element> refined() const;
};

/// A minimal generating set of size k in which one generator splits as a
/// product x1*x2 such that swapping it for {x1, x2} stays minimal generating.
/// Requires d <= k < m (PreconditionViolated otherwise).
std::optional<TarskiWitness> tarski_witness(const SubgroupLattice& lat, std::size_t k,
                                            const SearchLimits& limits = {});

}  // namespace indep
