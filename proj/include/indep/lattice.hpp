#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "indep/group.hpp"

namespace indep {

/// The full subgroup lattice of a group together with a join table
/// join(H, g) = <H, g>. Closures of arbitrary element lists then cost one
/// table lookup per element, which is what the generating-set searches use.
class SubgroupLattice {
public:
    static constexpr std::size_t default_max_subgroups = 200'000;

    /// Bottom-up cyclic extension from the trivial subgroup. Throws
    /// BudgetExceeded when more than `max_subgroups` subgroups appear.
    explicit SubgroupLattice(FiniteGroup g, std::size_t max_subgroups = default_max_subgroups);

    const FiniteGroup& group() const noexcept { return group_; }
    std::size_t size() const noexcept { return subgroups_.size(); }

    /// Ordered by cardinality, then lexicographically by element list.
    const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
    const Subgroup& at(std::size_t idx) const { return subgroups_[idx]; }

    std::size_t trivial() const noexcept { return 0; }
    std::size_t whole() const noexcept { return subgroups_.size() - 1; }
    std::size_t frattini() const noexcept { return frattini_; }

    std::size_t join(std::size_t h, Element g) const noexcept { return join_[h * group_.order() + g]; }

    /// Index of <H, xs>.
    std::size_t closure_of(std::span<const Element> xs, std::size_t start = 0) const noexcept {
        std::size_t h = start;
        for (Element x : xs) h = join(h, x);
        return h;
    }
    bool generates(std::span<const Element> xs, std::size_t start = 0) const noexcept {
        return closure_of(xs, start) == whole();
    }

    /// Index of the subgroup with exactly these elements; throws
    /// PreconditionViolated if the set is not a subgroup.
    std::size_t index_of(const ElementSet& s) const;

    std::vector<std::size_t> maximal() const;
    std::vector<std::size_t> normal() const;

private:
    FiniteGroup group_;
    std::vector<Subgroup> subgroups_;
    std::vector<std::uint32_t> join_;
    std::size_t frattini_ = 0;
};

inline SubgroupLattice subgroup_lattice(const FiniteGroup& g,
                                        std::size_t max_subgroups = SubgroupLattice::default_max_subgroups) {
    return SubgroupLattice(g, max_subgroups);
}

/// Intersection of all maximal subgroups (the whole group when trivial).
Subgroup frattini(const FiniteGroup& g);

}  // namespace indep
