#include "indep/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "indep/error.hpp"

namespace indep {

SubgroupLattice::SubgroupLattice(FiniteGroup g, std::size_t max_subgroups) : group_(std::move(g)) {
    const std::size_t n = group_.order();
    constexpr auto unset = static_cast<std::uint32_t>(-1);

    struct Node {
        ElementSet elements;
        std::vector<Element> gens;
    };
    std::vector<Node> nodes;
    std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> lookup;
    std::vector<std::uint32_t> join;  // grows with nodes; shadows the member only here

    auto add = [&](ElementSet s, std::vector<Element> gens) -> std::uint32_t {
        auto [it, inserted] = lookup.try_emplace(s, static_cast<std::uint32_t>(nodes.size()));
        if (inserted) {
            if (nodes.size() >= max_subgroups)
                throw Error(ErrorKind::BudgetExceeded,
                            "subgroup lattice of " + group_.origin() + " exceeds " + std::to_string(max_subgroups) +
                                " subgroups",
                            {static_cast<std::int64_t>(max_subgroups)});
            nodes.push_back({std::move(s), std::move(gens)});
            join.resize(nodes.size() * n, unset);
        }
        return it->second;
    };

    add(closure_set(group_, std::span<const Element>()), {});
    for (std::size_t h = 0; h < nodes.size(); ++h) {
        for (Element x = 0; x < n; ++x) {
            if (join[h * n + x] != unset) continue;
            std::uint32_t k;
            if (nodes[h].elements.contains(x)) {
                k = static_cast<std::uint32_t>(h);
            } else {
                auto gens = nodes[h].gens;
                gens.push_back(x);
                ElementSet s = closure_set(group_, std::span<const Element>(gens));
                k = add(std::move(s), std::move(gens));
            }
            // <H, hx> = <H, x> for every h in H
            nodes[h].elements.for_each([&](Element y) { join[h * n + group_.mul(y, x)] = k; });
        }
    }

    // canonical order and re-indexing
    std::vector<std::uint32_t> order(nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return canonical_less(nodes[a].elements, nodes[b].elements);
    });
    std::vector<std::uint32_t> rank(nodes.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

    join_.assign(nodes.size() * n, 0);
    for (std::size_t h = 0; h < nodes.size(); ++h)
        for (Element x = 0; x < n; ++x) join_[rank[h] * n + x] = rank[join[h * n + x]];

    const std::size_t whole_idx = nodes.size() - 1;
    subgroups_.resize(nodes.size());
    for (std::size_t h = 0; h < nodes.size(); ++h) {
        Subgroup& s = subgroups_[rank[h]];
        s.elements = std::move(nodes[h].elements);
        s.is_normal = true;
        for (Element x = 0; x < n && s.is_normal; ++x)
            for (Element y : nodes[h].gens)
                if (!s.elements.contains(group_.conj(y, x))) {
                    s.is_normal = false;
                    break;
                }
    }
    for (std::size_t h = 0; h < subgroups_.size(); ++h) {
        if (h == whole_idx) continue;
        bool maximal = true;
        for (Element x = 0; x < n && maximal; ++x)
            if (!subgroups_[h].contains(x)) maximal = this->join(h, x) == whole_idx;
        subgroups_[h].is_maximal = maximal;
    }

    ElementSet frat = group_.all();
    for (const auto& s : subgroups_)
        if (s.is_maximal) frat &= s.elements;
    frattini_ = index_of(frat);
}

std::size_t SubgroupLattice::index_of(const ElementSet& s) const {
    auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), s,
                               [](const Subgroup& a, const ElementSet& b) { return canonical_less(a.elements, b); });
    if (it == subgroups_.end() || !(it->elements == s))
        throw Error(ErrorKind::PreconditionViolated, "set is not a subgroup of " + group_.origin());
    return static_cast<std::size_t>(it - subgroups_.begin());
}

std::vector<std::size_t> SubgroupLattice::maximal() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < subgroups_.size(); ++i)
        if (subgroups_[i].is_maximal) out.push_back(i);
    return out;
}

std::vector<std::size_t> SubgroupLattice::normal() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < subgroups_.size(); ++i)
        if (subgroups_[i].is_normal) out.push_back(i);
    return out;
}

Subgroup frattini(const FiniteGroup& g) {
    SubgroupLattice lat(g);
    return lat.at(lat.frattini());
}

}  // namespace indep
