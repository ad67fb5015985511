#include "indep/gensets.hpp"

#include <algorithm>
#include <string>

#include "indep/error.hpp"

namespace indep {

std::size_t default_size_cap(std::size_t group_order) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < group_order) ++bits;
    return bits + 1;
}

std::size_t MinGenEnumeration::count(std::size_t u) const {
    auto it = counts.find(u);
    return it == counts.end() ? 0 : it->second;
}

std::vector<std::vector<Element>> MinGenEnumeration::sets(std::size_t u) const {
    std::vector<std::vector<Element>> out;
    for_each_set(u, [&](std::span<const Element> s) { out.emplace_back(s.begin(), s.end()); });
    return out;
}

void MinGenEnumeration::require_complete() const {
    if (!complete)
        throw Error(ErrorKind::BudgetExceeded,
                    "minimal generating set enumeration of " + group_id + " stopped after " +
                        std::to_string(nodes) + " nodes",
                    {static_cast<std::int64_t>(nodes)});
}

bool is_generating(const FiniteGroup& g, std::span<const Element> xs) {
    return closure_set(g, xs).size() == g.order();
}

bool is_generating(const SubgroupLattice& lat, std::span<const Element> xs) { return lat.generates(xs); }

bool is_minimal_generating(const FiniteGroup& g, std::span<const Element> xs) {
    if (!is_generating(g, xs)) return false;
    std::vector<Element> rest;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        rest.assign(xs.begin(), xs.end());
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (is_generating(g, rest)) return false;
    }
    return true;
}

bool is_minimal_generating(const SubgroupLattice& lat, std::span<const Element> xs) {
    if (!lat.generates(xs)) return false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::size_t h = lat.trivial();
        for (std::size_t j = 0; j < xs.size(); ++j)
            if (j != i) h = lat.join(h, xs[j]);
        if (h == lat.whole()) return false;
    }
    return true;
}

namespace {

/// Depth-first search over sets that are irredundant modulo Frat(G). A node
/// keeps, for every chosen element, the closure of the other chosen elements
/// together with Frat(G); an extension y is admissible when it lies outside
/// the closure of everything chosen so far and does not absorb any earlier
/// element. Sets reaching the whole group are reported and not extended.
class Backtracker {
public:
    using Visit = std::function<bool(std::span<const Element>)>;

    Backtracker(const SubgroupLattice& lat, std::size_t cap, std::optional<std::size_t> filter,
                std::uint64_t budget, Visit visit)
        : lat_(lat), n_(lat.group().order()), cap_(cap), filter_(filter), budget_(budget),
          visit_(std::move(visit)), seed_mask_(n_) {}

    void run(std::span<const Element> seed) {
        chosen_.assign(seed.begin(), seed.end());
        for (Element s : seed) seed_mask_.insert(s);
        if (seed_mask_.size() != seed.size()) return;  // repeated element

        const std::size_t f = lat_.frattini();
        std::vector<std::uint32_t> without(seed.size());
        for (std::size_t i = 0; i < seed.size(); ++i) {
            std::size_t h = f;
            for (std::size_t j = 0; j < seed.size(); ++j)
                if (j != i) h = lat_.join(h, seed[j]);
            if (lat_.at(h).contains(seed[i])) return;  // seed itself is redundant
            without[i] = static_cast<std::uint32_t>(h);
        }
        const std::size_t prefix = lat_.closure_of(seed, f);
        if (prefix == lat_.whole()) {
            report();
            return;
        }
        extend(prefix, without, 0);
    }

    std::uint64_t nodes() const noexcept { return nodes_; }
    bool exhausted() const noexcept { return exhausted_; }

private:
    void report() {
        if (filter_ && *filter_ != chosen_.size()) return;
        if (seed_mask_.empty()) {
            if (!visit_(chosen_)) stop_ = true;
            return;
        }
        sorted_ = chosen_;
        std::sort(sorted_.begin(), sorted_.end());
        if (!visit_(sorted_)) stop_ = true;
    }

    void extend(std::size_t prefix, const std::vector<std::uint32_t>& without, Element from) {
        if (chosen_.size() >= cap_ || (filter_ && chosen_.size() >= *filter_)) return;
        std::vector<std::uint32_t> next(without.size() + 1);
        for (Element y = from; y < n_ && !stop_; ++y) {
            if (seed_mask_.contains(y)) continue;
            if (++nodes_ > budget_) {
                exhausted_ = stop_ = true;
                return;
            }
            if (lat_.at(prefix).contains(y)) continue;
            bool ok = true;
            for (std::size_t i = 0; i < without.size() && ok; ++i) {
                next[i] = static_cast<std::uint32_t>(lat_.join(without[i], y));
                ok = !lat_.at(next[i]).contains(chosen_[i]);
            }
            if (!ok) continue;
            const std::size_t grown = lat_.join(prefix, y);
            chosen_.push_back(y);
            if (grown == lat_.whole()) {
                report();
            } else {
                next[without.size()] = static_cast<std::uint32_t>(prefix);
                extend(grown, next, y + 1);
            }
            chosen_.pop_back();
        }
    }

    const SubgroupLattice& lat_;
    std::size_t n_;
    std::size_t cap_;
    std::optional<std::size_t> filter_;
    std::uint64_t budget_;
    Visit visit_;
    ElementSet seed_mask_;
    std::vector<Element> chosen_;
    std::vector<Element> sorted_;
    std::uint64_t nodes_ = 0;
    bool stop_ = false;
    bool exhausted_ = false;
};

std::size_t effective_cap(const SubgroupLattice& lat, const SearchLimits& limits, std::size_t at_least = 0) {
    std::size_t cap = limits.size_cap ? limits.size_cap : default_size_cap(lat.group().order());
    return std::max(cap, at_least);
}

}  // namespace

MinGenEnumeration enumerate_min_gen_sets(const SubgroupLattice& lat, std::optional<std::size_t> size_filter,
                                         const SearchLimits& limits) {
    std::size_t cap = effective_cap(lat, limits, size_filter.value_or(0));
    while (true) {
        MinGenEnumeration out;
        out.group_id = lat.group().origin();
        Backtracker bt(lat, cap, size_filter, limits.node_budget, [&](std::span<const Element> s) {
            auto& flat = out.flat_by_size[s.size()];
            flat.insert(flat.end(), s.begin(), s.end());
            ++out.counts[s.size()];
            return true;
        });
        bt.run({});
        out.nodes = bt.nodes();
        out.complete = !bt.exhausted();
        // the cap is only trusted when nothing was found at the cap itself
        if (out.complete && !size_filter && out.count(cap) > 0 && limits.size_cap == 0) {
            ++cap;
            continue;
        }
        if (!out.counts.empty()) {
            out.d = out.counts.begin()->first;
            out.m = out.counts.rbegin()->first;
        }
        return out;
    }
}

std::uint64_t search_min_gen_sets(const SubgroupLattice& lat, std::span<const Element> seed,
                                  std::optional<std::size_t> size,
                                  const std::function<bool(std::span<const Element>)>& visit,
                                  const SearchLimits& limits) {
    Backtracker bt(lat, effective_cap(lat, limits, size.value_or(0)), size, limits.node_budget, visit);
    bt.run(seed);
    if (bt.exhausted())
        throw Error(ErrorKind::BudgetExceeded,
                    "generating-set search in " + lat.group().origin() + " exceeded " +
                        std::to_string(limits.node_budget) + " nodes",
                    {static_cast<std::int64_t>(limits.node_budget)});
    return bt.nodes();
}

std::size_t relative_rank(const SubgroupLattice& lat, std::span<const Element> xs, const SearchLimits& limits) {
    const std::size_t n = lat.group().order();
    const std::size_t start = lat.closure_of(xs, lat.frattini());
    if (start == lat.whole()) return 0;
    std::uint64_t nodes = 0;

    std::function<bool(std::size_t, Element, std::size_t)> reach = [&](std::size_t h, Element from,
                                                                       std::size_t left) -> bool {
        for (Element y = from; y < n; ++y) {
            if (++nodes > limits.node_budget)
                throw Error(ErrorKind::BudgetExceeded, "relative rank search exceeded the node budget",
                            {static_cast<std::int64_t>(limits.node_budget)});
            if (lat.at(h).contains(y)) continue;
            std::size_t k = lat.join(h, y);
            if (k == lat.whole()) return true;
            if (left > 1 && reach(k, y + 1, left - 1)) return true;
        }
        return false;
    };
    for (std::size_t r = 1; r <= n; ++r)
        if (reach(start, 0, r)) return r;
    throw Error(ErrorKind::PreconditionViolated, "relative rank undefined");  // unreachable: G generates G
}

RankBounds rank_bounds(const SubgroupLattice& lat, const SearchLimits& limits) {
    RankBounds b;
    b.d = relative_rank(lat, {}, limits);
    if (b.d == 0) return b;  // trivial group: the empty set is the only minimal generating set
    std::size_t cap = effective_cap(lat, limits);
    for (;;) {
        SearchLimits l = limits;
        l.size_cap = cap;
        std::optional<std::size_t> found;
        for (std::size_t k = cap; k >= b.d && !found; --k) {
            bool any = false;
            search_min_gen_sets(lat, {}, k, [&](std::span<const Element>) { return !(any = true); }, l);
            if (any) found = k;
        }
        if (found && *found == cap && limits.size_cap == 0) {
            ++cap;
            continue;
        }
        b.m = found.value_or(b.d);
        return b;
    }
}

std::vector<Element> TarskiWitness::refined() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < set.size(); ++i)
        if (i != index) out.push_back(set[i]);
    out.push_back(x1);
    out.push_back(x2);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<TarskiWitness> tarski_witness(const SubgroupLattice& lat, std::size_t k, const SearchLimits& limits) {
    const RankBounds b = rank_bounds(lat, limits);
    if (k < b.d || k >= b.m)
        throw Error(ErrorKind::PreconditionViolated,
                    "tarski_witness needs d <= k < m; got k=" + std::to_string(k) + " with d=" + std::to_string(b.d) +
                        ", m=" + std::to_string(b.m),
                    {static_cast<std::int64_t>(k), static_cast<std::int64_t>(b.d), static_cast<std::int64_t>(b.m)});
    const FiniteGroup& g = lat.group();
    std::optional<TarskiWitness> found;
    std::vector<Element> candidate;
    search_min_gen_sets(
        lat, {}, k,
        [&](std::span<const Element> xs) {
            for (std::size_t i = 0; i < xs.size(); ++i) {
                for (Element x1 = 0; x1 < g.order(); ++x1) {
                    const Element x2 = g.mul(g.inv(x1), xs[i]);
                    if (x1 == x2) continue;
                    candidate.clear();
                    for (std::size_t j = 0; j < xs.size(); ++j)
                        if (j != i) candidate.push_back(xs[j]);
                    if (std::find(candidate.begin(), candidate.end(), x1) != candidate.end() ||
                        std::find(candidate.begin(), candidate.end(), x2) != candidate.end())
                        continue;
                    candidate.push_back(x1);
                    candidate.push_back(x2);
                    if (is_minimal_generating(lat, candidate)) {
                        found = TarskiWitness{std::vector<Element>(xs.begin(), xs.end()), i, x1, x2};
                        return false;
                    }
                }
            }
            return true;
        },
        limits);
    return found;
}

}  // namespace indep
