#include "indep/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "indep/error.hpp"

namespace indep {

namespace {

using Witness = std::vector<std::int64_t>;

}  // namespace

FiniteGroup FiniteGroup::from_table(const CayleyTable& table, std::vector<std::string> labels,
                                    std::string origin) {
    const std::size_t n = table.size();
    if (n == 0) throw Error(ErrorKind::MalformedTable, "table is empty");
    for (std::size_t r = 0; r < n; ++r) {
        if (table[r].size() != n)
            throw Error(ErrorKind::MalformedTable,
                        "row " + std::to_string(r) + " has " + std::to_string(table[r].size()) +
                            " entries, expected " + std::to_string(n),
                        {static_cast<std::int64_t>(r)});
        for (std::size_t c = 0; c < n; ++c)
            if (table[r][c] >= n)
                throw Error(ErrorKind::MalformedTable,
                            "entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " +
                                std::to_string(table[r][c]) + " out of range",
                            {static_cast<std::int64_t>(r), static_cast<std::int64_t>(c)});
    }
    if (!labels.empty() && labels.size() != n)
        throw Error(ErrorKind::MalformedTable, "label count does not match table order");

    // identity: a two-sided neutral element
    std::optional<Element> e;
    for (Element cand = 0; cand < n && !e; ++cand) {
        bool ok = true;
        for (Element g = 0; g < n && ok; ++g) ok = table[cand][g] == g && table[g][cand] == g;
        if (ok) e = cand;
    }
    if (!e) throw Error(ErrorKind::NoIdentity, "no element is a two-sided identity");

    // relocate identity to index 0 by swapping it with the old index 0
    std::vector<Element> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::swap(relabel[0], relabel[*e]);  // old -> new (an involution)

    auto d = std::make_shared<Data>();
    d->n = n;
    d->mul.assign(n * n, 0);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            d->mul[relabel[a] * n + relabel[b]] = relabel[table[a][b]];

    auto m = [&](Element a, Element b) { return d->mul[a * n + b]; };

    d->inv.assign(n, 0);
    for (Element g = 0; g < n; ++g) {
        std::optional<Element> h;
        for (Element c = 0; c < n && !h; ++c)
            if (m(g, c) == 0 && m(c, g) == 0) h = c;
        if (!h)
            throw Error(ErrorKind::NoInverse, "element " + std::to_string(relabel[g]) + " has no two-sided inverse",
                        {static_cast<std::int64_t>(relabel[g])});
        d->inv[g] = *h;
    }

    if (n <= 512) {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                Element ab = m(a, b);
                for (Element c = 0; c < n; ++c)
                    if (m(ab, c) != m(a, m(b, c)))
                        throw Error(ErrorKind::NotAssociative,
                                    "(a*b)*c != a*(b*c) for (a,b,c) = (" + std::to_string(relabel[a]) + "," +
                                        std::to_string(relabel[b]) + "," + std::to_string(relabel[c]) + ")",
                                    {relabel[a], relabel[b], relabel[c]});
            }
    }

    std::vector<char> seen(n);
    for (Element a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (Element b = 0; b < n; ++b) {
            if (seen[m(a, b)])
                throw Error(ErrorKind::MalformedTable, "row " + std::to_string(relabel[a]) + " is not a permutation",
                            {relabel[a]});
            seen[m(a, b)] = 1;
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (Element b = 0; b < n; ++b) {
            if (seen[m(b, a)])
                throw Error(ErrorKind::MalformedTable,
                            "column " + std::to_string(relabel[a]) + " is not a permutation", {relabel[a]});
            seen[m(b, a)] = 1;
        }
    }

    d->labels.resize(n);
    for (Element old = 0; old < n; ++old)
        d->labels[relabel[old]] = labels.empty() ? "g" + std::to_string(relabel[old]) : labels[old];
    d->origin = std::move(origin);
    return FiniteGroup(std::move(d));
}

std::optional<Element> FiniteGroup::find_label(std::string_view label) const {
    for (Element g = 0; g < order(); ++g)
        if (data_->labels[g] == label) return g;
    return std::nullopt;
}

Element FiniteGroup::power(Element g, long long k) const {
    if (k < 0) {
        g = inv(g);
        k = -k;
    }
    Element r = identity();
    for (long long i = 0; i < k; ++i) r = mul(r, g);
    return r;
}

CayleyTable FiniteGroup::table() const {
    CayleyTable t(order(), std::vector<Element>(order()));
    for (Element a = 0; a < order(); ++a)
        for (Element b = 0; b < order(); ++b) t[a][b] = mul(a, b);
    return t;
}

bool FiniteGroup::is_abelian() const noexcept {
    for (Element a = 0; a < order(); ++a)
        for (Element b = a + 1; b < order(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

ElementSet closure_set(const FiniteGroup& g, std::span<const Element> gens) {
    ElementSet s(g.order());
    std::vector<Element> queue{FiniteGroup::identity()};
    s.insert(FiniteGroup::identity());
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Element x : gens) {
            Element y = g.mul(queue[i], x);
            if (!s.contains(y)) {
                s.insert(y);
                queue.push_back(y);
            }
        }
    }
    return s;
}

ElementSet closure_set(const FiniteGroup& g, const ElementSet& gens) {
    auto v = gens.elements();
    return closure_set(g, std::span<const Element>(v));
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
    if (!s.contains(FiniteGroup::identity())) return false;
    auto el = s.elements();
    for (Element a : el) {
        if (!s.contains(g.inv(a))) return false;
        for (Element b : el)
            if (!s.contains(g.mul(a, b))) return false;
    }
    return true;
}

bool is_normal(const FiniteGroup& g, const ElementSet& h) {
    auto el = h.elements();
    for (Element x = 0; x < g.order(); ++x)
        for (Element a : el)
            if (!h.contains(g.conj(a, x))) return false;
    return true;
}

Subgroup make_subgroup(const FiniteGroup& g, ElementSet elements) {
    Subgroup s;
    s.is_normal = is_normal(g, elements);
    if (elements.size() < g.order()) {
        bool maximal = true;
        auto base = elements.elements();
        for (Element x = 0; x < g.order() && maximal; ++x) {
            if (elements.contains(x)) continue;
            auto gens = base;
            gens.push_back(x);
            maximal = closure_set(g, std::span<const Element>(gens)).size() == g.order();
        }
        s.is_maximal = maximal;
    }
    s.elements = std::move(elements);
    return s;
}

Subgroup closure(const FiniteGroup& g, const ElementSet& gens) {
    return make_subgroup(g, closure_set(g, gens));
}

std::size_t element_order(const FiniteGroup& g, Element x) {
    std::size_t k = 1;
    for (Element y = x; y != FiniteGroup::identity(); y = g.mul(y, x)) ++k;
    return k;
}

ElementSet commutator(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
    ElementSet comms(g.order());
    auto ea = a.elements(), eb = b.elements();
    for (Element x : ea)
        for (Element y : eb) comms.insert(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
    return closure_set(g, comms);
}

StructureFlags structure_flags(const FiniteGroup& g) {
    StructureFlags f;
    const auto whole = g.all();

    ElementSet cur = whole;
    while (true) {
        ElementSet next = commutator(g, cur, cur);
        if (next == cur) break;
        cur = std::move(next);
    }
    f.is_soluble = cur.size() == 1;

    cur = whole;
    while (true) {
        ElementSet next = commutator(g, cur, whole);
        if (next == cur) break;
        cur = std::move(next);
    }
    f.is_nilpotent = cur.size() == 1;

    for (Element x = 0; x < g.order() && !f.is_cyclic; ++x) f.is_cyclic = element_order(g, x) == g.order();
    return f;
}

std::vector<ElementSet> class_partition(const FiniteGroup& g) {
    std::vector<ElementSet> classes;
    ElementSet done(g.order());
    for (Element a = 0; a < g.order(); ++a) {
        if (done.contains(a)) continue;
        ElementSet cls(g.order());
        for (Element x = 0; x < g.order(); ++x) cls.insert(g.conj(a, x));
        done |= cls;
        classes.push_back(std::move(cls));
    }
    return classes;
}

Quotient quotient(const FiniteGroup& g, const ElementSet& normal) {
    if (!is_subgroup(g, normal))
        throw Error(ErrorKind::PreconditionViolated, "quotient: argument is not a subgroup");
    auto nel = normal.elements();
    for (Element x = 0; x < g.order(); ++x)
        for (Element a : nel)
            if (!normal.contains(g.conj(a, x)))
                throw Error(ErrorKind::NotNormal,
                            "conjugate of " + g.label(a) + " by " + g.label(x) + " leaves the subgroup",
                            {a, x});

    const std::size_t n = g.order();
    Quotient q{FiniteGroup::from_table({{0}}), std::vector<Element>(n, 0), {}};
    std::vector<char> assigned(n, 0);
    for (Element x = 0; x < n; ++x) {
        if (assigned[x]) continue;
        auto idx = static_cast<Element>(q.representative.size());
        q.representative.push_back(x);
        for (Element a : nel) {
            Element y = g.mul(x, a);
            q.projection[y] = idx;
            assigned[y] = 1;
        }
    }
    const std::size_t k = q.representative.size();
    CayleyTable t(k, std::vector<Element>(k));
    std::vector<std::string> labels(k);
    for (Element i = 0; i < k; ++i) {
        labels[i] = nel.size() == 1 ? g.label(q.representative[i]) : "[" + g.label(q.representative[i]) + "]";
        for (Element j = 0; j < k; ++j)
            t[i][j] = q.projection[g.mul(q.representative[i], q.representative[j])];
    }
    q.group = FiniteGroup::from_table(t, std::move(labels), g.origin() + "/N" + std::to_string(nel.size()));
    return q;
}

}  // namespace indep
