#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "indep/element_set.hpp"

namespace indep {

using CayleyTable = std::vector<std::vector<Element>>;

/// A finite group given by its full multiplication table. Elements are the
/// dense indices 0..n-1 and the identity is always index 0. Instances are
/// immutable and cheap to copy.
class FiniteGroup {
public:
    /// Validates the table and relocates the identity to index 0. Labels
    /// default to "g<i>" (indices after relocation).
    static FiniteGroup from_table(const CayleyTable& table, std::vector<std::string> labels = {},
                                  std::string origin = "cayley-table");

    std::size_t order() const noexcept { return data_->n; }
    Element mul(Element a, Element b) const noexcept { return data_->mul[a * data_->n + b]; }
    Element inv(Element a) const noexcept { return data_->inv[a]; }
    static constexpr Element identity() noexcept { return 0; }

    const std::string& label(Element g) const { return data_->labels[g]; }
    const std::vector<std::string>& labels() const noexcept { return data_->labels; }
    const std::string& origin() const noexcept { return data_->origin; }
    std::optional<Element> find_label(std::string_view label) const;

    /// Conjugate g^x = x^-1 g x.
    Element conj(Element g, Element x) const noexcept { return mul(mul(inv(x), g), x); }
    Element power(Element g, long long k) const;

    CayleyTable table() const;
    ElementSet empty_set() const { return ElementSet(order()); }
    ElementSet all() const { return ElementSet::full(order()); }

    bool is_abelian() const noexcept;

private:
    struct Data {
        std::size_t n = 0;
        std::vector<Element> mul;
        std::vector<Element> inv;
        std::vector<std::string> labels;
        std::string origin;
    };
    explicit FiniteGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
};

struct Subgroup {
    ElementSet elements;
    bool is_normal = false;
    bool is_maximal = false;

    std::size_t order() const { return elements.size(); }
    bool contains(Element g) const { return elements.contains(g); }
};

/// Smallest subgroup containing `gens`, by orbit closure of the identity under
/// right multiplication.
ElementSet closure_set(const FiniteGroup& g, std::span<const Element> gens);
ElementSet closure_set(const FiniteGroup& g, const ElementSet& gens);

/// Closure plus normality and maximality flags.
Subgroup closure(const FiniteGroup& g, const ElementSet& gens);

/// Flags for an arbitrary subset already known to be a subgroup.
Subgroup make_subgroup(const FiniteGroup& g, ElementSet elements);

bool is_subgroup(const FiniteGroup& g, const ElementSet& s);
bool is_normal(const FiniteGroup& g, const ElementSet& h);

std::size_t element_order(const FiniteGroup& g, Element x);

struct StructureFlags {
    bool is_soluble = false;
    bool is_nilpotent = false;
    bool is_cyclic = false;
};

StructureFlags structure_flags(const FiniteGroup& g);

/// Commutator subgroup [A, B] for subgroups A, B.
ElementSet commutator(const FiniteGroup& g, const ElementSet& a, const ElementSet& b);

/// Conjugacy classes, ordered by least member.
std::vector<ElementSet> class_partition(const FiniteGroup& g);

struct Quotient {
    FiniteGroup group;
    /// element of G -> coset index in `group`
    std::vector<Element> projection;
    /// coset index -> least element of the coset
    std::vector<Element> representative;
};

/// G/N on cosets ordered by least representative; throws NotNormal with a
/// witness (n, x) such that x^-1 n x is outside N.
Quotient quotient(const FiniteGroup& g, const ElementSet& normal);

/// Builds a group from the recipe grammar:
///   cyclic(n) | dihedral(n) | quaternion8 | symmetric(k) | alternating(k)
///   | elementary_abelian(p,k) | direct(r1,r2) | semidirect_c3_c4 | semidirect_c5_c4
/// dihedral(n) has order 2n. symmetric/alternating accept k <= 6.
FiniteGroup make_named_group(std::string_view recipe, std::size_t max_order = 1024);

}  // namespace indep
