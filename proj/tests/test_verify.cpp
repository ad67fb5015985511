#include "doctest.h"

#include <set>
#include <tuple>

#include "indep/error.hpp"
#include "indep/verify.hpp"
#include "support.hpp"

using namespace indep;
using namespace testing_support;

namespace {

std::vector<std::size_t> prime_factors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("cyclic planarity predicate") {
    for (std::size_t n = 1; n <= 210; ++n) {
        CAPTURE(n);
        const auto f = prime_factors(n);
        const std::set<std::size_t> distinct(f.begin(), f.end());
        bool expected = distinct.size() <= 1;
        if (f.size() == 2 && f[0] != f[1]) expected = f[0] <= 3;
        if (f.size() == 3 && f[0] == 2 && f[1] == 2 && f[2] > 2) expected = true;
        CHECK(cyclic_gamma_planar_predicate(n) == expected);
    }
}

TEST_CASE("cycle notation") {
    CHECK(parse_cycles("id", 4) == std::vector<int>{0, 1, 2, 3});
    CHECK(parse_cycles("(1,2)(3,4)", 4) == std::vector<int>{1, 0, 3, 2});
    CHECK(parse_cycles("(1,2,3)", 4) == std::vector<int>{1, 2, 0, 3});
    CHECK_THROWS_AS(parse_cycles("(1,5)", 4), Error);
    CHECK_THROWS_AS(parse_cycles("(1,1)", 4), Error);
    CHECK_THROWS_AS(parse_cycles("1,2", 4), Error);
    auto s4 = make_named_group("symmetric(4)");
    const Element t = permutation_element(s4, "(1,2)", 4);
    CHECK(element_order(s4, t) == 2);
    CHECK(element_order(s4, permutation_element(s4, "(1,2,3,4)", 4)) == 4);
}

TEST_CASE("Sym(4) class sets") {
    auto s4 = make_named_group("symmetric(4)");
    CHECK(s4_class_set(s4, "X2").size() == 6);
    CHECK(s4_class_set(s4, "X3").size() == 8);
    CHECK(s4_class_set(s4, "X4").size() == 6);
    CHECK(s4_class_set(s4, "Y").size() == 3);
    for (std::size_t u : {0u, 2u, 3u})
        for (const auto& row : s4_reference_table(u)) {
            CAPTURE(row.representative);
            CHECK(expand_s4_description(s4, row.neighbors).size() == row.degree);
        }
}

TEST_CASE("check registry") {
    for (CheckId id : all_checks()) {
        const auto back = parse_check(to_string(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK(!parse_check("no-such-check"));
    CHECK(is_probe(CheckId::DegreeDivisibilityProbe));
    CHECK(!is_probe(CheckId::ConnectivityMain));
}

TEST_CASE("small suite run") {
    const auto catalog = default_catalog(12, 12);
    const auto report = run_suite(catalog, all_checks());
    CHECK(report.entries.size() == catalog.size() * all_checks().size());
    for (std::size_t i = 1; i < report.entries.size(); ++i) {
        const auto& a = report.entries[i - 1];
        const auto& b = report.entries[i];
        const auto key = [](const ReportEntry& e) {
            return std::tuple(e.order, e.group, std::string(to_string(e.check)));
        };
        CHECK(key(a) < key(b));
    }
    for (const auto& e : report.entries) {
        CAPTURE(e.group);
        CAPTURE(to_string(e.check));
        if (is_probe(e.check))
            CHECK((e.status == CheckStatus::Observation || e.status == CheckStatus::SkippedNotApplicable ||
                   e.status == CheckStatus::SkippedBudget));
        else
            CHECK(e.status != CheckStatus::Observation);
        if (e.status == CheckStatus::Fail) CHECK(!e.witness.is_null());
    }
    CHECK(report.find("S3", CheckId::ConnectivityMain)->status == CheckStatus::Pass);
    CHECK(report.find("C6", CheckId::PlanarityCyclic)->status == CheckStatus::Pass);
    CHECK(report.find("D6", CheckId::PlanarityNoncyclic)->status == CheckStatus::Pass);
}

TEST_CASE("adding groups never changes existing entries") {
    const auto small = run_suite(default_catalog(8, 8), all_checks());
    const auto large = run_suite(default_catalog(12, 12), all_checks());
    for (const auto& e : small.entries) {
        const auto* other = large.find(e.group, e.check);
        REQUIRE(other != nullptr);
        CHECK(other->status == e.status);
        CHECK(other->witness == e.witness);
    }
}

TEST_CASE("catalog resolution") {
    CHECK(resolve_group("sym4").recipe == "symmetric(4)");
    CHECK(resolve_group("S4").recipe == "symmetric(4)");
    CHECK(resolve_group("cyclic15").name == "C15");
    CHECK(resolve_group("C7").recipe == "cyclic(7)");
    CHECK(resolve_group("dihedral(4)").iso_tag == "D4");
    CHECK(resolve_group("q8").iso_tag == "Q8");
    const auto cat = default_catalog(48);
    std::set<std::string> names;
    for (const auto& e : cat) CHECK(names.insert(e.name).second);
    CHECK(cat.size() >= 60);
    CHECK_THROWS_AS(load_group(resolve_group("alt6"), 100), Error);
}

}  // TEST_SUITE
