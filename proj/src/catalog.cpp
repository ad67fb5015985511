#include <algorithm>
#include <cctype>
#include <regex>

#include "indep/error.hpp"
#include "indep/io.hpp"
#include "indep/verify.hpp"

namespace indep {

namespace {

struct NamedEntry {
    const char* name;
    const char* recipe;
    std::size_t order;
    const char* iso_tag;
};

// Non-cyclic constructions, one per isomorphism type. The small groups whose
// isomorphism type matters for planarity carry a tag.
constexpr NamedEntry kNamed[] = {
    {"C2xC2", "elementary_abelian(2,2)", 4, "C2xC2"},
    {"S3", "symmetric(3)", 6, "S3"},
    {"C2xC4", "direct(cyclic(2),cyclic(4))", 8, "C2xC4"},
    {"D4", "dihedral(4)", 8, "D4"},
    {"Q8", "quaternion8", 8, "Q8"},
    {"C2^3", "elementary_abelian(2,3)", 8, "C2xC2xC2"},
    {"C3xC3", "elementary_abelian(3,2)", 9, ""},
    {"D5", "dihedral(5)", 10, ""},
    {"D6", "dihedral(6)", 12, ""},
    {"A4", "alternating(4)", 12, ""},
    {"C3:C4", "semidirect_c3_c4", 12, ""},
    {"C2xC6", "direct(cyclic(2),cyclic(6))", 12, ""},
    {"D7", "dihedral(7)", 14, ""},
    {"C4xC4", "direct(cyclic(4),cyclic(4))", 16, ""},
    {"C2xC8", "direct(cyclic(2),cyclic(8))", 16, ""},
    {"C2^4", "elementary_abelian(2,4)", 16, ""},
    {"C2xC2xC4", "direct(elementary_abelian(2,2),cyclic(4))", 16, ""},
    {"D8", "dihedral(8)", 16, ""},
    {"C2xD4", "direct(cyclic(2),dihedral(4))", 16, ""},
    {"C2xQ8", "direct(cyclic(2),quaternion8)", 16, ""},
    {"C3xC6", "direct(cyclic(3),cyclic(6))", 18, ""},
    {"D9", "dihedral(9)", 18, ""},
    {"C3xS3", "direct(cyclic(3),symmetric(3))", 18, ""},
    {"C5:C4", "semidirect_c5_c4", 20, ""},
    {"D10", "dihedral(10)", 20, ""},
    {"C2xC10", "direct(cyclic(2),cyclic(10))", 20, ""},
    {"D11", "dihedral(11)", 22, ""},
    {"S4", "symmetric(4)", 24, ""},
    {"D12", "dihedral(12)", 24, ""},
    {"C2xA4", "direct(cyclic(2),alternating(4))", 24, ""},
    {"C2xD6", "direct(cyclic(2),dihedral(6))", 24, ""},
    {"C3xD4", "direct(cyclic(3),dihedral(4))", 24, ""},
    {"C3xQ8", "direct(cyclic(3),quaternion8)", 24, ""},
    {"C2xC2xC6", "direct(elementary_abelian(2,2),cyclic(6))", 24, ""},
    {"C2xC12", "direct(cyclic(2),cyclic(12))", 24, ""},
    {"C4xS3", "direct(cyclic(4),symmetric(3))", 24, ""},
    {"C2x(C3:C4)", "direct(cyclic(2),semidirect_c3_c4)", 24, ""},
    {"C5xC5", "elementary_abelian(5,2)", 25, ""},
    {"D13", "dihedral(13)", 26, ""},
    {"C3^3", "elementary_abelian(3,3)", 27, ""},
    {"C3xC9", "direct(cyclic(3),cyclic(9))", 27, ""},
    {"D14", "dihedral(14)", 28, ""},
    {"C2xC14", "direct(cyclic(2),cyclic(14))", 28, ""},
    {"D15", "dihedral(15)", 30, ""},
    {"C3xD5", "direct(cyclic(3),dihedral(5))", 30, ""},
    {"C5xS3", "direct(cyclic(5),symmetric(3))", 30, ""},
    {"C2^5", "elementary_abelian(2,5)", 32, ""},
    {"D16", "dihedral(16)", 32, ""},
    {"C2xC16", "direct(cyclic(2),cyclic(16))", 32, ""},
    {"C4xC8", "direct(cyclic(4),cyclic(8))", 32, ""},
    {"C2xC2xC8", "direct(elementary_abelian(2,2),cyclic(8))", 32, ""},
    {"C2xC4xC4", "direct(cyclic(2),direct(cyclic(4),cyclic(4)))", 32, ""},
    {"C2xD8", "direct(cyclic(2),dihedral(8))", 32, ""},
    {"C4xD4", "direct(cyclic(4),dihedral(4))", 32, ""},
    {"C4xQ8", "direct(cyclic(4),quaternion8)", 32, ""},
    {"C2xC2xD4", "direct(elementary_abelian(2,2),dihedral(4))", 32, ""},
    {"C2xC2xQ8", "direct(elementary_abelian(2,2),quaternion8)", 32, ""},
    {"D17", "dihedral(17)", 34, ""},
    {"D18", "dihedral(18)", 36, ""},
    {"C6xC6", "direct(cyclic(6),cyclic(6))", 36, ""},
    {"S3xS3", "direct(symmetric(3),symmetric(3))", 36, ""},
    {"C3xA4", "direct(cyclic(3),alternating(4))", 36, ""},
    {"C3xC12", "direct(cyclic(3),cyclic(12))", 36, ""},
    {"C6xS3", "direct(cyclic(6),symmetric(3))", 36, ""},
    {"C3x(C3:C4)", "direct(cyclic(3),semidirect_c3_c4)", 36, ""},
    {"D19", "dihedral(19)", 38, ""},
    {"D20", "dihedral(20)", 40, ""},
    {"C2x(C5:C4)", "direct(cyclic(2),semidirect_c5_c4)", 40, ""},
    {"C2xC20", "direct(cyclic(2),cyclic(20))", 40, ""},
    {"C4xD5", "direct(cyclic(4),dihedral(5))", 40, ""},
    {"D21", "dihedral(21)", 42, ""},
    {"C7xS3", "direct(cyclic(7),symmetric(3))", 42, ""},
    {"D22", "dihedral(22)", 44, ""},
    {"C3xC15", "direct(cyclic(3),cyclic(15))", 45, ""},
    {"D23", "dihedral(23)", 46, ""},
    {"D24", "dihedral(24)", 48, ""},
    {"C2xS4", "direct(cyclic(2),symmetric(4))", 48, ""},
    {"C4xA4", "direct(cyclic(4),alternating(4))", 48, ""},
    {"C2^4xC3", "direct(elementary_abelian(2,4),cyclic(3))", 48, ""},
    {"C2xC2xA4", "direct(elementary_abelian(2,2),alternating(4))", 48, ""},
    {"C4xC12", "direct(cyclic(4),cyclic(12))", 48, ""},
    {"C2xC24", "direct(cyclic(2),cyclic(24))", 48, ""},
    {"C2xD12", "direct(cyclic(2),dihedral(12))", 48, ""},
    {"C2xC2xC12", "direct(elementary_abelian(2,2),cyclic(12))", 48, ""},
    {"C6xQ8", "direct(cyclic(6),quaternion8)", 48, ""},
    {"A5", "alternating(5)", 60, ""},
};

// Isomorphic to a tagged entry but built differently; only reachable by name.
constexpr NamedEntry kExtra[] = {
    {"D3", "dihedral(3)", 6, "S3"},
    {"D2", "dihedral(2)", 4, "C2xC2"},
    {"C2xC2'", "direct(cyclic(2),cyclic(2))", 4, "C2xC2"},
    {"S5", "symmetric(5)", 120, ""},
    {"A6", "alternating(6)", 360, ""},
    {"S6", "symmetric(6)", 720, ""},
};

CatalogEntry to_entry(const NamedEntry& e) { return {e.name, e.recipe, "", e.iso_tag}; }

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

std::vector<CatalogEntry> default_catalog(std::size_t max_order, std::size_t max_cyclic) {
    std::vector<CatalogEntry> out;
    for (std::size_t n = 1; n <= std::min(max_cyclic, max_order); ++n)
        out.push_back({"C" + std::to_string(n), "cyclic(" + std::to_string(n) + ")", "", ""});
    for (const auto& e : kNamed)
        if (e.order <= max_order) out.push_back(to_entry(e));
    return out;
}

CatalogEntry resolve_group(const std::string& name_or_recipe) {
    const std::string key = strip_spaces(name_or_recipe);
    std::string recipe = key;

    static const std::regex alias(R"((sym|alt|cyclic|dihedral)(\d+))");
    std::smatch m;
    const std::string low = lower(key);
    if (std::regex_match(low, m, alias)) {
        static const std::pair<const char*, const char*> family[] = {
            {"sym", "symmetric"}, {"alt", "alternating"}, {"cyclic", "cyclic"}, {"dihedral", "dihedral"}};
        for (auto [short_name, full] : family)
            if (m[1] == short_name) recipe = std::string(full) + "(" + m[2].str() + ")";
    } else if (low == "q8") {
        recipe = "quaternion8";
    } else {
        for (const auto& e : kNamed)
            if (key == e.name) return to_entry(e);
        for (const auto& e : kExtra)
            if (key == e.name) return to_entry(e);
        static const std::regex cyc(R"(C(\d+))");
        if (std::regex_match(key, m, cyc)) return {key, "cyclic(" + m[1].str() + ")", "", ""};
    }

    for (const auto& e : kNamed)
        if (recipe == e.recipe) return to_entry(e);
    for (const auto& e : kExtra)
        if (recipe == e.recipe) return to_entry(e);
    static const std::regex cyc_recipe(R"(cyclic\((\d+)\))");
    if (std::regex_match(recipe, m, cyc_recipe)) return {"C" + m[1].str(), recipe, "", ""};
    return {recipe, recipe, "", ""};
}

FiniteGroup load_group(const CatalogEntry& entry, std::size_t max_order) {
    if (!entry.cayley_path.empty()) {
        FiniteGroup g = import_cayley(entry.cayley_path);
        if (g.order() > max_order)
            throw Error(ErrorKind::OrderTooLarge,
                        entry.cayley_path + " has order " + std::to_string(g.order()) + " above the cap",
                        {static_cast<std::int64_t>(g.order())});
        return g;
    }
    return make_named_group(entry.recipe, max_order);
}

}  // namespace indep
