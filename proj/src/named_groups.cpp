#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>

#include "indep/error.hpp"
#include "indep/group.hpp"

namespace indep {

namespace {

std::string power_word(const char* gen, std::size_t k) {
    if (k == 0) return "";
    if (k == 1) return gen;
    return std::string(gen) + "^" + std::to_string(k);
}

/// Label a^i b^j, "e" for the identity.
std::string ab_word(std::size_t i, std::size_t j) {
    std::string s = power_word("a", i) + power_word("b", j);
    return s.empty() ? "e" : s;
}

void check_order(std::size_t order, std::size_t cap, const std::string& recipe) {
    if (order > cap)
        throw Error(ErrorKind::OrderTooLarge,
                    recipe + " has order " + std::to_string(order) + " above the cap " + std::to_string(cap),
                    {static_cast<std::int64_t>(order)});
}

bool is_prime(std::size_t p) {
    if (p < 2) return false;
    for (std::size_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Groups of the form a^i b^j with i < na, j < nb and
/// (a^i b^j)(a^k b^l) = a^{i + act(j, k) + twist(j, l)} b^{j + l}.
template <class Act, class Twist>
FiniteGroup metacyclic(std::size_t na, std::size_t nb, Act act, Twist twist, std::string origin) {
    const std::size_t n = na * nb;
    CayleyTable t(n, std::vector<Element>(n));
    std::vector<std::string> labels(n);
    for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t i = 0; i < na; ++i) {
            labels[i + na * j] = ab_word(i, j);
            for (std::size_t l = 0; l < nb; ++l)
                for (std::size_t k = 0; k < na; ++k) {
                    std::size_t ai = (i + act(j, k) + twist(j, l)) % na;
                    std::size_t bj = (j + l) % nb;
                    t[i + na * j][k + na * l] = static_cast<Element>(ai + na * bj);
                }
        }
    return FiniteGroup::from_table(t, std::move(labels), std::move(origin));
}

FiniteGroup cyclic(std::size_t n) {
    CayleyTable t(n, std::vector<Element>(n));
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = i == 0 ? "e" : power_word("a", i);
        for (std::size_t k = 0; k < n; ++k) t[i][k] = static_cast<Element>((i + k) % n);
    }
    return FiniteGroup::from_table(t, std::move(labels), "cyclic(" + std::to_string(n) + ")");
}

std::string cycle_label(const std::vector<int>& perm) {
    std::string s;
    std::vector<char> seen(perm.size(), 0);
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (seen[start] || perm[start] == static_cast<int>(start)) continue;
        s += "(";
        std::size_t x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = 1;
            if (!first) s += ",";
            s += std::to_string(x + 1);
            first = false;
            x = static_cast<std::size_t>(perm[x]);
        }
        s += ")";
    }
    return s.empty() ? "id" : s;
}

bool is_even(const std::vector<int>& perm) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0;
}

/// Permutations of {1..k} in lexicographic image order; products compose
/// left to right: x^(gh) = (x^g)^h.
FiniteGroup permutation_group(int k, bool even_only, std::string origin) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    do {
        if (!even_only || is_even(p)) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<int>, Element> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);

    const std::size_t n = perms.size();
    CayleyTable t(n, std::vector<Element>(n));
    std::vector<std::string> labels(n);
    std::vector<int> prod(static_cast<std::size_t>(k));
    for (std::size_t a = 0; a < n; ++a) {
        labels[a] = cycle_label(perms[a]);
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t x = 0; x < prod.size(); ++x)
                prod[x] = perms[b][static_cast<std::size_t>(perms[a][x])];
            t[a][b] = index.at(prod);
        }
    }
    return FiniteGroup::from_table(t, std::move(labels), std::move(origin));
}

FiniteGroup elementary_abelian(std::size_t p, std::size_t k) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < k; ++i) n *= p;
    auto digits = [&](std::size_t x) {
        std::vector<std::size_t> d(k);
        for (std::size_t i = 0; i < k; ++i, x /= p) d[i] = x % p;
        return d;
    };
    CayleyTable t(n, std::vector<Element>(n));
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
        auto da = digits(a);
        std::string lab = "[";
        for (std::size_t i = 0; i < k; ++i) lab += (i ? "," : "") + std::to_string(da[i]);
        labels[a] = lab + "]";
        for (std::size_t b = 0; b < n; ++b) {
            auto db = digits(b);
            std::size_t c = 0, w = 1;
            for (std::size_t i = 0; i < k; ++i, w *= p) c += ((da[i] + db[i]) % p) * w;
            t[a][b] = static_cast<Element>(c);
        }
    }
    return FiniteGroup::from_table(t, std::move(labels),
                                   "elementary_abelian(" + std::to_string(p) + "," + std::to_string(k) + ")");
}

FiniteGroup direct(const FiniteGroup& g, const FiniteGroup& h) {
    const std::size_t n1 = g.order(), n2 = h.order(), n = n1 * n2;
    CayleyTable t(n, std::vector<Element>(n));
    std::vector<std::string> labels(n);
    for (Element a1 = 0; a1 < n1; ++a1)
        for (Element a2 = 0; a2 < n2; ++a2) {
            Element a = static_cast<Element>(a1 * n2 + a2);
            labels[a] = "(" + g.label(a1) + "," + h.label(a2) + ")";
            for (Element b1 = 0; b1 < n1; ++b1)
                for (Element b2 = 0; b2 < n2; ++b2)
                    t[a][b1 * n2 + b2] = static_cast<Element>(g.mul(a1, b1) * n2 + h.mul(a2, b2));
        }
    return FiniteGroup::from_table(t, std::move(labels), "direct(" + g.origin() + "," + h.origin() + ")");
}

class RecipeParser {
public:
    RecipeParser(std::string_view text, std::size_t cap) : text_(text), cap_(cap) {}

    FiniteGroup parse() {
        FiniteGroup g = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::UnknownRecipe,
                    "cannot parse recipe '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::size_t number() {
        skip_ws();
        std::size_t start = pos_;
        std::size_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            if (v > 1'000'000'000) fail("number too large");
            ++pos_;
        }
        if (start == pos_) fail("expected a number");
        return v;
    }

    FiniteGroup expr() {
        const std::string name = ident();
        if (name == "quaternion8") {
            // b^2 = a^2, b^-1 a b = a^-1
            return metacyclic(
                4, 2, [](std::size_t j, std::size_t k) { return j ? (4 - k) % 4 : k; },
                [](std::size_t j, std::size_t l) -> std::size_t { return j && l ? 2 : 0; }, "quaternion8");
        }
        if (name == "semidirect_c3_c4") {
            // a^3 = b^4 = 1, b^-1 a b = a^-1
            return metacyclic(
                3, 4, [](std::size_t j, std::size_t k) { return j % 2 ? (3 - k) % 3 : k; },
                [](std::size_t, std::size_t) -> std::size_t { return 0; }, "semidirect_c3_c4");
        }
        if (name == "semidirect_c5_c4") {
            // a^5 = b^4 = 1, b^-1 a b = a^2, hence b a = a^3 b
            return metacyclic(
                5, 4,
                [](std::size_t j, std::size_t k) {
                    std::size_t m = 1;
                    for (std::size_t i = 0; i < j; ++i) m = m * 3 % 5;
                    return m * k % 5;
                },
                [](std::size_t, std::size_t) -> std::size_t { return 0; }, "semidirect_c5_c4");
        }
        expect('(');
        if (name == "direct") {
            FiniteGroup a = expr();
            expect(',');
            FiniteGroup b = expr();
            expect(')');
            check_order(a.order() * b.order(), cap_, "direct(" + a.origin() + "," + b.origin() + ")");
            return direct(a, b);
        }
        if (name == "elementary_abelian") {
            std::size_t p = number();
            expect(',');
            std::size_t k = number();
            expect(')');
            if (!is_prime(p)) fail("elementary_abelian needs a prime, got " + std::to_string(p));
            std::size_t n = 1;
            for (std::size_t i = 0; i < k; ++i) {
                n *= p;
                check_order(n, cap_, "elementary_abelian");
            }
            return elementary_abelian(p, k);
        }
        std::size_t k = number();
        expect(')');
        if (name == "cyclic") {
            if (k == 0) fail("cyclic(0)");
            check_order(k, cap_, "cyclic(" + std::to_string(k) + ")");
            return cyclic(k);
        }
        if (name == "dihedral") {
            if (k == 0) fail("dihedral(0)");
            check_order(2 * k, cap_, "dihedral(" + std::to_string(k) + ")");
            return metacyclic(
                k, 2, [k](std::size_t j, std::size_t i) { return j ? (k - i) % k : i; },
                [](std::size_t, std::size_t) -> std::size_t { return 0; }, "dihedral(" + std::to_string(k) + ")");
        }
        if (name == "symmetric" || name == "alternating") {
            if (k < 1 || k > 6) fail(name + " supports degrees 1..6");
            std::size_t order = 1;
            for (std::size_t i = 2; i <= k; ++i) order *= i;
            if (name == "alternating" && k >= 2) order /= 2;
            std::string origin = name + "(" + std::to_string(k) + ")";
            check_order(order, cap_, origin);
            return permutation_group(static_cast<int>(k), name == "alternating", origin);
        }
        fail("unknown constructor '" + name + "'");
    }

    std::string_view text_;
    std::size_t cap_;
    std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup make_named_group(std::string_view recipe, std::size_t max_order) {
    return RecipeParser(recipe, max_order).parse();
}

}  // namespace indep
