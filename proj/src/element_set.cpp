#include "indep/element_set.hpp"

#include <algorithm>
#include <string>

#include "indep/error.hpp"

namespace indep {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedTable: return "MalformedTable";
        case ErrorKind::NoIdentity: return "NoIdentity";
        case ErrorKind::NoInverse: return "NoInverse";
        case ErrorKind::NotAssociative: return "NotAssociative";
        case ErrorKind::UnknownRecipe: return "UnknownRecipe";
        case ErrorKind::OrderTooLarge: return "OrderTooLarge";
        case ErrorKind::NotNormal: return "NotNormal";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::ClassDegreeMismatch: return "ClassDegreeMismatch";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::vector<std::int64_t> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

void ElementSet::insert(Element e) {
    if (e >= universe_)
        throw Error(ErrorKind::PreconditionViolated,
                    "element " + std::to_string(e) + " outside universe of size " +
                        std::to_string(universe_),
                    {e});
    words_[e >> 6] |= std::uint64_t{1} << (e & 63);
}

std::vector<Element> ElementSet::elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
        if (words_[i] & ~o) return false;
    }
    return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
    return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
    auto sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    auto ea = a.elements(), eb = b.elements();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::size_t ElementSet::hash() const noexcept {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace indep
