#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cognum::order {

using Pair = std::pair<std::string, std::string>;

/// A finite, non-empty carrier together with an explicit relation "a <= b".
/// The relation is taken exactly as given: no closure is ever applied, so a
/// relation missing reflexive or transitive pairs is simply not an order.
class OrderedSet {
public:
    /// Throws DomainError "EmptyCarrier", "DuplicateElement" or "UnknownElement".
    OrderedSet(std::vector<std::string> elements, std::set<Pair> leq);

    /// The full reflexive, transitive relation of the chain
    /// elements[0] < elements[1] < ... .
    static OrderedSet chain(std::vector<std::string> elements);

    const std::vector<std::string>& elements() const noexcept { return elements_; }
    const std::set<Pair>& pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return elements_.size(); }

    /// Throws DomainError "UnknownElement".
    std::size_t index_of(const std::string& element) const;

    bool leq(std::size_t a, std::size_t b) const { return matrix_[a * size() + b] != 0; }
    bool less(std::size_t a, std::size_t b) const { return leq(a, b) && !leq(b, a); }

    bool operator==(const OrderedSet& other) const {
        return elements_ == other.elements_ && pairs_ == other.pairs_;
    }

private:
    std::vector<std::string> elements_;
    std::set<Pair> pairs_;
    std::map<std::string, std::size_t> index_;
    std::vector<char> matrix_;
};

enum class OrderKind { not_an_order, partial, total, well };

const char* to_string(OrderKind kind);

/// Classification plus the first witness found for each failed property.
struct OrderAnalysis {
    OrderKind kind = OrderKind::not_an_order;
    std::optional<std::string> non_reflexive;
    std::optional<std::array<std::string, 3>> non_transitive;  // a<=b, b<=c, not a<=c
    std::optional<Pair> incomparable;
    std::vector<Pair> equivalent;  // a != b with a<=b and b<=a, each listed once

    /// Human-readable reason the carrier cannot support a successor function,
    /// or nullopt when it is a well order on distinct elements.
    std::optional<std::string> successor_obstacle() const;
};

OrderAnalysis analyze_order(const OrderedSet& s);

OrderKind check_order(const OrderedSet& s);

/// Pairs of distinct elements related both ways.
std::vector<Pair> equivalent_pairs(const OrderedSet& s);

/// Keeps the first listed element of every equivalence class and restricts the
/// relation to those representatives.
OrderedSet collapse_equivalents(const OrderedSet& s);

/// The least element strictly greater than x; nullopt for the maximum.
/// Throws DomainError "NotTotallyOrdered" or "EquivalentElementsPresent".
std::optional<std::string> successor(const OrderedSet& s, const std::string& x);

/// Per element, every candidate that satisfies the successor definition
/// (strictly greater than x and below every other element strictly greater than x).
/// Valid on any relation; used by the lemma checks.
std::vector<std::vector<std::size_t>> successor_candidates(const OrderedSet& s);

struct LemmaReport {
    bool holds = true;
    std::size_t checked = 0;
    std::vector<std::string> witnesses;
};

/// Uniqueness of successors. Same preconditions and errors as successor().
LemmaReport verify_lemma1(const OrderedSet& s);

/// Injectivity of the successor map. Same preconditions and errors as successor().
LemmaReport verify_lemma2(const OrderedSet& s);

struct AxiomResult {
    std::string id;  // "i" .. "v"
    bool passed = false;
    std::string detail;  // witness on failure, exemption note or summary on success
};

struct PeanoReport {
    std::array<AxiomResult, 5> axioms;
    std::optional<std::string> exempt_maximum;

    bool all_pass() const;
};

/// Checks the five Peano axioms on the carrier. Never throws for relations
/// that are not well orders; the failing axioms carry witnesses instead.
PeanoReport peano_verify(const OrderedSet& s);

/// A name given to an element: 1 for the first element, k+1 for the successor
/// of the element named k.
struct Numeral {
    std::size_t value = 1;
    auto operator<=>(const Numeral&) const = default;
};

class Numbering {
public:
    Numeral numeral_of(const std::string& element) const;
    /// Throws DomainError "InvalidNumeral".
    const std::string& element_of(Numeral n) const;
    std::size_t size() const noexcept { return by_numeral_.size(); }
    const std::map<std::string, Numeral>& names() const noexcept { return names_; }

private:
    friend Numbering name_elements(const OrderedSet& s);
    std::map<std::string, Numeral> names_;
    std::vector<std::string> by_numeral_;
};

/// Throws DomainError "NotWellOrdered" unless s is a well order on distinct elements.
Numbering name_elements(const OrderedSet& s);

/// n + m evaluated only through n + 1 = S(n) and n + S(m) = S(n + m) on the
/// carrier's successor function. Throws "NotWellOrdered", "InvalidNumeral" or
/// "OutOfRange" when the recursion steps past the maximum.
Numeral add(const OrderedSet& s, Numeral n, Numeral m);

}  // namespace cognum::order
