#include "cognum/order.hpp"

#include <algorithm>

#include "cognum/error.hpp"

namespace cognum::order {

// ---------------------------------------------------------------------------
// OrderedSet
// ---------------------------------------------------------------------------

OrderedSet::OrderedSet(std::vector<std::string> elements, std::set<Pair> leq)
    : elements_(std::move(elements)), pairs_(std::move(leq)) {
    if (elements_.empty()) throw DomainError("EmptyCarrier", "an ordered set needs an element");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (!index_.emplace(elements_[i], i).second) {
            throw DomainError("DuplicateElement", "element '" + elements_[i] + "' listed twice");
        }
    }
    const std::size_t n = elements_.size();
    matrix_.assign(n * n, 0);
    for (const auto& [a, b] : pairs_) matrix_[index_of(a) * n + index_of(b)] = 1;
}

OrderedSet OrderedSet::chain(std::vector<std::string> elements) {
    std::set<Pair> leq;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i; j < elements.size(); ++j) leq.emplace(elements[i], elements[j]);
    }
    return OrderedSet(std::move(elements), std::move(leq));
}

std::size_t OrderedSet::index_of(const std::string& element) const {
    auto it = index_.find(element);
    if (it == index_.end()) throw DomainError("UnknownElement", "no element '" + element + "'");
    return it->second;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

const char* to_string(OrderKind kind) {
    switch (kind) {
        case OrderKind::not_an_order: return "not-an-order";
        case OrderKind::partial: return "partial";
        case OrderKind::total: return "total";
        case OrderKind::well: return "well";
    }
    return "?";
}

std::optional<std::string> OrderAnalysis::successor_obstacle() const {
    if (non_reflexive) return "not reflexive: " + *non_reflexive + " <= " + *non_reflexive + " missing";
    if (non_transitive) {
        const auto& [a, b, c] = *non_transitive;
        return "not transitive: " + a + " <= " + b + " and " + b + " <= " + c + " but not " + a +
               " <= " + c;
    }
    if (incomparable) {
        return "not totally ordered: " + incomparable->first + " and " + incomparable->second +
               " are incomparable";
    }
    if (!equivalent.empty()) {
        return "elements not distinct: " + equivalent.front().first + " ~ " +
               equivalent.front().second;
    }
    return std::nullopt;
}

OrderAnalysis analyze_order(const OrderedSet& s) {
    OrderAnalysis a;
    const std::size_t n = s.size();
    const auto& el = s.elements();

    for (std::size_t i = 0; i < n && !a.non_reflexive; ++i) {
        if (!s.leq(i, i)) a.non_reflexive = el[i];
    }
    for (std::size_t i = 0; i < n && !a.non_transitive; ++i) {
        for (std::size_t j = 0; j < n && !a.non_transitive; ++j) {
            if (!s.leq(i, j)) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (s.leq(j, k) && !s.leq(i, k)) {
                    a.non_transitive = std::array{el[i], el[j], el[k]};
                    break;
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!s.leq(i, j) && !s.leq(j, i) && !a.incomparable) a.incomparable = Pair{el[i], el[j]};
            if (s.leq(i, j) && s.leq(j, i)) a.equivalent.emplace_back(el[i], el[j]);
        }
    }

    if (a.non_reflexive || a.non_transitive) {
        a.kind = OrderKind::not_an_order;
    } else if (a.incomparable) {
        a.kind = OrderKind::partial;
    } else {
        // Total. On a finite carrier the order is well founded once the
        // equivalence classes, taken as single points, have a global minimum.
        const OrderedSet collapsed = collapse_equivalents(s);
        const std::size_t m = collapsed.size();
        bool has_minimum = false;
        for (std::size_t i = 0; i < m && !has_minimum; ++i) {
            has_minimum = true;
            for (std::size_t j = 0; j < m; ++j) has_minimum = has_minimum && collapsed.leq(i, j);
        }
        a.kind = has_minimum ? OrderKind::well : OrderKind::total;
    }
    return a;
}

OrderKind check_order(const OrderedSet& s) { return analyze_order(s).kind; }

std::vector<Pair> equivalent_pairs(const OrderedSet& s) { return analyze_order(s).equivalent; }

OrderedSet collapse_equivalents(const OrderedSet& s) {
    const std::size_t n = s.size();
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i) {
        const bool absorbed = std::any_of(reps.begin(), reps.end(), [&](std::size_t r) {
            return s.leq(r, i) && s.leq(i, r);
        });
        if (!absorbed) reps.push_back(i);
    }
    std::vector<std::string> elements;
    std::set<Pair> leq;
    for (std::size_t a : reps) {
        elements.push_back(s.elements()[a]);
        for (std::size_t b : reps) {
            if (s.leq(a, b)) leq.emplace(s.elements()[a], s.elements()[b]);
        }
    }
    return OrderedSet(std::move(elements), std::move(leq));
}

// ---------------------------------------------------------------------------
// Successor
// ---------------------------------------------------------------------------

std::vector<std::vector<std::size_t>> successor_candidates(const OrderedSet& s) {
    const std::size_t n = s.size();
    std::vector<std::vector<std::size_t>> out(n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!s.less(x, j)) continue;
            bool below_all = true;
            for (std::size_t k = 0; k < n && below_all; ++k) {
                if (s.less(x, k) && !s.leq(j, k)) below_all = false;
            }
            if (below_all) out[x].push_back(j);
        }
    }
    return out;
}

namespace {

void require_strict_total(const OrderedSet& s) {
    const OrderAnalysis a = analyze_order(s);
    if (a.kind != OrderKind::total && a.kind != OrderKind::well) {
        throw DomainError("NotTotallyOrdered", *a.successor_obstacle());
    }
    if (!a.equivalent.empty()) {
        throw DomainError("EquivalentElementsPresent", *a.successor_obstacle());
    }
}

/// Successor indices on a relation already known to be a strict total order.
std::vector<std::optional<std::size_t>> successor_map(const OrderedSet& s) {
    const auto candidates = successor_candidates(s);
    std::vector<std::optional<std::size_t>> out(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
        if (!candidates[x].empty()) out[x] = candidates[x].front();
    }
    return out;
}

std::size_t first_index(const OrderedSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        bool first = true;
        for (std::size_t j = 0; j < s.size() && first; ++j) first = s.leq(i, j);
        if (first) return i;
    }
    throw DomainError("NotWellOrdered", "no first element");
}

}  // namespace

std::optional<std::string> successor(const OrderedSet& s, const std::string& x) {
    const std::size_t xi = s.index_of(x);
    require_strict_total(s);
    const auto candidates = successor_candidates(s);
    if (candidates[xi].empty()) return std::nullopt;
    return s.elements()[candidates[xi].front()];
}

LemmaReport verify_lemma1(const OrderedSet& s) {
    require_strict_total(s);
    LemmaReport report;
    const auto candidates = successor_candidates(s);
    for (std::size_t x = 0; x < s.size(); ++x) {
        ++report.checked;
        if (candidates[x].size() > 1) {
            report.holds = false;
            std::string w = s.elements()[x] + " has successors";
            for (std::size_t c : candidates[x]) w += " " + s.elements()[c];
            report.witnesses.push_back(std::move(w));
        }
    }
    return report;
}

LemmaReport verify_lemma2(const OrderedSet& s) {
    require_strict_total(s);
    LemmaReport report;
    const auto succ = successor_map(s);
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            ++report.checked;
            if (succ[a] && succ[b] && *succ[a] == *succ[b]) {
                report.holds = false;
                report.witnesses.push_back(s.elements()[a] + " and " + s.elements()[b] +
                                           " share successor " + s.elements()[*succ[a]]);
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Peano axioms
// ---------------------------------------------------------------------------

bool PeanoReport::all_pass() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const auto& a) { return a.passed; });
}

PeanoReport peano_verify(const OrderedSet& s) {
    PeanoReport report;
    auto& [one, unique_succ, no_pred_of_one, injective, induction] = report.axioms;
    one.id = "i";
    unique_succ.id = "ii";
    no_pred_of_one.id = "iii";
    injective.id = "iv";
    induction.id = "v";

    const auto& el = s.elements();
    const std::size_t n = s.size();

    // i) a first element exists, and it alone is named 1.
    std::vector<std::size_t> firsts;
    for (std::size_t i = 0; i < n; ++i) {
        bool first = true;
        for (std::size_t j = 0; j < n && first; ++j) first = s.leq(i, j);
        if (first) firsts.push_back(i);
    }
    if (firsts.size() == 1) {
        one.passed = true;
        one.detail = "first element " + el[firsts.front()] + " is named 1";
    } else if (firsts.empty()) {
        one.detail = "no element precedes every other element";
    } else {
        one.detail = "first element not unique: " + el[firsts[0]] + " ~ " + el[firsts[1]];
    }

    const OrderAnalysis analysis = analyze_order(s);
    if (auto obstacle = analysis.successor_obstacle()) {
        for (auto* axiom : {&unique_succ, &no_pred_of_one, &injective, &induction}) {
            axiom->detail = *obstacle;
        }
        return report;
    }

    const auto candidates = successor_candidates(s);
    const std::size_t first = firsts.front();

    // ii) unique successor; the maximum of a finite carrier is exempt.
    unique_succ.passed = true;
    for (std::size_t x = 0; x < n; ++x) {
        if (candidates[x].size() > 1) {
            unique_succ.passed = false;
            unique_succ.detail = el[x] + " has " + std::to_string(candidates[x].size()) +
                                 " successors";
            break;
        }
        if (candidates[x].empty()) {
            if (report.exempt_maximum) {
                unique_succ.passed = false;
                unique_succ.detail = el[x] + " and " + *report.exempt_maximum + " lack successors";
                break;
            }
            report.exempt_maximum = el[x];
        }
    }
    if (unique_succ.passed) {
        unique_succ.detail = "exempt: maximum " + report.exempt_maximum.value_or("?") +
                             " has no successor on a finite carrier";
    }

    // iii) nothing has the first element as its successor.
    no_pred_of_one.passed = true;
    no_pred_of_one.detail = "no successor equals " + el[first];
    for (std::size_t x = 0; x < n; ++x) {
        if (!candidates[x].empty() && candidates[x].front() == first) {
            no_pred_of_one.passed = false;
            no_pred_of_one.detail = "successor of " + el[x] + " is the first element " + el[first];
            break;
        }
    }

    // iv) distinct elements have distinct successors.
    const LemmaReport lemma2 = verify_lemma2(s);
    injective.passed = lemma2.holds;
    injective.detail = lemma2.holds ? "successor map is injective" : lemma2.witnesses.front();

    // v) induction: the successor chain from 1 reaches every element.
    std::vector<char> reached(n, 0);
    std::size_t count = 0;
    for (std::optional<std::size_t> cur = first; cur && !reached[*cur];) {
        reached[*cur] = 1;
        ++count;
        cur = candidates[*cur].empty() ? std::nullopt
                                       : std::optional<std::size_t>(candidates[*cur].front());
    }
    induction.passed = count == n;
    if (induction.passed) {
        induction.detail = "successor chain from " + el[first] + " covers all " +
                           std::to_string(n) + " elements";
    } else {
        const auto missed = std::find(reached.begin(), reached.end(), 0) - reached.begin();
        induction.detail = "element " + el[missed] + " is not reached from " + el[first];
    }
    return report;
}

// ---------------------------------------------------------------------------
// Naming and addition
// ---------------------------------------------------------------------------

Numeral Numbering::numeral_of(const std::string& element) const {
    auto it = names_.find(element);
    if (it == names_.end()) throw DomainError("UnknownElement", "no element '" + element + "'");
    return it->second;
}

const std::string& Numbering::element_of(Numeral n) const {
    if (n.value < 1 || n.value > by_numeral_.size()) {
        throw DomainError("InvalidNumeral", "numeral " + std::to_string(n.value) +
                                                " does not name an element");
    }
    return by_numeral_[n.value - 1];
}

namespace {

void require_well_distinct(const OrderedSet& s) {
    const OrderAnalysis a = analyze_order(s);
    if (a.kind != OrderKind::well || !a.equivalent.empty()) {
        throw DomainError("NotWellOrdered", a.successor_obstacle().value_or("not well ordered"));
    }
}

}  // namespace

Numbering name_elements(const OrderedSet& s) {
    require_well_distinct(s);
    const auto succ = successor_map(s);
    Numbering numbering;
    Numeral name{1};
    for (std::optional<std::size_t> cur = first_index(s); cur; cur = succ[*cur]) {
        numbering.names_.emplace(s.elements()[*cur], name);
        numbering.by_numeral_.push_back(s.elements()[*cur]);
        ++name.value;
    }
    return numbering;
}

Numeral add(const OrderedSet& s, Numeral n, Numeral m) {
    const Numbering names = name_elements(s);
    const auto succ = successor_map(s);

    auto next = [&](std::size_t element) {
        if (!succ[element]) {
            throw DomainError("OutOfRange", "sum runs past the maximum element " +
                                                s.elements()[element]);
        }
        return *succ[element];
    };

    const std::size_t target = s.index_of(names.element_of(m));
    // n + 1 = S(n)
    std::size_t counter = first_index(s);
    std::size_t sum = next(s.index_of(names.element_of(n)));
    // n + S(k) = S(n + k), walking k up the chain until it reaches m.
    while (counter != target) {
        counter = next(counter);
        sum = next(sum);
    }
    return names.numeral_of(s.elements()[sum]);
}

}  // namespace cognum::order
