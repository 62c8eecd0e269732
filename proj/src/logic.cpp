#include "cognum/logic.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "cognum/error.hpp"

namespace cognum::logic {

namespace {

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string parse_ident(std::string_view s, std::string_view whole) {
    s = trim(s);
    if (s.empty() || !std::all_of(s.begin(), s.end(), is_ident_char)) {
        throw FormatError("malformed identifier '" + std::string(s) + "' in concept '" +
                          std::string(whole) + "'");
    }
    return std::string(s);
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Concept
// ---------------------------------------------------------------------------

Concept Concept::characteristic(std::string object, std::string name) {
    return Concept(CharacteristicOf{std::move(object), std::move(name)});
}

Concept Concept::predicate(std::string predicate, std::vector<std::string> args) {
    if (args.empty() || args.size() > 2) {
        throw DomainError("InvalidConcept", "predicate '" + predicate + "' has arity " +
                                                std::to_string(args.size()) +
                                                "; only 1 or 2 is allowed");
    }
    return Concept(PredicateOf{std::move(predicate), std::move(args)});
}

Concept Concept::membership(std::string object, std::string species) {
    return Concept(MembershipOf{std::move(object), std::move(species)});
}

Concept Concept::parse(std::string_view text) {
    const std::string_view whole = text;
    text = trim(text);
    if (text.starts_with("not ")) return parse(text.substr(4)).negated();
    if (text.starts_with("!")) return parse(text.substr(1)).negated();

    const auto open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')') {
        throw FormatError("malformed concept '" + std::string(whole) + "'");
    }
    std::string head = parse_ident(text.substr(0, open), whole);
    std::vector<std::string> args;
    std::string_view rest = text.substr(open + 1, text.size() - open - 2);
    while (true) {
        const auto comma = rest.find(',');
        args.push_back(parse_ident(rest.substr(0, comma), whole));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }

    if (head == "in" || head == "has") {
        if (args.size() != 2) {
            throw FormatError("'" + head + "' takes two arguments in '" + std::string(whole) + "'");
        }
        return head == "in" ? membership(args[0], args[1]) : characteristic(args[0], args[1]);
    }
    try {
        return predicate(std::move(head), std::move(args));
    } catch (const DomainError& e) {
        throw FormatError(e.what());
    }
}

Concept Concept::negated() const {
    Concept c = *this;
    c.negated_ = !negated_;
    return c;
}

Concept Concept::positive() const {
    Concept c = *this;
    c.negated_ = false;
    return c;
}

std::vector<std::string> Concept::objects() const {
    return std::visit(
        [](const auto& p) -> std::vector<std::string> {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, PredicateOf>) {
                return p.args;
            } else {
                return {p.object};
            }
        },
        payload_);
}

std::string Concept::to_string() const {
    std::string body = std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, CharacteristicOf>) {
                return "has(" + p.object + ", " + p.name + ")";
            } else if constexpr (std::is_same_v<T, MembershipOf>) {
                return "in(" + p.object + ", " + p.species + ")";
            } else {
                return p.predicate + "(" + join(p.args) + ")";
            }
        },
        payload_);
    return negated_ ? "not " + body : body;
}

// ---------------------------------------------------------------------------
// Association
// ---------------------------------------------------------------------------

AssociationGraph associate(AssociationGraph g, const Concept& a, const Concept& b) {
    g.nodes.insert(a);
    g.nodes.insert(b);
    g.edges.emplace(a, b);
    return g;
}

std::set<Concept> associations_of(const AssociationGraph& g, const Concept& a) {
    std::set<Concept> out;
    for (const auto& [from, to] : g.edges) {
        if (from == a) out.insert(to);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verdicts and facts
// ---------------------------------------------------------------------------

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::is_true: return "true";
        case Verdict::is_false: return "false";
        case Verdict::unknown: return "unknown";
    }
    return "?";
}

Verdict all_of(std::span<const Verdict> vs) {
    Verdict acc = Verdict::is_true;
    for (Verdict v : vs) {
        if (v == Verdict::is_false) return Verdict::is_false;
        if (v == Verdict::unknown) acc = Verdict::unknown;
    }
    return acc;
}

Verdict any_of(std::span<const Verdict> vs) {
    Verdict acc = Verdict::is_false;
    for (Verdict v : vs) {
        if (v == Verdict::is_true) return Verdict::is_true;
        if (v == Verdict::unknown) acc = Verdict::unknown;
    }
    return acc;
}

FactStore::FactStore(std::span<const Fact> facts) {
    for (const auto& f : facts) add(f);
}

bool FactStore::add(const Fact& fact) {
    const Concept key = fact.statement.positive();
    const bool truth = fact.statement.is_negated() ? !fact.truth : fact.truth;
    auto [it, inserted] = entries_.emplace(key, truth);
    if (!inserted && it->second != truth) {
        throw DomainError("Contradiction", "both " + key.to_string() + " and " +
                                               key.negated().to_string() + " hold");
    }
    return inserted;
}

std::optional<bool> FactStore::lookup(const Concept& c) const {
    auto it = entries_.find(c.positive());
    if (it == entries_.end()) return std::nullopt;
    return c.is_negated() ? !it->second : it->second;
}

Verdict FactStore::verdict(const Concept& c) const {
    auto v = lookup(c);
    if (!v) return Verdict::unknown;
    return *v ? Verdict::is_true : Verdict::is_false;
}

// ---------------------------------------------------------------------------
// Rules
// ---------------------------------------------------------------------------

Rule::Rule(std::vector<Concept> antecedents, Concept consequent)
    : antecedents_(std::move(antecedents)), consequent_(std::move(consequent)) {
    if (antecedents_.empty()) {
        throw DomainError("InvalidRule", "rule for " + consequent_.to_string() +
                                             " has no antecedents");
    }
    std::sort(antecedents_.begin(), antecedents_.end());
    antecedents_.erase(std::unique(antecedents_.begin(), antecedents_.end()), antecedents_.end());
}

std::string Rule::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < antecedents_.size(); ++i) {
        if (i) out += " & ";
        out += antecedents_[i].to_string();
    }
    return out + " -> " + consequent_.to_string();
}

std::vector<Rule> derive_rules(const FactStore& facts, const AssociationGraph& graph,
                               std::span<const knowledge::SpeciesTemplate> templates,
                               const std::optional<ScenarioWiring>& wiring) {
    std::set<std::string> universe;
    auto collect = [&](const Concept& c) {
        for (auto& o : c.objects()) universe.insert(std::move(o));
    };
    for (const auto& [c, truth] : facts.entries()) collect(c);
    for (const auto& c : graph.nodes) collect(c);
    if (wiring) {
        universe.insert(wiring->predator);
        universe.insert(wiring->prey);
    }

    std::set<Rule> rules;
    for (const auto& t : templates) {
        for (const auto& p : t.profile) {
            for (const auto& o : universe) {
                rules.emplace(std::vector{Concept::membership(o, t.species_id)},
                              Concept::predicate(p, {o}));
            }
        }
    }

    if (wiring) {
        const bool profiled = std::any_of(templates.begin(), templates.end(), [&](const auto& t) {
            return t.profile.contains(wiring->profile_predicate);
        });
        if (profiled) {
            const auto& x = wiring->predator;
            const auto& y = wiring->prey;
            const Concept attack = Concept::predicate(wiring->attack_predicate, {x, y});
            rules.emplace(std::vector{Concept::predicate(wiring->profile_predicate, {x}),
                                      Concept::predicate(wiring->approach_predicate, {x, y})},
                          attack);
            rules.emplace(std::vector{attack}, Concept::predicate(wiring->run_predicate, {y}));
        }
    }
    return {rules.begin(), rules.end()};
}

FactStore forward_chain(const FactStore& facts, std::span<const Rule> rules) {
    FactStore known = facts;

    // Counter-based chaining: each rule waits on its unsatisfied antecedents;
    // a literal entering the store decrements every rule watching it.
    std::map<Concept, std::vector<std::size_t>> watchers;
    std::vector<std::size_t> pending(rules.size());
    std::deque<Concept> agenda;

    auto establish = [&](const Concept& literal) {
        if (known.add({literal, true})) agenda.push_back(literal);
    };

    for (std::size_t r = 0; r < rules.size(); ++r) {
        pending[r] = rules[r].antecedents().size();
        for (const auto& a : rules[r].antecedents()) watchers[a].push_back(r);
    }
    for (const auto& [c, truth] : known.entries()) agenda.push_back(truth ? c : c.negated());

    while (!agenda.empty()) {
        const Concept literal = std::move(agenda.front());
        agenda.pop_front();
        auto it = watchers.find(literal);
        if (it == watchers.end()) continue;
        for (std::size_t r : it->second) {
            if (--pending[r] == 0) establish(rules[r].consequent());
        }
    }
    return known;
}

Verdict infer(const Concept& query, const FactStore& facts, std::span<const Rule> rules) {
    return forward_chain(facts, rules).verdict(query);
}

// ---------------------------------------------------------------------------
// Distances
// ---------------------------------------------------------------------------

DistanceLog::DistanceLog(std::span<const DistanceObservation> observations) {
    for (const auto& o : observations) add(o);
}

void DistanceLog::add(const DistanceObservation& obs) {
    if (obs.distance < 0) {
        throw DomainError("InvalidDistance", "negative distance between '" + obs.subject +
                                                 "' and '" + obs.target + "'");
    }
    auto key = obs.subject < obs.target ? std::tuple{obs.subject, obs.target, obs.tick}
                                        : std::tuple{obs.target, obs.subject, obs.tick};
    auto [it, inserted] = readings_.emplace(std::move(key), obs.distance);
    if (!inserted && it->second != obs.distance) {
        throw DomainError("AsymmetricDistance",
                          "conflicting distances between '" + obs.subject + "' and '" +
                              obs.target + "' at tick " + std::to_string(obs.tick));
    }
}

std::optional<Distance> DistanceLog::at(const std::string& x, const std::string& y,
                                        Tick tick) const {
    auto it = readings_.find(x < y ? std::tuple{x, y, tick} : std::tuple{y, x, tick});
    if (it == readings_.end()) return std::nullopt;
    return it->second;
}

bool approaching(const DistanceLog& log, const std::string& x, const std::string& y, Tick t,
                 Tick tau) {
    if (t > tau) {
        throw DomainError("InvalidTickOrder",
                          "tick " + std::to_string(t) + " is later than " + std::to_string(tau));
    }
    auto require = [&](Tick tick) {
        auto d = log.at(x, y, tick);
        if (!d) {
            throw DomainError("MissingObservation", "no distance between '" + x + "' and '" + y +
                                                        "' at tick " + std::to_string(tick));
        }
        return *d;
    };
    const Distance before = require(t);
    const Distance after = require(tau);
    return after <= before;
}

bool approaching(std::span<const DistanceObservation> obs, const std::string& x,
                 const std::string& y, Tick t, Tick tau) {
    return approaching(DistanceLog(obs), x, y, t, tau);
}

std::string format_distance(const Distance& d) {
    if (d.denominator() == 1) return std::to_string(d.numerator());
    return std::to_string(d.numerator()) + "/" + std::to_string(d.denominator());
}

// ---------------------------------------------------------------------------
// Scenario
// ---------------------------------------------------------------------------

FactStore scenario_facts(const ScenarioBundle& bundle) {
    const ScenarioWiring& w = bundle.wiring;

    auto has_object = [&](const std::string& id) {
        return std::any_of(bundle.objects.begin(), bundle.objects.end(),
                           [&](const auto& o) { return o.id() == id; });
    };
    for (const auto* id : {&w.predator, &w.prey}) {
        if (!has_object(*id)) {
            throw DomainError("InvalidWiring", "wiring names unknown object '" + *id + "'");
        }
    }
    auto species = std::find_if(bundle.templates.begin(), bundle.templates.end(),
                                [&](const auto& t) { return t.species_id == w.predator_species; });
    if (species == bundle.templates.end() || !species->profile.contains(w.profile_predicate)) {
        throw DomainError("InvalidWiring", "species '" + w.predator_species +
                                               "' does not carry profile predicate '" +
                                               w.profile_predicate + "'");
    }

    knowledge::validate_templates(bundle.templates);
    FactStore facts(bundle.facts);
    for (const auto& o : bundle.objects) {
        if (auto s = knowledge::classify(o, bundle.templates)) {
            facts.add({Concept::membership(o.id(), *s), true});
        }
    }
    const bool closing =
        approaching(DistanceLog(bundle.distances), w.predator, w.prey, w.from_tick, w.to_tick);
    facts.add({Concept::predicate(w.approach_predicate, {w.predator, w.prey}), closing});
    return facts;
}

ScenarioResult run_scenario(const ScenarioBundle& bundle) {
    const ScenarioWiring& w = bundle.wiring;
    const FactStore facts = scenario_facts(bundle);
    const DistanceLog log(bundle.distances);
    const Concept approach = Concept::predicate(w.approach_predicate, {w.predator, w.prey});

    std::vector<Rule> rules = derive_rules(facts, {}, bundle.templates, w);
    rules.insert(rules.end(), bundle.rules.begin(), bundle.rules.end());
    const FactStore closure = forward_chain(facts, rules);

    const Concept member = Concept::membership(w.predator, w.predator_species);
    const Concept profile = Concept::predicate(w.profile_predicate, {w.predator});
    const Concept attack = Concept::predicate(w.attack_predicate, {w.predator, w.prey});
    const Concept run = Concept::predicate(w.run_predicate, {w.prey});

    auto status = [&](const Concept& c) {
        return c.to_string() + " = " + to_string(closure.verdict(c));
    };
    auto distance_term = [&](Tick tick) {
        return "d[" + std::to_string(tick) + "](" + w.predator + ", " + w.prey +
               ") = " + format_distance(*log.at(w.predator, w.prey, tick));
    };

    ScenarioResult result;
    result.trace.add("logic", member.to_string() + " -> " + profile.to_string(), status(profile));
    result.trace.add("logic", distance_term(w.to_tick) + " <= " + distance_term(w.from_tick),
                     status(approach));
    result.trace.add("logic",
                     profile.to_string() + " & " + approach.to_string() + " -> " +
                         attack.to_string(),
                     status(attack));
    result.trace.add("logic", attack.to_string() + " -> " + run.to_string(), status(run));
    result.reaction = closure.verdict(run);
    return result;
}

}  // namespace cognum::logic
