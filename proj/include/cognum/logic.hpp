#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "cognum/knowledge.hpp"
#include "cognum/trace.hpp"

namespace cognum::logic {

// ---------------------------------------------------------------------------
// Concepts
// ---------------------------------------------------------------------------

/// c_k(x): "object x has the characteristic named k".
struct CharacteristicOf {
    std::string object;
    std::string name;
    auto operator<=>(const CharacteristicOf&) const = default;
};

/// P(x) or P(x, y).
struct PredicateOf {
    std::string predicate;
    std::vector<std::string> args;
    auto operator<=>(const PredicateOf&) const = default;
};

/// x in [X].
struct MembershipOf {
    std::string object;
    std::string species;
    auto operator<=>(const MembershipOf&) const = default;
};

using ConceptPayload = std::variant<CharacteristicOf, PredicateOf, MembershipOf>;

/// A ground node of the association graph, optionally negated.
///
/// Text form (used by scenario files and traces):
///   has(x, legs)      characteristic-of
///   in(x, tiger)      class membership
///   P(x) / P(x, y)    predicate of arity 1 or 2
///   not <concept>     negation
class Concept {
public:
    static Concept characteristic(std::string object, std::string name);
    /// Throws DomainError "InvalidConcept" unless args has 1 or 2 entries.
    static Concept predicate(std::string predicate, std::vector<std::string> args);
    static Concept membership(std::string object, std::string species);

    /// Throws FormatError on malformed text.
    static Concept parse(std::string_view text);

    const ConceptPayload& payload() const noexcept { return payload_; }
    bool is_negated() const noexcept { return negated_; }

    Concept negated() const;
    Concept positive() const;

    /// Object ids the concept talks about.
    std::vector<std::string> objects() const;

    std::string to_string() const;

    auto operator<=>(const Concept&) const = default;

private:
    explicit Concept(ConceptPayload payload) : payload_(std::move(payload)) {}

    ConceptPayload payload_;
    bool negated_ = false;
};

// ---------------------------------------------------------------------------
// Association
// ---------------------------------------------------------------------------

/// Directed "brings to mind" relation. Has no bearing on truth.
struct AssociationGraph {
    std::set<Concept> nodes;
    std::set<std::pair<Concept, Concept>> edges;

    bool operator==(const AssociationGraph&) const = default;
};

AssociationGraph associate(AssociationGraph g, const Concept& a, const Concept& b);

std::set<Concept> associations_of(const AssociationGraph& g, const Concept& a);

// ---------------------------------------------------------------------------
// Facts, rules and inference
// ---------------------------------------------------------------------------

enum class Verdict { is_true, is_false, unknown };

const char* to_string(Verdict v);

/// Kleene conjunction/disjunction over three-valued verdicts.
Verdict all_of(std::span<const Verdict> vs);
Verdict any_of(std::span<const Verdict> vs);

struct Fact {
    Concept statement;
    bool truth = true;

    bool operator==(const Fact&) const = default;
};

/// Observed and derived truths, keyed by the positive form of each concept.
/// Never holds both truth values for one concept.
class FactStore {
public:
    FactStore() = default;
    /// Throws DomainError "Contradiction" if the facts disagree.
    explicit FactStore(std::span<const Fact> facts);

    /// Returns true when the fact was new. Throws DomainError "Contradiction".
    bool add(const Fact& fact);

    /// Truth of `c`, honouring its polarity; nullopt when not recorded.
    std::optional<bool> lookup(const Concept& c) const;
    Verdict verdict(const Concept& c) const;

    const std::map<Concept, bool>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    bool operator==(const FactStore&) const = default;

private:
    std::map<Concept, bool> entries_;
};

/// antecedents (conjunction) imply consequent. Antecedents are kept sorted and
/// duplicate-free.
class Rule {
public:
    /// Throws DomainError "InvalidRule" on an empty antecedent list.
    Rule(std::vector<Concept> antecedents, Concept consequent);

    const std::vector<Concept>& antecedents() const noexcept { return antecedents_; }
    const Concept& consequent() const noexcept { return consequent_; }

    std::string to_string() const;

    auto operator<=>(const Rule&) const = default;

private:
    std::vector<Concept> antecedents_;
    Concept consequent_;
};

/// Names the pieces of the predator/prey derivation. Predicate ids are
/// configuration, not built in.
struct ScenarioWiring {
    std::string predator;
    std::string prey;
    std::string predator_species;
    std::string profile_predicate;  // P(x)
    std::string attack_predicate;   // P(x, y)
    std::string run_predicate;      // R(y)
    std::string approach_predicate = "approaching";
    std::uint64_t from_tick = 0;
    std::uint64_t to_tick = 1;

    bool operator==(const ScenarioWiring&) const = default;
};

/// Ground implication rules derivable from species profiles, instantiated for
/// every object mentioned by the facts, the graph, or the wiring. With a wiring,
/// also emits the two composite rules
///   P(x) & approaching(x, y) -> attack(x, y)   and   attack(x, y) -> run(y).
std::vector<Rule> derive_rules(const FactStore& facts, const AssociationGraph& graph,
                               std::span<const knowledge::SpeciesTemplate> templates,
                               const std::optional<ScenarioWiring>& wiring = std::nullopt);

/// Forward-chains the rules to a fixpoint. Throws DomainError "Contradiction"
/// when both polarities of one concept are derived.
FactStore forward_chain(const FactStore& facts, std::span<const Rule> rules);

Verdict infer(const Concept& query, const FactStore& facts, std::span<const Rule> rules);

// ---------------------------------------------------------------------------
// Distances and time
// ---------------------------------------------------------------------------

using Distance = boost::rational<std::int64_t>;
using Tick = std::uint64_t;

struct DistanceObservation {
    std::string subject;
    std::string target;
    Tick tick = 0;
    Distance distance;

    bool operator==(const DistanceObservation&) const = default;
};

/// Distance readings indexed by unordered object pair and tick.
class DistanceLog {
public:
    DistanceLog() = default;
    explicit DistanceLog(std::span<const DistanceObservation> observations);

    /// Throws DomainError "InvalidDistance" for negative readings and
    /// "AsymmetricDistance" when a pair already has a different reading at that tick.
    void add(const DistanceObservation& obs);

    std::optional<Distance> at(const std::string& x, const std::string& y, Tick tick) const;

private:
    std::map<std::tuple<std::string, std::string, Tick>, Distance> readings_;
};

/// True iff the distance at `tau` is no greater than at `t` (t <= tau).
/// Throws "MissingObservation" when a reading is absent and "InvalidTickOrder" if t > tau.
bool approaching(const DistanceLog& log, const std::string& x, const std::string& y, Tick t,
                 Tick tau);
bool approaching(std::span<const DistanceObservation> obs, const std::string& x,
                 const std::string& y, Tick t, Tick tau);

std::string format_distance(const Distance& d);

// ---------------------------------------------------------------------------
// Predator/prey scenario
// ---------------------------------------------------------------------------

struct ScenarioBundle {
    std::vector<knowledge::Object> objects;
    std::vector<knowledge::SpeciesTemplate> templates;
    std::vector<DistanceObservation> distances;
    ScenarioWiring wiring;
    std::vector<Fact> facts;  // extra observations beyond classification
    std::vector<Rule> rules;  // extra declared rules
};

struct ScenarioResult {
    Trace trace;
    Verdict reaction = Verdict::unknown;  // verdict for run(prey)
};

/// The bundle's extra facts, one membership fact per classified object, and
/// the observed approach fact for the wired pair.
FactStore scenario_facts(const ScenarioBundle& bundle);

/// Identifies every object, compares the two distance readings, chains the
/// derived rules and reports the four derivation steps in order.
ScenarioResult run_scenario(const ScenarioBundle& bundle);

}  // namespace cognum::logic
