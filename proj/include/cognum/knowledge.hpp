#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace cognum::knowledge {

/// A named, opaque-valued feature. Two characteristics are the same only when
/// both name and value are identical.
struct Characteristic {
    std::string name;
    std::string value;

    auto operator<=>(const Characteristic&) const = default;
};

using CharacteristicSet = std::set<Characteristic>;

/// An observed thing: a caller-supplied id plus a non-empty bundle of
/// characteristics with unique names.
class Object {
public:
    /// Throws DomainError "InvalidObject" on an empty bundle or a repeated name.
    Object(std::string id, CharacteristicSet characteristics);

    const std::string& id() const noexcept { return id_; }
    const CharacteristicSet& characteristics() const noexcept { return characteristics_; }

    bool contains(const CharacteristicSet& required) const;

    bool operator==(const Object&) const = default;

private:
    std::string id_;
    CharacteristicSet characteristics_;
};

/// The defining characteristics that identify a species, together with the
/// predicates its members are expected to satisfy.
struct SpeciesTemplate {
    std::string species_id;
    CharacteristicSet defining;
    std::set<std::string> profile;

    bool operator==(const SpeciesTemplate&) const = default;
};

/// Throws DomainError "InvalidTemplate" on an empty defining set and
/// "DuplicateTemplate" when two templates share a species id or a defining set.
void validate_templates(std::span<const SpeciesTemplate> templates);

struct Partition {
    std::map<std::string, std::set<std::string>> blocks;
    std::set<std::string> unclassified;

    bool operator==(const Partition&) const = default;
};

/// x and y are similar under t when both carry every defining characteristic of t.
bool similar(const Object& x, const Object& y, const SpeciesTemplate& t);

/// The unique species whose defining set is contained in x, if any.
/// Throws DomainError "AmbiguousClassification" when two or more templates match.
std::optional<std::string> classify(const Object& x, std::span<const SpeciesTemplate> templates);

Partition partition(std::span<const Object> objects, std::span<const SpeciesTemplate> templates);

enum class Law { reflexivity, symmetry, transitivity };

const char* to_string(Law law);

struct Counterexample {
    Law law;
    std::vector<std::string> objects;  // 1, 2 or 3 object ids depending on the law
};

struct EquivalenceReport {
    std::string species_id;
    std::size_t domain_size = 0;  // objects carrying the defining set
    std::size_t checked_triples = 0;
    std::vector<Counterexample> counterexamples;

    bool holds() const { return counterexamples.empty(); }
};

/// Exhaustively checks the equivalence laws of similar(., ., t) over the objects
/// that carry t's defining set. Failures are reported, never thrown.
EquivalenceReport verify_equivalence(std::span<const Object> objects, const SpeciesTemplate& t);

}  // namespace cognum::knowledge
