#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cognum/counting.hpp"
#include "cognum/knowledge.hpp"
#include "cognum/logic.hpp"
#include "cognum/order.hpp"

namespace cognum::scenario {

struct MatrixSection {
    std::vector<std::string> states;
    std::vector<std::vector<double>> rows;

    bool operator==(const MatrixSection&) const = default;
};

/// In-memory form of a `.scn` file. Every section is optional. The on-disk
/// schema is documented in docs/format.md.
struct Scenario {
    std::vector<knowledge::Object> objects;
    std::vector<knowledge::SpeciesTemplate> templates;
    std::vector<logic::Fact> facts;
    std::vector<logic::Rule> rules;
    std::vector<std::pair<logic::Concept, logic::Concept>> associations;
    std::vector<logic::DistanceObservation> distances;
    std::optional<logic::ScenarioWiring> wiring;
    std::vector<logic::Concept> queries;
    std::optional<order::OrderedSet> order;
    std::optional<counting::Curriculum> curriculum;
    std::optional<MatrixSection> matrix;

    bool operator==(const Scenario&) const = default;
};

/// Parses scenario text. Throws FormatError on malformed JSON, unknown keys,
/// wrong value types, or ids that do not resolve in their defining section.
Scenario parse(std::string_view text);

/// Reads and parses a file; throws FormatError if it cannot be opened.
Scenario load(const std::filesystem::path& path);

/// Serializes to the same schema parse() accepts.
std::string write(const Scenario& s);

/// A random but internally consistent scenario touching every section.
Scenario random_scenario(std::uint64_t seed);

logic::FactStore fact_store(const Scenario& s);
logic::AssociationGraph association_graph(const Scenario& s);

/// The predator/prey bundle; throws FormatError when the wiring section is absent.
logic::ScenarioBundle bundle(const Scenario& s);

}  // namespace cognum::scenario
