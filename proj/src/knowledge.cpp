#include "cognum/knowledge.hpp"

#include <algorithm>

#include "cognum/error.hpp"

namespace cognum::knowledge {

Object::Object(std::string id, CharacteristicSet characteristics)
    : id_(std::move(id)), characteristics_(std::move(characteristics)) {
    if (characteristics_.empty()) {
        throw DomainError("InvalidObject", "object '" + id_ + "' has no characteristics");
    }
    std::set<std::string> names;
    for (const auto& c : characteristics_) {
        if (!names.insert(c.name).second) {
            throw DomainError("InvalidObject",
                              "object '" + id_ + "' repeats characteristic '" + c.name + "'");
        }
    }
}

bool Object::contains(const CharacteristicSet& required) const {
    return std::includes(characteristics_.begin(), characteristics_.end(), required.begin(),
                         required.end());
}

void validate_templates(std::span<const SpeciesTemplate> templates) {
    std::set<std::string> ids;
    std::set<CharacteristicSet> defining_sets;
    for (const auto& t : templates) {
        if (t.defining.empty()) {
            throw DomainError("InvalidTemplate",
                              "template '" + t.species_id + "' has an empty defining set");
        }
        if (!ids.insert(t.species_id).second) {
            throw DomainError("DuplicateTemplate", "species '" + t.species_id + "' declared twice");
        }
        if (!defining_sets.insert(t.defining).second) {
            throw DomainError("DuplicateTemplate",
                              "template '" + t.species_id + "' repeats another defining set");
        }
    }
}

bool similar(const Object& x, const Object& y, const SpeciesTemplate& t) {
    return x.contains(t.defining) && y.contains(t.defining);
}

std::optional<std::string> classify(const Object& x, std::span<const SpeciesTemplate> templates) {
    std::optional<std::string> found;
    for (const auto& t : templates) {
        if (!x.contains(t.defining)) continue;
        if (found) {
            throw DomainError("AmbiguousClassification", "object '" + x.id() + "' matches both '" +
                                                             *found + "' and '" + t.species_id +
                                                             "'");
        }
        found = t.species_id;
    }
    return found;
}

Partition partition(std::span<const Object> objects, std::span<const SpeciesTemplate> templates) {
    Partition result;
    for (const auto& x : objects) {
        if (auto species = classify(x, templates)) {
            result.blocks[*species].insert(x.id());
        } else {
            result.unclassified.insert(x.id());
        }
    }
    return result;
}

const char* to_string(Law law) {
    switch (law) {
        case Law::reflexivity: return "reflexivity";
        case Law::symmetry: return "symmetry";
        case Law::transitivity: return "transitivity";
    }
    return "?";
}

EquivalenceReport verify_equivalence(std::span<const Object> objects, const SpeciesTemplate& t) {
    EquivalenceReport report;
    report.species_id = t.species_id;

    std::vector<const Object*> domain;
    for (const auto& x : objects) {
        if (x.contains(t.defining)) domain.push_back(&x);
    }
    report.domain_size = domain.size();

    const std::size_t n = domain.size();
    // Pairwise relation computed once; the law checks below only read it.
    std::vector<char> rel(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rel[i * n + j] = similar(*domain[i], *domain[j], t);
        }
    }
    auto r = [&](std::size_t i, std::size_t j) { return rel[i * n + j] != 0; };

    for (std::size_t i = 0; i < n; ++i) {
        if (!r(i, i)) report.counterexamples.push_back({Law::reflexivity, {domain[i]->id()}});
        for (std::size_t j = 0; j < n; ++j) {
            if (r(i, j) && !r(j, i)) {
                report.counterexamples.push_back(
                    {Law::symmetry, {domain[i]->id(), domain[j]->id()}});
            }
            for (std::size_t k = 0; k < n; ++k) {
                ++report.checked_triples;
                if (r(i, j) && r(j, k) && !r(i, k)) {
                    report.counterexamples.push_back(
                        {Law::transitivity, {domain[i]->id(), domain[j]->id(), domain[k]->id()}});
                }
            }
        }
    }
    return report;
}

}  // namespace cognum::knowledge
