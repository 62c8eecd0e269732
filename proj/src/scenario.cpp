#include "cognum/scenario.hpp"

#include <fstream>
#include <initializer_list>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cognum/error.hpp"

namespace cognum::scenario {

using json = nlohmann::json;

namespace {

const std::vector<std::string_view> kSections = {
    "objects",   "templates", "facts",   "rules",      "associations", "distances",
    "wiring",    "queries",   "order",   "curriculum", "matrix"};

void require_keys(const json& j, const std::string& where,
                  std::initializer_list<std::string_view> allowed,
                  std::initializer_list<std::string_view> required = {}) {
    if (!j.is_object()) throw FormatError(where + ": expected an object");
    for (const auto& [key, value] : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw FormatError(where + ": unknown key '" + key + "'");
        }
    }
    for (auto key : required) {
        if (!j.contains(key)) throw FormatError(where + ": missing key '" + std::string(key) + "'");
    }
}

const json& array_at(const json& j, const std::string& where) {
    if (!j.is_array()) throw FormatError(where + ": expected an array");
    return j;
}

std::string string_at(const json& j, std::string_view key, const std::string& where) {
    const json& v = j.at(std::string(key));
    if (!v.is_string()) throw FormatError(where + ": '" + std::string(key) + "' must be a string");
    return v.get<std::string>();
}

std::string as_string(const json& v, const std::string& where) {
    if (!v.is_string()) throw FormatError(where + ": expected a string");
    return v.get<std::string>();
}

std::uint64_t uint_at(const json& j, std::string_view key, const std::string& where) {
    const json& v = j.at(std::string(key));
    if (!v.is_number_unsigned()) {
        throw FormatError(where + ": '" + std::string(key) + "' must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::vector<std::string> strings_at(const json& v, const std::string& where) {
    std::vector<std::string> out;
    for (const auto& item : array_at(v, where)) out.push_back(as_string(item, where));
    return out;
}

knowledge::CharacteristicSet characteristics_at(const json& v, const std::string& where) {
    if (!v.is_object()) throw FormatError(where + ": expected a name/value object");
    knowledge::CharacteristicSet out;
    for (const auto& [name, value] : v.items()) {
        out.insert({name, as_string(value, where + "." + name)});
    }
    return out;
}

json characteristics_json(const knowledge::CharacteristicSet& cs) {
    json out = json::object();
    for (const auto& c : cs) out[c.name] = c.value;
    return out;
}

logic::Concept concept_at(const json& v, const std::string& where) {
    return logic::Concept::parse(as_string(v, where));
}

/// Ensures every object and species a concept mentions is declared.
class Resolver {
public:
    explicit Resolver(const Scenario& s) {
        for (const auto& o : s.objects) objects_.insert(o.id());
        for (const auto& t : s.templates) species_.insert(t.species_id);
    }

    void object(const std::string& id, const std::string& where) const {
        if (!objects_.contains(id)) throw FormatError(where + ": unknown object '" + id + "'");
    }

    void species(const std::string& id, const std::string& where) const {
        if (!species_.contains(id)) throw FormatError(where + ": unknown species '" + id + "'");
    }

    void check(const logic::Concept& c, const std::string& where) const {
        for (const auto& o : c.objects()) object(o, where);
        if (auto* m = std::get_if<logic::MembershipOf>(&c.payload())) species(m->species, where);
    }

private:
    std::set<std::string> objects_;
    std::set<std::string> species_;
};

std::string at(const std::string& section, std::size_t i) {
    return section + "[" + std::to_string(i) + "]";
}

Scenario parse_document(const json& doc) {
    if (!doc.is_object()) throw FormatError("scenario: top level must be an object");
    for (const auto& [key, value] : doc.items()) {
        if (std::find(kSections.begin(), kSections.end(), key) == kSections.end()) {
            throw FormatError("scenario: unknown section '" + key + "'");
        }
    }

    Scenario s;
    std::set<std::string> object_ids;

    if (doc.contains("objects")) {
        const auto& arr = array_at(doc["objects"], "objects");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string where = at("objects", i);
            require_keys(arr[i], where, {"id", "characteristics"}, {"id", "characteristics"});
            std::string id = string_at(arr[i], "id", where);
            if (!object_ids.insert(id).second) {
                throw FormatError(where + ": duplicate object id '" + id + "'");
            }
            try {
                s.objects.emplace_back(id, characteristics_at(arr[i]["characteristics"], where));
            } catch (const DomainError& e) {
                throw FormatError(where + ": " + e.what());
            }
        }
    }

    if (doc.contains("templates")) {
        const auto& arr = array_at(doc["templates"], "templates");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string where = at("templates", i);
            require_keys(arr[i], where, {"species", "defining", "profile"}, {"species", "defining"});
            knowledge::SpeciesTemplate t;
            t.species_id = string_at(arr[i], "species", where);
            t.defining = characteristics_at(arr[i]["defining"], where);
            if (arr[i].contains("profile")) {
                for (auto& p : strings_at(arr[i]["profile"], where)) t.profile.insert(std::move(p));
            }
            s.templates.push_back(std::move(t));
        }
    }

    const Resolver resolve(s);

    if (doc.contains("facts")) {
        const auto& arr = array_at(doc["facts"], "facts");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string where = at("facts", i);
            require_keys(arr[i], where, {"concept", "truth"}, {"concept", "truth"});
            if (!arr[i]["truth"].is_boolean()) throw FormatError(where + ": 'truth' must be boolean");
            logic::Fact f{concept_at(arr[i]["concept"], where), arr[i]["truth"].get<bool>()};
            resolve.check(f.statement, where);
            s.facts.push_back(std::move(f));
        }
    }

    if (doc.contains("rules")) {
        const auto& arr = array_at(doc["rules"], "rules");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string where = at("rules", i);
            require_keys(arr[i], where, {"if", "then"}, {"if", "then"});
            std::vector<logic::Concept> antecedents;
            for (const auto& a : array_at(arr[i]["if"], where)) {
                antecedents.push_back(concept_at(a, where));
                resolve.check(antecedents.back(), where);
            }
            logic::Concept consequent = concept_at(arr[i]["then"], where);
            resolve.check(consequent, where);
            try {
                s.rules.emplace_back(std::move(antecedents), std::move(consequent));
            } catch (const DomainError& e) {
                throw FormatError(where + ": " + e.what());
            }
        }
    }

    if (doc.contains("associations")) {
        const auto& arr = array_at(doc["associations"], "associations");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string where = at("associations", i);
            require_keys(arr[i], where, {"from", "to"}, {"from", "to"});
            auto from = concept_at(arr[i]["from"], where);
            auto to = concept_at(arr[i]["to"], where);
            resolve.check(from, where);
            resolve.check(to, where);
            s.associations.emplace_back(std::move(from), std::move(to));
        }
    }

    if (doc.contains("distances")) {
        const auto& arr = array_at(doc["distances"], "distances");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string where = at("distances", i);
            require_keys(arr[i], where, {"subject", "target", "tick", "numerator", "denominator"},
                         {"subject", "target", "tick", "numerator"});
            logic::DistanceObservation obs;
            obs.subject = string_at(arr[i], "subject", where);
            obs.target = string_at(arr[i], "target", where);
            resolve.object(obs.subject, where);
            resolve.object(obs.target, where);
            obs.tick = uint_at(arr[i], "tick", where);
            const std::uint64_t num = uint_at(arr[i], "numerator", where);
            const std::uint64_t den = arr[i].contains("denominator")
                                          ? uint_at(arr[i], "denominator", where)
                                          : 1;
            if (den == 0) throw FormatError(where + ": zero denominator");
            constexpr auto limit = static_cast<std::uint64_t>(INT64_MAX);
            if (num > limit || den > limit) throw FormatError(where + ": distance out of range");
            obs.distance = logic::Distance(static_cast<std::int64_t>(num),
                                           static_cast<std::int64_t>(den));
            s.distances.push_back(std::move(obs));
        }
    }

    if (doc.contains("wiring")) {
        const json& w = doc["wiring"];
        require_keys(w, "wiring",
                     {"predator", "prey", "species", "profile", "attack", "run", "approach",
                      "from_tick", "to_tick"},
                     {"predator", "prey", "species", "profile", "attack", "run", "from_tick",
                      "to_tick"});
        logic::ScenarioWiring wiring;
        wiring.predator = string_at(w, "predator", "wiring");
        wiring.prey = string_at(w, "prey", "wiring");
        wiring.predator_species = string_at(w, "species", "wiring");
        wiring.profile_predicate = string_at(w, "profile", "wiring");
        wiring.attack_predicate = string_at(w, "attack", "wiring");
        wiring.run_predicate = string_at(w, "run", "wiring");
        if (w.contains("approach")) wiring.approach_predicate = string_at(w, "approach", "wiring");
        wiring.from_tick = uint_at(w, "from_tick", "wiring");
        wiring.to_tick = uint_at(w, "to_tick", "wiring");
        resolve.object(wiring.predator, "wiring");
        resolve.object(wiring.prey, "wiring");
        resolve.species(wiring.predator_species, "wiring");
        s.wiring = std::move(wiring);
    }

    if (doc.contains("queries")) {
        const auto& arr = array_at(doc["queries"], "queries");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            s.queries.push_back(concept_at(arr[i], at("queries", i)));
            resolve.check(s.queries.back(), at("queries", i));
        }
    }

    if (doc.contains("order")) {
        const json& o = doc["order"];
        require_keys(o, "order", {"elements", "leq", "chain"});
        try {
            if (o.contains("chain")) {
                if (o.contains("elements") || o.contains("leq")) {
                    throw FormatError("order: 'chain' cannot be combined with 'elements'/'leq'");
                }
                s.order = order::OrderedSet::chain(strings_at(o["chain"], "order.chain"));
            } else {
                require_keys(o, "order", {"elements", "leq"}, {"elements", "leq"});
                std::set<order::Pair> leq;
                for (const auto& p : array_at(o["leq"], "order.leq")) {
                    auto pair = strings_at(p, "order.leq");
                    if (pair.size() != 2) throw FormatError("order.leq: pairs must have two ids");
                    leq.emplace(pair[0], pair[1]);
                }
                s.order = order::OrderedSet(strings_at(o["elements"], "order.elements"),
                                            std::move(leq));
            }
        } catch (const DomainError& e) {
            throw FormatError("order: " + std::string(e.what()));
        }
    }

    if (doc.contains("curriculum")) {
        const json& c = doc["curriculum"];
        require_keys(c, "curriculum", {"words", "objects"}, {"words"});
        auto words = strings_at(c["words"], "curriculum.words");
        const std::size_t objects =
            c.contains("objects") ? uint_at(c, "objects", "curriculum") : words.size();
        try {
            s.curriculum = counting::Curriculum(std::move(words), objects);
        } catch (const DomainError& e) {
            throw FormatError("curriculum: " + std::string(e.what()));
        }
    }

    if (doc.contains("matrix")) {
        const json& m = doc["matrix"];
        require_keys(m, "matrix", {"states", "rows"}, {"states", "rows"});
        MatrixSection section;
        section.states = strings_at(m["states"], "matrix.states");
        for (const auto& row : array_at(m["rows"], "matrix.rows")) {
            std::vector<double> values;
            for (const auto& v : array_at(row, "matrix.rows")) {
                if (!v.is_number()) throw FormatError("matrix.rows: entries must be numbers");
                values.push_back(v.get<double>());
            }
            section.rows.push_back(std::move(values));
        }
        s.matrix = std::move(section);
    }

    return s;
}

}  // namespace

Scenario parse(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed scenario: ") + e.what());
    }
    return parse_document(doc);
}

Scenario load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse(text.str());
}

std::string write(const Scenario& s) {
    json doc = json::object();
    if (!s.objects.empty()) {
        json arr = json::array();
        for (const auto& o : s.objects) {
            arr.push_back({{"id", o.id()}, {"characteristics", characteristics_json(o.characteristics())}});
        }
        doc["objects"] = std::move(arr);
    }
    if (!s.templates.empty()) {
        json arr = json::array();
        for (const auto& t : s.templates) {
            arr.push_back({{"species", t.species_id},
                           {"defining", characteristics_json(t.defining)},
                           {"profile", std::vector<std::string>(t.profile.begin(), t.profile.end())}});
        }
        doc["templates"] = std::move(arr);
    }
    if (!s.facts.empty()) {
        json arr = json::array();
        for (const auto& f : s.facts) arr.push_back({{"concept", f.statement.to_string()}, {"truth", f.truth}});
        doc["facts"] = std::move(arr);
    }
    if (!s.rules.empty()) {
        json arr = json::array();
        for (const auto& r : s.rules) {
            json ifs = json::array();
            for (const auto& a : r.antecedents()) ifs.push_back(a.to_string());
            arr.push_back({{"if", std::move(ifs)}, {"then", r.consequent().to_string()}});
        }
        doc["rules"] = std::move(arr);
    }
    if (!s.associations.empty()) {
        json arr = json::array();
        for (const auto& [from, to] : s.associations) {
            arr.push_back({{"from", from.to_string()}, {"to", to.to_string()}});
        }
        doc["associations"] = std::move(arr);
    }
    if (!s.distances.empty()) {
        json arr = json::array();
        for (const auto& d : s.distances) {
            arr.push_back({{"subject", d.subject},
                           {"target", d.target},
                           {"tick", d.tick},
                           {"numerator", static_cast<std::uint64_t>(d.distance.numerator())},
                           {"denominator", static_cast<std::uint64_t>(d.distance.denominator())}});
        }
        doc["distances"] = std::move(arr);
    }
    if (s.wiring) {
        const auto& w = *s.wiring;
        doc["wiring"] = {{"predator", w.predator},       {"prey", w.prey},
                         {"species", w.predator_species}, {"profile", w.profile_predicate},
                         {"attack", w.attack_predicate},  {"run", w.run_predicate},
                         {"approach", w.approach_predicate}, {"from_tick", w.from_tick},
                         {"to_tick", w.to_tick}};
    }
    if (!s.queries.empty()) {
        json arr = json::array();
        for (const auto& q : s.queries) arr.push_back(q.to_string());
        doc["queries"] = std::move(arr);
    }
    if (s.order) {
        json leq = json::array();
        for (const auto& [a, b] : s.order->pairs()) leq.push_back({a, b});
        doc["order"] = {{"elements", s.order->elements()}, {"leq", std::move(leq)}};
    }
    if (s.curriculum) {
        doc["curriculum"] = {{"words", s.curriculum->words()}, {"objects", s.curriculum->objects()}};
    }
    if (s.matrix) {
        doc["matrix"] = {{"states", s.matrix->states}, {"rows", s.matrix->rows}};
    }
    return doc.dump(2) + "\n";
}

Scenario random_scenario(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    const std::vector<std::string> names = {"legs", "fur", "stripes", "horns", "wings", "size"};
    const std::vector<std::string> values = {"a", "b", "c"};

    Scenario s;

    const std::size_t object_count = pick(2, 8);
    for (std::size_t i = 0; i < object_count; ++i) {
        knowledge::CharacteristicSet cs;
        for (const auto& n : names) {
            if (cs.empty() || pick(0, 1)) cs.insert({n, values[pick(0, values.size() - 1)]});
        }
        s.objects.emplace_back("o" + std::to_string(i), std::move(cs));
    }

    std::set<knowledge::CharacteristicSet> used;
    for (std::size_t i = 0, count = pick(1, 3); i < count; ++i) {
        knowledge::CharacteristicSet defining{{names[i], values[pick(0, values.size() - 1)]}};
        if (!used.insert(defining).second) continue;
        knowledge::SpeciesTemplate t{"s" + std::to_string(i), std::move(defining), {}};
        if (pick(0, 1)) t.profile.insert("p" + std::to_string(pick(0, 2)));
        s.templates.push_back(std::move(t));
    }

    auto random_object = [&] { return s.objects[pick(0, s.objects.size() - 1)].id(); };
    auto random_concept = [&]() -> logic::Concept {
        switch (pick(0, 3)) {
            case 0: return logic::Concept::characteristic(random_object(), names[pick(0, 5)]);
            case 1:
                return logic::Concept::membership(random_object(),
                                                  s.templates[pick(0, s.templates.size() - 1)].species_id);
            case 2: return logic::Concept::predicate("q" + std::to_string(pick(0, 3)), {random_object()});
            default:
                return logic::Concept::predicate("r" + std::to_string(pick(0, 3)),
                                                 {random_object(), random_object()});
        }
    };

    logic::FactStore consistent;
    for (std::size_t i = 0, count = pick(0, 6); i < count; ++i) {
        logic::Fact f{random_concept(), pick(0, 1) == 1};
        if (!consistent.lookup(f.statement)) {
            consistent.add(f);
            s.facts.push_back(std::move(f));
        }
    }
    for (std::size_t i = 0, count = pick(0, 4); i < count; ++i) {
        std::vector<logic::Concept> ante;
        for (std::size_t k = 0, n = pick(1, 3); k < n; ++k) {
            ante.push_back(pick(0, 3) == 0 ? random_concept().negated() : random_concept());
        }
        s.rules.emplace_back(std::move(ante), random_concept());
    }
    for (std::size_t i = 0, count = pick(0, 4); i < count; ++i) {
        s.associations.emplace_back(random_concept(), random_concept());
    }
    for (std::size_t i = 0, count = pick(0, 4); i < count; ++i) {
        s.distances.push_back({random_object(), random_object(), pick(0, 5),
                               logic::Distance(static_cast<std::int64_t>(pick(0, 40)),
                                               static_cast<std::int64_t>(pick(1, 7)))});
    }
    if (pick(0, 1)) {
        const auto& t = s.templates.front();
        s.wiring = logic::ScenarioWiring{random_object(), random_object(), t.species_id,
                                         "p0", "attack", "run", "approaching", 0, pick(1, 4)};
    }
    for (std::size_t i = 0, count = pick(0, 3); i < count; ++i) s.queries.push_back(random_concept());

    std::vector<std::string> chain;
    for (std::size_t i = 0, n = pick(1, 7); i < n; ++i) chain.push_back("e" + std::to_string(i));
    std::shuffle(chain.begin(), chain.end(), rng);
    s.order = order::OrderedSet::chain(std::move(chain));

    s.curriculum = counting::Curriculum::standard(pick(3, 12));

    MatrixSection m;
    const std::size_t n = pick(1, 5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        m.states.push_back("P" + std::to_string(i));
        std::vector<double> row(n);
        double sum = 0.0;
        for (auto& v : row) sum += (v = unit(rng));
        for (auto& v : row) v /= sum;
        m.rows.push_back(std::move(row));
    }
    s.matrix = std::move(m);
    return s;
}

logic::FactStore fact_store(const Scenario& s) { return logic::FactStore(s.facts); }

logic::AssociationGraph association_graph(const Scenario& s) {
    logic::AssociationGraph g;
    for (const auto& [from, to] : s.associations) g = logic::associate(std::move(g), from, to);
    return g;
}

logic::ScenarioBundle bundle(const Scenario& s) {
    if (!s.wiring) throw FormatError("scenario: the 'wiring' section is required");
    return {s.objects, s.templates, s.distances, *s.wiring, s.facts, s.rules};
}

}  // namespace cognum::scenario
