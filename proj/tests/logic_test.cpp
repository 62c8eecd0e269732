#include <gtest/gtest.h>

#include <functional>

#include "cognum/error.hpp"
#include "cognum/logic.hpp"
#include "cognum/scenario.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace cognum;
using namespace cognum::logic;
using cognum::testkit::Rng;

namespace {

std::string error_name(const std::function<void()>& f) {
    try {
        f();
    } catch (const DomainError& e) {
        return e.name();
    }
    return "";
}

Concept C(std::string_view text) { return Concept::parse(text); }

}  // namespace

TEST(Concept, ParseAndPrintRoundTrip) {
    for (const char* text : {"has(x, legs)", "in(x, tiger)", "P(x)", "attack(x, y)", "not P(x)",
                             "not in(polly, tiger)"}) {
        EXPECT_EQ(C(text).to_string(), text);
        EXPECT_EQ(C(C(text).to_string()), C(text));
    }
    EXPECT_EQ(C("!P(x)"), C("P(x)").negated());
    EXPECT_EQ(C("not P(x)").positive(), C("P(x)"));
    EXPECT_EQ(C("attack(x, y)").objects(), (std::vector<std::string>{"x", "y"}));
}

TEST(Concept, Errors) {
    EXPECT_THROW(C("P("), FormatError);
    EXPECT_THROW(C("P(x y)"), FormatError);
    EXPECT_THROW(C(""), FormatError);
    EXPECT_THROW(C("P(a, b, c)"), FormatError);
    EXPECT_EQ(error_name([] { Concept::predicate("P", {}); }), "InvalidConcept");
    EXPECT_EQ(error_name([] { Concept::predicate("P", {"a", "b", "c"}); }), "InvalidConcept");
}

TEST(Association, SetSemanticsAndOddEdges) {
    AssociationGraph g;
    g = associate(g, C("P(x)"), C("Q(x)"));
    g = associate(g, C("P(x)"), C("Q(x)"));
    EXPECT_EQ(g.edges.size(), 1u);

    g = associate(g, C("not A(x)"), C("A(x)"));
    g = associate(g, C("has(x, stripes)"), C("dangerous(y)"));
    EXPECT_EQ(associations_of(g, C("not A(x)")), std::set<Concept>{C("A(x)")});
    EXPECT_EQ(associations_of(g, C("has(x, stripes)")), std::set<Concept>{C("dangerous(y)")});
    EXPECT_TRUE(associations_of(g, C("A(x)")).empty());
    EXPECT_TRUE(associations_of(g, C("Z(q)")).empty());
}

TEST(Association, MatchesAdjacencyOracle) {
    Rng rng(3);
    std::vector<Concept> pool;
    for (int i = 0; i < 8; ++i) pool.push_back(Concept::predicate("p" + std::to_string(i), {"x"}));
    for (int round = 0; round < 50; ++round) {
        AssociationGraph g;
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t k = 0, n = testkit::uniform(rng, 0, 20); k < n; ++k) {
            const auto a = testkit::uniform(rng, 0, 7), b = testkit::uniform(rng, 0, 7);
            g = associate(g, pool[a], pool[b]);
            edges.emplace_back(a, b);
        }
        for (std::size_t a = 0; a < pool.size(); ++a) {
            std::set<Concept> expected;
            for (auto [x, y] : edges)
                if (x == a) expected.insert(pool[y]);
            EXPECT_EQ(associations_of(g, pool[a]), expected);
        }
    }
}

TEST(Verdict, KleeneConnectives) {
    using V = Verdict;
    const std::vector<V> tu{V::is_true, V::unknown}, tf{V::is_true, V::is_false},
        fu{V::is_false, V::unknown}, tt{V::is_true, V::is_true};
    EXPECT_EQ(all_of(tu), V::unknown);
    EXPECT_EQ(all_of(tf), V::is_false);
    EXPECT_EQ(all_of(tt), V::is_true);
    EXPECT_EQ(any_of(tu), V::is_true);
    EXPECT_EQ(any_of(fu), V::unknown);
    EXPECT_STREQ(to_string(V::unknown), "unknown");
}

TEST(FactStore, PolarityAndContradiction) {
    FactStore s;
    EXPECT_TRUE(s.add({C("P(x)"), true}));
    EXPECT_FALSE(s.add({C("P(x)"), true}));
    EXPECT_FALSE(s.add({C("not P(x)"), false}));
    EXPECT_EQ(s.verdict(C("not P(x)")), Verdict::is_false);
    EXPECT_EQ(error_name([&] { s.add({C("P(x)"), false}); }), "Contradiction");
    EXPECT_EQ(s.verdict(C("Q(x)")), Verdict::unknown);
}

TEST(Rule, RequiresAntecedents) {
    EXPECT_EQ(error_name([] { Rule({}, C("P(x)")); }), "InvalidRule");
    const Rule r({C("B(x)"), C("A(x)"), C("A(x)")}, C("Q(x)"));
    EXPECT_EQ(r.to_string(), "A(x) & B(x) -> Q(x)");
}

TEST(DeriveRules, ProfilesBecomeMembershipRules) {
    const std::vector<knowledge::SpeciesTemplate> ts{
        {"tiger", {{"stripes", "yes"}}, {"dangerous"}},
        {"dog", {{"fur", "brown"}}, {"dangerous"}},
        {"rock", {{"colour", "grey"}}, {}}};
    FactStore facts;
    facts.add({C("in(x, tiger)"), true});
    const auto rules = derive_rules(facts, {}, ts);
    EXPECT_EQ(rules.size(), 2u);
    EXPECT_NE(std::find(rules.begin(), rules.end(), Rule({C("in(x, tiger)")}, C("dangerous(x)"))), rules.end());
    EXPECT_NE(std::find(rules.begin(), rules.end(), Rule({C("in(x, dog)")}, C("dangerous(x)"))), rules.end());

    // A non-member may still satisfy the shared predicate without contradiction.
    facts.add({C("in(x, dog)"), false});
    facts.add({C("dangerous(x)"), true});
    EXPECT_NO_THROW(forward_chain(facts, rules));
}

TEST(Infer, ImplicationAndOpenWorld) {
    FactStore facts;
    facts.add({C("in(x, tiger)"), true});
    const std::vector<Rule> rules{Rule({C("in(x, tiger)")}, C("dangerous(x)"))};
    EXPECT_EQ(infer(C("dangerous(x)"), facts, rules), Verdict::is_true);
    EXPECT_EQ(infer(C("dangerous(y)"), facts, rules), Verdict::unknown);
    EXPECT_EQ(infer(C("not dangerous(x)"), facts, rules), Verdict::is_false);
}

TEST(Infer, NegatedConsequentAndContradiction) {
    FactStore facts;
    facts.add({C("A(x)"), true});
    const std::vector<Rule> rules{Rule({C("A(x)")}, C("not B(x)"))};
    EXPECT_EQ(infer(C("B(x)"), facts, rules), Verdict::is_false);
    facts.add({C("B(x)"), true});
    EXPECT_EQ(error_name([&] { forward_chain(facts, rules); }), "Contradiction");
}

TEST(Infer, MatchesNaiveFixpointOnRandomSystems) {
    Rng rng(99);
    std::vector<Concept> atoms;
    for (int i = 0; i < 8; ++i) atoms.push_back(Concept::predicate("p" + std::to_string(i), {"a"}));
    auto literal = [&] {
        const Concept& c = atoms[testkit::uniform(rng, 0, atoms.size() - 1)];
        return testkit::uniform(rng, 0, 3) == 0 ? c.negated() : c;
    };
    int contradictions = 0;
    for (int round = 0; round < 500; ++round) {
        std::vector<Fact> facts;
        FactStore seed;
        for (std::size_t k = 0, n = testkit::uniform(rng, 1, 3); k < n; ++k) {
            Fact f{literal(), testkit::uniform(rng, 0, 1) == 1};
            if (seed.lookup(f.statement)) continue;
            seed.add(f);
            facts.push_back(f);
        }
        std::vector<Rule> rules;
        for (int k = 0; k < 10; ++k) {
            std::vector<Concept> ante;
            for (std::size_t j = 0, n = testkit::uniform(rng, 1, 2); j < n; ++j) ante.push_back(literal());
            rules.emplace_back(ante, literal());
        }

        const auto oracle = testkit::naive_closure(facts, rules);
        if (!oracle) {
            ++contradictions;
            EXPECT_EQ(error_name([&] { forward_chain(seed, rules); }), "Contradiction");
            continue;
        }
        const FactStore closure = forward_chain(seed, rules);
        EXPECT_EQ(closure.entries(), *oracle);
        for (const auto& a : atoms) {
            auto it = oracle->find(a);
            const Verdict expected = it == oracle->end() ? Verdict::unknown
                                     : it->second        ? Verdict::is_true
                                                         : Verdict::is_false;
            EXPECT_EQ(infer(a, seed, rules), expected);
        }
    }
    EXPECT_GT(contradictions, 0);  // the generator does exercise the error path
}

TEST(Distances, ApproachingIsNonStrict) {
    auto obs = [](std::int64_t d0, std::int64_t d1) {
        return std::vector<DistanceObservation>{{"x", "y", 0, Distance(d0)}, {"x", "y", 1, Distance(d1)}};
    };
    EXPECT_TRUE(approaching(obs(10, 6), "x", "y", 0, 1));
    EXPECT_TRUE(approaching(obs(5, 5), "x", "y", 0, 1));
    EXPECT_FALSE(approaching(obs(3, 7), "x", "y", 0, 1));
    EXPECT_TRUE(approaching(obs(10, 6), "y", "x", 0, 1));
}

TEST(Distances, ExactRationals) {
    std::vector<DistanceObservation> obs{{"x", "y", 0, Distance(1, 3)}, {"x", "y", 1, Distance(333333, 1000000)}};
    EXPECT_TRUE(approaching(obs, "x", "y", 0, 1));
    EXPECT_EQ(format_distance(Distance(6, 4)), "3/2");
    EXPECT_EQ(format_distance(Distance(6)), "6");
}

TEST(Distances, Errors) {
    std::vector<DistanceObservation> obs{{"x", "y", 0, Distance(4)}};
    EXPECT_EQ(error_name([&] { approaching(obs, "x", "y", 0, 1); }), "MissingObservation");
    EXPECT_EQ(error_name([&] { approaching(obs, "x", "y", 1, 0); }), "InvalidTickOrder");
    DistanceLog log;
    EXPECT_EQ(error_name([&] { log.add({"x", "y", 0, Distance(-1)}); }), "InvalidDistance");
    log.add({"x", "y", 0, Distance(4)});
    EXPECT_NO_THROW(log.add({"y", "x", 0, Distance(4)}));
    EXPECT_EQ(error_name([&] { log.add({"y", "x", 0, Distance(5)}); }), "AsymmetricDistance");
}

namespace {

ScenarioBundle predator_bundle() {
    return scenario::bundle(scenario::load(std::string(COGNUM_SCENARIO_DIR) + "/predator.scn"));
}

}  // namespace

TEST(Scenario, PredatorDerivation) {
    const auto result = run_scenario(predator_bundle());
    ASSERT_EQ(result.trace.size(), 4u);
    EXPECT_EQ(result.reaction, Verdict::is_true);
    EXPECT_EQ(result.trace.lines()[0].expression, "in(predator, tiger) -> P(predator)");
    EXPECT_EQ(result.trace.lines()[3].result, "R(prey) = true");
}

TEST(Scenario, RecedingPreyIsUnknown) {
    auto b = predator_bundle();
    b.distances = {{"predator", "prey", 0, Distance(6)}, {"predator", "prey", 1, Distance(10)}};
    const auto result = run_scenario(b);
    EXPECT_EQ(result.reaction, Verdict::unknown);
    EXPECT_EQ(result.trace.lines()[1].result, "approaching(predator, prey) = false");
}

TEST(Scenario, UnidentifiedPredatorIsUnknown) {
    auto b = predator_bundle();
    b.objects[0] = knowledge::Object("predator", {{"stripes", "no"}, {"legs", "4"}});
    const auto result = run_scenario(b);
    EXPECT_EQ(result.reaction, Verdict::unknown);

    // The fixpoint oracle agrees that nothing derives R(prey).
    const FactStore facts = scenario_facts(b);
    const auto rules = derive_rules(facts, {}, b.templates, b.wiring);
    std::vector<Fact> seed;
    for (const auto& [c, t] : facts.entries()) seed.push_back({c, t});
    const auto oracle = testkit::naive_closure(seed, rules);
    ASSERT_TRUE(oracle);
    EXPECT_EQ(oracle->count(C("R(prey)")), 0u);
}

TEST(Scenario, WiringIsValidated) {
    auto b = predator_bundle();
    b.wiring.prey = "nobody";
    EXPECT_EQ(error_name([&] { run_scenario(b); }), "InvalidWiring");
    b = predator_bundle();
    b.wiring.profile_predicate = "harmless";
    EXPECT_EQ(error_name([&] { run_scenario(b); }), "InvalidWiring");
}
