// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cognum/counting.hpp"
#include "cognum/error.hpp"
#include "cognum/knowledge.hpp"
#include "cognum/logic.hpp"
#include "cognum/markov.hpp"
#include "cognum/order.hpp"
#include "cognum/scenario.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace cognum;
using cognum::testkit::Rng;

namespace {

/// Collects the first few failure messages for one criterion.
struct Check {
    std::vector<std::string> failures;
    std::string summary;

    void expect(bool ok, const std::string& message) {
        if (!ok && failures.size() < 5) failures.push_back(message);
        if (!ok) ++failed;
    }
    std::size_t failed = 0;
};

struct Criterion {
    std::string name;
    double time_limit_s;  // 0 for no limit
    std::function<void(Check&)> body;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string golden(const std::string& name) { return read_file(std::string(COGNUM_GOLDEN_DIR) + "/" + name); }

std::vector<std::vector<double>> mat(const markov::Matrix& m) {
    std::vector<std::vector<double>> out(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(m(i, j));
    return out;
}

// ---------------------------------------------------------------------------

void equivalence_laws(Check& c) {
    Rng rng(1001);
    std::size_t triples = 0;
    for (int set = 0; set < 200; ++set) {
        const std::size_t names = testkit::uniform(rng, 1, 6);
        const auto objects = testkit::random_objects(rng, testkit::uniform(rng, 1, 30), names, 2);
        const auto t = testkit::random_template(rng, "t", names, 2, names);
        const auto report = knowledge::verify_equivalence(objects, t);
        triples += report.checked_triples;
        c.expect(report.holds(), "set " + std::to_string(set) + ": " +
                                     std::to_string(report.counterexamples.size()) + " counterexamples");
        c.expect(report.checked_triples == report.domain_size * report.domain_size * report.domain_size,
                 "set " + std::to_string(set) + ": triple count is not exhaustive");
    }
    c.summary = "200 sets, " + std::to_string(triples) + " triples";
}

void scenario_reproduction(Check& c) {
    const std::string dir = COGNUM_SCENARIO_DIR;
    const auto closing = logic::run_scenario(scenario::bundle(scenario::load(dir + "/predator.scn")));
    c.expect(closing.trace.render() == golden("predator.trace"), "predator.scn trace differs from golden");
    c.expect(closing.reaction == logic::Verdict::is_true, "R(prey) is not true");
    c.expect(closing.trace.size() == 4, "trace does not have 4 steps");

    const auto receding =
        logic::run_scenario(scenario::bundle(scenario::load(dir + "/predator_receding.scn")));
    c.expect(receding.trace.render() == golden("predator_receding.trace"),
             "predator_receding.scn trace differs from golden");
    c.expect(receding.reaction == logic::Verdict::unknown, "receding R(prey) is not unknown");
    c.summary = "R(prey) = " + std::string(logic::to_string(closing.reaction)) + " / receding " +
                logic::to_string(receding.reaction);
}

void successor_lemmas(Check& c) {
    Rng rng(2002);
    std::size_t elements = 0;
    for (int k = 0; k < 1000; ++k) {
        const std::size_t n = testkit::uniform(rng, 1, 50);
        const auto rc = testkit::random_total_order(rng, n);
        const auto l1 = order::verify_lemma1(rc.set);
        const auto l2 = order::verify_lemma2(rc.set);
        elements += n;
        c.expect(l1.holds && l1.checked == n, "lemma 1 fails on order " + std::to_string(k));
        c.expect(l2.holds && l2.checked == n * (n - 1) / 2, "lemma 2 fails on order " + std::to_string(k));
    }
    c.summary = "1000 orders, " + std::to_string(elements) + " elements";
}

void peano_theorem(Check& c) {
    Rng rng(3003);
    for (int k = 0; k < 100; ++k) {
        const auto rc = testkit::random_total_order(rng, testkit::uniform(rng, 1, 40));
        const auto report = order::peano_verify(rc.set);
        c.expect(report.all_pass(), "well order " + std::to_string(k) + " fails an axiom");
        c.expect(report.exempt_maximum.has_value(), "well order " + std::to_string(k) + " has no exempt maximum");
    }
    std::size_t well = 0;
    for (int k = 0; k < 500; ++k) {
        const order::OrderedSet s = testkit::random_relation(rng, 6);
        const bool oracle = testkit::order_facts(testkit::relation_matrix(s)).well_order();
        well += oracle;
        c.expect(order::peano_verify(s).all_pass() == oracle,
                 "biconditional fails on relation " + std::to_string(k));
    }
    c.summary = "100 well orders; biconditional on 500 relations (" + std::to_string(well) + " well)";
}

void addition(Check& c) {
    std::vector<std::string> chain;
    for (int i = 1; i <= 20; ++i) chain.push_back("n" + std::to_string(i));
    const auto s = order::OrderedSet::chain(chain);
    auto add = [&](std::size_t a, std::size_t b) { return order::add(s, {a}, {b}).value; };
    std::size_t pairs = 0, triples = 0;
    for (std::size_t n = 1; n <= 20; ++n) {
        for (std::size_t m = 1; n + m <= 20; ++m) {
            ++pairs;
            c.expect(add(n, m) == n + m, std::to_string(n) + "+" + std::to_string(m));
            c.expect(add(n, m) == add(m, n), "commutativity at " + std::to_string(n) + "," + std::to_string(m));
            for (std::size_t k = 1; n + m + k <= 20; ++k) {
                ++triples;
                c.expect(add(add(n, m), k) == add(n, add(m, k)), "associativity at " + std::to_string(n) +
                                                                     "," + std::to_string(m) + "," +
                                                                     std::to_string(k));
            }
        }
    }
    c.summary = std::to_string(pairs) + " pairs, " + std::to_string(triples) + " triples";
}

void counting_acquisition(Check& c) {
    counting::Learner l(counting::Curriculum::standard(10));
    std::size_t level = 0;
    while (!l.leaped()) {
        for (std::size_t n = level + 1; n <= 10; ++n) {
            c.expect(l.query({n}) == counting::Answer{std::nullopt, level},
                     "pre-leap query " + std::to_string(n) + " at level " + std::to_string(level));
        }
        for (std::size_t n = 1; n <= level; ++n) {
            c.expect(l.query({n}).word == l.curriculum().words()[n - 1], "known word " + std::to_string(n));
        }
        const auto event = l.step();
        c.expect(event.knower_level == level + 1, "level did not advance by one");
        level = event.knower_level;
        c.expect(event.leaped == (level == 3), "leap fired at level " + std::to_string(level));
    }
    c.expect(level == 3, "leap at level " + std::to_string(level));

    std::ostringstream log;
    for (const auto& e : l.association_log()) {
        log << e.step << '\t' << e.word << '\t' << e.set_size << '\t' << (e.verdict ? "true" : "false")
            << '\t' << e.knower_level << '\n';
    }
    log << "leap\t" << l.knower_level() << '\n';
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto a = l.query({n});
        c.expect(a.word == l.curriculum().words()[n - 1], "post-leap size " + std::to_string(n));
        log << "query\t" << n << '\t' << a.to_string() << '\n';
    }
    c.expect(log.str() == golden("count_v10_t3.log"), "deterministic trace differs from golden");

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        counting::LearnerConfig cfg;
        cfg.schedule = counting::Schedule::seeded;
        cfg.seed = seed;
        counting::Learner r(counting::Curriculum::standard(10), cfg);
        r.run_to_convergence();
        std::size_t prev = 0;
        bool monotone = true;
        for (const auto& e : r.association_log()) {
            monotone = monotone && (e.knower_level == prev || e.knower_level == prev + 1);
            prev = e.knower_level;
        }
        c.expect(r.leaped() && r.knower_level() == 3 && monotone, "seeded run " + std::to_string(seed));
        c.expect(r.association_log().size() <= counting::Learner::proposal_bound(r.curriculum(), 3),
                 "seeded run " + std::to_string(seed) + " exceeds the proposal bound");
    }
    c.summary = "levels 1,2,3; golden trace; 100 seeded runs";
}

void chapman_kolmogorov(Check& c) {
    Rng rng(4004);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = testkit::uniform(rng, 1, 10);
        const auto chain = markov::validate_chain(testkit::state_names(n),
                                                  testkit::random_stochastic(rng, n, 1, n));
        std::vector<markov::Matrix> powers;
        for (std::size_t p = 0; p <= 12; ++p) powers.push_back(markov::n_step(chain, p));
        for (std::size_t a = 0; a <= 6; ++a)
            for (std::size_t b = 0; b <= 6; ++b)
                worst = std::max(worst, (powers[a + b] - powers[a] * powers[b]).cwiseAbs().maxCoeff());
    }
    std::ostringstream s;
    s << "50 chains, max deviation " << std::scientific << std::setprecision(2) << worst;
    c.summary = s.str();
    c.expect(worst <= 1e-12, c.summary);
}

void stationary_distribution(Check& c) {
    const auto two = markov::validate_chain({"a", "b"}, {{0.5, 0.5}, {0.25, 0.75}});
    const auto m = markov::stationary(two);
    const auto power = markov::power_iteration(two, 1e-14, 1'000'000);
    for (Eigen::Index j = 0; j < 2; ++j) {
        const double expected = j == 0 ? 1.0 / 3.0 : 2.0 / 3.0;
        c.expect(std::abs(m.distribution(j) - expected) <= 1e-10, "linear solve component " + std::to_string(j));
        c.expect(std::abs(power(j) - expected) <= 1e-10, "power iteration component " + std::to_string(j));
    }

    Rng rng(5005);
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = testkit::uniform(rng, 2, 10);
        const auto chain = markov::validate_chain(testkit::state_names(n), testkit::random_doubly_stochastic(rng, n));
        const auto d = markov::stationary(chain);
        double dev = 0.0;
        for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(n); ++j)
            dev = std::max(dev, std::abs(d.distribution(j) - 1.0 / static_cast<double>(n)));
        c.expect(dev <= 1e-10, "doubly stochastic chain " + std::to_string(k) + " not uniform");
    }

    const auto mindset = scenario::load(std::string(COGNUM_SCENARIO_DIR) + "/mindset.scn");
    const auto four = markov::validate_chain(mindset.matrix->states, mindset.matrix->rows);
    double worst = 0.0;
    for (const auto* chain : {&two, &four}) {
        const auto pi = markov::stationary(*chain).distribution;
        const auto occ = markov::simulate(*chain, 1'000'000, 6006);
        worst = std::max(worst, (occ - pi).cwiseAbs().maxCoeff());
    }
    c.expect(worst <= 5e-3, "simulation deviates by " + std::to_string(worst));
    std::ostringstream s;
    s << "2-state, 50 doubly stochastic, simulation deviation " << std::setprecision(2) << worst;
    c.summary = s.str();
}

void class_structure(Check& c) {
    Rng rng(7007);
    std::size_t reducible = 0;
    for (int k = 0; k < 100; ++k) {
        const auto rows = testkit::random_stochastic(rng, 10, 1, 3);
        const auto cs = markov::communicating_classes(markov::validate_chain(testkit::state_names(10), rows));
        const auto reach = testkit::power_reachability(rows);
        const auto expected = testkit::oracle_classes(reach);
        reducible += expected.size() > 1;
        c.expect(cs.classes == expected, "classes differ on graph " + std::to_string(k));
        if (cs.classes != expected) continue;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            c.expect(cs.closed[i] == testkit::oracle_closed(reach, expected[i]),
                     "closedness differs on graph " + std::to_string(k));
        }
    }
    std::size_t transient = 0;
    for (int k = 0; k < 20; ++k) {
        const std::size_t n = testkit::uniform(rng, 3, 8);
        const auto rows = testkit::random_stochastic(rng, n, 1, 2);
        const auto rec = markov::classify_recurrence(
            markov::communicating_classes(markov::validate_chain(testkit::state_names(n), rows)));
        for (std::size_t i = 0; i < n; ++i) {
            const bool mc = testkit::monte_carlo_recurrent(rows, i, 100'000, 100 * k + i);
            transient += rec[i] == markov::Recurrence::transient;
            c.expect((rec[i] == markov::Recurrence::recurrent) == mc,
                     "chain " + std::to_string(k) + " state " + std::to_string(i) + " disagrees with Monte Carlo");
        }
    }
    c.summary = "100 graphs (" + std::to_string(reducible) + " reducible); 20 chains (" +
                std::to_string(transient) + " transient states)";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"equivalence-laws", 5.0, equivalence_laws},
        {"predator-scenario", 0.0, scenario_reproduction},
        {"successor-lemmas", 10.0, successor_lemmas},
        {"peano-theorem", 0.0, peano_theorem},
        {"addition", 0.0, addition},
        {"counting-acquisition", 0.0, counting_acquisition},
        {"chapman-kolmogorov", 0.0, chapman_kolmogorov},
        {"stationary-distribution", 30.0, stationary_distribution},
        {"class-structure", 0.0, class_structure},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.body(check);
        } catch (const DomainError& e) {
            check.expect(false, "unexpected " + e.name() + ": " + e.what());
        } catch (const std::exception& e) {
            check.expect(false, std::string("unexpected exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.time_limit_s > 0 && seconds >= criterion.time_limit_s) {
            check.expect(false, "took " + std::to_string(seconds) + " s, limit " +
                                    std::to_string(criterion.time_limit_s) + " s");
        }
        const bool ok = check.failed == 0;
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << std::left << std::setw(24) << criterion.name
                  << std::right << std::fixed << std::setprecision(2) << std::setw(7) << seconds << " s  "
                  << check.summary << '\n';
        for (const auto& f : check.failures) std::cout << "      " << f << '\n';
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
