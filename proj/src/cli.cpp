#include "cognum/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cognum/counting.hpp"
#include "cognum/error.hpp"
#include "cognum/knowledge.hpp"
#include "cognum/logic.hpp"
#include "cognum/markov.hpp"
#include "cognum/order.hpp"
#include "cognum/scenario.hpp"

namespace cognum::cli {

namespace {

std::string fixed(double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(12) << v;
    return out.str();
}

std::string scientific(double v) {
    std::ostringstream out;
    out << std::scientific << std::setprecision(3) << v;
    return out.str();
}

void classify_cmd(const scenario::Scenario& s, std::ostream& out) {
    knowledge::validate_templates(s.templates);
    for (const auto& o : s.objects) {
        out << "object\t" << o.id() << '\t' << knowledge::classify(o, s.templates).value_or("-")
            << '\n';
    }
    for (const auto& t : s.templates) {
        const auto report = knowledge::verify_equivalence(s.objects, t);
        out << "equivalence\t" << t.species_id << "\tdomain=" << report.domain_size
            << "\ttriples=" << report.checked_triples << '\t'
            << (report.holds() ? "holds"
                               : "fails(" + std::to_string(report.counterexamples.size()) + ")")
            << '\n';
    }
}

void infer_cmd(const scenario::Scenario& s, std::ostream& out) {
    knowledge::validate_templates(s.templates);
    logic::FactStore facts;
    if (s.wiring) {
        facts = logic::scenario_facts(scenario::bundle(s));
    } else {
        facts = scenario::fact_store(s);
        for (const auto& o : s.objects) {
            if (auto species = knowledge::classify(o, s.templates)) {
                facts.add({logic::Concept::membership(o.id(), *species), true});
            }
        }
    }
    std::vector<logic::Rule> rules =
        logic::derive_rules(facts, scenario::association_graph(s), s.templates, s.wiring);
    rules.insert(rules.end(), s.rules.begin(), s.rules.end());
    for (const auto& r : rules) out << "rule\t" << r.to_string() << '\n';

    const logic::FactStore closure = logic::forward_chain(facts, rules);
    if (s.queries.empty()) {
        for (const auto& [c, truth] : closure.entries()) {
            out << "fact\t" << c.to_string() << '\t' << (truth ? "true" : "false") << '\n';
        }
    }
    for (const auto& q : s.queries) {
        out << "query\t" << q.to_string() << '\t' << logic::to_string(closure.verdict(q)) << '\n';
    }
}

void peano_cmd(const scenario::Scenario& s, std::ostream& out) {
    if (!s.order) throw FormatError("scenario: the 'order' section is required");
    const auto report = order::peano_verify(*s.order);
    for (const auto& a : report.axioms) {
        out << "axiom " << a.id << '\t' << (a.passed ? "pass" : "fail") << '\t' << a.detail << '\n';
    }
}

struct CountOptions {
    std::string file;
    std::size_t vocabulary = 10;
    std::size_t threshold = 3;
    std::string schedule = "deterministic";
    std::uint64_t seed = 0;
};

void count_cmd(const CountOptions& opt, std::ostream& out) {
    counting::Curriculum curriculum = counting::Curriculum::standard(opt.vocabulary);
    if (!opt.file.empty()) {
        auto s = scenario::load(opt.file);
        if (!s.curriculum) throw FormatError("scenario: the 'curriculum' section is required");
        curriculum = *s.curriculum;
    }
    counting::LearnerConfig config;
    config.leap_threshold = opt.threshold;
    config.schedule =
        opt.schedule == "seeded" ? counting::Schedule::seeded : counting::Schedule::deterministic;
    config.seed = opt.seed;

    counting::Learner learner(curriculum, config);
    learner.run_to_convergence();
    for (const auto& e : learner.association_log()) {
        out << e.step << '\t' << e.word << '\t' << e.set_size << '\t'
            << (e.verdict ? "true" : "false") << '\t' << e.knower_level << '\n';
    }
    out << "leap\t" << learner.knower_level() << '\n';
    for (std::size_t n = 1; n <= curriculum.vocabulary(); ++n) {
        out << "query\t" << n << '\t' << learner.query({n}).to_string() << '\n';
    }
}

struct MarkovOptions {
    std::string action;
    std::string file;
    std::size_t steps = 1'000'000;
    std::uint64_t seed = 0;
    std::size_t start = 0;
    double tolerance = 1e-12;
    double residual_tolerance = 1e-10;
};

std::string class_members(const markov::Chain& c, const std::vector<std::size_t>& members) {
    std::string out = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ", ";
        out += c.states()[members[i]];
    }
    return out + "}";
}

void markov_cmd(const MarkovOptions& opt, std::ostream& out) {
    const auto s = scenario::load(opt.file);
    if (!s.matrix) throw FormatError("scenario: the 'matrix' section is required");
    const markov::Chain chain = markov::validate_chain(s.matrix->states, s.matrix->rows, opt.tolerance);
    markov::Tolerances tol;
    tol.stochastic = opt.tolerance;
    tol.residual = opt.residual_tolerance;

    auto print_classes = [&](const markov::ClassStructure& cs) {
        for (std::size_t k = 0; k < cs.classes.size(); ++k) {
            out << "class\t" << k << '\t' << class_members(chain, cs.classes[k]) << '\t'
                << (cs.closed[k] ? "closed" : "open") << "\tperiod=" << cs.periods[k] << '\n';
        }
        const auto recurrence = markov::classify_recurrence(cs);
        for (std::size_t j = 0; j < chain.size(); ++j) {
            out << "state\t" << chain.states()[j] << '\t' << markov::to_string(recurrence[j])
                << '\n';
        }
        for (const auto& [a, b] : cs.quotient_edges) out << "quotient\t" << a << " -> " << b << '\n';
    };

    if (opt.action == "classes") {
        print_classes(markov::communicating_classes(chain));
    } else if (opt.action == "stationary") {
        const auto m = markov::stationary(chain, tol);
        for (std::size_t j = 0; j < chain.size(); ++j) {
            out << "pi\t" << chain.states()[j] << '\t'
                << fixed(m.distribution(static_cast<Eigen::Index>(j))) << '\n';
        }
        out << "residual\t" << scientific(m.residual) << '\n';
    } else if (opt.action == "report") {
        const auto r = markov::mindset_report(chain, tol);
        print_classes(r.structure);
        if (r.failure) {
            out << "mindset\tunavailable\t" << *r.failure << '\n';
        } else {
            for (std::size_t rank = 0; rank < r.ranking.size(); ++rank) {
                out << "rank\t" << rank + 1 << '\t' << chain.states()[r.ranking[rank].first] << '\t'
                    << fixed(r.ranking[rank].second) << '\n';
            }
        }
    } else {  // simulate
        const auto occupancy = markov::simulate(chain, opt.steps, opt.seed, opt.start);
        for (std::size_t j = 0; j < chain.size(); ++j) {
            out << "occupancy\t" << chain.states()[j] << '\t'
                << fixed(occupancy(static_cast<Eigen::Index>(j))) << '\n';
        }
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equivalence classes, naive inference, order, counting and association chains",
                 "cognum"};
    app.require_subcommand(1);

    std::string file;
    auto* classify = app.add_subcommand("classify", "Partition objects by species templates");
    classify->add_option("file", file, "Scenario file")->required();
    auto* infer = app.add_subcommand("infer", "Forward-chain facts and rules; answer queries");
    infer->add_option("file", file, "Scenario file")->required();
    auto* scen = app.add_subcommand("scenario", "Run the predator/prey derivation");
    scen->add_option("file", file, "Scenario file")->required();
    auto* peano = app.add_subcommand("peano", "Check the Peano axioms on an ordered set");
    peano->add_option("file", file, "Scenario file")->required();

    CountOptions count_opt;
    auto* count = app.add_subcommand("count", "Simulate number-word acquisition");
    count->add_option("file", count_opt.file, "Scenario file with a curriculum section");
    count->add_option("--vocab", count_opt.vocabulary, "Vocabulary size")->check(CLI::Range(1, 1000));
    count->add_option("--leap-threshold", count_opt.threshold, "Knower level that triggers the leap");
    count->add_option("--schedule", count_opt.schedule, "Proposal schedule")
        ->check(CLI::IsMember({"deterministic", "seeded"}));
    count->add_option("--seed", count_opt.seed, "Seed for the seeded schedule");

    MarkovOptions markov_opt;
    auto* mk = app.add_subcommand("markov", "Association chain analysis");
    mk->add_option("action", markov_opt.action, "classes | stationary | report | simulate")
        ->required()
        ->check(CLI::IsMember({"classes", "stationary", "report", "simulate"}));
    mk->add_option("file", markov_opt.file, "Scenario file")->required();
    mk->add_option("--steps", markov_opt.steps, "Simulation length");
    mk->add_option("--seed", markov_opt.seed, "Simulation seed");
    mk->add_option("--start", markov_opt.start, "Initial state index");
    mk->add_option("--tolerance", markov_opt.tolerance, "Row-sum tolerance");
    mk->add_option("--residual-tolerance", markov_opt.residual_tolerance,
                   "Accepted max |pi P - pi|");

    std::vector<std::string> argv_storage{"cognum"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: Usage: " << e.what() << '\n';
        return kMalformedInput;
    }

    try {
        if (*classify) {
            classify_cmd(scenario::load(file), out);
        } else if (*infer) {
            infer_cmd(scenario::load(file), out);
        } else if (*scen) {
            out << logic::run_scenario(scenario::bundle(scenario::load(file))).trace.render();
        } else if (*peano) {
            peano_cmd(scenario::load(file), out);
        } else if (*count) {
            count_cmd(count_opt, out);
        } else if (*mk) {
            markov_cmd(markov_opt, out);
        }
    } catch (const FormatError& e) {
        err << "error: MalformedInput: " << e.what() << '\n';
        return kMalformedInput;
    } catch (const DomainError& e) {
        err << "error: " << e.name() << ": " << e.what() << '\n';
        return kDomainError;
    }
    return kOk;
}

}  // namespace cognum::cli
