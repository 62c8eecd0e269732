#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cognum/cli.hpp"

using cognum::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string scn(const std::string& name) { return std::string(COGNUM_SCENARIO_DIR) + "/" + name; }

std::string golden(const std::string& name) {
    std::ifstream in(std::string(COGNUM_GOLDEN_DIR) + "/" + name);
    EXPECT_TRUE(in) << name;
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(Cli, Goldens) {
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
        {{"scenario", scn("predator.scn")}, "predator.trace"},
        {{"scenario", scn("predator_receding.scn")}, "predator_receding.trace"},
        {{"count", "--vocab", "10", "--leap-threshold", "3"}, "count_v10_t3.log"},
        {{"peano", scn("chain7.scn")}, "peano_chain7.txt"},
        {{"infer", scn("animals.scn")}, "animals_infer.txt"},
        {{"classify", scn("animals.scn")}, "animals_classify.txt"},
        {{"markov", "report", scn("mindset.scn")}, "mindset_report.txt"},
    };
    for (const auto& [args, file] : cases) {
        const auto r = invoke(args);
        EXPECT_EQ(r.code, 0) << file << ": " << r.err;
        EXPECT_EQ(r.out, golden(file)) << file;
    }
}

TEST(Cli, InferOnPredatorScenario) {
    const auto r = invoke({"infer", scn("predator.scn")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("query\tR(prey)\ttrue\n"), std::string::npos);
    EXPECT_NE(r.out.find("query\tP(predator, prey)\ttrue\n"), std::string::npos);
    EXPECT_NE(r.out.find("query\tin(prey, tiger)\tunknown\n"), std::string::npos);
}

TEST(Cli, CountCurriculumFileAndSeededSchedule) {
    const auto from_file = invoke({"count", scn("curriculum.scn")});
    EXPECT_EQ(from_file.code, 0) << from_file.err;
    EXPECT_NE(from_file.out.find("leap\t"), std::string::npos);

    const auto a = invoke({"count", "--schedule", "seeded", "--seed", "9"});
    const auto b = invoke({"count", "--schedule", "seeded", "--seed", "9"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(invoke({"count", "--schedule", "random"}).code, 2);
    const auto bad = invoke({"count", "--vocab", "2", "--leap-threshold", "3"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(bad.err.rfind("error: InvalidThreshold: ", 0), 0u) << bad.err;
}

TEST(Cli, MarkovActions) {
    const auto st = invoke({"markov", "stationary", scn("two_state.scn")});
    ASSERT_EQ(st.code, 0) << st.err;
    EXPECT_NE(st.out.find("\t0.333333333333\n"), std::string::npos);
    EXPECT_NE(st.out.find("\t0.666666666667\n"), std::string::npos);

    const auto cls = invoke({"markov", "classes", scn("reducible.scn")});
    EXPECT_EQ(cls.code, 0);
    EXPECT_NE(cls.out.find("transient"), std::string::npos);
    EXPECT_NE(cls.out.find("quotient\t"), std::string::npos);

    const auto red = invoke({"markov", "stationary", scn("reducible.scn")});
    EXPECT_EQ(red.code, 1);
    EXPECT_EQ(red.err.rfind("error: NotIrreducible: ", 0), 0u) << red.err;

    const auto rep = invoke({"markov", "report", scn("reducible.scn")});
    EXPECT_EQ(rep.code, 0);
    EXPECT_NE(rep.out.find("mindset\tunavailable\tNotIrreducible"), std::string::npos);

    const auto sim1 = invoke({"markov", "simulate", scn("two_state.scn"), "--steps", "1000", "--seed", "4"});
    const auto sim2 = invoke({"markov", "simulate", scn("two_state.scn"), "--steps", "1000", "--seed", "4"});
    EXPECT_EQ(sim1.code, 0);
    EXPECT_EQ(sim1.out, sim2.out);

    EXPECT_EQ(invoke({"markov", "bogus", scn("two_state.scn")}).code, 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"classify"}).code, 2);

    const auto missing = invoke({"classify", "/nonexistent.scn"});
    EXPECT_EQ(missing.code, 2);
    EXPECT_EQ(missing.err.rfind("error: MalformedInput: ", 0), 0u) << missing.err;

    const auto unknown = invoke({"classify", temp_file("unknown.scn", R"({"bogus": 1})")});
    EXPECT_EQ(unknown.code, 2);

    const auto no_order = invoke({"peano", scn("animals.scn")});
    EXPECT_EQ(no_order.code, 2);

    const auto contradiction = invoke(
        {"infer", temp_file("contra.scn", R"scn({"objects": [{"id": "x", "characteristics": {"a": "1"}}],
            "facts": [{"concept": "A(x)", "truth": true}, {"concept": "B(x)", "truth": true}],
            "rules": [{"if": ["A(x)"], "then": "not B(x)"}]})scn")});
    EXPECT_EQ(contradiction.code, 1);
    EXPECT_EQ(contradiction.err.rfind("error: Contradiction: ", 0), 0u) << contradiction.err;

    const auto partial = invoke({"peano", scn("diamond.scn")});
    EXPECT_EQ(partial.code, 0);
    EXPECT_NE(partial.out.find("fail"), std::string::npos);

    const auto help = invoke({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("markov"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"infer", scn("animals.scn")}, {"markov", "report", scn("mindset.scn")}}) {
        EXPECT_EQ(invoke(args).out, invoke(args).out);
    }
}
