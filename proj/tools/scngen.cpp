// Writes a random, internally consistent scenario file.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cognum/scenario.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Generate a random .scn scenario", "scngen"};
    std::uint64_t seed = 0;
    std::string output;
    app.add_option("--seed", seed, "Generator seed");
    app.add_option("-o,--output", output, "Output file (default: stdout)");
    CLI11_PARSE(app, argc, argv);

    const std::string text = cognum::scenario::write(cognum::scenario::random_scenario(seed));
    if (output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output);
    if (!out) {
        std::cerr << "error: cannot write '" << output << "'\n";
        return 2;
    }
    out << text;
    return 0;
}
