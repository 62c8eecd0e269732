#include "cognum/trace.hpp"

#include <sstream>

namespace cognum {

void Trace::add(std::string module, std::string expression, std::string result) {
    lines_.push_back({lines_.size() + 1, std::move(module), std::move(expression), std::move(result)});
}

std::string Trace::render() const {
    std::ostringstream out;
    for (const auto& line : lines_) {
        out << line.step << '\t' << line.module << '\t' << line.expression << '\t' << line.result
            << '\n';
    }
    return out.str();
}

}  // namespace cognum
