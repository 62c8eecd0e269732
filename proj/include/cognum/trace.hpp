#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cognum {

/// One ordered record of a derivation.
struct TraceLine {
    std::size_t step = 0;
    std::string module;
    std::string expression;
    std::string result;

    bool operator==(const TraceLine&) const = default;
};

/// Ordered derivation record. Rendered as one tab-separated line per step:
/// `step<TAB>module<TAB>expression<TAB>result`.
class Trace {
public:
    void add(std::string module, std::string expression, std::string result);

    const std::vector<TraceLine>& lines() const noexcept { return lines_; }
    std::size_t size() const noexcept { return lines_.size(); }

    std::string render() const;

private:
    std::vector<TraceLine> lines_;
};

}  // namespace cognum
