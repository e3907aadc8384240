#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace arithgraph {

// Error raised for invalid domain input. `code()` is a stable machine-readable
// name (e.g. "LoopEdge", "GcdNotOne"); what() carries code and detail.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, std::string detail)
        : std::runtime_error(code + ": " + detail),
          code_(std::move(code)),
          detail_(std::move(detail)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string code_;
    std::string detail_;
};

[[noreturn]] inline void fail(std::string code, const std::string& detail) {
    throw DomainError(std::move(code), detail);
}

}  // namespace arithgraph
