#pragma once

#include <stdexcept>
#include <string>

namespace dgl {

// Violation of a theorem hypothesis (wrong parameter sign, radius outside the
// admissible range, ...). The CLI maps this to exit code 3.
struct hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unparseable or inconsistent run configuration. CLI exit code 2.
struct config_error : std::runtime_error {
    config_error(const std::string& msg, int line_no = 0)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
    int line;
};

} // namespace dgl
