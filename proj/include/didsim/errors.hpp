#ifndef DIDSIM_ERRORS_HPP
#define DIDSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace didsim {

// Invalid scenario/topology/parameter-set input. CLI maps this to exit code 2.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (non-convergence, invalid math-domain input at runtime).
// CLI maps this to exit code 3.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace didsim

#endif
