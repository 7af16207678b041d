#ifndef RYDEX_ERRORS_HPP
#define RYDEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rydex {

// Invalid physical parameter or config value. CLI maps this to exit code 2.
class ParameterError : public std::runtime_error {
public:
    explicit ParameterError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (quadrature not converging, singular elimination,
// CFL violation, band coverage, ...). CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rydex

#endif
