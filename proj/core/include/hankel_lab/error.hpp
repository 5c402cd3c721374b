#ifndef HANKEL_LAB_ERROR_HPP
#define HANKEL_LAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hankel_lab {

/// Argument outside the domain of a weight model or operation (|z| >= 1 on
/// the disk, a non-positive radius, an uncovered lattice point, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A numerical procedure did not meet its contract (non-convergence, loss of
/// positive semi-definiteness beyond tolerance, overflow).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed configuration or input file.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace hankel_lab

#endif
