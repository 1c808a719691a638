#pragma once

#include <stdexcept>
#include <string>

namespace rigidity {

/// Malformed user input: bad weights, out-of-range labels, unparseable polynomials.
class InvalidInput : public std::invalid_argument {
  public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Input is well formed but outside what an operation supports (m - n != 3, non-pentagon, ...).
class UnsupportedShape : public std::domain_error {
  public:
    explicit UnsupportedShape(const std::string& what) : std::domain_error(what) {}
};

/// The facet ordering does not put a vertex of the polytope first.
class NormalizationError : public std::runtime_error {
  public:
    explicit NormalizationError(const std::string& what) : std::runtime_error(what) {}
};

class OutOfRange : public std::out_of_range {
  public:
    explicit OutOfRange(const std::string& what) : std::out_of_range(what) {}
};

} // namespace rigidity
