#ifndef OTKIT_ERRORS_HPP
#define OTKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace otk {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A defining form is identically zero. Index is 1-based, as in reports.
struct ZeroFormError : Error {
    std::size_t index;
    explicit ZeroFormError(std::size_t i)
        : Error("zero form at position " + std::to_string(i)), index(i) {}
};

// Two defining forms cut out the same hyperplane. Indices are 1-based.
struct ProportionalFormsError : Error {
    std::size_t first, second;
    ProportionalFormsError(std::size_t i, std::size_t j)
        : Error("proportional forms at positions " + std::to_string(i) + " and " +
                std::to_string(j)),
          first(i), second(j) {}
};

struct InvalidParameterError : Error {
    explicit InvalidParameterError(const std::string& msg) : Error(msg) {}
};

struct NotACoverError : Error {
    explicit NotACoverError(const std::string& msg) : Error(msg) {}
};

struct OverlapTooLargeError : Error {
    std::size_t first, second;
    OverlapTooLargeError(std::size_t i, std::size_t j)
        : Error("supports of relations " + std::to_string(i + 1) + " and " +
                std::to_string(j + 1) + " share more than one index"),
          first(i), second(j) {}
};

struct BudgetExceededError : Error {
    explicit BudgetExceededError(const std::string& msg) : Error(msg) {}
};

// Raised when a saturation certificate could not be produced within the
// requested cofactor-degree bound. Inconclusive, not a refutation.
struct CertificateNotFoundError : Error {
    std::string relation_text;
    std::size_t degree_bound;
    CertificateNotFoundError(const std::string& rel, std::size_t bound)
        : Error("no certificate for " + rel + " within cofactor degree " +
                std::to_string(bound)),
          relation_text(rel), degree_bound(bound) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace otk

#endif
