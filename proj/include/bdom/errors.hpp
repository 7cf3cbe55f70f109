#pragma once

#include <stdexcept>
#include <string>

namespace bdom {

/// Malformed or out-of-range input (bad vertex ids, bad file lines, bad family specs).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The request is well-formed but outside what the implementation will attempt:
/// disconnected graphs for metric predicates, search caps, node budgets.
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A closed-form evaluator was called outside the parameter range it is known for.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace bdom
