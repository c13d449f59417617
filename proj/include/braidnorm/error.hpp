#pragma once

#include <stdexcept>
#include <string>

namespace braidnorm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed braid notation, polynomial file, or class vector.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Input outside an operation's domain (bad component id, negative class entry, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Exact division left a remainder.
class NotDivisible : public Error {
public:
    using Error::Error;
};

/// A search or recursion ran past its work budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A library invariant was violated; always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace braidnorm
