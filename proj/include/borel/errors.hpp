#pragma once

#include <stdexcept>
#include <string>

namespace borel {

/// Violation of an operation's documented domain (bad root, bad rank, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal contract failed. Carries the recursion trace when one exists.
class invariant_violation : public std::logic_error {
public:
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

/// A bounded search ran out of budget before reaching its goal.
class search_exhausted : public std::runtime_error {
public:
    explicit search_exhausted(const std::string& what) : std::runtime_error(what) {}
};

} // namespace borel
