#pragma once

#include <stdexcept>
#include <string>

#include "arcloc/classes.hpp"

namespace arcloc {

// An input the algorithms are not defined for: out of class or disconnected.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ClassViolation : public DomainError {
public:
    ClassViolation(const std::string& class_name, PatternWitness witness)
        : DomainError("digraph is not " + class_name), class_name_(class_name), witness_(witness) {}

    const std::string& class_name() const { return class_name_; }
    const PatternWitness& witness() const { return witness_; }

private:
    std::string class_name_;
    PatternWitness witness_;
};

class DisconnectedInput : public DomainError {
public:
    DisconnectedInput() : DomainError("digraph is not connected") {}
};

// Raised when a structural result that must hold for the class is observed to
// fail. Reaching this is a bug in the implementation (or a counterexample).
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Brute-force oracles refuse inputs above their configured vertex cap.
class OracleCapExceeded : public std::runtime_error {
public:
    OracleCapExceeded(int n, int cap)
        : std::runtime_error("not computed: " + std::to_string(n) + " vertices exceeds oracle cap " + std::to_string(cap)),
          n_(n), cap_(cap) {}

    int order() const { return n_; }
    int cap() const { return cap_; }

private:
    int n_;
    int cap_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace arcloc
