#pragma once

#include <stdexcept>
#include <string>

namespace facelab {

/// Input that cannot be parsed (malformed JSON, wrong shapes).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a mathematical precondition.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computed object failed a consistency check (d*d != 0, basis mismatch, ...).
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace facelab
