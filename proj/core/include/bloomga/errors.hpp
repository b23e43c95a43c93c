#pragma once

#include <stdexcept>
#include <string>

namespace bloomga {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input document (taxonomy file, corpus, transcript, run log line).
class ParseError : public Error {
public:
    using Error::Error;
};

/// An invariant does not hold on otherwise well-formed data.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A spend cap was reached; raised before any further request is issued.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Transport-level failure that survived the retry schedule.
class TransportError : public Error {
public:
    using Error::Error;
};

/// Authentication rejected or API key missing.
class AuthError : public Error {
public:
    using Error::Error;
};

/// Replay transcript exhausted or prompt does not match the recorded one.
class ReplayError : public Error {
public:
    using Error::Error;
};

/// Run-event ordering violation (append or load side).
class SequenceError : public Error {
public:
    using Error::Error;
};

/// Run log cannot be loaded.
class LoadError : public Error {
public:
    using Error::Error;
};

/// Engine precondition violated (e.g. selection over unevaluated individuals).
class EngineError : public Error {
public:
    using Error::Error;
};

}  // namespace bloomga
