#include "mvmorse/errors.hpp"

namespace mvmorse {

ParseError::ParseError(const std::string& msg, std::size_t line)
    : Error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}

NotAcyclicError::NotAcyclicError(const std::string& msg, std::vector<std::string> witness)
    : Error(msg), witness_(std::move(witness)) {}

}  // namespace mvmorse
