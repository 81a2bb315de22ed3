#pragma once

#include <stdexcept>
#include <string>

namespace extentlab {

// Error taxonomy mirrors the CLI exit-code contract:
//   ValidationError -> exit 2 (bad inputs, bad config, contract violations)
//   NumericalError  -> exit 3 (factorization failures, non-finite state)
//   IoError         -> exit 4 (missing/unreadable/unwritable files)
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace extentlab
