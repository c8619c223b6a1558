#pragma once

#include <stdexcept>
#include <string>

namespace hodgelink {

/// Error category, doubles as the CLI exit code.
enum class ErrorKind { config = 2, data = 3, numeric = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& w) : Error(ErrorKind::config, w) {}
};
struct DataError : Error {
    explicit DataError(const std::string& w) : Error(ErrorKind::data, w) {}
};
struct NumericError : Error {
    explicit NumericError(const std::string& w) : Error(ErrorKind::numeric, w) {}
};

struct EmptyInput : DataError {
    explicit EmptyInput(const std::string& w) : DataError(w) {}
};
struct SimplexTooLarge : DataError {
    explicit SimplexTooLarge(const std::string& w) : DataError(w) {}
};
struct ClosureViolation : DataError {
    explicit ClosureViolation(const std::string& w) : DataError(w) {}
};
struct UnknownLink : DataError {
    explicit UnknownLink(const std::string& w) : DataError(w) {}
};
struct DimensionMismatch : DataError {
    explicit DimensionMismatch(const std::string& w) : DataError(w) {}
};
struct NotConnected : DataError {
    explicit NotConnected(const std::string& w) : DataError(w) {}
};
struct SamplingExhausted : DataError {
    explicit SamplingExhausted(const std::string& w) : DataError(w) {}
};
struct ZeroDegree : NumericError {
    explicit ZeroDegree(const std::string& w) : NumericError(w) {}
};
struct ZeroRowSum : NumericError {
    explicit ZeroRowSum(const std::string& w) : NumericError(w) {}
};
struct NotAnEigenpair : NumericError {
    explicit NotAnEigenpair(const std::string& w) : NumericError(w) {}
};
struct SizeLimitExceeded : ConfigError {
    explicit SizeLimitExceeded(const std::string& w) : ConfigError(w) {}
};

} // namespace hodgelink
