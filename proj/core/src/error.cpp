#include "goldnews/error.hpp"

#include <utility>

namespace goldnews {

Error::Error(std::string module, const std::string& message)
    : std::runtime_error(module + ": " + message), module_(std::move(module)), message_(message) {}

SchemaError::SchemaError(std::string module, const std::string& message, std::string column)
    : InputError(std::move(module), message), column_(std::move(column)) {}

ValidationError::ValidationError(std::string module, const std::string& message, std::size_t row)
    : InputError(std::move(module), "row " + std::to_string(row) + ": " + message), row_(row) {}

ParseError::ParseError(std::string module, const std::string& message, std::size_t line)
    : Error(std::move(module), "line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace goldnews
