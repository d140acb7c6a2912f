#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conicbundle {

// Precondition violations of library operations (zero polynomial where a
// nonzero one is required, non-square-free input to a Sturm count, dimension
// mismatches, ...).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Sign evaluation requested at a pole of a rational function.
class PoleAtSample : public std::domain_error {
public:
    explicit PoleAtSample(const std::string& what) : std::domain_error(what) {}
};

// A conic-bundle spec that violates the input model: odd zero count on a
// circle, a transformation out of pipeline order, a missing target component.
class InvalidSpec : public std::runtime_error {
public:
    explicit InvalidSpec(const std::string& what) : std::runtime_error(what) {}
};

// Floating-point oracle could not settle a sign even after resampling.
class OracleInconclusive : public std::runtime_error {
public:
    explicit OracleInconclusive(const std::string& what) : std::runtime_error(what) {}
};

struct SchemaError {
    std::string location;  // JSON-pointer-like path into the document
    std::string message;
};

// Carries the full list of schema violations found in one parsing pass.
class SpecParseError : public std::runtime_error {
public:
    explicit SpecParseError(std::vector<SchemaError> errors)
        : std::runtime_error(format(errors)), errors_(std::move(errors)) {}

    const std::vector<SchemaError>& errors() const { return errors_; }

private:
    static std::string format(const std::vector<SchemaError>& errors);
    std::vector<SchemaError> errors_;
};

}  // namespace conicbundle
