#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace premod {

enum class ErrorKind {
    DivisionByZero,
    InvalidArgument,
    UnknownLabel,
    NonConvergent,
    NotASubcategory,
    DegenerateEigenproblem,
    NotSlightlyDegenerate,
    CrossCheckMismatch,
    GroupsTooLarge,
    UnknownCatalogKey,
    ParseError,
    ValidationError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// One violated axiom together with the indices or labels that witness it.
struct Violation {
    std::string kind;
    std::vector<std::string> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(std::string_view kind) const {
        for (const auto& v : violations)
            if (v.kind == kind) return true;
        return false;
    }
    void add(std::string kind, std::vector<std::string> witness, std::string detail = {}) {
        violations.push_back({std::move(kind), std::move(witness), std::move(detail)});
    }
    void merge(const ValidationReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
    std::string summary() const;
};

}  // namespace premod
