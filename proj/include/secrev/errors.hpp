#pragma once

#include <stdexcept>
#include <string>

namespace secrev {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- review block parsing ---

class MissingField : public Error {
public:
    explicit MissingField(const std::string& field)
        : Error("missing field: " + field), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

class EmptyField : public Error {
public:
    explicit EmptyField(const std::string& field)
        : Error("empty field: " + field), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

class UnknownSecurityType : public Error {
public:
    explicit UnknownSecurityType(const std::string& name)
        : Error("unknown security type: \"" + name + "\""), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// --- metrics ---

class ReferenceIsNonIssue : public Error {
public:
    ReferenceIsNonIssue() : Error("reference comment has security type Non-Issue") {}
};

class EmptyInput : public Error {
public:
    explicit EmptyInput(const std::string& what) : Error("empty input: " + what) {}
};

class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& why) : Error("degenerate input: " + why) {}
};

// --- vectors / embeddings ---

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : Error("vector dimension mismatch: " + std::to_string(lhs) + " vs " +
                std::to_string(rhs)) {}
};

// --- model client ---

class ModelUnavailable : public Error {
public:
    explicit ModelUnavailable(const std::string& why)
        : Error("model endpoint unavailable: " + why) {}
};

class AuthFailure : public Error {
public:
    explicit AuthFailure(const std::string& why) : Error("authentication failure: " + why) {}
};

class ResponseSchemaError : public Error {
public:
    explicit ResponseSchemaError(const std::string& why)
        : Error("malformed chat response: " + why) {}
};

// --- pipeline ---

class MalformedVerdict : public Error {
public:
    explicit MalformedVerdict(const std::string& response)
        : Error("judge response is neither yes- nor no-leading: \"" + response + "\"") {}
};

class UnparseableRefinement : public Error {
public:
    explicit UnparseableRefinement(const std::string& why)
        : Error("refinement response unparseable after retries: " + why) {}
};

class TypeDrift : public Error {
public:
    TypeDrift(const std::string& expected, const std::string& got)
        : Error("refinement persistently emitted security type \"" + got +
                "\", expected \"" + expected + "\"") {}
};

class SizeMismatch : public Error {
public:
    explicit SizeMismatch(const std::string& why) : Error("split size mismatch: " + why) {}
};

class InsufficientNonIssuePool : public Error {
public:
    InsufficientNonIssuePool(std::size_t requested, std::size_t available)
        : Error("requested " + std::to_string(requested) + " non-issue entries, pool has " +
                std::to_string(available)) {}
};

// --- template datastore ---

class DuplicateTemplateId : public Error {
public:
    explicit DuplicateTemplateId(const std::string& id)
        : Error("duplicate template id: " + id) {}
};

class NonIssueTemplate : public Error {
public:
    explicit NonIssueTemplate(const std::string& id)
        : Error("template " + id + " has security type Non-Issue") {}
};

class NonIssueQueryType : public Error {
public:
    NonIssueQueryType() : Error("retrieval requires a predicted issue type, got Non-Issue") {}
};

// --- rarg ---

class UnparseableReview : public Error {
public:
    explicit UnparseableReview(const std::string& why)
        : Error("generated review unparseable after retries: " + why) {}
};

class TemplateTypeMismatch : public Error {
public:
    TemplateTypeMismatch(const std::string& template_type, const std::string& predicted)
        : Error("template type \"" + template_type + "\" does not match predicted type \"" +
                predicted + "\"") {}
};

// --- sa loss ---

class TypeNotFoundInSequence : public Error {
public:
    TypeNotFoundInSequence(const std::string& type_name)
        : Error("token sequence does not spell the security type \"" + type_name + "\"") {}
};

class IndexOutOfRange : public Error {
public:
    IndexOutOfRange(std::size_t index, std::size_t size)
        : Error("token index " + std::to_string(index) + " out of range for sequence of " +
                std::to_string(size)) {}
};

class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t lhs, std::size_t rhs)
        : Error("aligned sequence lengths differ: " + std::to_string(lhs) + " vs " +
                std::to_string(rhs)) {}
};

// --- cli / file alignment ---

class IdMismatch : public Error {
public:
    explicit IdMismatch(const std::string& offenders)
        : Error("prediction/reference ids do not align: " + offenders) {}
};

}  // namespace secrev
