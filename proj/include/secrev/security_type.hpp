#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "secrev/errors.hpp"

namespace secrev {

/// The 8-way security issue taxonomy: 7 issue types plus Non-Issue.
enum class SecurityType {
    ExceptionHandling,
    Concurrency,
    InputValidation,
    AccessControlAndInformationSecurity,
    ResourceManagement,
    StateManagement,
    TypeAndDataHandling,
    NonIssue,
};

inline constexpr std::size_t kSecurityTypeCount = 8;

inline constexpr std::array<SecurityType, kSecurityTypeCount> all_security_types() {
    return {SecurityType::ExceptionHandling,
            SecurityType::Concurrency,
            SecurityType::InputValidation,
            SecurityType::AccessControlAndInformationSecurity,
            SecurityType::ResourceManagement,
            SecurityType::StateManagement,
            SecurityType::TypeAndDataHandling,
            SecurityType::NonIssue};
}

inline constexpr std::size_t type_index(SecurityType t) {
    return static_cast<std::size_t>(t);
}

/// Canonical display name. These spellings are the serialization format;
/// do not edit without regenerating golden files.
inline std::string_view to_display_name(SecurityType t) {
    switch (t) {
        case SecurityType::ExceptionHandling: return "Exception Handling";
        case SecurityType::Concurrency: return "Concurrency";
        case SecurityType::InputValidation: return "Input Validation";
        case SecurityType::AccessControlAndInformationSecurity:
            return "Access Control and Information Security";
        case SecurityType::ResourceManagement: return "Resource Management";
        case SecurityType::StateManagement: return "State Management";
        case SecurityType::TypeAndDataHandling: return "Type and Data Handling";
        case SecurityType::NonIssue: return "Non-Issue";
    }
    return "Non-Issue";  // unreachable
}

namespace detail {

// Lowercases and collapses whitespace runs so parsing tolerates case and
// spacing noise from model output while staying a bijection on canonical names.
inline std::string fold_type_name(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    bool pending_space = false;
    for (char c : name) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

}  // namespace detail

inline std::optional<SecurityType> try_security_type_from_name(std::string_view name) {
    const std::string folded = detail::fold_type_name(name);
    for (SecurityType t : all_security_types()) {
        if (folded == detail::fold_type_name(to_display_name(t))) return t;
    }
    return std::nullopt;
}

inline SecurityType security_type_from_name(std::string_view name) {
    if (auto t = try_security_type_from_name(name)) return *t;
    throw UnknownSecurityType(std::string(name));
}

}  // namespace secrev
