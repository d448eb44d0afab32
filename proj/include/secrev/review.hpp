#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "secrev/errors.hpp"
#include "secrev/security_type.hpp"

namespace secrev {

/// A structured security review: the issue type plus description, impact and
/// advice bodies. Non-Issue comments carry empty bodies; every other type
/// carries non-empty ones.
struct ReviewComment {
    SecurityType security_type = SecurityType::NonIssue;
    std::string description;
    std::string impact;
    std::string advice;

    bool operator==(const ReviewComment&) const = default;
};

/// Throws EmptyField if a non-Non-Issue comment has a blank body.
inline void validate(const ReviewComment& c) {
    if (c.security_type == SecurityType::NonIssue) return;
    if (c.description.empty()) throw EmptyField("Description");
    if (c.impact.empty()) throw EmptyField("Impact");
    if (c.advice.empty()) throw EmptyField("Advice");
}

/// Canonical labeled-block serialization. Non-Issue emits the single
/// "Security Type:" line; everything else emits the four labels in fixed
/// ST, D, I, A order. No trailing newline.
inline std::string render_review(const ReviewComment& c) {
    std::string out = "Security Type: ";
    out += to_display_name(c.security_type);
    if (c.security_type == SecurityType::NonIssue) return out;
    out += "\nDescription: ";
    out += c.description;
    out += "\nImpact: ";
    out += c.impact;
    out += "\nAdvice: ";
    out += c.advice;
    return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Matches "<label>:" at the start of a line, case-insensitively, and returns
// the text after the colon (one leading space consumed).
inline bool match_label(std::string_view line, std::string_view label, std::string_view& rest) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    for (char want : label) {
        if (i >= line.size()) return false;
        char got = static_cast<char>(std::tolower(static_cast<unsigned char>(line[i])));
        if (got != want) return false;
        ++i;
    }
    if (i >= line.size() || line[i] != ':') return false;
    ++i;
    if (i < line.size() && line[i] == ' ') ++i;
    rest = line.substr(i);
    return true;
}

}  // namespace detail

/// Parses a labeled review block. Labels match case-insensitively in the
/// fixed ST, D, I, A order; a field body runs until the next label or the
/// end of the block. Lines before the first label are ignored so raw model
/// output with a preamble still parses.
///
/// Throws MissingField, UnknownSecurityType, or EmptyField per the block
/// contract. A Non-Issue block's stray D/I/A bodies are dropped.
inline ReviewComment parse_review(std::string_view text) {
    static constexpr std::string_view kLabels[4] = {"security type", "description", "impact",
                                                    "advice"};
    static constexpr std::string_view kFieldNames[4] = {"Security Type", "Description", "Impact",
                                                        "Advice"};
    std::string bodies[4];
    bool seen[4] = {false, false, false, false};
    int current = -1;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        bool matched = false;
        for (int f = 0; f < 4; ++f) {
            std::string_view rest;
            if (detail::match_label(line, kLabels[f], rest)) {
                if (!seen[f]) {
                    seen[f] = true;
                    bodies[f] = std::string(rest);
                    current = f;
                    matched = true;
                }
                break;  // a repeated label is body text for the current field
            }
        }
        if (!matched && current >= 0) {
            bodies[current] += '\n';
            bodies[current] += line;
        }
    }

    if (!seen[0]) throw MissingField("Security Type");
    const std::string st_text{detail::trim(bodies[0])};
    const SecurityType st = security_type_from_name(st_text);

    ReviewComment c;
    c.security_type = st;
    if (st == SecurityType::NonIssue) return c;

    for (int f = 1; f < 4; ++f) {
        if (!seen[f]) throw MissingField(std::string(kFieldNames[f]));
        std::string_view body = detail::trim(bodies[f]);
        if (body.empty()) throw EmptyField(std::string(kFieldNames[f]));
        bodies[f] = std::string(body);
    }
    c.description = std::move(bodies[1]);
    c.impact = std::move(bodies[2]);
    c.advice = std::move(bodies[3]);
    return c;
}

}  // namespace secrev
