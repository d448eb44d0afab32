#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "secrev/errors.hpp"

namespace secrev {

/// A unified-diff code change. `raw` holds the hunk text ('+'/'-'/' ' body
/// lines, "@@" hunk headers); metadata carries upstream record fields such as
/// repo, commit or PR id.
struct CodeDiff {
    std::string raw;
    std::optional<std::string> language;
    std::map<std::string, std::string> metadata;

    bool operator==(const CodeDiff&) const = default;
};

inline void validate(const CodeDiff& d) {
    if (d.raw.empty()) throw Error("code diff is empty");
}

/// Lines added or removed by the diff: '+'/'-' prefixed, excluding the
/// "+++"/"---" file headers. Context and header lines never contribute.
inline std::vector<std::string_view> changed_lines(const CodeDiff& d) {
    std::vector<std::string_view> out;
    std::string_view raw = d.raw;
    std::size_t pos = 0;
    while (pos < raw.size()) {
        std::size_t eol = raw.find('\n', pos);
        std::string_view line =
            raw.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? raw.size() : eol + 1;
        if (line.empty()) continue;
        if (line[0] != '+' && line[0] != '-') continue;
        if (line.rfind("+++", 0) == 0 || line.rfind("---", 0) == 0) continue;
        out.push_back(line.substr(1));
    }
    return out;
}

namespace detail {

// Reserved words across the languages the corpus covers; identifier scans in
// changed lines skip these.
inline const std::unordered_set<std::string_view>& language_keywords() {
    static const std::unordered_set<std::string_view> kw = {
        "abstract",  "and",      "as",       "assert",   "async",    "auto",     "await",
        "begin",     "bool",     "boolean",  "break",    "byte",     "case",     "catch",
        "chan",      "char",     "class",    "const",    "continue", "def",      "default",
        "defer",     "del",      "delete",   "do",       "double",   "elif",     "else",
        "end",       "enum",     "except",   "explicit", "export",   "extends",  "extern",
        "false",     "final",    "finally",  "float",    "fn",       "for",      "foreach",
        "friend",    "func",     "function", "global",   "go",       "goto",     "if",
        "implements","import",   "in",       "inline",   "instanceof","int",     "interface",
        "is",        "lambda",   "let",      "long",     "map",      "module",   "mutable",
        "namespace", "new",      "nil",      "none",     "nonlocal", "not",      "null",
        "nullptr",   "operator", "or",       "override", "package",  "pass",     "private",
        "protected", "public",   "raise",    "range",    "require",  "return",   "self",
        "short",     "signed",   "sizeof",   "static",   "struct",   "super",    "switch",
        "template",  "then",     "this",     "throw",    "throws",   "trait",    "true",
        "try",       "type",     "typedef",  "typename", "union",    "unsigned", "use",
        "using",     "var",      "virtual",  "void",     "volatile", "while",    "with",
        "yield",
    };
    return kw;
}

inline bool is_ident_start(char c) {
    return c == '_' || std::isalpha(static_cast<unsigned char>(c));
}

inline bool is_ident_char(char c) {
    return c == '_' || std::isalnum(static_cast<unsigned char>(c));
}

}  // namespace detail

/// Identifier lexemes occurring in the diff's changed lines: maximal runs of
/// [A-Za-z_][A-Za-z0-9_]*, minus language keywords (matched case-insensitively
/// for all-lowercase keyword spellings). Sorted unique.
inline std::vector<std::string> diff_identifiers(const CodeDiff& d) {
    std::unordered_set<std::string> seen;
    for (std::string_view line : changed_lines(d)) {
        std::size_t i = 0;
        while (i < line.size()) {
            if (!detail::is_ident_start(line[i])) {
                ++i;
                continue;
            }
            std::size_t j = i + 1;
            while (j < line.size() && detail::is_ident_char(line[j])) ++j;
            std::string ident(line.substr(i, j - i));
            std::string lowered = ident;
            std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                           [](unsigned char c) { return std::tolower(c); });
            if (!detail::language_keywords().contains(lowered)) seen.insert(std::move(ident));
            i = j;
        }
    }
    std::vector<std::string> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace secrev
