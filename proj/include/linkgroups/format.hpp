#pragma once

// Stable text, JSON, and computer-algebra output for presentations, plus
// the parsers that make the relation strings and link specs round-trip.

#include <optional>
#include <string>
#include <string_view>

#include "linkgroups/analysis.hpp"
#include "linkgroups/links.hpp"

namespace linkgroups {

// Right-to-left reading order with collapsed powers, e.g. "a^2*b^-3".
// The identity prints as "1".
std::string word_to_string(const GroupPresentation& G, const LetterSeq& w);

// Inverse of word_to_string; whitespace-insensitive.  Unknown generator
// names and malformed tokens raise ParseError with the offending position.
LetterSeq parse_word(const GroupPresentation& G, std::string_view text);

// Grammar: level = n ":" p "," q, levels joined innermost-first by "/",
// then optional "+extA" (interior unknot, single level only) and "+extB"
// (exterior unknot) in either order.  Example: "1:2,3/2:1,1+extB".
LinkSpec parse_spec(std::string_view text);

std::string spec_to_string(const LinkSpec& spec);

struct OutputDocument {
    std::string spec;
    std::string method; // "engine", "closed", or "both"
    GroupPresentation group;
    AbelianInvariants abelian;
    std::optional<HomFingerprint> fp;

    struct Comparison {
        bool abelian_match = false;
        std::optional<bool> fingerprint_match;

        bool match() const {
            return abelian_match && fingerprint_match.value_or(true);
        }
    };
    std::optional<Comparison> comparison;
};

std::string to_text(const OutputDocument& doc);
std::string to_json(const OutputDocument& doc);
std::string to_algebra(const OutputDocument& doc);

} // namespace linkgroups
