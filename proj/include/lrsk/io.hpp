#pragma once

// JSON wire format for every object the correspondence touches.
//
//   {"kind": "<kind>", "level": L, "payload": ...}
//
//   multicomposition  payload: [[parts of component 1], ..., [parts of component L]]
//   parmat            payload: {"entries": [{"p","q","i","j","a","eta"}, ...]}
//   bcm               payload: {"entries": [{"p","q","i","j","parts"}, ...]}
//   flagged-biword    payload: [{"top": [[a,b],...], "bottom": [[a,b],...]}, ...]
//   tableau-pair      payload: {"P": [component rows], "Q": [component rows]}
//
// Letters a_b are [a, b]. Zero / empty entries are omitted on output.
// Serialization is deterministic: sorted object keys, entries in (p,q,i,j) order.

#include "lrsk/bijections.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace lrsk {

enum class DocumentKind { multicomposition, parmat, bcm, flagged_biword, tableau_pair };

std::string_view kind_name(DocumentKind kind) noexcept;

// Throws ParseError for an unknown name.
DocumentKind parse_kind(std::string_view name);

using Payload = std::variant<MultiComposition, ParMatFlat, FlaggedBCM, FlaggedBiword, TableauPair>;

struct Document {
    Payload payload;

    DocumentKind kind() const noexcept;
    std::size_t level() const noexcept;

    friend bool operator==(const Document&, const Document&) = default;
};

nlohmann::json to_json(const Document& doc);

// Throws ParseError on schema violations (with a JSON-pointer location) and
// ValidationError when the decoded object breaks an invariant.
Document from_json(const nlohmann::json& j);

// indent < 0 writes a single line.
std::string serialize(const Document& doc, int indent = 2);

// Throws ParseError with the byte offset on malformed JSON.
Document parse_document(std::string_view text);

// Human-readable rendering (block-matrix layout for matrices). Not parseable.
std::string pretty(const Document& doc);

} // namespace lrsk
