#include "lrsk/io.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace lrsk {

using nlohmann::json;

namespace {

constexpr std::string_view kKindNames[] = {"multicomposition", "parmat", "bcm", "flagged-biword",
                                           "tableau-pair"};

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    throw ParseError("at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const json& field(const json& obj, const std::string& where, const char* key) {
    if (!obj.is_object())
        schema_error(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        schema_error(where, std::string("missing field \"") + key + "\"");
    return *it;
}

void reject_unknown_fields(const json& obj, const std::string& where,
                           std::initializer_list<const char*> known) {
    for (const auto& [key, value] : obj.items())
        if (std::none_of(known.begin(), known.end(), [&](const char* k) { return key == k; }))
            schema_error(where, "unexpected field \"" + key + "\"");
}

Part as_count(const json& j, const std::string& where, bool positive) {
    if (!j.is_number_integer())
        schema_error(where, "expected an integer");
    if (j.is_number_unsigned()) {
        const auto v = j.get<std::uint64_t>();
        if (v > std::numeric_limits<Part>::max())
            schema_error(where, "integer out of range");
        if (positive && v == 0)
            schema_error(where, "expected a positive integer");
        return static_cast<Part>(v);
    }
    const auto v = j.get<std::int64_t>();
    if (v < 0)
        schema_error(where, "expected a nonnegative integer");
    if (positive && v == 0)
        schema_error(where, "expected a positive integer");
    if (v > static_cast<std::int64_t>(std::numeric_limits<Part>::max()))
        schema_error(where, "integer out of range");
    return static_cast<Part>(v);
}

const json& as_array(const json& j, const std::string& where) {
    if (!j.is_array())
        schema_error(where, "expected an array");
    return j;
}

std::vector<Part> as_parts(const json& j, const std::string& where) {
    std::vector<Part> out;
    const auto& arr = as_array(j, where);
    for (std::size_t k = 0; k < arr.size(); ++k)
        out.push_back(as_count(arr[k], where + "/" + std::to_string(k), false));
    return out;
}

// Wraps invariant failures of the domain constructors with the JSON location.
template <class F>
auto at_location(const std::string& where, F&& make) -> decltype(make()) {
    try {
        return make();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError("at " + where + ": " + e.what());
    }
}

Composition as_composition(const json& j, const std::string& where) {
    auto parts = as_parts(j, where);
    return at_location(where, [&] { return Composition(std::move(parts)); });
}

Partition as_partition(const json& j, const std::string& where) {
    auto parts = as_parts(j, where);
    return at_location(where, [&] { return Partition(std::move(parts)); });
}

Letter as_letter(const json& j, const std::string& where) {
    const auto& arr = as_array(j, where);
    if (arr.size() != 2)
        schema_error(where, "a letter is a two-element array [value, flag]");
    return Letter{as_count(arr[0], where + "/0", true), as_count(arr[1], where + "/1", true)};
}

json letter_json(const Letter& x) { return json::array({x.value, x.flag}); }

json parts_json(const std::vector<Part>& parts) {
    json out = json::array();
    for (Part v : parts)
        out.push_back(v);
    return out;
}

json tableau_json(const Tableau& t) {
    json rows = json::array();
    for (const auto& row : t.rows()) {
        json r = json::array();
        for (const auto& x : row)
            r.push_back(letter_json(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

json multitableau_json(const Multitableau& t) {
    json out = json::array();
    for (const auto& comp : t.components())
        out.push_back(tableau_json(comp));
    return out;
}

Tableau as_tableau(const json& j, const std::string& where) {
    const auto& arr = as_array(j, where);
    std::vector<std::vector<Letter>> rows;
    for (std::size_t r = 0; r < arr.size(); ++r) {
        const std::string rw = where + "/" + std::to_string(r);
        const auto& row = as_array(arr[r], rw);
        auto& out = rows.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c)
            out.push_back(as_letter(row[c], rw + "/" + std::to_string(c)));
    }
    return at_location(where, [&] { return Tableau(std::move(rows)); });
}

Multitableau as_multitableau(const json& j, const std::string& where, std::size_t level) {
    const auto& arr = as_array(j, where);
    if (arr.size() != level)
        schema_error(where, "expected " + std::to_string(level) + " components, found " +
                                std::to_string(arr.size()));
    std::vector<Tableau> comps;
    for (std::size_t k = 0; k < arr.size(); ++k)
        comps.push_back(as_tableau(arr[k], where + "/" + std::to_string(k)));
    return Multitableau(std::move(comps));
}

EntryKey as_key(const json& e, const std::string& where) {
    return EntryKey{as_count(field(e, where, "p"), where + "/p", true),
                    as_count(field(e, where, "q"), where + "/q", true),
                    as_count(field(e, where, "i"), where + "/i", true),
                    as_count(field(e, where, "j"), where + "/j", true)};
}

void check_key_range(const EntryKey& k, std::size_t level, const std::string& where) {
    if (k.p > level || k.q > level)
        schema_error(where, "block (" + std::to_string(k.p) + "," + std::to_string(k.q) +
                                ") outside level " + std::to_string(level));
}

void throw_if_messages(const std::vector<std::string>& messages, const std::string& what) {
    if (messages.empty())
        return;
    std::string msg = what + " is invalid:";
    for (const auto& m : messages)
        msg += "\n  " + m;
    throw ValidationError(msg);
}

MultiComposition parse_multicomposition(const json& payload, std::size_t level) {
    const auto& arr = as_array(payload, "/payload");
    if (arr.size() != level)
        schema_error("/payload", "expected " + std::to_string(level) + " components, found " +
                                     std::to_string(arr.size()));
    std::vector<Composition> comps;
    for (std::size_t k = 0; k < arr.size(); ++k)
        comps.push_back(as_composition(arr[k], "/payload/" + std::to_string(k)));
    return MultiComposition(std::move(comps));
}

ParMatFlat parse_parmat(const json& payload, std::size_t level) {
    reject_unknown_fields(payload, "/payload", {"entries"});
    const auto& entries = as_array(field(payload, "/payload", "entries"), "/payload/entries");
    ParMatFlat out(level);
    std::set<EntryKey> seen;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const std::string where = "/payload/entries/" + std::to_string(k);
        const auto& e = entries[k];
        const EntryKey key = as_key(e, where);
        reject_unknown_fields(e, where, {"p", "q", "i", "j", "a", "eta"});
        check_key_range(key, level, where);
        if (!seen.insert(key).second)
            schema_error(where, "duplicate entry " + to_string(key));
        const Part a = as_count(field(e, where, "a"), where + "/a", false);
        Partition eta;
        if (e.contains("eta"))
            eta = as_partition(e["eta"], where + "/eta");
        out.set(key, a, std::move(eta));
    }
    require_valid(validate_parmat(out), "ParMat document");
    return out;
}

FlaggedBCM parse_bcm(const json& payload, std::size_t level) {
    reject_unknown_fields(payload, "/payload", {"entries"});
    const auto& entries = as_array(field(payload, "/payload", "entries"), "/payload/entries");
    FlaggedBCM out(level);
    std::set<EntryKey> seen;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const std::string where = "/payload/entries/" + std::to_string(k);
        const auto& e = entries[k];
        const EntryKey key = as_key(e, where);
        reject_unknown_fields(e, where, {"p", "q", "i", "j", "parts"});
        check_key_range(key, level, where);
        if (!seen.insert(key).second)
            schema_error(where, "duplicate entry " + to_string(key));
        out.set(key, as_composition(field(e, where, "parts"), where + "/parts"));
    }
    require_valid(validate_bcm(out), "block composition matrix document");
    return out;
}

FlaggedBiword parse_biword(const json& payload, std::size_t level) {
    const auto& arr = as_array(payload, "/payload");
    if (arr.size() != level)
        schema_error("/payload", "expected " + std::to_string(level) + " components, found " +
                                     std::to_string(arr.size()));
    std::vector<LetterBiword> comps;
    for (std::size_t t = 0; t < arr.size(); ++t) {
        const std::string where = "/payload/" + std::to_string(t);
        reject_unknown_fields(arr[t], where, {"top", "bottom"});
        const auto& top = as_array(field(arr[t], where, "top"), where + "/top");
        const auto& bottom = as_array(field(arr[t], where, "bottom"), where + "/bottom");
        if (top.size() != bottom.size())
            schema_error(where, "top and bottom rows have different lengths");
        std::vector<LetterBiLetter> columns;
        for (std::size_t k = 0; k < top.size(); ++k)
            columns.push_back({as_letter(top[k], where + "/top/" + std::to_string(k)),
                               as_letter(bottom[k], where + "/bottom/" + std::to_string(k))});
        comps.push_back(at_location(where, [&] { return LetterBiword(std::move(columns)); }));
    }
    FlaggedBiword out(std::move(comps));
    throw_if_messages(flagged_biword_violations(out), "flagged biword document");
    return out;
}

TableauPair parse_tableau_pair(const json& payload, std::size_t level) {
    reject_unknown_fields(payload, "/payload", {"P", "Q", "shape"});
    TableauPair out{as_multitableau(field(payload, "/payload", "P"), "/payload/P", level),
                    as_multitableau(field(payload, "/payload", "Q"), "/payload/Q", level)};
    throw_if_messages(tableau_pair_violations(out), "tableau pair document");
    if (payload.contains("shape")) {
        const auto& shape = as_array(payload["shape"], "/payload/shape");
        if (shape.size() != level)
            schema_error("/payload/shape", "expected " + std::to_string(level) + " components");
        std::vector<Partition> parts;
        for (std::size_t k = 0; k < shape.size(); ++k)
            parts.push_back(as_partition(shape[k], "/payload/shape/" + std::to_string(k)));
        if (MultiPartition(std::move(parts)) != out.shape())
            throw ValidationError("at /payload/shape: does not match the tableaux");
    }
    return out;
}

std::string cell_text(const std::vector<Part>& parts) {
    if (parts.empty())
        return "∅";
    const bool small = std::all_of(parts.begin(), parts.end(), [](Part v) { return v < 10; });
    std::string out;
    if (!small)
        out += '(';
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (!small && k > 0)
            out += ',';
        out += std::to_string(parts[k]);
    }
    if (!small)
        out += ')';
    return out;
}

// Display width in columns; "∅" is one column but three bytes.
std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char ch : s)
        if ((ch & 0xC0) != 0x80)
            ++w;
    return w;
}

// Renders an ell x ell block matrix of short strings with separators between blocks.
template <class CellFn>
std::string render_blocks(std::size_t level, const std::vector<std::size_t>& row_extent,
                          const std::vector<std::size_t>& col_extent, CellFn&& cell) {
    std::vector<std::vector<std::string>> grid;
    std::vector<std::size_t> block_of_row;
    for (std::size_t p = 1; p <= level; ++p)
        for (std::size_t i = 1; i <= row_extent[p - 1]; ++i) {
            auto& line = grid.emplace_back();
            block_of_row.push_back(p);
            for (std::size_t q = 1; q <= level; ++q)
                for (std::size_t j = 1; j <= col_extent[q - 1]; ++j)
                    line.push_back(cell(EntryKey{p, q, i, j}));
        }
    std::size_t width = 1;
    for (const auto& line : grid)
        for (const auto& s : line)
            width = std::max(width, display_width(s));

    std::ostringstream os;
    std::size_t total_cols = 0;
    for (auto e : col_extent)
        total_cols += e;
    for (std::size_t r = 0; r < grid.size(); ++r) {
        if (r > 0 && block_of_row[r] != block_of_row[r - 1])
            os << std::string(total_cols * (width + 1) + 2 * (level - 1), '-') << '\n';
        std::size_t c = 0;
        for (std::size_t q = 0; q < level; ++q) {
            if (q > 0)
                os << "| ";
            for (std::size_t j = 0; j < col_extent[q]; ++j, ++c) {
                const auto& s = grid[r][c];
                os << std::string(width - display_width(s), ' ') << s << ' ';
            }
        }
        os << '\n';
    }
    return os.str();
}

// Per-block extents: the larger of the prescribed sum length and the largest index used.
template <class Map>
std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
extents(std::size_t level, const Map& entries, const MultiComposition& row,
        const MultiComposition& col) {
    std::vector<std::size_t> rows(level, 0), cols(level, 0);
    for (std::size_t b = 0; b < level; ++b) {
        rows[b] = row[b].length();
        cols[b] = col[b].length();
    }
    for (const auto& [k, v] : entries) {
        rows[k.p - 1] = std::max(rows[k.p - 1], k.i);
        cols[k.q - 1] = std::max(cols[k.q - 1], k.j);
    }
    return {rows, cols};
}

std::string pretty_tableau(const Tableau& t) {
    if (t.empty())
        return "  ∅\n";
    std::string out;
    for (const auto& row : t.rows()) {
        out += " ";
        for (const auto& x : row)
            out += " " + to_string(x);
        out += '\n';
    }
    return out;
}

} // namespace

std::string_view kind_name(DocumentKind kind) noexcept {
    return kKindNames[static_cast<std::size_t>(kind)];
}

DocumentKind parse_kind(std::string_view name) {
    for (std::size_t k = 0; k < std::size(kKindNames); ++k)
        if (kKindNames[k] == name)
            return static_cast<DocumentKind>(k);
    throw ParseError("unknown document kind \"" + std::string(name) +
                     "\" (expected multicomposition, parmat, bcm, flagged-biword, tableau-pair)");
}

DocumentKind Document::kind() const noexcept { return static_cast<DocumentKind>(payload.index()); }

std::size_t Document::level() const noexcept {
    return std::visit([](const auto& x) { return x.level(); }, payload);
}

json to_json(const Document& doc) {
    json out;
    out["kind"] = std::string(kind_name(doc.kind()));
    out["level"] = doc.level();
    std::visit(
        [&out](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, MultiComposition>) {
                json comps = json::array();
                for (const auto& c : x.components())
                    comps.push_back(parts_json(c.parts()));
                out["payload"] = std::move(comps);
            } else if constexpr (std::is_same_v<T, ParMatFlat>) {
                json entries = json::array();
                std::set<EntryKey> keys;
                for (const auto& [k, a] : x.matrix().entries())
                    keys.insert(k);
                for (const auto& [k, eta] : x.decorations())
                    keys.insert(k);
                for (const auto& k : keys) {
                    entries.push_back({{"p", k.p}, {"q", k.q}, {"i", k.i}, {"j", k.j},
                                       {"a", x.value(k)},
                                       {"eta", parts_json(x.decoration(k).parts())}});
                }
                out["payload"] = {{"entries", std::move(entries)}};
            } else if constexpr (std::is_same_v<T, FlaggedBCM>) {
                json entries = json::array();
                for (const auto& [k, c] : x.entries())
                    entries.push_back({{"p", k.p}, {"q", k.q}, {"i", k.i}, {"j", k.j},
                                       {"parts", parts_json(c.parts())}});
                out["payload"] = {{"entries", std::move(entries)}};
            } else if constexpr (std::is_same_v<T, FlaggedBiword>) {
                json comps = json::array();
                for (const auto& w : x.components()) {
                    json top = json::array(), bottom = json::array();
                    for (const auto& c : w.columns()) {
                        top.push_back(letter_json(c.top));
                        bottom.push_back(letter_json(c.bottom));
                    }
                    comps.push_back({{"top", std::move(top)}, {"bottom", std::move(bottom)}});
                }
                out["payload"] = std::move(comps);
            } else {
                json shape = json::array();
                for (const auto& comp : x.insertion.components())
                    shape.push_back(parts_json(comp.shape().parts()));
                out["payload"] = {{"P", multitableau_json(x.insertion)},
                                  {"Q", multitableau_json(x.recording)},
                                  {"shape", std::move(shape)}};
            }
        },
        doc.payload);
    return out;
}

Document from_json(const json& j) {
    if (!j.is_object())
        schema_error("", "expected a document object");
    reject_unknown_fields(j, "", {"kind", "level", "payload"});
    const auto& kind_field = field(j, "", "kind");
    if (!kind_field.is_string())
        schema_error("/kind", "expected a string");
    const DocumentKind kind = parse_kind(kind_field.get<std::string>());
    const std::size_t level = as_count(field(j, "", "level"), "/level", true);
    const auto& payload = field(j, "", "payload");
    switch (kind) {
    case DocumentKind::multicomposition:
        return {parse_multicomposition(payload, level)};
    case DocumentKind::parmat:
        return {parse_parmat(payload, level)};
    case DocumentKind::bcm:
        return {parse_bcm(payload, level)};
    case DocumentKind::flagged_biword:
        return {parse_biword(payload, level)};
    case DocumentKind::tableau_pair:
        return {parse_tableau_pair(payload, level)};
    }
    schema_error("/kind", "unhandled kind");
}

std::string serialize(const Document& doc, int indent) {
    return to_json(doc).dump(indent);
}

Document parse_document(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return from_json(j);
}

std::string pretty(const Document& doc) {
    std::ostringstream os;
    std::visit(
        [&os](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, MultiComposition>) {
                os << to_string(x) << '\n';
            } else if constexpr (std::is_same_v<T, ParMatFlat>) {
                const auto row = x.row_sum();
                const auto col = x.col_sum();
                auto [rows, cols] = extents(x.level(), x.matrix().entries(), row, col);
                auto [drows, dcols] = extents(x.level(), x.decorations(), row, col);
                for (std::size_t b = 0; b < x.level(); ++b) {
                    rows[b] = std::max(rows[b], drows[b]);
                    cols[b] = std::max(cols[b], dcols[b]);
                }
                os << "A =\n"
                   << render_blocks(x.level(), rows, cols,
                                    [&](const EntryKey& k) { return std::to_string(x.value(k)); })
                   << "P =\n"
                   << render_blocks(x.level(), rows, cols,
                                    [&](const EntryKey& k) {
                                        return cell_text(x.decoration(k).parts());
                                    })
                   << "row(A) = " << to_string(row) << "\ncol(A) = " << to_string(col) << '\n';
            } else if constexpr (std::is_same_v<T, FlaggedBCM>) {
                const auto row = x.row_sum();
                const auto col = x.col_sum();
                auto [rows, cols] = extents(x.level(), x.entries(), row, col);
                os << "B =\n"
                   << render_blocks(x.level(), rows, cols,
                                    [&](const EntryKey& k) { return cell_text(x.get(k).parts()); })
                   << "row(B) = " << to_string(row) << "\ncol(B) = " << to_string(col) << '\n';
            } else if constexpr (std::is_same_v<T, FlaggedBiword>) {
                for (std::size_t t = 0; t < x.level(); ++t) {
                    os << "w^(" << t + 1 << "):\n  top:   ";
                    for (const auto& c : x[t].columns())
                        os << ' ' << to_string(c.top);
                    os << "\n  bottom:";
                    for (const auto& c : x[t].columns())
                        os << ' ' << to_string(c.bottom);
                    os << '\n';
                }
            } else {
                for (std::size_t t = 0; t < x.level(); ++t) {
                    os << "P^(" << t + 1 << "):\n" << pretty_tableau(x.insertion[t]);
                    os << "Q^(" << t + 1 << "):\n" << pretty_tableau(x.recording[t]);
                }
                os << "shape = " << to_string(x.shape()) << '\n';
            }
        },
        doc.payload);
    return os.str();
}

} // namespace lrsk
