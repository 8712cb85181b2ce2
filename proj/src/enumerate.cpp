#include "lrsk/enumerate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lrsk {

void EnumerationBudget::validate() const {
    if (max_n < 1 || max_n > kMaxN)
        throw ValidationError("budget n must lie in [1," + std::to_string(kMaxN) + "]");
    if (max_level < 1 || max_level > kMaxLevel)
        throw ValidationError("budget level must lie in [1," + std::to_string(kMaxLevel) + "]");
    if (max_length < 1 || max_length > kMaxLength)
        throw ValidationError("budget length must lie in [1," + std::to_string(kMaxLength) + "]");
}

EnumerationBudget EnumerationBudget::parse(const std::string& spec) {
    EnumerationBudget out;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ValidationError("budget item '" + item + "' is not key=value");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        std::size_t used = 0;
        unsigned long parsed = 0;
        try {
            parsed = std::stoul(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size())
            throw ValidationError("budget value '" + value + "' is not a nonnegative integer");
        if (key == "n")
            out.max_n = static_cast<Part>(std::min<unsigned long>(parsed, 1000));
        else if (key == "level")
            out.max_level = parsed;
        else if (key == "length")
            out.max_length = parsed;
        else
            throw ValidationError("unknown budget key '" + key + "' (expected n, level, length)");
    }
    out.validate();
    return out;
}

std::string EnumerationBudget::to_string() const {
    return "n=" + std::to_string(max_n) + ",level=" + std::to_string(max_level) +
           ",length=" + std::to_string(max_length);
}

// --- compositions and partitions --------------------------------------------

void for_each_composition(Part weight, std::size_t max_length, const Visitor<Composition>& fn) {
    if (weight == 0) {
        fn(Composition{});
        return;
    }
    std::vector<Part> parts;
    for (std::size_t length = 1; length <= max_length; ++length) {
        parts.assign(length, 0);
        // fill all but the last slot; the last takes the (positive) remainder
        auto fill = [&](auto&& self, std::size_t pos, Part remaining) -> void {
            if (pos + 1 == length) {
                if (remaining == 0)
                    return;
                parts[pos] = remaining;
                fn(Composition(parts));
                return;
            }
            for (Part v = 0; v < remaining; ++v) {
                parts[pos] = v;
                self(self, pos + 1, remaining - v);
            }
        };
        fill(fill, 0, weight);
    }
}

std::vector<Composition> enum_compositions(Part weight, std::size_t max_length) {
    std::vector<Composition> out;
    for_each_composition(weight, max_length, [&out](const Composition& c) { out.push_back(c); });
    return out;
}

std::vector<Partition> partitions_in_box(std::size_t max_length, Part max_part) {
    std::vector<Partition> out;
    std::vector<Part> parts;
    auto grow = [&](auto&& self, Part cap) -> void {
        out.emplace_back(parts);
        if (parts.size() == max_length)
            return;
        for (Part v = 1; v <= cap; ++v) {
            parts.push_back(v);
            self(self, v);
            parts.pop_back();
        }
    };
    grow(grow, max_part);
    return out;
}

std::vector<Partition> enum_partitions(Part weight) {
    std::vector<Partition> out;
    std::vector<Part> parts;
    auto grow = [&](auto&& self, Part remaining, Part cap) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (Part v = std::min(remaining, cap); v >= 1; --v) {
            parts.push_back(v);
            self(self, remaining - v, v);
            parts.pop_back();
        }
    };
    grow(grow, weight, weight);
    return out;
}

namespace {

// Every way of writing n as an ordered sum of `level` nonnegative integers.
std::vector<std::vector<Part>> weak_splits(Part n, std::size_t level) {
    std::vector<std::vector<Part>> out;
    std::vector<Part> split(level, 0);
    auto go = [&](auto&& self, std::size_t pos, Part remaining) -> void {
        if (pos + 1 == level) {
            split[pos] = remaining;
            out.push_back(split);
            return;
        }
        for (Part v = 0; v <= remaining; ++v) {
            split[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    if (level > 0)
        go(go, 0, n);
    return out;
}

template <class Item, class Make>
void product_over_components(const std::vector<std::vector<Item>>& choices, Make&& make) {
    std::vector<Item> current;
    current.reserve(choices.size());
    auto go = [&](auto&& self, std::size_t pos) -> void {
        if (pos == choices.size()) {
            make(current);
            return;
        }
        for (const auto& item : choices[pos]) {
            current.push_back(item);
            self(self, pos + 1);
            current.pop_back();
        }
    };
    go(go, 0);
}

} // namespace

std::vector<MultiComposition> enum_multicompositions(Part n, std::size_t level,
                                                     std::size_t max_length) {
    std::vector<MultiComposition> out;
    std::map<Part, std::vector<Composition>> cache;
    for (const auto& split : weak_splits(n, level)) {
        std::vector<std::vector<Composition>> choices;
        for (Part k : split) {
            auto it = cache.find(k);
            if (it == cache.end())
                it = cache.emplace(k, enum_compositions(k, max_length)).first;
            choices.push_back(it->second);
        }
        product_over_components(choices, [&out](const std::vector<Composition>& comps) {
            out.emplace_back(comps);
        });
    }
    return out;
}

std::vector<MultiPartition> enum_multipartitions(Part n, std::size_t level) {
    std::vector<MultiPartition> out;
    std::map<Part, std::vector<Partition>> cache;
    for (const auto& split : weak_splits(n, level)) {
        std::vector<std::vector<Partition>> choices;
        for (Part k : split) {
            auto it = cache.find(k);
            if (it == cache.end())
                it = cache.emplace(k, enum_partitions(k)).first;
            choices.push_back(it->second);
        }
        product_over_components(choices, [&out](const std::vector<Partition>& parts) {
            out.emplace_back(parts);
        });
    }
    return out;
}

// --- block matrices -----------------------------------------------------------

namespace {

// One scalar row (or column) of the flattened block matrix: block index,
// index inside the block, and the prescribed sum.
struct Line {
    std::size_t block;
    std::size_t index;
    Part target;
};

std::vector<Line> flatten_lines(const MultiComposition& sums) {
    std::vector<Line> out;
    for (std::size_t b = 0; b < sums.level(); ++b) {
        const auto& parts = sums[b].parts();
        for (std::size_t k = 0; k < parts.size(); ++k)
            out.push_back({b + 1, k + 1, parts[k]});
    }
    return out;
}

bool compatible(const MultiComposition& nu, const MultiComposition& mu) {
    return nu.level() == mu.level() && nu.weight() == mu.weight();
}

} // namespace

void for_each_parmat(const MultiComposition& nu, const MultiComposition& mu,
                     const Visitor<ParMatFlat>& fn) {
    if (nu.level() != mu.level())
        throw ValidationError("row and column sums have different levels");
    if (nu.weight() != mu.weight())
        throw ValidationError("row and column sums have different weights");

    const std::size_t level = nu.level();
    const auto rows = flatten_lines(nu);
    const auto cols = flatten_lines(mu);
    std::vector<Part> row_left(rows.size());
    std::vector<Part> col_left(cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        row_left[r] = rows[r].target;
    for (std::size_t c = 0; c < cols.size(); ++c)
        col_left[c] = cols[c].target;

    std::vector<Part> cells(rows.size() * cols.size(), 0);
    std::map<std::pair<std::size_t, Part>, std::vector<Partition>> box_cache;
    auto box = [&box_cache](std::size_t max_length, Part max_part) -> const std::vector<Partition>& {
        auto key = std::make_pair(max_length, max_part);
        auto it = box_cache.find(key);
        if (it == box_cache.end())
            it = box_cache.emplace(key, partitions_in_box(max_length, max_part)).first;
        return it->second;
    };

    auto decorate = [&]() {
        struct Slot {
            EntryKey key;
            Part value;
            const std::vector<Partition>* options;
        };
        std::vector<Slot> slots;
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const Part a = cells[r * cols.size() + c];
                if (a == 0)
                    continue;
                EntryKey key{rows[r].block, cols[c].block, rows[r].index, cols[c].index};
                slots.push_back({key, a, &box(std::min(key.p, key.q) - 1, a)});
            }
        ParMatFlat x(level);
        auto go = [&](auto&& self, std::size_t pos) -> void {
            if (pos == slots.size()) {
                fn(x);
                return;
            }
            for (const auto& eta : *slots[pos].options) {
                x.set(slots[pos].key, slots[pos].value, eta);
                self(self, pos + 1);
            }
        };
        go(go, 0);
    };

    if (rows.empty() || cols.empty()) {
        decorate();
        return;
    }

    auto fill = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == rows.size()) {
            decorate();
            return;
        }
        const bool last_col = c + 1 == cols.size();
        const Part hi = std::min(row_left[r], col_left[c]);
        const Part lo = last_col ? row_left[r] : 0;
        for (Part v = lo; v <= hi; ++v) {
            cells[r * cols.size() + c] = v;
            row_left[r] -= v;
            col_left[c] -= v;
            if (last_col)
                self(self, r + 1, 0);
            else
                self(self, r, c + 1);
            row_left[r] += v;
            col_left[c] += v;
        }
        cells[r * cols.size() + c] = 0;
    };
    fill(fill, 0, 0);
}

std::vector<ParMatFlat> enum_parmat(const MultiComposition& nu, const MultiComposition& mu) {
    std::vector<ParMatFlat> out;
    for_each_parmat(nu, mu, [&out](const ParMatFlat& x) { out.push_back(x); });
    return out;
}

void for_each_bcm(const MultiComposition& nu, const MultiComposition& mu,
                  const Visitor<FlaggedBCM>& fn) {
    if (!compatible(nu, mu))
        return;
    const std::size_t level = nu.level();
    const auto rows = flatten_lines(nu);
    const auto cols = flatten_lines(mu);
    std::vector<Part> row_left(rows.size());
    std::vector<Part> col_left(cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        row_left[r] = rows[r].target;
    for (std::size_t c = 0; c < cols.size(); ++c)
        col_left[c] = cols[c].target;

    std::map<std::pair<Part, std::size_t>, std::vector<Composition>> comp_cache;
    auto comps = [&comp_cache](Part weight, std::size_t max_length) -> const std::vector<Composition>& {
        auto key = std::make_pair(weight, max_length);
        auto it = comp_cache.find(key);
        if (it == comp_cache.end())
            it = comp_cache.emplace(key, enum_compositions(weight, max_length)).first;
        return it->second;
    };

    FlaggedBCM current(level);
    if (rows.empty() || cols.empty()) {
        fn(current);
        return;
    }

    auto fill = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == rows.size()) {
            fn(current);
            return;
        }
        const bool last_col = c + 1 == cols.size();
        const EntryKey key{rows[r].block, cols[c].block, rows[r].index, cols[c].index};
        const std::size_t max_length = std::min(key.p, key.q);
        const Part hi = std::min(row_left[r], col_left[c]);
        const Part lo = last_col ? row_left[r] : 0;
        for (Part w = lo; w <= hi; ++w) {
            row_left[r] -= w;
            col_left[c] -= w;
            for (const auto& b : comps(w, max_length)) {
                current.set(key, b);
                if (last_col)
                    self(self, r + 1, 0);
                else
                    self(self, r, c + 1);
            }
            row_left[r] += w;
            col_left[c] += w;
        }
        current.set(key, Composition{});
    };
    fill(fill, 0, 0);
}

std::vector<FlaggedBCM> enum_bcm(const MultiComposition& nu, const MultiComposition& mu) {
    std::vector<FlaggedBCM> out;
    for_each_bcm(nu, mu, [&out](const FlaggedBCM& x) { out.push_back(x); });
    return out;
}

// --- flagged biwords ----------------------------------------------------------

void for_each_flagged_biword(const MultiComposition& nu, const MultiComposition& mu,
                             const Visitor<FlaggedBiword>& fn) {
    if (!compatible(nu, mu))
        return;
    const std::size_t level = nu.level();
    const auto top_alphabet = mu_alphabet(nu);
    const std::vector<std::pair<Letter, std::size_t>> tops(top_alphabet.begin(), top_alphabet.end());
    const auto bottom_alphabet = mu_alphabet(mu);
    std::vector<Letter> bottoms;
    std::vector<std::size_t> bottom_left;
    for (const auto& [y, mult] : bottom_alphabet) {
        bottoms.push_back(y);
        bottom_left.push_back(mult);
    }

    // A biletter placement: component t, bottom letter index, and how many copies.
    struct Placement {
        std::size_t component;
        Letter top;
        Letter bottom;
        std::size_t count;
    };
    std::vector<Placement> placed;

    auto emit = [&]() {
        std::vector<std::vector<LetterBiLetter>> columns(level);
        for (const auto& pl : placed)
            columns[pl.component - 1].insert(columns[pl.component - 1].end(), pl.count,
                                             LetterBiLetter{pl.top, pl.bottom});
        std::vector<LetterBiword> comps;
        comps.reserve(level);
        for (auto& cols : columns)
            comps.push_back(LetterBiword::from_unsorted(std::move(cols)));
        fn(FlaggedBiword(std::move(comps)));
    };

    // options for a top letter: (bottom index, component) pairs allowed by flagging
    auto options_for = [&](const Letter& x) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t y = 0; y < bottoms.size(); ++y)
            for (std::size_t t = 1; t <= std::min<std::size_t>(x.flag, bottoms[y].flag); ++t)
                out.emplace_back(y, t);
        return out;
    };
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> options;
    options.reserve(tops.size());
    for (const auto& [x, mult] : tops)
        options.push_back(options_for(x));

    auto go = [&](auto&& self, std::size_t top_idx, std::size_t opt_idx, std::size_t left) -> void {
        if (top_idx == tops.size()) {
            emit();
            return;
        }
        if (left == 0) {
            const std::size_t next = top_idx + 1;
            self(self, next, 0, next < tops.size() ? tops[next].second : 0);
            return;
        }
        if (opt_idx == options[top_idx].size())
            return;
        const auto [y, t] = options[top_idx][opt_idx];
        const std::size_t hi = std::min(left, bottom_left[y]);
        for (std::size_t k = 0; k <= hi; ++k) {
            if (k > 0)
                placed.push_back({t, tops[top_idx].first, bottoms[y], k});
            bottom_left[y] -= k;
            self(self, top_idx, opt_idx + 1, left - k);
            bottom_left[y] += k;
            if (k > 0)
                placed.pop_back();
        }
    };
    go(go, 0, 0, tops.empty() ? 0 : tops[0].second);
}

std::vector<FlaggedBiword> enum_flagged_biwords(const MultiComposition& nu,
                                                const MultiComposition& mu) {
    std::vector<FlaggedBiword> out;
    for_each_flagged_biword(nu, mu, [&out](const FlaggedBiword& w) { out.push_back(w); });
    return out;
}

// --- semistandard multitableaux -----------------------------------------------

void for_each_sst(const MultiPartition& lambda, const MultiComposition& mu,
                  const Visitor<Multitableau>& fn) {
    if (lambda.level() != mu.level() || lambda.weight() != mu.weight())
        return;
    const std::size_t level = lambda.level();
    const auto alphabet = mu_alphabet(mu);
    const std::vector<std::pair<Letter, std::size_t>> letters(alphabet.begin(), alphabet.end());

    // rows[i][r] holds row r of component i
    std::vector<std::vector<std::vector<Letter>>> rows(level);
    for (std::size_t i = 0; i < level; ++i)
        rows[i].resize(lambda[i].length());

    auto emit = [&]() {
        std::vector<Tableau> comps;
        comps.reserve(level);
        for (const auto& comp : rows)
            comps.emplace_back(comp);
        fn(Multitableau(std::move(comps)));
    };

    // Letters are placed in increasing order. The cells holding one letter form
    // a horizontal strip in each component; rows are visited bottom-up so the
    // row above still has its pre-strip length when it serves as a bound.
    auto place = [&](auto&& self, std::size_t letter_idx, std::size_t comp, std::size_t row_from_bottom,
                     std::size_t left) -> void {
        if (letter_idx == letters.size()) {
            emit();
            return;
        }
        const Letter x = letters[letter_idx].first;
        const std::size_t max_comp = std::min<std::size_t>(x.flag, level);
        if (comp == max_comp) {
            if (left != 0)
                return;
            const std::size_t next = letter_idx + 1;
            self(self, next, 0, 0, next < letters.size() ? letters[next].second : 0);
            return;
        }
        auto& comp_rows = rows[comp];
        if (row_from_bottom == comp_rows.size()) {
            self(self, letter_idx, comp + 1, 0, left);
            return;
        }
        const std::size_t r = comp_rows.size() - 1 - row_from_bottom;
        const std::size_t cap_shape = lambda[comp].parts()[r];
        const std::size_t cap_strip = r == 0 ? cap_shape : comp_rows[r - 1].size();
        const std::size_t current = comp_rows[r].size();
        const std::size_t cap = std::min(cap_shape, cap_strip);
        const std::size_t hi = current < cap ? std::min(cap - current, left) : 0;
        for (std::size_t d = 0; d <= hi; ++d) {
            comp_rows[r].insert(comp_rows[r].end(), d, x);
            self(self, letter_idx, comp, row_from_bottom + 1, left - d);
            comp_rows[r].resize(current);
        }
    };
    place(place, 0, 0, 0, letters.empty() ? 0 : letters[0].second);
}

std::vector<Multitableau> enum_sst(const MultiPartition& lambda, const MultiComposition& mu) {
    std::vector<Multitableau> out;
    for_each_sst(lambda, mu, [&out](const Multitableau& t) { out.push_back(t); });
    return out;
}

} // namespace lrsk
