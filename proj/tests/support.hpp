#pragma once

#include "lrsk/bijections.hpp"
#include "lrsk/fixtures.hpp"
#include "lrsk/io.hpp"

#include <initializer_list>
#include <string_view>
#include <vector>

namespace lrsk::test {

inline Letter L(Part value, Part flag) { return Letter{value, flag}; }

inline MultiComposition mc(std::initializer_list<std::vector<Part>> comps) {
    std::vector<Composition> out;
    for (const auto& c : comps)
        out.emplace_back(c);
    return MultiComposition(std::move(out));
}

inline MultiPartition mp(std::initializer_list<std::vector<Part>> comps) {
    std::vector<Partition> out;
    for (const auto& c : comps)
        out.emplace_back(c);
    return MultiPartition(std::move(out));
}

inline Tableau tab(std::vector<std::vector<Letter>> rows) { return Tableau(std::move(rows)); }

inline LetterBiword bw(std::vector<Letter> top, std::vector<Letter> bottom) {
    std::vector<LetterBiLetter> cols;
    for (std::size_t k = 0; k < top.size(); ++k)
        cols.push_back({top[k], bottom[k]});
    return LetterBiword(std::move(cols));
}

template <class T>
T fixture(std::string_view name) {
    return std::get<T>(parse_document(embedded_fixture(name)).payload);
}

// nu and mu of the worked example: row and column sums of its block matrix.
inline MultiComposition example_nu() { return mc({{2, 1, 2}, {3}, {2, 3}}); }
inline MultiComposition example_mu() { return mc({{1, 3}, {3}, {2, 2, 2}}); }

} // namespace lrsk::test
