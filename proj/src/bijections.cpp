#include "lrsk/bijections.hpp"

#include <algorithm>
#include <set>

namespace lrsk {

namespace {

void require_no_messages(const std::vector<std::string>& messages, const std::string& what) {
    if (messages.empty())
        return;
    std::string msg = what + " is invalid:";
    for (const auto& m : messages)
        msg += "\n  " + m;
    throw ValidationError(msg);
}

void check_letter_flag(std::vector<std::string>& out, const Letter& x, std::size_t component,
                       std::size_t level, const std::string& where) {
    if (x.value < 1)
        out.push_back(where + ": letter " + to_string(x) + " has a zero value");
    if (x.flag < component)
        out.push_back(where + ": letter " + to_string(x) + " violates flagging in component " +
                      std::to_string(component));
    if (x.flag > level)
        out.push_back(where + ": letter " + to_string(x) + " has flag above level " +
                      std::to_string(level));
}

void check_multitableau(std::vector<std::string>& out, const Multitableau& t,
                        const std::string& name) {
    for (std::size_t c = 0; c < t.level(); ++c) {
        const auto& comp = t[c];
        const std::string where = name + "^(" + std::to_string(c + 1) + ")";
        if (!comp.is_semistandard())
            out.push_back(where + " is not semistandard");
        for (const auto& row : comp.rows())
            for (const auto& x : row)
                check_letter_flag(out, x, c + 1, t.level(), where);
    }
}

} // namespace

std::size_t FlaggedBiword::size() const noexcept {
    std::size_t n = 0;
    for (const auto& w : components_)
        n += w.size();
    return n;
}

MultiComposition FlaggedBiword::top_content() const {
    LetterMultiset all;
    for (const auto& w : components_)
        for (const auto& c : w.columns())
            ++all[c.top];
    return multicomposition_from_multiset(all, level());
}

MultiComposition FlaggedBiword::bottom_content() const {
    LetterMultiset all;
    for (const auto& w : components_)
        for (const auto& c : w.columns())
            ++all[c.bottom];
    return multicomposition_from_multiset(all, level());
}

std::vector<std::string> flagged_biword_violations(const FlaggedBiword& w) {
    std::vector<std::string> out;
    for (std::size_t t = 0; t < w.level(); ++t) {
        const std::string where = "w^(" + std::to_string(t + 1) + ")";
        for (const auto& c : w[t].columns()) {
            check_letter_flag(out, c.top, t + 1, w.level(), where);
            check_letter_flag(out, c.bottom, t + 1, w.level(), where);
        }
    }
    return out;
}

std::vector<std::string> flagged_biword_violations(const FlaggedBiword& w,
                                                   const MultiComposition& nu,
                                                   const MultiComposition& mu) {
    auto out = flagged_biword_violations(w);
    if (!out.empty())
        return out;
    if (w.top_content() != nu)
        out.push_back("top rows have content " + to_string(w.top_content()) + ", expected " +
                      to_string(nu));
    if (w.bottom_content() != mu)
        out.push_back("bottom rows have content " + to_string(w.bottom_content()) + ", expected " +
                      to_string(mu));
    return out;
}

MultiPartition TableauPair::shape() const {
    auto p = insertion.shape();
    auto q = recording.shape();
    if (p != q)
        throw ValidationError("tableau pair shapes differ: " + to_string(p) + " vs " + to_string(q));
    return p;
}

std::vector<std::string> tableau_pair_violations(const TableauPair& x) {
    std::vector<std::string> out;
    if (x.insertion.level() != x.recording.level()) {
        out.push_back("P has level " + std::to_string(x.insertion.level()) + " but Q has level " +
                      std::to_string(x.recording.level()));
        return out;
    }
    for (std::size_t c = 0; c < x.level(); ++c) {
        const auto& p = x.insertion[c].rows();
        const auto& q = x.recording[c].rows();
        bool same = p.size() == q.size();
        for (std::size_t r = 0; same && r < p.size(); ++r)
            same = p[r].size() == q[r].size();
        if (!same)
            out.push_back("component " + std::to_string(c + 1) + ": P and Q have different shapes");
    }
    check_multitableau(out, x.insertion, "P");
    check_multitableau(out, x.recording, "Q");
    return out;
}

FlaggedBCM parmat_to_bcm(const ParMatFlat& x) {
    require_valid(validate_parmat(x), "ParMat");
    FlaggedBCM out(x.level());
    for (const auto& [k, a] : x.matrix().entries())
        out.set(k, partition_to_bounded_composition(x.decoration(k), a));
    return out;
}

ParMatFlat bcm_to_parmat(const FlaggedBCM& x) {
    require_valid(validate_bcm(x), "block composition matrix");
    ParMatFlat out(x.level());
    for (const auto& [k, c] : x.entries()) {
        auto [a, eta] = bounded_composition_to_partition(c);
        out.set(k, a, std::move(eta));
    }
    return out;
}

FlaggedBiword bcm_to_biwords(const FlaggedBCM& x) {
    require_valid(validate_bcm(x), "block composition matrix");
    std::vector<std::vector<LetterBiLetter>> columns(x.level());
    for (const auto& [k, c] : x.entries()) {
        const LetterBiLetter biletter{Letter{static_cast<Part>(k.i), static_cast<Part>(k.p)},
                                      Letter{static_cast<Part>(k.j), static_cast<Part>(k.q)}};
        for (std::size_t t = 1; t <= c.length(); ++t)
            columns[t - 1].insert(columns[t - 1].end(), c.part(t), biletter);
    }
    std::vector<LetterBiword> comps;
    comps.reserve(columns.size());
    for (auto& cols : columns)
        comps.push_back(LetterBiword::from_unsorted(std::move(cols)));
    return FlaggedBiword(std::move(comps));
}

FlaggedBCM biwords_to_bcm(const FlaggedBiword& w) {
    require_no_messages(flagged_biword_violations(w), "flagged biword");
    std::map<EntryKey, std::vector<Part>> counts;
    for (std::size_t t = 1; t <= w.level(); ++t) {
        for (const auto& c : w[t - 1].columns()) {
            auto& parts = counts[EntryKey{c.top.flag, c.bottom.flag, c.top.value, c.bottom.value}];
            if (parts.size() < t)
                parts.resize(t, 0);
            ++parts[t - 1];
        }
    }
    FlaggedBCM out(w.level());
    for (auto& [k, parts] : counts)
        out.set(k, Composition(std::move(parts)));
    return out;
}

TableauPair biwords_to_tableaux(const FlaggedBiword& w) {
    require_no_messages(flagged_biword_violations(w), "flagged biword");
    std::vector<Tableau> p;
    std::vector<Tableau> q;
    p.reserve(w.level());
    q.reserve(w.level());
    for (const auto& comp : w.components()) {
        auto pair = rsk(comp);
        p.push_back(std::move(pair.insertion));
        q.push_back(std::move(pair.recording));
    }
    TableauPair out{Multitableau(std::move(p)), Multitableau(std::move(q))};
    // validates that every component shape is a partition and P, Q agree
    (void)out.shape();
    return out;
}

FlaggedBiword tableaux_to_biwords(const TableauPair& x) {
    require_no_messages(tableau_pair_violations(x), "tableau pair");
    std::vector<LetterBiword> comps;
    comps.reserve(x.level());
    for (std::size_t t = 0; t < x.level(); ++t)
        comps.push_back(rsk_inverse(x.insertion[t], x.recording[t]));
    return FlaggedBiword(std::move(comps));
}

TableauPair psi(const ParMatFlat& x) {
    return biwords_to_tableaux(bcm_to_biwords(parmat_to_bcm(x)));
}

ParMatFlat psi_inverse(const TableauPair& x) {
    return bcm_to_parmat(biwords_to_bcm(tableaux_to_biwords(x)));
}

ComponentRelabeling component_relabeling(const MultiComposition& nu, const MultiComposition& mu,
                                         std::size_t t) {
    auto collect = [t](const MultiComposition& alphabet) {
        std::set<Letter> letters;
        for (const auto& [x, mult] : mu_alphabet(alphabet))
            if (x.flag >= t)
                letters.insert(x);
        return rank_letters(letters);
    };
    return {collect(nu), collect(mu)};
}

RelabeledRsk relabeled_component_rsk(const FlaggedBiword& w, const MultiComposition& nu,
                                     const MultiComposition& mu, std::size_t t) {
    const auto labels = component_relabeling(nu, mu, t);
    RelabeledRsk out;
    out.word = relabel(w[t - 1], labels.top, labels.bottom);
    out.integer_tableaux = rsk(out.word);
    out.tableaux.insertion = relabel(out.integer_tableaux.insertion, invert_map(labels.bottom));
    out.tableaux.recording = relabel(out.integer_tableaux.recording, invert_map(labels.top));
    return out;
}

MultiComposition embed_level(const MultiComposition& mu, std::size_t level) {
    auto comps = mu.components();
    if (level < comps.size())
        throw ValidationError("cannot embed into a lower level");
    comps.resize(level);
    return MultiComposition(std::move(comps));
}

ParMatFlat embed_level(const ParMatFlat& x, std::size_t level) {
    if (level < x.level())
        throw ValidationError("cannot embed into a lower level");
    ParMatFlat out(level);
    for (const auto& [k, a] : x.matrix().entries())
        out.set(k, a, x.decoration(k));
    for (const auto& [k, eta] : x.decorations())
        if (x.value(k) == 0)
            out.set(k, 0, eta);
    return out;
}

TableauPair embed_level(const TableauPair& x, std::size_t level) {
    if (level < x.level())
        throw ValidationError("cannot embed into a lower level");
    auto p = x.insertion.components();
    auto q = x.recording.components();
    p.resize(level);
    q.resize(level);
    return {Multitableau(std::move(p)), Multitableau(std::move(q))};
}

} // namespace lrsk
