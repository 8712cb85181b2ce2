#include "lrsk/blocks.hpp"

#include <algorithm>

namespace lrsk {

namespace {

void check_key(const EntryKey& k, std::size_t level) {
    if (k.p < 1 || k.p > level || k.q < 1 || k.q > level)
        throw ValidationError("entry " + to_string(k) + " lies outside the " +
                              std::to_string(level) + "x" + std::to_string(level) + " block grid");
    if (k.i < 1 || k.j < 1)
        throw ValidationError("entry " + to_string(k) + " has a zero row or column index");
}

MultiComposition accumulate(const BlockNMatrix& a, bool by_row) {
    std::vector<std::vector<Part>> parts(a.level());
    for (const auto& [k, v] : a.entries()) {
        const std::size_t block = by_row ? k.p : k.q;
        const std::size_t index = by_row ? k.i : k.j;
        auto& comp = parts[block - 1];
        if (comp.size() < index)
            comp.resize(index, 0);
        comp[index - 1] += v;
    }
    std::vector<Composition> comps;
    comps.reserve(parts.size());
    for (auto& p : parts)
        comps.push_back(Composition::canonical(std::move(p)));
    return MultiComposition(std::move(comps));
}

void check_sums(std::vector<Violation>& out, const MultiComposition& row,
                const MultiComposition& col, const MultiComposition& nu,
                const MultiComposition& mu) {
    if (nu.level() != row.level() || mu.level() != col.level()) {
        out.push_back({std::nullopt, "prescribed sums have the wrong level"});
        return;
    }
    if (row != nu)
        out.push_back({std::nullopt, "row sum " + to_string(row) + " differs from " + to_string(nu)});
    if (col != mu)
        out.push_back({std::nullopt, "column sum " + to_string(col) + " differs from " + to_string(mu)});
}

} // namespace

std::string to_string(const EntryKey& k) {
    return "(p=" + std::to_string(k.p) + ",q=" + std::to_string(k.q) + ",i=" + std::to_string(k.i) +
           ",j=" + std::to_string(k.j) + ")";
}

std::string to_string(const Violation& v) {
    if (v.where)
        return to_string(*v.where) + ": " + v.message;
    return v.message;
}

Part BlockNMatrix::get(const EntryKey& k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? 0 : it->second;
}

void BlockNMatrix::set(const EntryKey& k, Part value) {
    check_key(k, level_);
    if (value == 0)
        entries_.erase(k);
    else
        entries_[k] = value;
}

Part BlockNMatrix::total() const noexcept {
    Part n = 0;
    for (const auto& [k, v] : entries_)
        n += v;
    return n;
}

MultiComposition block_row_sum(const BlockNMatrix& a) { return accumulate(a, true); }
MultiComposition block_col_sum(const BlockNMatrix& a) { return accumulate(a, false); }

Partition ParMatFlat::decoration(const EntryKey& k) const {
    auto it = decorations_.find(k);
    return it == decorations_.end() ? Partition{} : it->second;
}

void ParMatFlat::set(const EntryKey& k, Part value, Partition eta) {
    matrix_.set(k, value);
    if (eta.empty())
        decorations_.erase(k);
    else
        decorations_[k] = std::move(eta);
}

Composition FlaggedBCM::get(const EntryKey& k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? Composition{} : it->second;
}

void FlaggedBCM::set(const EntryKey& k, Composition c) {
    check_key(k, level_);
    if (c.empty())
        entries_.erase(k);
    else
        entries_[k] = std::move(c);
}

BlockNMatrix FlaggedBCM::weights() const {
    BlockNMatrix out(level_);
    for (const auto& [k, c] : entries_)
        out.set(k, c.weight());
    return out;
}

std::vector<Violation> validate_parmat(const ParMatFlat& x) {
    std::vector<Violation> out;
    for (const auto& [k, eta] : x.decorations()) {
        const Part a = x.value(k);
        if (eta.largest() > a)
            out.push_back({k, "decoration " + to_string(eta) + " has a part larger than the entry " +
                                  std::to_string(a)});
        const std::size_t max_len = std::min(k.p, k.q) - 1;
        if (eta.length() > max_len)
            out.push_back({k, "decoration " + to_string(eta) + " has length " +
                                  std::to_string(eta.length()) + " > min(p,q)-1 = " +
                                  std::to_string(max_len)});
    }
    return out;
}

std::vector<Violation> validate_parmat(const ParMatFlat& x, const MultiComposition& nu,
                                       const MultiComposition& mu) {
    auto out = validate_parmat(x);
    check_sums(out, x.row_sum(), x.col_sum(), nu, mu);
    return out;
}

std::vector<Violation> validate_bcm(const FlaggedBCM& x) {
    std::vector<Violation> out;
    for (const auto& [k, c] : x.entries()) {
        const std::size_t max_len = std::min(k.p, k.q);
        if (c.length() > max_len)
            out.push_back({k, "composition " + to_string(c) + " has length " +
                                  std::to_string(c.length()) + " > min(p,q) = " +
                                  std::to_string(max_len)});
    }
    return out;
}

std::vector<Violation> validate_bcm(const FlaggedBCM& x, const MultiComposition& nu,
                                    const MultiComposition& mu) {
    auto out = validate_bcm(x);
    check_sums(out, x.row_sum(), x.col_sum(), nu, mu);
    return out;
}

void require_valid(const std::vector<Violation>& violations, const std::string& what) {
    if (violations.empty())
        return;
    std::string msg = what + " is invalid:";
    for (const auto& v : violations)
        msg += "\n  " + to_string(v);
    throw ValidationError(msg);
}

} // namespace lrsk
