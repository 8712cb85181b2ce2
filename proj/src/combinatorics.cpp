#include "lrsk/combinatorics.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace lrsk {

namespace {

template <class Seq>
std::string join_parts(const Seq& parts) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k > 0)
            os << ',';
        os << parts[k];
    }
    os << ')';
    return os.str();
}

template <class Seq>
Part sum_parts(const Seq& parts) {
    return std::accumulate(parts.begin(), parts.end(), Part{0});
}

} // namespace

Composition::Composition(std::vector<Part> parts) : parts_(std::move(parts)) {
    if (!parts_.empty() && parts_.back() == 0)
        throw NonCanonicalComposition("composition " + join_parts(parts_) + " has a trailing zero");
}

Composition Composition::canonical(std::vector<Part> parts) {
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return Composition(std::move(parts));
}

Part Composition::weight() const noexcept { return sum_parts(parts_); }

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] == 0)
            throw InvalidPartition("partition " + join_parts(parts_) + " has a zero part");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw InvalidPartition("partition " + join_parts(parts_) + " is not weakly decreasing");
    }
}

Part Partition::weight() const noexcept { return sum_parts(parts_); }

Part MultiComposition::weight() const noexcept {
    Part n = 0;
    for (const auto& c : components_)
        n += c.weight();
    return n;
}

Part MultiPartition::weight() const noexcept {
    Part n = 0;
    for (const auto& p : components_)
        n += p.weight();
    return n;
}

std::size_t Multitableau::size() const noexcept {
    std::size_t n = 0;
    for (const auto& t : components_)
        n += t.size();
    return n;
}

MultiPartition Multitableau::shape() const {
    std::vector<Partition> parts;
    parts.reserve(components_.size());
    for (const auto& t : components_)
        parts.push_back(t.shape());
    return MultiPartition(std::move(parts));
}

LetterMultiset mu_alphabet(const MultiComposition& mu) {
    LetterMultiset out;
    for (std::size_t b = 0; b < mu.level(); ++b) {
        const auto& parts = mu[b].parts();
        for (std::size_t a = 0; a < parts.size(); ++a)
            if (parts[a] > 0)
                out[Letter{static_cast<Part>(a + 1), static_cast<Part>(b + 1)}] = parts[a];
    }
    return out;
}

std::vector<Letter> mu_alphabet_letters(const MultiComposition& mu) {
    std::vector<Letter> out;
    for (const auto& [x, mult] : mu_alphabet(mu))
        out.insert(out.end(), mult, x);
    return out;
}

MultiComposition multicomposition_from_multiset(const LetterMultiset& letters, std::size_t level) {
    std::vector<std::vector<Part>> parts(level);
    for (const auto& [x, mult] : letters) {
        if (mult == 0)
            continue;
        if (x.flag < 1 || x.flag > level)
            throw ValidationError("letter " + to_string(x) + " has flag outside level " +
                                  std::to_string(level));
        if (x.value < 1)
            throw ValidationError("letter " + to_string(x) + " has a zero value");
        auto& comp = parts[x.flag - 1];
        if (comp.size() < x.value)
            comp.resize(x.value, 0);
        comp[x.value - 1] += static_cast<Part>(mult);
    }
    std::vector<Composition> comps;
    comps.reserve(level);
    for (auto& p : parts)
        comps.push_back(Composition::canonical(std::move(p)));
    return MultiComposition(std::move(comps));
}

bool multitableau_check_flagging(const Multitableau& t) noexcept {
    for (std::size_t i = 0; i < t.level(); ++i)
        for (const auto& row : t[i].rows())
            for (const auto& x : row)
                if (x.flag < i + 1)
                    return false;
    return true;
}

bool multitableau_is_semistandard(const Multitableau& t) noexcept {
    for (const auto& comp : t.components())
        if (!comp.is_semistandard())
            return false;
    return multitableau_check_flagging(t);
}

MultiComposition multitableau_content(const Multitableau& t) {
    LetterMultiset all;
    for (const auto& comp : t.components())
        for (const auto& row : comp.rows())
            for (const auto& x : row)
                ++all[x];
    return multicomposition_from_multiset(all, t.level());
}

Composition partition_to_bounded_composition(const Partition& eta, Part bound) {
    if (eta.largest() > bound)
        throw BoundViolation("partition " + to_string(eta) + " has a part larger than " +
                             std::to_string(bound));
    if (bound == 0)
        return {};
    std::vector<Part> parts(eta.length() + 1);
    Part previous = bound;
    for (std::size_t t = 1; t <= parts.size(); ++t) {
        const Part current = eta.part(t);
        parts[t - 1] = previous - current;
        previous = current;
    }
    return Composition(std::move(parts));
}

BoundedPartition bounded_composition_to_partition(const Composition& c) {
    BoundedPartition out;
    out.bound = c.weight();
    if (c.empty())
        return out;
    std::vector<Part> eta;
    Part tail = 0;
    for (std::size_t t = c.length(); t >= 2; --t) {
        tail += c.parts()[t - 1];
        eta.push_back(tail);
    }
    // tail sums were produced from the back; reverse to get eta_1 >= eta_2 >= ...
    std::vector<Part> ordered(eta.rbegin(), eta.rend());
    out.eta = Partition(std::move(ordered));
    return out;
}

BoundedPartition bounded_composition_to_partition(const std::vector<Part>& parts) {
    return bounded_composition_to_partition(Composition(parts));
}

std::string to_string(const Letter& x) {
    return std::to_string(x.value) + "_" + std::to_string(x.flag);
}

std::string to_string(const Composition& c) { return join_parts(c.parts()); }
std::string to_string(const Partition& p) { return join_parts(p.parts()); }

std::string to_string(const MultiComposition& mu) {
    std::string out = "(";
    for (std::size_t b = 0; b < mu.level(); ++b) {
        if (b > 0)
            out += ',';
        out += to_string(mu[b]);
    }
    return out + ")";
}

std::string to_string(const MultiPartition& lambda) {
    std::string out = "(";
    for (std::size_t b = 0; b < lambda.level(); ++b) {
        if (b > 0)
            out += ',';
        out += to_string(lambda[b]);
    }
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Letter& x) { return os << to_string(x); }
std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << to_string(c); }
std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const MultiComposition& mu) { return os << to_string(mu); }
std::ostream& operator<<(std::ostream& os, const MultiPartition& lambda) {
    return os << to_string(lambda);
}

} // namespace lrsk
