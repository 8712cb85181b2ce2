#include "lrsk/verify.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace lrsk {

bool SweepReport::ok() const noexcept { return failure_count() == 0; }

std::size_t SweepReport::failure_count() const noexcept {
    std::size_t n = 0;
    for (const auto& [name, tally] : checks)
        n += tally.failed;
    return n;
}

void SweepReport::merge(const SweepReport& other) {
    cells += other.cells;
    parmat_elements += other.parmat_elements;
    for (const auto& [name, tally] : other.checks) {
        checks[name].run += tally.run;
        checks[name].failed += tally.failed;
    }
    for (const auto& msg : other.failures) {
        if (failures.size() >= kMaxMessages)
            break;
        failures.push_back(msg);
    }
}

namespace {

using SstTable = std::map<MultiPartition, std::set<Multitableau>>;

class CellChecker {
public:
    CellChecker(SweepReport& report, const MultiComposition& nu, const MultiComposition& mu)
        : report_(report), nu_(nu), mu_(mu) {}

    void record(const char* check, bool passed, const std::string& detail) {
        auto [it, fresh] = tallies_.try_emplace(check, nullptr);
        if (fresh)
            it->second = &report_.checks[check];
        auto& tally = *it->second;
        ++tally.run;
        if (passed)
            return;
        ++tally.failed;
        if (report_.failures.size() < SweepReport::kMaxMessages)
            report_.failures.push_back(std::string(check) + " nu=" + to_string(nu_) +
                                       " mu=" + to_string(mu_) + ": " + detail);
    }

private:
    SweepReport& report_;
    std::map<const char*, CheckTally*> tallies_;
    const MultiComposition& nu_;
    const MultiComposition& mu_;
};

std::size_t table_size(const SstTable& table, const MultiPartition& lambda) {
    auto it = table.find(lambda);
    return it == table.end() ? 0 : it->second.size();
}

bool table_contains(const SstTable& table, const MultiPartition& lambda, const Multitableau& t) {
    auto it = table.find(lambda);
    return it != table.end() && it->second.count(t) > 0;
}

void check_cell(SweepReport& report, const MultiComposition& nu, const MultiComposition& mu,
                const SstTable& nu_table, const SstTable& mu_table,
                const std::vector<MultiPartition>& shapes) {
    ++report.cells;
    CellChecker check(report, nu, mu);
    const Part n = nu.weight();

    std::size_t expected = 0;
    for (const auto& lambda : shapes)
        expected += table_size(mu_table, lambda) * table_size(nu_table, lambda);

    std::size_t bcm_raw = 0;
    std::set<FlaggedBCM> bcms;
    for_each_bcm(nu, mu, [&](const FlaggedBCM& b) {
        ++bcm_raw;
        bcms.insert(b);
    });
    std::size_t biword_raw = 0;
    std::set<FlaggedBiword> biwords;
    for_each_flagged_biword(nu, mu, [&](const FlaggedBiword& w) {
        ++biword_raw;
        biwords.insert(w);
    });

    std::size_t parmat_raw = 0;
    std::set<ParMatFlat> parmats;
    std::set<TableauPair> images;
    bool all_covered = true;
    for_each_parmat(nu, mu, [&](const ParMatFlat& x) {
        ++parmat_raw;
        ++report.parmat_elements;
        parmats.insert(x);
        try {
            const FlaggedBCM b = parmat_to_bcm(x);
            check.record(checks::kBcmImage, bcms.count(b) > 0 && validate_bcm(b, nu, mu).empty(),
                         "parmat_to_bcm left the enumerated BCM set");

            const FlaggedBiword w = bcm_to_biwords(b);
            check.record(checks::kBiwordImage,
                         biwords.count(w) > 0 && flagged_biword_violations(w, nu, mu).empty(),
                         "bcm_to_biwords left the enumerated flagged-biword set");

            const TableauPair pair = biwords_to_tableaux(w);
            const bool flags_ok = tableau_pair_violations(pair).empty() &&
                                  multitableau_content(pair.insertion) == mu &&
                                  multitableau_content(pair.recording) == nu &&
                                  pair.shape().weight() == n;
            check.record(checks::kFlagging, flags_ok, "output violates flagging or content");

            const MultiPartition lambda = pair.shape();
            const bool covered = table_contains(mu_table, lambda, pair.insertion) &&
                                 table_contains(nu_table, lambda, pair.recording);
            all_covered = all_covered && covered;

            check.record(checks::kInjectivity, images.insert(pair).second,
                         "two ParMat elements share an image");

            // psi_inverse is this chain; each hop is compared on the way back
            const FlaggedBiword w_back = tableaux_to_biwords(pair);
            const FlaggedBCM b_back = biwords_to_bcm(w_back);
            const bool round_trip = w_back == w && b_back == b && bcm_to_parmat(b_back) == x;
            check.record(checks::kRoundTrip, round_trip, "psi_inverse(psi(x)) != x");
        } catch (const std::exception& e) {
            check.record(checks::kRoundTrip, false, std::string("exception: ") + e.what());
        }
    });

    check.record(checks::kChainCardinality,
                 parmat_raw == parmats.size() && bcm_raw == bcms.size() &&
                     biword_raw == biwords.size() && parmat_raw == bcm_raw &&
                     parmat_raw == biword_raw,
                 "|ParMat|=" + std::to_string(parmat_raw) + " |BCM|=" + std::to_string(bcm_raw) +
                     " |BW|=" + std::to_string(biword_raw));
    check.record(checks::kCardinalityIdentity, parmat_raw == expected,
                 "|ParMat|=" + std::to_string(parmat_raw) + " but sum over shapes is " +
                     std::to_string(expected));
    check.record(checks::kImageCoverage, all_covered && images.size() == expected,
                 "image has " + std::to_string(images.size()) + " pairs, expected " +
                     std::to_string(expected));
}

} // namespace

std::vector<MultiComposition> sweep_domain(Part n, std::size_t level, std::size_t max_length) {
    auto out = enum_multicompositions(n, level, max_length);
    if (max_length >= n)
        return out;
    std::set<MultiComposition> seen(out.begin(), out.end());
    for (auto& mu : enum_multicompositions(n, level, n)) {
        bool zero_free = true;
        for (const auto& c : mu.components())
            zero_free = zero_free && std::find(c.parts().begin(), c.parts().end(), 0u) == c.parts().end();
        if (zero_free && seen.insert(mu).second)
            out.push_back(std::move(mu));
    }
    return out;
}

SweepReport sweep_level(std::size_t level, Part n, std::size_t max_length, unsigned threads) {
    const auto comps = sweep_domain(n, level, max_length);
    const auto shapes = enum_multipartitions(n, level);

    std::vector<SstTable> tables(comps.size());
    for (std::size_t k = 0; k < comps.size(); ++k)
        for (const auto& lambda : shapes)
            for_each_sst(lambda, comps[k], [&](const Multitableau& t) {
                tables[k][lambda].insert(t);
            });

    // one partial report per nu, merged in order so the result is deterministic
    std::vector<SweepReport> partial(comps.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t a = next++; a < comps.size(); a = next++)
            for (std::size_t b = 0; b < comps.size(); ++b)
                check_cell(partial[a], comps[a], comps[b], tables[a], tables[b], shapes);
    };
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, comps.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    SweepReport out;
    out.budget = EnumerationBudget{n, level, max_length};
    for (const auto& r : partial)
        out.merge(r);
    return out;
}

SweepReport run_sweep(const EnumerationBudget& budget, unsigned threads) {
    budget.validate();
    SweepReport out;
    out.budget = budget;
    for (std::size_t level = 1; level <= budget.max_level; ++level)
        for (Part n = 0; n <= budget.max_n; ++n)
            out.merge(sweep_level(level, n, budget.max_length, threads));
    return out;
}

} // namespace lrsk
