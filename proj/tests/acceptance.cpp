// Runs the seven acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is 0 only when all of them pass.

#include "lrsk/bijections.hpp"
#include "lrsk/enumerate.hpp"
#include "lrsk/fixtures.hpp"
#include "lrsk/io.hpp"
#include "lrsk/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace lrsk;

namespace {

// Sweep budgets: every level and weight up to the bound, over multicompositions
// whose components have at most two parts or no zero parts.
const EnumerationBudget kSmallWeights{4, 3, 2};
const EnumerationBudget kLargeWeights{6, 2, 2};

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Criterion {
public:
    explicit Criterion(Outcome& out) : out_(out) {}

    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok)
            return;
        if (out_.pass)
            out_.detail = "first failure: " + what;
        out_.pass = false;
    }

    std::size_t checks() const { return checks_; }

private:
    Outcome& out_;
    std::size_t checks_ = 0;
};

template <class T>
T fixture(std::string_view name) {
    return std::get<T>(parse_document(embedded_fixture(name)).payload);
}

Letter L(Part a, Part b) { return Letter{a, b}; }

Tableau tab(std::vector<std::vector<Letter>> rows) { return Tableau(std::move(rows)); }

LetterBiword bw(std::vector<Letter> top, std::vector<Letter> bottom) {
    std::vector<LetterBiLetter> cols;
    for (std::size_t k = 0; k < top.size(); ++k)
        cols.push_back({top[k], bottom[k]});
    return LetterBiword(std::move(cols));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Every N-matrix over {1,2,3}^2 with total at most 5.
std::vector<NMatrix<Part>> small_matrices() {
    std::vector<NMatrix<Part>> out;
    NMatrix<Part> a;
    std::function<void(int, Part)> go = [&](int cell, Part left) {
        if (cell == 9) {
            out.push_back(a);
            return;
        }
        for (Part v = 0; v <= left; ++v) {
            a.set(cell / 3 + 1, cell % 3 + 1, v);
            go(cell + 1, left - v);
        }
        a.set(cell / 3 + 1, cell % 3 + 1, 0);
    };
    go(0, 5);
    return out;
}

Outcome golden_examples() {
    Outcome out;
    Criterion c(out);
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto x = fixture<ParMatFlat>("example_parmat");
        const auto b = fixture<FlaggedBCM>("example_bcm");
        const auto w = fixture<FlaggedBiword>("example_biword");
        c.expect(parmat_to_bcm(x) == b, "(A,P) -> B");
        c.expect(bcm_to_parmat(b) == x, "B -> (A,P)");
        c.expect(bcm_to_biwords(b) == w, "B -> w");
        c.expect(biwords_to_bcm(w) == b, "w -> B");

        const std::vector<std::pair<Tableau, Tableau>> displayed{
            {tab({{L(1, 1), L(2, 1), L(2, 1), L(3, 3)}, {L(2, 1), L(1, 3)}}),
             tab({{L(1, 1), L(1, 1), L(2, 1), L(3, 1)}, {L(3, 1), L(2, 3)}})},
            {tab({{L(1, 2), L(1, 2), L(1, 2), L(2, 3)}, {L(3, 3)}}),
             tab({{L(1, 2), L(1, 2), L(1, 2), L(1, 3)}, {L(2, 3)}})},
            {tab({{L(1, 3), L(2, 3)}}), tab({{L(1, 3), L(2, 3)}})}};
        for (std::size_t t = 0; t < 3; ++t) {
            const auto pq = rsk(w[t]);
            c.expect(pq.insertion == displayed[t].first && pq.recording == displayed[t].second,
                     "rsk on w(" + std::to_string(t + 1) + ")");
        }
        const auto relabeled = relabeled_component_rsk(w, block_row_sum(x.matrix()),
                                                       block_col_sum(x.matrix()), 2);
        c.expect(relabeled.word == Biword<Part>({{1, 1}, {1, 1}, {1, 1}, {2, 4}, {3, 3}}) &&
                     relabeled.integer_tableaux.insertion == BasicTableau<Part>({{1, 1, 1, 3}, {4}}) &&
                     relabeled.integer_tableaux.recording == BasicTableau<Part>({{1, 1, 1, 2}, {3}}),
                 "integer relabeling of w(2)");

        const auto closing = fixture<TableauPair>("closing_tableau_pair");
        const std::vector<LetterBiword> closing_words{
            bw({L(1, 1), L(2, 1), L(2, 1), L(2, 1), L(1, 2)},
               {L(2, 1), L(1, 1), L(2, 1), L(2, 1), L(1, 1)}),
            bw({L(2, 2), L(1, 3)}, {L(1, 2), L(2, 3)}),
            bw({L(1, 3), L(2, 3), L(2, 3)}, {L(3, 3), L(1, 3), L(1, 3)})};
        for (std::size_t t = 0; t < 3; ++t)
            c.expect(rsk_inverse(closing.insertion[t], closing.recording[t]) == closing_words[t],
                     "rsk_inverse on closing component " + std::to_string(t + 1));
        const FlaggedBiword closing_w(closing_words);
        c.expect(closing_w == fixture<FlaggedBiword>("closing_biword"), "closing biword fixture");
        c.expect(biwords_to_bcm(closing_w) == fixture<FlaggedBCM>("closing_bcm"), "closing B");
        c.expect(psi_inverse(closing) == fixture<ParMatFlat>("closing_parmat"), "closing psi_inverse");
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    c.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
    if (out.pass)
        out.detail = std::to_string(c.checks()) + " checks in " + std::to_string(elapsed) + " s";
    return out;
}

std::string tally_text(const SweepReport& r, std::initializer_list<const char*> names) {
    std::ostringstream os;
    for (const char* name : names) {
        auto it = r.checks.find(name);
        const CheckTally t = it == r.checks.end() ? CheckTally{} : it->second;
        os << name << " " << t.run - t.failed << "/" << t.run << "; ";
    }
    return os.str();
}

Outcome from_sweep(const SweepReport& r, std::initializer_list<const char*> names) {
    Outcome out;
    for (const char* name : names) {
        auto it = r.checks.find(name);
        if (it == r.checks.end() || it->second.run == 0 || it->second.failed != 0)
            out.pass = false;
    }
    out.detail = tally_text(r, names) + std::to_string(r.cells) + " cells, " +
                 std::to_string(r.parmat_elements) + " ParMat elements";
    if (!out.pass)
        for (const auto& msg : r.failures)
            out.detail += "\n    " + msg;
    return out;
}

Outcome specialization() {
    Outcome out;
    Criterion c(out);
    std::size_t count = 0;
    for (const auto& a : small_matrices()) {
        ++count;
        const auto w = biword_from_matrix(a);
        const auto classical = rsk(w);
        const auto& [p, q] = classical;
        c.expect(p.content() == w.bottom_content() && q.content() == w.top_content(), "weight law");
        c.expect(p.shape() == q.shape() && p.size() == w.size(), "shape equality");
        const auto swapped = rsk(biword_from_matrix(a.transpose()));
        c.expect(swapped.insertion == q && swapped.recording == p, "transpose symmetry");

        ParMatFlat x(1);
        for (const auto& [key, v] : a.entries())
            x.set({1, 1, key.first, key.second}, static_cast<Part>(v));
        const auto pair = psi(x);
        bool same = pair.insertion[0].rows().size() == p.rows().size();
        for (std::size_t r = 0; same && r < p.rows().size(); ++r) {
            same = pair.insertion[0].rows()[r].size() == p.rows()[r].size();
            for (std::size_t k = 0; same && k < p.rows()[r].size(); ++k)
                same = pair.insertion[0].rows()[r][k] == Letter{p.rows()[r][k], 1} &&
                       pair.recording[0].rows()[r][k] == Letter{q.rows()[r][k], 1};
        }
        c.expect(same, "psi at level 1 differs from classical RSK");
    }
    if (out.pass)
        out.detail = std::to_string(count) + " matrices";
    return out;
}

Outcome restriction() {
    Outcome out;
    Criterion c(out);
    std::size_t count = 0;
    for (std::size_t level = 1; level <= 2; ++level)
        for (Part n = 0; n <= 4; ++n) {
            const auto domain = sweep_domain(n, level, kSmallWeights.max_length);
            for (const auto& nu : domain)
                for (const auto& mu : domain) {
                    const auto up_nu = embed_level(nu, level + 1);
                    const auto up_mu = embed_level(mu, level + 1);
                    const auto upper = enum_parmat(up_nu, up_mu);
                    const std::set<ParMatFlat> upper_set(upper.begin(), upper.end());
                    std::size_t lower_count = 0;
                    for_each_parmat(nu, mu, [&](const ParMatFlat& x) {
                        ++count;
                        ++lower_count;
                        const auto up = embed_level(x, level + 1);
                        c.expect(upper_set.count(up) == 1, "embedding left ParMat");
                        c.expect(psi(up) == embed_level(psi(x), level + 1),
                                 "psi does not commute with embedding at level " +
                                     std::to_string(level));
                    });
                    c.expect(lower_count == upper.size(), "embedding is not onto");
                }
        }
    if (out.pass)
        out.detail = std::to_string(count) + " instances embedded";
    return out;
}

Outcome local_round_trips() {
    Outcome out;
    Criterion c(out);
    std::size_t pairs = 0, compositions = 0, matrices = 0, fixtures = 0;
    for (Part a = 0; a <= 6; ++a)
        for (const auto& eta : partitions_in_box(6, a)) {
            ++pairs;
            c.expect(bounded_composition_to_partition(partition_to_bounded_composition(eta, a)) ==
                         BoundedPartition{a, eta},
                     "bounded partition round trip");
        }
    for (Part w = 0; w <= 6; ++w)
        for (const auto& comp : enum_compositions(w, 7)) {
            ++compositions;
            const auto [a, eta] = bounded_composition_to_partition(comp);
            c.expect(partition_to_bounded_composition(eta, a) == comp, "composition round trip");
        }
    for (const auto& a : small_matrices()) {
        ++matrices;
        c.expect(matrix_from_biword(biword_from_matrix(a)) == a, "matrix round trip");
    }
    for (const auto name : embedded_fixture_names()) {
        ++fixtures;
        const auto doc = parse_document(embedded_fixture(name));
        const auto text = serialize(doc);
        c.expect(parse_document(text) == doc && serialize(parse_document(text)) == text,
                 "serialization of " + std::string(name));
    }
    if (out.pass)
        out.detail = std::to_string(pairs) + " (eta,a) pairs, " + std::to_string(compositions) +
                     " compositions, " + std::to_string(matrices) + " matrices, " +
                     std::to_string(fixtures) + " fixtures";
    return out;
}

void print(int number, const char* title, const Outcome& o) {
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << number << " (" << title
              << "): " << o.detail << std::endl;
}

} // namespace

int main(int argc, char** argv) {
    unsigned threads = argc > 1 ? static_cast<unsigned>(std::stoul(argv[1])) : 0;
    bool all = true;
    auto report = [&](int number, const char* title, const Outcome& o) {
        print(number, title, o);
        all = all && o.pass;
    };

    report(1, "golden examples", golden_examples());

    const auto start = std::chrono::steady_clock::now();
    SweepReport sweep = run_sweep(kSmallWeights, threads);
    sweep.merge(run_sweep(kLargeWeights, threads));
    std::cout << "sweep " << kSmallWeights.to_string() << " and " << kLargeWeights.to_string()
              << " took " << seconds_since(start) << " s" << std::endl;

    report(2, "bijectivity sweep",
           from_sweep(sweep, {checks::kRoundTrip, checks::kInjectivity, checks::kImageCoverage,
                              checks::kBcmImage}));
    report(3, "cardinality identity",
           from_sweep(sweep, {checks::kCardinalityIdentity, checks::kChainCardinality}));
    report(4, "level one specialization", specialization());
    report(5, "restriction", restriction());
    report(6, "local round trips", local_round_trips());
    report(7, "flag preservation", from_sweep(sweep, {checks::kFlagging, checks::kBiwordImage}));
    return all ? 0 : 1;
}
