#include "support.hpp"

#include "lrsk/enumerate.hpp"

#include <doctest.h>

using namespace lrsk;
using namespace lrsk::test;

namespace {

FlaggedBiword example_w() {
    return FlaggedBiword({bw({L(1, 1), L(1, 1), L(2, 1), L(3, 1), L(3, 1), L(2, 3)},
                             {L(2, 1), L(2, 1), L(1, 3), L(1, 1), L(3, 3), L(2, 1)}),
                          bw({L(1, 2), L(1, 2), L(1, 2), L(1, 3), L(2, 3)},
                             {L(1, 2), L(1, 2), L(1, 2), L(3, 3), L(2, 3)}),
                          bw({L(1, 3), L(2, 3)}, {L(1, 3), L(2, 3)})});
}

TableauPair example_pq() {
    return {Multitableau({tab({{L(1, 1), L(2, 1), L(2, 1), L(3, 3)}, {L(2, 1), L(1, 3)}}),
                          tab({{L(1, 2), L(1, 2), L(1, 2), L(2, 3)}, {L(3, 3)}}),
                          tab({{L(1, 3), L(2, 3)}})}),
            Multitableau({tab({{L(1, 1), L(1, 1), L(2, 1), L(3, 1)}, {L(3, 1), L(2, 3)}}),
                          tab({{L(1, 2), L(1, 2), L(1, 2), L(1, 3)}, {L(2, 3)}}),
                          tab({{L(1, 3), L(2, 3)}})})};
}

} // namespace

TEST_CASE("fixtures agree with the hand-typed worked example") {
    CHECK(fixture<FlaggedBiword>("example_biword") == example_w());
    CHECK(fixture<TableauPair>("example_tableau_pair") == example_pq());
}

TEST_CASE("ParMat to BCM and back") {
    const auto x = fixture<ParMatFlat>("example_parmat");
    const auto b = fixture<FlaggedBCM>("example_bcm");
    CHECK(parmat_to_bcm(x) == b);
    CHECK(parmat_to_bcm(x).get({2, 2, 1, 1}) == Composition({0, 3}));
    CHECK(bcm_to_parmat(b) == x);
    CHECK(parmat_to_bcm(ParMatFlat(3)) == FlaggedBCM(3));
    CHECK(bcm_to_parmat(FlaggedBCM(2)) == ParMatFlat(2));

    FlaggedBCM single(3);
    single.set({3, 3, 1, 1}, Composition({0, 0, 1}));
    const auto y = bcm_to_parmat(single);
    CHECK(y.value({3, 3, 1, 1}) == 1);
    CHECK(y.decoration({3, 3, 1, 1}) == Partition({1, 1}));

    ParMatFlat level1(1);
    level1.set({1, 1, 1, 2}, 4);
    level1.set({1, 1, 2, 1}, 1);
    const auto b1 = parmat_to_bcm(level1);
    CHECK(b1.get({1, 1, 1, 2}) == Composition({4}));
    CHECK(b1.get({1, 1, 2, 1}) == Composition({1}));
}

TEST_CASE("ParMat to BCM rejects invalid input") {
    ParMatFlat bad(2);
    bad.set({1, 2, 1, 1}, 2, Partition({1}));
    CHECK_THROWS_AS(parmat_to_bcm(bad), ValidationError);
    FlaggedBCM bad_b(2);
    bad_b.set({1, 2, 1, 1}, Composition({0, 1}));
    CHECK_THROWS_AS(bcm_to_parmat(bad_b), ValidationError);
}

TEST_CASE("BCM to flagged biwords and back") {
    const auto b = fixture<FlaggedBCM>("example_bcm");
    CHECK(bcm_to_biwords(b) == example_w());
    CHECK(biwords_to_bcm(example_w()) == b);
    CHECK(bcm_to_biwords(FlaggedBCM(3)) == FlaggedBiword::empty(3));
    CHECK(biwords_to_bcm(FlaggedBiword::empty(3)) == FlaggedBCM(3));

    FlaggedBCM single(3);
    single.set({3, 3, 1, 2}, Composition({0, 1, 1}));
    const auto w = bcm_to_biwords(single);
    CHECK(w[0].empty());
    CHECK(w[1] == bw({L(1, 3)}, {L(2, 3)}));
    CHECK(w[2] == bw({L(1, 3)}, {L(2, 3)}));
    CHECK(biwords_to_bcm(w) == single);

    CHECK(biwords_to_bcm(fixture<FlaggedBiword>("closing_biword")) ==
          fixture<FlaggedBCM>("closing_bcm"));
}

TEST_CASE("flagged biword checks") {
    const auto w = example_w();
    CHECK(flagged_biword_violations(w).empty());
    CHECK(flagged_biword_violations(w, example_nu(), example_mu()).empty());
    CHECK_FALSE(flagged_biword_violations(w, example_mu(), example_nu()).empty());
    CHECK(w.top_content() == example_nu());
    CHECK(w.bottom_content() == example_mu());

    const FlaggedBiword unflagged({LetterBiword(), bw({L(1, 1)}, {L(1, 2)})});
    CHECK_FALSE(flagged_biword_violations(unflagged).empty());
    CHECK_THROWS_AS(biwords_to_bcm(unflagged), ValidationError);
    CHECK_THROWS_AS(biwords_to_tableaux(unflagged), ValidationError);
    const FlaggedBiword over_level({bw({L(1, 3)}, {L(1, 1)})});
    CHECK_FALSE(flagged_biword_violations(over_level).empty());
}

TEST_CASE("biwords to tableaux and back") {
    CHECK(biwords_to_tableaux(example_w()) == example_pq());
    CHECK(example_pq().shape() == mp({{4, 2}, {4, 1}, {2}}));
    CHECK(tableaux_to_biwords(example_pq()) == example_w());
    const auto empty = biwords_to_tableaux(FlaggedBiword::empty(2));
    CHECK(empty.shape() == mp({{}, {}}));
    CHECK(tableaux_to_biwords(empty) == FlaggedBiword::empty(2));

    const auto closing = fixture<TableauPair>("closing_tableau_pair");
    const auto w = tableaux_to_biwords(closing);
    CHECK(w == fixture<FlaggedBiword>("closing_biword"));
    CHECK(w[0] == bw({L(1, 1), L(2, 1), L(2, 1), L(2, 1), L(1, 2)},
                     {L(2, 1), L(1, 1), L(2, 1), L(2, 1), L(1, 1)}));
    CHECK(biwords_to_tableaux(w) == closing);
}

TEST_CASE("tableau pair checks") {
    CHECK(tableau_pair_violations(example_pq()).empty());
    TableauPair mismatch{Multitableau({tab({{L(1, 1), L(1, 1)}})}),
                         Multitableau({tab({{L(1, 1)}, {L(2, 1)}})})};
    CHECK_FALSE(tableau_pair_violations(mismatch).empty());
    CHECK_THROWS(mismatch.shape());
    CHECK_THROWS_AS(tableaux_to_biwords(mismatch), ValidationError);
    TableauPair unflagged{Multitableau({Tableau(), tab({{L(1, 1)}})}),
                          Multitableau({Tableau(), tab({{L(1, 2)}})})};
    CHECK_FALSE(tableau_pair_violations(unflagged).empty());
    CHECK_THROWS_AS(psi_inverse(unflagged), ValidationError);
}

TEST_CASE("psi on the worked examples") {
    const auto x = fixture<ParMatFlat>("example_parmat");
    const auto pq = psi(x);
    CHECK(pq == example_pq());
    CHECK(multitableau_content(pq.insertion) == example_mu());
    CHECK(multitableau_content(pq.recording) == example_nu());
    CHECK(psi_inverse(pq) == x);
    CHECK(psi(ParMatFlat(3)) == TableauPair{Multitableau::empty(3), Multitableau::empty(3)});
    CHECK(psi_inverse(TableauPair{Multitableau::empty(2), Multitableau::empty(2)}) == ParMatFlat(2));

    const auto closing = fixture<TableauPair>("closing_tableau_pair");
    const auto y = psi_inverse(closing);
    CHECK(y == fixture<ParMatFlat>("closing_parmat"));
    CHECK(parmat_to_bcm(y) == fixture<FlaggedBCM>("closing_bcm"));
    CHECK(y.row_sum() == mc({{1, 3}, {1, 1}, {2, 2}}));
    CHECK(y.col_sum() == mc({{2, 3}, {1}, {2, 1, 1}}));
    CHECK(psi(y) == closing);
}

TEST_CASE("relabeled component RSK reproduces the integer display") {
    const auto r = relabeled_component_rsk(example_w(), example_nu(), example_mu(), 2);
    CHECK(r.word == Biword<Part>({{1, 1}, {1, 1}, {1, 1}, {2, 4}, {3, 3}}));
    CHECK(r.integer_tableaux.insertion == BasicTableau<Part>({{1, 1, 1, 3}, {4}}));
    CHECK(r.integer_tableaux.recording == BasicTableau<Part>({{1, 1, 1, 2}, {3}}));
    CHECK(r.tableaux.insertion == example_pq().insertion[1]);
    CHECK(r.tableaux.recording == example_pq().recording[1]);
    for (std::size_t t = 1; t <= 3; ++t) {
        const auto s = relabeled_component_rsk(example_w(), example_nu(), example_mu(), t);
        CHECK(s.tableaux == rsk(example_w()[t - 1]));
    }
}

TEST_CASE("level one psi is classical RSK on 2x2 matrices with total at most 4") {
    for (Part n = 0; n <= 4; ++n)
        for (const auto& nu : enum_multicompositions(n, 1, 2))
            for (const auto& mu : enum_multicompositions(n, 1, 2))
                for (const auto& x : enum_parmat(nu, mu)) {
                    NMatrix<Part> a;
                    for (const auto& [k, v] : x.matrix().entries())
                        a.set(static_cast<Part>(k.i), static_cast<Part>(k.j), v);
                    const auto classical = rsk(biword_from_matrix(a));
                    const auto pq = psi(x);
                    const auto to_int = [](const Tableau& t) {
                        std::vector<std::vector<Part>> rows;
                        for (const auto& row : t.rows()) {
                            rows.emplace_back();
                            for (const auto& letter : row)
                                rows.back().push_back(letter.value);
                        }
                        return BasicTableau<Part>(rows);
                    };
                    CHECK(to_int(pq.insertion[0]) == classical.insertion);
                    CHECK(to_int(pq.recording[0]) == classical.recording);
                }
}

TEST_CASE("embedding into a higher level commutes with psi") {
    const auto x = fixture<ParMatFlat>("example_parmat");
    CHECK(psi(embed_level(x, 4)) == embed_level(psi(x), 4));
    CHECK(embed_level(example_nu(), 4) == mc({{2, 1, 2}, {3}, {2, 3}, {}}));
    CHECK_THROWS(embed_level(example_nu(), 2));
}
