#include "wmnca/evaluation.hpp"

#include "wmnca/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace wmnca;

namespace {

// pairwise counter built independently of the library implementation
double brute_force_eis(const CaSequence& ref, const CaSequence& pred, TiePolicy ties) {
    const auto& labels = ref.labels();
    double total = 0.0;
    for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = a + 1; b < labels.size(); ++b) {
            int r = ref.group_of(labels[a]) - ref.group_of(labels[b]);
            int p = pred.group_of(labels[a]) - pred.group_of(labels[b]);
            if (r != 0 && p != 0) {
                if ((r < 0) != (p < 0)) total += 1.0;
            } else if (r != 0 || p != 0) {
                if (ties == TiePolicy::Half) total += 0.5;
                if (ties == TiePolicy::Full) total += 1.0;
            }
        }
    }
    return total;
}

const std::vector<std::string> kReference = {"CEN_C", "CLQ_C", "CEN_E", "CLQ_E", "BFS_C",
                                             "BFS_E", "MIS_C", "MIS_E", "GSCA"};
const std::vector<std::string> kTidOrder = {"BFS_E", "CLQ_C", "MIS_E", "BFS_C", "CEN_E",
                                            "CEN_C", "CLQ_E", "MIS_C", "GSCA"};
const std::vector<std::string> kCdalOrder = {"CEN_C", "CEN_E", "CLQ_C", "CLQ_E", "MIS_C",
                                             "BFS_E", "BFS_C", "MIS_E", "GSCA"};

}  // namespace

TEST_CASE("nine-label fixtures reproduce the reference discordance counts") {
    CaSequence ref = CaSequence::from_order(kReference);
    CaSequence tid = CaSequence::from_order(kTidOrder);
    CaSequence cdal = CaSequence::from_order(kCdalOrder);

    DiscordanceReport rt = compare_sequences(ref, tid);
    CHECK(rt.eis == doctest::Approx(15.0));
    CHECK(rt.total_comparisons == 36);
    CHECK(rt.doc_percent == doctest::Approx(58.33).epsilon(0.0002));
    CHECK(rt.discordant_pairs.size() == 15);
    CHECK(rt.tied_pairs.empty());

    DiscordanceReport rc = compare_sequences(ref, cdal);
    CHECK(rc.eis == doctest::Approx(4.0));
    CHECK(rc.total_comparisons == 36);
    CHECK(rc.doc_percent == doctest::Approx(88.89).epsilon(0.0002));
    CHECK(rc.discordant_pairs.size() == 4);
}

TEST_CASE("doc converts a discordance count into percent agreement") {
    CHECK(doc(4, 9) == doctest::Approx(88.89).epsilon(0.0002));
    CHECK(doc(15, 9) == doctest::Approx(58.33).epsilon(0.0002));
    CHECK(doc(12, 9) == doctest::Approx(66.67).epsilon(0.0002));
    CHECK(doc(7, 9) == doctest::Approx(80.55).epsilon(0.0002));
    CHECK(doc(0, 9) == doctest::Approx(100.0));
    CHECK(doc(36, 9) == doctest::Approx(0.0));
    CHECK(doc(0, 2) == doctest::Approx(100.0));

    CHECK_THROWS_AS(doc(-1, 9), std::invalid_argument);
    CHECK_THROWS_AS(doc(37, 9), std::invalid_argument);
    CHECK_THROWS_AS(doc(0, 1), std::invalid_argument);
}

TEST_CASE("rank orders by value and direction, ties broken lexicographically") {
    std::vector<std::pair<std::string, double>> values = {
        {"B", 2.0}, {"A", 1.0}, {"C", 3.0}};

    CaSequence lower = rank(values, Direction::LowerIsBetter);
    CHECK(lower.labels() == std::vector<std::string>{"C", "B", "A"});
    CHECK_FALSE(lower.has_ties());

    CaSequence higher = rank(values, Direction::HigherIsBetter);
    CHECK(higher.labels() == std::vector<std::string>{"A", "B", "C"});

    std::vector<std::pair<std::string, double>> tied = {
        {"B", 5.0}, {"A", 5.0}, {"C", 1.0}, {"D", 7.0}};
    CaSequence seq = rank(tied, Direction::HigherIsBetter);
    CHECK(seq.labels() == std::vector<std::string>{"C", "A", "B", "D"});
    CHECK(seq.has_ties());
    CHECK(seq.group_of("A") == seq.group_of("B"));
    CHECK(seq.group_of("C") < seq.group_of("A"));
    CHECK(seq.group_of("B") < seq.group_of("D"));

    CHECK_THROWS_AS(rank({{"A", 1.0}, {"A", 2.0}}, Direction::HigherIsBetter),
                    std::invalid_argument);
    CHECK_THROWS_AS(CaSequence::from_order({"A", "A"}), std::invalid_argument);
}

TEST_CASE("tie policies weight half-determined pairs differently") {
    CaSequence strict = CaSequence::from_order({"A", "B", "C"});
    CaSequence tied = rank({{"A", 1.0}, {"B", 1.0}, {"C", 2.0}}, Direction::HigherIsBetter);

    // (A,B) is strict in one sequence and tied in the other
    CHECK(eis(strict, tied, TiePolicy::Half) == doctest::Approx(0.5));
    CHECK(eis(strict, tied, TiePolicy::Full) == doctest::Approx(1.0));
    CHECK(eis(strict, tied, TiePolicy::None) == doctest::Approx(0.0));

    DiscordanceReport report = compare_sequences(strict, tied);
    CHECK(report.tied_pairs == std::vector<std::pair<std::string, std::string>>{{"A", "B"}});
    CHECK(report.discordant_pairs.empty());

    // tied in both sequences: concordant under every policy
    CaSequence tied2 = rank({{"A", 3.0}, {"B", 3.0}, {"C", 9.0}}, Direction::HigherIsBetter);
    for (TiePolicy p : {TiePolicy::Half, TiePolicy::Full, TiePolicy::None})
        CHECK(eis(tied, tied2, p) == doctest::Approx(0.0));
}

TEST_CASE("eis metric properties against the brute-force counter") {
    std::mt19937_64 rng(11);
    std::vector<std::string> base = {"a", "b", "c", "d", "e", "f", "g", "h"};
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t n = 2 + rand_below(rng, base.size() - 1);
        std::vector<std::string> labels(base.begin(), base.begin() + n);

        auto perm1 = labels, perm2 = labels, perm3 = labels;
        shuffle_vec(rng, perm1);
        shuffle_vec(rng, perm2);
        shuffle_vec(rng, perm3);
        CaSequence s1 = CaSequence::from_order(perm1);
        CaSequence s2 = CaSequence::from_order(perm2);
        CaSequence s3 = CaSequence::from_order(perm3);

        double d12 = eis(s1, s2);
        CHECK(d12 == doctest::Approx(brute_force_eis(s1, s2, TiePolicy::Half)));
        CHECK(eis(s1, s1) == doctest::Approx(0.0));                      // identity
        CHECK(eis(s2, s1) == doctest::Approx(d12));                      // symmetry
        CHECK(d12 <= eis(s1, s3) + eis(s3, s2) + 1e-9);                  // triangle

        // reversing both sequences flips every pair twice
        auto rev1 = perm1, rev2 = perm2;
        std::reverse(rev1.begin(), rev1.end());
        std::reverse(rev2.begin(), rev2.end());
        CHECK(eis(CaSequence::from_order(rev1), CaSequence::from_order(rev2)) ==
              doctest::Approx(d12));

        // reversing one sequence alone disagrees on all C(n,2) pairs
        CHECK(eis(s1, CaSequence::from_order(rev1)) ==
              doctest::Approx(static_cast<double>(n * (n - 1) / 2)));
    }
}

TEST_CASE("sequences over different label sets cannot be compared") {
    CaSequence a = CaSequence::from_order({"A", "B"});
    CaSequence b = CaSequence::from_order({"A", "C"});
    CaSequence c = CaSequence::from_order({"A", "B", "C"});
    CHECK_THROWS_AS(eis(a, b), std::invalid_argument);
    CHECK_THROWS_AS(eis(a, c), std::invalid_argument);
    CHECK_THROWS_AS(compare_sequences(a, b), std::invalid_argument);
    CHECK_THROWS_AS(a.group_of("Z"), std::invalid_argument);
}

TEST_CASE("discordant pair lists name the disagreeing labels") {
    CaSequence ref = CaSequence::from_order({"A", "B", "C"});
    CaSequence pred = CaSequence::from_order({"B", "A", "C"});
    DiscordanceReport report = compare_sequences(ref, pred);
    CHECK(report.eis == doctest::Approx(1.0));
    CHECK(report.discordant_pairs ==
          std::vector<std::pair<std::string, std::string>>{{"A", "B"}});
    CHECK(report.doc_percent == doctest::Approx(doc(1, 3)));
}
