#pragma once

#include <string>
#include <utility>
#include <vector>

namespace wmnca {

enum class Direction { HigherIsBetter, LowerIsBetter };

/// How a pair that is tied in one sequence but strict in the other is
/// counted. Half is the default: unbiased between the two strict
/// completions of the tie.
enum class TiePolicy { Half, Full, None };

/// Labels ordered by ascending performance, with tie groups. Labels whose
/// metric values compare equal share a group and their relative order
/// (lexicographic) carries no meaning.
class CaSequence {
  public:
    /// Orders labels by ascending performance under `direction`; ties are
    /// broken lexicographically and recorded as tie groups.
    static CaSequence rank(const std::vector<std::pair<std::string, double>>& values,
                           Direction direction);

    /// A strict sequence given directly in ascending-performance order.
    static CaSequence from_order(const std::vector<std::string>& labels);

    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    int group_of(const std::string& label) const;
    bool has_ties() const;

  private:
    std::vector<std::string> labels_;  // ascending performance
    std::vector<int> groups_;          // tie group per position, non-decreasing
};

/// Free-function form of CaSequence::rank.
CaSequence rank(const std::vector<std::pair<std::string, double>>& values, Direction direction);

/// EIS: number of unordered label pairs whose relative order differs
/// between the two sequences (Kendall-tau distance over orderings).
/// Pairs tied in exactly one sequence count per the tie policy; fractional
/// when ties are weighted by half.
double eis(const CaSequence& reference, const CaSequence& predicted,
           TiePolicy ties = TiePolicy::Half);

/// DoC = (1 - eis / C(n,2)) * 100.
double doc(double eis_value, int n);

struct DiscordanceReport {
    double eis{};
    long long total_comparisons{};
    double doc_percent{};
    std::vector<std::pair<std::string, std::string>> discordant_pairs;  // strict disagreements
    std::vector<std::pair<std::string, std::string>> tied_pairs;        // tied in exactly one
};

DiscordanceReport compare_sequences(const CaSequence& reference, const CaSequence& predicted,
                                    TiePolicy ties = TiePolicy::Half);

}  // namespace wmnca
