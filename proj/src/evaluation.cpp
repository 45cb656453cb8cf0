#include "wmnca/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace wmnca {

CaSequence CaSequence::rank(const std::vector<std::pair<std::string, double>>& values,
                            Direction direction) {
    if (values.size() < 2) throw std::invalid_argument("need >= 2 CAs");
    {
        std::set<std::string> seen;
        for (const auto& [label, value] : values) {
            if (!seen.insert(label).second)
                throw std::invalid_argument("duplicate label: " + label);
            if (!std::isfinite(value))
                throw std::invalid_argument("non-finite value for label: " + label);
        }
    }

    // Ascending performance: ascending value when higher is better,
    // descending value otherwise (performance ~ 1/estimate).
    std::vector<std::pair<std::string, double>> sorted = values;
    std::sort(sorted.begin(), sorted.end(), [&](const auto& l, const auto& r) {
        double lv = direction == Direction::HigherIsBetter ? l.second : -l.second;
        double rv = direction == Direction::HigherIsBetter ? r.second : -r.second;
        if (lv != rv) return lv < rv;
        return l.first < r.first;
    });

    CaSequence seq;
    int group = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && sorted[i].second != sorted[i - 1].second) ++group;
        seq.labels_.push_back(sorted[i].first);
        seq.groups_.push_back(group);
    }
    return seq;
}

CaSequence CaSequence::from_order(const std::vector<std::string>& labels) {
    if (labels.size() < 2) throw std::invalid_argument("need >= 2 CAs");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw std::invalid_argument("duplicate label in order");
    CaSequence seq;
    seq.labels_ = labels;
    seq.groups_.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) seq.groups_[i] = static_cast<int>(i);
    return seq;
}

int CaSequence::group_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return groups_[i];
    throw std::invalid_argument("label not in sequence: " + label);
}

bool CaSequence::has_ties() const {
    for (std::size_t i = 1; i < groups_.size(); ++i)
        if (groups_[i] == groups_[i - 1]) return true;
    return false;
}

CaSequence rank(const std::vector<std::pair<std::string, double>>& values, Direction direction) {
    return CaSequence::rank(values, direction);
}

namespace {
double tie_weight(TiePolicy p) {
    switch (p) {
        case TiePolicy::Half: return 0.5;
        case TiePolicy::Full: return 1.0;
        case TiePolicy::None: return 0.0;
    }
    return 0.5;
}
}  // namespace

DiscordanceReport compare_sequences(const CaSequence& reference, const CaSequence& predicted,
                                    TiePolicy ties) {
    const auto& labels = reference.labels();
    {
        std::set<std::string> ref_set(labels.begin(), labels.end());
        std::set<std::string> pred_set(predicted.labels().begin(), predicted.labels().end());
        if (ref_set != pred_set)
            throw std::invalid_argument("sequences do not cover the same label set");
    }

    DiscordanceReport report;
    const std::size_t n = labels.size();
    report.total_comparisons = static_cast<long long>(n) * static_cast<long long>(n - 1) / 2;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::string& a = labels[i];
            const std::string& b = labels[j];
            int ref_cmp = reference.group_of(a) - reference.group_of(b);
            int pred_cmp = predicted.group_of(a) - predicted.group_of(b);
            if (ref_cmp == 0 && pred_cmp == 0) continue;
            if (ref_cmp == 0 || pred_cmp == 0) {
                report.eis += tie_weight(ties);
                report.tied_pairs.emplace_back(a, b);
            } else if ((ref_cmp < 0) != (pred_cmp < 0)) {
                report.eis += 1.0;
                report.discordant_pairs.emplace_back(a, b);
            }
        }
    }
    report.doc_percent = doc(report.eis, static_cast<int>(n));
    return report;
}

double eis(const CaSequence& reference, const CaSequence& predicted, TiePolicy ties) {
    return compare_sequences(reference, predicted, ties).eis;
}

double doc(double eis_value, int n) {
    if (n < 2) throw std::invalid_argument("need >= 2 CAs");
    const double total = static_cast<double>(n) * (n - 1) / 2.0;
    if (eis_value < 0 || eis_value > total)
        throw std::invalid_argument("eis must lie in [0, nC2]");
    return (1.0 - eis_value / total) * 100.0;
}

}  // namespace wmnca
