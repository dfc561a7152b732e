#include "necpres/scoring.hpp"

#include <algorithm>
#include <stdexcept>

namespace necpres {

void validate_family(const ScoringRuleFamily& family) {
    if (const auto* s = std::get_if<ShortRule>(&family)) {
        if (s->prefix.empty()) throw std::invalid_argument("short rule: empty prefix");
        for (size_t i = 0; i + 1 < s->prefix.size(); ++i)
            if (s->prefix[i] < s->prefix[i + 1])
                throw std::invalid_argument("short rule: prefix must be non-increasing");
        if (s->prefix.back() <= 0)
            throw std::invalid_argument("short rule: last prefix entry must be positive");
    } else if (const auto* v = std::get_if<VetoLikeRule>(&family)) {
        if (v->suffix.empty()) throw std::invalid_argument("veto-like rule: empty suffix");
        if (v->a <= v->suffix.front())
            throw std::invalid_argument("veto-like rule: a must exceed the first suffix entry");
        for (size_t i = 0; i + 1 < v->suffix.size(); ++i)
            if (v->suffix[i] < v->suffix[i + 1])
                throw std::invalid_argument("veto-like rule: suffix must be non-increasing");
        if (v->suffix.back() < 0)
            throw std::invalid_argument("veto-like rule: suffix entries must be non-negative");
    }
}

std::vector<std::int64_t> effective_vector(const ScoringRuleFamily& family, int m) {
    if (m < 1) throw std::invalid_argument("effective_vector: m must be >= 1");
    std::vector<std::int64_t> v(m, 0);
    if (std::holds_alternative<BordaRule>(family)) {
        for (int i = 0; i < m; ++i) v[i] = m - 1 - i;
    } else if (const auto* s = std::get_if<ShortRule>(&family)) {
        const int l = static_cast<int>(s->prefix.size());
        for (int i = 0; i < std::min(m, l); ++i) v[i] = s->prefix[i];
    } else {
        const auto& vl = std::get<VetoLikeRule>(family);
        const int l = static_cast<int>(vl.suffix.size());
        const int head = std::max(0, m - l);
        for (int i = 0; i < head; ++i) v[i] = vl.a;
        // when m <= l only the last m suffix entries apply
        const int skip = std::max(0, l - m);
        for (int i = head; i < m; ++i) v[i] = vl.suffix[skip + (i - head)];
    }
    return v;
}

int prefix_length(const ScoringRuleFamily& family, int m) {
    if (std::holds_alternative<BordaRule>(family)) return m;
    if (const auto* s = std::get_if<ShortRule>(&family))
        return std::min<int>(m, static_cast<int>(s->prefix.size()));
    return m;  // veto-like scores every position
}

std::int64_t ScoreTable::score_of(int candidate) const {
    for (size_t i = 0; i < nominees.size(); ++i)
        if (nominees[i] == candidate) return scores[i];
    throw std::invalid_argument("score_of: candidate is not a nominee");
}

ScoreTable positional_scores(const ReducedElection& reduced,
                             const std::vector<std::int64_t>& vector) {
    const int m = reduced.nominee_count();
    if (static_cast<int>(vector.size()) != m)
        throw std::invalid_argument("positional_scores: vector length must equal nominee count");
    ScoreTable table;
    table.nominees = reduced.nominees;
    table.scores.assign(m, 0);
    const auto& types = reduced.election().types;
    for (size_t t = 0; t < types.size(); ++t) {
        for (int i = 0; i < m; ++i) {
            const int c = reduced.nominees[i];
            table.scores[i] += types[t].count * vector[reduced.positions[t][c]];
        }
    }
    return table;
}

ScoreTable positional_scores(const ReducedElection& reduced, const ScoringRuleFamily& family) {
    const int m = reduced.nominee_count();
    ScoreTable table = positional_scores(reduced, effective_vector(family, m));
    if (const auto* s = std::get_if<ShortRule>(&family)) {
        if (m < static_cast<int>(s->prefix.size()))
            table.warnings.push_back("short prefix truncated: " + std::to_string(m) +
                                     " nominees < prefix length " +
                                     std::to_string(s->prefix.size()));
    } else if (const auto* v = std::get_if<VetoLikeRule>(&family)) {
        if (m <= static_cast<int>(v->suffix.size()))
            table.warnings.push_back("veto-like suffix truncated: " + std::to_string(m) +
                                     " nominees <= suffix length " +
                                     std::to_string(v->suffix.size()));
    }
    return table;
}

std::vector<int> score_winners(const ScoreTable& table) {
    if (table.nominees.empty()) throw std::invalid_argument("score_winners: empty table");
    const std::int64_t best = *std::max_element(table.scores.begin(), table.scores.end());
    std::vector<int> winners;
    for (size_t i = 0; i < table.nominees.size(); ++i)
        if (table.scores[i] == best) winners.push_back(table.nominees[i]);
    return winners;
}

std::string family_id(const ScoringRuleFamily& family) {
    if (std::holds_alternative<BordaRule>(family)) return "borda";
    if (const auto* s = std::get_if<ShortRule>(&family)) {
        std::string id = "short:";
        for (size_t i = 0; i < s->prefix.size(); ++i) {
            if (i) id += ',';
            id += std::to_string(s->prefix[i]);
        }
        return id;
    }
    const auto& v = std::get<VetoLikeRule>(family);
    std::string id = "vetolike:" + std::to_string(v.a) + ";";
    for (size_t i = 0; i < v.suffix.size(); ++i) {
        if (i) id += ',';
        id += std::to_string(v.suffix[i]);
    }
    return id;
}

}  // namespace necpres
