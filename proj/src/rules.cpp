#include "necpres/rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace necpres {

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& s, char sep) {
    std::vector<std::int64_t> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(sep, pos);
        if (next == std::string::npos) next = s.size();
        const std::string tok = s.substr(pos, next - pos);
        if (tok.empty()) throw std::invalid_argument("rule: empty number in list");
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("rule: bad number '" + tok + "'");
        out.push_back(v);
        pos = next + 1;
        if (next == s.size()) break;
    }
    return out;
}

}  // namespace

RuleSpec parse_rule(const std::string& id) {
    const auto colon = id.find(':');
    const std::string head = id.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : id.substr(colon + 1);

    if (head == "borda") {
        if (!rest.empty()) throw std::invalid_argument("rule: borda takes no parameters");
        return BordaRule{};
    }
    if (head == "short") {
        ShortRule r{parse_int_list(rest, ',')};
        validate_family(ScoringRuleFamily{r});
        return r;
    }
    if (head == "vetolike") {
        const auto semi = rest.find(';');
        if (semi == std::string::npos)
            throw std::invalid_argument("rule: vetolike needs the form a;a1,...,al");
        VetoLikeRule r;
        r.a = parse_int_list(rest.substr(0, semi), ',').at(0);
        r.suffix = parse_int_list(rest.substr(semi + 1), ',');
        validate_family(ScoringRuleFamily{r});
        return r;
    }
    if (head == "copeland") {
        if (rest.empty()) throw std::invalid_argument("rule: copeland needs alpha as num/den");
        const auto slash = rest.find('/');
        std::int64_t num = std::stoll(rest.substr(0, slash));
        std::int64_t den = slash == std::string::npos ? 1 : std::stoll(rest.substr(slash + 1));
        return CopelandSpec{Alpha(num, den)};
    }
    if (head == "maximin") {
        if (!rest.empty()) throw std::invalid_argument("rule: maximin takes no parameters");
        return MaximinSpec{};
    }
    if (head == "rankedpairs") {
        RankedPairsSpec r;
        if (rest.empty() || rest == "lex") {
            r.tiebreak.kind = TieBreakKind::Lexicographic;
        } else if (rest.rfind("seed=", 0) == 0) {
            r.tiebreak.kind = TieBreakKind::Seeded;
            r.tiebreak.seed = std::stoull(rest.substr(5));
        } else {
            throw std::invalid_argument("rule: rankedpairs tiebreak must be lex or seed=<n>");
        }
        return r;
    }
    throw std::invalid_argument("unknown rule '" + id + "'");
}

std::string rule_id(const RuleSpec& rule) {
    if (const auto* b = std::get_if<BordaRule>(&rule)) return family_id(*b);
    if (const auto* s = std::get_if<ShortRule>(&rule)) return family_id(*s);
    if (const auto* v = std::get_if<VetoLikeRule>(&rule)) return family_id(*v);
    if (const auto* c = std::get_if<CopelandSpec>(&rule)) return "copeland:" + c->alpha.str();
    if (std::holds_alternative<MaximinSpec>(rule)) return "maximin";
    return "rankedpairs:" + std::get<RankedPairsSpec>(rule).tiebreak.id();
}

bool is_positional(const RuleSpec& rule) {
    return std::holds_alternative<BordaRule>(rule) || std::holds_alternative<ShortRule>(rule) ||
           std::holds_alternative<VetoLikeRule>(rule);
}

std::optional<ScoringRuleFamily> scoring_family(const RuleSpec& rule) {
    if (const auto* b = std::get_if<BordaRule>(&rule)) return ScoringRuleFamily{*b};
    if (const auto* s = std::get_if<ShortRule>(&rule)) return ScoringRuleFamily{*s};
    if (const auto* v = std::get_if<VetoLikeRule>(&rule)) return ScoringRuleFamily{*v};
    return std::nullopt;
}

EvalContext::EvalContext(const PartyInstance& inst, const RuleSpec& rule) {
    instance = &inst;
    ranks = inst.election.rank_table();
    voters = inst.election.voter_count();
    if (!is_positional(rule)) matrix = pairwise_matrix(inst.election);
}

std::vector<int> rule_winners(const EvalContext& ctx, const RuleSpec& rule,
                              const std::vector<int>& nominees) {
    if (auto family = scoring_family(rule)) {
        // restricted positions straight from the full rank table
        const int m = static_cast<int>(nominees.size());
        const auto vec = effective_vector(*family, m);
        const auto& types = ctx.instance->election.types;
        std::vector<std::int64_t> scores(m, 0);
        std::vector<std::pair<int, int>> by_rank(m);  // (full rank, local index)
        for (size_t t = 0; t < types.size(); ++t) {
            for (int i = 0; i < m; ++i) by_rank[i] = {ctx.ranks[t][nominees[i]], i};
            std::sort(by_rank.begin(), by_rank.end());
            for (int pos = 0; pos < m; ++pos)
                scores[by_rank[pos].second] += types[t].count * vec[pos];
        }
        const std::int64_t best = *std::max_element(scores.begin(), scores.end());
        std::vector<int> winners;
        for (int i = 0; i < m; ++i)
            if (scores[i] == best) winners.push_back(nominees[i]);
        return winners;
    }
    if (const auto* c = std::get_if<CopelandSpec>(&rule))
        return copeland_winners(copeland_scores(ctx.majority(), nominees, ctx.voters, c->alpha));
    if (std::holds_alternative<MaximinSpec>(rule))
        return maximin_winners(maximin_scores(ctx.majority(), nominees, ctx.voters));
    const auto& rp = std::get<RankedPairsSpec>(rule);
    return ranked_pairs_winners(ctx.majority(), nominees, rp.tiebreak).winners;
}

std::vector<int> rule_winners(const ReducedElection& reduced, const RuleSpec& rule) {
    if (auto family = scoring_family(rule))
        return score_winners(positional_scores(reduced, *family));
    if (const auto* c = std::get_if<CopelandSpec>(&rule))
        return copeland_winners(copeland_scores(reduced, c->alpha));
    if (std::holds_alternative<MaximinSpec>(rule))
        return maximin_winners(maximin_scores(reduced));
    return ranked_pairs_winners(reduced, std::get<RankedPairsSpec>(rule).tiebreak).winners;
}

}  // namespace necpres
