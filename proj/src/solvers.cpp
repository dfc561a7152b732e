#include "necpres/solvers.hpp"

#include <algorithm>
#include <numeric>

#include "necpres/matching.hpp"

namespace necpres {

namespace {

std::vector<int> sorted_nominees(std::vector<int> nominees) {
    std::sort(nominees.begin(), nominees.end());
    return nominees;
}

int pick_witness(const std::vector<int>& winners, int p) {
    for (int w : winners)
        if (w != p) return w;
    return -1;
}

Verdict no_verdict(std::string rule, std::string solver, std::vector<int> nominees, int witness,
                   std::int64_t guesses) {
    Verdict v;
    v.yes = false;
    v.certificate = Certificate{std::move(nominees), witness};
    v.rule = std::move(rule);
    v.solver = std::move(solver);
    v.guesses = guesses;
    return v;
}

}  // namespace

CertificateCheck check_certificate(const PartyInstance& instance, const RuleSpec& rule,
                                   const Certificate& cert) {
    validate(instance);
    const auto party_map = instance.party_map();
    std::vector<int> picks(instance.party_count(), 0);
    for (int c : cert.nominees) {
        if (c < 0 || c >= instance.election.candidate_count())
            return {false, "nominee index out of range"};
        ++picks[party_map[c]];
    }
    for (int j = 0; j < instance.party_count(); ++j)
        if (picks[j] != 1)
            return {false, "party " + std::to_string(j) + " has " + std::to_string(picks[j]) +
                               " nominees"};
    if (std::find(cert.nominees.begin(), cert.nominees.end(), instance.distinguished) ==
        cert.nominees.end())
        return {false, "distinguished candidate is not nominated"};

    const auto winners = rule_winners(reduce(instance, cert.nominees), rule);
    if (std::find(winners.begin(), winners.end(), instance.distinguished) != winners.end())
        return {false, "distinguished candidate wins the certificate election"};
    if (std::find(winners.begin(), winners.end(), cert.witness) == winners.end())
        return {false, "witness is not a winner of the certificate election"};
    return {true, ""};
}

// --- brute force ------------------------------------------------------

Verdict solve_bruteforce(const PartyInstance& instance, const RuleSpec& rule,
                         std::int64_t budget) {
    validate(instance);
    const int p = instance.distinguished;
    const auto party_map = instance.party_map();
    const int own = party_map[p];

    std::vector<int> others;
    for (int j = 0; j < instance.party_count(); ++j)
        if (j != own) others.push_back(j);
    std::sort(others.begin(), others.end(), [&](int a, int b) {
        if (instance.parties[a].size() != instance.parties[b].size())
            return instance.parties[a].size() < instance.parties[b].size();
        return a < b;
    });

    std::int64_t total = 1;
    for (int j : others) {
        total *= static_cast<std::int64_t>(instance.parties[j].size());
        if (total > budget)
            throw BudgetError("brute force: " + std::to_string(others.size()) +
                                  " opposing parties yield more than " + std::to_string(budget) +
                                  " nominations",
                              total, budget);
    }

    EvalContext ctx(instance, rule);
    Verdict verdict;
    verdict.rule = rule_id(rule);
    verdict.solver = "bruteforce";
    if (const auto* rp = std::get_if<RankedPairsSpec>(&rule)) verdict.tiebreak = rp->tiebreak.id();

    std::vector<size_t> digits(others.size(), 0);
    std::vector<int> nominees(others.size() + 1);
    while (true) {
        nominees[0] = p;
        for (size_t k = 0; k < others.size(); ++k)
            nominees[k + 1] = instance.parties[others[k]][digits[k]];
        std::sort(nominees.begin(), nominees.end());
        ++verdict.guesses;
        const auto winners = rule_winners(ctx, rule, nominees);
        if (std::find(winners.begin(), winners.end(), p) == winners.end()) {
            verdict.yes = false;
            verdict.certificate = Certificate{nominees, pick_witness(winners, p)};
            return verdict;
        }
        // odometer: last party varies fastest
        size_t k = others.size();
        while (k > 0) {
            --k;
            if (++digits[k] < instance.parties[others[k]].size()) break;
            digits[k] = 0;
            if (k == 0) return verdict;  // wrapped around: all nominations seen
        }
        if (others.empty()) return verdict;
    }
}

// --- Borda ------------------------------------------------------------

std::int64_t borda_delta(int c, int p, int w, const Election& election) {
    std::int64_t delta = 0;
    for (const auto& vt : election.types) {
        int rc = -1, rp = -1, rw = -1;
        for (size_t pos = 0; pos < vt.order.size(); ++pos) {
            if (vt.order[pos] == c) rc = static_cast<int>(pos);
            else if (vt.order[pos] == p) rp = static_cast<int>(pos);
            else if (vt.order[pos] == w) rw = static_cast<int>(pos);
        }
        if (rw < rc && rc < rp) delta += vt.count;
        else if (rp < rc && rc < rw) delta -= vt.count;
    }
    return delta;
}

Verdict solve_borda(const PartyInstance& instance) {
    validate(instance);
    const int p = instance.distinguished;
    const int m = instance.election.candidate_count();
    const auto party_map = instance.party_map();
    const int own = party_map[p];
    const RuleSpec rule = BordaRule{};
    EvalContext ctx(instance, rule);

    Verdict verdict;
    verdict.rule = "borda";
    verdict.solver = "borda";

    std::vector<std::int64_t> delta(m);
    for (int w = 0; w < m; ++w) {
        if (party_map[w] == own) continue;
        const int pw = party_map[w];
        ++verdict.guesses;

        for (int c = 0; c < m; ++c) {
            if (party_map[c] == own || party_map[c] == pw) continue;
            delta[c] = 0;
            for (size_t t = 0; t < ctx.ranks.size(); ++t) {
                const int rc = ctx.ranks[t][c], rp = ctx.ranks[t][p], rw = ctx.ranks[t][w];
                if (rw < rc && rc < rp) delta[c] += instance.election.types[t].count;
                else if (rp < rc && rc < rw) delta[c] -= instance.election.types[t].count;
            }
        }

        std::vector<int> nominees = {p, w};
        for (int j = 0; j < instance.party_count(); ++j) {
            if (j == own || j == pw) continue;
            int best = -1;
            for (int c : instance.parties[j])
                if (best == -1 || delta[c] > delta[best] || (delta[c] == delta[best] && c < best))
                    best = c;
            nominees.push_back(best);
        }
        nominees = sorted_nominees(std::move(nominees));
        const auto winners = rule_winners(ctx, rule, nominees);
        if (std::find(winners.begin(), winners.end(), p) == winners.end())
            return no_verdict("borda", "borda", nominees, pick_witness(winners, p),
                              verdict.guesses);
    }
    return verdict;
}

// --- Copeland^alpha ---------------------------------------------------

namespace {

// head-to-head contribution of x against y, scaled by alpha.den
std::int64_t scaled_duel(const MajorityMatrix& n, int x, int y, const Alpha& alpha) {
    const std::int64_t xy = n.at(x, y), yx = n.at(y, x);
    if (xy > yx) return alpha.den();
    if (xy == yx) return alpha.num();
    return 0;
}

}  // namespace

Rational copeland_pair_delta(int c, int w, int p, const MajorityMatrix& matrix,
                             const Alpha& alpha) {
    return Rational(scaled_duel(matrix, w, c, alpha) - scaled_duel(matrix, p, c, alpha),
                    alpha.den());
}

Verdict solve_copeland(const PartyInstance& instance, const Alpha& alpha) {
    validate(instance);
    const int p = instance.distinguished;
    const int m = instance.election.candidate_count();
    const auto party_map = instance.party_map();
    const int own = party_map[p];
    const RuleSpec rule = CopelandSpec{alpha};
    EvalContext ctx(instance, rule);
    const MajorityMatrix& n = ctx.majority();

    Verdict verdict;
    verdict.rule = rule_id(rule);
    verdict.solver = "copeland";

    for (int w = 0; w < m; ++w) {
        if (party_map[w] == own) continue;
        const int pw = party_map[w];
        ++verdict.guesses;

        // gap = Cpl(w) - Cpl(p) in the greedily nominated election, scaled
        std::int64_t gap = scaled_duel(n, w, p, alpha) - scaled_duel(n, p, w, alpha);
        std::vector<int> nominees = {p, w};
        for (int j = 0; j < instance.party_count(); ++j) {
            if (j == own || j == pw) continue;
            int best = -1;
            std::int64_t best_delta = 0;
            for (int c : instance.parties[j]) {
                const std::int64_t d =
                    scaled_duel(n, w, c, alpha) - scaled_duel(n, p, c, alpha);
                if (best == -1 || d > best_delta) {
                    best = c;
                    best_delta = d;
                }
            }
            gap += best_delta;
            nominees.push_back(best);
        }
        if (gap > 0) {
            nominees = sorted_nominees(std::move(nominees));
            const auto winners = rule_winners(ctx, rule, nominees);
            return no_verdict(verdict.rule, "copeland", nominees, pick_witness(winners, p),
                              verdict.guesses);
        }
    }
    return verdict;
}

// --- Maximin ----------------------------------------------------------

Verdict solve_maximin(const PartyInstance& instance) {
    validate(instance);
    const int p = instance.distinguished;
    const int m = instance.election.candidate_count();
    const auto party_map = instance.party_map();
    const int own = party_map[p];
    const RuleSpec rule = MaximinSpec{};
    EvalContext ctx(instance, rule);
    const MajorityMatrix& n = ctx.majority();

    Verdict verdict;
    verdict.rule = "maximin";
    verdict.solver = "maximin";
    if (instance.party_count() == 2)
        verdict.notes.push_back(
            "two parties: only the reference-candidate-is-w branch applies (the unique "
            "head-to-head comparisons are evaluated directly)");

    for (int w = 0; w < m; ++w) {
        if (party_map[w] == own) continue;
        const int pw = party_map[w];
        // chat sweeps C minus p's party; within w's party only chat = w makes
        // sense (w is the only nominee the minimum can see there)
        for (int chat = 0; chat < m; ++chat) {
            if (party_map[chat] == own) continue;
            if (party_map[chat] == pw && chat != w) continue;
            ++verdict.guesses;
            const std::int64_t shat = n.at(p, chat);
            if (n.at(w, p) <= shat) continue;
            if (chat != w && n.at(w, chat) <= shat) continue;

            std::vector<int> nominees = {p, w};
            if (chat != w) nominees.push_back(chat);
            bool covered = true;
            for (int j = 0; j < instance.party_count() && covered; ++j) {
                if (j == own || j == pw || j == party_map[chat]) continue;
                int found = -1;
                for (int c : instance.parties[j])
                    if (n.at(w, c) > shat) {
                        found = c;
                        break;
                    }
                if (found == -1) covered = false;
                else nominees.push_back(found);
            }
            if (!covered) continue;

            nominees = sorted_nominees(std::move(nominees));
            const auto winners = rule_winners(ctx, rule, nominees);
            return no_verdict("maximin", "maximin", nominees, pick_witness(winners, p),
                              verdict.guesses);
        }
    }
    return verdict;
}

// --- FPT machinery for short rules ------------------------------------

namespace {

void enumerate_structures_rec(int cell, int grid, int cols, int max_blocks,
                              std::vector<int>& assign, std::vector<std::uint32_t>& block_rows,
                              int used, bool& keep_going,
                              const std::function<bool(const std::vector<int>&, int)>& emit) {
    if (!keep_going) return;
    if (cell == grid) {
        if (!emit(assign, used)) keep_going = false;
        return;
    }
    const int row = cell / cols;
    const int open_limit = std::min(used + 1, max_blocks);
    for (int b = 0; b < open_limit; ++b) {
        if (block_rows[b] >> row & 1) continue;  // one cell per row per block
        assign[cell] = b;
        block_rows[b] |= 1u << row;
        enumerate_structures_rec(cell + 1, grid, cols, max_blocks, assign, block_rows,
                                 std::max(used, b + 1), keep_going, emit);
        block_rows[b] &= ~(1u << row);
        if (!keep_going) return;
    }
}

// position of `block` in row i: 1-based scored position, or L+1 when the
// block holds no cell of that row (the Q+ convention)
void fill_row_positions(const std::vector<int>& cell_block, int tau, int L, int block,
                        std::vector<int>& out) {
    out.assign(tau, L + 1);
    for (int i = 0; i < tau; ++i)
        for (int j = 0; j < L; ++j)
            if (cell_block[i * L + j] == block) out[i] = j + 1;
}

struct ShortSolveState {
    const PartyInstance* inst;
    RuleSpec rule;
    std::vector<std::vector<int>> ranks;
    std::vector<int> party_map;
    int p, own, tau, L;
};

// one (w, partition, q_w, q_p) guess; returns a certificate if p loses
std::optional<Certificate> try_guess(const ShortSolveState& st, const EvalContext& ctx, int w,
                                     int blocks,
                                     const std::vector<std::vector<int>>& rowpos, int qw, int qp,
                                     const std::vector<char>& before_p,
                                     const std::vector<char>& before_w) {
    const PartyInstance& inst = *st.inst;
    const int pw = st.party_map[w];
    const int m = inst.election.candidate_count();
    const int L = st.L;

    // the guessed relative placement of w and p must match their true orders
    for (int i = 0; i < st.tau; ++i) {
        const int jw = rowpos[qw][i];
        const int jp = qp < 0 ? L + 1 : rowpos[qp][i];
        if (jw == L + 1 && jp == L + 1) continue;
        const bool w_first = st.ranks[i][w] < st.ranks[i][st.p];
        if (w_first != (jw < jp)) return std::nullopt;
    }

    // parties other than P and P_w, classes other than Q_p and Q_w
    std::vector<int> party_slot(inst.party_count(), -1);
    std::vector<int> slot_party;
    for (int j = 0; j < inst.party_count(); ++j) {
        if (j == st.own || j == pw) continue;
        party_slot[j] = static_cast<int>(slot_party.size());
        slot_party.push_back(j);
    }
    std::vector<int> class_slot(blocks, -1);
    std::vector<int> slot_class;
    for (int b = 0; b < blocks; ++b) {
        if (b == qw || b == qp) continue;
        class_slot[b] = static_cast<int>(slot_class.size());
        slot_class.push_back(b);
    }
    if (slot_class.size() > slot_party.size()) return std::nullopt;

    BipartiteGraph graph;
    graph.left = static_cast<int>(slot_party.size());
    graph.right = static_cast<int>(slot_class.size());
    // first well-placed candidate per (party, class), scan order = candidate index
    std::vector<int> placed(static_cast<size_t>(graph.left) * std::max(graph.right, 1), -1);
    for (int c = 0; c < m; ++c) {
        const int ps = party_slot[st.party_map[c]];
        if (ps < 0) continue;
        for (int cs = 0; cs < graph.right; ++cs) {
            if (placed[static_cast<size_t>(ps) * graph.right + cs] != -1) continue;
            const int b = slot_class[cs];
            bool ok = true;
            for (int i = 0; i < st.tau && ok; ++i) {
                const int jq = rowpos[b][i];
                const int jp = qp < 0 ? L + 1 : rowpos[qp][i];
                const int jw = rowpos[qw][i];
                if (!(jq == L + 1 && jp == L + 1) &&
                    static_cast<bool>(before_p[static_cast<size_t>(c) * st.tau + i]) != (jq < jp))
                    ok = false;
                if (ok && !(jq == L + 1 && jw == L + 1) &&
                    static_cast<bool>(before_w[static_cast<size_t>(c) * st.tau + i]) != (jq < jw))
                    ok = false;
            }
            if (ok) {
                placed[static_cast<size_t>(ps) * graph.right + cs] = c;
                graph.edges.emplace_back(ps, cs);
            }
        }
    }

    // a safe candidate never precedes w where w is scored
    std::vector<int> safe_pick(graph.left, -1);
    for (int c = 0; c < m; ++c) {
        const int ps = party_slot[st.party_map[c]];
        if (ps < 0 || safe_pick[ps] != -1) continue;
        bool safe = true;
        for (int i = 0; i < st.tau && safe; ++i)
            if (rowpos[qw][i] != L + 1 && before_w[static_cast<size_t>(c) * st.tau + i])
                safe = false;
        if (safe) safe_pick[ps] = c;
    }

    std::vector<int> required_left;
    for (int ps = 0; ps < graph.left; ++ps)
        if (safe_pick[ps] == -1) required_left.push_back(ps);
    std::vector<int> required_right(graph.right);
    std::iota(required_right.begin(), required_right.end(), 0);

    const auto matching = saturating_matching(graph, required_left, required_right);
    if (!matching) return std::nullopt;

    std::vector<int> nominees = {st.p, w};
    std::vector<char> matched(graph.left, 0);
    for (const auto& [ps, cs] : *matching) {
        matched[ps] = 1;
        nominees.push_back(placed[static_cast<size_t>(ps) * graph.right + cs]);
    }
    for (int ps = 0; ps < graph.left; ++ps)
        if (!matched[ps]) nominees.push_back(safe_pick[ps]);

    std::sort(nominees.begin(), nominees.end());
    const auto winners = rule_winners(ctx, st.rule, nominees);
    if (std::find(winners.begin(), winners.end(), st.p) == winners.end())
        return Certificate{nominees, pick_witness(winners, st.p)};
    return std::nullopt;
}

Verdict solve_short_structured(const PartyInstance& instance, const RuleSpec& rule,
                               int scored_positions, const FptOptions& options,
                               const std::string& solver_id) {
    const int p = instance.distinguished;
    const int m = instance.election.candidate_count();
    const int t = instance.party_count();
    const int tau = instance.election.type_count();
    const int L = scored_positions;

    ShortSolveState st;
    st.inst = &instance;
    st.rule = rule;
    st.ranks = instance.election.rank_table();
    st.party_map = instance.party_map();
    st.p = p;
    st.own = st.party_map[p];
    st.tau = tau;
    st.L = L;

    Verdict verdict;
    verdict.rule = rule_id(rule);
    verdict.solver = solver_id;
    if (t == 1) return verdict;

    // phase 1: cost the pruned structure space exactly (count only, no
    // storage; the space is re-enumerated per witness below)
    std::int64_t partition_count = 0, pair_total = 0;
    const int max_blocks = std::min(t, tau * L);
    enumerate_structures(tau, L, max_blocks, [&](const std::vector<int>&, int b) {
        ++partition_count;
        pair_total += static_cast<std::int64_t>(b) * b;
        return partition_count <= options.partition_budget;
    });
    if (partition_count > options.partition_budget)
        throw BudgetError(solver_id + ": more than " + std::to_string(options.partition_budget) +
                              " structures for a " + std::to_string(tau) + "x" +
                              std::to_string(L) + " grid",
                          partition_count, options.partition_budget);

    std::int64_t outer = 0;
    for (int w = 0; w < m; ++w)
        if (st.party_map[w] != st.own) ++outer;
    if (outer > 0 && pair_total > options.guess_budget / outer)
        throw BudgetError(solver_id + ": projected " + std::to_string(outer) + " x " +
                              std::to_string(pair_total) + " guesses exceed budget " +
                              std::to_string(options.guess_budget),
                          outer * pair_total, options.guess_budget);

    EvalContext ctx(instance, rule);
    std::vector<char> before_p(static_cast<size_t>(m) * tau, 0);
    for (int c = 0; c < m; ++c)
        for (int i = 0; i < tau; ++i)
            before_p[static_cast<size_t>(c) * tau + i] = st.ranks[i][c] < st.ranks[i][p];

    std::vector<char> before_w(static_cast<size_t>(m) * tau, 0);
    std::vector<std::vector<int>> rowpos;
    std::optional<Certificate> found;
    for (int w = 0; w < m && !found; ++w) {
        if (st.party_map[w] == st.own) continue;
        for (int c = 0; c < m; ++c)
            for (int i = 0; i < tau; ++i)
                before_w[static_cast<size_t>(c) * tau + i] = st.ranks[i][c] < st.ranks[i][w];

        enumerate_structures(tau, L, max_blocks, [&](const std::vector<int>& cells, int blocks) {
            rowpos.resize(blocks);
            for (int b = 0; b < blocks; ++b) fill_row_positions(cells, tau, L, b, rowpos[b]);
            for (int qw = 0; qw < blocks; ++qw) {
                for (int qp = -1; qp < blocks; ++qp) {
                    if (qp == qw) continue;
                    ++verdict.guesses;
                    found = try_guess(st, ctx, w, blocks, rowpos, qw, qp, before_p, before_w);
                    if (found) return false;
                }
            }
            return true;
        });
    }
    if (found)
        return no_verdict(verdict.rule, solver_id, found->nominees, found->witness,
                          verdict.guesses);
    return verdict;
}

}  // namespace

bool well_placed(const PartyInstance& instance, const std::vector<std::vector<int>>& ranks,
                 const StructureGuess& guess, int candidate, int block, int scored_positions) {
    const int tau = instance.election.type_count();
    const int L = scored_positions;
    const int p = instance.distinguished;
    const int w = guess.witness;
    std::vector<int> jq, jp, jw;
    fill_row_positions(guess.cell_block, tau, L, block, jq);
    fill_row_positions(guess.cell_block, tau, L, guess.q_w, jw);
    if (guess.q_p >= 0) fill_row_positions(guess.cell_block, tau, L, guess.q_p, jp);
    else jp.assign(tau, L + 1);
    for (int i = 0; i < tau; ++i) {
        if (!(jq[i] == L + 1 && jp[i] == L + 1) &&
            (ranks[i][candidate] < ranks[i][p]) != (jq[i] < jp[i]))
            return false;
        if (!(jq[i] == L + 1 && jw[i] == L + 1) &&
            (ranks[i][candidate] < ranks[i][w]) != (jq[i] < jw[i]))
            return false;
    }
    return true;
}

void enumerate_structures(int tau, int scored_positions, int max_blocks,
                          const std::function<bool(const std::vector<int>&, int)>& emit) {
    const int grid = tau * scored_positions;
    if (grid == 0) return;
    std::vector<int> assign(grid, -1);
    std::vector<std::uint32_t> block_rows(grid, 0);
    bool keep_going = true;
    enumerate_structures_rec(0, grid, scored_positions, max_blocks, assign, block_rows, 0,
                             keep_going, emit);
}

Verdict solve_short_fpt(const PartyInstance& instance, const ShortRule& family,
                        const FptOptions& options) {
    validate(instance);
    validate_family(ScoringRuleFamily{family});
    const int L = prefix_length(ScoringRuleFamily{family}, instance.party_count());
    return solve_short_structured(instance, RuleSpec{family}, L, options, "short-fpt");
}

Verdict solve_vetolike_fpt(const PartyInstance& instance, const VetoLikeRule& family,
                           const FptOptions& options) {
    validate(instance);
    validate_family(ScoringRuleFamily{family});
    const int p = instance.distinguished;
    const int t = instance.party_count();
    const int tau = instance.election.type_count();
    const int ell = static_cast<int>(family.suffix.size());
    const RuleSpec rule{family};

    if (t <= ell * tau) {
        // every position of a reduced election carries a designated value:
        // run the structure machinery over the full t-length vector
        Verdict v = solve_short_structured(instance, rule, t, options, "vetolike-fpt");
        v.notes.push_back("t <= l*tau: solved as a t-position short rule");
        return v;
    }

    // t > l*tau: some nominee always reaches |V|*a, so p loses exactly when
    // some voter type ranks nominees of at least t-l other parties above p
    Verdict verdict;
    verdict.rule = rule_id(rule);
    verdict.solver = "vetolike-fpt";
    verdict.notes.push_back("t > l*tau: decided by the per-type preferred-party count");

    const auto ranks = instance.election.rank_table();
    const auto party_map = instance.party_map();
    const int own = party_map[p];
    EvalContext ctx(instance, rule);

    for (int i = 0; i < tau; ++i) {
        ++verdict.guesses;
        int preferred_parties = 0;
        for (int j = 0; j < instance.party_count(); ++j) {
            if (j == own) continue;
            for (int c : instance.parties[j])
                if (ranks[i][c] < ranks[i][p]) {
                    ++preferred_parties;
                    break;
                }
        }
        if (preferred_parties < t - ell) continue;

        std::vector<int> nominees = {p};
        for (int j = 0; j < instance.party_count(); ++j) {
            if (j == own) continue;
            int pick = -1;
            for (int c : instance.parties[j])
                if (ranks[i][c] < ranks[i][p] && (pick == -1 || ranks[i][c] < ranks[i][pick]))
                    pick = c;
            if (pick == -1) pick = instance.parties[j][0];
            nominees.push_back(pick);
        }
        nominees = sorted_nominees(std::move(nominees));
        const auto winners = rule_winners(ctx, rule, nominees);
        if (std::find(winners.begin(), winners.end(), p) != winners.end())
            throw std::logic_error("vetolike: certificate election unexpectedly keeps p winning");
        return no_verdict(verdict.rule, "vetolike-fpt", nominees, pick_witness(winners, p),
                          verdict.guesses);
    }
    return verdict;
}

Verdict solve_auto(const PartyInstance& instance, const RuleSpec& rule,
                   std::int64_t bruteforce_budget, const FptOptions& options) {
    if (std::holds_alternative<BordaRule>(rule)) return solve_borda(instance);
    if (const auto* s = std::get_if<ShortRule>(&rule)) return solve_short_fpt(instance, *s, options);
    if (const auto* v = std::get_if<VetoLikeRule>(&rule))
        return solve_vetolike_fpt(instance, *v, options);
    if (const auto* c = std::get_if<CopelandSpec>(&rule)) return solve_copeland(instance, c->alpha);
    if (std::holds_alternative<MaximinSpec>(rule)) return solve_maximin(instance);
    return solve_bruteforce(instance, rule, bruteforce_budget);
}

}  // namespace necpres
