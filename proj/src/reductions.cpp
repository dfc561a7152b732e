#include "necpres/reductions.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "necpres/solvers.hpp"

namespace necpres {

namespace {

// head candidates first, then the complement in ascending index order
std::vector<int> order_with_head(std::vector<int> head, int m) {
    std::vector<char> used(m, 0);
    for (int c : head) used[c] = 1;
    for (int c = 0; c < m; ++c)
        if (!used[c]) head.push_back(c);
    return head;
}

// complement in ascending index order first, then the tail candidates
std::vector<int> order_with_tail(const std::vector<int>& tail, int m) {
    std::vector<char> used(m, 0);
    for (int c : tail) used[c] = 1;
    std::vector<int> order;
    order.reserve(m);
    for (int c = 0; c < m; ++c)
        if (!used[c]) order.push_back(c);
    order.insert(order.end(), tail.begin(), tail.end());
    return order;
}

void append(std::vector<int>& order, const std::vector<int>& block) {
    order.insert(order.end(), block.begin(), block.end());
}

void append_reversed(std::vector<int>& order, const std::vector<int>& block) {
    order.insert(order.end(), block.rbegin(), block.rend());
}

PartyInstance finish(std::vector<std::string> labels, std::vector<std::vector<int>> parties,
                     std::vector<VoterType> types, int distinguished) {
    PartyInstance inst;
    inst.election.labels = std::move(labels);
    inst.election.types =
        compress_voter_types(std::move(types), static_cast<int>(inst.election.labels.size()));
    inst.parties = std::move(parties);
    inst.distinguished = distinguished;
    validate(inst);
    return inst;
}

}  // namespace

void validate_formula(const Formula22E3& formula) {
    const int n = formula.variables;
    if (n <= 0) throw std::invalid_argument("formula: no variables");
    if (formula.clause_count() < 2) throw std::invalid_argument("formula: fewer than 2 clauses");
    std::vector<int> pos(n, 0), neg(n, 0);
    for (size_t j = 0; j < formula.clauses.size(); ++j) {
        const auto& cl = formula.clauses[j];
        for (int lit : cl) {
            const int v = lit > 0 ? lit : -lit;
            if (lit == 0 || v > n)
                throw std::invalid_argument("clause " + std::to_string(j) +
                                            ": literal out of range");
            (lit > 0 ? pos : neg)[v - 1]++;
        }
        if (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2])
            throw std::invalid_argument("clause " + std::to_string(j) +
                                        ": literals are not distinct");
    }
    for (int v = 0; v < n; ++v)
        if (pos[v] != 2 || neg[v] != 2)
            throw std::invalid_argument("variable x" + std::to_string(v + 1) + " occurs " +
                                        std::to_string(pos[v]) + "+/" + std::to_string(neg[v]) +
                                        "-, expected exactly 2/2");
}

bool satisfies(const Formula22E3& formula, const std::vector<bool>& assignment) {
    for (const auto& cl : formula.clauses) {
        bool sat = false;
        for (int lit : cl) {
            const int v = (lit > 0 ? lit : -lit) - 1;
            if ((lit > 0) == static_cast<bool>(assignment[v])) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

std::optional<std::vector<bool>> enumerate_assignments(const Formula22E3& formula,
                                                       int max_variables) {
    validate_formula(formula);
    if (formula.variables > max_variables)
        throw BudgetError("enumerate_assignments: " + std::to_string(formula.variables) +
                              " variables exceed the exhaustive budget",
                          formula.variables, max_variables);
    const int n = formula.variables;
    std::vector<bool> assignment(n);
    for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
        for (int v = 0; v < n; ++v) assignment[v] = (bits >> v) & 1;
        if (satisfies(formula, assignment)) return assignment;
    }
    return std::nullopt;
}

Formula22E3 random_formula22e3(int variables, std::uint64_t seed) {
    if (variables <= 0 || variables % 3 != 0)
        throw std::invalid_argument("random_formula22e3: variable count must be a positive "
                                    "multiple of 3 (3m = 4n forces it)");
    const int m = 4 * variables / 3;
    std::mt19937_64 rng(seed);
    std::vector<int> tokens;
    for (int v = 1; v <= variables; ++v) {
        tokens.push_back(v);
        tokens.push_back(v);
        tokens.push_back(-v);
        tokens.push_back(-v);
    }
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::shuffle(tokens.begin(), tokens.end(), rng);
        Formula22E3 f;
        f.variables = variables;
        bool ok = true;
        for (int j = 0; j < m && ok; ++j) {
            std::array<int, 3> cl = {tokens[3 * j], tokens[3 * j + 1], tokens[3 * j + 2]};
            if (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2]) ok = false;
            f.clauses.push_back(cl);
        }
        if (ok) {
            validate_formula(f);
            return f;
        }
    }
    throw std::runtime_error("random_formula22e3: no valid clause grouping found");
}

void validate_hitting_set(const HittingSetInstance& instance) {
    if (instance.elements <= 0) throw std::invalid_argument("hitting set: no elements");
    if (instance.budget <= 0) throw std::invalid_argument("hitting set: budget k must be positive");
    if (instance.sets.empty()) throw std::invalid_argument("hitting set: empty family");
    for (size_t j = 0; j < instance.sets.size(); ++j) {
        if (instance.sets[j].empty())
            throw std::invalid_argument("hitting set: set " + std::to_string(j) + " is empty");
        for (int s : instance.sets[j])
            if (s < 0 || s >= instance.elements)
                throw std::invalid_argument("hitting set: set " + std::to_string(j) +
                                            " has an element out of range");
    }
}

std::optional<std::vector<int>> exhaustive_hitting_set(const HittingSetInstance& instance,
                                                       std::int64_t subset_budget) {
    validate_hitting_set(instance);
    const int n = instance.elements;
    if (n >= 63 || (std::int64_t(1) << n) > subset_budget)
        throw BudgetError("exhaustive_hitting_set: 2^" + std::to_string(n) +
                              " subsets exceed the budget",
                          n < 63 ? (std::int64_t(1) << n) : INT64_MAX, subset_budget);
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        if (std::popcount(mask) > instance.budget) continue;
        bool hits_all = true;
        for (const auto& set : instance.sets) {
            bool hit = false;
            for (int s : set)
                if ((mask >> s) & 1) {
                    hit = true;
                    break;
                }
            if (!hit) {
                hits_all = false;
                break;
            }
        }
        if (hits_all) {
            std::vector<int> witness;
            for (int s = 0; s < n; ++s)
                if ((mask >> s) & 1) witness.push_back(s);
            return witness;
        }
    }
    return std::nullopt;
}

void validate_graph(const MulticoloredGraph& graph) {
    if (graph.classes < 2) throw std::invalid_argument("graph: need at least 2 color classes");
    if (graph.class_size < 1) throw std::invalid_argument("graph: empty color classes");
    std::set<std::array<int, 4>> seen;
    for (const auto& e : graph.edges) {
        const auto [i, a, j, b] = e;
        if (i == j)
            throw std::invalid_argument("graph: edge inside a color class (classes must be "
                                        "independent sets)");
        if (i < 0 || j < 0 || i >= graph.classes || j >= graph.classes || i >= j)
            throw std::invalid_argument("graph: edge classes must satisfy 0 <= i < j < k");
        if (a < 0 || b < 0 || a >= graph.class_size || b >= graph.class_size)
            throw std::invalid_argument("graph: edge endpoint vertex out of range");
        if (!seen.insert(e).second) throw std::invalid_argument("graph: duplicate edge");
    }
}

std::optional<std::vector<int>> exhaustive_clique(const MulticoloredGraph& graph,
                                                  std::int64_t tuple_budget) {
    validate_graph(graph);
    const int k = graph.classes, r = graph.class_size;
    std::int64_t tuples = 1;
    for (int i = 0; i < k; ++i) {
        tuples *= r;
        if (tuples > tuple_budget)
            throw BudgetError("exhaustive_clique: r^k tuples exceed the budget", tuples,
                              tuple_budget);
    }
    std::set<std::array<int, 4>> edges(graph.edges.begin(), graph.edges.end());
    std::vector<int> pick(k, 0);
    while (true) {
        bool clique = true;
        for (int i = 0; i < k && clique; ++i)
            for (int j = i + 1; j < k && clique; ++j)
                if (!edges.count({i, pick[i], j, pick[j]})) clique = false;
        if (clique) return pick;
        int d = k;
        while (d > 0) {
            --d;
            if (++pick[d] < r) break;
            pick[d] = 0;
            if (d == 0) return std::nullopt;
        }
    }
}

// --- scoring-rule reductions ------------------------------------------

PartyInstance sat_to_short(const Formula22E3& formula, const ShortRule& family) {
    validate_formula(formula);
    validate_family(ScoringRuleFamily{family});
    const int n = formula.variables;
    const int m = formula.clause_count();
    const int ell = static_cast<int>(family.prefix.size());

    // candidates: p, w, x_i / ~x_i pairs, then dummy blocks D1..D4
    std::vector<std::string> labels = {"p", "w"};
    std::vector<std::vector<int>> parties = {{0}, {1}};
    std::vector<int> lit_cand(2 * n);  // positive at 2v, negative at 2v+1
    for (int v = 0; v < n; ++v) {
        lit_cand[2 * v] = static_cast<int>(labels.size());
        labels.push_back("x" + std::to_string(v + 1));
        lit_cand[2 * v + 1] = static_cast<int>(labels.size());
        labels.push_back("~x" + std::to_string(v + 1));
        parties.push_back({lit_cand[2 * v], lit_cand[2 * v + 1]});
    }
    std::array<std::vector<int>, 4> dummy;
    for (int h = 0; h < 4; ++h)
        for (int d = 0; d < ell - 1; ++d) {
            dummy[h].push_back(static_cast<int>(labels.size()));
            labels.push_back("d" + std::to_string(h + 1) + "_" + std::to_string(d + 1));
            parties.push_back({dummy[h].back()});
        }
    const int total = static_cast<int>(labels.size());
    const auto lit = [&](int literal) {
        const int v = (literal > 0 ? literal : -literal) - 1;
        return lit_cand[2 * v + (literal < 0 ? 1 : 0)];
    };

    std::vector<VoterType> types;
    {
        std::vector<int> head = dummy[0];
        head.push_back(1);
        types.push_back({order_with_head(std::move(head), total), 1});  // voter w
    }
    {
        std::vector<int> head = {1};
        append(head, dummy[1]);
        types.push_back({order_with_head(std::move(head), total), 2 * m + 1});  // V0
    }
    {
        std::vector<int> head = {0};
        append(head, dummy[2]);
        types.push_back({order_with_head(std::move(head), total), 2 * m + 1});  // V0'
    }
    for (int j = 0; j < m; ++j) {  // u_j and u'_j
        std::vector<int> head = {lit(formula.clauses[j][0]), lit(formula.clauses[j][1]),
                                 lit(formula.clauses[j][2])};
        append(head, dummy[3]);
        head.push_back(0);
        types.push_back({order_with_head(std::move(head), total), 2});
    }
    return finish(std::move(labels), std::move(parties), std::move(types), 0);
}

PartyInstance sat_to_vetolike(const Formula22E3& formula, const VetoLikeRule& family) {
    validate_formula(formula);
    validate_family(ScoringRuleFamily{family});
    const int n = formula.variables;
    const int m = formula.clause_count();
    const int ell = static_cast<int>(family.suffix.size());

    std::vector<std::string> labels = {"p", "w"};
    std::vector<std::vector<int>> parties = {{0}, {1}};
    std::vector<int> lit_cand(2 * n);
    for (int v = 0; v < n; ++v) {
        lit_cand[2 * v] = static_cast<int>(labels.size());
        labels.push_back("x" + std::to_string(v + 1));
        lit_cand[2 * v + 1] = static_cast<int>(labels.size());
        labels.push_back("~x" + std::to_string(v + 1));
        parties.push_back({lit_cand[2 * v], lit_cand[2 * v + 1]});
    }
    std::vector<int> dummies;
    for (int d = 0; d < ell - 1; ++d) {
        dummies.push_back(static_cast<int>(labels.size()));
        labels.push_back("d" + std::to_string(d + 1));
        parties.push_back({dummies.back()});
    }
    const int total = static_cast<int>(labels.size());
    const auto lit = [&](int literal) {
        const int v = (literal > 0 ? literal : -literal) - 1;
        return lit_cand[2 * v + (literal < 0 ? 1 : 0)];
    };

    std::vector<VoterType> types;
    {
        std::vector<int> tail = {0};
        append(tail, dummies);
        types.push_back({order_with_tail(tail, total), 1});  // v0
    }
    for (int v = 0; v < n; ++v) {  // W_i pairs
        std::vector<int> tail = {lit_cand[2 * v], lit_cand[2 * v + 1]};
        append(tail, dummies);
        types.push_back({order_with_tail(tail, total), 2});
    }
    for (int j = 0; j < m; ++j) {  // V_j pairs
        std::vector<int> tail = {1, lit(formula.clauses[j][0]), lit(formula.clauses[j][1]),
                                 lit(formula.clauses[j][2])};
        append(tail, dummies);
        types.push_back({order_with_tail(tail, total), 2});
    }
    return finish(std::move(labels), std::move(parties), std::move(types), 0);
}

PartyInstance hitting_set_to_short(const HittingSetInstance& instance, const ShortRule& family) {
    validate_hitting_set(instance);
    validate_family(ScoringRuleFamily{family});
    const int n = instance.elements;
    const int m = static_cast<int>(instance.sets.size());
    const int k = instance.budget;
    const int ell = static_cast<int>(family.prefix.size());

    std::vector<std::string> labels = {"p", "w"};
    std::vector<std::vector<int>> parties = {{0}, {1}};
    // copy(i, r) = candidate for the i-th copy of element r
    std::vector<std::vector<int>> copy(k, std::vector<int>(n));
    for (int i = 0; i < k; ++i) {
        std::vector<int> block;
        for (int r = 0; r < n; ++r) {
            copy[i][r] = static_cast<int>(labels.size());
            labels.push_back("s" + std::to_string(r + 1) + "c" + std::to_string(i + 1));
            block.push_back(copy[i][r]);
        }
        parties.push_back(std::move(block));
    }
    std::array<std::vector<int>, 4> dummy;
    for (int h = 0; h < 4; ++h)
        for (int d = 0; d < ell - 1; ++d) {
            dummy[h].push_back(static_cast<int>(labels.size()));
            labels.push_back("d" + std::to_string(h + 1) + "_" + std::to_string(d + 1));
            parties.push_back({dummy[h].back()});
        }
    const int total = static_cast<int>(labels.size());

    std::vector<VoterType> types;
    {
        std::vector<int> head = dummy[0];
        head.push_back(1);
        types.push_back({order_with_head(std::move(head), total), 1});  // voter w
    }
    for (int j = 0; j < m; ++j) {  // u_j, u'_j
        std::vector<int> head;
        for (int i = 0; i < k; ++i)
            for (int r : instance.sets[j]) head.push_back(copy[i][r]);
        append(head, dummy[1]);
        head.push_back(0);
        types.push_back({order_with_head(std::move(head), total), 2});
    }
    {
        std::vector<int> head = {1};
        append(head, dummy[2]);
        types.push_back({order_with_head(std::move(head), total), 2 * m + 1});  // V0
    }
    {
        std::vector<int> head = {0};
        append(head, dummy[3]);
        types.push_back({order_with_head(std::move(head), total), 2 * m + 1});  // V0'
    }
    return finish(std::move(labels), std::move(parties), std::move(types), 0);
}

PartyInstance hitting_set_to_vetolike(const HittingSetInstance& instance,
                                      const VetoLikeRule& family) {
    validate_hitting_set(instance);
    validate_family(ScoringRuleFamily{family});
    const int n = instance.elements;
    const int m = static_cast<int>(instance.sets.size());
    const int k = instance.budget;
    const int ell = static_cast<int>(family.suffix.size());

    std::vector<std::string> labels = {"p", "w"};
    std::vector<std::vector<int>> parties = {{0}, {1}};
    std::vector<std::vector<int>> copy(k, std::vector<int>(n));
    for (int i = 0; i < k; ++i) {
        std::vector<int> block;
        for (int r = 0; r < n; ++r) {
            copy[i][r] = static_cast<int>(labels.size());
            labels.push_back("s" + std::to_string(r + 1) + "c" + std::to_string(i + 1));
            block.push_back(copy[i][r]);
        }
        parties.push_back(std::move(block));
    }
    std::vector<int> dummies;
    for (int d = 0; d < ell - 1; ++d) {
        dummies.push_back(static_cast<int>(labels.size()));
        labels.push_back("d" + std::to_string(d + 1));
        parties.push_back({dummies.back()});
    }
    const int total = static_cast<int>(labels.size());

    std::vector<VoterType> types;
    {
        std::vector<int> tail = {0};
        append(tail, dummies);
        types.push_back({order_with_tail(tail, total), 1});  // v0
    }
    for (int i = 0; i < k; ++i) {  // W_i pairs: all copies of block i, element order
        std::vector<int> tail = copy[i];
        append(tail, dummies);
        types.push_back({order_with_tail(tail, total), 2});
    }
    for (int j = 0; j < m; ++j) {  // V_j pairs
        std::vector<int> tail = {1};
        for (int i = 0; i < k; ++i)
            for (int r : instance.sets[j]) tail.push_back(copy[i][r]);
        append(tail, dummies);
        types.push_back({order_with_tail(tail, total), 2});
    }
    return finish(std::move(labels), std::move(parties), std::move(types), 0);
}

// --- ranked pairs reductions ------------------------------------------

PartyInstance sat_to_ranked_pairs(const Formula22E3& formula) {
    validate_formula(formula);
    const int r = formula.variables;
    const int q = formula.clause_count();

    std::vector<std::string> labels = {"p", "w"};
    std::vector<std::vector<int>> parties = {{0}, {1}};
    std::vector<int> lit_cand(2 * r);
    for (int v = 0; v < r; ++v) {
        lit_cand[2 * v] = static_cast<int>(labels.size());
        labels.push_back("x" + std::to_string(v + 1));
        lit_cand[2 * v + 1] = static_cast<int>(labels.size());
        labels.push_back("~x" + std::to_string(v + 1));
        parties.push_back({lit_cand[2 * v], lit_cand[2 * v + 1]});
    }
    // clause candidates C_i^j (positive) and C_i^nj (negative), clause-major
    std::vector<std::array<int, 3>> cpos(q), cneg(q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < 3; ++j) {
            cpos[i][j] = static_cast<int>(labels.size());
            labels.push_back("C" + std::to_string(i + 1) + "." + std::to_string(j + 1));
        }
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < 3; ++j) {
            cneg[i][j] = static_cast<int>(labels.size());
            labels.push_back("C" + std::to_string(i + 1) + ".n" + std::to_string(j + 1));
            parties.push_back({cpos[i][j], cneg[i][j]});
        }
    // A(lit) = clause candidates whose slot holds the negated literal
    const auto a_of = [&](int literal) {
        std::vector<int> block;
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < 3; ++j)
                if (formula.clauses[i][j] == -literal) block.push_back(cpos[i][j]);
        return block;
    };

    std::vector<int> all_lits, all_cpos, all_cneg;
    for (int v = 0; v < r; ++v) {
        all_lits.push_back(lit_cand[2 * v]);
        all_lits.push_back(lit_cand[2 * v + 1]);
    }
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < 3; ++j) {
            all_cpos.push_back(cpos[i][j]);
            all_cneg.push_back(cneg[i][j]);
        }

    std::vector<VoterType> types;
    {
        // y_1..y_4
        std::vector<int> o = {0};
        append(o, all_lits);
        for (int i = 0; i < q; ++i) {
            o.push_back(cneg[i][0]);
            o.push_back(cneg[i][1]);
        }
        for (int i = 0; i < q; ++i) o.push_back(cneg[i][2]);
        append(o, all_cpos);
        o.push_back(1);
        types.push_back({std::move(o), 4});
    }
    {
        // y'_1, y'_2
        std::vector<int> o;
        append_reversed(o, all_cpos);
        o.push_back(1);
        for (int i = q - 1; i >= 0; --i) {
            o.push_back(cneg[i][1]);
            o.push_back(cneg[i][2]);
        }
        o.push_back(0);
        for (int i = q - 1; i >= 0; --i) o.push_back(cneg[i][0]);
        append_reversed(o, all_lits);
        types.push_back({std::move(o), 2});
    }
    {
        // y'_3, y'_4
        std::vector<int> o;
        append_reversed(o, all_cpos);
        for (int i = q - 1; i >= 0; --i) o.push_back(cneg[i][2]);
        o.push_back(1);
        for (int i = q - 1; i >= 0; --i) {
            o.push_back(cneg[i][0]);
            o.push_back(cneg[i][1]);
        }
        o.push_back(0);
        append_reversed(o, all_lits);
        types.push_back({std::move(o), 2});
    }
    {
        // z_1, z_2: positive literals then negative, each followed by A(lit)
        std::vector<int> o;
        for (int v = 0; v < r; ++v) {
            o.push_back(lit_cand[2 * v]);
            append(o, a_of(v + 1));
        }
        for (int v = 0; v < r; ++v) {
            o.push_back(lit_cand[2 * v + 1]);
            append(o, a_of(-(v + 1)));
        }
        o.push_back(1);
        o.push_back(0);
        append(o, all_cneg);
        types.push_back({std::move(o), 2});
    }
    // z'_1 and z'_2 share the literal tail: reversed scan, A-sets reversed
    std::vector<int> zp_tail;
    for (int v = r - 1; v >= 0; --v) {
        zp_tail.push_back(lit_cand[2 * v + 1]);
        append_reversed(zp_tail, a_of(-(v + 1)));
    }
    for (int v = r - 1; v >= 0; --v) {
        zp_tail.push_back(lit_cand[2 * v]);
        append_reversed(zp_tail, a_of(v + 1));
    }
    {
        std::vector<int> o;
        append_reversed(o, all_cneg);
        o.push_back(0);
        o.push_back(1);
        append(o, zp_tail);
        types.push_back({std::move(o), 1});  // z'_1
    }
    {
        std::vector<int> o;
        append_reversed(o, all_cneg);
        o.push_back(1);
        o.push_back(0);
        append(o, zp_tail);
        types.push_back({std::move(o), 1});  // z'_2
    }
    return finish(std::move(labels), std::move(parties), std::move(types), 0);
}

PartyInstance clique_to_ranked_pairs(const MulticoloredGraph& graph) {
    validate_graph(graph);
    const int k = graph.classes, r = graph.class_size;

    std::vector<std::string> labels = {"p", "w"};
    std::vector<std::vector<int>> parties = {{0}, {1}};
    std::vector<std::vector<int>> vertex(k, std::vector<int>(r));
    for (int i = 0; i < k; ++i) {
        std::vector<int> block;
        for (int a = 0; a < r; ++a) {
            vertex[i][a] = static_cast<int>(labels.size());
            labels.push_back("u" + std::to_string(i + 1) + "." + std::to_string(a + 1));
            block.push_back(vertex[i][a]);
        }
        parties.push_back(std::move(block));
    }
    // edge candidates in canonical order: by (i, j, a, b)
    std::vector<std::array<int, 4>> edges = graph.edges;
    std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
        if (x[0] != y[0]) return x[0] < y[0];
        if (x[2] != y[2]) return x[2] < y[2];
        if (x[1] != y[1]) return x[1] < y[1];
        return x[3] < y[3];
    });
    std::vector<int> edge_cand(edges.size());
    std::vector<std::vector<int>> edge_party(k, std::vector<int>(k, -1));
    for (size_t e = 0; e < edges.size(); ++e) {
        const auto [i, a, j, b] = edges[e];
        edge_cand[e] = static_cast<int>(labels.size());
        labels.push_back("e" + std::to_string(i + 1) + "." + std::to_string(a + 1) + "-" +
                         std::to_string(j + 1) + "." + std::to_string(b + 1));
        if (edge_party[i][j] == -1) {
            edge_party[i][j] = static_cast<int>(parties.size());
            parties.push_back({});
        }
        parties[edge_party[i][j]].push_back(edge_cand[e]);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (edge_party[i][j] == -1)
                throw std::invalid_argument("clique reduction: no edges between classes " +
                                            std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                            " (every edge party must be nonempty)");

    // incident >-side / <-side edge lists per vertex, canonical order
    std::vector<std::vector<std::vector<int>>> up(k), down(k);
    for (int i = 0; i < k; ++i) {
        up[i].assign(r, {});
        down[i].assign(r, {});
    }
    std::vector<std::vector<int>> e_up(k), e_down(k);  // E_{i,>i} / E_{i,<i} flattened
    for (size_t e = 0; e < edges.size(); ++e) {
        const auto [i, a, j, b] = edges[e];
        up[i][a].push_back(edge_cand[e]);
        down[j][b].push_back(edge_cand[e]);
        e_up[i].push_back(edge_cand[e]);
        e_down[j].push_back(edge_cand[e]);
    }
    std::vector<int> all_vertices, all_edges;
    for (int i = 0; i < k; ++i)
        for (int a = 0; a < r; ++a) all_vertices.push_back(vertex[i][a]);
    all_edges = edge_cand;

    const auto block_a = [&](std::vector<int>& o, int i) {
        for (int a = 0; a < r; ++a) {
            append(o, up[i][a]);
            o.push_back(vertex[i][a]);
        }
    };
    const auto block_a_rev = [&](std::vector<int>& o, int i) {
        for (int a = r - 1; a >= 0; --a) {
            append_reversed(o, up[i][a]);
            o.push_back(vertex[i][a]);
        }
    };
    const auto block_b = [&](std::vector<int>& o, int i) {
        for (int a = 0; a < r; ++a) {
            append(o, down[i][a]);
            o.push_back(vertex[i][a]);
        }
    };
    const auto block_b_rev = [&](std::vector<int>& o, int i) {
        for (int a = r - 1; a >= 0; --a) {
            append_reversed(o, down[i][a]);
            o.push_back(vertex[i][a]);
        }
    };

    std::vector<VoterType> types;
    {
        std::vector<int> o = {0, 1};  // x_1
        for (int i = 0; i < k; ++i) block_a(o, i);
        types.push_back({std::move(o), 1});
    }
    {
        std::vector<int> o = {1, 0};  // x_2
        for (int i = 0; i < k; ++i) block_a(o, i);
        types.push_back({std::move(o), 1});
    }
    {
        std::vector<int> o;  // x'_1, x'_2
        for (int i = k - 1; i >= 0; --i) block_a_rev(o, i);
        o.push_back(1);
        o.push_back(0);
        types.push_back({std::move(o), 2});
    }
    {
        std::vector<int> o = {0, 1};  // x_3, x_4
        for (int i = 0; i < k; ++i) block_b(o, i);
        types.push_back({std::move(o), 2});
    }
    {
        std::vector<int> o;  // x'_3, x'_4
        for (int i = k - 1; i >= 0; --i) block_b_rev(o, i);
        o.push_back(1);
        o.push_back(0);
        types.push_back({std::move(o), 2});
    }
    {
        std::vector<int> o = {0, 1};  // y_1, y_2
        for (int i = 0; i < k; ++i) {
            for (int a = 0; a < r; ++a) o.push_back(vertex[i][a]);
            append(o, e_up[i]);
        }
        types.push_back({std::move(o), 2});
    }
    {
        std::vector<int> o;  // y'_1, y'_2
        for (int i = k - 1; i >= 0; --i) {
            for (int a = r - 1; a >= 0; --a) o.push_back(vertex[i][a]);
            append_reversed(o, e_up[i]);
        }
        o.push_back(1);
        o.push_back(0);
        types.push_back({std::move(o), 2});
    }
    {
        std::vector<int> o = {0, 1};  // y_3, y_4
        for (int i = 0; i < k; ++i) {
            for (int a = 0; a < r; ++a) o.push_back(vertex[i][a]);
            append(o, e_down[i]);
        }
        types.push_back({std::move(o), 2});
    }
    {
        // y'_3, y'_4: the E_{k,<k} block is reversed like its neighbours
        std::vector<int> o;
        for (int i = k - 1; i >= 0; --i) {
            for (int a = r - 1; a >= 0; --a) o.push_back(vertex[i][a]);
            append_reversed(o, e_down[i]);
        }
        o.push_back(1);
        o.push_back(0);
        types.push_back({std::move(o), 2});
    }
    {
        std::vector<int> o = {0};  // z_1, z_2
        append(o, all_vertices);
        append(o, all_edges);
        o.push_back(1);
        types.push_back({std::move(o), 2});
    }
    {
        std::vector<int> o;  // z'_1, z'_2
        append_reversed(o, all_edges);
        o.push_back(1);
        o.push_back(0);
        append_reversed(o, all_vertices);
        types.push_back({std::move(o), 2});
    }
    return finish(std::move(labels), std::move(parties), std::move(types), 0);
}

}  // namespace necpres
