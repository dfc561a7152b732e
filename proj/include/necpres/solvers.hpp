#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "necpres/election.hpp"
#include "necpres/rational.hpp"
#include "necpres/rules.hpp"
#include "necpres/scoring.hpp"

namespace necpres {

// Raised when a solver's search space exceeds its configured budget.
// Superpolynomial blow-ups must fail loudly instead of hanging.
struct BudgetError : std::runtime_error {
    std::int64_t projected;
    std::int64_t limit;
    BudgetError(const std::string& what, std::int64_t proj, std::int64_t lim)
        : std::runtime_error(what), projected(proj), limit(lim) {}
};

// A NO answer always carries a re-checkable counterexample: the nominee set
// and a candidate that wins the reduced election while p does not.
struct Certificate {
    std::vector<int> nominees;  // ascending candidate indices, contains p
    int witness = -1;
};

struct Verdict {
    bool yes = true;
    std::optional<Certificate> certificate;
    std::string rule;
    std::string solver;
    std::string tiebreak;  // ranked pairs only
    std::int64_t guesses = 0;
    std::vector<std::string> notes;
};

struct CertificateCheck {
    bool valid = false;
    std::string reason;
};

// Re-validates a NO certificate by direct winner determination.
CertificateCheck check_certificate(const PartyInstance& instance, const RuleSpec& rule,
                                   const Certificate& cert);

// --- brute force ------------------------------------------------------

inline constexpr std::int64_t kDefaultBruteforceBudget = 10'000'000;

// Enumerates every nomination containing p (parties ordered by ascending
// size, mixed-radix). Refuses when the nomination count exceeds the budget.
Verdict solve_bruteforce(const PartyInstance& instance, const RuleSpec& rule,
                         std::int64_t budget = kDefaultBruteforceBudget);

// --- Borda ------------------------------------------------------------

// Excess of w's score over p's caused by nominating c, summed over voters:
// #{v : w > c > p} - #{v : p > c > w}.
std::int64_t borda_delta(int c, int p, int w, const Election& election);

Verdict solve_borda(const PartyInstance& instance);

// --- Copeland^alpha ---------------------------------------------------

// Score-difference contribution of nominee c to Cpl(w) - Cpl(p); depends
// only on the head-to-head relations of c with w and p.
Rational copeland_pair_delta(int c, int w, int p, const MajorityMatrix& matrix,
                             const Alpha& alpha);

Verdict solve_copeland(const PartyInstance& instance, const Alpha& alpha);

// --- Maximin ----------------------------------------------------------

Verdict solve_maximin(const PartyInstance& instance);

// --- FPT algorithm for short rules ------------------------------------

// A guessed structure of a hypothetical reduced election: a partition of the
// (voter type, scored position) grid by nominating party, plus the classes
// held by w's and p's parties (q_p = -1 when p is unscored everywhere).
struct StructureGuess {
    int witness = -1;
    int block_count = 0;
    std::vector<int> cell_block;  // cell (i,j) at index i*L + j
    int q_w = -1;
    int q_p = -1;
};

// Whether candidate c can occupy class `block` given the guess: its order
// relative to p and w in every voter type must match the class positions.
bool well_placed(const PartyInstance& instance, const std::vector<std::vector<int>>& ranks,
                 const StructureGuess& guess, int candidate, int block, int scored_positions);

// Set partitions of a tau x L grid, restricted-growth order. Blocks never
// hold two cells of the same row (one party cannot fill two positions of one
// vote) and the block count is capped. The callback sees (cell_block,
// block_count); enumeration stops early when it returns false.
void enumerate_structures(int tau, int scored_positions, int max_blocks,
                          const std::function<bool(const std::vector<int>&, int)>& emit);

struct FptOptions {
    std::int64_t guess_budget = 100'000'000;
    std::int64_t partition_budget = 2'000'000;
};

Verdict solve_short_fpt(const PartyInstance& instance, const ShortRule& family,
                        const FptOptions& options = {});

// Case split on t vs l*tau: delegate to the short machinery with the full
// effective vector, or decide via the preferred-party count per voter type.
Verdict solve_vetolike_fpt(const PartyInstance& instance, const VetoLikeRule& family,
                           const FptOptions& options = {});

// Routing used by the CLI's --solver auto.
Verdict solve_auto(const PartyInstance& instance, const RuleSpec& rule,
                   std::int64_t bruteforce_budget = kDefaultBruteforceBudget,
                   const FptOptions& options = {});

}  // namespace necpres
