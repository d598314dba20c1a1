#pragma once

#include <vector>

#include "hookpairs/composition.hpp"
#include "hookpairs/critical.hpp"
#include "hookpairs/numeric.hpp"

namespace hookpairs {

enum class SearchMode { RankPermutation, NaiveComposition };

// Bounds for the brute-force partner search.  The ambient length defaults to
// l(alpha)+|alpha|, which suffices for any critical partner; rank-permutation
// mode additionally requires n_max <= factorial_cap.
struct SearchBounds {
    int n_max = -1;  // -1: use l(alpha)+|alpha|
    SearchMode mode = SearchMode::RankPermutation;
    int factorial_cap = 9;
    bool extended = false;  // allow m = 0 (naive mode only)
};

// All beta with l(beta) <= n_max such that (alpha,beta) is a (-n/m)-critical
// pair.  Rank-permutation mode determines beta from a candidate rank vector
// sigma via beta_i = alpha_i + (n/m)(r(alpha,i) - sigma(i)); naive mode
// enumerates compositions of |alpha| outright and filters by the checker.
// Results are trimmed and sorted canonically.  Infeasible bounds throw.
std::vector<Composition> enumerate_partners(const Composition& alpha, const Int& m, const Int& n,
                                            SearchBounds bounds = {});

struct UniquenessRecord {
    Composition alpha;
    Int node_m;  // factor as it occurs at the unique node
    Int node_n;
    Int m;       // reduced factor
    Int n;
    long long multiplicity = 1;
    bool coprime = false;  // gcd(node_m, node_n) == 1
    int n_max = 0;         // ambient bound the search ran with
    std::vector<Composition> partners;
    bool flagged = false;  // coprime case with partner count != 1
};

struct UniquenessReport {
    std::vector<UniquenessRecord> records;  // coprime and non-coprime sections
    long long flag_count = 0;
};

// For every alpha in the corpus and every reduced hook factor of multiplicity
// one, counts the critical partners found by exhaustion.  Factors whose node
// occurrence (m,n) is coprime belong to the conjecture scan and are flagged
// when the count differs from one; non-coprime occurrences are reported in a
// separate section and never flagged.
UniquenessReport uniqueness_scan(const std::vector<Composition>& corpus, int max_n,
                                 int factorial_cap = 9);

struct NegativeExistenceViolation {
    Composition alpha;
    Composition beta;
    Int m;
    Int n;
};

struct NegativeExistenceReport {
    long long alphas = 0;
    long long pairs_checked = 0;
    long long parallel_pairs = 0;  // valid critical pairs encountered
    std::vector<NegativeExistenceViolation> violations;
};

// Exhaustively searches for pairs alpha |> beta whose difference vectors are
// parallel with a ratio implying n <= 0 or m < 0; a proved proposition says
// there are none.
NegativeExistenceReport negative_existence_scan(const std::vector<Composition>& corpus);

// Corpus helpers: all compositions (resp. partitions) with weight <= max_weight
// and length <= max_length, in canonical order.
std::vector<Composition> all_compositions(int max_weight, int max_length);
std::vector<Composition> all_partitions(int max_weight, int max_length);

}  // namespace hookpairs
