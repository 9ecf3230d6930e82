#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acampo/strata.hpp"

namespace acampo {

enum class TermKind { Main, Stratum };

// One summand of the sheaf decomposition over the deformation base.
struct DecompositionTerm {
    TermKind kind = TermKind::Main;
    std::optional<BranchPartition> partition;
    long long degree = 0;        // cohomological degree of the local system
    long long shift = 0;         // total complex shift (degree + 2h for stratum terms)
    long long twist = 0;         // Tate twist: -h for stratum terms, 0 for main
    BigInt multiplicity;         // |(V_{I.}/n)^o| for stratum terms, 1 for main
    std::string ic_placeholder;  // symbolic stalk label, never a number
    bool lambda_invariant = false;
};

struct PartitionConsistency {
    BranchPartition partition;
    BigInt expected;  // |V_{I.}/n| = n^rank
    BigInt total;     // 1 + sum of |(V/n)^o| over coarsenings including itself
    bool pass = false;
};

struct DecomposeReport {
    long long n = 0;
    long long delta = 0;
    std::size_t r = 0;
    std::vector<DecompositionTerm> terms;
    std::vector<PartitionConsistency> consistency;
    bool consistency_pass = true;
    bool all_enumerated = true;    // every multiplicity was confirmed by enumeration
    bool injectivity_ok = true;    // coarsening subgroups embedded at full size
};

DecomposeReport decompose(const GermSpec& germ, const Divide& d, long long n,
                          unsigned long long budget = kDefaultEnumerationBudget);

// Entries of the symbolic homology-limit report. Stalk dimensions are never
// fabricated: every factor is an image placeholder with symbolic tau-offsets.
struct LimitMainEntry {
    long long degree = 0;   // homological degree i
    long long i_prime = 0;  // exterior power index, 0..i
    std::string image_placeholder;
};

struct LimitStratumEntry {
    long long degree = 0;  // homological degree i
    BranchPartition partition;
    long long h = 0;
    long long twist = 0;           // +h
    long long i_second = 0;        // i'' = sum of the per-block sheaf degrees
    long long j_total = 0;         // i - 2h - i'' = sum of the per-block stalk degrees
    BigInt tuple_count_sheaf;      // compositions of i'' into l parts
    BigInt tuple_count_stalk;      // compositions of j_total into l parts
    std::size_t index_rank = 0;    // rank of V_{I.} (the symbolic index set V^o)
    std::vector<std::string> subtracted_coarsenings;
    std::vector<std::string> factor_placeholders;  // one per block
};

struct HomologyLimitReport {
    long long delta = 0;
    std::size_t r = 0;
    long long max_degree = 0;  // report covers i = 0..2*delta
    std::vector<LimitMainEntry> main_entries;
    std::vector<LimitStratumEntry> stratum_entries;
};

HomologyLimitReport homology_limit_report(const GermSpec& germ, const Divide& d);

}  // namespace acampo
