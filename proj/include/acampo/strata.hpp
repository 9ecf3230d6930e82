#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acampo/divide.hpp"
#include "acampo/lattice.hpp"

namespace acampo {

// Monodromy-invariant class attached to a subset I of branches: a signed sum
// of the double-point cycles shared between I and its complement.
struct InvariantClass {
    std::vector<int> subset;            // sorted branch ids
    std::vector<BigInt> coefficients;   // indexed by double points in basis order
    std::size_t height = 0;             // nonzero coefficient count
};

struct BranchPartition {
    std::vector<std::vector<int>> blocks;  // canonical: blocks sorted by least element

    std::size_t length() const { return blocks.size(); }
    bool is_trivial() const { return blocks.size() == 1; }
    std::string to_string() const;  // e.g. "{1,2}|{3}|{4}"
    bool operator==(const BranchPartition& o) const { return blocks == o.blocks; }
    bool operator<(const BranchPartition& o) const { return blocks < o.blocks; }

    static BranchPartition of_blocks(std::vector<std::vector<int>> blocks);
    // I refines J iff every J-block is a union of I-blocks
    bool refines(const BranchPartition& coarser) const;
};

struct StratumRecord {
    BranchPartition partition;
    long long h = 0;                 // height h_{I.}: |S_{I.}|
    std::vector<int> support;        // S_{I.}: sorted double point ids
    IntMatrix V_gens;                // rows c_{I_1}, ..., c_{I_l}
    std::size_t rank = 0;            // rank of V_{I.}
};

// The classes c_1..c_r: signed vectors supported exactly on J_i^o with
// (a) radical membership, (b) opposite signs at shared double points,
// (c) sum zero; normalized so the lowest-index nonzero coefficient of the
// first nonzero class is +1.
std::vector<InvariantClass> atomic_classes(const CycleLattice& lat, const Divide& d);

// c_I = sum_{i in I} c_i; height checked against the closed formula
// sum_{i in I, i' not in I} C_i . C_i'.
InvariantClass class_sum(const std::vector<InvariantClass>& cs, const std::vector<int>& subset,
                         const GermSpec& germ);

StratumRecord stratum_record(const std::vector<InvariantClass>& cs, const BranchPartition& p,
                             const CycleLattice& lat, const GermSpec& germ);

// All set partitions of {1..r} in canonical order; Bell-number budget r <= 12.
std::vector<BranchPartition> enumerate_partitions(int r, bool include_trivial);

// All strict coarsenings of p (excluding p itself, including the trivial one).
std::vector<BranchPartition> strict_coarsenings(const BranchPartition& p);

struct MultiplicityResult {
    BigInt value;                // |(V_{I.}/n)^o|
    bool enumerated = false;     // exact enumeration ran
    bool ie_agrees = true;       // inclusion-exclusion path agreed (when both ran)
    bool injectivity_ok = true;  // coarsening subgroups embedded with full size
};

// |(V_{I.}/n)^o| = |V_{I.}/n| - |union over strict coarsenings (incl. trivial -> {0})|.
MultiplicityResult stratum_multiplicity(const StratumRecord& rec,
                                        const std::vector<StratumRecord>& all_records, long long n,
                                        unsigned long long budget = kDefaultEnumerationBudget);

// |V_{I.}/n| = n^rank; the component count over a generic point of the stratum.
BigInt curve_component_count(const StratumRecord& rec, long long n);

// General covering case: delegates to the kernel formula.
KernelImageCount covering_component_count(const IntMatrix& T_gens, const IntMatrix& phi, long long n);

}  // namespace acampo
