#pragma once

#include <optional>
#include <vector>

#include "acampo/poly2.hpp"
#include "acampo/series.hpp"

namespace acampo {

// Puiseux characteristic (beta0; beta_1 < ... < beta_g), gcd of all = 1.
struct PuiseuxCharacteristic {
    long long beta0 = 1;
    std::vector<long long> betas;

    void check() const;  // throws invalid-characteristic
};

struct SemigroupData {
    std::vector<long long> generators;  // minimal generators beta-bar_q
    long long conductor = 0;
    long long delta = 0;
};

// Characteristic-to-semigroup recursion; delta = conductor / 2.
SemigroupData semigroup_and_delta(const PuiseuxCharacteristic& ch);

struct BranchSpec {
    int id = 0;
    PuiseuxCharacteristic characteristic;
    std::optional<TruncatedSeries> param_x;
    std::optional<TruncatedSeries> param_y;
    std::optional<Poly2> implicit_poly;

    bool has_parametrization() const { return param_x.has_value() && param_y.has_value(); }
};

struct GermSpec {
    std::vector<BranchSpec> branches;
    // off-diagonal C_i . C_j, diagonal unused; entry -1 means "not given"
    std::vector<std::vector<long long>> intersection_matrix;
    std::vector<std::vector<bool>> entry_given;  // provenance: given vs computed

    std::size_t branch_count() const { return branches.size(); }
    long long pairwise(std::size_t i, std::size_t j) const { return intersection_matrix[i][j]; }

    void check() const;  // structural invariants; throws incomplete-germ / parse errors
};

// ord_t of b2's implicit polynomial along b1's parametrization.
// Throws needs-more-terms (with the required order in the message) when the
// truncation of b1 cannot exhibit the leading term.
long long intersection_multiplicity(const BranchSpec& b1, const BranchSpec& b2);

struct GermInvariants {
    std::size_t r = 0;
    long long delta = 0;
    long long mu = 0;
    std::optional<long long> tau_hint;
    std::vector<long long> branch_deltas;
};

GermInvariants germ_invariants(const GermSpec& g);

}  // namespace acampo
