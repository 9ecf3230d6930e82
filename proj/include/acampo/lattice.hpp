#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "acampo/intmatrix.hpp"

namespace acampo {

inline constexpr unsigned long long kDefaultEnumerationBudget = 1000000ull;

// |L / nL| = n^rank(L) for the lattice L spanned by the rows of gens.
BigInt subgroup_quotient_order(const IntMatrix& gens, long long n);

// The exact set of residue vectors { sum a_k g_k mod n } in (Z/n)^ambient.
// Fails with enumeration-too-large when n^rank(L) exceeds the budget.
using ResidueVector = std::vector<int32_t>;
std::set<ResidueVector> enumerate_quotient(const IntMatrix& gens, long long n,
                                           unsigned long long budget = kDefaultEnumerationBudget);

// Order of the subgroup of (Z/n)^m generated by the rows of gens
// (the honest image, which can be smaller than n^rank for non-saturated lattices).
BigInt subgroup_order_mod_n(const IntMatrix& gens, long long n);

struct KernelImageCount {
    BigInt kernel;
    BigInt image;
    BigInt subgroup;  // kernel * image
};

// phi is an (m' x m) matrix acting on column vectors of (Z/n)^m;
// T is the subgroup generated by the rows of T_gens.
KernelImageCount kernel_of_hom_on_subgroup(const IntMatrix& T_gens, const IntMatrix& phi, long long n);

}  // namespace acampo
