#pragma once

#include <optional>
#include <vector>

#include "acampo/divide.hpp"

namespace acampo {

enum class PLSign { Plus, Minus };

// Picard-Lefschetz transvection gamma_i(a) = a +/- <a, delta_i> delta_i.
struct Transvection {
    std::size_t cycle_index = 0;
    PLSign sign_convention = PLSign::Plus;
    IntMatrix matrix;  // acts on column vectors in the distinguished basis
};

Transvection picard_lefschetz(const CycleLattice& lat, std::size_t i, PLSign sign = PLSign::Plus);

// Saturated basis (rows) of { a : <a, delta_j> = 0 for all j }.
IntMatrix radical(const CycleLattice& lat);

struct SymplecticQuotient {
    IntMatrix radical_basis;              // rows
    std::size_t quotient_rank = 0;
    IntMatrix induced_form;               // nondegenerate skew form on W = E/E^perp
    std::vector<IntMatrix> induced_generators;  // images of the transvections, basis order
    PLSign sign_convention = PLSign::Plus;
};

SymplecticQuotient symplectic_quotient(const CycleLattice& lat, PLSign sign = PLSign::Plus);

struct PrimeEvidence {
    long long p = 0;
    bool irreducible = false;
    // basis rows of a proper invariant subspace mod p, when one exists
    std::vector<std::vector<int>> invariant_subspace;
    bool generators_are_transvections = true;  // (g - 1) has rank <= 1 mod p
    bool form_preserved = true;                // g^T J g = J mod p
};

struct SpEvidenceReport {
    std::size_t quotient_rank = 0;
    std::vector<PrimeEvidence> primes;
};

// Desk-scale evidence: per odd prime, exhaustive spinning over the projective
// space of W (x) F_p when p^rank fits the budget, deterministic kernel-seeded
// search otherwise. Never claims more than (a) irreducibility of the reduction,
// (b) transvection shape, (c) form preservation.
SpEvidenceReport sp_fullness_evidence(const SymplecticQuotient& sq, const std::vector<long long>& primes,
                                      unsigned long long budget = 2000000ull);

// Same checks against an explicit generator subset (used for counterexamples).
SpEvidenceReport sp_fullness_evidence_for_generators(const IntMatrix& form,
                                                     const std::vector<IntMatrix>& generators,
                                                     const std::vector<long long>& primes,
                                                     unsigned long long budget = 2000000ull);

}  // namespace acampo
