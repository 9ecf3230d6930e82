#pragma once

#include <string>
#include <vector>

#include "acampo/branch.hpp"
#include "acampo/intmatrix.hpp"

namespace acampo {

enum class RegionSign { Plus, Minus };

struct DoublePoint {
    int id = 0;
    int branch_a = 0;  // incident branches, branch_a <= branch_b; equal for a self-crossing
    int branch_b = 0;
};

struct SignedRegion {
    int id = 0;
    RegionSign sign = RegionSign::Plus;
    std::vector<int> closure_double_points;  // sorted ids
    std::vector<int> segment_neighbors;      // sorted region ids of opposite sign
};

// Combinatorics of a real morsification: double points and signed regions.
struct Divide {
    std::vector<DoublePoint> double_points;
    std::vector<SignedRegion> regions;

    std::size_t mu0() const { return double_points.size(); }
    std::size_t mu_plus() const;
    std::size_t mu_minus() const;
    std::size_t mu() const { return mu0() + regions.size(); }

    const DoublePoint& point_by_id(int id) const;
    const SignedRegion& region_by_id(int id) const;

    // indices of double points on branch i shared with a different branch (J_i^o)
    std::vector<int> shared_points_of_branch(int branch) const;

    // structural sanity: ids unique, references valid, neighbor relation
    // symmetric with opposite signs; throws must-validate-first on violation
    void check_structure() const;
};

struct ValidationIssue {
    std::string what;
    long long expected = 0;
    long long actual = 0;
};

struct ValidationReport {
    bool pass = true;
    std::vector<ValidationIssue> issues;
};

// Divide-vs-germ consistency: mu0 = delta, mu_+ + mu0 + mu_- = mu,
// per-pair crossing counts, per-branch self-crossing counts, structure.
ValidationReport validate_divide(const Divide& d, const GermSpec& germ);

enum class CyclePointKind { PlusRegion, DoublePoint, MinusRegion };

struct CycleBasisPoint {
    CyclePointKind kind;
    int id;  // region id or double point id
};

// Free lattice on the critical points with the skew intersection form.
// Basis order: plus regions, then double points, then minus regions, ids ascending.
struct CycleLattice {
    std::vector<CycleBasisPoint> basis;
    IntMatrix form;  // antisymmetric, entries in {-1,0,1}

    std::size_t rank() const { return basis.size(); }
    std::size_t index_of(CyclePointKind kind, int id) const;
};

// Requires d.check_structure() to hold; the pairing follows the three
// incidence cases, +1 in the order (plus, double), (double, minus), (plus, minus).
CycleLattice intersection_form(const Divide& d);

struct DynkinGraph {
    struct Vertex {
        CyclePointKind kind;
        int id;
    };
    std::vector<Vertex> vertices;                 // basis order
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, lex sorted
};

DynkinGraph dynkin_graph(const CycleLattice& lat);

// DOT with circle for double points, doublecircle for plus, diamond for minus.
std::string dynkin_to_dot(const DynkinGraph& g);

// Tag-respecting graph isomorphism (small graphs, backtracking).
bool dynkin_isomorphic(const DynkinGraph& a, const DynkinGraph& b);

}  // namespace acampo
