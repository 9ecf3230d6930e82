#include "acampo/branch.hpp"

#include <numeric>

#include "acampo/errors.hpp"

namespace acampo {

void PuiseuxCharacteristic::check() const {
    if (beta0 < 1) throw Error(ErrorKind::InvalidCharacteristic, "beta0 must be positive");
    if (betas.empty()) {
        if (beta0 != 1)
            throw Error(ErrorKind::InvalidCharacteristic,
                        "characteristic (beta0;) with no exponents must have beta0 = 1");
        return;
    }
    if (betas.front() <= beta0)
        throw Error(ErrorKind::InvalidCharacteristic, "beta1 must exceed beta0");
    long long e = beta0;
    long long prev = 0;
    for (long long b : betas) {
        if (b <= prev)
            throw Error(ErrorKind::InvalidCharacteristic, "exponents must be strictly increasing");
        long long e2 = std::gcd(e, b);
        if (e2 == e)
            throw Error(ErrorKind::InvalidCharacteristic, "gcd chain must strictly decrease");
        e = e2;
        prev = b;
    }
    if (e != 1)
        throw Error(ErrorKind::InvalidCharacteristic, "gcd of characteristic exponents must be 1");
}

SemigroupData semigroup_and_delta(const PuiseuxCharacteristic& ch) {
    ch.check();
    SemigroupData out;
    if (ch.betas.empty()) {
        // smooth branch
        out.generators = {1};
        out.conductor = 0;
        out.delta = 0;
        return out;
    }
    // e_q = gcd(e_{q-1}, beta_q);  bbar_1 = beta_1;
    // bbar_q = (e_{q-2}/e_{q-1}) bbar_{q-1} + beta_q - beta_{q-1}
    std::vector<long long> e{ch.beta0};
    std::vector<long long> bbar{ch.beta0, ch.betas[0]};
    for (std::size_t q = 0; q < ch.betas.size(); ++q)
        e.push_back(std::gcd(e[q], ch.betas[q]));
    for (std::size_t q = 2; q <= ch.betas.size(); ++q)
        bbar.push_back((e[q - 2] / e[q - 1]) * bbar[q - 1] + ch.betas[q - 1] - ch.betas[q - 2]);
    long long conductor = 1 - ch.beta0;
    for (std::size_t q = 1; q <= ch.betas.size(); ++q)
        conductor += (e[q - 1] / e[q] - 1) * bbar[q];
    out.generators = bbar;
    out.conductor = conductor;
    if (conductor % 2 != 0)
        throw Error(ErrorKind::InvalidCharacteristic, "conductor of a plane branch must be even");
    out.delta = conductor / 2;
    return out;
}

void GermSpec::check() const {
    if (branches.empty()) throw Error(ErrorKind::IncompleteGerm, "germ needs at least one branch");
    std::size_t r = branches.size();
    for (std::size_t i = 0; i < r; ++i) {
        branches[i].characteristic.check();
        // self-consistency: implicit polynomial must vanish along own parametrization
        const BranchSpec& b = branches[i];
        if (b.has_parametrization() && b.implicit_poly) {
            TruncatedSeries v = b.implicit_poly->eval(*b.param_x, *b.param_y);
            if (!v.no_visible_term())
                throw Error(ErrorKind::ParseError,
                            "branch " + std::to_string(b.id) +
                                ": implicit polynomial does not vanish along its parametrization "
                                "(first term at t^" + v.order()->to_string() + ")");
        }
    }
    if (r >= 2) {
        if (intersection_matrix.size() != r)
            throw Error(ErrorKind::IncompleteGerm, "intersection matrix required for r >= 2");
        for (std::size_t i = 0; i < r; ++i) {
            if (intersection_matrix[i].size() != r)
                throw Error(ErrorKind::IncompleteGerm, "intersection matrix must be r x r");
            for (std::size_t j = 0; j < r; ++j) {
                if (i == j) continue;
                long long v = intersection_matrix[i][j];
                if (v < 1)
                    throw Error(ErrorKind::IncompleteGerm,
                                "missing or non-positive intersection number C_" + std::to_string(i + 1) +
                                    "." + std::to_string(j + 1));
                if (v != intersection_matrix[j][i])
                    throw Error(ErrorKind::IncompleteGerm, "intersection matrix must be symmetric");
            }
        }
    }
}

long long intersection_multiplicity(const BranchSpec& b1, const BranchSpec& b2) {
    if (!b1.has_parametrization())
        throw Error(ErrorKind::NeedsMoreTerms, "first branch carries no parametrization");
    if (!b2.implicit_poly)
        throw Error(ErrorKind::NeedsMoreTerms, "second branch carries no implicit polynomial");
    TruncatedSeries v = b2.implicit_poly->eval(*b1.param_x, *b1.param_y);
    auto ord = v.order();
    if (!ord) {
        std::string need = v.truncation() ? v.truncation()->to_string() : "infinity";
        throw Error(ErrorKind::NeedsMoreTerms,
                    "no term visible below t^" + need +
                        "; extend the parametrization of branch " + std::to_string(b1.id) +
                        " beyond order " + need);
    }
    if (!ord->is_integer() || ord->sign() <= 0)
        throw Error(ErrorKind::ParseError, "intersection order t^" + ord->to_string() +
                                               " is not a positive integer; inconsistent branch data");
    return ord->num.to_int64();
}

GermInvariants germ_invariants(const GermSpec& g) {
    g.check();
    GermInvariants out;
    out.r = g.branches.size();
    long long delta = 0;
    for (const auto& b : g.branches) {
        long long d = semigroup_and_delta(b.characteristic).delta;
        out.branch_deltas.push_back(d);
        delta += d;
    }
    for (std::size_t i = 0; i < out.r; ++i)
        for (std::size_t j = i + 1; j < out.r; ++j) delta += g.pairwise(i, j);
    out.delta = delta;
    out.mu = 2 * delta - static_cast<long long>(out.r) + 1;
    // tau is not computed; report the trivial bound tau <= mu only when the
    // germ has a full implicit model
    bool all_implicit = true;
    for (const auto& b : g.branches)
        if (!b.implicit_poly) all_implicit = false;
    if (all_implicit) out.tau_hint = out.mu;
    return out;
}

}  // namespace acampo
