#include "acampo/monodromy.hpp"

#include <algorithm>
#include <functional>

#include "acampo/errors.hpp"

namespace acampo {

Transvection picard_lefschetz(const CycleLattice& lat, std::size_t i, PLSign sign) {
    std::size_t n = lat.rank();
    if (i >= n) throw Error(ErrorKind::InvalidIndex, "cycle index out of range");
    Transvection t;
    t.cycle_index = i;
    t.sign_convention = sign;
    t.matrix = IntMatrix::identity(n);
    // column j of the matrix is the image of e_j: e_j +/- <e_j, delta_i> e_i
    for (std::size_t j = 0; j < n; ++j) {
        BigInt c = lat.form.at(j, i);
        if (sign == PLSign::Minus) c = -c;
        t.matrix.at(i, j) += c;
    }
    return t;
}

IntMatrix radical(const CycleLattice& lat) { return integer_kernel_basis(lat.form); }

SymplecticQuotient symplectic_quotient(const CycleLattice& lat, PLSign sign) {
    SymplecticQuotient sq;
    sq.sign_convention = sign;
    std::size_t n = lat.rank();
    SmithForm sf = smith_normal_form(lat.form);
    std::size_t r = sf.num_nonzero();  // rank of the form
    sq.quotient_rank = r;

    // columns of V: first r map onto a complement of the kernel, rest span it
    sq.radical_basis = IntMatrix(n - r, n);
    for (std::size_t k = 0; k < n - r; ++k)
        for (std::size_t i = 0; i < n; ++i) sq.radical_basis.at(k, i) = sf.V.at(i, r + k);

    IntMatrix W(n, r);  // complement basis as columns
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < n; ++i) W.at(i, k) = sf.V.at(i, k);

    sq.induced_form = W.transpose() * lat.form * W;

    // A transvection fixes the radical pointwise and sends W u to
    // W u + c <W u, delta_i> delta_i, so its matrix in V-coordinates is block
    // lower triangular; the quotient action is the top-left r x r block.
    // V^{-1} comes from the Smith data of V itself: U' V V' = I.
    IntMatrix Vfull = sf.V;
    SmithForm vs = smith_normal_form(Vfull);
    if (vs.D != IntMatrix::identity(n))
        throw Error(ErrorKind::ShapeError, "change-of-basis matrix is not unimodular");
    IntMatrix Vinv = vs.V * vs.U;

    for (std::size_t i = 0; i < n; ++i) {
        Transvection t = picard_lefschetz(lat, i, sign);
        IntMatrix conj = Vinv * t.matrix * Vfull;  // action in V-coordinates
        IntMatrix g(r, r);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) g.at(a, b) = conj.at(a, b);
        sq.induced_generators.push_back(std::move(g));
    }
    return sq;
}

namespace {

using ModRow = std::vector<int32_t>;

int32_t mod_val(const BigInt& v, long long p) {
    long long x = (v % BigInt(p)).to_int64();
    if (x < 0) x += p;
    return static_cast<int32_t>(x);
}

std::vector<ModRow> to_mod(const IntMatrix& m, long long p) {
    std::vector<ModRow> out(m.rows(), ModRow(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = mod_val(m.at(i, j), p);
    return out;
}

int64_t inv_mod(int64_t a, int64_t p) {
    int64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// row-echelon basis of a subspace, kept reduced; returns dimension
struct Echelon {
    long long p;
    std::size_t n;
    std::vector<ModRow> rows;      // reduced echelon rows
    std::vector<std::size_t> lead;  // pivot column per row

    explicit Echelon(long long p_, std::size_t n_) : p(p_), n(n_) {}

    // returns true if the vector enlarged the subspace
    bool insert(ModRow v) {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            int64_t c = v[lead[k]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                v[j] = static_cast<int32_t>(((v[j] - c * rows[k][j]) % p + p * p) % p);
        }
        std::size_t piv = n;
        for (std::size_t j = 0; j < n; ++j)
            if (v[j] != 0) { piv = j; break; }
        if (piv == n) return false;
        int64_t inv = inv_mod(v[piv], p);
        for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<int32_t>(v[j] * inv % p);
        // back-substitute into earlier rows
        for (std::size_t k = 0; k < rows.size(); ++k) {
            int64_t c = rows[k][piv];
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                rows[k][j] = static_cast<int32_t>(((rows[k][j] - c * v[j]) % p + p * p) % p);
        }
        rows.push_back(std::move(v));
        lead.push_back(piv);
        return true;
    }

    std::size_t dim() const { return rows.size(); }
};

ModRow apply(const std::vector<ModRow>& g, const ModRow& v, long long p) {
    std::size_t n = v.size();
    ModRow out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int64_t acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += static_cast<int64_t>(g[i][j]) * v[j];
        out[i] = static_cast<int32_t>(acc % p);
    }
    return out;
}

// closure of {seed} under the generators; returns echelon basis
Echelon spin(const ModRow& seed, const std::vector<std::vector<ModRow>>& gens, long long p) {
    std::size_t n = seed.size();
    Echelon ech(p, n);
    std::vector<ModRow> frontier;
    if (ech.insert(seed)) frontier.push_back(seed);
    while (!frontier.empty()) {
        ModRow v = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            ModRow w = apply(g, v, p);
            if (ech.insert(w)) frontier.push_back(w);
        }
    }
    return ech;
}

std::size_t rank_mod(std::vector<ModRow> rows, long long p, std::size_t n) {
    Echelon e(p, n);
    for (auto& r : rows) e.insert(std::move(r));
    return e.dim();
}

}  // namespace

SpEvidenceReport sp_fullness_evidence_for_generators(const IntMatrix& form,
                                                     const std::vector<IntMatrix>& generators,
                                                     const std::vector<long long>& primes,
                                                     unsigned long long budget) {
    std::size_t n = form.rows();
    if (n < 2) throw Error(ErrorKind::NotApplicable, "quotient rank must be at least 2");
    SpEvidenceReport rep;
    rep.quotient_rank = n;

    for (long long p : primes) {
        if (p < 3 || p % 2 == 0) throw Error(ErrorKind::InvalidPrime, "primes must be odd and >= 3");
        PrimeEvidence ev;
        ev.p = p;

        auto J = to_mod(form, p);
        std::vector<std::vector<ModRow>> gens;
        for (const auto& g : generators) gens.push_back(to_mod(g, p));

        // (b) transvection shape and (c) form preservation mod p
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            const auto& g = gens[gi];
            std::vector<ModRow> gm1 = g;
            for (std::size_t i = 0; i < n; ++i) gm1[i][i] = static_cast<int32_t>((gm1[i][i] + p - 1) % p);
            if (rank_mod(gm1, p, n) > 1) ev.generators_are_transvections = false;
            // g^T J g = J
            for (std::size_t a = 0; a < n && ev.form_preserved; ++a)
                for (std::size_t b = 0; b < n && ev.form_preserved; ++b) {
                    int64_t acc = 0;
                    for (std::size_t i = 0; i < n; ++i) {
                        int64_t ji = 0;
                        for (std::size_t j = 0; j < n; ++j) ji += static_cast<int64_t>(J[i][j]) * g[j][b] % p;
                        acc += static_cast<int64_t>(g[i][a]) * (ji % p) % p;
                        acc %= p;
                    }
                    if (((acc - J[a][b]) % p + p) % p != 0) ev.form_preserved = false;
                }
        }

        // (a) irreducibility by exhaustive projective spinning when affordable
        unsigned long long count = 1;
        bool exhaustive = true;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (count > budget / static_cast<unsigned long long>(p)) { exhaustive = false; break; }
            count *= static_cast<unsigned long long>(p);
        }
        bool reducible_found = false;
        if (exhaustive) {
            // canonical projective representatives: first nonzero coordinate = 1
            ModRow v(n, 0);
            std::size_t lead = n;
            std::function<void(std::size_t)> iterate = [&](std::size_t idx) {
                if (reducible_found) return;
                if (idx == n) {
                    if (lead == n) return;
                    Echelon e = spin(v, gens, p);
                    if (e.dim() < n) {
                        reducible_found = true;
                        for (const auto& r : e.rows) {
                            std::vector<int> row(r.begin(), r.end());
                            ev.invariant_subspace.push_back(row);
                        }
                    }
                    return;
                }
                if (lead == n) {
                    // leading coordinate fixed to 1 or stay zero
                    v[idx] = 0;
                    iterate(idx + 1);
                    if (reducible_found) return;
                    v[idx] = 1;
                    std::size_t saved = lead;
                    lead = idx;
                    iterate(idx + 1);
                    lead = saved;
                    v[idx] = 0;
                } else {
                    for (int32_t c = 0; c < p && !reducible_found; ++c) {
                        v[idx] = c;
                        iterate(idx + 1);
                    }
                    v[idx] = 0;
                }
            };
            iterate(0);
            ev.irreducible = !reducible_found;
        } else {
            throw Error(ErrorKind::BudgetExceeded,
                        "projective spinning needs about p^(rank-1) seeds, which exceeds the budget");
        }
        rep.primes.push_back(std::move(ev));
    }
    return rep;
}

SpEvidenceReport sp_fullness_evidence(const SymplecticQuotient& sq, const std::vector<long long>& primes,
                                      unsigned long long budget) {
    if (sq.quotient_rank < 2) throw Error(ErrorKind::NotApplicable, "quotient rank must be at least 2");
    // drop duplicate induced generators to keep the spinning loop tight
    std::vector<IntMatrix> gens;
    for (const auto& g : sq.induced_generators) {
        bool dup = false;
        for (const auto& h : gens)
            if (h == g) { dup = true; break; }
        if (!dup) gens.push_back(g);
    }
    return sp_fullness_evidence_for_generators(sq.induced_form, gens, primes, budget);
}

}  // namespace acampo
