#include "acampo/lattice.hpp"

#include <deque>

#include "acampo/errors.hpp"

namespace acampo {

namespace {

void check_modulus(long long n) {
    if (n < 2) throw Error(ErrorKind::InvalidModulus, "modulus must be >= 2");
}

int32_t mod_reduce(const BigInt& v, long long n) {
    BigInt r = v % BigInt(n);
    long long x = r.to_int64();
    if (x < 0) x += n;
    return static_cast<int32_t>(x);
}

}  // namespace

BigInt subgroup_quotient_order(const IntMatrix& gens, long long n) {
    check_modulus(n);
    std::size_t r = gens.rows() == 0 ? 0 : gens.rank();
    return BigInt::pow(BigInt(n), r);
}

std::set<ResidueVector> enumerate_quotient(const IntMatrix& gens, long long n,
                                           unsigned long long budget) {
    check_modulus(n);
    std::size_t ambient = gens.cols();
    std::size_t r = gens.rows() == 0 ? 0 : gens.rank();

    // budget guard on n^rank before touching any vectors
    unsigned long long size = 1;
    for (std::size_t i = 0; i < r; ++i) {
        if (size > budget / static_cast<unsigned long long>(n))
            throw Error(ErrorKind::EnumerationTooLarge,
                        "n^rank exceeds enumeration budget; use the counting path");
        size *= static_cast<unsigned long long>(n);
    }

    std::vector<ResidueVector> gv;
    gv.reserve(gens.rows());
    for (std::size_t i = 0; i < gens.rows(); ++i) {
        ResidueVector g(ambient);
        bool zero = true;
        for (std::size_t j = 0; j < ambient; ++j) {
            g[j] = mod_reduce(gens.at(i, j), n);
            if (g[j] != 0) zero = false;
        }
        if (!zero) gv.push_back(std::move(g));
    }

    std::set<ResidueVector> out;
    std::deque<ResidueVector> frontier;
    ResidueVector zero(ambient, 0);
    out.insert(zero);
    frontier.push_back(zero);
    while (!frontier.empty()) {
        ResidueVector v = frontier.front();
        frontier.pop_front();
        for (const auto& g : gv) {
            ResidueVector w(ambient);
            for (std::size_t j = 0; j < ambient; ++j) {
                int32_t s = v[j] + g[j];
                if (s >= n) s -= static_cast<int32_t>(n);
                w[j] = s;
            }
            if (out.insert(w).second) frontier.push_back(std::move(w));
        }
    }
    return out;
}

BigInt subgroup_order_mod_n(const IntMatrix& gens, long long n) {
    check_modulus(n);
    std::size_t m = gens.cols();
    // |image in (Z/n)^m| = n^m / |Z^m / (L + nZ^m)|
    IntMatrix stacked(gens.rows() + m, m);
    for (std::size_t i = 0; i < gens.rows(); ++i)
        for (std::size_t j = 0; j < m; ++j) stacked.at(i, j) = gens.at(i, j);
    for (std::size_t j = 0; j < m; ++j) stacked.at(gens.rows() + j, j) = BigInt(n);
    SmithForm sf = smith_normal_form(stacked);
    BigInt cokernel(1);
    for (const auto& d : sf.invariant_factors())
        if (!d.is_zero()) cokernel *= d;
    return BigInt::pow(BigInt(n), m) / cokernel;
}

KernelImageCount kernel_of_hom_on_subgroup(const IntMatrix& T_gens, const IntMatrix& phi, long long n) {
    check_modulus(n);
    if (phi.cols() != T_gens.cols())
        throw Error(ErrorKind::ShapeError, "phi column count must equal the ambient rank of T_gens");
    KernelImageCount out;
    out.subgroup = subgroup_order_mod_n(T_gens, n);
    IntMatrix image_gens = T_gens * phi.transpose();
    out.image = subgroup_order_mod_n(image_gens, n);
    out.kernel = out.subgroup / out.image;
    return out;
}

}  // namespace acampo
