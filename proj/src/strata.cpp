#include "acampo/strata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "acampo/errors.hpp"

namespace acampo {

namespace {

// double point ids in basis order (the coefficient index space of the classes)
std::vector<int> double_point_ids(const CycleLattice& lat) {
    std::vector<int> ids;
    for (const auto& b : lat.basis)
        if (b.kind == CyclePointKind::DoublePoint) ids.push_back(b.id);
    return ids;
}

int branch_count(const Divide& d) {
    int r = 0;
    for (const auto& p : d.double_points) r = std::max(r, p.branch_b);
    return r;
}

}  // namespace

std::string BranchPartition::to_string() const {
    std::ostringstream os;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) os << "|";
        os << "{";
        for (std::size_t i = 0; i < blocks[b].size(); ++i) {
            if (i) os << ",";
            os << blocks[b][i];
        }
        os << "}";
    }
    return os.str();
}

BranchPartition BranchPartition::of_blocks(std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    BranchPartition p;
    p.blocks = std::move(blocks);
    return p;
}

bool BranchPartition::refines(const BranchPartition& coarser) const {
    // every block of *this must sit inside one block of coarser
    for (const auto& fine : blocks) {
        bool placed = false;
        for (const auto& big : coarser.blocks) {
            if (std::includes(big.begin(), big.end(), fine.begin(), fine.end())) {
                placed = true;
                break;
            }
        }
        if (!placed) return false;
    }
    return true;
}

std::vector<InvariantClass> atomic_classes(const CycleLattice& lat, const Divide& d) {
    std::vector<int> dp_ids = double_point_ids(lat);
    std::map<int, std::size_t> dp_pos;
    for (std::size_t k = 0; k < dp_ids.size(); ++k) dp_pos[dp_ids[k]] = k;
    int r = branch_count(d);
    std::size_t mu = lat.rank();

    // per-branch generator of the radical vectors supported on J_i^o
    std::vector<std::vector<BigInt>> gen(r + 1);
    std::vector<std::vector<int>> shared(r + 1);
    for (int i = 1; i <= r; ++i) {
        shared[i] = d.shared_points_of_branch(i);
        gen[i].assign(dp_ids.size(), BigInt(0));
        if (shared[i].empty()) continue;

        // kernel of the form restricted to the columns J_i^o
        IntMatrix sub(mu, shared[i].size());
        for (std::size_t c = 0; c < shared[i].size(); ++c) {
            std::size_t col = lat.index_of(CyclePointKind::DoublePoint, shared[i][c]);
            for (std::size_t row = 0; row < mu; ++row) sub.at(row, c) = lat.form.at(row, col);
        }
        IntMatrix ker = integer_kernel_basis(sub);
        if (ker.rows() != 1)
            throw Error(ErrorKind::InconsistentDivide,
                        "branch " + std::to_string(i) + ": invariant class is not unique up to sign (kernel rank " +
                            std::to_string(ker.rows()) + ")");
        for (std::size_t c = 0; c < shared[i].size(); ++c) {
            const BigInt& v = ker.at(0, c);
            if (!(v.abs() == BigInt(1)))
                throw Error(ErrorKind::InconsistentDivide,
                            "branch " + std::to_string(i) + ": class coefficient " + v.to_string() +
                                " at double point " + std::to_string(shared[i][c]) + " is not +-1");
            gen[i][dp_pos[shared[i][c]]] = v;
        }
    }

    // fix signs: propagate the opposite-sign constraint across shared points
    std::vector<int> sign(r + 1, 0);
    for (int start = 1; start <= r; ++start) {
        if (sign[start] != 0 || shared[start].empty()) continue;
        sign[start] = 1;
        std::vector<int> queue{start};
        while (!queue.empty()) {
            int i = queue.back();
            queue.pop_back();
            for (const auto& p : d.double_points) {
                if (p.branch_a == p.branch_b) continue;
                if (p.branch_a != i && p.branch_b != i) continue;
                int other = p.branch_a == i ? p.branch_b : p.branch_a;
                std::size_t pos = dp_pos[p.id];
                // required: sign_i * gen_i[pos] = - sign_other * gen_other[pos]
                BigInt lhs = gen[i][pos];
                BigInt rhs = gen[other][pos];
                if (lhs.is_zero() || rhs.is_zero())
                    throw Error(ErrorKind::InconsistentDivide,
                                "shared double point " + std::to_string(p.id) +
                                    " missing from an invariant class support");
                int needed = (lhs * rhs).sign() > 0 ? -sign[i] : sign[i];
                if (sign[other] == 0) {
                    sign[other] = needed;
                    queue.push_back(other);
                } else if (sign[other] != needed) {
                    throw Error(ErrorKind::InconsistentDivide,
                                "opposite-sign constraint has no consistent solution at double point " +
                                    std::to_string(p.id));
                }
            }
        }
    }

    // normalize: lowest-index nonzero coefficient of the first nonzero class is +1
    int anchor = 0;
    for (int i = 1; i <= r && !anchor; ++i)
        if (!shared[i].empty()) anchor = i;
    if (anchor) {
        BigInt first;
        for (const auto& v : gen[anchor])
            if (!v.is_zero()) { first = v; break; }
        if ((first * BigInt(sign[anchor])).is_negative())
            for (int i = 1; i <= r; ++i) sign[i] = -sign[i];
    }

    std::vector<InvariantClass> out;
    std::vector<BigInt> total(dp_ids.size(), BigInt(0));
    for (int i = 1; i <= r; ++i) {
        InvariantClass c;
        c.subset = {i};
        c.coefficients.assign(dp_ids.size(), BigInt(0));
        for (std::size_t k = 0; k < dp_ids.size(); ++k) {
            if (gen[i][k].is_zero()) continue;
            c.coefficients[k] = sign[i] < 0 ? -gen[i][k] : gen[i][k];
            total[k] += c.coefficients[k];
            ++c.height;
        }
        out.push_back(std::move(c));
    }
    for (const auto& t : total)
        if (!t.is_zero())
            throw Error(ErrorKind::InconsistentDivide, "classes do not sum to zero");
    return out;
}

InvariantClass class_sum(const std::vector<InvariantClass>& cs, const std::vector<int>& subset,
                         const GermSpec& germ) {
    InvariantClass out;
    out.subset = subset;
    std::sort(out.subset.begin(), out.subset.end());
    std::size_t ncoef = cs.empty() ? 0 : cs[0].coefficients.size();
    out.coefficients.assign(ncoef, BigInt(0));
    for (int i : out.subset) {
        if (i < 1 || i > static_cast<int>(cs.size()))
            throw Error(ErrorKind::InvalidIndex, "subset contains an unknown branch id");
        for (std::size_t k = 0; k < ncoef; ++k) out.coefficients[k] += cs[i - 1].coefficients[k];
    }
    for (const auto& v : out.coefficients)
        if (!v.is_zero()) ++out.height;

    // closed formula: h_I = sum_{i in I, i' in complement} C_i . C_i'
    std::size_t r = cs.size();
    long long formula = 0;
    std::set<int> inI(out.subset.begin(), out.subset.end());
    for (std::size_t i = 1; i <= r; ++i)
        for (std::size_t j = 1; j <= r; ++j) {
            if (i == j) continue;
            if (inI.count(static_cast<int>(i)) && !inI.count(static_cast<int>(j)))
                formula += germ.pairwise(i - 1, j - 1);
        }
    if (formula != static_cast<long long>(out.height))
        throw Error(ErrorKind::InconsistentDivide,
                    "height of c_I disagrees with the closed formula: " + std::to_string(out.height) +
                        " vs " + std::to_string(formula));
    return out;
}

StratumRecord stratum_record(const std::vector<InvariantClass>& cs, const BranchPartition& p,
                             const CycleLattice& lat, const GermSpec& germ) {
    StratumRecord rec;
    rec.partition = p;
    std::size_t ncoef = cs.empty() ? 0 : cs[0].coefficients.size();
    rec.V_gens = IntMatrix(p.length(), ncoef);

    std::vector<int> dp_ids = double_point_ids(lat);
    std::set<int> support;
    for (std::size_t b = 0; b < p.length(); ++b) {
        InvariantClass cb = class_sum(cs, p.blocks[b], germ);
        for (std::size_t k = 0; k < ncoef; ++k) {
            rec.V_gens.at(b, k) = cb.coefficients[k];
            if (!cb.coefficients[k].is_zero()) support.insert(dp_ids[k]);
        }
    }
    rec.support.assign(support.begin(), support.end());
    rec.h = static_cast<long long>(rec.support.size());
    rec.rank = rec.V_gens.rank();

    // cross-check |S_{I.}| against the closed formula over unordered block pairs
    long long formula = 0;
    for (std::size_t a = 0; a < p.length(); ++a)
        for (std::size_t b = a + 1; b < p.length(); ++b)
            for (int i : p.blocks[a])
                for (int j : p.blocks[b]) formula += germ.pairwise(i - 1, j - 1);
    if (formula != rec.h)
        throw Error(ErrorKind::InconsistentDivide,
                    "partition height |S| = " + std::to_string(rec.h) +
                        " disagrees with the pairwise formula " + std::to_string(formula));
    return rec;
}

std::vector<BranchPartition> enumerate_partitions(int r, bool include_trivial) {
    if (r < 1) throw Error(ErrorKind::InvalidIndex, "need r >= 1");
    if (r > 12) throw Error(ErrorKind::BudgetExceeded, "partition enumeration capped at r = 12");
    std::vector<BranchPartition> out;
    // restricted growth strings in lexicographic order
    std::vector<int> a(r, 0);
    for (;;) {
        int maxa = 0;
        for (int v : a) maxa = std::max(maxa, v);
        std::vector<std::vector<int>> blocks(maxa + 1);
        for (int i = 0; i < r; ++i) blocks[a[i]].push_back(i + 1);
        if (include_trivial || blocks.size() >= 2) out.push_back(BranchPartition::of_blocks(blocks));
        // next RGS
        int i = r - 1;
        for (; i > 0; --i) {
            int cap = 0;
            for (int k = 0; k < i; ++k) cap = std::max(cap, a[k]);
            if (a[i] <= cap) break;
        }
        if (i == 0) break;
        ++a[i];
        for (int k = i + 1; k < r; ++k) a[k] = 0;
    }
    return out;
}

std::vector<BranchPartition> strict_coarsenings(const BranchPartition& p) {
    std::size_t l = p.length();
    std::vector<BranchPartition> out;
    for (const auto& block_part : enumerate_partitions(static_cast<int>(l), true)) {
        if (block_part.length() == l) continue;  // identity merge
        std::vector<std::vector<int>> merged;
        for (const auto& group : block_part.blocks) {
            std::vector<int> blk;
            for (int b : group) {
                const auto& src = p.blocks[b - 1];
                blk.insert(blk.end(), src.begin(), src.end());
            }
            merged.push_back(std::move(blk));
        }
        out.push_back(BranchPartition::of_blocks(std::move(merged)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

const StratumRecord* find_record(const std::vector<StratumRecord>& all, const BranchPartition& p) {
    for (const auto& rec : all)
        if (rec.partition == p) return &rec;
    return nullptr;
}

// inclusion-exclusion over the coarsening poset:
// m(I) = |V_I/n| - sum over strict coarsenings (incl. trivial contributing 1)
BigInt multiplicity_ie(const StratumRecord& rec, const std::vector<StratumRecord>& all, long long n,
                       std::map<std::string, BigInt>& memo) {
    auto it = memo.find(rec.partition.to_string());
    if (it != memo.end()) return it->second;
    BigInt m = BigInt::pow(BigInt(n), rec.rank);
    m -= BigInt(1);  // the trivial partition contributes {0}
    for (const auto& c : strict_coarsenings(rec.partition)) {
        if (c.is_trivial()) continue;
        const StratumRecord* crec = find_record(all, c);
        if (!crec)
            throw Error(ErrorKind::InvalidIndex,
                        "stratum record for coarsening " + c.to_string() + " not supplied");
        m -= multiplicity_ie(*crec, all, n, memo);
    }
    memo.emplace(rec.partition.to_string(), m);
    return m;
}

}  // namespace

MultiplicityResult stratum_multiplicity(const StratumRecord& rec,
                                        const std::vector<StratumRecord>& all_records, long long n,
                                        unsigned long long budget) {
    if (n < 2) throw Error(ErrorKind::InvalidModulus, "modulus must be >= 2");
    MultiplicityResult out;

    // the counting path always runs
    std::map<std::string, BigInt> memo;
    BigInt ie = multiplicity_ie(rec, all_records, n, memo);

    // enumeration path when n^rank fits the budget
    unsigned long long size = 1;
    bool can_enumerate = true;
    for (std::size_t i = 0; i < rec.rank; ++i) {
        if (size > budget / static_cast<unsigned long long>(n)) { can_enumerate = false; break; }
        size *= static_cast<unsigned long long>(n);
    }
    if (!can_enumerate) {
        out.value = ie;
        out.enumerated = false;
        return out;
    }

    std::set<ResidueVector> full = enumerate_quotient(rec.V_gens, n, budget);
    out.injectivity_ok = BigInt(static_cast<long long>(full.size())) == BigInt::pow(BigInt(n), rec.rank);
    std::set<ResidueVector> removed;
    removed.insert(ResidueVector(rec.V_gens.cols(), 0));  // the trivial partition's {0}
    for (const auto& c : strict_coarsenings(rec.partition)) {
        if (c.is_trivial()) continue;
        const StratumRecord* crec = find_record(all_records, c);
        if (!crec)
            throw Error(ErrorKind::InvalidIndex,
                        "stratum record for coarsening " + c.to_string() + " not supplied");
        std::set<ResidueVector> sub = enumerate_quotient(crec->V_gens, n, budget);
        if (BigInt(static_cast<long long>(sub.size())) != BigInt::pow(BigInt(n), crec->rank))
            out.injectivity_ok = false;
        removed.insert(sub.begin(), sub.end());
    }
    long long count = 0;
    for (const auto& v : full)
        if (!removed.count(v)) ++count;
    out.value = BigInt(count);
    out.enumerated = true;
    out.ie_agrees = (ie == out.value);
    return out;
}

BigInt curve_component_count(const StratumRecord& rec, long long n) {
    if (n == 1) return BigInt(1);
    if (n < 1) throw Error(ErrorKind::InvalidModulus, "modulus must be >= 1");
    return BigInt::pow(BigInt(n), rec.rank);
}

KernelImageCount covering_component_count(const IntMatrix& T_gens, const IntMatrix& phi, long long n) {
    return kernel_of_hom_on_subgroup(T_gens, phi, n);
}

}  // namespace acampo
