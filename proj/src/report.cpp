#include "acampo/report.hpp"

#include <map>
#include <sstream>

#include "acampo/errors.hpp"

namespace acampo {

namespace {

std::string block_label(const std::vector<int>& block) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) os << ",";
        os << block[i];
    }
    os << "}";
    return os.str();
}

BigInt compositions(long long total, std::size_t parts) {
    // number of tuples of `parts` nonnegative integers with the given sum
    if (parts == 0) return BigInt(total == 0 ? 1 : 0);
    BigInt num(1), den(1);
    for (std::size_t k = 1; k < parts; ++k) {
        num *= BigInt(total + static_cast<long long>(k));
        den *= BigInt(static_cast<long long>(k));
    }
    return num / den;
}

struct StrataBundle {
    GermInvariants inv;
    CycleLattice lat;
    std::vector<InvariantClass> classes;
    std::vector<BranchPartition> partitions;  // nontrivial, canonical order
    std::vector<StratumRecord> records;
};

StrataBundle build_strata(const GermSpec& germ, const Divide& d) {
    StrataBundle b;
    ValidationReport vr = validate_divide(d, germ);
    if (!vr.pass) {
        std::string what = "divide fails validation:";
        for (const auto& issue : vr.issues)
            what += " [" + issue.what + " expected " + std::to_string(issue.expected) + " got " +
                    std::to_string(issue.actual) + "]";
        throw Error(ErrorKind::MustValidateFirst, what);
    }
    b.inv = germ_invariants(germ);
    b.lat = intersection_form(d);
    b.classes = atomic_classes(b.lat, d);
    b.partitions = enumerate_partitions(static_cast<int>(b.inv.r), false);
    for (const auto& p : b.partitions) b.records.push_back(stratum_record(b.classes, p, b.lat, germ));
    return b;
}

}  // namespace

DecomposeReport decompose(const GermSpec& germ, const Divide& d, long long n,
                          unsigned long long budget) {
    if (n < 2) throw Error(ErrorKind::InvalidModulus, "modulus must be >= 2");
    StrataBundle b = build_strata(germ, d);

    DecomposeReport rep;
    rep.n = n;
    rep.delta = b.inv.delta;
    rep.r = b.inv.r;

    for (long long i = 0; i <= 2 * b.inv.delta; ++i) {
        DecompositionTerm t;
        t.kind = TermKind::Main;
        t.degree = i;
        t.shift = i;
        t.twist = 0;
        t.multiplicity = BigInt(1);
        t.ic_placeholder = "stalk[j_!*(R^" + std::to_string(i) + " f^sm Q)]";
        t.lambda_invariant = true;
        rep.terms.push_back(std::move(t));
    }

    std::map<std::string, BigInt> mult_of;
    for (std::size_t k = 0; k < b.records.size(); ++k) {
        const StratumRecord& rec = b.records[k];
        MultiplicityResult m = stratum_multiplicity(rec, b.records, n, budget);
        mult_of[rec.partition.to_string()] = m.value;
        if (!m.enumerated) rep.all_enumerated = false;
        if (!m.injectivity_ok) rep.injectivity_ok = false;
        if (m.enumerated && !m.ie_agrees)
            throw Error(ErrorKind::InconsistentDivide,
                        "enumeration and inclusion-exclusion disagree on " + rec.partition.to_string());
        if (m.value.is_zero()) continue;
        for (long long i = 0; i <= 2 * (b.inv.delta - rec.h); ++i) {
            DecompositionTerm t;
            t.kind = TermKind::Stratum;
            t.partition = rec.partition;
            t.degree = i;
            t.shift = i + 2 * rec.h;
            t.twist = -rec.h;
            t.multiplicity = m.value;
            t.ic_placeholder =
                "stalk[j_!*(F^" + std::to_string(i) + ")_" + rec.partition.to_string() + "]";
            t.lambda_invariant = false;
            rep.terms.push_back(std::move(t));
        }
    }

    // partition-sum identity: 1 + sum over coarsenings >= I of |(V/n)^o| = n^rank
    for (const auto& rec : b.records) {
        PartitionConsistency pc;
        pc.partition = rec.partition;
        pc.expected = BigInt::pow(BigInt(n), rec.rank);
        BigInt total(1);  // the zero class from the trivial partition
        total += mult_of[rec.partition.to_string()];
        for (const auto& c : strict_coarsenings(rec.partition)) {
            if (c.is_trivial()) continue;
            total += mult_of[c.to_string()];
        }
        pc.total = total;
        pc.pass = pc.total == pc.expected;
        if (!pc.pass) rep.consistency_pass = false;
        rep.consistency.push_back(std::move(pc));
    }
    return rep;
}

HomologyLimitReport homology_limit_report(const GermSpec& germ, const Divide& d) {
    StrataBundle b = build_strata(germ, d);

    HomologyLimitReport rep;
    rep.delta = b.inv.delta;
    rep.r = b.inv.r;
    rep.max_degree = 2 * b.inv.delta;

    for (long long i = 0; i <= rep.max_degree; ++i) {
        for (long long ip = 0; ip <= i; ++ip) {
            LimitMainEntry e;
            e.degree = i;
            e.i_prime = ip;
            std::string off = std::to_string(i - ip);
            e.image_placeholder = "Im[H^(2tau-" + off + ")_0(j_!* L^" + std::to_string(ip) +
                                  "(F/Eperp)^v) -> H^(2tau-" + off + ")_0(j_!* L^" +
                                  std::to_string(ip) + " F^v)]";
            rep.main_entries.push_back(std::move(e));
        }
        for (const auto& rec : b.records) {
            if (2 * rec.h > i) continue;
            for (long long is = 0; is <= i - 2 * rec.h; ++is) {
                LimitStratumEntry e;
                e.degree = i;
                e.partition = rec.partition;
                e.h = rec.h;
                e.twist = rec.h;
                e.i_second = is;
                e.j_total = i - 2 * rec.h - is;
                e.tuple_count_sheaf = compositions(is, rec.partition.length());
                e.tuple_count_stalk = compositions(e.j_total, rec.partition.length());
                e.index_rank = rec.rank;
                for (const auto& c : strict_coarsenings(rec.partition))
                    e.subtracted_coarsenings.push_back(c.to_string());
                for (const auto& block : rec.partition.blocks) {
                    std::string lb = block_label(block);
                    e.factor_placeholders.push_back(
                        "Im[H^(2tau_" + lb + "-j_k)_0(j_!* L^(i_k)(F_" + lb + "/Eperp)^v) -> H^(2tau_" +
                        lb + "-j_k)_0(j_!* L^(i_k) F_" + lb + "^v)]");
                }
                rep.stratum_entries.push_back(std::move(e));
            }
        }
    }
    return rep;
}

}  // namespace acampo
