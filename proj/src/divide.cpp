#include "acampo/divide.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "acampo/errors.hpp"

namespace acampo {

std::size_t Divide::mu_plus() const {
    std::size_t c = 0;
    for (const auto& r : regions)
        if (r.sign == RegionSign::Plus) ++c;
    return c;
}

std::size_t Divide::mu_minus() const { return regions.size() - mu_plus(); }

const DoublePoint& Divide::point_by_id(int id) const {
    for (const auto& p : double_points)
        if (p.id == id) return p;
    throw Error(ErrorKind::MustValidateFirst, "unknown double point id " + std::to_string(id));
}

const SignedRegion& Divide::region_by_id(int id) const {
    for (const auto& r : regions)
        if (r.id == id) return r;
    throw Error(ErrorKind::MustValidateFirst, "unknown region id " + std::to_string(id));
}

std::vector<int> Divide::shared_points_of_branch(int branch) const {
    std::vector<int> out;
    for (const auto& p : double_points)
        if ((p.branch_a == branch || p.branch_b == branch) && p.branch_a != p.branch_b)
            out.push_back(p.id);
    std::sort(out.begin(), out.end());
    return out;
}

void Divide::check_structure() const {
    std::set<int> pids, rids;
    for (const auto& p : double_points) {
        if (!pids.insert(p.id).second)
            throw Error(ErrorKind::MustValidateFirst, "duplicate double point id " + std::to_string(p.id));
        if (p.branch_a > p.branch_b)
            throw Error(ErrorKind::MustValidateFirst, "double point branches must satisfy a <= b");
    }
    for (const auto& r : regions) {
        if (!rids.insert(r.id).second)
            throw Error(ErrorKind::MustValidateFirst, "duplicate region id " + std::to_string(r.id));
    }
    for (const auto& r : regions) {
        for (int pid : r.closure_double_points)
            if (!pids.count(pid))
                throw Error(ErrorKind::MustValidateFirst,
                            "region " + std::to_string(r.id) + " closure references unknown double point " +
                                std::to_string(pid));
        for (int nid : r.segment_neighbors) {
            const SignedRegion& n = region_by_id(nid);
            if (n.sign == r.sign)
                throw Error(ErrorKind::MustValidateFirst,
                            "segment neighbors " + std::to_string(r.id) + "," + std::to_string(nid) +
                                " must have opposite signs");
            if (!std::count(n.segment_neighbors.begin(), n.segment_neighbors.end(), r.id))
                throw Error(ErrorKind::MustValidateFirst,
                            "segment neighbor relation not symmetric between " + std::to_string(r.id) +
                                " and " + std::to_string(nid));
        }
    }
}

ValidationReport validate_divide(const Divide& d, const GermSpec& germ) {
    ValidationReport rep;
    auto fail = [&](const std::string& what, long long expected, long long actual) {
        rep.pass = false;
        rep.issues.push_back({what, expected, actual});
    };

    try {
        d.check_structure();
    } catch (const Error& e) {
        fail(std::string("structure: ") + e.what(), 0, 0);
        return rep;
    }

    GermInvariants inv = germ_invariants(germ);
    std::size_t r = inv.r;

    for (const auto& p : d.double_points) {
        if (p.branch_a < 1 || p.branch_b > static_cast<int>(r))
            fail("double point " + std::to_string(p.id) + " references branch outside 1..r",
                 static_cast<long long>(r), std::max(p.branch_a, p.branch_b));
    }
    if (!rep.pass) return rep;

    if (static_cast<long long>(d.mu0()) != inv.delta)
        fail("mu0 = delta(germ)", inv.delta, static_cast<long long>(d.mu0()));
    if (static_cast<long long>(d.mu()) != inv.mu)
        fail("mu+ + mu0 + mu- = mu(germ)", inv.mu, static_cast<long long>(d.mu()));

    // pairwise crossing counts and per-branch self-crossings
    std::map<std::pair<int, int>, long long> pair_count;
    std::vector<long long> self_count(r + 1, 0);
    for (const auto& p : d.double_points) {
        if (p.branch_a == p.branch_b) ++self_count[p.branch_a];
        else ++pair_count[{p.branch_a, p.branch_b}];
    }
    for (std::size_t i = 1; i <= r; ++i)
        for (std::size_t j = i + 1; j <= r; ++j) {
            long long want = germ.pairwise(i - 1, j - 1);
            long long got = pair_count.count({static_cast<int>(i), static_cast<int>(j)})
                                ? pair_count[{static_cast<int>(i), static_cast<int>(j)}]
                                : 0;
            if (want != got)
                fail("crossings of branches " + std::to_string(i) + "," + std::to_string(j) +
                         " = C_i.C_j",
                     want, got);
        }
    for (std::size_t i = 1; i <= r; ++i)
        if (self_count[i] != inv.branch_deltas[i - 1])
            fail("self-crossings of branch " + std::to_string(i) + " = delta_i",
                 inv.branch_deltas[i - 1], self_count[i]);

    return rep;
}

std::size_t CycleLattice::index_of(CyclePointKind kind, int id) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].kind == kind && basis[i].id == id) return i;
    throw Error(ErrorKind::InvalidIndex, "basis point not found");
}

CycleLattice intersection_form(const Divide& d) {
    d.check_structure();
    CycleLattice lat;

    std::vector<const SignedRegion*> plus, minus;
    for (const auto& r : d.regions)
        (r.sign == RegionSign::Plus ? plus : minus).push_back(&r);
    auto by_id = [](const SignedRegion* a, const SignedRegion* b) { return a->id < b->id; };
    std::sort(plus.begin(), plus.end(), by_id);
    std::sort(minus.begin(), minus.end(), by_id);
    std::vector<DoublePoint> pts = d.double_points;
    std::sort(pts.begin(), pts.end(), [](const DoublePoint& a, const DoublePoint& b) { return a.id < b.id; });

    for (const auto* r : plus) lat.basis.push_back({CyclePointKind::PlusRegion, r->id});
    for (const auto& p : pts) lat.basis.push_back({CyclePointKind::DoublePoint, p.id});
    for (const auto* r : minus) lat.basis.push_back({CyclePointKind::MinusRegion, r->id});

    std::size_t n = lat.basis.size();
    lat.form = IntMatrix(n, n);
    auto set_pair = [&](std::size_t i, std::size_t j) {
        lat.form.at(i, j) = BigInt(1);
        lat.form.at(j, i) = BigInt(-1);
    };

    // (1) <alpha_i^+, alpha_j> = 1 when D_j lies on the closure of R_i^+
    for (const auto* r : plus) {
        std::size_t i = lat.index_of(CyclePointKind::PlusRegion, r->id);
        for (int pid : r->closure_double_points)
            set_pair(i, lat.index_of(CyclePointKind::DoublePoint, pid));
    }
    // (2) <alpha_i, alpha_j^-> = 1 when D_i lies on the closure of R_j^-
    for (const auto* r : minus) {
        std::size_t j = lat.index_of(CyclePointKind::MinusRegion, r->id);
        for (int pid : r->closure_double_points)
            set_pair(lat.index_of(CyclePointKind::DoublePoint, pid), j);
    }
    // (3) <alpha_i^+, alpha_j^-> = 1 when the closures share a segment
    for (const auto* r : plus) {
        std::size_t i = lat.index_of(CyclePointKind::PlusRegion, r->id);
        for (int nid : r->segment_neighbors)
            set_pair(i, lat.index_of(CyclePointKind::MinusRegion, nid));
    }
    return lat;
}

DynkinGraph dynkin_graph(const CycleLattice& lat) {
    DynkinGraph g;
    for (const auto& b : lat.basis) g.vertices.push_back({b.kind, b.id});
    for (std::size_t i = 0; i < lat.rank(); ++i)
        for (std::size_t j = i + 1; j < lat.rank(); ++j)
            if (!lat.form.at(i, j).is_zero()) g.edges.emplace_back(i, j);
    return g;
}

std::string dynkin_to_dot(const DynkinGraph& g) {
    std::ostringstream os;
    os << "graph dynkin {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const auto& v = g.vertices[i];
        const char* shape = v.kind == CyclePointKind::DoublePoint ? "circle"
                            : v.kind == CyclePointKind::PlusRegion ? "doublecircle"
                                                                   : "diamond";
        const char* prefix = v.kind == CyclePointKind::DoublePoint ? "D"
                             : v.kind == CyclePointKind::PlusRegion ? "P"
                                                                    : "M";
        os << "  v" << i << " [label=\"" << prefix << v.id << "\", shape=" << shape << "];\n";
    }
    for (const auto& [i, j] : g.edges) os << "  v" << i << " -- v" << j << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

int kind_tag(CyclePointKind k) {
    switch (k) {
        case CyclePointKind::PlusRegion: return 0;
        case CyclePointKind::DoublePoint: return 1;
        case CyclePointKind::MinusRegion: return 2;
    }
    return 3;
}

}  // namespace

bool dynkin_isomorphic(const DynkinGraph& a, const DynkinGraph& b) {
    std::size_t n = a.vertices.size();
    if (n != b.vertices.size() || a.edges.size() != b.edges.size()) return false;

    std::vector<std::vector<bool>> adj_a(n, std::vector<bool>(n, false)),
        adj_b(n, std::vector<bool>(n, false));
    for (const auto& [i, j] : a.edges) adj_a[i][j] = adj_a[j][i] = true;
    for (const auto& [i, j] : b.edges) adj_b[i][j] = adj_b[j][i] = true;

    std::vector<int> deg_a(n, 0), deg_b(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            deg_a[i] += adj_a[i][j];
            deg_b[i] += adj_b[i][j];
        }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;

    std::vector<long long> map_ab(n, -1), used(n, 0);
    // backtracking on vertices of a in index order, tag and degree pruned
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == n) return true;
        std::size_t va = order[k];
        for (std::size_t vb = 0; vb < n; ++vb) {
            if (used[vb]) continue;
            if (kind_tag(a.vertices[va].kind) != kind_tag(b.vertices[vb].kind)) continue;
            if (deg_a[va] != deg_b[vb]) continue;
            bool ok = true;
            for (std::size_t prev = 0; prev < k && ok; ++prev) {
                std::size_t pa = order[prev];
                if (adj_a[va][pa] != adj_b[vb][static_cast<std::size_t>(map_ab[pa])]) ok = false;
            }
            if (!ok) continue;
            map_ab[va] = static_cast<long long>(vb);
            used[vb] = 1;
            if (rec(k + 1)) return true;
            used[vb] = 0;
            map_ab[va] = -1;
        }
        return false;
    };
    return rec(0);
}

}  // namespace acampo
