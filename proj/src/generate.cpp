#include "acampo/generate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "acampo/errors.hpp"
#include "acampo/rational.hpp"

namespace acampo {

namespace {

struct Pt {
    Rational x, y;
    bool operator<(const Pt& o) const { return x != o.x ? x < o.x : y < o.y; }
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
};

// Angle order: upper half-plane first, then by CCW rotation (exact).
int dir_half(const Rational& dx, const Rational& dy) {
    if (dy.sign() > 0 || (dy.sign() == 0 && dx.sign() > 0)) return 0;
    return 1;
}

bool dir_less(const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b) {
    int ha = dir_half(a.first, a.second), hb = dir_half(b.first, b.second);
    if (ha != hb) return ha < hb;
    // cross > 0 means a is CCW-before b within the half-plane
    Rational cross = a.first * b.second - a.second * b.first;
    return cross.sign() > 0;
}

GeneratedDivide lines_divide_impl(int d) {
    if (d < 2) throw Error(ErrorKind::InvalidArity, "line arrangement needs d >= 2");

    GeneratedDivide out;

    // germ: d pairwise transverse smooth branches, directions y = k x
    for (int k = 0; k < d; ++k) {
        BranchSpec b;
        b.id = k + 1;
        b.characteristic.beta0 = 1;
        TruncatedSeries px = TruncatedSeries::monomial(Rational(1), Rational(1));
        TruncatedSeries py = TruncatedSeries::monomial(Rational(k), Rational(1));
        b.param_x = px;
        b.param_y = py;
        Poly2 p;
        p.add_term(0, 1, BigInt(1));
        p.add_term(1, 0, BigInt(-k));
        b.implicit_poly = p;
        out.germ.branches.push_back(std::move(b));
    }
    out.germ.intersection_matrix.assign(d, std::vector<long long>(d, 1));
    out.germ.entry_given.assign(d, std::vector<bool>(d, false));

    // morsified picture: tangents to the parabola y = x^2/2,
    // line k: y = k x - k^2/2; lines k,l cross at ((k+l)/2, kl/2)
    std::vector<Pt> verts;
    std::map<std::pair<int, int>, int> vert_of_pair;
    std::vector<std::pair<int, int>> pair_of_vert;
    for (int k = 0; k < d; ++k)
        for (int l = k + 1; l < d; ++l) {
            Pt p{Rational(BigInt(k + l), BigInt(2)), Rational(BigInt(1ll * k * l), BigInt(2))};
            vert_of_pair[{k, l}] = static_cast<int>(verts.size());
            pair_of_vert.push_back({k, l});
            verts.push_back(p);
        }

    // double point ids in lex pair order
    for (std::size_t v = 0; v < verts.size(); ++v) {
        DoublePoint dp;
        dp.id = static_cast<int>(v) + 1;
        dp.branch_a = pair_of_vert[v].first + 1;
        dp.branch_b = pair_of_vert[v].second + 1;
        out.divide.double_points.push_back(dp);
    }
    if (d == 2) return out;  // single node, no bounded face

    // bounded segments along each line
    struct HalfEdge {
        int from, to;
    };
    std::vector<HalfEdge> hedges;
    std::vector<int> twin;
    auto add_edge = [&](int u, int v) {
        hedges.push_back({u, v});
        hedges.push_back({v, u});
        twin.push_back(static_cast<int>(hedges.size()) - 1);
        twin.push_back(static_cast<int>(hedges.size()) - 2);
    };
    for (int k = 0; k < d; ++k) {
        std::vector<std::pair<Rational, int>> on_line;
        for (int l = 0; l < d; ++l) {
            if (l == k) continue;
            int key_a = std::min(k, l), key_b = std::max(k, l);
            int v = vert_of_pair[{key_a, key_b}];
            on_line.push_back({verts[v].x, v});
        }
        std::sort(on_line.begin(), on_line.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i + 1 < on_line.size(); ++i)
            add_edge(on_line[i].second, on_line[i + 1].second);
    }

    // outgoing half-edges per vertex, CCW by direction
    std::vector<std::vector<int>> out_edges(verts.size());
    for (std::size_t h = 0; h < hedges.size(); ++h) out_edges[hedges[h].from].push_back(static_cast<int>(h));
    for (auto& lst : out_edges)
        std::sort(lst.begin(), lst.end(), [&](int a, int b) {
            const Pt& pa0 = verts[hedges[a].from];
            const Pt& pa1 = verts[hedges[a].to];
            const Pt& pb0 = verts[hedges[b].from];
            const Pt& pb1 = verts[hedges[b].to];
            return dir_less({pa1.x - pa0.x, pa1.y - pa0.y}, {pb1.x - pb0.x, pb1.y - pb0.y});
        });

    // face walk: next(h) is the CCW-predecessor of twin(h) around head(h),
    // which traces every face with its interior on the left
    std::vector<int> next(hedges.size(), -1);
    for (std::size_t v = 0; v < verts.size(); ++v) {
        const auto& lst = out_edges[v];
        for (std::size_t i = 0; i < lst.size(); ++i) {
            int rev = lst[i];
            int pred = lst[(i + lst.size() - 1) % lst.size()];
            next[static_cast<std::size_t>(twin[rev])] = pred;
        }
    }

    std::vector<int> face_of(hedges.size(), -1);
    std::vector<std::vector<int>> face_cycles;
    for (std::size_t h0 = 0; h0 < hedges.size(); ++h0) {
        if (face_of[h0] != -1) continue;
        int f = static_cast<int>(face_cycles.size());
        std::vector<int> cyc;
        int h = static_cast<int>(h0);
        while (face_of[h] == -1) {
            face_of[h] = f;
            cyc.push_back(h);
            h = next[h];
        }
        face_cycles.push_back(std::move(cyc));
    }

    // bounded faces have positive signed area under the interior-left walk
    struct Face {
        std::vector<int> verts_on_cycle;
        std::vector<int> dp_ids;  // sorted
        int sign = 0;             // sign of the product of the line forms at the centroid
        int region_id = 0;
    };
    std::vector<int> bounded_face_index(face_cycles.size(), -1);
    std::vector<Face> faces;
    for (std::size_t f = 0; f < face_cycles.size(); ++f) {
        Rational area2(0);
        for (int h : face_cycles[f]) {
            const Pt& a = verts[hedges[h].from];
            const Pt& b = verts[hedges[h].to];
            area2 = area2 + (a.x * b.y - b.x * a.y);
        }
        if (area2.sign() <= 0) continue;
        Face face;
        Rational cx(0), cy(0);
        for (int h : face_cycles[f]) {
            int v = hedges[h].from;
            face.verts_on_cycle.push_back(v);
            cx = cx + verts[v].x;
            cy = cy + verts[v].y;
            face.dp_ids.push_back(v + 1);
        }
        Rational inv(BigInt(1), BigInt(static_cast<long long>(face.verts_on_cycle.size())));
        cx = cx * inv;
        cy = cy * inv;
        std::sort(face.dp_ids.begin(), face.dp_ids.end());
        int sgn = 1;
        for (int k = 0; k < d; ++k) {
            Rational val = cy - Rational(k) * cx + Rational(BigInt(1ll * k * k), BigInt(2));
            if (val.sign() == 0)
                throw Error(ErrorKind::InconsistentDivide, "face centroid on a line");
            if (val.sign() < 0) sgn = -sgn;
        }
        face.sign = sgn;
        bounded_face_index[f] = static_cast<int>(faces.size());
        faces.push_back(std::move(face));
    }

    // canonical region order: by sorted double point lists
    std::vector<int> order(faces.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return faces[a].dp_ids < faces[b].dp_ids; });
    for (std::size_t i = 0; i < order.size(); ++i) faces[order[i]].region_id = static_cast<int>(i) + 1;

    // adjacency across shared segments (both sides bounded)
    std::map<int, std::set<int>> neigh;
    for (std::size_t h = 0; h < hedges.size(); h += 2) {
        int f1 = bounded_face_index[face_of[h]];
        int f2 = bounded_face_index[face_of[static_cast<std::size_t>(twin[h])]];
        if (f1 >= 0 && f2 >= 0 && f1 != f2) {
            neigh[faces[f1].region_id].insert(faces[f2].region_id);
            neigh[faces[f2].region_id].insert(faces[f1].region_id);
        }
    }

    // global flip so that mu_+ <= mu_-
    int plus_count = 0;
    for (const auto& f : faces)
        if (f.sign > 0) ++plus_count;
    bool flip = plus_count * 2 > static_cast<int>(faces.size());

    for (int idx : order) {
        const Face& f = faces[idx];
        SignedRegion r;
        r.id = f.region_id;
        bool plus = (f.sign > 0) != flip;
        r.sign = plus ? RegionSign::Plus : RegionSign::Minus;
        r.closure_double_points = f.dp_ids;
        if (neigh.count(f.region_id))
            r.segment_neighbors.assign(neigh[f.region_id].begin(), neigh[f.region_id].end());
        out.divide.regions.push_back(std::move(r));
    }
    return out;
}

GeneratedDivide grid_chessboard(int p, int q) {
    GeneratedDivide out;
    int m = std::min(p, q), M = std::max(p, q);

    BranchSpec b;
    b.id = 1;
    b.characteristic.beta0 = m;
    b.characteristic.betas = {M};
    b.param_x = TruncatedSeries::monomial(Rational(1), Rational(q));
    b.param_y = TruncatedSeries::monomial(Rational(1), Rational(p));
    Poly2 f;
    f.add_term(static_cast<unsigned>(p), 0, BigInt(1));
    f.add_term(0, static_cast<unsigned>(q), BigInt(-1));
    b.implicit_poly = f;
    out.germ.branches.push_back(std::move(b));

    int a = p - 1, c = q - 1;
    std::map<std::pair<int, int>, int> dp_id, rg_id;
    int next_dp = 1, next_rg = 1;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= c; ++j) {
            if ((i + j) % 2 == 0) dp_id[{i, j}] = next_dp++;
            else rg_id[{i, j}] = next_rg++;
        }

    for (const auto& [ij, id] : dp_id) {
        (void)ij;
        DoublePoint dp;
        dp.id = id;
        dp.branch_a = dp.branch_b = 1;  // self-crossings of the single branch
        out.divide.double_points.push_back(dp);
    }
    std::sort(out.divide.double_points.begin(), out.divide.double_points.end(),
              [](const DoublePoint& x, const DoublePoint& y) { return x.id < y.id; });

    // two parity classes of regions; the smaller class is plus
    int count_odd_i = 0, count_even_i = 0;
    for (const auto& [ij, id] : rg_id) {
        (void)id;
        (ij.first % 2 == 1 ? count_odd_i : count_even_i)++;
    }
    bool plus_is_odd_i = count_odd_i <= count_even_i;

    for (const auto& [ij, id] : rg_id) {
        auto [i, j] = ij;
        SignedRegion r;
        r.id = id;
        r.sign = ((i % 2 == 1) == plus_is_odd_i) ? RegionSign::Plus : RegionSign::Minus;
        for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
            auto it = dp_id.find({i + di, j + dj});
            if (it != dp_id.end()) r.closure_double_points.push_back(it->second);
        }
        for (auto [di, dj] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
            auto it = rg_id.find({i + di, j + dj});
            if (it != rg_id.end()) r.segment_neighbors.push_back(it->second);
        }
        std::sort(r.closure_double_points.begin(), r.closure_double_points.end());
        std::sort(r.segment_neighbors.begin(), r.segment_neighbors.end());
        out.divide.regions.push_back(std::move(r));
    }
    std::sort(out.divide.regions.begin(), out.divide.regions.end(),
              [](const SignedRegion& x, const SignedRegion& y) { return x.id < y.id; });
    return out;
}

GeneratedDivide grid_tangent_chain(int p, int q) {
    // {p, q} = {2, 2b}: two smooth branches with contact order b,
    // x^2 - y^(2b) = (x - y^b)(x + y^b) up to swapping coordinates
    bool swapped = (q == 2 && p > 2);
    int b = (swapped ? p : q) / 2;

    GeneratedDivide out;
    for (int s = 0; s < 2; ++s) {
        BranchSpec br;
        br.id = s + 1;
        br.characteristic.beta0 = 1;
        Rational coeff(s == 0 ? 1 : -1);
        TruncatedSeries graph = TruncatedSeries::monomial(coeff, Rational(b));
        TruncatedSeries par = TruncatedSeries::monomial(Rational(1), Rational(1));
        Poly2 f;
        if (!swapped) {
            br.param_x = graph;  // x = +/- t^b
            br.param_y = par;    // y = t
            f.add_term(1, 0, BigInt(1));
            f.add_term(0, static_cast<unsigned>(b), s == 0 ? BigInt(-1) : BigInt(1));
        } else {
            br.param_x = par;
            br.param_y = graph;
            f.add_term(0, 1, BigInt(1));
            f.add_term(static_cast<unsigned>(b), 0, s == 0 ? BigInt(-1) : BigInt(1));
        }
        br.implicit_poly = f;
        out.germ.branches.push_back(std::move(br));
    }
    out.germ.intersection_matrix = {{0, b}, {b, 0}};
    out.germ.entry_given.assign(2, std::vector<bool>(2, false));

    for (int j = 1; j <= b; ++j) {
        DoublePoint dp;
        dp.id = j;
        dp.branch_a = 1;
        dp.branch_b = 2;
        out.divide.double_points.push_back(dp);
    }
    for (int j = 1; j < b; ++j) {
        SignedRegion r;
        r.id = j;
        r.sign = RegionSign::Minus;  // lens interiors all lie on one side
        r.closure_double_points = {j, j + 1};
        out.divide.regions.push_back(r);
    }
    return out;
}

}  // namespace

GeneratedDivide generate_line_arrangement_divide(int d) { return lines_divide_impl(d); }

GeneratedDivide generate_grid_divide(int p, int q) {
    if (p < 2 || q < 2) throw Error(ErrorKind::InvalidExponent, "grid divide needs p, q >= 2");
    int g = std::gcd(p, q);
    if (g == 1) return grid_chessboard(p, q);
    if (p == q) {
        GeneratedDivide out = lines_divide_impl(p);
        return out;
    }
    if (std::min(p, q) == 2) return grid_tangent_chain(p, q);
    throw Error(ErrorKind::UnsupportedExponentPair,
                "grid divide for gcd(p,q) > 1 with both p/gcd, q/gcd > 1 needs nested curved "
                "branches and is not generated; supply the divide as input");
}

}  // namespace acampo
