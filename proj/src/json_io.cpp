#include "acampo/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "acampo/errors.hpp"

namespace acampo {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

long long as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<long long>();
}

TruncatedSeries series_from_json(const json& terms, const json* truncation) {
    if (!terms.is_array()) bad("series must be an array of [num,den,expnum,expden]");
    TruncatedSeries s;
    if (truncation) {
        if (!truncation->is_array() || truncation->size() != 2)
            bad("truncation must be [num,den]");
        s.set_truncation(Rational(BigInt(as_int((*truncation)[0], "truncation num")),
                                  BigInt(as_int((*truncation)[1], "truncation den"))));
    }
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 4) bad("series term must be [num,den,expnum,expden]");
        Rational coeff(BigInt(as_int(t[0], "coefficient num")), BigInt(as_int(t[1], "coefficient den")));
        Rational expo(BigInt(as_int(t[2], "exponent num")), BigInt(as_int(t[3], "exponent den")));
        if (expo.sign() < 0) bad("series exponents must be nonnegative");
        s.add_term(expo, coeff);
    }
    return s;
}

json series_to_json(const TruncatedSeries& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back({c.num.to_int64(), c.den.to_int64(), e.num.to_int64(), e.den.to_int64()});
    return terms;
}

json bigint_to_json(const BigInt& v) {
    if (v.fits_int64()) return json(v.to_int64());
    return json(v.to_string());
}

json partition_to_json(const BranchPartition& p) {
    json blocks = json::array();
    for (const auto& b : p.blocks) blocks.push_back(b);
    return blocks;
}

const char* kind_name(CyclePointKind k) {
    switch (k) {
        case CyclePointKind::PlusRegion: return "plus";
        case CyclePointKind::DoublePoint: return "double";
        case CyclePointKind::MinusRegion: return "minus";
    }
    return "?";
}

}  // namespace

GermSpec germ_from_json(const json& j) try {
    if (!j.is_object() || !j.contains("branches")) bad("germ file needs a top-level \"branches\" array");
    GermSpec g;
    for (const auto& bj : j.at("branches")) {
        BranchSpec b;
        b.id = static_cast<int>(as_int(bj.at("id"), "branch id"));
        const auto& ch = bj.at("characteristic");
        if (!ch.is_array() || ch.empty()) bad("characteristic must be a nonempty array");
        b.characteristic.beta0 = as_int(ch[0], "beta0");
        for (std::size_t k = 1; k < ch.size(); ++k)
            b.characteristic.betas.push_back(as_int(ch[k], "beta"));
        if (bj.contains("parametrization")) {
            const auto& pj = bj.at("parametrization");
            const json* trunc = pj.contains("truncation") ? &pj.at("truncation") : nullptr;
            b.param_x = series_from_json(pj.at("x"), trunc);
            b.param_y = series_from_json(pj.at("y"), trunc);
        }
        if (bj.contains("polynomial")) b.implicit_poly = Poly2::parse(bj.at("polynomial").get<std::string>());
        g.branches.push_back(std::move(b));
    }
    std::size_t r = g.branches.size();
    if (j.contains("intersection_matrix")) {
        const auto& m = j.at("intersection_matrix");
        if (!m.is_array() || m.size() != r) bad("intersection_matrix must be r x r");
        for (const auto& row : m) {
            std::vector<long long> rr;
            for (const auto& v : row) rr.push_back(as_int(v, "intersection number"));
            if (rr.size() != r) bad("intersection_matrix must be r x r");
            g.intersection_matrix.push_back(std::move(rr));
        }
        g.entry_given.assign(r, std::vector<bool>(r, true));
    } else if (r >= 2) {
        bad("intersection_matrix required when the germ has 2 or more branches");
    }
    g.check();
    return g;
} catch (const json::exception& e) {
    bad("malformed germ object: " + std::string(e.what()));
}

GermSpec germ_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open germ file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        bad("germ file is not valid JSON: " + std::string(e.what()));
    }
    return germ_from_json(j);
}

json germ_to_json(const GermSpec& g) {
    json out;
    json branches = json::array();
    for (const auto& b : g.branches) {
        json bj;
        bj["id"] = b.id;
        json ch = json::array();
        ch.push_back(b.characteristic.beta0);
        for (long long v : b.characteristic.betas) ch.push_back(v);
        bj["characteristic"] = ch;
        if (b.has_parametrization()) {
            json pj;
            pj["x"] = series_to_json(*b.param_x);
            pj["y"] = series_to_json(*b.param_y);
            // a single truncation covers both coordinates; keep the tighter one
            std::optional<Rational> tr;
            for (const auto* s : {&*b.param_x, &*b.param_y})
                if (s->truncation() && (!tr || *s->truncation() < *tr)) tr = s->truncation();
            if (tr) pj["truncation"] = {tr->num.to_int64(), tr->den.to_int64()};
            bj["parametrization"] = pj;
        }
        if (b.implicit_poly) bj["polynomial"] = b.implicit_poly->to_string();
        branches.push_back(bj);
    }
    out["branches"] = branches;
    if (!g.intersection_matrix.empty()) out["intersection_matrix"] = g.intersection_matrix;
    return out;
}

Divide divide_from_json(const json& j) try {
    if (!j.is_object() || !j.contains("double_points")) bad("divide file needs \"double_points\"");
    Divide d;
    for (const auto& pj : j.at("double_points")) {
        DoublePoint p;
        p.id = static_cast<int>(as_int(pj.at("id"), "double point id"));
        const auto& br = pj.at("branches");
        if (!br.is_array() || br.size() != 2) bad("double point branches must be [i, j]");
        p.branch_a = static_cast<int>(as_int(br[0], "branch"));
        p.branch_b = static_cast<int>(as_int(br[1], "branch"));
        if (p.branch_a > p.branch_b) std::swap(p.branch_a, p.branch_b);
        d.double_points.push_back(p);
    }
    if (j.contains("regions")) {
        for (const auto& rj : j.at("regions")) {
            SignedRegion r;
            r.id = static_cast<int>(as_int(rj.at("id"), "region id"));
            std::string s = rj.at("sign").get<std::string>();
            if (s == "plus") r.sign = RegionSign::Plus;
            else if (s == "minus") r.sign = RegionSign::Minus;
            else bad("region sign must be \"plus\" or \"minus\"");
            for (const auto& v : rj.at("closure_double_points"))
                r.closure_double_points.push_back(static_cast<int>(as_int(v, "closure id")));
            if (rj.contains("segment_neighbors"))
                for (const auto& v : rj.at("segment_neighbors"))
                    r.segment_neighbors.push_back(static_cast<int>(as_int(v, "neighbor id")));
            std::sort(r.closure_double_points.begin(), r.closure_double_points.end());
            std::sort(r.segment_neighbors.begin(), r.segment_neighbors.end());
            d.regions.push_back(std::move(r));
        }
    }
    return d;
} catch (const json::exception& e) {
    bad("malformed divide object: " + std::string(e.what()));
}

Divide divide_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open divide file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        bad("divide file is not valid JSON: " + std::string(e.what()));
    }
    return divide_from_json(j);
}

json divide_to_json(const Divide& d) {
    json out;
    json pts = json::array();
    for (const auto& p : d.double_points) {
        json pj;
        pj["id"] = p.id;
        pj["branches"] = {p.branch_a, p.branch_b};
        pts.push_back(pj);
    }
    out["double_points"] = pts;
    json regs = json::array();
    for (const auto& r : d.regions) {
        json rj;
        rj["id"] = r.id;
        rj["sign"] = r.sign == RegionSign::Plus ? "plus" : "minus";
        rj["closure_double_points"] = r.closure_double_points;
        rj["segment_neighbors"] = r.segment_neighbors;
        regs.push_back(rj);
    }
    out["regions"] = regs;
    return out;
}

json validation_to_json(const ValidationReport& r) {
    json out;
    out["pass"] = r.pass;
    json issues = json::array();
    for (const auto& i : r.issues) {
        json ij;
        ij["check"] = i.what;
        ij["expected"] = i.expected;
        ij["actual"] = i.actual;
        issues.push_back(ij);
    }
    out["issues"] = issues;
    return out;
}

json invariants_to_json(const GermInvariants& inv) {
    json out;
    out["r"] = inv.r;
    out["delta"] = inv.delta;
    out["mu"] = inv.mu;
    out["branch_deltas"] = inv.branch_deltas;
    if (inv.tau_hint) out["tau_upper_bound"] = *inv.tau_hint;
    return out;
}

json dynkin_to_json(const DynkinGraph& g) {
    json out;
    json verts = json::array();
    for (const auto& v : g.vertices) {
        json vj;
        vj["kind"] = kind_name(v.kind);
        vj["id"] = v.id;
        verts.push_back(vj);
    }
    out["vertices"] = verts;
    json edges = json::array();
    for (const auto& [i, j] : g.edges) edges.push_back({i, j});
    out["edges"] = edges;
    return out;
}

DynkinGraph dynkin_from_json(const json& j) try {
    DynkinGraph g;
    for (const auto& vj : j.at("vertices")) {
        std::string k = vj.at("kind").get<std::string>();
        CyclePointKind kind;
        if (k == "plus") kind = CyclePointKind::PlusRegion;
        else if (k == "double") kind = CyclePointKind::DoublePoint;
        else if (k == "minus") kind = CyclePointKind::MinusRegion;
        else bad("vertex kind must be plus, double or minus");
        g.vertices.push_back({kind, static_cast<int>(as_int(vj.at("id"), "vertex id"))});
    }
    for (const auto& ej : j.at("edges")) {
        if (!ej.is_array() || ej.size() != 2) bad("edge must be [i, j]");
        std::size_t a = static_cast<std::size_t>(as_int(ej[0], "edge end"));
        std::size_t b = static_cast<std::size_t>(as_int(ej[1], "edge end"));
        if (a >= g.vertices.size() || b >= g.vertices.size()) bad("edge endpoint out of range");
        if (a > b) std::swap(a, b);
        g.edges.emplace_back(a, b);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
} catch (const json::exception& e) {
    bad("malformed graph object: " + std::string(e.what()));
}

DynkinGraph dynkin_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open graph file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        bad("graph file is not valid JSON: " + std::string(e.what()));
    }
    return dynkin_from_json(j);
}

json classes_to_json(const std::vector<InvariantClass>& cs, const CycleLattice& lat) {
    std::vector<int> dp_ids;
    for (const auto& b : lat.basis)
        if (b.kind == CyclePointKind::DoublePoint) dp_ids.push_back(b.id);
    json out;
    out["double_point_order"] = dp_ids;
    json arr = json::array();
    for (const auto& c : cs) {
        json cj;
        cj["branch"] = c.subset;
        json coeffs = json::array();
        for (const auto& v : c.coefficients) coeffs.push_back(bigint_to_json(v));
        cj["coefficients"] = coeffs;
        cj["height"] = c.height;
        arr.push_back(cj);
    }
    out["classes"] = arr;
    return out;
}

json strata_to_json(const std::vector<StratumRecord>& records,
                    const std::vector<MultiplicityResult>& mults, long long n) {
    json out;
    out["n"] = n;
    json arr = json::array();
    for (std::size_t k = 0; k < records.size(); ++k) {
        const auto& rec = records[k];
        json rj;
        rj["partition"] = partition_to_json(rec.partition);
        rj["height"] = rec.h;
        // the same sum taken over ordered block pairs counts every crossing twice;
        // both values are reported whenever they differ
        if (rec.h != 0) rj["height_ordered_pairs"] = 2 * rec.h;
        rj["support"] = rec.support;
        rj["rank"] = rec.rank;
        rj["component_count"] = bigint_to_json(curve_component_count(rec, n));
        rj["multiplicity"] = bigint_to_json(mults[k].value);
        rj["multiplicity_enumerated"] = mults[k].enumerated;
        json gens = json::array();
        for (std::size_t i = 0; i < rec.V_gens.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < rec.V_gens.cols(); ++j)
                row.push_back(bigint_to_json(rec.V_gens.at(i, j)));
            gens.push_back(row);
        }
        rj["generators"] = gens;
        arr.push_back(rj);
    }
    out["strata"] = arr;
    return out;
}

json monodromy_to_json(const SymplecticQuotient& sq, const IntMatrix& rad,
                       const SpEvidenceReport* evidence) {
    json out;
    out["radical_rank"] = rad.rows();
    json rb = json::array();
    for (std::size_t i = 0; i < rad.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < rad.cols(); ++j) row.push_back(bigint_to_json(rad.at(i, j)));
        rb.push_back(row);
    }
    out["radical_basis"] = rb;
    out["quotient_rank"] = sq.quotient_rank;
    json f = json::array();
    for (std::size_t i = 0; i < sq.induced_form.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < sq.induced_form.cols(); ++j)
            row.push_back(bigint_to_json(sq.induced_form.at(i, j)));
        f.push_back(row);
    }
    out["induced_form"] = f;
    if (evidence) {
        json ev = json::array();
        for (const auto& pe : evidence->primes) {
            json pj;
            pj["p"] = pe.p;
            pj["irreducible"] = pe.irreducible;
            pj["generators_are_transvections"] = pe.generators_are_transvections;
            pj["form_preserved"] = pe.form_preserved;
            if (!pe.invariant_subspace.empty()) pj["invariant_subspace"] = pe.invariant_subspace;
            ev.push_back(pj);
        }
        out["evidence"] = ev;
    }
    return out;
}

json decompose_to_json(const DecomposeReport& rep) {
    json out;
    out["n"] = rep.n;
    out["delta"] = rep.delta;
    out["r"] = rep.r;
    json terms = json::array();
    for (const auto& t : rep.terms) {
        json tj;
        tj["kind"] = t.kind == TermKind::Main ? "main" : "stratum";
        if (t.partition) tj["partition"] = partition_to_json(*t.partition);
        tj["degree"] = t.degree;
        tj["shift"] = t.shift;
        tj["twist"] = t.twist;
        tj["multiplicity"] = bigint_to_json(t.multiplicity);
        tj["ic"] = t.ic_placeholder;
        tj["lambda_invariant"] = t.lambda_invariant;
        terms.push_back(tj);
    }
    out["terms"] = terms;
    json cons = json::array();
    for (const auto& pc : rep.consistency) {
        json cj;
        cj["partition"] = partition_to_json(pc.partition);
        cj["expected"] = bigint_to_json(pc.expected);
        cj["total"] = bigint_to_json(pc.total);
        cj["pass"] = pc.pass;
        cons.push_back(cj);
    }
    out["consistency"] = cons;
    out["consistency_pass"] = rep.consistency_pass;
    out["multiplicities_enumerated"] = rep.all_enumerated;
    return out;
}

json limit_to_json(const HomologyLimitReport& rep) {
    json out;
    out["delta"] = rep.delta;
    out["r"] = rep.r;
    out["max_degree"] = rep.max_degree;
    json mains = json::array();
    for (const auto& e : rep.main_entries) {
        json ej;
        ej["degree"] = e.degree;
        ej["i_prime"] = e.i_prime;
        ej["image"] = e.image_placeholder;
        mains.push_back(ej);
    }
    out["main_entries"] = mains;
    json strat = json::array();
    for (const auto& e : rep.stratum_entries) {
        json ej;
        ej["degree"] = e.degree;
        ej["partition"] = partition_to_json(e.partition);
        ej["height"] = e.h;
        ej["twist"] = e.twist;
        ej["sheaf_degree_total"] = e.i_second;
        ej["stalk_degree_total"] = e.j_total;
        ej["sheaf_tuples"] = bigint_to_json(e.tuple_count_sheaf);
        ej["stalk_tuples"] = bigint_to_json(e.tuple_count_stalk);
        ej["index_rank"] = e.index_rank;
        ej["index_subtracts"] = e.subtracted_coarsenings;
        ej["factors"] = e.factor_placeholders;
        strat.push_back(ej);
    }
    out["stratum_entries"] = strat;
    return out;
}

json generated_to_json(const GeneratedDivide& gd) {
    json out;
    out["germ"] = germ_to_json(gd.germ);
    out["divide"] = divide_to_json(gd.divide);
    return out;
}

}  // namespace acampo
