#include "acampo/cli.hpp"

#include <CLI11.hpp>

#include "acampo/errors.hpp"
#include "acampo/json_io.hpp"

namespace acampo {

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<long long> parse_primes(const std::string& csv) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        out.push_back(std::stoll(csv.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (out.empty()) throw Error(ErrorKind::InvalidPrime, "empty prime list");
    return out;
}

long long parse_param(const std::string& params, const std::string& key) {
    // "d=4" or "p=2,q=3"
    std::size_t pos = params.find(key + "=");
    if (pos == std::string::npos)
        throw Error(ErrorKind::ParseError, "missing parameter " + key + " in --params");
    pos += key.size() + 1;
    std::size_t end = params.find(',', pos);
    if (end == std::string::npos) end = params.size();
    return std::stoll(params.substr(pos, end - pos));
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_parsed(args, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

namespace {

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"divides, vanishing-cycle lattices and decomposition reports for plane curve singularities"};
    app.require_subcommand(1);

    std::string germ_path, divide_path, format = "json", primes_csv, kind, params;
    long long n = 2;
    unsigned long long budget = kDefaultEnumerationBudget;
    // nothing here is randomized; the flag exists so callers can pin that contract
    bool seedless = false;
    app.add_flag("--seedless", seedless, "assert the no-RNG guarantee (always holds; output unchanged)");

    auto* inv = app.add_subcommand("invariants", "germ invariants r, delta, mu");
    inv->add_option("--germ", germ_path)->required();
    inv->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* chk = app.add_subcommand("divide-check", "validate a divide against its germ");
    chk->add_option("--germ", germ_path)->required();
    chk->add_option("--divide", divide_path)->required();

    auto* dyn = app.add_subcommand("dynkin", "intersection diagram of the vanishing cycles");
    dyn->add_option("--divide", divide_path)->required();
    dyn->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

    auto* mon = app.add_subcommand("monodromy", "radical, symplectic quotient and mod-p evidence");
    mon->add_option("--divide", divide_path)->required();
    mon->add_option("--primes", primes_csv);

    auto* cls = app.add_subcommand("classes", "monodromy-invariant classes c_i");
    cls->add_option("--germ", germ_path)->required();
    cls->add_option("--divide", divide_path)->required();

    auto* str = app.add_subcommand("strata", "partition strata, subgroups and multiplicities");
    str->add_option("--germ", germ_path)->required();
    str->add_option("--divide", divide_path)->required();
    str->add_option("--n", n)->required();
    str->add_option("--budget", budget, "enumeration budget in elements");

    auto* dec = app.add_subcommand("decompose", "direct-sum decomposition bookkeeping");
    dec->add_option("--germ", germ_path)->required();
    dec->add_option("--divide", divide_path)->required();
    dec->add_option("--n", n)->required();
    dec->add_option("--budget", budget, "enumeration budget in elements");
    dec->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* lim = app.add_subcommand("limit", "symbolic homology-limit report");
    lim->add_option("--germ", germ_path)->required();
    lim->add_option("--divide", divide_path)->required();

    auto* gen = app.add_subcommand("generate", "generate a standard divide");
    gen->add_option("--kind", kind)->required()->check(CLI::IsMember({"lines", "grid"}));
    gen->add_option("--params", params)->required();

    std::vector<std::string> argv_store = args;
    std::vector<const char*> argv;
    argv.push_back("acampo");
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (inv->parsed()) {
        GermSpec g = germ_from_file(germ_path);
        GermInvariants gi = germ_invariants(g);
        if (format == "text") {
            out << "r = " << gi.r << "\ndelta = " << gi.delta << "\nmu = " << gi.mu << "\n";
            if (gi.tau_hint) out << "tau <= " << *gi.tau_hint << "\n";
        } else {
            out << dump(invariants_to_json(gi));
        }
        return 0;
    }

    if (chk->parsed()) {
        GermSpec g = germ_from_file(germ_path);
        Divide d = divide_from_file(divide_path);
        ValidationReport r = validate_divide(d, g);
        out << dump(validation_to_json(r));
        return r.pass ? 0 : 1;
    }

    if (dyn->parsed()) {
        Divide d = divide_from_file(divide_path);
        CycleLattice lat = intersection_form(d);
        DynkinGraph g = dynkin_graph(lat);
        if (format == "dot") out << dynkin_to_dot(g);
        else out << dump(dynkin_to_json(g));
        return 0;
    }

    if (mon->parsed()) {
        Divide d = divide_from_file(divide_path);
        CycleLattice lat = intersection_form(d);
        IntMatrix rad = radical(lat);
        SymplecticQuotient sq = symplectic_quotient(lat);
        if (!primes_csv.empty()) {
            SpEvidenceReport ev = sp_fullness_evidence(sq, parse_primes(primes_csv));
            out << dump(monodromy_to_json(sq, rad, &ev));
        } else {
            out << dump(monodromy_to_json(sq, rad, nullptr));
        }
        return 0;
    }

    if (cls->parsed()) {
        GermSpec g = germ_from_file(germ_path);
        Divide d = divide_from_file(divide_path);
        ValidationReport r = validate_divide(d, g);
        if (!r.pass) {
            out << dump(validation_to_json(r));
            return 1;
        }
        CycleLattice lat = intersection_form(d);
        out << dump(classes_to_json(atomic_classes(lat, d), lat));
        return 0;
    }

    if (str->parsed()) {
        GermSpec g = germ_from_file(germ_path);
        Divide d = divide_from_file(divide_path);
        ValidationReport r = validate_divide(d, g);
        if (!r.pass) {
            out << dump(validation_to_json(r));
            return 1;
        }
        CycleLattice lat = intersection_form(d);
        auto cs = atomic_classes(lat, d);
        GermInvariants gi = germ_invariants(g);
        std::vector<StratumRecord> records;
        for (const auto& p : enumerate_partitions(static_cast<int>(gi.r), false))
            records.push_back(stratum_record(cs, p, lat, g));
        std::vector<MultiplicityResult> mults;
        for (const auto& rec : records) mults.push_back(stratum_multiplicity(rec, records, n, budget));
        out << dump(strata_to_json(records, mults, n));
        return 0;
    }

    if (dec->parsed()) {
        GermSpec g = germ_from_file(germ_path);
        Divide d = divide_from_file(divide_path);
        DecomposeReport rep = decompose(g, d, n, budget);
        if (format == "text") {
            for (const auto& t : rep.terms) {
                out << (t.kind == TermKind::Main ? "main" : "stratum");
                if (t.partition) out << " " << t.partition->to_string();
                out << " degree=" << t.degree << " shift=" << t.shift << " twist=" << t.twist
                    << " mult=" << t.multiplicity.to_string() << " ic=" << t.ic_placeholder
                    << (t.lambda_invariant ? " [lambda-invariant]" : "") << "\n";
            }
            out << (rep.consistency_pass ? "consistency: pass" : "consistency: FAIL") << "\n";
        } else {
            out << dump(decompose_to_json(rep));
        }
        return rep.consistency_pass ? 0 : 1;
    }

    if (lim->parsed()) {
        GermSpec g = germ_from_file(germ_path);
        Divide d = divide_from_file(divide_path);
        out << dump(limit_to_json(homology_limit_report(g, d)));
        return 0;
    }

    if (gen->parsed()) {
        GeneratedDivide gd;
        if (kind == "lines") {
            gd = generate_line_arrangement_divide(static_cast<int>(parse_param(params, "d")));
        } else {
            gd = generate_grid_divide(static_cast<int>(parse_param(params, "p")),
                                      static_cast<int>(parse_param(params, "q")));
        }
        out << dump(generated_to_json(gd));
        return 0;
    }

    err << "error: no subcommand\n";
    return 2;
}

}  // namespace

}  // namespace acampo
