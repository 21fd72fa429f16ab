#include "fpp/cli.hpp"

#include "fpp/error.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ostream>

namespace fpp::cli {

namespace {

Json envelope(const std::string& command, Json inputs, Json results, bool pass)
{
    return {
        {"schema_version", kSchemaVersion},
        {"command", command},
        {"inputs", std::move(inputs)},
        {"results", std::move(results)},
        {"pass", pass},
    };
}

Json run_lefschetz(const RunConfig& c)
{
    const GradedAlgebra alg = RingSpec::parse(c.ring).build();
    const GeneratorMatrix a(alg, read_matrix_file(c.matrix_path));
    InducedEndo e = induce(a);
    const HomValidation validation = validate_ring_hom(alg, e);
    e.is_ring_hom = validation.valid;
    e.validated = true;
    LefschetzReport report = lefschetz(alg, e);
    if (c.table1)
        report.table1 = compare_table1(a, report.traces);

    const bool claim_ok = !(report.is_ring_hom && !report.lefschetz.bit());
    const bool table_ok = !report.table1 || report.table1->all_match();
    return envelope("lefschetz", {{"ring", alg.name()}, {"matrix", c.matrix_path}, {"table1", c.table1}},
                    lefschetz_json(alg, a.matrix(), report, validation), claim_ok && table_ok);
}

Json run_verify_fpp(const RunConfig& c)
{
    const RingSpec spec = RingSpec::parse(c.ring);
    SweepOptions options;
    if (c.mode)
        options.mode = parse_sweep_mode(*c.mode);
    options.jobs = c.jobs;
    options.cap_bits = c.cap_bits;
    const FppCertificate cert = sweep_fpp(spec, options);
    // Worker count is deliberately absent from the inputs: reports must not depend on it.
    return envelope("verify-fpp", {{"ring", spec.to_string()}, {"mode", std::string(to_string(cert.mode))}},
                    certificate_json(cert), cert.clean());
}

Json run_sympow(const RunConfig& c)
{
    if (c.chi.has_value() == !c.complex_path.empty())
        throw Error(ErrorKind::parse, "sympow needs exactly one of --chi or --complex");
    if (c.chi)
        return envelope("sympow", {{"chi", *c.chi}}, sym_formula_json(*c.chi), true);
    const SimplicialComplex k = read_complex_file(c.complex_path);
    const SymSquareReport r = sym_square_oracle(k, c.poset_cap);
    return envelope("sympow", {{"complex", c.complex_path}}, sym_square_json(r), r.pass());
}

}  // namespace

Json strip_timing(Json j)
{
    if (j.is_object()) {
        j.erase("timing_ms");
        for (auto& [key, value] : j.items())
            value = strip_timing(std::move(value));
    } else if (j.is_array()) {
        for (auto& value : j)
            value = strip_timing(std::move(value));
    }
    return j;
}

Json execute(const RunConfig& c)
{
    const auto start = std::chrono::steady_clock::now();
    Json report;
    if (c.jobs < 1)
        throw Error(ErrorKind::parse, "--jobs must be at least 1");

    if (c.subcommand == "ring describe") {
        const GradedAlgebra alg = RingSpec::parse(c.ring).build();
        report = envelope(c.subcommand, {{"ring", alg.name()}}, describe_json(alg), true);
    } else if (c.subcommand == "lefschetz") {
        report = run_lefschetz(c);
    } else if (c.subcommand == "verify-fpp") {
        report = run_verify_fpp(c);
    } else if (c.subcommand == "theorem3") {
        const Theorem3Report r = verify_theorem3_claims(c.n, c.jobs, c.cap_bits);
        report = envelope(c.subcommand, {{"n", c.n}}, theorem3_json(r), r.pass());
    } else if (c.subcommand == "crosscheck") {
        const CrosscheckReport r = crosscheck_minors_vs_engine(c.n, c.jobs);
        report = envelope(c.subcommand, {{"n", c.n}}, crosscheck_json(r), r.pass());
    } else if (c.subcommand == "sympow") {
        report = run_sympow(c);
    } else if (c.subcommand == "verify-all") {
        Json results = verify_all(c.jobs);
        const bool pass = results["pass"].get<bool>();
        report = envelope(c.subcommand, Json::object(), std::move(results), pass);
    } else {
        throw Error(ErrorKind::parse, "unknown subcommand '" + c.subcommand + "'");
    }

    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    CLI::App app{"Exact mod-2 Lefschetz and symmetric-square verification", "fppbench"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--timing", c.timing, "include wall-clock timing in JSON output");

    auto* ring = app.add_subcommand("ring", "inspect a cohomology ring");
    ring->require_subcommand(1);
    auto* describe = ring->add_subcommand("describe", "generators, graded dimensions, Euler characteristic, relations");
    describe->add_option("--ring", c.ring, "rpsum:n=<n>,k=<k> or cp2pow:n=<n>")->required();
    describe->add_flag("--json", c.json);

    auto* lef = app.add_subcommand("lefschetz", "induced traces and Lefschetz number of one generator matrix");
    lef->add_option("--ring", c.ring)->required();
    lef->add_option("--matrix", c.matrix_path, "matrix file: n lines of n characters 0/1")->required();
    lef->add_flag("--table1", c.table1, "compare with the tabulated traces (rpsum:n=3,k=2)");
    lef->add_flag("--json", c.json);

    auto* fpp = app.add_subcommand("verify-fpp", "sweep every generator matrix of a ring");
    fpp->add_option("--ring", c.ring)->required();
    fpp->add_option("--mode", c.mode, "valid-only or all");
    fpp->add_option("--jobs", c.jobs)->check(CLI::PositiveNumber);
    fpp->add_option("--cap-bits", c.cap_bits, "enumeration cap: n*n <= cap")->check(CLI::PositiveNumber);
    fpp->add_flag("--json", c.json);

    auto* t3 = app.add_subcommand("theorem3", "principal-minor trace claims over all n x n matrices");
    t3->add_option("--n", c.n)->required()->check(CLI::PositiveNumber);
    t3->add_option("--jobs", c.jobs)->check(CLI::PositiveNumber);
    t3->add_option("--cap-bits", c.cap_bits)->check(CLI::PositiveNumber);
    t3->add_flag("--json", c.json);

    auto* cross = app.add_subcommand("crosscheck", "minor formula against the multiplicative engine on (CP^2)^n");
    cross->add_option("--n", c.n)->required()->check(CLI::PositiveNumber);
    cross->add_option("--jobs", c.jobs)->check(CLI::PositiveNumber);
    cross->add_flag("--json", c.json);

    auto* sym = app.add_subcommand("sympow", "Euler characteristic of the symmetric square");
    auto* chi_opt = sym->add_option("--chi", c.chi, "closed form only");
    auto* complex_opt = sym->add_option("--complex", c.complex_path, "facet file for the simplicial oracle");
    chi_opt->excludes(complex_opt);
    sym->add_option("--poset-cap", c.poset_cap)->check(CLI::PositiveNumber);
    sym->add_flag("--json", c.json);

    auto* all = app.add_subcommand("verify-all", "run every acceptance criterion");
    all->add_option("--jobs", c.jobs)->check(CLI::PositiveNumber);
    all->add_flag("--json", c.json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "fppbench: " << e.what() << '\n';
        return kExitUsage;
    }

    for (auto* sub : {lef, fpp, t3, cross, sym, all})
        if (sub->parsed())
            c.subcommand = sub->get_name();
    if (describe->parsed())
        c.subcommand = "ring describe";

    try {
        const Json report = execute(c);
        if (c.json)
            out << canonical_dump(c.timing ? report : strip_timing(report));
        else
            out << render_text(report);
        return report["pass"].get<bool>() ? kExitPass : kExitClaimFailed;
    } catch (const Error& e) {
        err << "fppbench: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace fpp::cli
