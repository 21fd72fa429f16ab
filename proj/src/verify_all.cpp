#include "fpp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace fpp::cli {

namespace {

struct Outcome {
    bool pass = false;
    Json results;
};

Json timed(int id, const char* name, const char* kind, const std::function<Outcome()>& fn)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o = fn();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return {
        {"id", id},
        {"name", name},
        {"kind", kind},
        {"pass", o.pass},
        {"results", std::move(o.results)},
        {"timing_ms", ms.count()},
    };
}

Outcome ring_structure()
{
    const GradedAlgebra a = connected_sum_ring(3, 2);
    const auto dims = a.graded_dimensions();
    const bool pass = dims == std::vector<std::size_t>{1, 3, 3, 3, 1} && euler(a) == -1;
    return {pass, {{"ring", a.name()}, {"graded_dimensions", dims}, {"euler", euler(a)}}};
}

Outcome ring_axioms()
{
    std::vector<RingSpec> specs;
    for (std::size_t n = 1; n <= 4; ++n)
        specs.push_back({RingSpec::Kind::rpsum, n, 2});
    for (std::size_t n = 1; n <= 3; ++n)
        specs.push_back({RingSpec::Kind::cp2pow, n, 2});

    bool pass = true;
    Json rings = Json::array();
    for (const auto& spec : specs) {
        const GradedAlgebra a = spec.build();
        const AxiomReport ax = check_ring_axioms(a);
        bool pairing = true;
        for (int m = 0; m <= a.top_degree(); ++m)
            pairing = pairing && poincare_pairing_nondegenerate(a, m);
        pass = pass && ax.ok() && pairing;
        rings.push_back({
            {"ring", a.name()},
            {"pairs", ax.pairs_checked},
            {"triples", ax.triples_checked},
            {"axioms_hold", ax.ok()},
            {"poincare_nondegenerate", pairing},
        });
    }
    return {pass, {{"rings", rings}}};
}

Outcome theorem3_all(unsigned jobs)
{
    bool pass = true;
    Json runs = Json::array();
    for (std::size_t n = 1; n <= 4; ++n) {
        const Theorem3Report r = verify_theorem3_claims(n, jobs);
        pass = pass && r.pass();
        runs.push_back(theorem3_json(r));
    }
    return {pass, {{"runs", runs}}};
}

Outcome crosscheck_all(unsigned jobs)
{
    bool pass = true;
    Json runs = Json::array();
    for (std::size_t n = 2; n <= 3; ++n) {
        const CrosscheckReport r = crosscheck_minors_vs_engine(n, jobs);
        pass = pass && r.pass();
        runs.push_back(crosscheck_json(r));
    }
    return {pass, {{"runs", runs}}};
}

// The certificate is judged on completeness and agreement with the engine,
// not on whether the Lefschetz claim survives.
Outcome connected_sum_sweep(unsigned jobs)
{
    const RingSpec spec{RingSpec::Kind::rpsum, 3, 2};
    SweepOptions options;
    options.mode = SweepMode::valid_only;
    options.jobs = jobs;
    const FppCertificate cert = sweep_fpp(spec, options);

    const bool complete = cert.total == 512 && cert.valid + cert.invalid == cert.total && cert.covered == cert.valid
        && cert.lefschetz_zero + cert.lefschetz_one == cert.valid && cert.exceptional_overflow == 0
        && cert.exceptional.size() == cert.exceptional_total;

    const GradedAlgebra alg = spec.build();
    bool consistent = true;
    for (const auto& x : cert.exceptional) {
        const GeneratorMatrix a(alg, x.matrix);
        InducedEndo e = induce(a);
        e.is_ring_hom = validate_ring_hom(alg, e).valid;
        const LefschetzReport rep = lefschetz(alg, e);
        const Table1Comparison t1 = compare_table1(a, rep.traces);
        consistent = consistent && e.is_ring_hom == x.is_ring_hom && rep.traces == x.traces
            && rep.lefschetz == x.lefschetz && x.table1 && x.table1->predicted == t1.predicted
            && x.table1_mismatch == !t1.all_match() && x.lefschetz_zero == !rep.lefschetz.bit();
    }

    const Gf2Matrix cyclic = Gf2Matrix::from_rows({"010", "001", "100"});
    const std::vector<Gf2> cyclic_traces{kOne, kZero, kZero, kZero, kOne};
    const auto probe = std::find_if(cert.exceptional.begin(), cert.exceptional.end(),
                                    [&](const ExceptionalMatrix& x) { return x.matrix == cyclic; });
    const bool probe_listed = probe != cert.exceptional.end() && probe->traces == cyclic_traces;

    SweepOptions serial = options;
    serial.jobs = 1;
    const bool deterministic = canonical_dump(certificate_json(sweep_fpp(spec, serial)))
        == canonical_dump(certificate_json(cert));

    return {complete && consistent && probe_listed && deterministic,
            {
                {"certificate", certificate_json(cert)},
                {"complete", complete},
                {"consistent_with_engine", consistent},
                {"cyclic_probe_listed", probe_listed},
                {"deterministic", deterministic},
                {"claim", "L(f;Z2) = 1 for every self-map of RP4#RP4#RP4"},
                {"claim_reproduced", cert.lefschetz_zero == 0 && cert.table1_mismatches == 0},
            }};
}

Outcome sym_formula()
{
    const std::vector<std::pair<std::int64_t, std::int64_t>> expected{{-1, 0}, {2, 3}, {1, 1}, {0, 0}};
    bool pass = true;
    Json values = Json::array();
    for (const auto& [chi, want] : expected) {
        const std::int64_t got = euler_sym_square(chi);
        pass = pass && got == want;
        values.push_back({{"chi_X", chi}, {"chi_sym_square", got}, {"expected", want}});
    }
    return {pass, {{"values", values}}};
}

Outcome sym_oracle()
{
    struct Case {
        const char* name;
        SimplicialComplex complex;
        std::int64_t expected;
    };
    std::vector<Case> cases{
        {"boundary of 2-simplex (S1)", boundary_of_simplex(2), 0},
        {"boundary of 3-simplex (S2)", boundary_of_simplex(3), 3},
        {"six-vertex RP2", rp2_six_vertex(), 1},
    };

    const SurfaceCheck rp2 = check_closed_surface(cases[2].complex);
    bool pass = rp2.closed_surface() && rp2.euler == 1;
    Json runs = Json::array();
    for (const auto& c : cases) {
        const SymSquareReport r = sym_square_oracle(c.complex);
        pass = pass && r.pass() && r.chi_quotient == c.expected;
        Json j = sym_square_json(r);
        j["complex"] = c.name;
        j["expected_chi_quotient"] = c.expected;
        runs.push_back(std::move(j));
    }
    return {pass,
            {{"runs", runs},
             {"rp2_validation",
              {{"pure_2d", rp2.pure_2d},
               {"edges_in_two_triangles", rp2.edges_in_two_triangles},
               {"links_are_circles", rp2.links_are_circles},
               {"connected", rp2.connected},
               {"euler", rp2.euler}}}}};
}

Outcome determinism(unsigned jobs)
{
    const unsigned parallel = std::max(jobs, 4U);
    auto snapshot = [](unsigned j) {
        SweepOptions o;
        o.jobs = j;
        std::string s = canonical_dump(certificate_json(sweep_fpp({RingSpec::Kind::rpsum, 3, 2}, o)));
        o.mode = SweepMode::all;
        s += canonical_dump(certificate_json(sweep_fpp({RingSpec::Kind::cp2pow, 2, 2}, o)));
        s += canonical_dump(theorem3_json(verify_theorem3_claims(4, j)));
        s += canonical_dump(crosscheck_json(crosscheck_minors_vs_engine(3, j)));
        return s;
    };
    const std::string serial = snapshot(1);
    const bool parallel_equal = snapshot(parallel) == serial;
    const bool rerun_equal = snapshot(1) == serial;
    return {parallel_equal && rerun_equal,
            {{"parallel_matches_serial", parallel_equal}, {"rerun_matches", rerun_equal}}};
}

}  // namespace

Json verify_all(unsigned jobs)
{
    Json criteria = Json::array();
    criteria.push_back(timed(1, "ring structure of rpsum:n=3,k=2", "hard", ring_structure));
    criteria.push_back(timed(2, "ring axioms and Poincare pairing", "hard", ring_axioms));
    criteria.push_back(timed(3, "minor trace claims, n = 1..4", "hard", [&] { return theorem3_all(jobs); }));
    criteria.push_back(timed(4, "minor formula vs engine, n = 2,3", "hard", [&] { return crosscheck_all(jobs); }));
    criteria.push_back(timed(5, "connected-sum sweep certificate", "adjudication",
                             [&] { return connected_sum_sweep(jobs); }));
    criteria.push_back(timed(6, "symmetric-square closed form", "hard", sym_formula));
    criteria.push_back(timed(7, "symmetric-square simplicial oracle", "hard", sym_oracle));
    criteria.push_back(timed(8, "determinism and parallel soundness", "hard", [&] { return determinism(jobs); }));

    bool pass = true;
    for (const auto& c : criteria)
        pass = pass && c["pass"].get<bool>();
    return {{"criteria", criteria}, {"pass", pass}};
}

}  // namespace fpp::cli
