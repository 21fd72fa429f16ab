#include "fpp/report.hpp"

#include <sstream>

namespace fpp {

Json gf2_array(const std::vector<Gf2>& values)
{
    Json out = Json::array();
    for (auto v : values)
        out.push_back(v.value());
    return out;
}

namespace {

Json bool_array(const std::vector<bool>& values)
{
    Json out = Json::array();
    for (bool v : values)
        out.push_back(v);
    return out;
}

std::string join(const Json& arr, const char* sep = ",")
{
    std::string s;
    for (const auto& v : arr) {
        if (!s.empty())
            s += sep;
        s += v.is_string() ? v.get<std::string>() : v.dump();
    }
    return s;
}

}  // namespace

Json describe_json(const GradedAlgebra& a)
{
    Json gens = Json::array();
    for (const auto& g : a.generators())
        gens.push_back({{"name", g.name}, {"degree", g.degree}});
    Json basis = Json::array();
    for (int d = 0; d <= a.top_degree(); ++d) {
        Json row = Json::array();
        for (const auto& m : a.basis(d))
            row.push_back(m.to_string(a.generators()));
        basis.push_back(std::move(row));
    }
    return {
        {"ring", a.name()},
        {"generators", gens},
        {"graded_dimensions", a.graded_dimensions()},
        {"euler", euler(a)},
        {"relations", a.relations()},
        {"top_degree", a.top_degree()},
        {"basis", basis},
    };
}

Json lefschetz_json(const GradedAlgebra& a, const Gf2Matrix& matrix, const LefschetzReport& report,
                    const HomValidation& validation)
{
    Json violations = Json::array();
    for (const auto& v : validation.violations)
        violations.push_back({
            {"left", a.basis_monomial(v.left).to_string(a.generators())},
            {"right", a.basis_monomial(v.right).to_string(a.generators())},
            {"product_of_images", a.format(v.product_of_images)},
            {"image_of_product", a.format(v.image_of_product)},
        });
    Json j = {
        {"ring", a.name()},
        {"matrix", matrix.to_rows()},
        {"coefficient_field", LefschetzReport::coefficient_field},
        {"is_ring_hom", report.is_ring_hom},
        {"violation_count", validation.violation_count},
        {"violations", violations},
        {"traces", gf2_array(report.traces)},
        {"lefschetz", report.lefschetz.value()},
        {"top_class_representative", report.top_class_representative},
    };
    if (report.table1)
        j["table1"] = {
            {"predicted", gf2_array(report.table1->predicted)},
            {"computed", gf2_array(report.table1->computed)},
            {"match", bool_array(report.table1->match)},
        };
    return j;
}

Json certificate_json(const FppCertificate& cert)
{
    Json exceptional = Json::array();
    for (const auto& x : cert.exceptional) {
        Json reasons = Json::array();
        if (x.lefschetz_zero)
            reasons.push_back("lefschetz_zero");
        if (x.table1_mismatch)
            reasons.push_back("table1_mismatch");
        Json e = {
            {"index", x.index},
            {"matrix", x.matrix.to_rows()},
            {"is_ring_hom", x.is_ring_hom},
            {"traces", gf2_array(x.traces)},
            {"lefschetz", x.lefschetz.value()},
            {"reasons", reasons},
        };
        if (x.table1)
            e["table1"] = {
                {"predicted", gf2_array(x.table1->predicted)},
                {"computed", gf2_array(x.table1->computed)},
                {"match", bool_array(x.table1->match)},
            };
        exceptional.push_back(std::move(e));
    }
    return {
        {"ring", cert.ring},
        {"mode", std::string(to_string(cert.mode))},
        {"order", cert.order},
        {"total", cert.total},
        {"valid_homs", cert.valid},
        {"invalid", cert.invalid},
        {"covered", cert.covered},
        {"histogram", {{"lefschetz_0", cert.lefschetz_zero}, {"lefschetz_1", cert.lefschetz_one}}},
        {"table1_applicable", cert.table1_applicable},
        {"table1_mismatches", cert.table1_mismatches},
        {"top_class_representative", cert.top_class_representative},
        {"exceptional", exceptional},
        {"exceptional_total", cert.exceptional_total},
        {"exceptional_overflow", cert.exceptional_overflow},
        {"claim", "L(f;Z2) = 1 for every covered matrix"},
        {"claim_holds", cert.lefschetz_zero == 0},
    };
}

Json theorem3_json(const Theorem3Report& r)
{
    Json j = {
        {"n", r.n},
        {"matrices", r.matrices},
        {"passed", r.passed},
        {"failures",
         {
             {"t00_is_one", r.failures[0]},
             {"symmetric", r.failures[1]},
             {"diagonal_vanishes", r.failures[2]},
             {"sum_is_one", r.failures[3]},
         }},
    };
    if (r.first_counterexample)
        j["first_counterexample"] = {
            {"index", r.first_counterexample->index},
            {"matrix", r.first_counterexample->matrix},
            {"claim", r.first_counterexample->claim},
        };
    return j;
}

Json crosscheck_json(const CrosscheckReport& r)
{
    Json j = {
        {"n", r.n},
        {"matrices", r.matrices},
        {"coefficients_compared", r.coefficients_compared},
        {"coefficient_mismatches", r.coefficient_mismatches},
        {"degree_trace_mismatches", r.degree_trace_mismatches},
        {"lefschetz_one", r.lefschetz_one},
    };
    if (r.first_mismatch)
        j["first_mismatch"] = {
            {"index", r.first_mismatch->index},
            {"matrix", r.first_mismatch->matrix},
            {"monomial", r.first_mismatch->monomial},
            {"engine", r.first_mismatch->engine.value()},
            {"minor", r.first_mismatch->minor.value()},
        };
    return j;
}

Json sym_formula_json(std::int64_t chi)
{
    return {{"chi_X", chi}, {"chi_sym_square", euler_sym_square(chi)}};
}

Json sym_square_json(const SymSquareReport& r)
{
    Json dims = Json::array();
    for (std::size_t d = 0; d < r.per_dimension.size(); ++d) {
        const auto& c = r.per_dimension[d];
        dims.push_back({{"dim", d}, {"total", c.total}, {"fixed", c.fixed}, {"orbit", c.orbit}});
    }
    return {
        {"chi_X", r.chi_X},
        {"chi_XxX", r.chi_XxX},
        {"chi_diagonal", r.chi_diagonal},
        {"chain_counts", dims},
        {"chi_quotient", r.chi_quotient},
        {"chi_sym_square", r.formula},
        {"free_part_even", r.free_part_even},
        {"identity_holds", r.identity_holds},
        {"formula_agrees", r.formula_agrees},
    };
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

void render_describe(std::ostream& os, const Json& r)
{
    os << "ring: " << r["ring"].get<std::string>() << '\n';
    os << "generators:";
    for (const auto& g : r["generators"])
        os << ' ' << g["name"].get<std::string>() << " (degree " << g["degree"] << ')';
    os << '\n';
    os << "graded dimensions: (" << join(r["graded_dimensions"]) << ")\n";
    os << "euler characteristic: " << r["euler"] << '\n';
    os << "relations:\n";
    for (const auto& rel : r["relations"])
        os << "  " << rel.get<std::string>() << '\n';
}

void render_table1(std::ostream& os, const Json& t)
{
    os << "  degree  predicted  computed  match\n";
    for (std::size_t d = 0; d < t["predicted"].size(); ++d)
        os << "  " << d << "       " << t["predicted"][d] << "          " << t["computed"][d] << "         "
           << (t["match"][d].get<bool>() ? "yes" : "NO") << '\n';
}

void render_lefschetz(std::ostream& os, const Json& r)
{
    os << "ring: " << r["ring"].get<std::string>() << '\n';
    os << "matrix: " << join(r["matrix"], " ") << '\n';
    os << "ring homomorphism: " << (r["is_ring_hom"].get<bool>() ? "yes" : "no");
    if (!r["is_ring_hom"].get<bool>())
        os << " (" << r["violation_count"] << " violating pairs)";
    os << '\n';
    for (const auto& v : r["violations"])
        os << "  f(" << v["left"].get<std::string>() << ")*f(" << v["right"].get<std::string>()
           << ") = " << v["product_of_images"].get<std::string>() << " but f(product) = "
           << v["image_of_product"].get<std::string>() << '\n';
    os << "traces over " << r["coefficient_field"].get<std::string>() << ": " << join(r["traces"]) << '\n';
    os << "top class representative: " << r["top_class_representative"].get<std::string>() << '\n';
    os << "L = " << r["lefschetz"] << '\n';
    if (r.contains("table1")) {
        os << "tabulated traces vs engine:\n";
        render_table1(os, r["table1"]);
    }
}

void render_certificate(std::ostream& os, const Json& r)
{
    os << "ring: " << r["ring"].get<std::string>() << "  mode: " << r["mode"].get<std::string>()
       << "  order: " << r["order"].get<std::string>() << '\n';
    os << "matrices: " << r["total"] << "  valid homs: " << r["valid_homs"] << "  invalid: " << r["invalid"] << '\n';
    os << "covered: " << r["covered"] << "  L=0: " << r["histogram"]["lefschetz_0"]
       << "  L=1: " << r["histogram"]["lefschetz_1"] << '\n';
    if (r["table1_applicable"].get<bool>())
        os << "tabulated-trace mismatches: " << r["table1_mismatches"] << '\n';
    os << "claim: " << r["claim"].get<std::string>() << " -> "
       << (r["claim_holds"].get<bool>() ? "holds" : "FAILS on listed matrices") << '\n';
    os << "exceptional matrices: " << r["exceptional_total"];
    if (r["exceptional_overflow"].get<std::uint64_t>() > 0)
        os << " (" << r["exceptional_overflow"] << " not listed)";
    os << '\n';
    for (const auto& x : r["exceptional"]) {
        os << "  #" << x["index"] << "  " << join(x["matrix"], " ") << "  hom=" << (x["is_ring_hom"].get<bool>() ? 1 : 0)
           << "  traces=(" << join(x["traces"]) << ")  L=" << x["lefschetz"] << "  [" << join(x["reasons"]) << "]";
        if (x.contains("table1"))
            os << "  predicted=(" << join(x["table1"]["predicted"]) << ")";
        os << '\n';
    }
}

void render_theorem3(std::ostream& os, const Json& r)
{
    os << r["passed"] << '/' << r["matrices"] << " matrices pass claims (1)(2)(3), ΣT = 1\n";
    const auto& f = r["failures"];
    os << "failures: T00=1: " << f["t00_is_one"] << ", symmetry: " << f["symmetric"]
       << ", T_kk=0: " << f["diagonal_vanishes"] << ", ΣT=1: " << f["sum_is_one"] << '\n';
    if (r.contains("first_counterexample"))
        os << "first counterexample: #" << r["first_counterexample"]["index"] << ' '
           << join(r["first_counterexample"]["matrix"], " ") << " ("
           << r["first_counterexample"]["claim"].get<std::string>() << ")\n";
}

void render_crosscheck(std::ostream& os, const Json& r)
{
    os << "n = " << r["n"] << ": " << r["matrices"] << " matrices, " << r["coefficients_compared"]
       << " diagonal coefficients compared\n";
    os << "coefficient mismatches: " << r["coefficient_mismatches"]
       << ", degree-trace mismatches: " << r["degree_trace_mismatches"] << '\n';
    os << "matrices with L = 1: " << r["lefschetz_one"] << '/' << r["matrices"] << '\n';
    if (r.contains("first_mismatch"))
        os << "first mismatch: #" << r["first_mismatch"]["index"] << " at "
           << r["first_mismatch"]["monomial"].get<std::string>() << '\n';
}

void render_sympow(std::ostream& os, const Json& r)
{
    if (r.contains("chain_counts")) {
        os << "chi(X) = " << r["chi_X"] << ", chi(XxX) = " << r["chi_XxX"] << ", chi(diagonal) = "
           << r["chi_diagonal"] << '\n';
        os << "  dim     total     fixed     orbit\n";
        for (const auto& c : r["chain_counts"])
            os << "  " << c["dim"] << "  " << c["total"] << "  " << c["fixed"] << "  " << c["orbit"] << '\n';
        os << "orbit count: χ(X(2)) = " << r["chi_quotient"] << '\n';
        os << "closed form: χ(X(2)) = " << r["chi_sym_square"] << '\n';
        os << "2χ(X(2)) = χ(X) + χ(X)^2: " << (r["identity_holds"].get<bool>() ? "yes" : "NO") << '\n';
    } else {
        os << "χ(X(2)) = " << r["chi_sym_square"] << '\n';
    }
}

void render_verify_all(std::ostream& os, const Json& r)
{
    for (const auto& c : r["criteria"]) {
        os << (c["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << c["id"] << ' ' << c["name"].get<std::string>();
        if (c["kind"] == "adjudication")
            os << " (report)";
        if (c.contains("timing_ms"))
            os << "  " << c["timing_ms"] << " ms";
        os << '\n';
    }
}

}  // namespace

std::string render_text(const Json& report)
{
    std::ostringstream os;
    const std::string command = report.value("command", "");
    const Json& results = report["results"];
    if (command == "ring describe")
        render_describe(os, results);
    else if (command == "lefschetz")
        render_lefschetz(os, results);
    else if (command == "verify-fpp")
        render_certificate(os, results);
    else if (command == "theorem3")
        render_theorem3(os, results);
    else if (command == "crosscheck")
        render_crosscheck(os, results);
    else if (command == "sympow")
        render_sympow(os, results);
    else if (command == "verify-all")
        render_verify_all(os, results);
    else
        os << results.dump(2) << '\n';
    os << (report["pass"].get<bool>() ? "result: pass" : "result: FAIL") << '\n';
    if (report.contains("timing_ms"))
        os << "time: " << report["timing_ms"] << " ms\n";
    return os.str();
}

}  // namespace fpp
