#include "fpp/search.hpp"

#include "fpp/error.hpp"
#include "parallel.hpp"

#include <bit>

namespace fpp {

std::string_view to_string(SweepMode mode)
{
    return mode == SweepMode::all ? "all" : "valid-only";
}

SweepMode parse_sweep_mode(std::string_view text)
{
    if (text == "all")
        return SweepMode::all;
    if (text == "valid-only")
        return SweepMode::valid_only;
    throw Error(ErrorKind::parse, "unknown sweep mode '" + std::string(text) + "' (expected valid-only or all)");
}

SweepMode default_mode(const RingSpec& spec)
{
    return spec.kind == RingSpec::Kind::cp2pow ? SweepMode::all : SweepMode::valid_only;
}

// ------------------------------------------------------------------- sweep

namespace {

struct SweepPartial {
    std::uint64_t valid = 0;
    std::uint64_t invalid = 0;
    std::uint64_t covered = 0;
    std::uint64_t lefschetz_zero = 0;
    std::uint64_t lefschetz_one = 0;
    std::uint64_t table1_mismatches = 0;
    std::uint64_t exceptional_total = 0;
    std::vector<ExceptionalMatrix> exceptional;
};

}  // namespace

FppCertificate sweep_fpp(const RingSpec& spec, const SweepOptions& options)
{
    if (options.jobs < 1)
        throw Error(ErrorKind::domain, "jobs must be at least 1");
    const GradedAlgebra alg = spec.build();
    const MatrixSpace space(alg.generator_count(), options.cap_bits);
    const SweepMode mode = options.mode.value_or(default_mode(spec));
    const bool table1 = spec == RingSpec{RingSpec::Kind::rpsum, 3, 2};

    auto partials = detail::run_chunks<SweepPartial>(space.size(), options.jobs,
        [&](std::uint64_t begin, std::uint64_t end) {
            SweepPartial p;
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                const GeneratorMatrix a(alg, space.at(idx));
                InducedEndo e = induce(a);
                e.is_ring_hom = validate_ring_hom(alg, e, 0, true).valid;
                e.validated = true;
                ++(e.is_ring_hom ? p.valid : p.invalid);
                if (mode == SweepMode::valid_only && !e.is_ring_hom)
                    continue;

                ++p.covered;
                LefschetzReport report = lefschetz(alg, e);
                ++(report.lefschetz.bit() ? p.lefschetz_one : p.lefschetz_zero);
                bool mismatch = false;
                if (table1) {
                    report.table1 = compare_table1(a, report.traces);
                    mismatch = !report.table1->all_match();
                    p.table1_mismatches += mismatch ? 1 : 0;
                }
                if (report.lefschetz.bit() && !mismatch)
                    continue;

                ++p.exceptional_total;
                if (p.exceptional.size() < options.max_exceptional)
                    p.exceptional.push_back({idx, a.matrix(), e.is_ring_hom, std::move(report.traces),
                                             report.lefschetz, !report.lefschetz.bit(), mismatch,
                                             std::move(report.table1)});
            }
            return p;
        });

    FppCertificate cert;
    cert.ring = spec.to_string();
    cert.mode = mode;
    cert.total = space.size();
    cert.table1_applicable = table1;
    if (alg.dim(alg.top_degree()) == 1)
        cert.top_class_representative = alg.basis(alg.top_degree()).front().to_string(alg.generators());
    for (auto& p : partials) {
        cert.valid += p.valid;
        cert.invalid += p.invalid;
        cert.covered += p.covered;
        cert.lefschetz_zero += p.lefschetz_zero;
        cert.lefschetz_one += p.lefschetz_one;
        cert.table1_mismatches += p.table1_mismatches;
        cert.exceptional_total += p.exceptional_total;
        for (auto& x : p.exceptional)
            if (cert.exceptional.size() < options.max_exceptional)
                cert.exceptional.push_back(std::move(x));
    }
    cert.exceptional_overflow = cert.exceptional_total - cert.exceptional.size();
    return cert;
}

// ------------------------------------------------------------------ minors

std::vector<std::uint64_t> subsets_lex(std::size_t n)
{
    if (n > 63)
        throw Error(ErrorKind::capacity, "subset enumeration limited to 63 indices");
    std::vector<std::uint64_t> out;
    auto visit = [&](auto&& self, std::uint64_t current, std::size_t next) -> void {
        out.push_back(current);
        for (std::size_t i = next; i < n; ++i)
            self(self, current | (std::uint64_t{1} << i), i + 1);
    };
    visit(visit, 0, 0);
    return out;
}

MinorTraceTable minor_traces(const Gf2Matrix& a)
{
    if (!a.square())
        throw Error(ErrorKind::dimension, "minor traces need a square matrix");
    const std::size_t n = a.rows();
    if (n > 20)
        throw Error(ErrorKind::capacity, "minor traces limited to n <= 20");

    MinorTraceTable table;
    table.n = n;
    table.principal_minors.resize(std::size_t{1} << n);
    for (std::uint64_t s = 0; s < table.principal_minors.size(); ++s)
        table.principal_minors[s] = det(principal_submatrix(a, s));

    table.T.assign(n + 1, std::vector<Gf2>(n + 1));
    const auto order = subsets_lex(n);
    for (auto i : order) {
        for (auto j : order) {
            if (i & j)
                continue;
            const Gf2 value = table.t(i, j);
            table.terms.push_back({i, j, value});
            table.T[static_cast<std::size_t>(std::popcount(i))][static_cast<std::size_t>(std::popcount(j))] += value;
        }
    }
    for (const auto& row : table.T)
        for (auto v : row)
            table.total += v;
    return table;
}

namespace {

struct ClaimPartial {
    std::uint64_t passed = 0;
    std::array<std::uint64_t, 4> failures{};
    std::optional<Counterexample> first;
};

const char* const kClaimNames[4] = {
    "T[0][0] = 1",
    "t(I,J) = t(J,I) and T[k][l] = T[l][k]",
    "T[k][k] = 0 for k >= 1",
    "sum of T[k][l] = 1",
};

}  // namespace

Theorem3Report verify_theorem3_claims(std::size_t n, unsigned jobs, unsigned cap_bits)
{
    if (jobs < 1)
        throw Error(ErrorKind::domain, "jobs must be at least 1");
    const MatrixSpace space(n, cap_bits);

    auto partials = detail::run_chunks<ClaimPartial>(space.size(), jobs,
        [&](std::uint64_t begin, std::uint64_t end) {
            ClaimPartial p;
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                const Gf2Matrix a = space.at(idx);
                const MinorTraceTable t = minor_traces(a);

                std::array<bool, 4> ok{true, true, true, true};
                ok[0] = t.T[0][0] == kOne;
                for (const auto& term : t.terms)
                    if (term.value != t.t(term.linear, term.squared))
                        ok[1] = false;
                for (std::size_t k = 0; k <= n; ++k)
                    for (std::size_t l = 0; k + l <= n; ++l)
                        if (t.T[k][l] != t.T[l][k])
                            ok[1] = false;
                for (std::size_t k = 1; 2 * k <= n; ++k)
                    if (t.T[k][k] != kZero)
                        ok[2] = false;
                ok[3] = t.total == kOne;

                bool all = true;
                for (std::size_t c = 0; c < 4; ++c) {
                    if (ok[c])
                        continue;
                    all = false;
                    ++p.failures[c];
                    if (!p.first)
                        p.first = Counterexample{idx, a.to_rows(), kClaimNames[c]};
                }
                p.passed += all ? 1 : 0;
            }
            return p;
        });

    Theorem3Report report;
    report.n = n;
    report.matrices = space.size();
    for (auto& p : partials) {
        report.passed += p.passed;
        for (std::size_t c = 0; c < 4; ++c)
            report.failures[c] += p.failures[c];
        if (!report.first_counterexample && p.first)
            report.first_counterexample = std::move(p.first);
    }
    return report;
}

// -------------------------------------------------------------- crosscheck

namespace {

struct CrossPartial {
    std::uint64_t compared = 0;
    std::uint64_t coefficient_mismatches = 0;
    std::uint64_t degree_mismatches = 0;
    std::uint64_t lefschetz_one = 0;
    std::optional<CrosscheckMismatch> first;
};

}  // namespace

CrosscheckReport crosscheck_minors_vs_engine(std::size_t n, unsigned jobs)
{
    if (jobs < 1)
        throw Error(ErrorKind::domain, "jobs must be at least 1");
    if (n < 1)
        throw Error(ErrorKind::domain, "crosscheck needs n >= 1");
    if (n > kCrosscheckMaxN)
        throw Error(ErrorKind::capacity, "engine crosscheck is capped at n <= " + std::to_string(kCrosscheckMaxN)
                                             + " (basis grows as 3^n)");
    const GradedAlgebra alg = truncated_poly_ring(n, 2, 3);
    const MatrixSpace space(n);

    // Squared and linear index sets of every basis monomial, by flat index.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> split(alg.total_dim());
    for (std::size_t f = 0; f < alg.total_dim(); ++f)
        for (const auto& [g, e] : alg.basis_monomial(f).terms())
            (e == 2 ? split[f].first : split[f].second) |= std::uint64_t{1} << g;

    auto partials = detail::run_chunks<CrossPartial>(space.size(), jobs,
        [&](std::uint64_t begin, std::uint64_t end) {
            CrossPartial p;
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                const Gf2Matrix a = space.at(idx);
                const InducedEndo e = induce(alg, a);
                const MinorTraceTable t = minor_traces(a);

                Gf2 lef;
                for (int d = 0; d <= alg.top_degree(); ++d) {
                    const Gf2Matrix& m = e.per_degree[static_cast<std::size_t>(d)];
                    for (std::size_t i = 0; i < m.rows(); ++i) {
                        const auto [sq, lin] = split[alg.flat_index(d, i)];
                        const Gf2 engine = m.at(i, i);
                        const Gf2 minor = t.t(sq, lin);
                        ++p.compared;
                        if (engine == minor)
                            continue;
                        ++p.coefficient_mismatches;
                        if (!p.first)
                            p.first = CrosscheckMismatch{idx, a.to_rows(),
                                                         alg.basis(d)[i].to_string(alg.generators()), engine, minor};
                    }

                    // Degree 2m collects X_{k,l} with 2k + l = m; odd degrees are empty.
                    Gf2 expected;
                    if (d % 2 == 0) {
                        const std::size_t m2 = static_cast<std::size_t>(d / 2);
                        for (std::size_t k = 0; 2 * k <= m2; ++k) {
                            const std::size_t l = m2 - 2 * k;
                            if (k + l <= n)
                                expected += t.T[k][l];
                        }
                    }
                    const Gf2 trace = m.trace();
                    lef += trace;
                    if (trace != expected)
                        ++p.degree_mismatches;
                }
                p.lefschetz_one += lef.bit() ? 1 : 0;
            }
            return p;
        });

    CrosscheckReport report;
    report.n = n;
    report.matrices = space.size();
    for (auto& p : partials) {
        report.coefficients_compared += p.compared;
        report.coefficient_mismatches += p.coefficient_mismatches;
        report.degree_trace_mismatches += p.degree_mismatches;
        report.lefschetz_one += p.lefschetz_one;
        if (!report.first_mismatch && p.first)
            report.first_mismatch = std::move(p.first);
    }
    return report;
}

}  // namespace fpp
