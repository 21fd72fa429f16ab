#include "fpp/error.hpp"
#include "fpp/report.hpp"
#include "fpp/search.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace fpp;

TEST_CASE("subsets in lexicographic order")
{
    CHECK(subsets_lex(0) == std::vector<std::uint64_t>{0});
    CHECK(subsets_lex(3) == std::vector<std::uint64_t>{0b000, 0b001, 0b011, 0b111, 0b101, 0b010, 0b110, 0b100});
    CHECK(subsets_lex(5).size() == 32);
}

TEST_CASE("minor traces for n = 2")
{
    for (const auto& a : enumerate_matrices(2)) {
        const MinorTraceTable t = minor_traces(a);
        CHECK(t.t(0b01, 0b10) == a.at(0, 0) * a.at(1, 1));
        CHECK(t.t(0b00, 0b11) == det(a));
        CHECK(t.T[0][0] == kOne);
        CHECK(t.T[1][1] == kZero);
        // Ordered disjoint pairs over two indices: 3^2.
        CHECK(t.terms.size() == 9);
    }
}

TEST_CASE("identity and zero minor tables")
{
    const MinorTraceTable id = minor_traces(Gf2Matrix::identity(3));
    for (const auto& term : id.terms)
        CHECK(term.value == kOne);
    const MinorTraceTable zero = minor_traces(Gf2Matrix::zero(3));
    for (const auto& term : zero.terms)
        CHECK(term.value == Gf2(term.squared == 0 && term.linear == 0));
}

TEST_CASE("t(I,J) depends only on the two principal blocks")
{
    std::mt19937_64 rng(20261018);
    for (std::size_t n : {4U, 5U}) {
        const auto subsets = subsets_lex(n);
        for (int trial = 0; trial < 200; ++trial) {
            Gf2Matrix a(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    a.set(r, c, Gf2(rng() & 1U));
            const std::uint64_t i = subsets[rng() % subsets.size()];
            const std::uint64_t j = subsets[rng() % subsets.size()] & ~i;
            const MinorTraceTable before = minor_traces(a);

            Gf2Matrix b = a;
            for (int flip = 0; flip < 6; ++flip) {
                const std::size_t r = rng() % n;
                const std::size_t c = rng() % n;
                const bool in_i = ((i >> r) & 1U) && ((i >> c) & 1U);
                const bool in_j = ((j >> r) & 1U) && ((j >> c) & 1U);
                if (!in_i && !in_j)
                    b.set(r, c, b.at(r, c) + kOne);
            }
            REQUIRE(minor_traces(b).t(i, j) == before.t(i, j));
        }
    }
}

TEST_CASE("trace claims hold for every matrix, n <= 3")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        const Theorem3Report r = verify_theorem3_claims(n);
        CHECK(r.matrices == (std::uint64_t{1} << (n * n)));
        CHECK(r.pass());
        CHECK_FALSE(r.first_counterexample.has_value());
    }
    CHECK_THROWS_AS(verify_theorem3_claims(6), Error);
}

TEST_CASE("trace claims: serial and parallel agree")
{
    const std::string serial = canonical_dump(theorem3_json(verify_theorem3_claims(3, 1)));
    CHECK(canonical_dump(theorem3_json(verify_theorem3_claims(3, 5))) == serial);
}

TEST_CASE("engine crosscheck")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        const CrosscheckReport r = crosscheck_minors_vs_engine(n, 2);
        CHECK(r.pass());
        std::uint64_t basis = 1;
        for (std::size_t i = 0; i < n; ++i)
            basis *= 3;
        CHECK(r.coefficients_compared == r.matrices * basis);
        CHECK(r.lefschetz_one == r.matrices);
    }
    try {
        crosscheck_minors_vs_engine(4);
        FAIL("expected capacity error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::capacity);
    }
}

TEST_CASE("sweeps over (CP^2)^n cover every matrix")
{
    const FppCertificate one = sweep_fpp(RingSpec::parse("cp2pow:n=1"));
    CHECK(one.mode == SweepMode::all);
    CHECK(one.total == 2);
    CHECK(one.covered == 2);
    CHECK(one.lefschetz_one == 2);
    CHECK(one.clean());

    const FppCertificate two = sweep_fpp(RingSpec::parse("cp2pow:n=2"));
    CHECK(two.total == 16);
    CHECK(two.lefschetz_one == 16);
    CHECK(two.clean());
    CHECK_FALSE(two.table1_applicable);
}

namespace {

// Valid iff columns are disjoint and row sums agree; traces are
// (1, tr, tr, tr, row sum of row 1), by hand expansion in the presented ring.
struct Expected {
    std::uint64_t valid = 0;
    std::uint64_t lefschetz_zero = 0;
    std::uint64_t exceptional = 0;
};

Expected expected_rpsum_sweep()
{
    Expected e;
    for (const auto& m : enumerate_matrices(3)) {
        bool columns_ok = true;
        Gf2 sums[3];
        for (std::size_t c = 0; c < 3; ++c)
            columns_ok = columns_ok && m.at(0, c).value() + m.at(1, c).value() + m.at(2, c).value() <= 1;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                sums[r] += m.at(r, c);
        if (!columns_ok || sums[0] != sums[1] || sums[1] != sums[2])
            continue;
        ++e.valid;
        const Gf2 tr = m.trace();
        const Gf2 l = kOne + tr + tr + tr + sums[0];
        const bool mismatch = sums[0] != m.at(0, 0);
        e.lefschetz_zero += l.bit() ? 0 : 1;
        e.exceptional += (!l.bit() || mismatch) ? 1 : 0;
    }
    return e;
}

}  // namespace

TEST_CASE("connected-sum sweep certificate")
{
    const FppCertificate cert = sweep_fpp(RingSpec::parse("rpsum:n=3,k=2"));
    const Expected want = expected_rpsum_sweep();
    CHECK(cert.mode == SweepMode::valid_only);
    CHECK(cert.total == 512);
    CHECK(cert.valid + cert.invalid == 512);
    CHECK(cert.valid == want.valid);
    CHECK(cert.covered == cert.valid);
    CHECK(cert.lefschetz_zero + cert.lefschetz_one == cert.valid);
    CHECK(cert.lefschetz_zero == want.lefschetz_zero);
    CHECK(cert.exceptional_total == want.exceptional);
    CHECK(cert.top_class_representative == "x1^4");

    const Gf2Matrix cyclic = Gf2Matrix::from_rows({"010", "001", "100"});
    const auto it = std::find_if(cert.exceptional.begin(), cert.exceptional.end(),
                                 [&](const ExceptionalMatrix& x) { return x.matrix == cyclic; });
    REQUIRE(it != cert.exceptional.end());
    CHECK(it->lefschetz_zero);
    CHECK(it->table1_mismatch);
    CHECK(it->traces == std::vector<Gf2>{kOne, kZero, kZero, kZero, kOne});

    for (std::size_t i = 1; i < cert.exceptional.size(); ++i)
        CHECK(cert.exceptional[i - 1].index < cert.exceptional[i].index);
    for (const auto& x : cert.exceptional)
        CHECK((x.lefschetz_zero || x.table1_mismatch));
}

TEST_CASE("certificates are independent of the worker count")
{
    for (const char* ring : {"rpsum:n=3,k=2", "cp2pow:n=2"}) {
        SweepOptions o;
        o.mode = SweepMode::all;
        const std::string serial = canonical_dump(certificate_json(sweep_fpp(RingSpec::parse(ring), o)));
        for (unsigned jobs : {2U, 3U, 8U, 600U}) {
            o.jobs = jobs;
            CHECK(canonical_dump(certificate_json(sweep_fpp(RingSpec::parse(ring), o))) == serial);
        }
    }
}

TEST_CASE("exceptional list is capped")
{
    SweepOptions o;
    o.mode = SweepMode::all;
    o.max_exceptional = 5;
    o.jobs = 4;
    const FppCertificate cert = sweep_fpp(RingSpec::parse("rpsum:n=3,k=2"), o);
    CHECK(cert.covered == 512);
    CHECK(cert.exceptional.size() == 5);
    CHECK(cert.exceptional_overflow == cert.exceptional_total - 5);

    SweepOptions full = o;
    full.max_exceptional = 1000;
    full.jobs = 1;
    const FppCertificate all = sweep_fpp(RingSpec::parse("rpsum:n=3,k=2"), full);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(cert.exceptional[i].index == all.exceptional[i].index);
}

TEST_CASE("sweep capacity and modes")
{
    try {
        sweep_fpp(RingSpec::parse("cp2pow:n=6"));
        FAIL("expected capacity error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::capacity);
        CHECK(std::string(e.what()).find("2^25") != std::string::npos);
    }
    CHECK(parse_sweep_mode("all") == SweepMode::all);
    CHECK(parse_sweep_mode("valid-only") == SweepMode::valid_only);
    CHECK_THROWS_AS(parse_sweep_mode("some"), Error);
}
