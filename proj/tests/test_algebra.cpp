#include "fpp/algebra.hpp"
#include "fpp/error.hpp"

#include <doctest.h>

#include <set>

using namespace fpp;

namespace {

using Dims = std::vector<std::size_t>;

std::set<Monomial> support(const GradedAlgebra& a, const Element& e)
{
    std::set<Monomial> out;
    for (auto i : e.coeffs.ones())
        out.insert(a.basis(e.degree)[i]);
    return out;
}

// Same basis monomials per degree and the same products, monomial by monomial.
bool same_algebra(const GradedAlgebra& a, const GradedAlgebra& b)
{
    if (a.generator_count() != b.generator_count() || a.graded_dimensions() != b.graded_dimensions())
        return false;
    for (int d = 0; d <= a.top_degree(); ++d) {
        const std::set<Monomial> sa(a.basis(d).begin(), a.basis(d).end());
        const std::set<Monomial> sb(b.basis(d).begin(), b.basis(d).end());
        if (sa != sb)
            return false;
    }
    for (std::size_t u = 0; u < a.total_dim(); ++u)
        for (std::size_t v = 0; v < a.total_dim(); ++v) {
            const Monomial m = a.basis_monomial(u) * a.basis_monomial(v);
            if (support(a, a.product(u, v)) != support(b, b.normal_form(m)))
                return false;
        }
    return true;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected fpp::Error");
    return ErrorKind::validation;
}

}  // namespace

TEST_CASE("connected sum of three RP4")
{
    const GradedAlgebra a = connected_sum_ring(3, 2);
    CHECK(a.name() == "rpsum:n=3,k=2");
    CHECK(a.graded_dimensions() == Dims{1, 3, 3, 3, 1});
    CHECK(euler(a) == -1);
    CHECK(a.basis(4).front().to_string(a.generators()) == "x1^4");

    const Element x1 = a.generator(0);
    const Element x2 = a.generator(1);
    CHECK(a.multiply(x1, x2).is_zero());
    CHECK(a.normal_form(Monomial::power(1, 4)) == a.basis_element(4, 0));
    CHECK(a.normal_form(Monomial::power(2, 5)).is_zero());
    CHECK(a.power(x2, 4) == a.power(x1, 4));
    CHECK(a.power(x1, 5).is_zero());
    CHECK(a.relations().size() == 1 + 3 + 3);
}

TEST_CASE("connected sum edge cases")
{
    CHECK(connected_sum_ring(1, 2).graded_dimensions() == Dims{1, 1, 1, 1, 1});
    CHECK(connected_sum_ring(2, 3).graded_dimensions() == Dims{1, 2, 2, 2, 2, 2, 1});
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(euler(connected_sum_ring(n, 2)) == 2 - static_cast<std::int64_t>(n));
    CHECK(kind_of([] { connected_sum_ring(3, 1); }) == ErrorKind::unsupported);
    CHECK(kind_of([] { connected_sum_ring(0, 2); }) == ErrorKind::domain);
}

TEST_CASE("truncated polynomial rings")
{
    const GradedAlgebra cp2 = truncated_poly_ring(1, 2, 3);
    CHECK(cp2.graded_dimensions() == Dims{1, 0, 1, 0, 1});
    CHECK(euler(cp2) == 3);

    const GradedAlgebra two = truncated_poly_ring(2, 2, 3);
    CHECK(two.total_dim() == 9);
    CHECK(euler(two) == 9);

    for (std::uint64_t n = 1; n <= 5; ++n) {
        std::uint64_t by_kl = 0;
        for (std::uint64_t k = 0; k <= n; ++k)
            for (std::uint64_t l = 0; k + l <= n; ++l)
                by_kl += binomial(n, k) * binomial(n - k, l);
        std::uint64_t three_n = 1;
        for (std::uint64_t i = 0; i < n; ++i)
            three_n *= 3;
        CHECK(by_kl == three_n);
        CHECK(truncated_poly_ring(n, 2, 3).total_dim() == three_n);
    }

    CHECK(kind_of([] { truncated_poly_ring(2, 1, 3); }) == ErrorKind::domain);
    CHECK(kind_of([] { truncated_poly_ring(2, 2, 1); }) == ErrorKind::domain);
    CHECK(kind_of([] { truncated_poly_ring(0, 2, 3); }) == ErrorKind::domain);
}

TEST_CASE("Kunneth tensor products")
{
    const GradedAlgebra cp2 = truncated_poly_ring(1, 2, 3);
    CHECK(same_algebra(tensor_product(point_algebra(), cp2), cp2));
    CHECK(same_algebra(tensor_product(cp2, point_algebra()), cp2));

    const GradedAlgebra sq = tensor_product(cp2, cp2);
    CHECK(sq.graded_dimensions() == Dims{1, 0, 2, 0, 3, 0, 2, 0, 1});
    CHECK(same_algebra(sq, truncated_poly_ring(2, 2, 3)));
    CHECK(same_algebra(tensor_product(sq, cp2), truncated_poly_ring(3, 2, 3)));
    CHECK(sq.generators()[1].name == "x2");

    const std::vector<GradedAlgebra> algebras{point_algebra(), cp2, connected_sum_ring(1, 2),
                                              connected_sum_ring(3, 2), truncated_poly_ring(2, 4, 2)};
    for (const auto& a : algebras)
        for (const auto& b : algebras)
            CHECK(euler(tensor_product(a, b)) == euler(a) * euler(b));
}

TEST_CASE("ring axioms hold exhaustively")
{
    std::vector<GradedAlgebra> algebras;
    for (std::size_t n = 1; n <= 4; ++n)
        algebras.push_back(connected_sum_ring(n, 2));
    algebras.push_back(connected_sum_ring(2, 3));
    for (std::size_t n = 1; n <= 3; ++n)
        algebras.push_back(truncated_poly_ring(n, 2, 3));
    algebras.push_back(tensor_product(connected_sum_ring(2, 2), truncated_poly_ring(1, 2, 3)));

    for (const auto& a : algebras) {
        CAPTURE(a.name());
        const AxiomReport r = check_ring_axioms(a);
        CHECK(r.ok());
        CHECK(r.pairs_checked == a.total_dim() * a.total_dim());
    }
}

TEST_CASE("Poincare pairing is nondegenerate")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        const GradedAlgebra a = connected_sum_ring(n, 2);
        for (int m = 0; m <= a.top_degree(); ++m)
            CHECK(poincare_pairing_nondegenerate(a, m));
    }
    for (std::size_t n = 1; n <= 3; ++n) {
        const GradedAlgebra a = truncated_poly_ring(n, 2, 3);
        for (int m = 0; m <= a.top_degree(); ++m)
            CHECK(poincare_pairing_nondegenerate(a, m));
    }
    CHECK(poincare_pairing_nondegenerate(point_algebra(), 0));
    CHECK_FALSE(poincare_pairing_matrix(connected_sum_ring(3, 2), 7).has_value());
}

TEST_CASE("Frobenius is additive on degree one")
{
    for (std::size_t n : {3U, 4U}) {
        const GradedAlgebra a = connected_sum_ring(n, 2);
        const std::size_t count = std::size_t{1} << n;
        auto element = [&](std::size_t mask) {
            Element e = a.zero(1);
            for (std::size_t i = 0; i < n; ++i)
                if ((mask >> i) & 1U)
                    e.coeffs.set(i, true);
            return e;
        };
        for (std::size_t u = 0; u < count; ++u)
            for (std::size_t v = 0; v < count; ++v) {
                const Element s = a.add(element(u), element(v));
                CHECK(a.power(s, 2) == a.add(a.power(element(u), 2), a.power(element(v), 2)));
            }
    }
}

TEST_CASE("ring specifiers")
{
    CHECK(RingSpec::parse("rpsum:n=3,k=2") == RingSpec{RingSpec::Kind::rpsum, 3, 2});
    CHECK(RingSpec::parse("rpsum:k=2,n=4").to_string() == "rpsum:n=4,k=2");
    CHECK(RingSpec::parse("cp2pow:n=2").build().name() == "cp2pow:n=2");
    for (const char* bad : {"rpsum", "rpsum:n=3", "cp2pow:n=x", "cp2pow:n=2,k=2", "torus:n=1", "rpsum:n=3,k=2,n=1", "cp2pow:"})
        CHECK(kind_of([&] { RingSpec::parse(bad); }) == ErrorKind::parse);
    CHECK(kind_of([] { RingSpec::parse("rpsum:n=3,k=1").build(); }) == ErrorKind::unsupported);
}
