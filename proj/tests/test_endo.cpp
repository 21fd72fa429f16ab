#include "fpp/endo.hpp"
#include "fpp/error.hpp"

#include <doctest.h>

#include <map>

using namespace fpp;

namespace {

// Hand expansion in the presented ring Z2[x1..xn]/(x1^{2k+1}, x_i^{2k}+x_j^{2k}, x_i x_j):
// expand prod_r (sum_j a_rj x_j)^{e_r} as a polynomial over dense exponent
// vectors, then reduce with the relations. Shares no code with the engine.
using Poly = std::map<std::vector<unsigned>, int>;

Poly reduce_connected_sum(const Poly& p, unsigned top)
{
    Poly out;
    for (const auto& [exps, c] : p) {
        if (!c)
            continue;
        unsigned nonzero = 0;
        std::size_t which = 0;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i]) {
                ++nonzero;
                which = i;
            }
        if (nonzero > 1)
            continue;
        std::vector<unsigned> e(exps.size(), 0);
        if (nonzero == 1) {
            if (exps[which] > top)
                continue;
            e[exps[which] == top ? 0 : which] = exps[which];
        }
        out[e] ^= 1;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Poly multiply(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<unsigned> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out[e] ^= ca & cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// Predicted traces (1, deg 1, ..., deg 2k) for rpsum by hand expansion.
std::vector<int> hand_traces(const Gf2Matrix& a, unsigned top)
{
    const std::size_t n = a.rows();
    std::vector<Poly> images(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.at(i, j).bit()) {
                std::vector<unsigned> e(n, 0);
                e[j] = 1;
                images[i][e] = 1;
            }

    std::vector<int> traces{1};
    for (unsigned m = 1; m <= top; ++m) {
        // Basis in degree m: x_i^m for m < top, only x_1^top in the top degree.
        const std::size_t count = m < top ? n : 1;
        int trace = 0;
        for (std::size_t i = 0; i < count; ++i) {
            Poly p{{std::vector<unsigned>(n, 0), 1}};
            for (unsigned r = 0; r < m; ++r)
                p = reduce_connected_sum(multiply(p, images[i]), top);
            std::vector<unsigned> diag(n, 0);
            diag[m < top ? i : 0] = m;
            auto it = p.find(diag);
            trace ^= it == p.end() ? 0 : it->second;
        }
        traces.push_back(trace);
    }
    return traces;
}

std::vector<int> ints(const std::vector<Gf2>& v)
{
    std::vector<int> out;
    for (auto x : v)
        out.push_back(x.value());
    return out;
}

const Gf2Matrix kCyclic = Gf2Matrix::from_rows({"010", "001", "100"});

}  // namespace

TEST_CASE("identity and zero on rpsum:n=3,k=2")
{
    const GradedAlgebra a = connected_sum_ring(3, 2);
    const InducedEndo id = induce_validated(a, Gf2Matrix::identity(3));
    for (int d = 0; d <= 4; ++d)
        CHECK(id.per_degree[static_cast<std::size_t>(d)] == Gf2Matrix::identity(a.dim(d)));
    const LefschetzReport lid = lefschetz(a, id);
    CHECK(ints(lid.traces) == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(lid.lefschetz == kOne);
    CHECK(lid.is_ring_hom);
    CHECK(lid.top_class_representative == "x1^4");

    const InducedEndo zero = induce_validated(a, Gf2Matrix::zero(3));
    CHECK(ints(lefschetz(a, zero).traces) == std::vector<int>{1, 0, 0, 0, 0});
    CHECK(zero.is_ring_hom);
}

TEST_CASE("cyclic permutation: traces (1,0,0,0,1) and L = 0")
{
    const GradedAlgebra a = connected_sum_ring(3, 2);
    CHECK(hand_traces(kCyclic, 4) == std::vector<int>{1, 0, 0, 0, 1});
    const InducedEndo e = induce_validated(a, kCyclic);
    CHECK(e.is_ring_hom);
    const LefschetzReport r = lefschetz(a, e);
    CHECK(ints(r.traces) == std::vector<int>{1, 0, 0, 0, 1});
    CHECK(r.lefschetz == kZero);
}

TEST_CASE("engine traces agree with hand expansion for every 3x3 matrix")
{
    const GradedAlgebra a = connected_sum_ring(3, 2);
    for (const auto& m : enumerate_matrices(3))
        REQUIRE(ints(lefschetz(a, induce(a, m)).traces) == hand_traces(m, 4));
    const GradedAlgebra b = connected_sum_ring(2, 3);
    for (const auto& m : enumerate_matrices(2))
        REQUIRE(ints(lefschetz(b, induce(b, m)).traces) == hand_traces(m, 6));
}

TEST_CASE("all-ones matrix is not a ring homomorphism")
{
    const GradedAlgebra a = connected_sum_ring(3, 2);
    const InducedEndo e = induce(a, Gf2Matrix::from_rows({"111", "111", "111"}));
    const HomValidation v = validate_ring_hom(a, e);
    CHECK_FALSE(v.valid);
    REQUIRE_FALSE(v.violations.empty());
    bool found = false;
    for (const auto& viol : v.violations)
        if (a.basis_monomial(viol.left).to_string(a.generators()) == "x1"
            && a.basis_monomial(viol.right).to_string(a.generators()) == "x2") {
            found = true;
            CHECK(a.format(viol.product_of_images) == "x1^2 + x2^2 + x3^2");
            CHECK(viol.image_of_product.is_zero());
        }
    CHECK(found);
}

TEST_CASE("identity is valid on every constructed algebra, and L(id) = chi mod 2")
{
    std::vector<GradedAlgebra> algebras;
    for (std::size_t n = 1; n <= 4; ++n)
        algebras.push_back(connected_sum_ring(n, 2));
    for (std::size_t n = 1; n <= 3; ++n)
        algebras.push_back(truncated_poly_ring(n, 2, 3));
    for (const auto& a : algebras) {
        const InducedEndo e = induce_validated(a, Gf2Matrix::identity(a.generator_count()));
        CHECK(e.is_ring_hom);
        const auto chi = euler(a);
        CHECK(lefschetz(a, e).lefschetz.value() == static_cast<int>(((chi % 2) + 2) % 2));
    }
}

TEST_CASE("degree-0 trace is always 1")
{
    const GradedAlgebra a = connected_sum_ring(3, 2);
    const GradedAlgebra b = truncated_poly_ring(2, 2, 3);
    for (const auto& m : enumerate_matrices(3))
        REQUIRE(lefschetz(a, induce(a, m)).traces[0] == kOne);
    for (const auto& m : enumerate_matrices(2)) {
        const InducedEndo e = induce(b, m);
        REQUIRE(e.per_degree[0] == Gf2Matrix::identity(1));
        REQUIRE(lefschetz(b, e).traces[0] == kOne);
    }
}

TEST_CASE("validity on rpsum:n=3,k=2: disjoint columns and equal row sums")
{
    const GradedAlgebra a = connected_sum_ring(3, 2);
    std::size_t valid = 0;
    for (const auto& m : enumerate_matrices(3)) {
        bool columns_ok = true;
        for (std::size_t c = 0; c < 3; ++c)
            columns_ok = columns_ok && (m.at(0, c).value() + m.at(1, c).value() + m.at(2, c).value()) <= 1;
        Gf2 sums[3];
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                sums[r] += m.at(r, c);
        const bool characterized = columns_ok && sums[0] == sums[1] && sums[1] == sums[2];
        const bool brute = validate_ring_hom(a, induce(a, m)).valid;
        REQUIRE(characterized == brute);
        valid += brute ? 1 : 0;
    }
    // Zero matrix, six permutations, nine "one row with two ones".
    CHECK(valid == 16);
}

TEST_CASE("truncated ring: the (x_i, x_i^2) pair forces at most one 1 per row")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        const GradedAlgebra a = truncated_poly_ring(n, 2, 3);
        for (const auto& m : enumerate_matrices(n)) {
            const InducedEndo e = induce(a, m);
            bool all_rows_ok = true;
            for (std::size_t i = 0; i < n; ++i) {
                const auto lin = a.find_basis(Monomial::power(i, 1));
                const auto sq = a.find_basis(Monomial::power(i, 2));
                const Element fi{lin->degree, e.per_degree[2].row(lin->index)};
                const Element fi2{sq->degree, e.per_degree[4].row(sq->index)};
                const bool pair_ok = a.multiply(fi, fi2).is_zero();
                std::size_t ones = 0;
                for (std::size_t j = 0; j < n; ++j)
                    ones += m.at(i, j).value();
                REQUIRE(pair_ok == (ones <= 1));
                all_rows_ok = all_rows_ok && pair_ok;
            }
            if (validate_ring_hom(a, e).valid)
                REQUIRE(all_rows_ok);
        }
    }
}

TEST_CASE("functoriality on valid homomorphisms")
{
    const GradedAlgebra a = connected_sum_ring(3, 2);
    std::vector<std::pair<Gf2Matrix, InducedEndo>> valid;
    for (const auto& m : enumerate_matrices(3)) {
        InducedEndo e = induce_validated(a, m);
        if (e.is_ring_hom)
            valid.emplace_back(m, std::move(e));
    }
    REQUIRE(valid.size() == 16);
    for (const auto& [ma, ea] : valid)
        for (const auto& [mb, eb] : valid) {
            const InducedEndo composite = induce(a, ma * mb);
            for (std::size_t d = 0; d < composite.per_degree.size(); ++d)
                REQUIRE(composite.per_degree[d] == ea.per_degree[d] * eb.per_degree[d]);
        }
}

TEST_CASE("trace is invariant under permuting a basis")
{
    const GradedAlgebra a = truncated_poly_ring(2, 2, 3);
    const Gf2Matrix p = Gf2Matrix::from_rows({"010", "001", "100"});
    for (const auto& m : enumerate_matrices(2)) {
        const Gf2Matrix& deg4 = induce(a, m).per_degree[4];
        REQUIRE(deg4.rows() == 3);
        REQUIRE((p * deg4 * p.transpose()).trace() == deg4.trace());
    }
}

TEST_CASE("tabulated traces")
{
    const GradedAlgebra a = connected_sum_ring(3, 2);
    auto compare = [&](const Gf2Matrix& m) {
        const GeneratorMatrix g(a, m);
        return compare_table1(g, lefschetz(a, induce(g)).traces);
    };

    const Table1Comparison id = compare(Gf2Matrix::identity(3));
    CHECK(ints(id.predicted) == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(id.all_match());

    const Table1Comparison zero = compare(Gf2Matrix::zero(3));
    CHECK(ints(zero.predicted) == std::vector<int>{1, 0, 0, 0, 0});
    CHECK(zero.all_match());

    const Table1Comparison cyc = compare(kCyclic);
    CHECK(ints(cyc.predicted) == std::vector<int>{1, 0, 0, 0, 0});
    CHECK(ints(cyc.computed) == std::vector<int>{1, 0, 0, 0, 1});
    CHECK(cyc.match == std::vector<bool>{true, true, true, true, false});

    const GradedAlgebra other = connected_sum_ring(4, 2);
    CHECK_THROWS_AS(table1_traces(GeneratorMatrix(other, Gf2Matrix::identity(4))), Error);
}

TEST_CASE("generator matrix shape is checked")
{
    const GradedAlgebra a = connected_sum_ring(3, 2);
    try {
        GeneratorMatrix(a, Gf2Matrix::identity(2));
        FAIL("expected dimension error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::dimension);
    }
}
