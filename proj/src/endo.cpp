#include "fpp/endo.hpp"

#include "fpp/error.hpp"

namespace fpp {

GeneratorMatrix::GeneratorMatrix(const GradedAlgebra& algebra, Gf2Matrix matrix)
    : algebra_(&algebra), matrix_(std::move(matrix))
{
    const std::size_t n = algebra.generator_count();
    if (!matrix_.square() || matrix_.rows() != n)
        throw Error(ErrorKind::dimension, algebra.name() + ": generator matrix must be " + std::to_string(n) + "x"
                                              + std::to_string(n) + ", got " + std::to_string(matrix_.rows())
                                              + "x" + std::to_string(matrix_.cols()));
    if (n == 0)
        return;
    generator_degree_ = algebra.generators().front().degree;
    for (const auto& g : algebra.generators())
        if (g.degree != generator_degree_)
            throw Error(ErrorKind::domain, algebra.name() + ": generators have different degrees");
}

InducedEndo induce(const GeneratorMatrix& a)
{
    const GradedAlgebra& alg = a.algebra();
    const std::size_t n = alg.generator_count();

    std::vector<Element> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Element img = alg.zero(a.generator_degree());
        for (std::size_t j = 0; j < n; ++j)
            if (a.matrix().at(i, j).bit())
                img = alg.add(img, alg.generator(j));
        images.push_back(std::move(img));
    }

    // powers[i][e] = images[i]^e, grown on demand.
    std::vector<std::vector<Element>> powers(n);
    for (std::size_t i = 0; i < n; ++i)
        powers[i].push_back(alg.unit());
    auto power_of = [&](std::size_t g, unsigned e) -> const Element& {
        auto& p = powers[g];
        while (p.size() <= e)
            p.push_back(alg.multiply(p.back(), images[g]));
        return p[e];
    };

    InducedEndo out;
    for (int d = 0; d <= alg.top_degree(); ++d) {
        const auto& basis = alg.basis(d);
        Gf2Matrix m(basis.size(), basis.size());
        for (std::size_t r = 0; r < basis.size(); ++r) {
            Element img = alg.unit();
            for (const auto& [g, e] : basis[r].terms())
                img = alg.multiply(img, power_of(g, e));
            m.set_row(r, img.coeffs);
        }
        out.per_degree.push_back(std::move(m));
    }
    return out;
}

InducedEndo induce(const GradedAlgebra& algebra, const Gf2Matrix& a)
{
    return induce(GeneratorMatrix(algebra, a));
}

Element apply(const InducedEndo& e, const Element& x)
{
    if (x.degree < 0 || static_cast<std::size_t>(x.degree) >= e.per_degree.size())
        return x;
    const Gf2Matrix& m = e.per_degree[static_cast<std::size_t>(x.degree)];
    if (x.coeffs.size() != m.rows())
        throw Error(ErrorKind::dimension, "element does not match the endomorphism's degree dimension");
    Element out{x.degree, BitVector(m.cols())};
    for (auto i : x.coeffs.ones())
        out.coeffs ^= m.row(i);
    return out;
}

HomValidation validate_ring_hom(const GradedAlgebra& algebra, const InducedEndo& e, std::size_t max_listed,
                                bool stop_at_first)
{
    const std::size_t n = algebra.total_dim();
    std::vector<Element> images;
    images.reserve(n);
    for (std::size_t u = 0; u < n; ++u) {
        const auto ref = algebra.basis_ref(u);
        images.push_back(Element{ref.degree, e.per_degree.at(static_cast<std::size_t>(ref.degree)).row(ref.index)});
    }

    HomValidation out;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            Element lhs = algebra.multiply(images[u], images[v]);
            Element rhs = apply(e, algebra.product(u, v));
            if (lhs == rhs)
                continue;
            out.valid = false;
            ++out.violation_count;
            if (out.violations.size() < max_listed)
                out.violations.push_back({u, v, std::move(lhs), std::move(rhs)});
            if (stop_at_first)
                return out;
        }
    }
    return out;
}

InducedEndo induce_validated(const GradedAlgebra& algebra, const Gf2Matrix& a)
{
    InducedEndo e = induce(algebra, a);
    e.is_ring_hom = validate_ring_hom(algebra, e, 0, true).valid;
    e.validated = true;
    return e;
}

bool Table1Comparison::all_match() const
{
    for (bool m : match)
        if (!m)
            return false;
    return true;
}

LefschetzReport lefschetz(const GradedAlgebra& algebra, const InducedEndo& e)
{
    LefschetzReport r;
    for (const auto& m : e.per_degree) {
        r.traces.push_back(m.trace());
        r.lefschetz += r.traces.back();
    }
    r.is_ring_hom = e.is_ring_hom;
    const int top = algebra.top_degree();
    if (algebra.dim(top) == 1)
        r.top_class_representative = algebra.basis(top).front().to_string(algebra.generators());
    return r;
}

std::vector<Gf2> table1_traces(const GeneratorMatrix& a)
{
    const GradedAlgebra& alg = a.algebra();
    if (alg.family() != RingFamily::connected_sum || alg.name() != "rpsum:n=3,k=2")
        throw Error(ErrorKind::domain, "tabulated traces are only defined for rpsum:n=3,k=2, not " + alg.name());
    const Gf2Matrix& m = a.matrix();
    // Over GF(2) every a_ii^p equals a_ii.
    Gf2 diagonal_power_sum[4];
    for (unsigned p = 1; p <= 3; ++p)
        for (std::size_t i = 0; i < 3; ++i) {
            Gf2 term = kOne;
            for (unsigned q = 0; q < p; ++q)
                term *= m.at(i, i);
            diagonal_power_sum[p] += term;
        }
    const Gf2 a11 = m.at(0, 0);
    return {kOne, diagonal_power_sum[1], diagonal_power_sum[2], diagonal_power_sum[3], a11 * a11 * a11 * a11};
}

Table1Comparison compare_table1(const GeneratorMatrix& a, const std::vector<Gf2>& computed)
{
    Table1Comparison c;
    c.predicted = table1_traces(a);
    c.computed = computed;
    if (c.computed.size() != c.predicted.size())
        throw Error(ErrorKind::dimension, "computed trace vector has the wrong length");
    for (std::size_t d = 0; d < c.predicted.size(); ++d)
        c.match.push_back(c.predicted[d] == c.computed[d]);
    return c;
}

}  // namespace fpp
