#include "fpp/algebra.hpp"

#include "fpp/error.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace fpp {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::power(std::size_t generator, unsigned exponent)
{
    Monomial m;
    if (exponent > 0)
        m.terms_.emplace_back(generator, exponent);
    return m;
}

unsigned Monomial::exponent(std::size_t generator) const
{
    for (const auto& [g, e] : terms_)
        if (g == generator)
            return e;
    return 0;
}

int Monomial::degree(const std::vector<Generator>& gens) const
{
    int d = 0;
    for (const auto& [g, e] : terms_)
        d += gens.at(g).degree * static_cast<int>(e);
    return d;
}

Monomial Monomial::restrict(std::size_t first, std::size_t count) const
{
    Monomial out;
    for (const auto& [g, e] : terms_)
        if (g >= first && g < first + count)
            out.terms_.emplace_back(g - first, e);
    return out;
}

Monomial Monomial::shifted(std::size_t offset) const
{
    Monomial out = *this;
    for (auto& term : out.terms_)
        term.first += offset;
    return out;
}

std::string Monomial::to_string(const std::vector<Generator>& gens) const
{
    if (terms_.empty())
        return "1";
    std::string s;
    for (const auto& [g, e] : terms_) {
        if (!s.empty())
            s += '*';
        s += gens.at(g).name;
        if (e > 1)
            s += '^' + std::to_string(e);
    }
    return s;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial out;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
            out.terms_.push_back(*ia++);
        } else if (ia == a.terms_.end() || ib->first < ia->first) {
            out.terms_.push_back(*ib++);
        } else {
            out.terms_.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

// ----------------------------------------------------------- GradedAlgebra

GradedAlgebra::GradedAlgebra(std::string name, RingFamily family, std::vector<Generator> generators,
                             std::vector<std::vector<Monomial>> basis_by_degree, NormalForm normal_form,
                             std::vector<std::string> relations)
    : name_(std::move(name)),
      family_(family),
      generators_(std::move(generators)),
      basis_(std::move(basis_by_degree)),
      normal_form_(std::move(normal_form)),
      relations_(std::move(relations))
{
    if (basis_.empty() || basis_[0].size() != 1 || !basis_[0][0].is_unit())
        throw Error(ErrorKind::validation, name_ + ": degree 0 basis must be exactly {1}");

    for (int d = 0; d <= top_degree(); ++d) {
        offsets_.push_back(flat_.size());
        for (std::size_t i = 0; i < basis_[static_cast<std::size_t>(d)].size(); ++i) {
            const Monomial& m = basis_[static_cast<std::size_t>(d)][i];
            if (m.degree(generators_) != d)
                throw Error(ErrorKind::validation, name_ + ": basis monomial " + m.to_string(generators_)
                                                       + " listed in the wrong degree");
            if (!lookup_.emplace(m, BasisRef{d, i}).second)
                throw Error(ErrorKind::validation, name_ + ": duplicate basis monomial "
                                                       + m.to_string(generators_));
            flat_.push_back(BasisRef{d, i});
        }
    }

    const std::size_t n = flat_.size();
    table_.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const Monomial m = basis_monomial(a) * basis_monomial(b);
            Element e = normal_form_(m);
            const int expected = flat_[a].degree + flat_[b].degree;
            if (e.degree != expected || e.coeffs.size() != dim(expected))
                throw Error(ErrorKind::validation, name_ + ": normal form of " + m.to_string(generators_)
                                                       + " has the wrong degree");
            table_.push_back(std::move(e));
        }
    }
}

const std::vector<Monomial>& GradedAlgebra::basis(int degree) const
{
    static const std::vector<Monomial> empty;
    if (degree < 0 || degree > top_degree())
        return empty;
    return basis_[static_cast<std::size_t>(degree)];
}

std::size_t GradedAlgebra::dim(int degree) const { return basis(degree).size(); }

std::vector<std::size_t> GradedAlgebra::graded_dimensions() const
{
    std::vector<std::size_t> dims;
    for (const auto& b : basis_)
        dims.push_back(b.size());
    return dims;
}

const Monomial& GradedAlgebra::basis_monomial(std::size_t flat) const
{
    const auto& ref = flat_.at(flat);
    return basis_[static_cast<std::size_t>(ref.degree)][ref.index];
}

std::optional<GradedAlgebra::BasisRef> GradedAlgebra::find_basis(const Monomial& m) const
{
    auto it = lookup_.find(m);
    if (it == lookup_.end())
        return std::nullopt;
    return it->second;
}

Element GradedAlgebra::zero(int degree) const { return Element{degree, BitVector(dim(degree))}; }

Element GradedAlgebra::basis_element(int degree, std::size_t index) const
{
    Element e = zero(degree);
    if (index >= e.coeffs.size())
        throw Error(ErrorKind::bounds, name_ + ": basis index out of range in degree " + std::to_string(degree));
    e.coeffs.set(index, true);
    return e;
}

Element GradedAlgebra::generator(std::size_t i) const
{
    if (i >= generators_.size())
        throw Error(ErrorKind::bounds, name_ + ": generator index out of range");
    const auto ref = find_basis(Monomial::power(i, 1));
    if (!ref)
        throw Error(ErrorKind::domain, name_ + ": generator " + generators_[i].name + " is not a basis element");
    return basis_element(ref->degree, ref->index);
}

Element GradedAlgebra::multiply(const Element& a, const Element& b) const
{
    Element out = zero(a.degree + b.degree);
    if (out.coeffs.size() == 0)
        return out;
    const auto ia = a.coeffs.ones();
    const auto ib = b.coeffs.ones();
    for (auto i : ia)
        for (auto j : ib)
            out.coeffs ^= product(flat_index(a.degree, i), flat_index(b.degree, j)).coeffs;
    return out;
}

Element GradedAlgebra::add(const Element& a, const Element& b) const
{
    if (a.degree != b.degree) {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        throw Error(ErrorKind::dimension, name_ + ": adding elements of different degrees");
    }
    return Element{a.degree, a.coeffs ^ b.coeffs};
}

Element GradedAlgebra::power(const Element& a, unsigned exponent) const
{
    Element out = unit();
    for (unsigned i = 0; i < exponent; ++i)
        out = multiply(out, a);
    return out;
}

std::string GradedAlgebra::format(const Element& e) const
{
    if (e.is_zero())
        return "0";
    std::string s;
    for (auto i : e.coeffs.ones()) {
        if (!s.empty())
            s += " + ";
        s += basis(e.degree)[i].to_string(generators_);
    }
    return s;
}

// ------------------------------------------------------------ constructors

namespace {

std::string gen_name(std::size_t i) { return "x" + std::to_string(i + 1); }

std::vector<Generator> make_generators(std::size_t n, int degree)
{
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back({gen_name(i), degree});
    return gens;
}

std::vector<std::size_t> basis_sizes(const std::vector<std::vector<Monomial>>& basis)
{
    std::vector<std::size_t> out;
    for (const auto& b : basis)
        out.push_back(b.size());
    return out;
}

Element make_element(const std::vector<std::size_t>& dims, int degree)
{
    const std::size_t size = degree >= 0 && static_cast<std::size_t>(degree) < dims.size()
        ? dims[static_cast<std::size_t>(degree)]
        : 0;
    return Element{degree, BitVector(size)};
}

}  // namespace

GradedAlgebra connected_sum_ring(std::size_t n, std::size_t k)
{
    if (n < 1)
        throw Error(ErrorKind::domain, "connected sum needs at least one summand");
    if (k < 2)
        throw Error(ErrorKind::unsupported, "connected sum presentation requires k >= 2 (RP^4 or higher)");

    const unsigned top = static_cast<unsigned>(2 * k);
    auto gens = make_generators(n, 1);

    std::vector<std::vector<Monomial>> basis(top + 1);
    basis[0].push_back(Monomial{});
    for (unsigned m = 1; m < top; ++m)
        for (std::size_t i = 0; i < n; ++i)
            basis[m].push_back(Monomial::power(i, m));
    basis[top].push_back(Monomial::power(0, top));

    const auto dims = basis_sizes(basis);
    auto normal_form = [dims, top, gens](const Monomial& m) {
        const int degree = m.degree(gens);
        Element e = make_element(dims, degree);
        if (m.is_unit()) {
            e.coeffs.set(0, true);
            return e;
        }
        if (m.terms().size() > 1)  // x_i x_j = 0
            return e;
        const auto [g, exp] = m.terms().front();
        if (exp < top)
            e.coeffs.set(g, true);
        else if (exp == top)  // x_i^{2k} = x_1^{2k}
            e.coeffs.set(0, true);
        return e;
    };

    std::vector<std::string> relations;
    relations.push_back(gen_name(0) + "^" + std::to_string(top + 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            relations.push_back(gen_name(i) + "^" + std::to_string(top) + " + " + gen_name(j) + "^"
                                + std::to_string(top));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            relations.push_back(gen_name(i) + "*" + gen_name(j));

    const RingSpec spec{RingSpec::Kind::rpsum, n, k};
    return GradedAlgebra(spec.to_string(), RingFamily::connected_sum, std::move(gens), std::move(basis),
                         std::move(normal_form), std::move(relations));
}

GradedAlgebra truncated_poly_ring(std::size_t n_gens, int gen_degree, unsigned truncation)
{
    if (n_gens < 1)
        throw Error(ErrorKind::domain, "truncated polynomial ring needs at least one generator");
    if (gen_degree < 2 || gen_degree % 2 != 0)
        throw Error(ErrorKind::domain, "generator degree must be even and at least 2");
    if (truncation < 2)
        throw Error(ErrorKind::domain, "truncation must be at least 2");

    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n_gens; ++i) {
        count *= truncation;
        if (count > 100000)
            throw Error(ErrorKind::capacity, "truncated polynomial ring basis exceeds 100000 monomials");
    }

    auto gens = make_generators(n_gens, gen_degree);
    const unsigned max_weight = static_cast<unsigned>(n_gens) * (truncation - 1);
    std::vector<std::vector<Monomial>> basis(static_cast<std::size_t>(gen_degree) * max_weight + 1);

    std::vector<unsigned> exps(n_gens, 0);
    for (std::uint64_t c = 0; c < count; ++c) {
        std::uint64_t rest = c;
        Monomial m;
        unsigned weight = 0;
        for (std::size_t i = 0; i < n_gens; ++i) {
            exps[i] = static_cast<unsigned>(rest % truncation);
            rest /= truncation;
            m = m * Monomial::power(i, exps[i]);
            weight += exps[i];
        }
        basis[static_cast<std::size_t>(gen_degree) * weight].push_back(std::move(m));
    }
    for (auto& b : basis)
        std::sort(b.begin(), b.end());

    std::map<Monomial, std::size_t> index;
    for (const auto& b : basis)
        for (std::size_t i = 0; i < b.size(); ++i)
            index.emplace(b[i], i);

    const auto dims = basis_sizes(basis);
    auto normal_form = [dims, gens, truncation, index = std::move(index)](const Monomial& m) {
        Element e = make_element(dims, m.degree(gens));
        for (const auto& [g, exp] : m.terms())
            if (exp >= truncation)
                return e;
        e.coeffs.set(index.at(m), true);
        return e;
    };

    std::vector<std::string> relations;
    for (std::size_t i = 0; i < n_gens; ++i)
        relations.push_back(gen_name(i) + "^" + std::to_string(truncation));

    std::string name = "Z2[x1..x" + std::to_string(n_gens) + "]/(x_i^" + std::to_string(truncation)
        + "), |x_i|=" + std::to_string(gen_degree);
    if (gen_degree == 2 && truncation == 3)
        name = RingSpec{RingSpec::Kind::cp2pow, n_gens, 2}.to_string();
    return GradedAlgebra(std::move(name), RingFamily::truncated_poly, std::move(gens), std::move(basis),
                         std::move(normal_form), std::move(relations));
}

GradedAlgebra point_algebra()
{
    std::vector<std::vector<Monomial>> basis{{Monomial{}}};
    auto normal_form = [](const Monomial& m) {
        if (!m.is_unit())
            throw Error(ErrorKind::domain, "point algebra has no generators");
        Element e{0, BitVector(1)};
        e.coeffs.set(0, true);
        return e;
    };
    return GradedAlgebra("point", RingFamily::truncated_poly, {}, std::move(basis), std::move(normal_form), {});
}

GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b)
{
    const std::size_t na = a.generator_count();
    const std::size_t nb = b.generator_count();
    const int top = a.top_degree() + b.top_degree();

    std::vector<Generator> gens = a.generators();
    for (const auto& g : b.generators())
        gens.push_back(g);
    std::set<std::string> names;
    for (const auto& g : gens)
        names.insert(g.name);
    if (names.size() != gens.size())
        for (std::size_t i = 0; i < gens.size(); ++i)
            gens[i].name = gen_name(i);

    // block_offset[d][p]: position of the first pair with the a-factor in degree p.
    std::vector<std::vector<std::size_t>> block_offset(static_cast<std::size_t>(top) + 1);
    std::vector<std::vector<Monomial>> basis(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        auto& offsets = block_offset[static_cast<std::size_t>(d)];
        for (int p = 0; p <= d; ++p) {
            offsets.push_back(basis[static_cast<std::size_t>(d)].size());
            for (const auto& ma : a.basis(p))
                for (const auto& mb : b.basis(d - p))
                    basis[static_cast<std::size_t>(d)].push_back(ma * mb.shifted(na));
        }
    }

    const auto dims = basis_sizes(basis);
    auto pa = std::make_shared<const GradedAlgebra>(a);
    auto pb = std::make_shared<const GradedAlgebra>(b);
    auto normal_form = [dims, block_offset, pa, pb, na, nb](const Monomial& m) {
        const Element ea = pa->normal_form(m.restrict(0, na));
        const Element eb = pb->normal_form(m.restrict(na, nb));
        Element e = make_element(dims, ea.degree + eb.degree);
        if (e.coeffs.size() == 0)
            return e;
        const std::size_t block = block_offset[static_cast<std::size_t>(e.degree)][static_cast<std::size_t>(ea.degree)];
        const std::size_t width = pb->dim(eb.degree);
        for (auto i : ea.coeffs.ones())
            for (auto j : eb.coeffs.ones())
                e.coeffs.flip(block + i * width + j);
        return e;
    };

    std::vector<std::string> relations{"graded tensor product of " + a.name() + " and " + b.name()};
    return GradedAlgebra("(" + a.name() + ") (x) (" + b.name() + ")", RingFamily::tensor, std::move(gens),
                         std::move(basis), std::move(normal_form), std::move(relations));
}

std::int64_t euler(const GradedAlgebra& a)
{
    std::int64_t chi = 0;
    for (int d = 0; d <= a.top_degree(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(a.dim(d));
    return chi;
}

// ------------------------------------------------------------------ checks

AxiomReport check_ring_axioms(const GradedAlgebra& a)
{
    AxiomReport r;
    const std::size_t n = a.total_dim();

    for (std::size_t u = 0; u < n; ++u) {
        const auto ref = a.basis_ref(u);
        const Element eu = a.basis_element(ref.degree, ref.index);
        if (a.normal_form(a.basis_monomial(u)) != eu)
            ++r.normal_form_failures;
        if (a.product(0, u) != eu || a.product(u, 0) != eu)
            ++r.unit_failures;
    }

    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            ++r.pairs_checked;
            const Element& uv = a.product(u, v);
            if (uv != a.product(v, u))
                ++r.commutativity_failures;
            const int expected = a.basis_ref(u).degree + a.basis_ref(v).degree;
            if (uv.degree != expected || uv.coeffs.size() != a.dim(expected))
                ++r.grading_failures;
            // Re-normalizing a product written in basis monomials changes nothing.
            for (auto i : uv.coeffs.ones())
                if (a.normal_form(a.basis(uv.degree)[i]) != a.basis_element(uv.degree, i))
                    ++r.normal_form_failures;
        }
    }

    for (std::size_t u = 0; u < n; ++u) {
        const auto ru = a.basis_ref(u);
        const Element eu = a.basis_element(ru.degree, ru.index);
        for (std::size_t v = 0; v < n; ++v) {
            const Element& uv = a.product(u, v);
            for (std::size_t w = 0; w < n; ++w) {
                ++r.triples_checked;
                const auto rw = a.basis_ref(w);
                const Element lhs = a.multiply(uv, a.basis_element(rw.degree, rw.index));
                const Element rhs = a.multiply(eu, a.product(v, w));
                if (lhs != rhs)
                    ++r.associativity_failures;
            }
        }
    }
    return r;
}

std::optional<Gf2Matrix> poincare_pairing_matrix(const GradedAlgebra& a, int m)
{
    const int top = a.top_degree();
    if (a.dim(top) != 1 || m < 0 || m > top)
        return std::nullopt;
    const auto& left = a.basis(m);
    const auto& right = a.basis(top - m);
    Gf2Matrix p(left.size(), right.size());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            if (a.product(a.flat_index(m, i), a.flat_index(top - m, j)).coeffs.get(0))
                p.set(i, j, kOne);
    return p;
}

bool poincare_pairing_nondegenerate(const GradedAlgebra& a, int m)
{
    const auto p = poincare_pairing_matrix(a, m);
    return p && p->square() && det(*p).bit();
}

// --------------------------------------------------------------- RingSpec

namespace {

std::size_t parse_count(std::string_view text, std::string_view key, std::string_view whole)
{
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw Error(ErrorKind::parse, "ring spec '" + std::string(whole) + "': bad value for " + std::string(key));
    return value;
}

}  // namespace

RingSpec RingSpec::parse(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw Error(ErrorKind::parse, "ring spec '" + std::string(text)
                                          + "': expected rpsum:n=<n>,k=<k> or cp2pow:n=<n>");
    const std::string_view family = text.substr(0, colon);
    RingSpec spec;
    if (family == "rpsum")
        spec.kind = Kind::rpsum;
    else if (family == "cp2pow")
        spec.kind = Kind::cp2pow;
    else
        throw Error(ErrorKind::parse, "ring spec '" + std::string(text) + "': unknown family '"
                                          + std::string(family) + "'");

    bool have_n = false;
    bool have_k = false;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorKind::parse, "ring spec '" + std::string(text) + "': expected key=value, got '"
                                              + std::string(item) + "'");
        const std::string_view key = item.substr(0, eq);
        const std::string_view value = item.substr(eq + 1);
        if (key == "n" && !have_n) {
            spec.n = parse_count(value, key, text);
            have_n = true;
        } else if (key == "k" && !have_k && spec.kind == Kind::rpsum) {
            spec.k = parse_count(value, key, text);
            have_k = true;
        } else {
            throw Error(ErrorKind::parse, "ring spec '" + std::string(text) + "': unexpected key '"
                                              + std::string(key) + "'");
        }
    }
    if (!have_n || (spec.kind == Kind::rpsum && !have_k))
        throw Error(ErrorKind::parse, "ring spec '" + std::string(text) + "': missing parameter");
    return spec;
}

std::string RingSpec::to_string() const
{
    if (kind == Kind::rpsum)
        return "rpsum:n=" + std::to_string(n) + ",k=" + std::to_string(k);
    return "cp2pow:n=" + std::to_string(n);
}

GradedAlgebra RingSpec::build() const
{
    if (kind == Kind::rpsum)
        return connected_sum_ring(n, k);
    return truncated_poly_ring(n, 2, 3);
}

}  // namespace fpp
