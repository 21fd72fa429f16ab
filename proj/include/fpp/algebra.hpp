#pragma once

// Finite-dimensional graded-commutative algebras over GF(2), stored as a
// monomial basis per degree plus a complete multiplication table.

#include "fpp/gf2.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fpp {

struct Generator {
    std::string name;
    int degree = 0;
};

// Sparse exponent vector: (generator index, exponent) pairs sorted by
// generator, zero exponents never stored.
class Monomial {
public:
    Monomial() = default;  // the unit

    static Monomial power(std::size_t generator, unsigned exponent);

    unsigned exponent(std::size_t generator) const;
    const std::vector<std::pair<std::size_t, unsigned>>& terms() const { return terms_; }
    bool is_unit() const { return terms_.empty(); }

    int degree(const std::vector<Generator>& gens) const;

    // Generators with index in [first, first + count), reindexed from 0.
    Monomial restrict(std::size_t first, std::size_t count) const;
    Monomial shifted(std::size_t offset) const;

    std::string to_string(const std::vector<Generator>& gens) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<std::size_t, unsigned>> terms_;
};

// A homogeneous element: a GF(2) combination of the basis of one degree.
// Degrees outside [0, top] carry an empty coefficient vector.
struct Element {
    int degree = 0;
    BitVector coeffs;

    bool is_zero() const { return !coeffs.any(); }
    friend bool operator==(const Element&, const Element&) = default;
};

enum class RingFamily { connected_sum, truncated_poly, tensor };

class GradedAlgebra {
public:
    using NormalForm = std::function<Element(const Monomial&)>;

    struct BasisRef {
        int degree = 0;
        std::size_t index = 0;  // position within basis_by_degree[degree]
    };

    // The normal form must send every monomial to a combination of the given
    // basis; basis monomials must map to themselves.
    GradedAlgebra(std::string name, RingFamily family, std::vector<Generator> generators,
                  std::vector<std::vector<Monomial>> basis_by_degree, NormalForm normal_form,
                  std::vector<std::string> relations);

    const std::string& name() const { return name_; }
    RingFamily family() const { return family_; }
    const std::vector<Generator>& generators() const { return generators_; }
    std::size_t generator_count() const { return generators_.size(); }
    int top_degree() const { return static_cast<int>(basis_.size()) - 1; }
    const std::vector<std::vector<Monomial>>& basis_by_degree() const { return basis_; }
    const std::vector<Monomial>& basis(int degree) const;
    std::size_t dim(int degree) const;
    std::vector<std::size_t> graded_dimensions() const;
    std::size_t total_dim() const { return flat_.size(); }
    const std::vector<std::string>& relations() const { return relations_; }

    // Flat indexing over all basis monomials, degree-major.
    std::size_t flat_index(int degree, std::size_t index) const { return offsets_[static_cast<std::size_t>(degree)] + index; }
    const BasisRef& basis_ref(std::size_t flat) const { return flat_[flat]; }
    const Monomial& basis_monomial(std::size_t flat) const;
    std::optional<BasisRef> find_basis(const Monomial& m) const;

    Element normal_form(const Monomial& m) const { return normal_form_(m); }
    Element zero(int degree) const;
    Element basis_element(int degree, std::size_t index) const;
    Element unit() const { return basis_element(0, 0); }
    // Generator i as an element; throws Error(domain) if it is not a basis monomial.
    Element generator(std::size_t i) const;

    // Product of two basis elements (flat indices), read from the table.
    const Element& product(std::size_t flat_a, std::size_t flat_b) const
    {
        return table_[flat_a * flat_.size() + flat_b];
    }
    Element multiply(const Element& a, const Element& b) const;
    Element add(const Element& a, const Element& b) const;
    Element power(const Element& a, unsigned exponent) const;

    std::string format(const Element& e) const;

private:
    std::string name_;
    RingFamily family_;
    std::vector<Generator> generators_;
    std::vector<std::vector<Monomial>> basis_;
    NormalForm normal_form_;
    std::vector<std::string> relations_;

    std::vector<std::size_t> offsets_;
    std::vector<BasisRef> flat_;
    std::map<Monomial, BasisRef> lookup_;
    std::vector<Element> table_;
};

// H*(#^n RP^{2k}; Z2) = Z2[x1..xn] / (x1^{2k+1}, x_i^{2k} + x_j^{2k}, x_i x_j),
// all |x_i| = 1, top class represented by x1^{2k}. Requires n >= 1, k >= 2.
GradedAlgebra connected_sum_ring(std::size_t n, std::size_t k);

// Z2[x1..xn] / (x_i^truncation) with every generator in gen_degree (even, >= 2).
// (n, 2, 3) is H*((CP^2)^n; Z2).
GradedAlgebra truncated_poly_ring(std::size_t n_gens, int gen_degree, unsigned truncation);

// The algebra with only the unit in degree 0.
GradedAlgebra point_algebra();

// Kunneth product: basis is pairs of basis monomials, generators of b are
// appended after those of a.
GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b);

std::int64_t euler(const GradedAlgebra& a);

struct AxiomReport {
    std::size_t pairs_checked = 0;
    std::size_t triples_checked = 0;
    std::size_t commutativity_failures = 0;
    std::size_t associativity_failures = 0;
    std::size_t unit_failures = 0;
    std::size_t grading_failures = 0;
    std::size_t normal_form_failures = 0;

    bool ok() const
    {
        return commutativity_failures == 0 && associativity_failures == 0 && unit_failures == 0
            && grading_failures == 0 && normal_form_failures == 0;
    }
};

// Exhaustive check of unit, commutativity and associativity over the basis,
// plus idempotence of the normal form on every pairwise product.
AxiomReport check_ring_axioms(const GradedAlgebra& a);

// Matrix of the pairing H^m x H^{top-m} -> H^top, or nullopt when the top
// degree is not one-dimensional.
std::optional<Gf2Matrix> poincare_pairing_matrix(const GradedAlgebra& a, int m);
bool poincare_pairing_nondegenerate(const GradedAlgebra& a, int m);

// Ring specifiers: "rpsum:n=<n>,k=<k>" and "cp2pow:n=<n>".
struct RingSpec {
    enum class Kind { rpsum, cp2pow } kind = Kind::rpsum;
    std::size_t n = 1;
    std::size_t k = 2;

    static RingSpec parse(std::string_view text);
    std::string to_string() const;
    GradedAlgebra build() const;
    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

}  // namespace fpp
