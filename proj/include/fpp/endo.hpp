#pragma once

// Endomorphisms of graded algebras induced by a matrix of generator images,
// their multiplicativity check, per-degree traces and Lefschetz numbers.

#include "fpp/algebra.hpp"
#include "fpp/gf2.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fpp {

// Row i lists the image of generator i: f*(x_i) = sum_j a_ij x_j.
class GeneratorMatrix {
public:
    // Throws Error(dimension) if the matrix is not n x n for the algebra's n
    // generators and Error(domain) if the generators do not share one degree.
    GeneratorMatrix(const GradedAlgebra& algebra, Gf2Matrix matrix);

    const GradedAlgebra& algebra() const { return *algebra_; }
    const Gf2Matrix& matrix() const { return matrix_; }
    int generator_degree() const { return generator_degree_; }

private:
    const GradedAlgebra* algebra_;
    Gf2Matrix matrix_;
    int generator_degree_ = 0;
};

struct InducedEndo {
    // per_degree[d] is square of size dim(d); row i is the image of basis
    // monomial i of degree d (row-vector convention).
    std::vector<Gf2Matrix> per_degree;
    bool is_ring_hom = false;
    bool validated = false;
};

// Formal multiplicative extension: every basis monomial goes to the product
// of its generator images, reduced to normal form. Defined for every matrix;
// validity is recorded by validate_ring_hom.
InducedEndo induce(const GeneratorMatrix& a);
InducedEndo induce(const GradedAlgebra& algebra, const Gf2Matrix& a);

// Image of an arbitrary element under the linear map given by the endo.
Element apply(const InducedEndo& e, const Element& x);

struct HomViolation {
    std::size_t left = 0;   // flat basis indices
    std::size_t right = 0;
    Element product_of_images;  // f(u) * f(v)
    Element image_of_product;   // f(u * v)
};

struct HomValidation {
    bool valid = true;
    std::size_t violation_count = 0;
    std::vector<HomViolation> violations;  // first max_listed, in (left, right) order
};

// Checks f(u) f(v) = f(uv) over every ordered pair of basis monomials.
// With stop_at_first, returns as soon as one violation is seen.
HomValidation validate_ring_hom(const GradedAlgebra& algebra, const InducedEndo& e,
                                std::size_t max_listed = 16, bool stop_at_first = false);

// Convenience: induce, then validate and store the flag in the result.
InducedEndo induce_validated(const GradedAlgebra& algebra, const Gf2Matrix& a);

struct Table1Comparison {
    std::vector<Gf2> predicted;
    std::vector<Gf2> computed;
    std::vector<bool> match;

    bool all_match() const;
};

struct LefschetzReport {
    static constexpr const char* coefficient_field = "GF(2)";
    std::vector<Gf2> traces;  // indexed by degree 0..top
    Gf2 lefschetz;
    bool is_ring_hom = false;
    std::string top_class_representative;
    std::optional<Table1Comparison> table1;
};

LefschetzReport lefschetz(const GradedAlgebra& algebra, const InducedEndo& e);

// Tabulated trace per degree for rpsum:n=3,k=2:
// (1, a11+a22+a33, a11^2+a22^2+a33^2, a11^3+a22^3+a33^3, a11^4), in GF(2).
// Throws Error(domain) for any other algebra.
std::vector<Gf2> table1_traces(const GeneratorMatrix& a);
Table1Comparison compare_table1(const GeneratorMatrix& a, const std::vector<Gf2>& computed);

}  // namespace fpp
