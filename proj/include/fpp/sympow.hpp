#pragma once

// Euler characteristic of the symmetric square X(2) = (X x X)/Z2, in closed
// form and by counting swap-orbits of simplices in the order complex of the
// product face poset.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fpp {

using Face = std::vector<int>;  // sorted vertex labels, nonempty

class SimplicialComplex {
public:
    // Closes the facets under nonempty subsets. Throws Error(validation) on an
    // empty facet, a repeated vertex or an empty complex, Error(capacity) when
    // a facet has more than max_facet_size vertices.
    static SimplicialComplex from_facets(std::vector<Face> facets, std::size_t max_facet_size = 16);
    // Takes the face list as given; throws Error(validation) unless it is
    // closed under nonempty subsets.
    static SimplicialComplex from_faces(std::vector<Face> faces);

    const std::vector<int>& vertices() const { return vertices_; }
    // Maximal faces, sorted.
    const std::vector<Face>& facets() const { return facets_; }
    // All faces, ordered by dimension then lexicographically.
    const std::vector<Face>& faces() const { return faces_; }
    int dimension() const;
    std::vector<std::uint64_t> f_vector() const;
    std::int64_t euler() const;

private:
    explicit SimplicialComplex(std::vector<Face> faces);

    std::vector<int> vertices_;
    std::vector<Face> facets_;
    std::vector<Face> faces_;
};

// One facet per line as whitespace-separated integers; '#' lines and blank
// lines are skipped. Errors carry "<source>:<line>:<column>: message".
SimplicialComplex parse_complex(std::string_view text, std::string_view source = "<input>");
SimplicialComplex read_complex_file(const std::string& path);

// Standard test complexes.
SimplicialComplex boundary_of_simplex(int dim);  // the sphere S^{dim-1}
SimplicialComplex rp2_six_vertex();

struct SurfaceCheck {
    bool pure_2d = false;
    bool edges_in_two_triangles = false;
    bool links_are_circles = false;
    bool connected = false;
    std::int64_t euler = 0;

    bool closed_surface() const { return pure_2d && edges_in_two_triangles && links_are_circles && connected; }
};

SurfaceCheck check_closed_surface(const SimplicialComplex& k);

inline constexpr std::size_t kDefaultPosetCap = 5000;

// Finite poset with elements listed in a linear extension (every element
// comes after everything below it).
class Poset {
public:
    std::size_t size() const { return below_.size(); }
    // Strictly smaller elements.
    const std::vector<std::uint32_t>& below(std::size_t e) const { return below_[e]; }
    int rank(std::size_t e) const { return rank_[e]; }

    static Poset from_relations(std::vector<int> rank, std::vector<std::vector<std::uint32_t>> below);

private:
    std::vector<int> rank_;
    std::vector<std::vector<std::uint32_t>> below_;
};

// Faces ordered by inclusion, in the order of k.faces().
Poset face_poset(const SimplicialComplex& k);

// Componentwise order on P x Q; element (p, q) has index p * |Q| + q.
// Throws Error(capacity) when |P| * |Q| exceeds cap.
Poset product_poset(const Poset& p, const Poset& q, std::size_t cap = kDefaultPosetCap);

// counts[d] = number of chains with d + 1 elements, i.e. d-simplices of the
// order complex. Throws Error(capacity) when the poset exceeds cap or a
// count overflows 64 bits.
std::vector<std::uint64_t> order_complex_chain_counts(const Poset& p, std::size_t cap = kDefaultPosetCap);

// Same, restricted to chains whose elements all satisfy keep[e].
std::vector<std::uint64_t> order_complex_chain_counts(const Poset& p, const std::vector<bool>& keep,
                                                      std::size_t cap = kDefaultPosetCap);

// Closed form of 2 chi(X(2)) = chi(X) + chi(X)^2.
std::int64_t euler_sym_square(std::int64_t chi);

struct ChainCounts {
    std::uint64_t total = 0;  // d-simplices of the order complex of X x X
    std::uint64_t fixed = 0;  // those fixed by the swap (lying over the diagonal)
    std::uint64_t orbit = 0;  // fixed + (total - fixed) / 2
};

struct SymSquareReport {
    std::int64_t chi_X = 0;
    std::int64_t chi_XxX = 0;
    std::int64_t chi_diagonal = 0;
    std::vector<ChainCounts> per_dimension;
    std::int64_t chi_quotient = 0;
    std::int64_t formula = 0;      // euler_sym_square(chi_X)
    bool free_part_even = false;   // total - fixed even in every dimension
    bool identity_holds = false;   // 2 chi_quotient == chi_X + chi_X^2
    bool formula_agrees = false;   // chi_quotient == formula

    bool pass() const { return free_part_even && identity_holds && formula_agrees; }
};

SymSquareReport sym_square_oracle(const SimplicialComplex& k, std::size_t cap = kDefaultPosetCap);

}  // namespace fpp
