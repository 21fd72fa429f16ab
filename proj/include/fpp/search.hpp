#pragma once

// Exhaustive sweeps over generator matrices: Lefschetz certificates for a
// ring, the principal-minor trace identities for (CP^2)^n, and the cross-check
// of those identities against the multiplicative engine.

#include "fpp/algebra.hpp"
#include "fpp/endo.hpp"
#include "fpp/gf2.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fpp {

inline constexpr const char* kEnumerationOrder = "lexicographic-row-major";
inline constexpr std::size_t kDefaultExceptionalCap = 64;

enum class SweepMode { valid_only, all };

std::string_view to_string(SweepMode mode);
SweepMode parse_sweep_mode(std::string_view text);
// all-matrices for cp2pow, valid-only for rpsum.
SweepMode default_mode(const RingSpec& spec);

struct SweepOptions {
    std::optional<SweepMode> mode;  // default_mode(spec) when unset
    unsigned jobs = 1;
    unsigned cap_bits = kDefaultEnumerationCapBits;
    std::size_t max_exceptional = kDefaultExceptionalCap;
};

struct ExceptionalMatrix {
    std::uint64_t index = 0;
    Gf2Matrix matrix;
    bool is_ring_hom = false;
    std::vector<Gf2> traces;
    Gf2 lefschetz;
    bool lefschetz_zero = false;
    bool table1_mismatch = false;
    std::optional<Table1Comparison> table1;
};

struct FppCertificate {
    std::string ring;
    SweepMode mode = SweepMode::valid_only;
    std::string order = kEnumerationOrder;
    std::uint64_t total = 0;
    std::uint64_t valid = 0;
    std::uint64_t invalid = 0;
    std::uint64_t covered = 0;          // matrices the histogram counts
    std::uint64_t lefschetz_zero = 0;   // histogram over covered matrices
    std::uint64_t lefschetz_one = 0;
    std::uint64_t table1_mismatches = 0;
    bool table1_applicable = false;
    std::string top_class_representative;
    std::uint64_t exceptional_total = 0;
    std::uint64_t exceptional_overflow = 0;
    std::vector<ExceptionalMatrix> exceptional;  // enumeration order, capped

    bool clean() const { return exceptional_total == 0; }
};

FppCertificate sweep_fpp(const RingSpec& spec, const SweepOptions& options = {});

// Lexicographic order of the sorted index lists: {}, {1}, {1,2}, {1,2,3}, {1,3}, {2}, ...
std::vector<std::uint64_t> subsets_lex(std::size_t n);

struct MinorTerm {
    std::uint64_t squared = 0;  // I, as a bitmask
    std::uint64_t linear = 0;   // J, disjoint from I
    Gf2 value;
};

struct MinorTraceTable {
    std::size_t n = 0;
    std::vector<Gf2> principal_minors;  // det A[S,S] for every subset mask S
    std::vector<MinorTerm> terms;       // I lexicographic, then J lexicographic
    std::vector<std::vector<Gf2>> T;    // T[k][l], k + l <= n
    Gf2 total;

    Gf2 t(std::uint64_t squared, std::uint64_t linear) const
    {
        return principal_minors[squared] * principal_minors[linear];
    }
};

// t_{I,J} = det A[I,I] * det A[J,J] over all ordered disjoint pairs, with the
// aggregates T[|I|][|J|] and their grand total.
MinorTraceTable minor_traces(const Gf2Matrix& a);

struct Counterexample {
    std::uint64_t index = 0;
    std::vector<std::string> matrix;
    std::string claim;
};

struct Theorem3Report {
    std::size_t n = 0;
    std::uint64_t matrices = 0;
    std::uint64_t passed = 0;
    // Failures of: T[0][0] = 1; t_{I,J} = t_{J,I}; T[k][k] = 0 for k >= 1; sum T = 1.
    std::array<std::uint64_t, 4> failures{};
    std::optional<Counterexample> first_counterexample;

    bool pass() const { return passed == matrices; }
};

Theorem3Report verify_theorem3_claims(std::size_t n, unsigned jobs = 1,
                                      unsigned cap_bits = kDefaultEnumerationCapBits);

inline constexpr std::size_t kCrosscheckMaxN = 3;

struct CrosscheckMismatch {
    std::uint64_t index = 0;
    std::vector<std::string> matrix;
    std::string monomial;
    Gf2 engine;
    Gf2 minor;
};

struct CrosscheckReport {
    std::size_t n = 0;
    std::uint64_t matrices = 0;
    std::uint64_t coefficients_compared = 0;
    std::uint64_t coefficient_mismatches = 0;
    std::uint64_t degree_trace_mismatches = 0;
    std::uint64_t lefschetz_one = 0;
    std::optional<CrosscheckMismatch> first_mismatch;

    bool pass() const
    {
        return coefficient_mismatches == 0 && degree_trace_mismatches == 0 && lefschetz_one == matrices;
    }
};

// For every A, compares the engine's diagonal coefficient on each basis
// monomial x_I^2 x_J of (CP^2)^n with t_{I,J}, and the degree-2m trace with
// sum_{2k+l=m} T[k][l]. n <= 3.
CrosscheckReport crosscheck_minors_vs_engine(std::size_t n, unsigned jobs = 1);

}  // namespace fpp
