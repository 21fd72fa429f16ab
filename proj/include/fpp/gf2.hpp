#pragma once

// Exact arithmetic over the two-element field: scalars, packed bit vectors,
// dense matrices, determinants and exhaustive enumeration of matrix spaces.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

namespace fpp {

class Gf2 {
public:
    constexpr Gf2() = default;
    constexpr explicit Gf2(bool bit) : bit_(bit) {}

    constexpr bool bit() const { return bit_; }
    constexpr int value() const { return bit_ ? 1 : 0; }
    constexpr explicit operator bool() const { return bit_; }

    friend constexpr Gf2 operator+(Gf2 a, Gf2 b) { return Gf2(a.bit_ != b.bit_); }
    friend constexpr Gf2 operator*(Gf2 a, Gf2 b) { return Gf2(a.bit_ && b.bit_); }
    constexpr Gf2& operator+=(Gf2 o) { return *this = *this + o; }
    constexpr Gf2& operator*=(Gf2 o) { return *this = *this * o; }
    friend constexpr bool operator==(Gf2, Gf2) = default;

private:
    bool bit_ = false;
};

inline constexpr Gf2 kZero{false};
inline constexpr Gf2 kOne{true};

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool v);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool any() const;
    std::size_t popcount() const;

    // Requires equal sizes.
    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    // Indices of set bits, ascending.
    std::vector<std::size_t> ones() const;
    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense row-major matrix over GF(2); each row is packed into 64-bit words.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    static Gf2Matrix identity(std::size_t n);
    static Gf2Matrix zero(std::size_t n) { return Gf2Matrix(n, n); }
    // Rows given as strings over {0,1}. Throws Error(parse) on bad characters
    // or ragged rows.
    static Gf2Matrix from_rows(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Gf2 at(std::size_t r, std::size_t c) const { return Gf2(row_word(r, c >> 6) >> (c & 63) & 1U); }
    void set(std::size_t r, std::size_t c, Gf2 v);

    // Row as a bit vector of length cols().
    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& bits);

    Gf2 trace() const;
    Gf2Matrix transpose() const;

    std::vector<std::string> to_rows() const;
    std::string to_text() const;

    friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
    friend Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b);
    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    std::uint64_t row_word(std::size_t r, std::size_t w) const { return data_[r * words_per_row_ + w]; }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
};

// Determinant over GF(2); the 0x0 matrix has determinant 1.
Gf2 det(const Gf2Matrix& m);

// Rows and columns restricted to `indices` (zero-based, taken in increasing
// order; duplicates are collapsed).
Gf2Matrix principal_submatrix(const Gf2Matrix& m, const std::vector<std::size_t>& indices);

// Same, with the index set given as a bitmask over the first 64 indices.
Gf2Matrix principal_submatrix(const Gf2Matrix& m, std::uint64_t mask);

inline constexpr unsigned kDefaultEnumerationCapBits = 25;

// All n x n matrices over GF(2), indexed so that index order is lexicographic
// order of the row-major bit string (entry (0,0) is the most significant bit).
class MatrixSpace {
public:
    // Throws Error(domain) for n == 0 and Error(capacity) when n*n > cap_bits.
    explicit MatrixSpace(std::size_t n, unsigned cap_bits = kDefaultEnumerationCapBits);

    std::size_t n() const { return n_; }
    std::uint64_t size() const { return std::uint64_t{1} << (n_ * n_); }
    Gf2Matrix at(std::uint64_t index) const;
    std::uint64_t index_of(const Gf2Matrix& m) const;

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Gf2Matrix;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const MatrixSpace* space, std::uint64_t index) : space_(space), index_(index) {}

        Gf2Matrix operator*() const { return space_->at(index_); }
        iterator& operator++() { ++index_; return *this; }
        iterator operator++(int) { auto t = *this; ++index_; return t; }
        bool operator==(const iterator& o) const { return index_ == o.index_; }

    private:
        const MatrixSpace* space_ = nullptr;
        std::uint64_t index_ = 0;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size()}; }

private:
    std::size_t n_;
};

inline MatrixSpace enumerate_matrices(std::size_t n, unsigned cap_bits = kDefaultEnumerationCapBits)
{
    return MatrixSpace(n, cap_bits);
}

// Matrix text format: n lines of n characters from {0,1}, newline-terminated.
// Parse errors carry "<source>:<line>:<column>: message".
Gf2Matrix parse_matrix(std::string_view text, std::string_view source = "<input>");
Gf2Matrix read_matrix_file(const std::string& path);

}  // namespace fpp
