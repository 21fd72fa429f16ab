#include "fpp/gf2.hpp"

#include "fpp/error.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

namespace fpp {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::dimension: return "dimension error";
    case ErrorKind::bounds: return "bounds error";
    case ErrorKind::capacity: return "capacity error";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::validation: return "validation error";
    }
    return "error";
}

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

void BitVector::set(std::size_t i, bool v)
{
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

bool BitVector::any() const
{
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::popcount() const
{
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

BitVector& BitVector::operator^=(const BitVector& other)
{
    if (other.size_ != size_)
        throw Error(ErrorKind::dimension, "bit vector sizes differ");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

std::vector<std::size_t> BitVector::ones() const
{
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string BitVector::to_string() const
{
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)), data_(rows * words_for(cols), 0)
{
}

Gf2Matrix Gf2Matrix::identity(std::size_t n)
{
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, kOne);
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::string>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Gf2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw Error(ErrorKind::parse, "row " + std::to_string(r + 1) + " has length "
                                              + std::to_string(rows[r].size()) + ", expected "
                                              + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) {
            const char ch = rows[r][c];
            if (ch != '0' && ch != '1')
                throw Error(ErrorKind::parse, "row " + std::to_string(r + 1) + " column "
                                                  + std::to_string(c + 1) + ": expected 0 or 1");
            m.set(r, c, Gf2(ch == '1'));
        }
    }
    return m;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, Gf2 v)
{
    if (r >= rows_ || c >= cols_)
        throw Error(ErrorKind::bounds, "matrix index out of range");
    auto& word = data_[r * words_per_row_ + (c >> 6)];
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    if (v.bit())
        word |= mask;
    else
        word &= ~mask;
}

BitVector Gf2Matrix::row(std::size_t r) const
{
    BitVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        if (at(r, c).bit())
            v.set(c, true);
    return v;
}

void Gf2Matrix::set_row(std::size_t r, const BitVector& bits)
{
    if (bits.size() != cols_)
        throw Error(ErrorKind::dimension, "row length does not match column count");
    std::copy(bits.words().begin(), bits.words().end(), data_.begin() + static_cast<std::ptrdiff_t>(r * words_per_row_));
}

Gf2 Gf2Matrix::trace() const
{
    if (!square())
        throw Error(ErrorKind::dimension, "trace of a non-square matrix");
    Gf2 t;
    for (std::size_t i = 0; i < rows_; ++i)
        t += at(i, i);
    return t;
}

Gf2Matrix Gf2Matrix::transpose() const
{
    Gf2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c).bit())
                t.set(c, r, kOne);
    return t;
}

std::vector<std::string> Gf2Matrix::to_rows() const
{
    std::vector<std::string> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back(row(r).to_string());
    return out;
}

std::string Gf2Matrix::to_text() const
{
    std::string s;
    for (const auto& r : to_rows()) {
        s += r;
        s += '\n';
    }
    return s;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw Error(ErrorKind::dimension, "matrix product: inner dimensions differ");
    Gf2Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        auto* dst = &out.data_[r * out.words_per_row_];
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (!a.at(r, k).bit())
                continue;
            const auto* src = &b.data_[k * b.words_per_row_];
            for (std::size_t w = 0; w < out.words_per_row_; ++w)
                dst[w] ^= src[w];
        }
    }
    return out;
}

Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorKind::dimension, "matrix sum: shapes differ");
    Gf2Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] ^= b.data_[i];
    return out;
}

Gf2 det(const Gf2Matrix& m)
{
    if (!m.square())
        throw Error(ErrorKind::dimension, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<BitVector> rows;
    rows.reserve(n);
    for (std::size_t r = 0; r < n; ++r)
        rows.push_back(m.row(r));

    // Gaussian elimination; row swaps do not change the sign in characteristic 2.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && !rows[pivot].get(col))
            ++pivot;
        if (pivot == n)
            return kZero;
        std::swap(rows[col], rows[pivot]);
        for (std::size_t r = col + 1; r < n; ++r)
            if (rows[r].get(col))
                rows[r] ^= rows[col];
    }
    return kOne;
}

Gf2Matrix principal_submatrix(const Gf2Matrix& m, const std::vector<std::size_t>& indices)
{
    if (!m.square())
        throw Error(ErrorKind::dimension, "principal submatrix of a non-square matrix");
    std::vector<std::size_t> idx = indices;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    for (auto i : idx)
        if (i >= m.rows())
            throw Error(ErrorKind::bounds, "index " + std::to_string(i + 1) + " out of range 1.."
                                               + std::to_string(m.rows()));
    Gf2Matrix out(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c)
            if (m.at(idx[r], idx[c]).bit())
                out.set(r, c, kOne);
    return out;
}

Gf2Matrix principal_submatrix(const Gf2Matrix& m, std::uint64_t mask)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1U)
            idx.push_back(i);
    return principal_submatrix(m, idx);
}

MatrixSpace::MatrixSpace(std::size_t n, unsigned cap_bits) : n_(n)
{
    if (n == 0)
        throw Error(ErrorKind::domain, "matrix enumeration needs n >= 1");
    if (cap_bits > 62)
        cap_bits = 62;
    if (n * n > cap_bits)
        throw Error(ErrorKind::capacity, "enumerating " + std::to_string(n) + "x" + std::to_string(n)
                                             + " matrices needs 2^" + std::to_string(n * n)
                                             + " items, over the enumeration cap of 2^"
                                             + std::to_string(cap_bits));
}

Gf2Matrix MatrixSpace::at(std::uint64_t index) const
{
    const std::size_t bits = n_ * n_;
    Gf2Matrix m(n_, n_);
    for (std::size_t p = 0; p < bits; ++p)
        if ((index >> (bits - 1 - p)) & 1U)
            m.set(p / n_, p % n_, kOne);
    return m;
}

std::uint64_t MatrixSpace::index_of(const Gf2Matrix& m) const
{
    if (m.rows() != n_ || m.cols() != n_)
        throw Error(ErrorKind::dimension, "matrix does not belong to this space");
    const std::size_t bits = n_ * n_;
    std::uint64_t index = 0;
    for (std::size_t p = 0; p < bits; ++p)
        if (m.at(p / n_, p % n_).bit())
            index |= std::uint64_t{1} << (bits - 1 - p);
    return index;
}

Gf2Matrix parse_matrix(std::string_view text, std::string_view source)
{
    auto fail = [&](std::size_t line, std::size_t col, const std::string& msg) -> Error {
        std::ostringstream os;
        os << source << ':' << line << ':' << col << ": " << msg;
        return Error(ErrorKind::parse, os.str());
    };

    std::vector<std::string> rows;
    std::size_t pos = 0;
    std::size_t line = 0;
    while (pos < text.size()) {
        ++line;
        const auto nl = text.find('\n', pos);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        const std::string_view row = text.substr(pos, end - pos);
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c] != '0' && row[c] != '1')
                throw fail(line, c + 1, std::string("unexpected character '") + row[c] + "', expected 0 or 1");
        if (row.empty())
            throw fail(line, 1, "empty line");
        if (!rows.empty() && row.size() != rows.front().size())
            throw fail(line, std::min(row.size(), rows.front().size()) + 1,
                       "row has " + std::to_string(row.size()) + " entries, expected "
                           + std::to_string(rows.front().size()));
        rows.emplace_back(row);
        pos = end + 1;
    }
    if (rows.empty())
        throw fail(1, 1, "empty matrix");
    if (rows.size() != rows.front().size())
        throw fail(line + 1, 1, "matrix has " + std::to_string(rows.size()) + " rows but "
                                    + std::to_string(rows.front().size()) + " columns");
    return Gf2Matrix::from_rows(rows);
}

Gf2Matrix read_matrix_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::parse, path + ": cannot open matrix file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str(), path);
}

}  // namespace fpp
