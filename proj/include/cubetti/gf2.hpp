#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cubetti {

// Dense matrix over GF(2), rows packed into 64-bit words.
// Value semantics; operations on distinct matrices are safe concurrently.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          words_(rows * words_per_row_, 0) {}

    static Gf2Matrix identity(std::size_t n)
    {
        Gf2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const
    {
        check(r, c);
        return (words_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool value)
    {
        check(r, c);
        uint64_t& w = words_[r * words_per_row_ + (c >> 6)];
        const uint64_t bit = uint64_t(1) << (c & 63);
        if (value)
            w |= bit;
        else
            w &= ~bit;
    }

    // adds row src into row dst (mod 2)
    void xor_row(std::size_t dst, std::size_t src)
    {
        uint64_t* d = &words_[dst * words_per_row_];
        const uint64_t* s = &words_[src * words_per_row_];
        for (std::size_t w = 0; w < words_per_row_; ++w) d[w] ^= s[w];
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        uint64_t* pa = &words_[a * words_per_row_];
        uint64_t* pb = &words_[b * words_per_row_];
        for (std::size_t w = 0; w < words_per_row_; ++w) std::swap(pa[w], pb[w]);
    }

    bool row_is_zero(std::size_t r) const
    {
        const uint64_t* p = &words_[r * words_per_row_];
        for (std::size_t w = 0; w < words_per_row_; ++w)
            if (p[w]) return false;
        return true;
    }

    bool is_zero() const
    {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    // column indices of the set bits in row r, ascending
    std::vector<std::size_t> row_bits(std::size_t r) const;

    friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.words_ == b.words_;
    }

private:
    void check(std::size_t r, std::size_t c) const
    {
        if (r >= rows_ || c >= cols_)
            throw std::out_of_range("Gf2Matrix: entry out of bounds");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<uint64_t> words_;

    friend std::size_t rank(const Gf2Matrix&);
    friend Gf2Matrix transpose(const Gf2Matrix&);
    friend Gf2Matrix multiply(const Gf2Matrix&, const Gf2Matrix&);
    friend Gf2Matrix delete_column(const Gf2Matrix&, std::size_t);
};

// Row-echelon rank by Gaussian elimination; pivots are chosen as the first
// nonzero row in column order so echelon traces are reproducible.
// Works on an internal copy; the input is not mutated.
std::size_t rank(const Gf2Matrix& m);

Gf2Matrix transpose(const Gf2Matrix& m);

// throws std::invalid_argument on inner-dimension mismatch
Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b);

Gf2Matrix delete_column(const Gf2Matrix& m, std::size_t col);

} // namespace cubetti
