#include "cubetti/gf2.hpp"

#include <bit>

namespace cubetti {

std::vector<std::size_t> Gf2Matrix::row_bits(std::size_t r) const
{
    std::vector<std::size_t> out;
    const uint64_t* p = &words_[r * words_per_row_];
    for (std::size_t w = 0; w < words_per_row_; ++w) {
        uint64_t word = p[w];
        while (word) {
            const int b = std::countr_zero(word);
            out.push_back(w * 64 + std::size_t(b));
            word &= word - 1;
        }
    }
    return out;
}

std::size_t rank(const Gf2Matrix& m)
{
    Gf2Matrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols_ && r < a.rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < a.rows_ && !a.get(pivot, c)) ++pivot;
        if (pivot == a.rows_) continue;
        a.swap_rows(r, pivot);
        for (std::size_t i = r + 1; i < a.rows_; ++i)
            if (a.get(i, c)) a.xor_row(i, r);
        ++r;
    }
    return r;
}

Gf2Matrix transpose(const Gf2Matrix& m)
{
    Gf2Matrix t(m.cols_, m.rows_);
    for (std::size_t r = 0; r < m.rows_; ++r)
        for (std::size_t c : m.row_bits(r)) t.set(c, r, true);
    return t;
}

Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("Gf2Matrix multiply: dimension mismatch");
    Gf2Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        uint64_t* dst = &out.words_[r * out.words_per_row_];
        for (std::size_t k : a.row_bits(r)) {
            const uint64_t* src = &b.words_[k * b.words_per_row_];
            for (std::size_t w = 0; w < b.words_per_row_; ++w) dst[w] ^= src[w];
        }
    }
    return out;
}

Gf2Matrix delete_column(const Gf2Matrix& m, std::size_t col)
{
    if (col >= m.cols_)
        throw std::invalid_argument("Gf2Matrix delete_column: column out of range");
    Gf2Matrix out(m.rows_, m.cols_ - 1);
    for (std::size_t r = 0; r < m.rows_; ++r)
        for (std::size_t c : m.row_bits(r)) {
            if (c == col) continue;
            out.set(r, c < col ? c : c - 1, true);
        }
    return out;
}

} // namespace cubetti
