#pragma once

#include <cstddef>
#include <vector>

#include "gpir/field.hpp"

namespace gpir {

// Dense row-major matrix over a prime field. Entries are reduced mod q.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Elem> data; // rows * cols entries

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    Elem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    Elem at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && data == o.data;
    }
};

Mat identity(const Field& f, std::size_t n);
Mat mat_mul(const Field& f, const Mat& a, const Mat& b);
std::vector<Elem> mat_vec(const Field& f, const Mat& a, const std::vector<Elem>& x);

// Rank via Gaussian elimination (exact, no pivot magic needed over F_q).
std::size_t rank_fq(const Field& f, Mat a);

// Inverse of a square matrix; throws std::domain_error if singular.
Mat inverse_fq(const Field& f, Mat a);

// Solve a x = b for square nonsingular a; throws std::domain_error if singular.
std::vector<Elem> solve_fq(const Field& f, Mat a, std::vector<Elem> b);

} // namespace gpir
