#include "gpir/linalg.hpp"

#include <stdexcept>

namespace gpir {

Mat identity(const Field& f, std::size_t n) {
    (void)f;
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat mat_mul(const Field& f, const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
    Mat c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            Elem aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
        }
    return c;
}

std::vector<Elem> mat_vec(const Field& f, const Mat& a, const std::vector<Elem>& x) {
    if (a.cols != x.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<Elem> y(a.rows, 0);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            y[i] = f.add(y[i], f.mul(a.at(i, j), x[j]));
    return y;
}

std::size_t rank_fq(const Field& f, Mat a) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols && rank < a.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows && a.at(pivot, col) == 0) ++pivot;
        if (pivot == a.rows) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
        Elem pinv = f.inv(a.at(rank, col));
        for (std::size_t j = col; j < a.cols; ++j) a.at(rank, j) = f.mul(a.at(rank, j), pinv);
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == rank || a.at(i, col) == 0) continue;
            Elem factor = a.at(i, col);
            for (std::size_t j = col; j < a.cols; ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

Mat inverse_fq(const Field& f, Mat a) {
    if (a.rows != a.cols) throw std::invalid_argument("inverse_fq: matrix not square");
    std::size_t n = a.rows;
    Mat inv = identity(f, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("inverse_fq: singular matrix");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Elem pinv = f.inv(a.at(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) = f.mul(a.at(col, j), pinv);
            inv.at(col, j) = f.mul(inv.at(col, j), pinv);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Elem factor = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(col, j)));
                inv.at(i, j) = f.sub(inv.at(i, j), f.mul(factor, inv.at(col, j)));
            }
        }
    }
    return inv;
}

std::vector<Elem> solve_fq(const Field& f, Mat a, std::vector<Elem> b) {
    if (a.rows != a.cols || a.rows != b.size())
        throw std::invalid_argument("solve_fq: dimension mismatch");
    Mat inv = inverse_fq(f, std::move(a));
    return mat_vec(f, inv, b);
}

} // namespace gpir
