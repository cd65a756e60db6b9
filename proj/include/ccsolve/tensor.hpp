#pragma once

#include <vector>

#include "ccsolve/rng.hpp"

namespace ccsolve::nd {

// Dense row-major matrix of doubles. Everything in the model path (batches,
// weights, gradients, assignment vectors) lives in this one type.
struct Tensor2 {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Tensor2() = default;
    Tensor2(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

    static Tensor2 zeros(int r, int c) { return Tensor2(r, c); }
    static Tensor2 full(int r, int c, double v);

    double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    double* row_ptr(int r) { return data.data() + static_cast<size_t>(r) * cols; }
    const double* row_ptr(int r) const { return data.data() + static_cast<size_t>(r) * cols; }

    size_t size() const { return data.size(); }
    bool same_shape(const Tensor2& o) const { return rows == o.rows && cols == o.cols; }

    void fill(double v);
    bool all_finite() const;
};

// c = a @ b
Tensor2 matmul(const Tensor2& a, const Tensor2& b);
// c = a^T @ b  (a is k x r, result r x c)
Tensor2 matmul_tn(const Tensor2& a, const Tensor2& b);
// c = a @ b^T  (b is c x k, result r x c)
Tensor2 matmul_nt(const Tensor2& a, const Tensor2& b);

Tensor2 add(const Tensor2& a, const Tensor2& b);
Tensor2 sub(const Tensor2& a, const Tensor2& b);
void add_inplace(Tensor2& a, const Tensor2& b);
void axpy_inplace(Tensor2& a, double alpha, const Tensor2& b);  // a += alpha * b
void scale_inplace(Tensor2& a, double alpha);
Tensor2 hadamard(const Tensor2& a, const Tensor2& b);

// x (r x c) plus bias (1 x c) broadcast over rows.
Tensor2 add_row_broadcast(const Tensor2& x, const Tensor2& bias);
// column-wise sum of x, result 1 x c.
Tensor2 sum_rows(const Tensor2& x);

double sum_squares(const Tensor2& x);
double dot(const Tensor2& a, const Tensor2& b);

// Standard-normal fill drawn from the stream in row-major order.
Tensor2 rng_gaussian(RngStream& stream, int rows, int cols);

void require_shape(const Tensor2& t, int rows, int cols, const char* who);

}  // namespace ccsolve::nd
