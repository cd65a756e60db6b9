#include "ccsolve/tensor.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "ccsolve/errors.hpp"

namespace ccsolve::nd {

namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Map = Eigen::Map<RowMat>;
using CMap = Eigen::Map<const RowMat>;

CMap cmap(const Tensor2& t) { return CMap(t.data.data(), t.rows, t.cols); }
Map map(Tensor2& t) { return Map(t.data.data(), t.rows, t.cols); }

[[noreturn]] void shape_fail(const char* op, const Tensor2& a, const Tensor2& b) {
    throw ShapeError(std::string(op) + ": incompatible shapes (" + std::to_string(a.rows) + "x" +
                     std::to_string(a.cols) + ") vs (" + std::to_string(b.rows) + "x" +
                     std::to_string(b.cols) + ")");
}

}  // namespace

Tensor2 Tensor2::full(int r, int c, double v) {
    Tensor2 t(r, c);
    t.fill(v);
    return t;
}

void Tensor2::fill(double v) { std::fill(data.begin(), data.end(), v); }

bool Tensor2::all_finite() const {
    for (double v : data)
        if (!std::isfinite(v)) return false;
    return true;
}

Tensor2 matmul(const Tensor2& a, const Tensor2& b) {
    if (a.cols != b.rows) shape_fail("matmul", a, b);
    Tensor2 c(a.rows, b.cols);
    map(c).noalias() = cmap(a) * cmap(b);
    return c;
}

Tensor2 matmul_tn(const Tensor2& a, const Tensor2& b) {
    if (a.rows != b.rows) shape_fail("matmul_tn", a, b);
    Tensor2 c(a.cols, b.cols);
    map(c).noalias() = cmap(a).transpose() * cmap(b);
    return c;
}

Tensor2 matmul_nt(const Tensor2& a, const Tensor2& b) {
    if (a.cols != b.cols) shape_fail("matmul_nt", a, b);
    Tensor2 c(a.rows, b.rows);
    map(c).noalias() = cmap(a) * cmap(b).transpose();
    return c;
}

Tensor2 add(const Tensor2& a, const Tensor2& b) {
    if (!a.same_shape(b)) shape_fail("add", a, b);
    Tensor2 c = a;
    map(c) += cmap(b);
    return c;
}

Tensor2 sub(const Tensor2& a, const Tensor2& b) {
    if (!a.same_shape(b)) shape_fail("sub", a, b);
    Tensor2 c = a;
    map(c) -= cmap(b);
    return c;
}

void add_inplace(Tensor2& a, const Tensor2& b) {
    if (!a.same_shape(b)) shape_fail("add_inplace", a, b);
    map(a) += cmap(b);
}

void axpy_inplace(Tensor2& a, double alpha, const Tensor2& b) {
    if (!a.same_shape(b)) shape_fail("axpy_inplace", a, b);
    map(a) += alpha * cmap(b);
}

void scale_inplace(Tensor2& a, double alpha) { map(a) *= alpha; }

Tensor2 hadamard(const Tensor2& a, const Tensor2& b) {
    if (!a.same_shape(b)) shape_fail("hadamard", a, b);
    Tensor2 c = a;
    map(c).array() *= cmap(b).array();
    return c;
}

Tensor2 add_row_broadcast(const Tensor2& x, const Tensor2& bias) {
    if (bias.rows != 1 || bias.cols != x.cols) shape_fail("add_row_broadcast", x, bias);
    Tensor2 c = x;
    map(c).rowwise() += cmap(bias).row(0);
    return c;
}

Tensor2 sum_rows(const Tensor2& x) {
    Tensor2 c(1, x.cols);
    map(c).row(0) = cmap(x).colwise().sum();
    return c;
}

double sum_squares(const Tensor2& x) { return cmap(x).squaredNorm(); }

double dot(const Tensor2& a, const Tensor2& b) {
    if (!a.same_shape(b)) shape_fail("dot", a, b);
    return (cmap(a).array() * cmap(b).array()).sum();
}

Tensor2 rng_gaussian(RngStream& stream, int rows, int cols) {
    Tensor2 t(rows, cols);
    for (double& v : t.data) v = stream.gaussian();
    return t;
}

void require_shape(const Tensor2& t, int rows, int cols, const char* who) {
    if (t.rows != rows || t.cols != cols)
        throw ShapeError(std::string(who) + ": expected " + std::to_string(rows) + "x" +
                         std::to_string(cols) + ", got " + std::to_string(t.rows) + "x" +
                         std::to_string(t.cols));
}

}  // namespace ccsolve::nd
