#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "das/common.hpp"
#include "das/rng.hpp"

namespace das {

std::string shape_str(const std::vector<int>& shape);

// Dense row-major tensor. Rank 1 (vectors, incl. scalars as {1}) and rank 2
// (matrices) cover everything this codebase needs.
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<int> shape);
    Tensor(std::vector<int> shape, std::vector<real> values);

    static Tensor scalar(real v) { return Tensor({1}, {v}); }
    static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }
    static Tensor full(std::vector<int> shape, real v);
    static Tensor randn(std::vector<int> shape, Pcg64& rng, real stddev = 1.0);

    const std::vector<int>& shape() const { return shape_; }
    int rank() const { return static_cast<int>(shape_.size()); }
    int64_t numel() const { return static_cast<int64_t>(v_.size()); }
    int dim(int i) const { return shape_[static_cast<size_t>(i)]; }

    // Rank-2 accessors; a rank-1 tensor behaves as a single row.
    int rows() const { return rank() == 2 ? shape_[0] : 1; }
    int cols() const { return rank() == 2 ? shape_[1] : (rank() == 1 ? shape_[0] : 0); }

    real* data() { return v_.data(); }
    const real* data() const { return v_.data(); }
    real& operator[](int64_t i) { return v_[static_cast<size_t>(i)]; }
    real operator[](int64_t i) const { return v_[static_cast<size_t>(i)]; }
    real& at(int r, int c) { return v_[static_cast<size_t>(r) * cols() + c]; }
    real at(int r, int c) const { return v_[static_cast<size_t>(r) * cols() + c]; }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }
    bool all_finite() const;
    void fill(real v);

    bool operator==(const Tensor& o) const { return shape_ == o.shape_ && v_ == o.v_; }

    const std::vector<real>& values() const { return v_; }

private:
    std::vector<int> shape_;
    std::vector<real> v_;
};

// dot = sum a_i b_i over equal-length vectors.
real dot(const Tensor& a, const Tensor& b);

// cosine = dot / (|a| |b|); rejects zero-norm inputs, which here signal a
// collapsed representation.
real cosine(const Tensor& a, const Tensor& b);

real l2_norm(const Tensor& a);

real max_abs_diff(const Tensor& a, const Tensor& b);

}  // namespace das
