#include "das/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace das {

std::string shape_str(const std::vector<int>& shape) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < shape.size(); ++i) {
        if (i) os << " ";
        os << shape[i];
    }
    os << "]";
    return os.str();
}

static int64_t checked_numel(const std::vector<int>& shape) {
    if (shape.empty() || shape.size() > 2) {
        throw ValidationError("tensor: rank must be 1 or 2, got shape " + shape_str(shape));
    }
    int64_t n = 1;
    for (int d : shape) {
        if (d <= 0) throw ValidationError("tensor: non-positive dim in shape " + shape_str(shape));
        n *= d;
    }
    return n;
}

Tensor::Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
    v_.assign(static_cast<size_t>(checked_numel(shape_)), real(0));
}

Tensor::Tensor(std::vector<int> shape, std::vector<real> values)
    : shape_(std::move(shape)), v_(std::move(values)) {
    if (checked_numel(shape_) != static_cast<int64_t>(v_.size())) {
        throw ValidationError("tensor: " + std::to_string(v_.size()) +
                              " values do not fill shape " + shape_str(shape_));
    }
}

Tensor Tensor::full(std::vector<int> shape, real v) {
    Tensor t(std::move(shape));
    t.fill(v);
    return t;
}

Tensor Tensor::randn(std::vector<int> shape, Pcg64& rng, real stddev) {
    Tensor t(std::move(shape));
    for (int64_t i = 0; i < t.numel(); ++i) t[i] = static_cast<real>(rng.normal()) * stddev;
    return t;
}

bool Tensor::all_finite() const {
    for (real x : v_) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

void Tensor::fill(real v) {
    for (real& x : v_) x = v;
}

real dot(const Tensor& a, const Tensor& b) {
    if (a.numel() != b.numel()) {
        throw ValidationError("dot: length mismatch " + shape_str(a.shape()) + " vs " +
                              shape_str(b.shape()));
    }
    real s = 0;
    for (int64_t i = 0; i < a.numel(); ++i) s += a[i] * b[i];
    return s;
}

real l2_norm(const Tensor& a) {
    real s = 0;
    for (int64_t i = 0; i < a.numel(); ++i) s += a[i] * a[i];
    return std::sqrt(s);
}

real cosine(const Tensor& a, const Tensor& b) {
    const real d = dot(a, b);
    const real na = l2_norm(a);
    const real nb = l2_norm(b);
    if (na == 0 || nb == 0) {
        throw ValidationError("cosine: zero-norm operand (collapsed representation)");
    }
    return d / (na * nb);
}

real max_abs_diff(const Tensor& a, const Tensor& b) {
    if (!a.same_shape(b)) {
        throw ValidationError("max_abs_diff: shape mismatch " + shape_str(a.shape()) + " vs " +
                              shape_str(b.shape()));
    }
    real m = 0;
    for (int64_t i = 0; i < a.numel(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

std::vector<int> Pcg64::sample_distinct(int n, int k, int excluded) {
    std::vector<int> idx;
    idx.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (i != excluded) idx.push_back(i);
    }
    if (k > static_cast<int>(idx.size())) {
        throw ValidationError("sample_distinct: asked for " + std::to_string(k) + " of " +
                              std::to_string(idx.size()));
    }
    for (int t = 0; t < k; ++t) {
        const size_t j = static_cast<size_t>(t) + static_cast<size_t>(below(idx.size() - t));
        std::swap(idx[static_cast<size_t>(t)], idx[j]);
    }
    idx.resize(static_cast<size_t>(k));
    return idx;
}

}  // namespace das
