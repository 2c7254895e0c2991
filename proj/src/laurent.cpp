#include "matho/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <unsupported/Eigen/FFT>

namespace matho {

namespace {

constexpr double kCircleTol = 1e-12;

template <class S>
void require_same_shape(const Laurent<S>& a, const Laurent<S>& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": coefficient shapes differ");
    }
}

}  // namespace

template <class S>
Laurent<S>::Laurent(int rows, int cols, int order) : rows_(rows), cols_(cols), order_(order) {
    if (rows <= 0 || cols <= 0) throw DimensionError("Laurent: non-positive coefficient shape");
    if (order < 0) throw ValidationError("Laurent: negative truncation order");
    if constexpr (std::is_same_v<S, VectorShape>) {
        if (cols != 1) throw DimensionError("VectorLaurent: coefficients must be column vectors");
    }
    data_ = Mat::Zero(rows, static_cast<Eigen::Index>(cols) * (2 * order + 1));
}

template <class S>
Laurent<S> Laurent<S>::zero(int dim, int order) {
    if constexpr (std::is_same_v<S, VectorShape>) {
        return Laurent(dim, 1, order);
    } else {
        return Laurent(dim, dim, order);
    }
}

template <class S>
Laurent<S> Laurent<S>::monomial(const Mat& c, int n, int order) {
    Laurent out(static_cast<int>(c.rows()), static_cast<int>(c.cols()), std::max(order, std::abs(n)));
    out.coeff(n) = c;
    return out;
}

template <class S>
Laurent<S> Laurent<S>::identity(int dim, int order)
    requires std::is_same_v<S, MatrixShape>
{
    return monomial(Mat::Identity(dim, dim), 0, order);
}

template <class S>
Mat Laurent<S>::at(int n) const {
    if (!in_window(n)) return Mat::Zero(rows_, cols_);
    return coeff(n);
}

template <class S>
std::pair<int, int> Laurent<S>::support(double eps) const {
    int lo = order_ + 1;
    int hi = -order_ - 1;
    for (int n = -order_; n <= order_; ++n) {
        if (coeff(n).norm() > eps) {
            lo = std::min(lo, n);
            hi = std::max(hi, n);
        }
    }
    return {lo, hi};
}

template <class S>
Laurent<S> Laurent<S>::truncated(int m) const {
    if (m >= order_) return widened(m);
    Laurent out(rows_, cols_, m);
    double dropped = 0.0;
    for (int n = -order_; n <= order_; ++n) {
        if (std::abs(n) <= m) {
            out.coeff(n) = coeff(n);
        } else {
            dropped += coeff(n).norm();
        }
    }
    out.tail_ = tail_ + dropped;
    return out;
}

template <class S>
Laurent<S> Laurent<S>::widened(int m) const {
    if (m < order_) throw ValidationError("Laurent::widened: window would shrink");
    Laurent out(rows_, cols_, m);
    out.data_.middleCols(static_cast<Eigen::Index>(m - order_) * cols_, data_.cols()) = data_;
    out.tail_ = tail_;
    return out;
}

template <class S>
double Laurent<S>::norm() const {
    return data_.norm();
}

template <class S>
double Laurent<S>::l1_norm() const {
    double s = 0.0;
    for (int n = -order_; n <= order_; ++n) s += coeff(n).norm();
    return s;
}

template <class S>
Laurent<S>& Laurent<S>::operator+=(const Laurent& o) {
    require_same_shape(*this, o, "operator+");
    if (o.order_ > order_) *this = widened(o.order_);
    data_.middleCols(static_cast<Eigen::Index>(order_ - o.order_) * cols_, o.data_.cols()) += o.data_;
    tail_ += o.tail_;
    return *this;
}

template <class S>
Laurent<S>& Laurent<S>::operator-=(const Laurent& o) {
    require_same_shape(*this, o, "operator-");
    if (o.order_ > order_) *this = widened(o.order_);
    data_.middleCols(static_cast<Eigen::Index>(order_ - o.order_) * cols_, o.data_.cols()) -= o.data_;
    tail_ += o.tail_;
    return *this;
}

template <class S>
Laurent<S>& Laurent<S>::operator*=(cplx s) {
    data_ *= s;
    tail_ *= std::abs(s);
    return *this;
}

template <class S>
Laurent<S> mul(const MatrixLaurent& f, const Laurent<S>& g) {
    if (f.cols() != g.rows()) throw DimensionError("mul: inner dimensions differ");
    Laurent<S> out(f.rows(), g.cols(), f.order() + g.order());
    const auto [flo, fhi] = f.support();
    const auto [glo, ghi] = g.support();
    for (int k = flo; k <= fhi; ++k) {
        const Mat fk = f.coeff(k);
        if (fk.isZero(0.0)) continue;
        for (int m = glo; m <= ghi; ++m) {
            out.coeff(k + m).noalias() += fk * g.coeff(m);
        }
    }
    const double fw = f.l1_norm();
    const double gw = g.l1_norm();
    out.set_tail_bound(fw * g.tail_bound() + f.tail_bound() * gw + f.tail_bound() * g.tail_bound());
    return out;
}

MatrixLaurent adjoint_star(const MatrixLaurent& f) {
    MatrixLaurent out(f.cols(), f.rows(), f.order());
    for (int n = -f.order(); n <= f.order(); ++n) out.coeff(n) = f.coeff(-n).adjoint();
    out.set_tail_bound(f.tail_bound());
    return out;
}

template <class S>
Laurent<S> flip(const Laurent<S>& f) {
    // index m <- -m-1 maps [-M, M] onto [-M-1, M-1]
    Laurent<S> out(f.rows(), f.cols(), f.order() + 1);
    for (int n = -f.order(); n <= f.order(); ++n) out.coeff(-n - 1) = f.coeff(n);
    out.set_tail_bound(f.tail_bound());
    return out;
}

template <class S>
Laurent<S> reverse(const Laurent<S>& f) {
    Laurent<S> out(f.rows(), f.cols(), f.order());
    for (int n = -f.order(); n <= f.order(); ++n) out.coeff(-n) = f.coeff(n);
    out.set_tail_bound(f.tail_bound());
    return out;
}

template <class S>
Laurent<S> shift(const Laurent<S>& f, int k) {
    Laurent<S> out(f.rows(), f.cols(), f.order() + std::abs(k));
    for (int n = -f.order(); n <= f.order(); ++n) out.coeff(n + k) = f.coeff(n);
    out.set_tail_bound(f.tail_bound());
    return out;
}

template <class S>
std::pair<Laurent<S>, Laurent<S>> riesz_split(const Laurent<S>& f) {
    Laurent<S> plus(f.rows(), f.cols(), f.order());
    Laurent<S> minus(f.rows(), f.cols(), f.order());
    for (int n = -f.order(); n <= f.order(); ++n) {
        if (n >= 0) {
            plus.coeff(n) = f.coeff(n);
        } else {
            minus.coeff(n) = f.coeff(n);
        }
    }
    // the tail can sit on either side
    plus.set_tail_bound(f.tail_bound());
    minus.set_tail_bound(f.tail_bound());
    return {plus, minus};
}

cplx inner_product(const VectorLaurent& f, const VectorLaurent& g) {
    if (f.dim() != g.dim()) throw DimensionError("inner_product: dimensions differ");
    const int m = std::min(f.order(), g.order());
    cplx s = 0.0;
    for (int n = -m; n <= m; ++n) s += g.coeff(n).col(0).dot(f.coeff(n).col(0));
    return s;
}

double inner_product_error(const VectorLaurent& f, const VectorLaurent& g) {
    return f.tail_bound() * (g.norm() + g.tail_bound()) + f.norm() * g.tail_bound();
}

std::vector<cplx> circle_points(int n_samples) {
    std::vector<cplx> pts(static_cast<std::size_t>(n_samples));
    for (int k = 0; k < n_samples; ++k) {
        pts[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / n_samples);
    }
    return pts;
}

template <class S>
Mat evaluate(const Laurent<S>& f, cplx z0) {
    if (std::abs(std::abs(z0) - 1.0) > kCircleTol) throw DomainError("evaluate: point is not on the unit circle");
    Mat out = Mat::Zero(f.rows(), f.cols());
    // powers computed directly: z0 is unimodular so no growth
    for (int n = -f.order(); n <= f.order(); ++n) out += f.coeff(n) * std::pow(z0, n);
    return out;
}

template <class S>
std::vector<Mat> sample_circle(const Laurent<S>& f, int n_samples) {
    std::vector<Mat> out;
    out.reserve(static_cast<std::size_t>(n_samples));
    for (cplx z : circle_points(n_samples)) out.push_back(evaluate(f, z));
    return out;
}

template <class S>
Mat evaluate_disk(const Laurent<S>& f, cplx lambda) {
    if (std::abs(lambda) >= 1.0) throw DomainError("evaluate_disk: |lambda| must be < 1");
    // Horner from the top coefficient down
    Mat acc = Mat::Zero(f.rows(), f.cols());
    for (int n = f.order(); n >= 0; --n) acc = acc * lambda + f.coeff(n);
    return acc;
}

template <class S>
double coeff_distance(const Laurent<S>& a, const Laurent<S>& b) {
    require_same_shape(a, b, "coeff_distance");
    const int m = std::max(a.order(), b.order());
    double d = 0.0;
    for (int n = -m; n <= m; ++n) d = std::max(d, (a.at(n) - b.at(n)).norm());
    return d;
}

template <class S>
Laurent<S> fit_from_samples(const std::vector<Mat>& values, int order) {
    const int n_samples = static_cast<int>(values.size());
    if (n_samples < 2 * order + 1) throw ValidationError("fit_from_samples: too few samples for the window");
    const int rows = static_cast<int>(values.front().rows());
    const int cols = static_cast<int>(values.front().cols());
    Laurent<S> out(rows, cols, order);
    Eigen::FFT<double> fft;
    std::vector<cplx> time(static_cast<std::size_t>(n_samples));
    std::vector<cplx> freq;
    double tail = 0.0;
    std::vector<double> outside(static_cast<std::size_t>(n_samples), 0.0);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            for (int k = 0; k < n_samples; ++k) time[static_cast<std::size_t>(k)] = values[static_cast<std::size_t>(k)](r, c);
            fft.fwd(freq, time);
            for (int k = 0; k < n_samples; ++k) {
                // forward FFT uses exp(-2 pi i jk/N); bin k holds index k or k - N
                const int n = k <= n_samples / 2 ? k : k - n_samples;
                const cplx v = freq[static_cast<std::size_t>(k)] / static_cast<double>(n_samples);
                if (std::abs(n) <= order) {
                    out.coeff(n)(r, c) = v;
                } else {
                    outside[static_cast<std::size_t>(k)] += std::norm(v);
                }
            }
        }
    }
    for (double s : outside) tail += std::sqrt(s);
    out.set_tail_bound(tail);
    return out;
}

template class Laurent<VectorShape>;
template class Laurent<MatrixShape>;

template VectorLaurent mul(const MatrixLaurent&, const VectorLaurent&);
template MatrixLaurent mul(const MatrixLaurent&, const MatrixLaurent&);
template VectorLaurent flip(const VectorLaurent&);
template MatrixLaurent flip(const MatrixLaurent&);
template VectorLaurent reverse(const VectorLaurent&);
template MatrixLaurent reverse(const MatrixLaurent&);
template VectorLaurent shift(const VectorLaurent&, int);
template MatrixLaurent shift(const MatrixLaurent&, int);
template std::pair<VectorLaurent, VectorLaurent> riesz_split(const VectorLaurent&);
template std::pair<MatrixLaurent, MatrixLaurent> riesz_split(const MatrixLaurent&);
template Mat evaluate(const VectorLaurent&, cplx);
template Mat evaluate(const MatrixLaurent&, cplx);
template std::vector<Mat> sample_circle(const VectorLaurent&, int);
template std::vector<Mat> sample_circle(const MatrixLaurent&, int);
template Mat evaluate_disk(const VectorLaurent&, cplx);
template Mat evaluate_disk(const MatrixLaurent&, cplx);
template double coeff_distance(const VectorLaurent&, const VectorLaurent&);
template double coeff_distance(const MatrixLaurent&, const MatrixLaurent&);
template VectorLaurent fit_from_samples<VectorShape>(const std::vector<Mat>&, int);
template MatrixLaurent fit_from_samples<MatrixShape>(const std::vector<Mat>&, int);

}  // namespace matho
