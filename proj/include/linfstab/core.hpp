#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace linfstab {

using cplx = std::complex<double>;

/// Truncated two-sided Fourier series on the unit circle.
///
/// Holds coefficients c_n for n in [-N, N] with N = max_index(). A signal
/// marked real-symmetric promises c_{-n} = conj(c_n); the flag is verified
/// on construction and by mark_real_symmetric().
class FourierSignal {
public:
    explicit FourierSignal(int max_index);
    FourierSignal(int max_index, std::vector<cplx> coeffs, bool real_symmetric = false);

    int max_index() const { return max_index_; }
    bool real_symmetric() const { return real_symmetric_; }
    std::size_t size() const { return coeffs_.size(); }

    cplx coeff(int n) const { return coeffs_[index_of(n)]; }
    void set_coeff(int n, cplx value) { coeffs_[index_of(n)] = value; }
    void add_coeff(int n, cplx value) { coeffs_[index_of(n)] += value; }

    const std::vector<cplx>& coeffs() const { return coeffs_; }

    /// Verifies c_{-n} = conj(c_n) within 1e-12 (absolute) and sets the flag.
    void mark_real_symmetric();

    FourierSignal& operator*=(cplx s);
    FourierSignal& operator+=(const FourierSignal& other);
    FourierSignal& operator-=(const FourierSignal& other);

private:
    std::size_t index_of(int n) const {
        if (n < -max_index_ || n > max_index_)
            throw std::out_of_range("FourierSignal: coefficient index out of range");
        return static_cast<std::size_t>(n + max_index_);
    }

    int max_index_;
    std::vector<cplx> coeffs_;
    bool real_symmetric_ = false;
};

FourierSignal operator*(const FourierSignal& s, cplx factor);
FourierSignal operator+(FourierSignal a, const FourierSignal& b);
FourierSignal operator-(FourierSignal a, const FourierSignal& b);

/// M equispaced points t_j = j/M on [0, 1).
struct TorusGrid {
    explicit TorusGrid(int points);
    int point_count;
    double point(int j) const { return static_cast<double>(j) / point_count; }
};

/// Uniform samples of [0, r_max], first point 0, last point r_max.
struct RadialGrid {
    RadialGrid(double r_max, int points);
    double r_max;
    int point_count;
    double spacing() const { return r_max / (point_count - 1); }
    double point(int i) const { return r_max * i / (point_count - 1); }
};

/// Real samples u(r_i) on a RadialGrid.
struct RadialField {
    RadialField(RadialGrid g, std::vector<double> v);
    static RadialField zeros(RadialGrid g);
    static RadialField sample(RadialGrid g, const std::function<double(double)>& f);

    RadialGrid grid;
    std::vector<double> values;
};

enum class NormKind {
    L2Torus,     // sqrt(sum |c_n|^2), Parseval
    SupGrid,     // max |value| on a grid 8x denser than the bandwidth
    L2Radial3d,  // sqrt(4*pi * trapz(|u|^2 r^2 dr))
    SupRadial,   // max |u(r_i)|
};

/// Evaluates the series at the grid points: samples_j = sum_n c_n e^{2 pi i n t_j}.
/// Requires point_count >= 2*max_index + 1 (otherwise aliasing; rejected).
std::vector<cplx> synthesize(const FourierSignal& signal, const TorusGrid& grid);

/// Real-valued synthesis for real-symmetric signals; imaginary residues
/// below 1e-10 are dropped.
std::vector<double> synthesize_real(const FourierSignal& signal, const TorusGrid& grid);

/// Trigonometric moments c_n = (1/M) sum_j samples_j e^{-2 pi i n t_j}.
/// Exact inverse of synthesize for band-limited input (point_count >= 2N+1).
FourierSignal analyze(const std::vector<cplx>& samples, const TorusGrid& grid, int max_index);
FourierSignal analyze(const std::vector<double>& samples, const TorusGrid& grid, int max_index);

double norm(const FourierSignal& signal, NormKind kind);
double norm(const RadialField& field, NormKind kind);

/// Linear interpolation of a radial field; zero beyond the grid.
double interp_field(const RadialField& field, double r);

}  // namespace linfstab
