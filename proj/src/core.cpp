#include "linfstab/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace linfstab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Phase table e^{2 pi i m / M}, m = 0..M-1. Synthesis/analysis use exact
// modular phase indices instead of running products, so there is no phase
// drift for long grids.
std::vector<cplx> phase_table(int M, double sign) {
    std::vector<cplx> w(static_cast<std::size_t>(M));
    for (int m = 0; m < M; ++m) {
        double ang = sign * kTwoPi * m / M;
        w[static_cast<std::size_t>(m)] = {std::cos(ang), std::sin(ang)};
    }
    return w;
}

int mod_index(long long n, long long j, int M) {
    long long m = (n * j) % M;
    if (m < 0) m += M;
    return static_cast<int>(m);
}

}  // namespace

FourierSignal::FourierSignal(int max_index)
    : max_index_(max_index), coeffs_(static_cast<std::size_t>(2 * max_index + 1)) {
    if (max_index < 1) throw std::invalid_argument("FourierSignal: max_index must be positive");
}

FourierSignal::FourierSignal(int max_index, std::vector<cplx> coeffs, bool real_symmetric)
    : max_index_(max_index), coeffs_(std::move(coeffs)) {
    if (max_index < 1) throw std::invalid_argument("FourierSignal: max_index must be positive");
    if (coeffs_.size() != static_cast<std::size_t>(2 * max_index + 1))
        throw std::invalid_argument("FourierSignal: coefficient count must be 2N+1");
    if (real_symmetric) mark_real_symmetric();
}

void FourierSignal::mark_real_symmetric() {
    for (int n = 0; n <= max_index_; ++n) {
        if (std::abs(coeff(-n) - std::conj(coeff(n))) > 1e-12)
            throw std::invalid_argument("FourierSignal: c_{-n} = conj(c_n) violated");
    }
    real_symmetric_ = true;
}

FourierSignal& FourierSignal::operator*=(cplx s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

FourierSignal& FourierSignal::operator+=(const FourierSignal& other) {
    if (other.max_index_ != max_index_)
        throw std::invalid_argument("FourierSignal: bandwidth mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    real_symmetric_ = false;
    return *this;
}

FourierSignal& FourierSignal::operator-=(const FourierSignal& other) {
    if (other.max_index_ != max_index_)
        throw std::invalid_argument("FourierSignal: bandwidth mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    real_symmetric_ = false;
    return *this;
}

FourierSignal operator*(const FourierSignal& s, cplx factor) {
    FourierSignal out = s;
    out *= factor;
    return out;
}

FourierSignal operator+(FourierSignal a, const FourierSignal& b) {
    a += b;
    return a;
}

FourierSignal operator-(FourierSignal a, const FourierSignal& b) {
    a -= b;
    return a;
}

TorusGrid::TorusGrid(int points) : point_count(points) {
    if (points < 1) throw std::invalid_argument("TorusGrid: point_count must be positive");
}

RadialGrid::RadialGrid(double rmax, int points) : r_max(rmax), point_count(points) {
    if (!(rmax > 0)) throw std::invalid_argument("RadialGrid: r_max must be positive");
    if (points < 2) throw std::invalid_argument("RadialGrid: need at least two points");
}

RadialField::RadialField(RadialGrid g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (values.size() != static_cast<std::size_t>(grid.point_count))
        throw std::invalid_argument("RadialField: value count must match grid");
    for (double x : values)
        if (!std::isfinite(x)) throw std::invalid_argument("RadialField: values must be finite");
}

RadialField RadialField::zeros(RadialGrid g) {
    return {g, std::vector<double>(static_cast<std::size_t>(g.point_count), 0.0)};
}

RadialField RadialField::sample(RadialGrid g, const std::function<double(double)>& f) {
    std::vector<double> v(static_cast<std::size_t>(g.point_count));
    for (int i = 0; i < g.point_count; ++i) v[static_cast<std::size_t>(i)] = f(g.point(i));
    return {g, std::move(v)};
}

std::vector<cplx> synthesize(const FourierSignal& signal, const TorusGrid& grid) {
    const int N = signal.max_index();
    const int M = grid.point_count;
    if (M < 2 * N + 1)
        throw std::invalid_argument("synthesize: grid too coarse, need point_count >= 2N+1");
    const auto w = phase_table(M, +1.0);
    std::vector<cplx> samples(static_cast<std::size_t>(M), cplx{0.0, 0.0});
    for (int n = -N; n <= N; ++n) {
        const cplx c = signal.coeff(n);
        if (c == cplx{0.0, 0.0}) continue;
        for (int j = 0; j < M; ++j)
            samples[static_cast<std::size_t>(j)] += c * w[static_cast<std::size_t>(mod_index(n, j, M))];
    }
    return samples;
}

std::vector<double> synthesize_real(const FourierSignal& signal, const TorusGrid& grid) {
    auto samples = synthesize(signal, grid);
    std::vector<double> out(samples.size());
    for (std::size_t j = 0; j < samples.size(); ++j) {
        // real-symmetric signals synthesize to real values; tiny residues dropped
        out[j] = samples[j].real();
    }
    return out;
}

FourierSignal analyze(const std::vector<cplx>& samples, const TorusGrid& grid, int max_index) {
    const int M = grid.point_count;
    if (samples.size() != static_cast<std::size_t>(M))
        throw std::invalid_argument("analyze: sample count must match grid");
    if (M < 2 * max_index + 1)
        throw std::invalid_argument("analyze: grid too coarse, need point_count >= 2N+1");
    const auto w = phase_table(M, -1.0);
    FourierSignal out(max_index);
    for (int n = -max_index; n <= max_index; ++n) {
        cplx acc{0.0, 0.0};
        for (int j = 0; j < M; ++j)
            acc += samples[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(mod_index(n, j, M))];
        out.set_coeff(n, acc / static_cast<double>(M));
    }
    return out;
}

FourierSignal analyze(const std::vector<double>& samples, const TorusGrid& grid, int max_index) {
    std::vector<cplx> c(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) c[i] = {samples[i], 0.0};
    return analyze(c, grid, max_index);
}

double norm(const FourierSignal& signal, NormKind kind) {
    switch (kind) {
        case NormKind::L2Torus: {
            double s = 0.0;
            for (const auto& c : signal.coeffs()) s += std::norm(c);
            return std::sqrt(s);
        }
        case NormKind::SupGrid: {
            const int M = 8 * (2 * signal.max_index() + 1);
            auto samples = synthesize(signal, TorusGrid(M));
            double best = 0.0;
            for (const auto& v : samples) best = std::max(best, std::abs(v));
            return best;
        }
        default:
            throw std::invalid_argument("norm: kind not applicable to FourierSignal");
    }
}

double norm(const RadialField& field, NormKind kind) {
    switch (kind) {
        case NormKind::L2Radial3d: {
            const auto& g = field.grid;
            const double h = g.spacing();
            double s = 0.0;
            for (int i = 0; i + 1 < g.point_count; ++i) {
                const double r0 = g.point(i), r1 = g.point(i + 1);
                const double f0 = field.values[static_cast<std::size_t>(i)];
                const double f1 = field.values[static_cast<std::size_t>(i + 1)];
                s += 0.5 * h * (f0 * f0 * r0 * r0 + f1 * f1 * r1 * r1);
            }
            return std::sqrt(4.0 * std::numbers::pi * s);
        }
        case NormKind::SupRadial: {
            double best = 0.0;
            for (double v : field.values) best = std::max(best, std::abs(v));
            return best;
        }
        default:
            throw std::invalid_argument("norm: kind not applicable to RadialField");
    }
}

double interp_field(const RadialField& field, double r) {
    const auto& g = field.grid;
    if (r <= 0.0) return field.values.front();
    if (r > g.r_max) return 0.0;
    if (r == g.r_max) return field.values.back();
    const double h = g.spacing();
    const auto i = static_cast<std::size_t>(r / h);
    const double lam = (r - static_cast<double>(i) * h) / h;
    return field.values[i] * (1.0 - lam) + field.values[i + 1] * lam;
}

}  // namespace linfstab
