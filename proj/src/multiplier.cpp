#include "linfstab/multiplier.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace linfstab::multiplier {

namespace {

constexpr double kPi = std::numbers::pi;

// 4-point Gauss-Legendre rule on [-1, 1].
constexpr double kGaussX[4] = {-0.861136311594053, -0.339981043584856,
                               0.339981043584856, 0.861136311594053};
constexpr double kGaussW[4] = {0.347854845137454, 0.652145154862546,
                               0.652145154862546, 0.347854845137454};

double triangle_mass_integral(int d) {
    // int_0^1 (1-r) r^{d-1} dr = 1/(d(d+1))
    return 1.0 / (static_cast<double>(d) * (d + 1));
}

}  // namespace

double sphere_surface_area(int dimension) {
    return 2.0 * std::pow(kPi, dimension / 2.0) / std::tgamma(dimension / 2.0);
}

FilterProfile FilterProfile::triangle(int dimension) {
    if (dimension < 1) throw std::invalid_argument("FilterProfile: dimension must be positive");
    const double raw_mass = sphere_surface_area(dimension) * triangle_mass_integral(dimension);
    return {FilterShape::Triangle, dimension, 1.0 / raw_mass};
}

FilterProfile FilterProfile::gaussian(int dimension) {
    if (dimension < 1) throw std::invalid_argument("FilterProfile: dimension must be positive");
    return {FilterShape::Gaussian, dimension, 1.0};  // int e^{-pi |x|^2} dx = 1
}

double FilterProfile::raw(double r) const {
    const double a = std::abs(r);
    switch (shape_) {
        case FilterShape::Triangle: return std::max(1.0 - a, 0.0);
        case FilterShape::Gaussian: return std::exp(-kPi * a * a);
    }
    return 0.0;
}

double FilterProfile::normalized(double r) const { return normalization_ * raw(r); }

double FilterProfile::support_radius() const {
    switch (shape_) {
        case FilterShape::Triangle: return 1.0;
        case FilterShape::Gaussian: return 3.5;  // e^{-pi r^2} < 1e-15 beyond
    }
    return 0.0;
}

DilatedFilterPair::DilatedFilterPair(FilterProfile k, FilterProfile h, double alpha, double beta)
    : k_(k), h_(h), alpha_(alpha), beta_(beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("DilatedFilterPair: scales must be positive");
}

double DilatedFilterPair::k_dilated(double r) const {
    const double d = k_.dimension();
    return std::pow(alpha_, -d) * k_.normalized(r / alpha_);
}

double DilatedFilterPair::h_dilated(double r) const { return h_.raw(beta_ * r); }

double DilatedFilterPair::k_cumulative(double t) const {
    if (k_.dimension() != 3)
        throw std::invalid_argument("k_cumulative: implemented for d = 3");
    if (t <= 0.0) return 0.0;
    const double a = alpha_;
    const double norm = k_.normalization();
    switch (k_.shape()) {
        case FilterShape::Triangle: {
            const double u = std::min(t, a);
            return norm / (a * a * a) * (0.5 * u * u - u * u * u / (3.0 * a));
        }
        case FilterShape::Gaussian: {
            const double q = t / a;
            return norm / (2.0 * kPi * a) * (1.0 - std::exp(-kPi * q * q));
        }
    }
    return 0.0;
}

double DilatedFilterPair::k_l2_norm() const {
    const int d = k_.dimension();
    double raw_sq = 0.0;  // int raw(r)^2 r^{d-1} dr
    switch (k_.shape()) {
        case FilterShape::Triangle:
            raw_sq = 2.0 / (static_cast<double>(d) * (d + 1) * (d + 2));
            break;
        case FilterShape::Gaussian:
            raw_sq = std::tgamma(d / 2.0) / (2.0 * std::pow(2.0 * kPi, d / 2.0));
            break;
    }
    const double base = std::sqrt(sphere_surface_area(d) * raw_sq) * k_.normalization();
    return std::pow(alpha_, -d / 2.0) * base;
}

double DilatedFilterPair::h_l2_norm() const {
    const int d = h_.dimension();
    double raw_sq = 0.0;
    switch (h_.shape()) {
        case FilterShape::Triangle:
            raw_sq = 2.0 / (static_cast<double>(d) * (d + 1) * (d + 2));
            break;
        case FilterShape::Gaussian:
            raw_sq = std::tgamma(d / 2.0) / (2.0 * std::pow(2.0 * kPi, d / 2.0));
            break;
    }
    const double base = std::sqrt(sphere_surface_area(d) * raw_sq);
    return std::pow(beta_, -d / 2.0) * base;
}

DilatedFilterPair dilate_filters(const FilterProfile& k, const FilterProfile& h,
                                 double alpha, double beta) {
    return {k, h, alpha, beta};
}

MultiplierSpec wave_symbol(double t) {
    return {[t](double xi) { return std::cos(2.0 * kPi * std::abs(xi) * t); }, 1.0};
}

RadialField apply_precondition(const DilatedFilterPair& pair, const RadialField& f) {
    if (pair.k_profile().dimension() != 3 || pair.h_profile().dimension() != 3)
        throw std::invalid_argument("apply_precondition: filters must live in d = 3");

    const auto& g = f.grid;
    const int M = g.point_count;
    const double h = g.spacing();
    const double ksup = pair.k_support();

    // windowed field w(s) = h_beta(s) f(s) on the grid
    std::vector<double> w(static_cast<std::size_t>(M));
    double fmax = 0.0;
    for (double v : f.values) fmax = std::max(fmax, std::abs(v));
    double support = 0.0;
    for (int i = 0; i < M; ++i) {
        w[static_cast<std::size_t>(i)] = pair.h_dilated(g.point(i)) * f.values[static_cast<std::size_t>(i)];
        if (std::abs(w[static_cast<std::size_t>(i)]) > 1e-14 * fmax) support = g.point(i);
    }
    const double required = support + ksup;
    if (support > 0.0 && required > g.r_max + 0.5 * h) {
        std::ostringstream msg;
        msg << "apply_precondition: grid too small to contain filter support, need r_max >= "
            << required;
        throw std::invalid_argument(msg.str());
    }

    // Gauss nodes of one cell [s0, s0+h], with w linearly interpolated.
    auto cell_nodes = [&](int cell, double lo, double hi, double* s, double* gw, double* wn) {
        const double a = std::max(lo, g.point(cell));
        const double b = std::min(hi, g.point(cell + 1));
        if (b <= a) return false;
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int q = 0; q < 4; ++q) {
            s[q] = mid + half * kGaussX[q];
            gw[q] = half * kGaussW[q];
            const double lam = (s[q] - g.point(cell)) / h;
            wn[q] = w[static_cast<std::size_t>(cell)] * (1.0 - lam) +
                    w[static_cast<std::size_t>(cell + 1)] * lam;
        }
        return true;
    };

    std::vector<double> out(static_cast<std::size_t>(M));
    for (int i = 0; i < M; ++i) {
        const double r = g.point(i);
        const double lo = std::max(0.0, r - ksup);
        const double hi = std::min(r + ksup, g.r_max);
        const int c0 = std::max(0, static_cast<int>(std::floor(lo / h)));
        const int c1 = std::min(M - 2, static_cast<int>(std::ceil(hi / h)));
        double acc = 0.0;
        double s[4], gw[4], wn[4];
        if (i == 0) {
            for (int c = c0; c <= c1; ++c) {
                if (!cell_nodes(c, lo, hi, s, gw, wn)) continue;
                for (int q = 0; q < 4; ++q)
                    acc += gw[q] * s[q] * s[q] * wn[q] * pair.k_dilated(s[q]);
            }
            out[0] = 4.0 * kPi * acc;
        } else {
            for (int c = c0; c <= c1; ++c) {
                if (!cell_nodes(c, lo, hi, s, gw, wn)) continue;
                for (int q = 0; q < 4; ++q) {
                    const double W = pair.k_cumulative(r + s[q]) - pair.k_cumulative(std::abs(r - s[q]));
                    acc += gw[q] * s[q] * wn[q] * W;
                }
            }
            out[static_cast<std::size_t>(i)] = 2.0 * kPi / r * acc;
        }
    }
    return {g, std::move(out)};
}

FourierSignal apply_multiplier(const MultiplierSpec& mu, const FourierSignal& f) {
    FourierSignal out(f.max_index());
    for (int n = -f.max_index(); n <= f.max_index(); ++n) {
        const double m = mu.symbol(static_cast<double>(n));
        if (std::abs(m) > mu.sup_bound * (1.0 + 1e-12))
            throw std::invalid_argument("apply_multiplier: symbol exceeds its sup bound");
        out.set_coeff(n, m * f.coeff(n));
    }
    return out;
}

RadialField regularized_propagate(const RadialOperator& B, const DilatedFilterPair& pair,
                                  const RadialField& f) {
    return B(apply_precondition(pair, f));
}

}  // namespace linfstab::multiplier
