#pragma once

#include <functional>

#include "linfstab/core.hpp"

namespace linfstab::multiplier {

enum class FilterShape {
    Triangle,  // max{1 - |x|, 0}
    Gaussian,  // e^{-pi |x|^2}
};

/// Radially symmetric filter shape in R^d with a normalization constant
/// chosen so the normalized profile has unit mass.
class FilterProfile {
public:
    static FilterProfile triangle(int dimension);
    static FilterProfile gaussian(int dimension);

    FilterShape shape() const { return shape_; }
    int dimension() const { return dimension_; }
    double normalization() const { return normalization_; }

    /// Shape value without normalization; raw(0) = 1 for both shapes.
    double raw(double r) const;
    /// normalization * raw(r); integrates to 1 over R^d.
    double normalized(double r) const;
    /// Radius beyond which the profile is zero (Triangle) or negligible
    /// below 1e-15 (Gaussian).
    double support_radius() const;

private:
    FilterProfile(FilterShape s, int d, double norm)
        : shape_(s), dimension_(d), normalization_(norm) {}

    FilterShape shape_;
    int dimension_;
    double normalization_;
};

/// Surface area of the unit sphere in R^d.
double sphere_surface_area(int dimension);

/// Dilated pair (k_alpha, h_beta):
///   k_alpha(x) = alpha^{-d} k(x/alpha)   with k mass-normalized,
///   h_beta(x)  = h(beta x)               with the raw shape, h_beta(0) = h(0) = 1.
class DilatedFilterPair {
public:
    DilatedFilterPair(FilterProfile k, FilterProfile h, double alpha, double beta);

    const FilterProfile& k_profile() const { return k_; }
    const FilterProfile& h_profile() const { return h_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

    double k_dilated(double r) const;
    double h_dilated(double r) const;

    /// Cumulative first moment K(t) = int_0^t tau k_alpha(tau) dtau (closed form,
    /// d = 3). Saturates once t exceeds the dilated support.
    double k_cumulative(double t) const;

    double k_support() const { return alpha_ * k_.support_radius(); }
    double h_support() const { return h_.support_radius() / beta_; }

    // Filter norms used by the operator bounds. L1 of k_alpha is 1 by
    // normalization; L2 norms scale as alpha^{-d/2}.
    double k_l1_norm() const { return 1.0; }
    double k_l2_norm() const;
    double k_sup_norm() const { return k_dilated(0.0); }
    double h_l2_norm() const;
    double h_sup_norm() const { return 1.0; }

private:
    FilterProfile k_, h_;
    double alpha_, beta_;
};

/// Builds the dilated pair; rejects nonpositive scales.
DilatedFilterPair dilate_filters(const FilterProfile& k, const FilterProfile& h,
                                 double alpha, double beta);

/// Bounded Fourier symbol mu(xi) with its sup bound.
struct MultiplierSpec {
    std::function<double(double)> symbol;
    double sup_bound;
};

/// The time-t wave symbol cos(2 pi |xi| t).
MultiplierSpec wave_symbol(double t);

/// Preconditioner T_{alpha,beta} f = k_alpha * (h_beta f) for radially
/// symmetric fields in R^3, via the 1D reduction of the radial convolution:
///   (k*g)(r) = (2 pi / r) int s g(s) [K(r+s) - K(|r-s|)] ds,   r > 0,
///   (k*g)(0) = 4 pi int s^2 g(s) k_alpha(s) ds.
/// The grid must cover the support of h_beta f plus the support of k_alpha;
/// otherwise rejected with the required r_max in the message.
RadialField apply_precondition(const DilatedFilterPair& pair, const RadialField& f);

/// Coefficient-wise application: out_n = mu(n) c_n.
FourierSignal apply_multiplier(const MultiplierSpec& mu, const FourierSignal& f);

using RadialOperator = std::function<RadialField(const RadialField&)>;

/// B_{alpha,beta} f = B(T_{alpha,beta} f); the filters always act first.
RadialField regularized_propagate(const RadialOperator& B, const DilatedFilterPair& pair,
                                  const RadialField& f);

}  // namespace linfstab::multiplier
