#ifndef EXTREMAL_TAILS_HPP
#define EXTREMAL_TAILS_HPP

// Analytic tail models for the integrands on |x| > T.
//
// Every tail is written in the variable y = |x| >= T and falls into one of
// two forms:
//   SinSquared: f(y) = sin^2(pi y) r(y), r of one sign with |r| decreasing,
//               R(T) = int_T^inf r(y) dy in closed form.
//   Monotone:   f(y) = r(y) >= 0 decreasing, R(T) known up to an interval.
//
// For a frequency nu the integral int_T^inf f(y) e^{-i nu y} dy splits into
// components w * r(y) e^{-i nu' y}. A component with nu' = 0 contributes
// w R(T); otherwise one integration by parts gives
//   r(T) e^{-i nu' T} / (i nu')  with remainder at most |r(T)| / |nu'|,
// because r is monotone. When that bound is weaker than |R(T)| the component
// is reported as 0 +- |w R(T)|.
//
// A SinSquared envelope may declare a leading term: r(y) = leading / y^2 + q(y)
// with q monotone. The leading part is integrated exactly,
//   int_T^inf e^{-i nu' y} / y^2 dy = E2(i nu' T) / T,
// and only q goes through the bound above. Near the band edge nu' -> 0 this
// replaces an O(1/(T^2 nu')) error by O(1/(T^3 nu')).

#include <complex>
#include <functional>

#include "extremal/quad.hpp"

namespace extremal::quad::tails {

struct Interval {
    double value = 0.0;
    double err = 0.0;
};

struct TailSide {
    enum class Form { SinSquared, Monotone };
    Form form;
    std::function<double(double)> envelope;           // r(y)
    std::function<Interval(double)> envelope_integral;  // R(T)
    double leading = 0.0;                               // coefficient of 1/y^2 in r
};

struct TailModel {
    TailSide negative;  // f(-y)
    TailSide positive;  // f(y)
};

TailModel model_for(TailKernel kernel);

/// Contribution of y >= T for one side, against e^{-i nu y}.
OscillatoryResult side_contribution(const TailSide& side, double T, double nu);

/// Both tails |x| > T of int f(x) e^{-2 pi i x t} dx.
OscillatoryResult both_tails(const TailModel& model, double T, double t);

}  // namespace extremal::quad::tails

#endif  // EXTREMAL_TAILS_HPP
