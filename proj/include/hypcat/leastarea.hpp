#pragma once

#include "hypcat/catenary.hpp"
#include "hypcat/quad.hpp"

namespace hypcat::leastarea {

using catenary::CatenoidParam;

struct AreaComparison {
    double a = 0.0;
    double y1 = 0.0;
    double x1 = 0.0;          // axial half-width rho(a, y1)
    double band_area = 0.0;   // catenoid band between the symmetric planes
    double disks_area = 0.0;  // the two spanning geodesic disks
    bool band_smaller = false;
};

/// Area-deficit function: int_a^inf sinh t (sinh 2t / sqrt(sinh^2 2t -
/// sinh^2 2a) - 1) dt. Bounded by K cosh a for every a > 0.
double area_deficit(const CatenoidParam& a,
                    const quad::Tolerance& tol = quad::default_tolerance());

/// The elliptic-integral constant int_0^1 x^-2 (1/sqrt(1-x^4) - 1) dx,
/// strictly between 0 and 1.
double K_const(const quad::Tolerance& tol = quad::default_tolerance());

/// Least-area threshold acosh(1 / (1 - K)); cached.
double a_l_const();

/// Area of the catenoid band between the neck and the circle y = y1 > a.
double band_area(const CatenoidParam& a, double y1,
                 const quad::Tolerance& tol = quad::default_tolerance());

/// Total area of the two geodesic disks of radius y1: 4 pi (cosh y1 - 1).
double disk_pair_area(double y1);

AreaComparison compare_areas(const CatenoidParam& a, double y1);

/// cosh(varrho(a_c)) - 1: the circle-gap ratio threshold for the
/// double-catenoid existence remark.
double oliveira_soret_delta();

}  // namespace hypcat::leastarea
