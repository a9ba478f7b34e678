#ifndef FEYNKIT_RESIDUE_REFERENCE_HPP
#define FEYNKIT_RESIDUE_REFERENCE_HPP

#include "feynkit/graph.hpp"
#include "feynkit/rational.hpp"

#include <array>
#include <stdexcept>

namespace feynkit {

/// Closed-form reference values for the residue coordinates of the three
/// subdivision pullback forms nu_1, nu_2, nu_3 on the sunrise, as exact
/// rational functions of the kinematic parameters.  These are the target
/// of the verify-appendix sweep: residue_coordinates must reproduce them
/// exactly at every generic rational point.
inline std::array<Rational, 7> reference_residue_row(int which, const KinematicPoint& kin)
{
    const Rational m1 = kin.value("m1^2");
    const Rational m2 = kin.value("m2^2");
    const Rational m3 = kin.value("m3^2");
    const Rational q = kin.value("q1^2");

    const Rational f = 3 * m1 * m1 - 2 * m1 * m2 - 2 * m1 * m3 + 2 * m1 * q - m2 * m2 +
                       2 * m2 * m3 - 2 * m2 * q - m3 * m3 - 2 * m3 * q - q * q;
    if (f == 0 || m1 == 0 || m2 == 0 || m3 == 0 || q == 0)
        throw std::invalid_argument("reference row undefined at this kinematic point");

    std::array<Rational, 7> a{};
    if (which == 1) {
        const Rational d1 = 2 * m2 * q * f;
        a[0] = (m1 - m3) * (m1 - m2 + m3 + q) / (2 * d1);
        a[1] = -(m1 - m2 + m3 + q) * (-m1 + m2 + m3 + q) / d1;
        a[2] = Rational(-1) / (2 * m2 * q);
        a[3] = a[0] - a[2];
        a[4] = a[1] + a[2];
        a[5] = -m1 *
               (m1 * m1 * m1 - 3 * m1 * m1 * m2 - 3 * m1 * m1 * m3 + 3 * m1 * m1 * q +
                3 * m1 * m2 * m2 + 2 * m1 * m2 * m3 - 2 * m1 * m2 * q + 3 * m1 * m3 * m3 -
                2 * m1 * m3 * q + 3 * m1 * q * q - m2 * m2 * m2 + m2 * m2 * m3 - m2 * m2 * q +
                m2 * m3 * m3 + 10 * m2 * m3 * q + m2 * q * q - m3 * m3 * m3 - m3 * m3 * q +
                m3 * q * q + q * q * q) /
               d1;
        a[6] = (m1 * m1 * m1 - 2 * m1 * m1 * m2 - 2 * m1 * m1 * m3 + 2 * m1 * m1 * q +
                m1 * m2 * m2 + 2 * m1 * m2 * m3 - 2 * m1 * m2 * q + m1 * m3 * m3 -
                2 * m1 * m3 * q + m1 * q * q + 4 * m2 * m3 * q) /
               d1;
    } else if (which == 2) {
        const Rational d2 = 2 * q * f;
        a[0] = (2 * m1 - 2 * m3) / (2 * d2);
        a[1] = (-m1 * m1 - 4 * m1 * q + m2 * m2 - 2 * m2 * m3 + 2 * m2 * q + m3 * m3 +
                2 * m3 * q + q * q) /
               (m1 * d2);
        a[2] = Rational(-1) / (2 * m1 * q);
        a[3] = a[0] - a[2];
        a[4] = a[1] + a[2];
        a[5] = (m1 * m1 * m1 - m1 * m1 * m2 - 3 * m1 * m1 * m3 + m1 * m1 * q - m1 * m2 * m2 -
                2 * m1 * m2 * m3 - 10 * m1 * m2 * q + 3 * m1 * m3 * m3 + 2 * m1 * m3 * q -
                m1 * q * q + m2 * m2 * m2 - 3 * m2 * m2 * m3 + m2 * m2 * q + 3 * m2 * m3 * m3 +
                2 * m2 * m3 * q - m2 * q * q - m3 * m3 * m3 - 3 * m3 * m3 * q - 3 * m3 * q * q -
                q * q * q) /
               d2;
        a[6] = -(m1 * m1 - 2 * m1 * m3 - m2 * m2 - 2 * m2 * q + m3 * m3 - q * q) / d2;
    } else if (which == 3) {
        const Rational d3 = 2 * m3 * q * f;
        a[0] = (2 * m1 * m1 - m1 * m2 - m1 * m3 + 3 * m1 * q - m2 * m2 + 2 * m2 * m3 -
                2 * m2 * q - m3 * m3 - 2 * m3 * q - q * q) /
               (2 * d3);
        a[1] = (-m1 * m1 + 2 * m1 * m2 - 2 * m1 * m3 + 2 * m1 * q - m2 * m2 + 2 * m2 * m3 -
                2 * m2 * q - m3 * m3 - 2 * m3 * q - q * q) /
               d3;
        a[2] = Rational(-1) / (2 * m3 * q);
        a[3] = a[0] - a[2];
        a[4] = a[1] + a[2];
        a[5] = m1 *
               (m1 * m1 * m1 - 3 * m1 * m1 * m2 - m1 * m1 * m3 + m1 * m1 * q + 3 * m1 * m2 * m2 -
                2 * m1 * m2 * m3 + 2 * m1 * m2 * q - m1 * m3 * m3 - 10 * m1 * m3 * q -
                m1 * q * q - m2 * m2 * m2 + 3 * m2 * m2 * m3 - 3 * m2 * m2 * q -
                3 * m2 * m3 * m3 + 2 * m2 * m3 * q - 3 * m2 * q * q + m3 * m3 * m3 +
                m3 * m3 * q - m3 * q * q - q * q * q) /
               d3;
        a[6] = -m1 *
               (m1 * m1 - 2 * m1 * m2 + m2 * m2 - m3 * m3 - 2 * m3 * q - q * q) / d3;
    } else {
        throw std::invalid_argument("reference row index must be 1..3");
    }
    return a;
}

/// The printed rational dual matrix for the logarithmic mu-basis
/// (rows k = 1..5, columns i = 1..3); b'_{i,k} is entry (k,i).
inline std::array<std::array<Rational, 5>, 3> reference_mu_dual_matrix()
{
    const std::array<std::array<Rational, 3>, 5> printed = {{
        {Rational(1, 6), Rational(7, 24), Rational(-5, 24)},
        {Rational(1, 6), Rational(-11, 24), Rational(1, 24)},
        {Rational(0), Rational(1, 4), Rational(1, 4)},
        {Rational(1, 6), Rational(1, 24), Rational(-11, 24)},
        {Rational(1, 6), Rational(-5, 24), Rational(7, 24)},
    }};
    std::array<std::array<Rational, 5>, 3> b{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 5; ++k)
            b[i][k] = printed[k][i];
    return b;
}

} // namespace feynkit

#endif
