#ifndef FEYNKIT_PROJFORM_HPP
#define FEYNKIT_PROJFORM_HPP

#include "feynkit/graph.hpp"
#include "feynkit/mpoly.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace feynkit {

/// Which projective volume contraction the form multiplies.
///
/// `full` is the standard (N-1)-form Omega_G; `pair` is the degree-two
/// 1-form a_i da_j - a_j da_i used by the weight-zero witness.
struct OmegaKind {
    enum Kind { full, pair } kind = full;
    int i = 0, j = 0; // 1-based edge indices, pair only

    static OmegaKind full_form() { return {full, 0, 0}; }
    static OmegaKind pair_form(int i, int j) { return {pair, i, j}; }

    bool operator==(const OmegaKind& o) const { return kind == o.kind && i == o.i && j == o.j; }
};

/// Projective differential form sign * numerator * Omega / (Psi^a Xi^b)
/// attached to a graph.  Negative exponents put the corresponding power in
/// the numerator.
struct ProjForm {
    FeynmanGraph graph;
    MPoly numerator;
    int psi_exp = 0;
    int xi_exp = 0;
    int sign = 1;
    OmegaKind omega = OmegaKind::full_form();

    /// Degree contributed by the volume factor.
    int omega_degree() const { return omega.kind == OmegaKind::full ? graph.n_edges() : 2; }

    /// Well-definedness on projective space: the total homogeneity degree
    /// must vanish.
    void check_homogeneity() const
    {
        const int h = graph.loop_number();
        const auto vars = graph.edge_vars();
        if (!numerator.is_homogeneous_in(vars))
            throw std::invalid_argument("numerator not homogeneous in edge variables");
        const int num_deg = numerator.is_zero() ? 0 : numerator.degree_in(vars);
        if (num_deg + omega_degree() != psi_exp * h + xi_exp * (h + 1))
            throw std::invalid_argument("projective form is not degree homogeneous");
    }
};

/// Feynman integrand of G in d space-time dimensions as a ProjForm:
/// Omega / (Psi^a Xi^b) with a = (h+1)d/2 - N and b = N - h d/2.
inline ProjForm feynman_integrand(const FeynmanGraph& g, int d, const MandelstamDictionary&)
{
    g.validate();
    const int n = g.n_edges();
    const int h = g.loop_number();
    if (n < 2)
        throw std::invalid_argument("degenerate graph: fewer than two edges");
    if (((h + 1) * d) % 2 != 0 || (h * d) % 2 != 0)
        throw std::invalid_argument("dimension parity");
    ProjForm f;
    f.graph = g;
    f.numerator = MPoly::constant(1);
    f.psi_exp = ((h + 1) * d) / 2 - n;
    f.xi_exp = n - (h * d) / 2;
    f.sign = 1;
    f.check_homogeneity();
    return f;
}

/// Pullback of the Feynman integrand of the subdivided graph G_s(I) in
/// d_sub dimensions to a form on G itself:
///   (-1)^K a_1^{k_1}...a_N^{k_N} Psi^{z1} Xi^{z2} omega_G(d_G),
/// with z1 = K - (h+1)(d_sub-d_G)/2 and z2 = h(d_sub-d_G)/2 - K.
inline ProjForm subdivision_pullback(const FeynmanGraph& g, const SubdivisionSpec& spec, int d_sub,
                                     int d_g, const MandelstamDictionary& mandelstam)
{
    spec.validate(g);
    const int h = g.loop_number();
    const int k = spec.total();
    const int dd = d_sub - d_g;
    if (((h + 1) * dd) % 2 != 0 || (h * dd) % 2 != 0)
        throw std::invalid_argument("dimension parity");
    const int z1 = k - ((h + 1) * dd) / 2;
    const int z2 = (h * dd) / 2 - k;

    ProjForm base = feynman_integrand(g, d_g, mandelstam);
    ProjForm f;
    f.graph = g;
    Monomial mono;
    for (int i = 0; i < g.n_edges(); ++i)
        if (spec.counts[i] > 0)
            mono.exps.emplace_back(g.edge_var(i), spec.counts[i]);
    f.numerator = MPoly::monomial(mono, Rational(1));
    f.sign = (k % 2 == 0) ? 1 : -1;
    f.psi_exp = base.psi_exp - z1;
    f.xi_exp = base.xi_exp - z2;
    f.check_homogeneity();
    return f;
}

/// The named forms on the sunrise: the d=2 integrand, the basis of
/// subdivision pullbacks, the weight-zero witness and the logarithmic
/// mu-forms.
inline std::map<std::string, ProjForm> sunrise_catalog(const MandelstamDictionary& mandelstam)
{
    const FeynmanGraph g = sunrise_graph();
    std::map<std::string, ProjForm> cat;

    cat["omega"] = feynman_integrand(g, 2, mandelstam);
    cat["eta"] = subdivision_pullback(g, {{1, 0, 0}}, 2, 2, mandelstam);
    cat["nu1"] = subdivision_pullback(g, {{1, 2, 0}}, 4, 2, mandelstam);
    cat["nu2"] = subdivision_pullback(g, {{2, 0, 1}}, 4, 2, mandelstam);
    cat["nu3"] = subdivision_pullback(g, {{0, 1, 2}}, 4, 2, mandelstam);

    const MPoly xi = symanzik_second(g, mandelstam);
    const MPoly a1 = MPoly::variable(alpha_var(1));
    const MPoly a2 = MPoly::variable(alpha_var(2));
    const MPoly a3 = MPoly::variable(alpha_var(3));
    const MPoly m1 = MPoly::variable(var("m1^2"));
    const MPoly m2 = MPoly::variable(var("m2^2"));
    const MPoly m3 = MPoly::variable(var("m3^2"));
    const MPoly d1 = xi.derivative(alpha_var(1));
    const MPoly d2 = xi.derivative(alpha_var(2));
    const MPoly d3 = xi.derivative(alpha_var(3));

    auto make = [&](const MPoly& num, int xi_exp, OmegaKind kind) {
        ProjForm f;
        f.graph = g;
        f.numerator = num;
        f.psi_exp = 0;
        f.xi_exp = xi_exp;
        f.sign = 1;
        f.omega = kind;
        f.check_homogeneity();
        return f;
    };

    cat["mu1"] = make(m1 * a1 * (d2 - d3), 2, OmegaKind::full_form());
    cat["mu2"] = make(m2 * a2 * (d3 - d1), 2, OmegaKind::full_form());
    cat["mu3"] = make(m3 * a3 * (d1 - d2), 2, OmegaKind::full_form());
    cat["omega0"] = make(m3 * m3 * a3.pow(4), 2, OmegaKind::pair_form(1, 2));
    return cat;
}

} // namespace feynkit

#endif
