#ifndef FEYNKIT_SUNRISE_HPP
#define FEYNKIT_SUNRISE_HPP

#include "feynkit/blowup.hpp"
#include "feynkit/graded_solve.hpp"
#include "feynkit/graph.hpp"
#include "feynkit/linalg.hpp"
#include "feynkit/mpoly.hpp"
#include "feynkit/projform.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace feynkit {

/// A rational point on the sunrise cubic, either on the strict transform
/// of a coordinate line (stored projectively) or on an exceptional
/// divisor (stored in its blow-up chart).
struct CurvePoint {
    int index = 0; // P_1..P_6
    bool exceptional = false;
    std::array<Rational, 3> projective{Rational(0), Rational(0), Rational(0)};
    std::string chart_id;
    Rational chart_u, chart_v; // chart coordinates for exceptional points

    bool operator==(const CurvePoint& o) const
    {
        if (exceptional != o.exceptional)
            return false;
        if (exceptional)
            return chart_id == o.chart_id && chart_u == o.chart_u && chart_v == o.chart_v;
        // compare as projective points
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (projective[i] * o.projective[j] != projective[j] * o.projective[i])
                    return false;
        return true;
    }
};

namespace sunrise_detail {

/// Fixture for one exceptional divisor: the blow-up chart that contains
/// its intersection with the curve, with the chart coordinate that cuts
/// the divisor and the coordinate running along it.
struct ExceptionalChart {
    BlowupChart chart;
    int divisor_var;  // beta index whose vanishing is the exceptional divisor
    int along_var;    // beta index running along the divisor
    std::array<int, 3> vertex; // blown-up vertex in P^2
};

/// Exceptional divisors E_1, E_2, E_3 over the vertices [0:1:0], [0:0:1],
/// [1:0:0]; this is the unique assignment for which consecutive boundary
/// points share an affine open of the blow-up.
inline const std::array<ExceptionalChart, 3>& exceptional_charts()
{
    static const std::array<ExceptionalChart, 3> charts = {
        // locus {1,3}: alpha = (u v, 1, v) with (u,v) = (b1,b3)
        ExceptionalChart{BlowupChart{3, {{1, 3}}, {3, 2}}, 3, 1, {0, 1, 0}},
        // locus {1,2}: alpha = (u, u v, 1) with (u,v) = (b1,b2)
        ExceptionalChart{BlowupChart{3, {{1, 2}}, {1, 3}}, 1, 2, {0, 0, 1}},
        // locus {2,3}: alpha = (1, u, u v) with (u,v) = (b2,b3)
        ExceptionalChart{BlowupChart{3, {{2, 3}}, {2, 1}}, 2, 3, {1, 0, 0}},
    };
    return charts;
}

inline MPoly specialized_xi(const KinematicPoint& kin)
{
    static const MPoly xi = symanzik_second(sunrise_graph(), sunrise_mandelstam());
    return xi.eval_partial(kin.as_var_map());
}

inline MPoly sunrise_psi()
{
    static const MPoly psi = symanzik_first(sunrise_graph());
    return psi;
}

inline std::vector<VarId> avars()
{
    return {alpha_var(1), alpha_var(2), alpha_var(3)};
}

/// Divide by the given variable, throwing when not exactly divisible.
inline MPoly exact_divide_var(const MPoly& p, VarId v)
{
    MPoly q;
    for (const auto& [m, c] : p.terms()) {
        bool found = false;
        Monomial n;
        for (const auto& [w, e] : m.exps) {
            if (w == v) {
                found = true;
                if (e > 1)
                    n.exps.emplace_back(w, e - 1);
            } else {
                n.exps.emplace_back(w, e);
            }
        }
        if (!found)
            throw std::logic_error("polynomial not divisible by " + var_name(v));
        q += MPoly::monomial(n, c);
    }
    return q;
}

/// Residue of the univariate rational form (num/den) dt at a simple root
/// t0 of den.
inline Rational simple_pole_residue(const MPoly& num, const MPoly& den, VarId t, const Rational& t0)
{
    std::map<VarId, Rational> pt{{t, t0}};
    if (den.eval(pt) != 0)
        throw std::invalid_argument("chart failure: not a pole");
    const Rational dprime = den.derivative(t).eval(pt);
    if (dprime == 0)
        throw std::invalid_argument("chart failure: pole is not simple");
    return num.eval(pt) / dprime;
}

} // namespace sunrise_detail

/// Smoothness of the specialized cubic: the degree-4 graded piece of the
/// Jacobian ideal must fill the whole 15-dimensional space.
inline bool is_smooth_cubic(const KinematicPoint& kin)
{
    using namespace sunrise_detail;
    const MPoly xi = specialized_xi(kin);
    const auto vars = avars();
    std::vector<MPoly> gens;
    for (VarId v : vars)
        gens.push_back(xi.derivative(v));
    const auto deg2 = detail::monomial_basis(vars, 2);
    const auto deg4 = detail::monomial_basis(vars, 4);
    std::map<std::vector<std::pair<VarId, int>>, std::size_t> row_of;
    for (std::size_t i = 0; i < deg4.size(); ++i)
        row_of[deg4[i].exps] = i;
    QMatrix m(deg4.size(), deg2.size() * gens.size());
    std::size_t col = 0;
    for (const MPoly& g : gens)
        for (const Monomial& mono : deg2) {
            const MPoly prod = MPoly::monomial(mono, Rational(1)) * g;
            for (const auto& [mm, c] : prod.terms())
                m.at(row_of.at(mm.exps), col) = c;
            ++col;
        }
    return rank(m) == deg4.size();
}

/// The six boundary points P_1..P_6 on the sunrise cubic.  P_{2i} is the
/// third intersection of the curve with the coordinate line {a_i = 0};
/// P_{2i-1} lies on the exceptional divisor E_i, computed in its blow-up
/// chart.  Errors on degenerate kinematics.
inline std::vector<CurvePoint> boundary_points(const KinematicPoint& kin)
{
    using namespace sunrise_detail;
    const Rational c1 = kin.value("m1^2"), c2 = kin.value("m2^2"), c3 = kin.value("m3^2");
    if (c1 == 0 || c2 == 0 || c3 == 0 || kin.value("q1^2") == 0)
        throw std::invalid_argument("degenerate kinematics: vanishing mass or momentum");
    if (!is_smooth_cubic(kin))
        throw std::invalid_argument("degenerate kinematics: cubic is not smooth");

    const MPoly xi = specialized_xi(kin);
    std::vector<CurvePoint> pts(6);

    // Line points: on {a_i = 0} the cubic factors into the two blown-up
    // vertices and one further rational point.
    auto line_point = [&](int i, const std::array<Rational, 3>& coords) {
        CurvePoint p;
        p.index = 2 * i;
        p.exceptional = false;
        p.projective = coords;
        p.chart_id = "line_a" + std::to_string(i);
        return p;
    };
    pts[1] = line_point(1, {Rational(0), -c3, c2});
    pts[3] = line_point(2, {-c3, Rational(0), c1});
    pts[5] = line_point(3, {-c2, c1, Rational(0)});

    // Exceptional points: substitute the chart map, strip the exceptional
    // factor, and solve on the divisor.
    for (int i = 0; i < 3; ++i) {
        const ExceptionalChart& ec = exceptional_charts()[i];
        const auto sub = ec.chart.substitution();
        MPoly xit = xi.substitute(sub);
        const VarId w = var(BlowupChart::beta_name(ec.divisor_var));
        const VarId s = var(BlowupChart::beta_name(ec.along_var));
        xit = exact_divide_var(xit, w); // strict transform
        const MPoly on_divisor = xit.eval_partial({{w, Rational(0)}});
        // on_divisor is linear in the along coordinate
        const Rational lin = on_divisor.derivative(s).constant_value();
        const Rational cst = on_divisor.eval_partial({{s, Rational(0)}}).constant_value();
        if (lin == 0)
            throw std::invalid_argument("degenerate kinematics: exceptional intersection at infinity");
        CurvePoint p;
        p.index = 2 * i + 1;
        p.exceptional = true;
        p.chart_id = ec.chart.id();
        const Rational s0 = -cst / lin;
        if (ec.divisor_var < ec.along_var) {
            p.chart_u = Rational(0);
            p.chart_v = s0;
        } else {
            p.chart_u = s0;
            p.chart_v = Rational(0);
        }
        p.projective = {Rational(ec.vertex[0]), Rational(ec.vertex[1]), Rational(ec.vertex[2])};
        pts[2 * i] = p;
    }

    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b)
            if (pts[a] == pts[b])
                throw std::invalid_argument("degenerate kinematics: boundary points collide");
    return pts;
}

/// Result of the pole-order reduction of a form A Omega / Xi^2 against
/// the second-kind representative: A = c_eta * (-a1 Psi) + sum B_i d_i Xi
/// with c_omega = div B the order-one remainder.
struct GriffithsReduction {
    Rational c_eta{0};
    Rational c_omega{0};
    std::vector<MPoly> b; // B_1, B_2, B_3 (empty for pole order 1)
    bool pole_order_one = false;

    /// Components of the correction 1-form Theta with kappa = Theta/Xi.
    std::array<MPoly, 3> theta() const
    {
        const MPoly a1 = MPoly::variable(alpha_var(1));
        const MPoly a2 = MPoly::variable(alpha_var(2));
        const MPoly a3 = MPoly::variable(alpha_var(3));
        if (pole_order_one)
            return {MPoly(), MPoly(), MPoly()};
        return {a3 * b[1] - a2 * b[2], a1 * b[2] - a3 * b[0], a2 * b[0] - a1 * b[1]};
    }
};

/// Reduce a sunrise ProjForm with xi_exp in {1,2} and Psi powers in the
/// numerator to c_eta * eta_G + c_omega * omega_G plus an exact form.
inline GriffithsReduction griffiths_reduce(const ProjForm& f, const KinematicPoint& kin)
{
    using namespace sunrise_detail;
    if (f.omega.kind != OmegaKind::full)
        throw std::invalid_argument("griffiths_reduce expects a full projective form");
    if (f.xi_exp != 1 && f.xi_exp != 2)
        throw std::invalid_argument("unsupported pole order");
    if (f.psi_exp > 0)
        throw std::invalid_argument("unsupported Psi pole");
    f.check_homogeneity();

    const auto point = kin.as_var_map();
    MPoly a_total = Rational(f.sign) * f.numerator * sunrise_psi().pow(-f.psi_exp);
    a_total = a_total.eval_partial(point);

    GriffithsReduction red;
    if (f.xi_exp == 1) {
        red.pole_order_one = true;
        red.c_omega = a_total.constant_value();
        return red;
    }

    const MPoly xi = specialized_xi(kin);
    const MPoly a_eta = -(MPoly::variable(alpha_var(1)) * sunrise_psi());
    std::vector<MPoly> gens;
    for (VarId v : avars())
        gens.push_back(xi.derivative(v));

    const GradedSolveResult sol = graded_solve(a_total, gens, {a_eta}, 3, kin, avars());
    if (sol.residual)
        throw std::invalid_argument("not smooth: numerator is outside the graded span");
    red.c_eta = sol.complement_coeffs[0];
    red.b = sol.combination;
    for (int i = 0; i < 3; ++i)
        red.c_omega += red.b[i].derivative(avars()[i]).constant_value();
    return red;
}

/// Coordinates of a residue class in the basis {df_2..df_6, res eta_G,
/// res omega_G}, together with the reduction witness.
struct ResidueDecomposition {
    std::array<Rational, 7> a{};
    GriffithsReduction witness;
    std::array<Rational, 6> point_data{}; // residues of kappa on the divisor at P_1..P_6
    std::array<Rational, 3> dlog_constants{}; // exceptional dlog coefficients (hexagon class)
};

namespace sunrise_detail {

/// Residue at P_{2i} of the restriction of Theta/Xi to the coordinate
/// line {a_i = 0}.
inline Rational line_point_residue(const std::array<MPoly, 3>& theta, const MPoly& xi, int i,
                                   const CurvePoint& p)
{
    // Parametrizations (0,t,1), (t,0,1), (t,1,0); the pulled-back component
    // is theta_j dt for the free coordinate j.
    const VarId t = var("t_line");
    std::map<VarId, MPoly> sub;
    int free_var = 0;
    if (i == 1) {
        sub = {{alpha_var(1), MPoly()},
               {alpha_var(2), MPoly::variable(t)},
               {alpha_var(3), MPoly::constant(1)}};
        free_var = 2;
    } else if (i == 2) {
        sub = {{alpha_var(1), MPoly::variable(t)},
               {alpha_var(2), MPoly()},
               {alpha_var(3), MPoly::constant(1)}};
        free_var = 1;
    } else {
        sub = {{alpha_var(1), MPoly::variable(t)},
               {alpha_var(2), MPoly::constant(1)},
               {alpha_var(3), MPoly()}};
        free_var = 1;
    }
    // affine coordinate of the point on this line
    Rational t0;
    if (i == 1)
        t0 = p.projective[1] / p.projective[2];
    else if (i == 2)
        t0 = p.projective[0] / p.projective[2];
    else
        t0 = p.projective[0] / p.projective[1];

    const MPoly num = theta[free_var - 1].substitute(sub);
    const MPoly den = xi.substitute(sub);
    return simple_pole_residue(num, den, t, t0);
}

/// Residue at P_{2i-1} of the regular part of the pulled-back correction
/// form restricted to the exceptional divisor.  Also returns the constant
/// coefficient of the dlog part as a consistency witness.
inline std::pair<Rational, Rational> exceptional_point_residue(const std::array<MPoly, 3>& theta,
                                                               const MPoly& xi,
                                                               const ExceptionalChart& ec,
                                                               const CurvePoint& p)
{
    const auto sub = ec.chart.substitution();
    const VarId w = var(BlowupChart::beta_name(ec.divisor_var));
    const VarId s = var(BlowupChart::beta_name(ec.along_var));

    // Pull back kappa = Theta/Xi: component along the divisor coordinate.
    MPoly along_num;
    MPoly dlog_num;
    for (int i = 0; i < 3; ++i) {
        const MPoly mi = sub.at(alpha_var(i + 1));
        along_num += theta[i].substitute(sub) * mi.derivative(s);
        dlog_num += theta[i].substitute(sub) * mi.derivative(w);
    }
    const MPoly xit = exact_divide_var(xi.substitute(sub), w);

    // ds component: numerator must carry the exceptional factor.
    const MPoly along_reduced = exact_divide_var(along_num, w);
    const MPoly along_on_divisor = along_reduced.eval_partial({{w, Rational(0)}});
    const MPoly xit_on_divisor = xit.eval_partial({{w, Rational(0)}});

    const Rational s0 = (ec.divisor_var < ec.along_var) ? p.chart_v : p.chart_u;
    const Rational res = simple_pole_residue(along_on_divisor, xit_on_divisor, s, s0);

    // dlog coefficient: dlog_num/(w xit) restricted to w=0 must be a
    // constant multiple of dlog w; anything else would be a pole of the
    // reduced form along the divisor.
    const MPoly dlog_on_divisor = dlog_num.eval_partial({{w, Rational(0)}});
    const MPoly constraint = dlog_on_divisor.derivative(s) * xit_on_divisor -
                             dlog_on_divisor * xit_on_divisor.derivative(s);
    if (!constraint.is_zero())
        throw std::logic_error("chart failure: exceptional dlog coefficient is not constant");
    Rational dlog_const(0);
    const MPoly num0 = dlog_on_divisor.eval_partial({{s, Rational(0)}});
    const MPoly den0 = xit_on_divisor.eval_partial({{s, Rational(0)}});
    if (!den0.is_zero() && den0.constant_value() != 0)
        dlog_const = num0.constant_value() / den0.constant_value();
    return {res, dlog_const};
}

} // namespace sunrise_detail

/// Full 7-component coordinates of res(f) in {df_2..df_6, res eta_G,
/// res omega_G}.  Components 6,7 come from the graded reduction; 1..5
/// from the residues of the correction form on the boundary divisor,
/// normalized by eliminating the df_1 coefficient.
inline ResidueDecomposition residue_coordinates(const ProjForm& f, const KinematicPoint& kin)
{
    using namespace sunrise_detail;
    ResidueDecomposition dec;
    dec.witness = griffiths_reduce(f, kin);
    dec.a[5] = dec.witness.c_eta;
    dec.a[6] = dec.witness.c_omega;
    if (dec.witness.pole_order_one)
        return dec;

    const auto points = boundary_points(kin);
    const MPoly xi = specialized_xi(kin);
    const auto theta_sym = dec.witness.theta();
    std::array<MPoly, 3> theta;
    for (int i = 0; i < 3; ++i)
        theta[i] = theta_sym[i].eval_partial(kin.as_var_map());

    for (int i = 1; i <= 3; ++i) {
        dec.point_data[2 * i - 1] = line_point_residue(theta, xi, i, points[2 * i - 1]);
        auto [res, dlog] =
            exceptional_point_residue(theta, xi, exceptional_charts()[i - 1], points[2 * i - 2]);
        dec.point_data[2 * i - 2] = res;
        dec.dlog_constants[i - 1] = dlog;
    }

    for (int j = 0; j < 5; ++j)
        dec.a[j] = dec.point_data[j + 1] - dec.point_data[0];
    return dec;
}

/// Dual coefficient matrix b_{i,k} (k = 1..5) for three residue rows:
/// the unique solution of sum_k a_{j,k} b_{i,k} = delta_{ij} lying in the
/// row space of the 3x5 block, with b_{i,6} = b_{i,7} = 0.
struct DualCoefficients {
    std::array<std::array<Rational, 5>, 3> b{};
    bool certificate = false; // duality equations re-verified exactly
    std::size_t solution_space_dim = 0;
};

inline DualCoefficients dual_coefficients(const std::vector<ResidueDecomposition>& rows,
                                          const KinematicPoint&)
{
    if (rows.size() != 3)
        throw std::invalid_argument("expected the three residue rows");
    QMatrix m(3, 5);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 5; ++k)
            m.at(j, k) = rows[j].a[k];
    if (rank(m) != 3)
        throw std::invalid_argument("degenerate kinematics: residue block is rank deficient");

    DualCoefficients dual;
    dual.solution_space_dim = 5 - 3;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Rational> e(3, Rational(0));
        e[i] = 1;
        const auto x = row_space_solution(m, e);
        for (std::size_t k = 0; k < 5; ++k)
            dual.b[i][k] = x[k];
    }
    dual.certificate = true;
    for (std::size_t i = 0; i < 3 && dual.certificate; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Rational s(0);
            for (std::size_t k = 0; k < 5; ++k)
                s += rows[j].a[k] * dual.b[i][k];
            if (s != ((i == j) ? 1 : 0))
                dual.certificate = false;
        }
    return dual;
}

/// Verify that an externally supplied 5x3 matrix (columns = b_i) solves
/// the same duality system exactly.
inline bool verify_duality(const std::vector<ResidueDecomposition>& rows,
                           const std::array<std::array<Rational, 5>, 3>& b_rows)
{
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Rational s(0);
            for (std::size_t k = 0; k < 5; ++k)
                s += rows[j].a[k] * b_rows[i][k];
            if (s != ((i == j) ? 1 : 0))
                return false;
        }
    return true;
}

/// One row of the coaction table: a motivic-side label paired with its
/// de Rham-side coefficient vector over
///   {K1 L, K2eta L, Idr(G, G\e3), F(P1,P2) L, ..., F(P1,P6) L}.
struct CoactionRow {
    std::string motivic_label;
    std::array<Rational, 8> coeffs{};
};

struct CoactionTable {
    std::string basis; // "nu" or "mu"
    bool reduced = false;
    std::vector<std::string> columns;
    std::vector<CoactionRow> rows;
};

/// Assemble the coaction table at a generic kinematic point, in the
/// subdivision (nu) or logarithmic (mu) de Rham basis.
inline CoactionTable coaction_table(const KinematicPoint& kin, const std::string& basis)
{
    if (basis != "nu" && basis != "mu")
        throw std::invalid_argument("basis must be 'nu' or 'mu'");
    const auto cat = sunrise_catalog(sunrise_mandelstam());

    std::vector<ResidueDecomposition> rows;
    const char* names_nu[3] = {"nu1", "nu2", "nu3"};
    const char* names_mu[3] = {"mu1", "mu2", "mu3"};
    for (int i = 0; i < 3; ++i)
        rows.push_back(residue_coordinates(cat.at(basis == "nu" ? names_nu[i] : names_mu[i]), kin));
    const DualCoefficients dual = dual_coefficients(rows, kin);
    if (!dual.certificate)
        throw std::logic_error("duality certificate failed");

    CoactionTable table;
    table.basis = basis;
    table.columns = {"K1*L", "K2eta*L", "Idr(G,G\\e3)", "F(P1,P2)*L",
                     "F(P1,P3)*L", "F(P1,P4)*L", "F(P1,P5)*L", "F(P1,P6)*L"};

    CoactionRow r1{"I[G]", {}};
    r1.coeffs[0] = 1;
    CoactionRow r2{"I[G_s(e1)]", {}};
    r2.coeffs[1] = 1;
    CoactionRow r3{"I[G\\e3]", {}};
    r3.coeffs[2] = 1;
    table.rows = {r1, r2, r3};

    const Rational m1 = kin.value("m1^2"), m2 = kin.value("m2^2"), m3 = kin.value("m3^2");
    const bool equal_masses = (m1 == m2 && m2 == m3);
    std::vector<std::string> labels;
    if (basis == "nu") {
        labels = {"I[G_s(e1,e2^2)]", "I[G_s(e1^2,e3)]", "I[G_s(e2,e3^2)]"};
    } else {
        auto log_label = [&](const Rational& num, const Rational& den) {
            return "log(" + rational_to_string(num / den) + ")";
        };
        labels = {log_label(m3, m2), log_label(m1, m3), log_label(m2, m1)};
    }

    for (int i = 0; i < 3; ++i) {
        CoactionRow row{labels[i], {}};
        for (int k = 0; k < 5; ++k)
            row.coeffs[3 + k] = dual.b[i][k];
        if (basis == "mu" && equal_masses) {
            table.reduced = true; // motivic side is log(1); row drops
            continue;
        }
        table.rows.push_back(row);
    }
    return table;
}

/// Weight-zero witness: the pullback of the omega0 form to the chart
/// alpha = (u, u v, 1), restricted to the exceptional divisor u = 0, must
/// equal dv/(1+v)^2 identically in the kinematic symbols.
struct Weight0Result {
    bool holds = false;
    std::string witness;
};

inline Weight0Result weight0_check(const std::optional<KinematicPoint>& kin = std::nullopt)
{
    const auto cat = sunrise_catalog(sunrise_mandelstam());
    const ProjForm& w0 = cat.at("omega0");

    const VarId u = var("b1"), v = var("b2");
    const std::map<VarId, MPoly> sub = {{alpha_var(1), MPoly::variable(u)},
                                        {alpha_var(2), MPoly::variable(u) * MPoly::variable(v)},
                                        {alpha_var(3), MPoly::constant(1)}};

    // pair form a1 da2 - a2 da1 pulls back to u^2 dv
    const MPoly m1p = sub.at(alpha_var(1));
    const MPoly m2p = sub.at(alpha_var(2));
    MPoly pair_dv = m1p * m2p.derivative(v) - m2p * m1p.derivative(v);
    MPoly pair_du = m1p * m2p.derivative(u) - m2p * m1p.derivative(u);

    MPoly num = Rational(w0.sign) * w0.numerator.substitute(sub);
    MPoly xi = symanzik_second(sunrise_graph(), sunrise_mandelstam()).substitute(sub);
    if (kin) {
        const auto pt = kin->as_var_map();
        num = num.eval_partial(pt);
        xi = xi.eval_partial(pt);
        pair_dv = pair_dv.eval_partial(pt);
        pair_du = pair_du.eval_partial(pt);
    }
    if (!pair_du.is_zero())
        throw std::logic_error("unexpected du component on the exceptional chart");

    // strip the exceptional factor u^2 from numerator and denominator
    MPoly total_num = num * pair_dv; // coefficient of dv, over xi^2
    MPoly den = xi * xi;
    total_num = sunrise_detail::exact_divide_var(sunrise_detail::exact_divide_var(total_num, u), u);
    den = sunrise_detail::exact_divide_var(sunrise_detail::exact_divide_var(den, u), u);

    const MPoly num0 = total_num.eval_partial({{u, Rational(0)}});
    const MPoly den0 = den.eval_partial({{u, Rational(0)}});

    // target dv/(1+v)^2: cross-multiplied identity num0*(1+v)^2 == den0
    const MPoly one_plus_v = MPoly::constant(1) + MPoly::variable(v);
    Weight0Result res;
    res.holds = !num0.is_zero() && (num0 * one_plus_v * one_plus_v == den0);
    res.witness = res.holds ? "dv/(1+v)^2"
                            : "(" + num0.to_string() + ") dv / (" + den0.to_string() + ")";
    return res;
}

} // namespace feynkit

#endif
