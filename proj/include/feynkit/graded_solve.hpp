#ifndef FEYNKIT_GRADED_SOLVE_HPP
#define FEYNKIT_GRADED_SOLVE_HPP

#include "feynkit/graph.hpp"
#include "feynkit/linalg.hpp"
#include "feynkit/mpoly.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace feynkit {

/// Outcome of a graded linear solve: target = sum B_i * gen_i + sum c_i *
/// complement_i, all over the rationals at a specialized kinematic point.
struct GradedSolveResult {
    std::vector<MPoly> combination;        // the B_i, in the edge variables
    std::vector<Rational> complement_coeffs; // the c_i
    bool residual = false;                 // true iff no solution exists

    MPoly reconstruct(const std::vector<MPoly>& generators,
                      const std::vector<MPoly>& complement) const
    {
        MPoly acc;
        for (std::size_t i = 0; i < combination.size(); ++i)
            acc += combination[i] * generators[i];
        for (std::size_t i = 0; i < complement_coeffs.size(); ++i)
            acc += complement_coeffs[i] * complement[i];
        return acc;
    }
};

namespace detail {

inline void enumerate_monomials(const std::vector<VarId>& vars, int degree, std::size_t idx,
                                Monomial& current, std::vector<Monomial>& out)
{
    if (idx + 1 == vars.size()) {
        Monomial m = current;
        if (degree > 0)
            m.exps.emplace_back(vars[idx], degree);
        std::sort(m.exps.begin(), m.exps.end());
        out.push_back(std::move(m));
        return;
    }
    for (int e = degree; e >= 0; --e) {
        Monomial saved = current;
        if (e > 0)
            current.exps.emplace_back(vars[idx], e);
        enumerate_monomials(vars, degree - e, idx + 1, current, out);
        current = saved;
    }
}

inline std::vector<Monomial> monomial_basis(const std::vector<VarId>& vars, int degree)
{
    if (vars.empty())
        throw std::invalid_argument("empty variable set");
    if (degree < 0)
        return {};
    std::vector<Monomial> out;
    Monomial cur;
    enumerate_monomials(vars, degree, 0, cur, out);
    return out;
}

} // namespace detail

/// Exact rational solve of target = sum B_i gen_i + sum c_i comp_i over
/// the degree-graded monomial basis in the given edge variables.  All
/// inputs must be homogeneous in `vars` once kinematic parameters are
/// specialized through `kin`; deg B_i = degree - deg gen_i.  An
/// inconsistent system sets the residual flag instead of throwing.
inline GradedSolveResult graded_solve(const MPoly& target, const std::vector<MPoly>& generators,
                                      const std::vector<MPoly>& complement, int degree,
                                      const KinematicPoint& kin, const std::vector<VarId>& vars)
{
    const auto point = kin.as_var_map();
    const MPoly t = target.eval_partial(point);

    std::vector<MPoly> gens, comps;
    for (const MPoly& g : generators)
        gens.push_back(g.eval_partial(point));
    for (const MPoly& c : complement)
        comps.push_back(c.eval_partial(point));

    if (!t.is_zero() && t.degree_in(vars) != degree)
        throw std::invalid_argument("graded_solve: target degree mismatch");
    if (!t.is_homogeneous_in(vars))
        throw std::invalid_argument("graded_solve: target not homogeneous");
    for (const MPoly& g : gens)
        if (!g.is_homogeneous_in(vars))
            throw std::invalid_argument("graded_solve: generator not homogeneous");
    for (const MPoly& c : comps) {
        if (!c.is_homogeneous_in(vars))
            throw std::invalid_argument("graded_solve: complement not homogeneous");
        if (!c.is_zero() && c.degree_in(vars) != degree)
            throw std::invalid_argument("graded_solve: complement degree mismatch");
    }

    const std::vector<Monomial> target_basis = detail::monomial_basis(vars, degree);
    std::map<std::vector<std::pair<VarId, int>>, std::size_t> row_of;
    for (std::size_t i = 0; i < target_basis.size(); ++i)
        row_of[target_basis[i].exps] = i;

    // Column layout: per generator, the monomial coefficients of its B_i;
    // then one column per complement element.
    std::vector<std::vector<Monomial>> b_bases;
    std::size_t ncols = 0;
    for (const MPoly& g : gens) {
        const int bdeg = degree - g.degree_in(vars);
        b_bases.push_back(bdeg < 0 ? std::vector<Monomial>{} : detail::monomial_basis(vars, bdeg));
        ncols += b_bases.back().size();
    }
    ncols += comps.size();

    QMatrix a(target_basis.size(), ncols);
    std::size_t col = 0;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        for (const Monomial& bm : b_bases[gi]) {
            const MPoly prod = MPoly::monomial(bm, Rational(1)) * gens[gi];
            for (const auto& [m, c] : prod.terms()) {
                auto it = row_of.find(m.exps);
                if (it == row_of.end())
                    throw std::logic_error("graded_solve: product escapes graded basis");
                a.at(it->second, col) = c;
            }
            ++col;
        }
    }
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        for (const auto& [m, c] : comps[ci].terms()) {
            auto it = row_of.find(m.exps);
            if (it == row_of.end())
                throw std::logic_error("graded_solve: complement escapes graded basis");
            a.at(it->second, col) = c;
        }
        ++col;
    }

    std::vector<Rational> rhs(target_basis.size(), Rational(0));
    for (const auto& [m, c] : t.terms()) {
        auto it = row_of.find(m.exps);
        if (it == row_of.end())
            throw std::logic_error("graded_solve: target escapes graded basis");
        rhs[it->second] = c;
    }

    GradedSolveResult result;
    const auto solution = solve(a, rhs);
    if (!solution) {
        result.residual = true;
        result.combination.assign(gens.size(), MPoly());
        result.complement_coeffs.assign(comps.size(), Rational(0));
        return result;
    }

    col = 0;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        MPoly b;
        for (const Monomial& bm : b_bases[gi])
            b += MPoly::monomial(bm, (*solution)[col++]);
        result.combination.push_back(std::move(b));
    }
    for (std::size_t ci = 0; ci < comps.size(); ++ci)
        result.complement_coeffs.push_back((*solution)[col++]);
    return result;
}

/// Convenience overload: the edge variables are inferred as the union of
/// the a-variables appearing in the inputs.
inline GradedSolveResult graded_solve(const MPoly& target, const std::vector<MPoly>& generators,
                                      const std::vector<MPoly>& complement, int degree,
                                      const KinematicPoint& kin)
{
    std::vector<VarId> vars;
    auto absorb = [&](const MPoly& p) {
        for (VarId v : p.variables()) {
            const std::string n = var_name(v);
            if (n.size() >= 2 && n[0] == 'a' && std::isdigit(static_cast<unsigned char>(n[1])))
                if (std::find(vars.begin(), vars.end(), v) == vars.end())
                    vars.push_back(v);
        }
    };
    absorb(target);
    for (const MPoly& g : generators)
        absorb(g);
    for (const MPoly& c : complement)
        absorb(c);
    std::sort(vars.begin(), vars.end());
    return graded_solve(target, generators, complement, degree, kin, vars);
}

} // namespace feynkit

#endif
