#ifndef FEYNKIT_BLOWUP_HPP
#define FEYNKIT_BLOWUP_HPP

#include "feynkit/mpoly.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace feynkit {

/// One affine open of the iterated blow-up of projective space along
/// coordinate subspaces, described by a flag of index subsets
///   {} = I_0 < I_1 < ... < I_k < I_{k+1} = {1..N}
/// and a choice j_n in I_n \ I_{n-1}.  Coordinates on the chart are the
/// beta variables with beta_{j_{k+1}} dropped (the chart sits over the
/// open where the j_{k+1}-th projective coordinate is nonzero).
struct BlowupChart {
    int n = 0;
    std::vector<std::set<int>> flag; // proper members I_1..I_k, 1-based indices
    std::vector<int> choice;         // j_1..j_{k+1}

    void validate() const
    {
        if (n < 1)
            throw std::invalid_argument("empty chart");
        std::set<int> prev;
        std::set<int> full;
        for (int i = 1; i <= n; ++i)
            full.insert(i);
        std::vector<std::set<int>> chain = flag;
        chain.push_back(full);
        if (choice.size() != chain.size())
            throw std::invalid_argument("choice size must match flag length + 1");
        for (std::size_t s = 0; s < chain.size(); ++s) {
            const auto& cur = chain[s];
            for (int i : prev)
                if (!cur.count(i))
                    throw std::invalid_argument("flag is not increasing");
            if (cur.size() <= prev.size())
                throw std::invalid_argument("flag is not strictly increasing");
            if (!cur.count(choice[s]) || prev.count(choice[s]))
                throw std::invalid_argument("choice element not in its flag step");
            prev = cur;
        }
    }

    static std::string beta_name(int i) { return "b" + std::to_string(i); }

    int dropped_index() const { return choice.back(); }

    /// Step index n (1-based) such that i belongs to I_n \ I_{n-1}.
    int step_of(int i) const
    {
        for (std::size_t s = 0; s < flag.size(); ++s)
            if (flag[s].count(i))
                return static_cast<int>(s) + 1;
        return static_cast<int>(flag.size()) + 1;
    }

    /// The monomial substitution alpha_i -> product of beta variables.
    /// The dropped beta is set to 1.
    std::map<VarId, MPoly> substitution() const
    {
        validate();
        std::map<VarId, MPoly> sub;
        const int drop = dropped_index();
        for (int i = 1; i <= n; ++i) {
            const int step = step_of(i);
            MPoly m = MPoly::constant(1);
            if (choice[step - 1] != i && i != drop)
                m *= MPoly::variable(var(beta_name(i)));
            for (std::size_t s = step - 1; s < choice.size(); ++s)
                if (choice[s] != drop)
                    m *= MPoly::variable(var(beta_name(choice[s])));
            sub[alpha_var(i)] = m;
        }
        return sub;
    }

    /// Inverse map as ratios of projective coordinates: beta_i ->
    /// (numerator alpha, denominator alpha); the dropped beta maps to
    /// (alpha_{j_{k+1}}, 1) on the normalized chart.
    std::map<int, std::pair<MPoly, MPoly>> inverse_substitution() const
    {
        validate();
        std::map<int, std::pair<MPoly, MPoly>> inv;
        const int kplus1 = static_cast<int>(choice.size());
        for (int i = 1; i <= n; ++i) {
            const int step = step_of(i);
            const int jn = choice[step - 1];
            if (i != jn) {
                inv[i] = {MPoly::variable(alpha_var(i)), MPoly::variable(alpha_var(jn))};
            } else if (step < kplus1) {
                inv[i] = {MPoly::variable(alpha_var(jn)), MPoly::variable(alpha_var(choice[step]))};
            } else {
                inv[i] = {MPoly::variable(alpha_var(jn)), MPoly::constant(1)};
            }
        }
        return inv;
    }

    std::string id() const
    {
        std::string s = "A";
        for (const auto& part : flag) {
            s += "_";
            for (int i : part)
                s += std::to_string(i);
        }
        s += "_c";
        for (int j : choice)
            s += std::to_string(j);
        return s;
    }
};

} // namespace feynkit

#endif
