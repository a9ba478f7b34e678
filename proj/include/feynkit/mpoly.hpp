#ifndef FEYNKIT_MPOLY_HPP
#define FEYNKIT_MPOLY_HPP

#include "feynkit/rational.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace feynkit {

using VarId = int;

/// Process-wide interning table for polynomial variables.
///
/// Edge variables are named "a1", "a2", ... and are pre-registered together
/// with the standard kinematic symbols, so the canonical term order (edge
/// variables by index, then parameters) does not depend on call order.
class VarRegistry {
public:
    static VarRegistry& instance()
    {
        static VarRegistry reg;
        return reg;
    }

    VarId intern(const std::string& name)
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = ids_.find(name);
        if (it != ids_.end())
            return it->second;
        const VarId id = static_cast<VarId>(names_.size());
        names_.push_back(name);
        ids_.emplace(name, id);
        return id;
    }

    std::string name(VarId id) const
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (id < 0 || id >= static_cast<VarId>(names_.size()))
            throw std::out_of_range("unknown variable id");
        return names_[id];
    }

    bool lookup(const std::string& name, VarId& id) const
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = ids_.find(name);
        if (it == ids_.end())
            return false;
        id = it->second;
        return true;
    }

private:
    VarRegistry()
    {
        for (int i = 1; i <= 32; ++i)
            intern_unlocked("a" + std::to_string(i));
        for (const char* s : {"m1^2", "m2^2", "m3^2", "q1^2"})
            intern_unlocked(s);
    }

    void intern_unlocked(const std::string& name)
    {
        const VarId id = static_cast<VarId>(names_.size());
        names_.push_back(name);
        ids_.emplace(name, id);
    }

    mutable std::mutex mu_;
    std::vector<std::string> names_;
    std::map<std::string, VarId> ids_;
};

inline VarId var(const std::string& name) { return VarRegistry::instance().intern(name); }
inline VarId alpha_var(int i) { return var("a" + std::to_string(i)); }
inline std::string var_name(VarId id) { return VarRegistry::instance().name(id); }

/// Sparse exponent vector, kept sorted by variable id with positive exponents.
struct Monomial {
    std::vector<std::pair<VarId, int>> exps;

    int degree() const
    {
        int d = 0;
        for (const auto& [v, e] : exps)
            d += e;
        return d;
    }

    int exponent(VarId v) const
    {
        for (const auto& [w, e] : exps)
            if (w == v)
                return e;
        return 0;
    }

    Monomial times(const Monomial& o) const
    {
        Monomial r;
        auto a = exps.begin(), b = o.exps.begin();
        while (a != exps.end() || b != o.exps.end()) {
            if (b == o.exps.end() || (a != exps.end() && a->first < b->first))
                r.exps.push_back(*a++);
            else if (a == exps.end() || b->first < a->first)
                r.exps.push_back(*b++);
            else {
                r.exps.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        return r;
    }

    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

/// Graded lexicographic order, descending, so that map iteration order is
/// the canonical print order (highest total degree first).
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        const int da = a.degree(), db = b.degree();
        if (da != db)
            return da > db;
        // lexicographic on dense exponent sequences: larger power of the
        // earliest variable first
        auto pa = a.exps.begin(), pb = b.exps.begin();
        while (pa != a.exps.end() && pb != b.exps.end()) {
            if (pa->first != pb->first)
                return pa->first < pb->first; // a has earlier var with exp>0
            if (pa->second != pb->second)
                return pa->second > pb->second;
            ++pa;
            ++pb;
        }
        return pa != a.exps.end();
    }
};

/// Sparse multivariate polynomial over exact rationals.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDesc>;

    MPoly() = default;

    static MPoly constant(const Rational& c)
    {
        MPoly p;
        if (c != 0)
            p.terms_.emplace(Monomial{}, c);
        return p;
    }

    static MPoly variable(VarId v, int exp = 1)
    {
        MPoly p;
        if (exp == 0)
            return constant(1);
        Monomial m;
        m.exps.emplace_back(v, exp);
        p.terms_.emplace(std::move(m), Rational(1));
        return p;
    }

    static MPoly monomial(const Monomial& m, const Rational& c)
    {
        MPoly p;
        if (c != 0)
            p.terms_.emplace(m, c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.exps.empty());
    }

    Rational constant_value() const
    {
        if (terms_.empty())
            return Rational(0);
        if (!is_constant())
            throw std::logic_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    int total_degree() const
    {
        int d = -1;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m.degree());
        return d; // -1 for the zero polynomial
    }

    /// Degree counting only the exponents of the given variables.
    int degree_in(const std::vector<VarId>& vars) const
    {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (VarId v : vars)
                s += m.exponent(v);
            d = std::max(d, s);
        }
        return d;
    }

    bool is_homogeneous_in(const std::vector<VarId>& vars) const
    {
        int d = -2;
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (VarId v : vars)
                s += m.exponent(v);
            if (d == -2)
                d = s;
            else if (d != s)
                return false;
        }
        return true;
    }

    MPoly& operator+=(const MPoly& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }

    MPoly& operator-=(const MPoly& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

    friend MPoly operator-(const MPoly& a)
    {
        MPoly r;
        for (const auto& [m, c] : a.terms_)
            r.terms_.emplace(m, -c);
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b)
    {
        MPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma.times(mb), ca * cb);
        return r;
    }

    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend MPoly operator*(const Rational& c, const MPoly& p)
    {
        MPoly r;
        if (c == 0)
            return r;
        for (const auto& [m, k] : p.terms_)
            r.terms_.emplace(m, c * k);
        return r;
    }

    friend MPoly operator*(const MPoly& p, const Rational& c) { return c * p; }

    MPoly pow(int n) const
    {
        if (n < 0)
            throw std::invalid_argument("negative polynomial power");
        MPoly r = constant(1);
        for (int i = 0; i < n; ++i)
            r *= *this;
        return r;
    }

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    /// Exact composition p(v -> sigma(v)); variables absent from sigma are
    /// kept as themselves.
    MPoly substitute(const std::map<VarId, MPoly>& sigma) const
    {
        MPoly result;
        for (const auto& [m, c] : terms_) {
            MPoly term = constant(c);
            for (const auto& [v, e] : m.exps) {
                auto it = sigma.find(v);
                if (it == sigma.end())
                    term *= variable(v, e);
                else
                    term *= it->second.pow(e);
            }
            result += term;
        }
        return result;
    }

    MPoly derivative(VarId v) const
    {
        MPoly r;
        for (const auto& [m, c] : terms_) {
            const int e = m.exponent(v);
            if (e == 0)
                continue;
            Monomial n;
            for (const auto& [w, k] : m.exps) {
                if (w == v) {
                    if (k > 1)
                        n.exps.emplace_back(w, k - 1);
                } else {
                    n.exps.emplace_back(w, k);
                }
            }
            r.add_term(n, c * e);
        }
        return r;
    }

    /// Full evaluation; every variable occurring in the polynomial must
    /// have an entry.
    Rational eval(const std::map<VarId, Rational>& point) const
    {
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (const auto& [v, e] : m.exps) {
                auto it = point.find(v);
                if (it == point.end())
                    throw std::invalid_argument("missing value for variable " + var_name(v));
                for (int i = 0; i < e; ++i)
                    t *= it->second;
            }
            acc += t;
        }
        return acc;
    }

    /// Partial evaluation: substitute rationals for a subset of variables.
    MPoly eval_partial(const std::map<VarId, Rational>& point) const
    {
        MPoly r;
        for (const auto& [m, c] : terms_) {
            Rational coef = c;
            Monomial rest;
            for (const auto& [v, e] : m.exps) {
                auto it = point.find(v);
                if (it == point.end()) {
                    rest.exps.emplace_back(v, e);
                } else {
                    for (int i = 0; i < e; ++i)
                        coef *= it->second;
                }
            }
            r.add_term(rest, coef);
        }
        return r;
    }

    std::vector<VarId> variables() const
    {
        std::vector<VarId> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.exps)
                if (std::find(vs.begin(), vs.end(), v) == vs.end())
                    vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        return vs;
    }

    Rational coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Canonical serialization: terms in graded-lex order joined by " + ",
    /// each "c * v1^e1*v2^e2" with unit coefficients and unit exponents
    /// elided.  Empty polynomial prints "0".
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first)
                out += " + ";
            first = false;
            std::string vars;
            for (const auto& [v, e] : m.exps) {
                if (!vars.empty())
                    vars += "*";
                vars += var_name(v);
                if (e > 1)
                    vars += "^" + std::to_string(e);
            }
            if (vars.empty())
                out += rational_to_string(c);
            else if (c == 1)
                out += vars;
            else
                out += rational_to_string(c) + " * " + vars;
        }
        return out;
    }

    /// Parse the canonical serialization.  Variable tokens are resolved
    /// against the registry first, so parameter names that contain '^'
    /// (e.g. "m1^2") round-trip.
    static MPoly parse(const std::string& s);

    friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

private:
    void add_term(const Monomial& m, const Rational& c)
    {
        if (c == 0)
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    TermMap terms_;
};

namespace detail {

inline std::string strip(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos)
        return "";
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_top(const std::string& s, const std::string& sep)
{
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        auto next = s.find(sep, pos);
        if (next == std::string::npos) {
            parts.push_back(s.substr(pos));
            break;
        }
        parts.push_back(s.substr(pos, next - pos));
        pos = next + sep.size();
    }
    return parts;
}

} // namespace detail

inline MPoly MPoly::parse(const std::string& input)
{
    const std::string text = detail::strip(input);
    if (text.empty() || text == "0")
        return MPoly();
    MPoly result;
    for (std::string term : detail::split_top(text, " + ")) {
        term = detail::strip(term);
        Rational coef(1);
        std::string vars = term;
        auto star = term.find(" * ");
        if (star != std::string::npos) {
            coef = parse_rational(detail::strip(term.substr(0, star)));
            vars = detail::strip(term.substr(star + 3));
        } else if (!term.empty() && (std::isdigit(term[0]) || term[0] == '-' || term[0] == '+')) {
            // bare constant term
            result += MPoly::constant(parse_rational(term));
            continue;
        }
        Monomial m;
        for (std::string tok : detail::split_top(vars, "*")) {
            tok = detail::strip(tok);
            VarId id;
            if (VarRegistry::instance().lookup(tok, id)) {
                m.exps.emplace_back(id, m.exponent(id) + 1);
                continue;
            }
            int exp = 1;
            std::string base = tok;
            auto caret = tok.rfind('^');
            if (caret != std::string::npos) {
                try {
                    exp = std::stoi(tok.substr(caret + 1));
                    base = tok.substr(0, caret);
                } catch (const std::exception&) {
                    // fall through: whole token is the name
                }
            }
            std::vector<std::pair<VarId, int>> merged;
            const VarId v = var(base);
            bool found = false;
            for (auto& [w, e] : m.exps)
                if (w == v) {
                    e += exp;
                    found = true;
                }
            if (!found)
                m.exps.emplace_back(v, exp);
        }
        std::sort(m.exps.begin(), m.exps.end());
        result += MPoly::monomial(m, coef);
    }
    return result;
}

} // namespace feynkit

#endif
