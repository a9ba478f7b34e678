#ifndef FEYNKIT_RATIONAL_HPP
#define FEYNKIT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace feynkit {

/// Exact arbitrary-precision rational, the universal coefficient carrier.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Canonical text form: "p/q" with q > 0, or "p" when q == 1.
inline std::string rational_to_string(const Rational& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_rational(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

/// Deterministic 64-bit generator (splitmix64).  Used for all seeded
/// sampling so that identical seeds give identical streams on every
/// platform, independent of the standard library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    /// Random rational with numerator in [-bound, bound] and denominator
    /// in [1, bound]; optionally nonzero.
    Rational rational(std::int64_t bound, bool nonzero = false)
    {
        while (true) {
            Rational r(uniform(-bound, bound), uniform(1, bound));
            if (!nonzero || r != 0)
                return r;
        }
    }

    /// Random positive rational in (0, bound].
    Rational positive_rational(std::int64_t bound)
    {
        return Rational(uniform(1, bound), uniform(1, bound));
    }

private:
    std::uint64_t state_;
};

} // namespace feynkit

#endif
