#ifndef LIE_RAT_HPP
#define LIE_RAT_HPP

// Exact scalars: arbitrary-precision integers and rationals on top of GMP.
// Rationals are kept canonical (reduced, positive denominator) at all times;
// mpq_class arithmetic preserves that, construction paths below enforce it.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lie {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Rat>;

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("bad rational: zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with optional sign, arbitrary size.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::domain_error("bad rational: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::domain_error("bad rational: " + s);
    }
}

inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// |r| as a crude magnitude for reporting only (never used in decisions).
inline double rat_approx(const Rat& r) { return r.get_d(); }

// Deterministic splittable RNG (splitmix64). Not libstdc++'s engines: byte
// reproducibility across platforms matters for report output.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [-bound, bound]; modulo bias is < 2^-43 * bound, irrelevant
    // next to the Schwartz-Zippel bounds we report.
    long int_in(long bound) {
        std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
        return static_cast<long>(next() % span) - bound;
    }

    Vec rational_point(std::size_t n, long bound) {
        Vec v(n);
        for (auto& x : v) x = Rat(int_in(bound));
        return v;
    }

    // Independent stream for a worker cell; keeps parallel sweeps deterministic.
    Rng fork(std::uint64_t salt) const {
        Rng r(state ^ (0x632be59bd9b4e019ULL * (salt + 1)));
        r.next();
        return r;
    }
};

}  // namespace lie

#endif
