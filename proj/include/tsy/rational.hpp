#ifndef TSY_RATIONAL_HPP
#define TSY_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tsy {

// Exact rationals. mpq_class keeps gcd(num,den)=1 and den>0 after every
// arithmetic operation; raw constructions go through rat()/rat_parse which
// canonicalize.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q".
inline Rational rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline bool rat_is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool rat_is_nonneg_integer(const Rational& q) { return rat_is_integer(q) && q >= 0; }

}  // namespace tsy

#endif
