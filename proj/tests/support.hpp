#pragma once

#include "bezout/quotient.hpp"
#include "bezout/ring.hpp"

#include <doctest.h>

#include <initializer_list>
#include <vector>

namespace test {

using namespace bezout;

inline Ring ZZ() { return Ring::integers(); }
inline Ring Fp(long p) { return Ring::polynomials(CoefficientField::prime(p)); }
inline Ring QQx() { return Ring::polynomials(CoefficientField::rationals()); }

inline Element z(long n) { return from_integer(ZZ(), n); }

inline Element px(const Ring& ring, std::initializer_list<long> coeffs)
{
    std::vector<mpq_class> c;
    for (long x : coeffs)
        c.emplace_back(x);
    return Element(ring, Poly(std::move(c)));
}

inline Element px(const Ring& ring, const std::vector<long>& coeffs)
{
    std::vector<mpq_class> c;
    for (long x : coeffs)
        c.emplace_back(x);
    return Element(ring, Poly(std::move(c)));
}

inline Ring Zmod(long n) { return make_quotient(ZZ(), z(n)); }

inline Element residue(const Ring& q, long n) { return from_integer(q, n); }

inline long as_long(const Element& a) { return a.integer().get_si(); }

} // namespace test
