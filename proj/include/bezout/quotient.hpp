#pragma once

#include "bezout/ring.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace bezout {

inline constexpr std::size_t default_enumeration_cap = 1'000'000;

/// R/aR for R = Z or F[x]; throws ZeroModulus, UnitModulus.
Ring make_quotient(const Ring& base, const Element& modulus);

/// Generator a0 = a / gcd(a, b) of the annihilator of b in R/aR.
Element annihilator_generator(const Ring& q, const Element& b);

/// Every element of a finite quotient exactly once, in canonical order.
/// Throws TooLarge beyond `cap` and UnsupportedRing for infinite rings.
std::vector<Element> enumerate_elements(const Ring& q, std::size_t cap = default_enumeration_cap);
void for_each_element(const Ring& q, std::size_t cap, const std::function<void(const Element&)>& fn);

/// Size of a finite quotient as a machine integer, checked against `cap`.
std::size_t checked_size(const Ring& q, std::size_t cap);

class PrincipalIdeal {
public:
    explicit PrincipalIdeal(Element generator) : generator_(std::move(generator)) {}

    const Ring& ring() const { return generator_.ring(); }
    const Element& generator() const { return generator_; }
    bool contains(const Element& x) const { return try_divide(x, generator_).has_value(); }

private:
    Element generator_;
};

} // namespace bezout
