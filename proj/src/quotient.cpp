#include "bezout/quotient.hpp"

namespace bezout {

Ring make_quotient(const Ring& base, const Element& modulus)
{
    return Ring::quotient(base, modulus);
}

Element annihilator_generator(const Ring& q, const Element& b)
{
    if (!(b.ring() == q))
        throw Error(ErrorCode::ring_mismatch, "element does not belong to " + q.describe());
    const Element& a = q.modulus();
    const Element d = gcdex(a, lift(b)).d;
    return reduce(q, divide_exact(a, d));
}

std::size_t checked_size(const Ring& q, std::size_t cap)
{
    auto n = cardinality(q);
    if (!n)
        throw Error(ErrorCode::unsupported_ring, q.describe() + " is not a finite ring");
    if (*n > mpz_class(static_cast<unsigned long>(cap)))
        throw Error(ErrorCode::too_large,
                    q.describe() + " has " + n->get_str() + " elements, cap is " + std::to_string(cap));
    return n->get_ui();
}

void for_each_element(const Ring& q, std::size_t cap, const std::function<void(const Element&)>& fn)
{
    const std::size_t n = checked_size(q, cap);
    for (std::size_t i = 0; i < n; ++i)
        fn(element_at(q, mpz_class(static_cast<unsigned long>(i))));
}

std::vector<Element> enumerate_elements(const Ring& q, std::size_t cap)
{
    std::vector<Element> out;
    out.reserve(checked_size(q, cap));
    for_each_element(q, cap, [&](const Element& e) { out.push_back(e); });
    return out;
}

} // namespace bezout
