#include "bezout/ring.hpp"

#include <sstream>
#include <vector>

namespace bezout {

namespace detail {

struct RingData {
    RingKind kind = RingKind::integers;
    CoefficientField field = CoefficientField::rationals();
    std::optional<Ring> base;
    std::optional<Element> modulus;
};

} // namespace detail

namespace {

void require_same_ring(const Element& a, const Element& b)
{
    if (!(a.ring() == b.ring()))
        throw Error(ErrorCode::ring_mismatch,
                    "operands live in " + a.ring().describe() + " and " + b.ring().describe());
}

std::string coefficient_list(const Poly& f)
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
        if (i)
            out << ',';
        out << f.coeff(i).get_str();
    }
    out << ']';
    return out.str();
}

// Arithmetic on elements of a domain (Z or F[x]).

Element domain_gcd(const Element& a, const Element& b)
{
    if (a.ring().kind() == RingKind::integers) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.integer().get_mpz_t(), b.integer().get_mpz_t());
        return Element(a.ring(), g);
    }
    return Element(a.ring(), poly::gcd(a.polynomial(), b.polynomial(), a.ring().field()));
}

ExtendedGcd domain_gcdex(const Element& a, const Element& b)
{
    const Ring& ring = a.ring();
    if (is_zero(a) && is_zero(b))
        return {zero(ring), zero(ring), zero(ring), one(ring), zero(ring), true};
    Element d = zero(ring), u = zero(ring), v = zero(ring);
    if (ring.kind() == RingKind::integers) {
        mpz_class g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.integer().get_mpz_t(),
                   b.integer().get_mpz_t());
        d = Element(ring, g);
        u = Element(ring, s);
        v = Element(ring, t);
    } else {
        auto r = poly::gcdex(a.polynomial(), b.polynomial(), ring.field());
        d = Element(ring, r.d);
        u = Element(ring, r.u);
        v = Element(ring, r.v);
    }
    return {d, u, v, divide_exact(a, d), divide_exact(b, d), false};
}

Element gcd3(const Element& a, const Element& b, const Element& c)
{
    return domain_gcd(domain_gcd(a, b), c);
}

// Witness (u, v) with alpha*u + beta*v = 1 in the quotient, or nullopt.
std::optional<std::pair<Element, Element>> quotient_comaximal_witness(const Element& alpha,
                                                                      const Element& beta)
{
    const Ring& q = alpha.ring();
    const Element& m = q.modulus();
    ExtendedGcd first = domain_gcdex(lift(alpha), lift(beta));
    ExtendedGcd second = domain_gcdex(first.d, m);
    if (!is_unit(second.d))
        return std::nullopt;
    const Element scale = mul(second.u, inverse(second.d));
    return std::make_pair(reduce(q, mul(first.u, scale)), reduce(q, mul(first.v, scale)));
}

// Candidate values for the stable-range search in a quotient ring.
std::vector<Element> search_candidates(const Ring& q, std::size_t cap)
{
    std::vector<Element> out;
    if (auto n = cardinality(q)) {
        const mpz_class limit = *n < cap ? *n : mpz_class(static_cast<unsigned long>(cap));
        for (mpz_class i = 0; i < limit; ++i)
            out.push_back(element_at(q, i));
        return out;
    }
    // Q[x]/f: small integer-coefficient residues, digits drawn from {0, 1, -1, 2, -2}.
    static const long digits[] = {0, 1, -1, 2, -2};
    const long deg = q.modulus().polynomial().degree();
    const std::size_t limit = std::min<std::size_t>(cap, 125);
    for (std::size_t idx = 0; out.size() < limit; ++idx) {
        std::vector<mpq_class> c;
        std::size_t rest = idx;
        for (long k = 0; k < deg; ++k) {
            c.emplace_back(digits[rest % 5]);
            rest /= 5;
        }
        if (rest != 0)
            break;
        out.emplace_back(q, Poly(std::move(c)));
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------- Ring

Ring Ring::integers()
{
    static const Ring instance(std::make_shared<const detail::RingData>());
    return instance;
}

Ring Ring::polynomials(const CoefficientField& field)
{
    auto data = std::make_shared<detail::RingData>();
    data->kind = RingKind::polynomials;
    data->field = field;
    return Ring(std::move(data));
}

Ring Ring::quotient(const Ring& base, const Element& modulus)
{
    if (base.is_quotient())
        throw Error(ErrorCode::unsupported_ring, "quotients of quotient rings are not supported");
    if (!(modulus.ring() == base))
        throw Error(ErrorCode::ring_mismatch, "modulus does not belong to the base ring");
    if (is_zero(modulus))
        throw Error(ErrorCode::zero_modulus, "cannot form R/0R");
    if (is_unit(modulus))
        throw Error(ErrorCode::unit_modulus, "R/uR is the zero ring for a unit u");
    auto data = std::make_shared<detail::RingData>();
    data->kind = RingKind::quotient;
    data->field = base.data_->field;
    data->base = base;
    data->modulus = canonical_associate(modulus);
    return Ring(std::move(data));
}

RingKind Ring::kind() const { return data_->kind; }

const CoefficientField& Ring::field() const { return data_->field; }

const Ring& Ring::base() const
{
    if (!data_->base)
        throw Error(ErrorCode::unsupported_ring, "ring " + describe() + " is not a quotient");
    return *data_->base;
}

const Element& Ring::modulus() const
{
    if (!data_->modulus)
        throw Error(ErrorCode::unsupported_ring, "ring " + describe() + " is not a quotient");
    return *data_->modulus;
}

std::string Ring::describe() const
{
    switch (kind()) {
    case RingKind::integers:
        return "Z";
    case RingKind::polynomials:
        return field().is_rationals() ? "Q[x]" : "F" + field().characteristic().get_str() + "[x]";
    case RingKind::quotient: {
        const Element& m = modulus();
        if (base().kind() == RingKind::integers)
            return "Z/" + m.integer().get_str();
        return base().describe() + "/" + coefficient_list(m.polynomial());
    }
    }
    return "?";
}

bool operator==(const Ring& a, const Ring& b)
{
    if (a.data_ == b.data_)
        return true;
    if (a.kind() != b.kind())
        return false;
    switch (a.kind()) {
    case RingKind::integers:
        return true;
    case RingKind::polynomials:
        return a.field() == b.field();
    case RingKind::quotient:
        return a.base() == b.base() && a.modulus().value() == b.modulus().value();
    }
    return false;
}

// ---------------------------------------------------------------- Element

Element::Element(Ring ring, Payload value) : ring_(std::move(ring)), value_(std::move(value))
{
    switch (ring_.kind()) {
    case RingKind::integers:
        if (!std::holds_alternative<mpz_class>(value_))
            throw Error(ErrorCode::ring_mismatch, "integer ring needs an integer payload");
        break;
    case RingKind::polynomials:
        if (auto* n = std::get_if<mpz_class>(&value_))
            value_ = Poly::constant(mpq_class(*n));
        value_ = poly::canonical(std::get<Poly>(value_), ring_.field());
        break;
    case RingKind::quotient: {
        const Element& m = ring_.modulus();
        Element base_value(ring_.base(), std::move(value_));
        if (ring_.base().kind() == RingKind::integers) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), base_value.integer().get_mpz_t(), m.integer().get_mpz_t());
            value_ = r;
        } else {
            value_ = poly::divmod(base_value.polynomial(), m.polynomial(), ring_.field()).second;
        }
        break;
    }
    }
}

const mpz_class& Element::integer() const
{
    if (auto* n = std::get_if<mpz_class>(&value_))
        return *n;
    throw Error(ErrorCode::ring_mismatch, "element of " + ring_.describe() + " is not an integer");
}

const Poly& Element::polynomial() const
{
    if (auto* f = std::get_if<Poly>(&value_))
        return *f;
    throw Error(ErrorCode::ring_mismatch, "element of " + ring_.describe() + " is not a polynomial");
}

bool operator==(const Element& a, const Element& b)
{
    return a.value_ == b.value_ && a.ring_ == b.ring_;
}

// ---------------------------------------------------------------- arithmetic

Element zero(const Ring& ring) { return from_integer(ring, 0); }
Element one(const Ring& ring) { return from_integer(ring, 1); }

Element from_integer(const Ring& ring, const mpz_class& n)
{
    if (ring.is_quotient())
        return Element(ring, from_integer(ring.base(), n).value());
    return Element(ring, n);
}

Element add(const Element& a, const Element& b)
{
    require_same_ring(a, b);
    if (auto* x = std::get_if<mpz_class>(&a.value()))
        return Element(a.ring(), mpz_class(*x + b.integer()));
    return Element(a.ring(), poly::add(a.polynomial(), b.polynomial(), a.ring().field()));
}

Element sub(const Element& a, const Element& b)
{
    require_same_ring(a, b);
    if (auto* x = std::get_if<mpz_class>(&a.value()))
        return Element(a.ring(), mpz_class(*x - b.integer()));
    return Element(a.ring(), poly::sub(a.polynomial(), b.polynomial(), a.ring().field()));
}

Element neg(const Element& a)
{
    if (auto* x = std::get_if<mpz_class>(&a.value()))
        return Element(a.ring(), mpz_class(-*x));
    return Element(a.ring(), poly::neg(a.polynomial(), a.ring().field()));
}

Element mul(const Element& a, const Element& b)
{
    require_same_ring(a, b);
    if (auto* x = std::get_if<mpz_class>(&a.value()))
        return Element(a.ring(), mpz_class(*x * b.integer()));
    return Element(a.ring(), poly::mul(a.polynomial(), b.polynomial(), a.ring().field()));
}

bool is_zero(const Element& a)
{
    if (auto* x = std::get_if<mpz_class>(&a.value()))
        return *x == 0;
    return a.polynomial().is_zero();
}

bool is_one(const Element& a)
{
    return a == one(a.ring());
}

bool is_unit(const Element& a)
{
    switch (a.ring().kind()) {
    case RingKind::integers:
        return abs(a.integer()) == 1;
    case RingKind::polynomials:
        return a.polynomial().degree() == 0;
    case RingKind::quotient:
        // aR + mR = R
        return is_unit(domain_gcd(lift(a), a.ring().modulus()));
    }
    return false;
}

Element inverse(const Element& a)
{
    if (!is_unit(a))
        throw Error(ErrorCode::not_divisible, to_string(a) + " is not a unit of " + a.ring().describe());
    switch (a.ring().kind()) {
    case RingKind::integers:
        return a;
    case RingKind::polynomials:
        return Element(a.ring(), Poly::constant(a.ring().field().inverse(a.polynomial().leading())));
    case RingKind::quotient: {
        ExtendedGcd g = domain_gcdex(lift(a), a.ring().modulus());
        return reduce(a.ring(), mul(g.u, inverse(g.d)));
    }
    }
    return a;
}

std::optional<Element> try_divide(const Element& a, const Element& b)
{
    require_same_ring(a, b);
    const Ring& ring = a.ring();
    switch (ring.kind()) {
    case RingKind::integers: {
        if (b.integer() == 0)
            return is_zero(a) ? std::optional<Element>(a) : std::nullopt;
        if (!mpz_divisible_p(a.integer().get_mpz_t(), b.integer().get_mpz_t()))
            return std::nullopt;
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), a.integer().get_mpz_t(), b.integer().get_mpz_t());
        return Element(ring, q);
    }
    case RingKind::polynomials: {
        if (b.polynomial().is_zero())
            return is_zero(a) ? std::optional<Element>(a) : std::nullopt;
        auto [q, r] = poly::divmod(a.polynomial(), b.polynomial(), ring.field());
        if (!r.is_zero())
            return std::nullopt;
        return Element(ring, q);
    }
    case RingKind::quotient: {
        // b*x = a (mod m): solvable iff g = gcd(b, m) divides a; the solutions
        // form one residue class modulo m/g and we return its smallest member.
        const Element& m = ring.modulus();
        const Element la = lift(a), lb = lift(b);
        const Element g = domain_gcd(lb, m);
        auto a_g = try_divide(la, g);
        if (!a_g)
            return std::nullopt;
        const Element m_g = divide_exact(m, g);
        if (is_unit(m_g))
            return zero(ring);
        const Element b_g = divide_exact(lb, g);
        ExtendedGcd inv = domain_gcdex(b_g, m_g);
        Element x = mul(mul(*a_g, inv.u), inverse(inv.d));
        if (x.ring().kind() == RingKind::integers) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), x.integer().get_mpz_t(), m_g.integer().get_mpz_t());
            return Element(ring, r);
        }
        return Element(ring, poly::divmod(x.polynomial(), m_g.polynomial(), ring.field()).second);
    }
    }
    return std::nullopt;
}

Element divide_exact(const Element& a, const Element& b)
{
    if (auto q = try_divide(a, b))
        return *q;
    throw Error(ErrorCode::not_divisible,
                to_string(a) + " is not divisible by " + to_string(b) + " in " + a.ring().describe());
}

ExtendedGcd gcdex(const Element& a, const Element& b)
{
    require_same_ring(a, b);
    const Ring& ring = a.ring();
    if (ring.is_domain())
        return domain_gcdex(a, b);

    // aR + bR = gR with g = gcd(a, b, m) computed in the base ring.
    const Element& m = ring.modulus();
    const Element la = lift(a), lb = lift(b);
    const Element g = gcd3(la, lb, m);
    if (g == m)
        return {zero(ring), zero(ring), zero(ring), one(ring), zero(ring), true};
    const Element d = reduce(ring, g);
    const Element a1 = reduce(ring, divide_exact(la, g));
    const Element b1 = reduce(ring, divide_exact(lb, g));
    CofactorNormalization n = normalize_cofactors(a, b, d, a1, b1);
    return {d, n.u, n.v, n.a0, n.b0, false};
}

CofactorNormalization normalize_cofactors(const Element& a, const Element& b, const Element& d,
                                          const Element& a1, const Element& b1,
                                          std::size_t search_cap)
{
    require_same_ring(a, b);
    require_same_ring(a, d);
    require_same_ring(a, a1);
    require_same_ring(a, b1);
    const Ring& ring = a.ring();
    if (!(mul(a1, d) == a) || !(mul(b1, d) == b))
        throw Error(ErrorCode::precondition_failed, "normalize_cofactors needs a = a1*d and b = b1*d");

    if (is_zero(d)) {
        // a = b = 0: any unimodular pair serves.
        return {one(ring), zero(ring), one(ring), zero(ring)};
    }

    if (ring.is_domain()) {
        // d != 0 in a domain forces c = 1 - a1*u - b1*v = 0, so the only
        // candidate is (a1, b1) itself.
        ExtendedGcd g = domain_gcdex(a1, b1);
        if (g.degenerate || !is_unit(g.d))
            throw Error(ErrorCode::search_exhausted,
                        to_string(d) + " does not generate aR + bR; no coprime cofactors exist");
        const Element w = inverse(g.d);
        return {a1, b1, mul(g.u, w), mul(g.v, w)};
    }

    // Quotient ring. First write d = a*u + b*v, which needs d in aR + bR.
    const Element& m = ring.modulus();
    const Element gbase = gcd3(lift(a), lift(b), m);
    const Element gen = reduce(ring, gbase);
    auto w = try_divide(d, gen);
    if (!w)
        throw Error(ErrorCode::search_exhausted,
                    to_string(d) + " is not in aR + bR; no coprime cofactors exist");
    ExtendedGcd ab = domain_gcdex(lift(a), lift(b));
    ExtendedGcd abm = domain_gcdex(ab.d, m);
    const Element scale = mul(reduce(ring, abm.u), *w);
    const Element u = mul(reduce(ring, ab.u), scale);
    const Element v = mul(reduce(ring, ab.v), scale);
    // d*c = 0 and a1*R + b1*R + c*R = R
    const Element c = sub(one(ring), add(mul(a1, u), mul(b1, v)));

    const std::vector<Element> candidates = search_candidates(ring, search_cap);
    for (const Element& x : candidates) {
        const Element a0 = add(a1, mul(c, x));
        for (const Element& y : candidates) {
            const Element b0 = add(b1, mul(c, y));
            if (auto witness = quotient_comaximal_witness(a0, b0))
                return {a0, b0, witness->first, witness->second};
        }
    }
    throw Error(ErrorCode::search_exhausted,
                "no coprime cofactors found for (" + to_string(a) + ", " + to_string(b) + ") in " +
                    ring.describe());
}

bool comaximal(const Element& a, const Element& b)
{
    require_same_ring(a, b);
    if (a.ring().is_domain())
        return is_unit(domain_gcd(a, b));
    return is_unit(gcd3(lift(a), lift(b), a.ring().modulus()));
}

Element canonical_associate(const Element& a)
{
    switch (a.ring().kind()) {
    case RingKind::integers:
        return Element(a.ring(), mpz_class(abs(a.integer())));
    case RingKind::polynomials:
        return Element(a.ring(), poly::monic(a.polynomial(), a.ring().field()));
    case RingKind::quotient:
        return gcdex(a, zero(a.ring())).d;
    }
    return a;
}

Element normalizing_unit(const Element& a)
{
    switch (a.ring().kind()) {
    case RingKind::integers:
        return from_integer(a.ring(), a.integer() < 0 ? -1 : 1);
    case RingKind::polynomials:
        if (is_zero(a))
            return one(a.ring());
        return Element(a.ring(), Poly::constant(a.ring().field().inverse(a.polynomial().leading())));
    case RingKind::quotient: {
        ExtendedGcd g = gcdex(a, zero(a.ring()));
        return g.degenerate ? one(a.ring()) : g.u; // a0*u = 1, so u is a unit
    }
    }
    return one(a.ring());
}

mpz_class euclidean_size(const Element& a)
{
    switch (a.ring().kind()) {
    case RingKind::integers:
        return abs(a.integer());
    case RingKind::polynomials:
        return mpz_class(a.polynomial().degree());
    case RingKind::quotient:
        return euclidean_size(lift(a));
    }
    return 0;
}

Element lift(const Element& a)
{
    if (!a.ring().is_quotient())
        throw Error(ErrorCode::unsupported_ring, "lift needs a quotient ring element");
    return Element(a.ring().base(), a.value());
}

Element reduce(const Ring& q, const Element& base_element)
{
    if (!(base_element.ring() == q.base()))
        throw Error(ErrorCode::ring_mismatch, "element does not belong to the base of " + q.describe());
    return Element(q, base_element.value());
}

std::optional<mpz_class> cardinality(const Ring& ring)
{
    if (!ring.is_quotient())
        return std::nullopt;
    const Element& m = ring.modulus();
    if (ring.base().kind() == RingKind::integers)
        return m.integer();
    if (ring.field().is_rationals())
        return std::nullopt;
    mpz_class n;
    mpz_pow_ui(n.get_mpz_t(), ring.field().characteristic().get_mpz_t(),
               static_cast<unsigned long>(m.polynomial().degree()));
    return n;
}

Element element_at(const Ring& q, const mpz_class& index)
{
    auto n = cardinality(q);
    if (!n)
        throw Error(ErrorCode::unsupported_ring, q.describe() + " is not a finite ring");
    if (index < 0 || index >= *n)
        throw Error(ErrorCode::precondition_failed, "element index out of range");
    if (q.base().kind() == RingKind::integers)
        return Element(q, index);
    const mpz_class& p = q.field().characteristic();
    std::vector<mpq_class> coeffs;
    mpz_class rest = index;
    while (rest != 0) {
        mpz_class digit;
        mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        coeffs.emplace_back(digit);
    }
    return Element(q, Poly(std::move(coeffs)));
}

mpz_class index_of(const Element& a)
{
    const Ring& q = a.ring();
    if (!cardinality(q))
        throw Error(ErrorCode::unsupported_ring, q.describe() + " is not a finite ring");
    if (q.base().kind() == RingKind::integers)
        return a.integer();
    const mpz_class& p = q.field().characteristic();
    mpz_class idx = 0;
    const auto& c = a.polynomial().coefficients();
    for (std::size_t i = c.size(); i-- > 0;)
        idx = idx * p + c[i].get_num();
    return idx;
}

std::string to_string(const Element& a)
{
    if (auto* x = std::get_if<mpz_class>(&a.value()))
        return x->get_str();
    const Poly& f = a.polynomial();
    if (f.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = f.coefficients().size(); i-- > 0;) {
        mpq_class c = f.coeff(i);
        if (c == 0)
            continue;
        const bool negative = c < 0;
        if (negative)
            c = -c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (i == 0 || c != 1)
            out += c.get_str() + (i == 0 ? "" : "*");
        if (i >= 1)
            out += "x";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace bezout
