#include "bezout/poly.hpp"

#include "bezout/error.hpp"

#include <algorithm>

namespace bezout {

mpq_class CoefficientField::reduce(const mpq_class& c) const
{
    if (is_rationals())
        return c;
    mpz_class num = c.get_num() % characteristic_;
    if (c.get_den() != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), c.get_den().get_mpz_t(), characteristic_.get_mpz_t()) == 0)
            throw Error(ErrorCode::not_divisible, "denominator not invertible modulo characteristic");
        num = (num * inv) % characteristic_;
    }
    if (num < 0)
        num += characteristic_;
    return mpq_class(num);
}

mpq_class CoefficientField::inverse(const mpq_class& c) const
{
    if (c == 0)
        throw Error(ErrorCode::not_divisible, "inverse of zero coefficient");
    if (is_rationals())
        return 1 / c;
    mpz_class inv;
    mpz_class num = reduce(c).get_num();
    mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), characteristic_.get_mpz_t());
    return mpq_class(inv);
}

Poly::Poly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_)
        c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Poly Poly::constant(const mpq_class& c)
{
    return Poly(std::vector<mpq_class>{c});
}

Poly Poly::monomial(const mpq_class& c, std::size_t degree)
{
    std::vector<mpq_class> coeffs(degree + 1);
    coeffs[degree] = c;
    return Poly(std::move(coeffs));
}

const mpq_class& Poly::coeff(std::size_t i) const
{
    static const mpq_class zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

namespace poly {

Poly canonical(const Poly& f, const CoefficientField& field)
{
    std::vector<mpq_class> c = f.coefficients();
    for (auto& x : c)
        x = field.reduce(x);
    return Poly(std::move(c));
}

Poly add(const Poly& f, const Poly& g, const CoefficientField& field)
{
    std::vector<mpq_class> c(std::max(f.coefficients().size(), g.coefficients().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = field.reduce(f.coeff(i) + g.coeff(i));
    return Poly(std::move(c));
}

Poly neg(const Poly& f, const CoefficientField& field)
{
    std::vector<mpq_class> c = f.coefficients();
    for (auto& x : c)
        x = field.reduce(-x);
    return Poly(std::move(c));
}

Poly sub(const Poly& f, const Poly& g, const CoefficientField& field)
{
    std::vector<mpq_class> c(std::max(f.coefficients().size(), g.coefficients().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = field.reduce(f.coeff(i) - g.coeff(i));
    return Poly(std::move(c));
}

Poly mul(const Poly& f, const Poly& g, const CoefficientField& field)
{
    if (f.is_zero() || g.is_zero())
        return {};
    const auto& a = f.coefficients();
    const auto& b = g.coefficients();
    std::vector<mpq_class> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    for (auto& x : c)
        x = field.reduce(x);
    return Poly(std::move(c));
}

Poly scale(const Poly& f, const mpq_class& s, const CoefficientField& field)
{
    std::vector<mpq_class> c = f.coefficients();
    for (auto& x : c)
        x = field.reduce(x * s);
    return Poly(std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, const CoefficientField& field)
{
    if (g.is_zero())
        throw Error(ErrorCode::not_divisible, "polynomial division by zero");
    if (f.degree() < g.degree())
        return {Poly{}, f};
    std::vector<mpq_class> rem = f.coefficients();
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    std::vector<mpq_class> quot(rem.size() - dg);
    const mpq_class lead_inv = field.inverse(g.leading());
    for (std::size_t k = quot.size(); k-- > 0;) {
        const mpq_class q = field.reduce(rem[k + dg] * lead_inv);
        quot[k] = q;
        if (q == 0)
            continue;
        for (std::size_t j = 0; j <= dg; ++j)
            rem[k + j] = field.reduce(rem[k + j] - q * g.coeff(j));
    }
    rem.resize(dg);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly derivative(const Poly& f, const CoefficientField& field)
{
    if (f.degree() < 1)
        return {};
    std::vector<mpq_class> c(f.coefficients().size() - 1);
    for (std::size_t i = 1; i < f.coefficients().size(); ++i)
        c[i - 1] = field.reduce(f.coeff(i) * static_cast<unsigned long>(i));
    return Poly(std::move(c));
}

Poly monic(const Poly& f, const CoefficientField& field)
{
    if (f.is_zero())
        return f;
    return scale(f, field.inverse(f.leading()), field);
}

Gcdex gcdex(const Poly& f, const Poly& g, const CoefficientField& field)
{
    Poly r0 = f, r1 = g;
    Poly s0 = Poly::constant(1), s1;
    Poly t0, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1, field);
        Poly s2 = sub(s0, mul(q, s1, field), field);
        Poly t2 = sub(t0, mul(q, t1, field), field);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {Poly{}, Poly{}, Poly{}};
    const mpq_class inv = field.inverse(r0.leading());
    return {scale(r0, inv, field), scale(s0, inv, field), scale(t0, inv, field)};
}

Poly gcd(const Poly& f, const Poly& g, const CoefficientField& field)
{
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = divmod(a, b, field).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, field);
}

Poly pth_root(const Poly& f, const CoefficientField& field)
{
    const unsigned long p = field.characteristic().get_ui();
    std::vector<mpq_class> c;
    for (std::size_t i = 0; i < f.coefficients().size(); i += p)
        c.push_back(f.coeff(i)); // Frobenius is the identity on F_p
    return Poly(std::move(c));
}

Poly squarefree_part(const Poly& f, const CoefficientField& field)
{
    if (f.degree() < 1)
        return Poly::constant(1);
    Poly df = derivative(f, field);
    if (df.is_zero())
        return squarefree_part(pth_root(f, field), field);
    Poly g = gcd(f, df, field);
    Poly w = monic(divmod(f, g, field).first, field);
    // g keeps the factors whose multiplicity is a multiple of p at full power
    for (Poly h = gcd(g, w, field); h.degree() > 0; h = gcd(g, w, field))
        g = divmod(g, h, field).first;
    if (g.degree() < 1)
        return w;
    return mul(w, squarefree_part(pth_root(monic(g, field), field), field), field);
}

mpq_class evaluate(const Poly& f, const mpq_class& x)
{
    mpq_class acc = 0;
    for (std::size_t i = f.coefficients().size(); i-- > 0;)
        acc = acc * x + f.coeff(i);
    return acc;
}

} // namespace poly
} // namespace bezout
