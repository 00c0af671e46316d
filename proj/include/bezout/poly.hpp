#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace bezout {

/// Coefficient field of a univariate polynomial ring: Q (characteristic 0)
/// or F_p for a prime p. F_p coefficients are stored as integers in [0, p).
class CoefficientField {
public:
    static CoefficientField rationals() { return CoefficientField(0); }
    static CoefficientField prime(const mpz_class& p) { return CoefficientField(p); }

    const mpz_class& characteristic() const { return characteristic_; }
    bool is_rationals() const { return characteristic_ == 0; }

    mpq_class reduce(const mpq_class& c) const;
    mpq_class inverse(const mpq_class& c) const;

    friend bool operator==(const CoefficientField& a, const CoefficientField& b)
    {
        return a.characteristic_ == b.characteristic_;
    }

private:
    explicit CoefficientField(mpz_class p) : characteristic_(std::move(p)) {}
    mpz_class characteristic_;
};

/// Dense univariate polynomial, coefficients low degree first. The leading
/// coefficient is never zero; the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpq_class> coeffs);

    static Poly constant(const mpq_class& c);
    static Poly monomial(const mpq_class& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const mpq_class& coeff(std::size_t i) const;
    const mpq_class& leading() const { return coeffs_.back(); }
    const std::vector<mpq_class>& coefficients() const { return coeffs_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<mpq_class> coeffs_;
};

namespace poly {

Poly canonical(const Poly& f, const CoefficientField& field);
Poly add(const Poly& f, const Poly& g, const CoefficientField& field);
Poly sub(const Poly& f, const Poly& g, const CoefficientField& field);
Poly neg(const Poly& f, const CoefficientField& field);
Poly mul(const Poly& f, const Poly& g, const CoefficientField& field);
Poly scale(const Poly& f, const mpq_class& c, const CoefficientField& field);

/// Quotient and remainder; `g` must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, const CoefficientField& field);

Poly derivative(const Poly& f, const CoefficientField& field);
/// Zero stays zero.
Poly monic(const Poly& f, const CoefficientField& field);

struct Gcdex {
    Poly d; // monic, or zero when both inputs are zero
    Poly u;
    Poly v;
};
Gcdex gcdex(const Poly& f, const Poly& g, const CoefficientField& field);
Poly gcd(const Poly& f, const Poly& g, const CoefficientField& field);

/// For f with f' = 0 over F_p: the g with g^p = f.
Poly pth_root(const Poly& f, const CoefficientField& field);
/// Product of the distinct monic irreducible factors of f.
Poly squarefree_part(const Poly& f, const CoefficientField& field);

mpq_class evaluate(const Poly& f, const mpq_class& x);

} // namespace poly
} // namespace bezout
