#pragma once

// Abstract commutative-ring contract shared by every algorithm in the library.
//
// A Ring is a cheap, immutable handle onto one of three instance kinds: the
// integers, a univariate polynomial ring over Q or F_p, or a quotient R/aR of
// one of those by a nonzero non-unit. Elements always carry their owning ring
// and are kept in canonical form, so equality is payload equality.

#include "bezout/error.hpp"
#include "bezout/poly.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>

namespace bezout {

enum class RingKind { integers, polynomials, quotient };

class Element;

namespace detail {
struct RingData;
}

class Ring {
public:
    static Ring integers();
    static Ring polynomials(const CoefficientField& field);
    /// R/aR. Throws ZeroModulus / UnitModulus / UnsupportedRing.
    static Ring quotient(const Ring& base, const Element& modulus);

    RingKind kind() const;
    bool is_domain() const { return kind() != RingKind::quotient; }
    bool is_quotient() const { return kind() == RingKind::quotient; }

    /// Coefficient field of a polynomial ring, or of the base of a quotient
    /// of a polynomial ring.
    const CoefficientField& field() const;
    /// Quotient rings only.
    const Ring& base() const;
    /// Quotient rings only. Canonical associate (nonnegative / monic).
    const Element& modulus() const;

    /// Ring description in the CLI grammar: Z, Q[x], F5[x], Z/12, F2[x]/[1,1,1].
    std::string describe() const;

    friend bool operator==(const Ring& a, const Ring& b);

private:
    explicit Ring(std::shared_ptr<const detail::RingData> data) : data_(std::move(data)) {}
    std::shared_ptr<const detail::RingData> data_;
};

/// Integer payload for Z and Z/n, polynomial payload for F[x] and F[x]/f.
/// Quotient elements store the canonical lift.
using Payload = std::variant<mpz_class, Poly>;

class Element {
public:
    /// Canonicalizes `value` for `ring`.
    Element(Ring ring, Payload value);

    const Ring& ring() const { return ring_; }
    const Payload& value() const { return value_; }
    const mpz_class& integer() const;
    const Poly& polynomial() const;

    friend bool operator==(const Element& a, const Element& b);

private:
    Ring ring_;
    Payload value_;
};

struct ExtendedGcd {
    Element d;
    Element u;
    Element v;
    Element a0;
    Element b0;
    /// gcdex(0, 0): d = u = v = 0 and the cofactor identity is waived.
    bool degenerate = false;
};

struct CofactorNormalization {
    Element a0;
    Element b0;
    Element u; // a0*u + b0*v = 1
    Element v;
};

Element zero(const Ring& ring);
Element one(const Ring& ring);
Element from_integer(const Ring& ring, const mpz_class& n);

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element neg(const Element& a);
Element mul(const Element& a, const Element& b);

bool is_zero(const Element& a);
bool is_one(const Element& a);
bool is_unit(const Element& a);
/// Throws NotDivisible for non-units.
Element inverse(const Element& a);

/// Some q with b*q = a; in quotient rings the smallest canonical solution.
std::optional<Element> try_divide(const Element& a, const Element& b);
/// Throws NotDivisible when no q exists.
Element divide_exact(const Element& a, const Element& b);

/// Bezout witness bundle with coprime cofactors; d is the canonical generator
/// of aR + bR.
ExtendedGcd gcdex(const Element& a, const Element& b);

/// Coprime cofactors a0, b0 with a = a0*d, b = b0*d, from arbitrary a1, b1.
/// In quotient rings this searches (a1 + c*x, b1 + c*y) with
/// c = 1 - a1*u - b1*v over at most `search_cap` candidates for each of x, y.
CofactorNormalization normalize_cofactors(const Element& a, const Element& b, const Element& d,
                                          const Element& a1, const Element& b1,
                                          std::size_t search_cap = 1'000'000);

/// True iff aR + bR = R.
bool comaximal(const Element& a, const Element& b);

/// Nonnegative integer, monic polynomial, canonical residue left as is.
Element canonical_associate(const Element& a);
/// The unit w with a*w == canonical_associate(a) (one for zero).
Element normalizing_unit(const Element& a);

/// Euclidean size used for pivot choice: |a| over Z, degree over F[x].
mpz_class euclidean_size(const Element& a);

/// Quotient rings: canonical lift into the base ring.
Element lift(const Element& a);
/// Image of a base element in the quotient ring `q`.
Element reduce(const Ring& q, const Element& base_element);

/// Number of elements, when the ring is finite.
std::optional<mpz_class> cardinality(const Ring& ring);
/// Finite quotients: the element with the given canonical index.
Element element_at(const Ring& q, const mpz_class& index);
/// Finite quotients: canonical index of an element.
mpz_class index_of(const Element& a);

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return sub(a, b); }
inline Element operator-(const Element& a) { return neg(a); }
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }

/// Human-readable rendering: 12, x^2 + 1, 3/2*x.
std::string to_string(const Element& a);

} // namespace bezout
