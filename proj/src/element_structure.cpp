#include "bezout/element_structure.hpp"

#include "bezout/encoding.hpp"

namespace bezout {

namespace {

void require_domain(const Element& a, const char* what)
{
    if (a.ring().is_quotient())
        throw Error(ErrorCode::unsupported_ring,
                    std::string(what) + " is implemented for Z, Q[x] and F_p[x], not " + a.ring().describe());
}

void require_proper(const Element& a, const char* what)
{
    require_domain(a, what);
    if (is_zero(a) || is_unit(a))
        throw Error(ErrorCode::unit_or_zero_input,
                    std::string(what) + " needs a nonzero non-unit, got " + to_string(a));
}

void require_same(const Element& a, const Element& b)
{
    if (!(a.ring() == b.ring()))
        throw Error(ErrorCode::ring_mismatch, "operands live in different rings");
}

void require_triple(const Element& a, const Element& b, const Element& c)
{
    require_same(a, b);
    require_same(a, c);
    require_domain(a, "decomposition");
    if (is_zero(a))
        throw Error(ErrorCode::zero_input, "a must be nonzero");
    const Element g = gcdex(gcdex(a, b).d, c).d;
    if (!is_unit(g))
        throw Error(ErrorCode::precondition_failed,
                    "precondition aR+bR+cR=R fails: gcd(a, b, c) = " + to_string(g));
}

} // namespace

std::string to_string(SplitKind kind)
{
    switch (kind) {
    case SplitKind::adequate: return "adequate";
    case SplitKind::avoidable: return "avoidable";
    case SplitKind::gelfand: return "gelfand";
    case SplitKind::semipotent: return "semipotent";
    }
    return "?";
}

bool is_regular(const Element& a, std::size_t cap)
{
    const Ring& ring = a.ring();
    if (ring.is_domain())
        return !is_zero(a);
    if (!cardinality(ring))
        return is_unit(gcdex(lift(a), ring.modulus()).d);
    const FiniteRing fr(ring, {cap, cap});
    return fr.annihilator(fr.index(a)).size() == 1;
}

bool is_atom(const Element& a, const FactorBudget& budget)
{
    require_proper(a, "is_atom");
    const Factorization f = factor(a, budget);
    return f.factors.size() == 1 && f.factors.front().exponent == 1;
}

bool is_inpseudo_irreducible(const Element& a, const FactorBudget& budget)
{
    require_proper(a, "is_inpseudo_irreducible");
    if (a.ring().kind() == RingKind::polynomials) {
        // Squarefree iff gcd(f, f') is constant; f' = 0 means f is a p-th power.
        const CoefficientField& field = a.ring().field();
        const Poly df = poly::derivative(a.polynomial(), field);
        return !df.is_zero() && poly::gcd(a.polynomial(), df, field).degree() == 0;
    }
    const Factorization f = factor(a, budget);
    for (const auto& pp : f.factors)
        if (pp.exponent > 1)
            return false;
    return true;
}

bool is_pseudo_irreducible(const Element& a, const FactorBudget& budget)
{
    require_proper(a, "is_pseudo_irreducible");
    if (a.ring().kind() == RingKind::polynomials) {
        const Poly rad = poly::squarefree_part(a.polynomial(), a.ring().field());
        return factor(Element(a.ring(), rad), budget).factors.size() == 1;
    }
    return factor(a, budget).factors.size() == 1;
}

ComaximalFactorization comaximal_refinement(const Element& a, const FactorBudget& budget)
{
    require_proper(a, "comaximal_refinement");
    const Factorization f = factor(a, budget);
    ComaximalFactorization out{a, f.unit, {}};
    for (const auto& pp : f.factors) {
        Element power = one(a.ring());
        for (unsigned k = 0; k < pp.exponent; ++k)
            power = mul(power, pp.prime);
        out.factors.push_back(power);
    }
    return out;
}

SplitWitness adequate_split(const Element& a, const Element& b)
{
    require_same(a, b);
    require_domain(a, "adequate_split");
    if (is_zero(a))
        throw Error(ErrorCode::zero_input, "adequate_split needs a nonzero a");
    Element r = a, s = one(a.ring());
    for (;;) {
        const Element g = gcdex(r, b).d;
        if (is_unit(g))
            break;
        s = mul(s, g);
        r = divide_exact(r, g);
    }
    return {SplitKind::adequate, a, b, std::nullopt, r, s, std::nullopt};
}

SplitWitness avoidable_decompose(const Element& a, const Element& b, const Element& c)
{
    require_triple(a, b, c);
    // Every prime of s divides b, so it cannot divide c as gcd(a, b, c) = 1.
    SplitWitness w = adequate_split(a, b);
    w.kind = SplitKind::avoidable;
    w.c = c;
    return w;
}

SplitWitness gelfand_decompose(const Element& a, const Element& b, const Element& c)
{
    SplitWitness w = avoidable_decompose(a, b, c);
    w.kind = SplitKind::gelfand;
    return w;
}

SemipotentResult semipotent_witness(const Element& a, const Element& b, AnalysisCaps caps)
{
    require_same(a, b);
    require_domain(a, "semipotent_witness");
    if (is_zero(a))
        throw Error(ErrorCode::zero_input, "semipotent_witness needs a nonzero a");
    if (is_unit(a))
        throw Error(ErrorCode::unit_or_zero_input, "R/aR is the zero ring for a unit a");
    const FiniteRing fr(make_quotient(a.ring(), a), caps);
    const FiniteRing::Index bi = fr.index(reduce(fr.ring(), b));
    if (fr.in_jacobson_radical(bi))
        return InRadical{a, b};

    // Prefer a proper idempotent; 1 is the fallback when bR contains no other.
    std::optional<FiniteRing::Index> chosen;
    for (FiniteRing::Index x : fr.principal_ideal(bi)) {
        if (x == 0 || !fr.is_idempotent(x))
            continue;
        if (x != fr.one()) {
            chosen = x;
            break;
        }
        if (!chosen)
            chosen = x;
    }
    if (!chosen)
        throw Error(ErrorCode::search_exhausted, "no nonzero idempotent in the ideal of " + to_string(b));
    const Element e = fr.element(*chosen);
    const Element d = gcdex(lift(e), a).d;
    const Element r = divide_exact(a, d);
    return SplitWitness{SplitKind::semipotent, a, b, std::nullopt, r, d, e};
}

Element coprime_core(const Element& s, const Element& b)
{
    Element t = s;
    for (;;) {
        const Element g = gcdex(t, b).d;
        if (is_unit(g) || is_zero(g))
            return t;
        t = divide_exact(t, g);
    }
}

std::vector<std::string> verify_split(const SplitWitness& w)
{
    std::vector<std::string> out;
    auto need = [&](bool ok, const std::string& what) {
        if (!ok)
            out.push_back(what);
    };
    need(mul(w.r, w.s) == w.a, "a != r*s");
    need(comaximal(w.r, w.b), "rR + bR != R");
    switch (w.kind) {
    case SplitKind::adequate:
        need(is_unit(coprime_core(w.s, w.b)), "s has a non-unit divisor coprime to b");
        need(comaximal(w.r, w.s), "rR + sR != R");
        break;
    case SplitKind::avoidable:
        need(w.c && comaximal(w.s, *w.c), "sR + cR != R");
        need(comaximal(w.r, w.s), "rR + sR != R");
        break;
    case SplitKind::gelfand:
        need(w.c && comaximal(w.s, *w.c), "sR + cR != R");
        break;
    case SplitKind::semipotent:
        need(comaximal(w.r, w.s), "rR + sR != R");
        need(!is_unit(w.r), "r is a unit");
        need(!is_unit(w.s), "s is a unit");
        break;
    }
    return out;
}

nlohmann::json split_to_json(const SplitWitness& w)
{
    nlohmann::json out = {
        {"kind", to_string(w.kind)},
        {"a", element_to_json(w.a)},
        {"b", element_to_json(w.b)},
        {"r", element_to_json(w.r)},
        {"s", element_to_json(w.s)},
        {"r_s_comaximal", comaximal(w.r, w.s)},
    };
    if (w.c)
        out["c"] = element_to_json(*w.c);
    if (w.idempotent)
        out["idempotent"] = element_to_json(*w.idempotent);
    return out;
}

nlohmann::json factorization_to_json(const ComaximalFactorization& f)
{
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& x : f.factors)
        factors.push_back(element_to_json(x));
    return {{"element", element_to_json(f.base)}, {"unit", element_to_json(f.unit)}, {"factors", factors}};
}

} // namespace bezout
