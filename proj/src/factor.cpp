#include "bezout/factor.hpp"

#include <algorithm>
#include <optional>

namespace bezout {

namespace {

constexpr unsigned long sieve_limit = 1'000'000;

class StepCounter {
public:
    explicit StepCounter(std::size_t limit) : left_(limit) {}
    void spend(std::size_t n = 1)
    {
        if (n > left_)
            throw Error(ErrorCode::factorization_budget_exceeded, "search step budget exhausted");
        left_ -= n;
    }

private:
    std::size_t left_;
};

bool poly_less(const Poly& f, const Poly& g)
{
    if (f.degree() != g.degree())
        return f.degree() < g.degree();
    for (long i = f.degree(); i >= 0; --i) {
        const auto k = static_cast<std::size_t>(i);
        if (f.coeff(k) != g.coeff(k))
            return f.coeff(k) < g.coeff(k);
    }
    return false;
}

void sort_factors(std::vector<PrimePower>& fs)
{
    std::sort(fs.begin(), fs.end(), [](const PrimePower& x, const PrimePower& y) {
        if (auto* a = std::get_if<mpz_class>(&x.prime.value()))
            return *a < y.prime.integer();
        return poly_less(x.prime.polynomial(), y.prime.polynomial());
    });
}

// ---------------------------------------------------------------- Z

std::vector<std::pair<mpz_class, unsigned>> factor_natural(mpz_class n, unsigned long bound)
{
    std::vector<std::pair<mpz_class, unsigned>> out;
    bool exhausted_bound = true;
    for (unsigned p : small_primes()) {
        if (p > bound)
            break;
        if (mpz_class(p) * p > n) {
            exhausted_bound = false;
            break;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            }
            out.emplace_back(mpz_class(p), e);
        }
    }
    if (n > 1) {
        const mpz_class b(bound);
        const bool prime = !exhausted_bound || n < (b + 1) * (b + 1) ||
                           mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
        if (!prime)
            throw Error(ErrorCode::factorization_budget_exceeded,
                        "cofactor " + n.get_str() + " has no prime factor up to " + b.get_str() +
                            " and is composite");
        out.emplace_back(n, 1);
    }
    return out;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n, unsigned long bound)
{
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : factor_natural(abs(n), bound)) {
        const std::size_t count = out.size();
        mpz_class power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= p;
            for (std::size_t i = 0; i < count; ++i)
                out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- F_p[x]

Poly monic_from_index(mpz_class index, std::size_t degree, const mpz_class& p)
{
    std::vector<mpq_class> c;
    for (std::size_t i = 0; i < degree; ++i) {
        mpz_class digit;
        mpz_fdiv_qr(index.get_mpz_t(), digit.get_mpz_t(), index.get_mpz_t(), p.get_mpz_t());
        c.emplace_back(digit);
    }
    c.emplace_back(1);
    return Poly(std::move(c));
}

std::vector<PrimePower> factor_finite_field(Poly f, const Ring& ring, StepCounter& steps)
{
    const CoefficientField& field = ring.field();
    const mpz_class& p = field.characteristic();
    std::vector<PrimePower> out;
    for (std::size_t k = 1; 2 * k <= static_cast<std::size_t>(f.degree()); ++k) {
        mpz_class count;
        mpz_pow_ui(count.get_mpz_t(), p.get_mpz_t(), k);
        for (mpz_class i = 0; i < count && 2 * k <= static_cast<std::size_t>(f.degree()); ++i) {
            steps.spend();
            const Poly g = monic_from_index(i, k, p);
            unsigned e = 0;
            for (;;) {
                auto [q, r] = poly::divmod(f, g, field);
                if (!r.is_zero())
                    break;
                f = std::move(q);
                ++e;
            }
            if (e)
                out.push_back({Element(ring, g), e});
        }
    }
    if (f.degree() >= 1)
        out.push_back({Element(ring, f), 1});
    return out;
}

// ---------------------------------------------------------------- Q[x]

// Integer polynomial with coprime coefficients and positive leading term.
Poly primitive_part(const Poly& f)
{
    mpz_class den = 1, content = 0;
    for (const auto& c : f.coefficients())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : f.coefficients()) {
        mpz_class v = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    if (f.leading() < 0)
        content = -content;
    std::vector<mpq_class> out;
    for (const auto& v : ints)
        out.emplace_back(mpz_class(v / content));
    return Poly(std::move(out));
}

std::optional<Poly> exact_quotient(const Poly& f, const Poly& g, const CoefficientField& field)
{
    auto [q, r] = poly::divmod(f, g, field);
    if (!r.is_zero())
        return std::nullopt;
    return q;
}

Poly interpolate(const std::vector<mpz_class>& xs, const std::vector<mpz_class>& ys,
                 const CoefficientField& field)
{
    Poly out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly term = Poly::constant(mpq_class(ys[i]));
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i)
                continue;
            const mpq_class inv = mpq_class(1) / mpq_class(xs[i] - xs[j]);
            term = poly::mul(term, Poly({mpq_class(-xs[j]) * inv, inv}), field);
        }
        out = poly::add(out, term, field);
    }
    return out;
}

bool integral(const Poly& f)
{
    return std::all_of(f.coefficients().begin(), f.coefficients().end(),
                       [](const mpq_class& c) { return c.get_den() == 1; });
}

// Smallest-degree nonconstant primitive factor of a primitive f.
Poly smallest_factor(const Poly& f, const CoefficientField& field, const FactorBudget& budget,
                     StepCounter& steps)
{
    const long n = f.degree();
    if (n <= 1)
        return f;
    if (f.coeff(0) == 0)
        return Poly({0, 1});

    // Linear factors q*x - p from the rational root test.
    for (const auto& num : positive_divisors(f.coeff(0).get_num(), budget.trial_bound)) {
        for (const auto& den : positive_divisors(f.leading().get_num(), budget.trial_bound)) {
            for (int sign : {1, -1}) {
                steps.spend();
                mpq_class root(mpz_class(sign * num), den);
                root.canonicalize();
                if (poly::evaluate(f, root) == 0)
                    return primitive_part(Poly({mpq_class(-root), mpq_class(1)}));
            }
        }
    }

    // Kronecker: a degree-k factor g is determined by g(x_i) for k + 1 points,
    // and each g(x_i) divides f(x_i), which is nonzero since f has no roots.
    std::vector<std::pair<mpz_class, mpz_class>> points;
    for (long x = 0; points.size() < static_cast<std::size_t>(n) + 4; x = x > 0 ? -x : -x + 1) {
        const mpq_class v = poly::evaluate(f, mpq_class(x));
        points.emplace_back(mpz_class(x), mpz_class(abs(v.get_num())));
    }
    std::stable_sort(points.begin(), points.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });

    for (long k = 2; 2 * k <= n; ++k) {
        std::vector<mpz_class> xs;
        std::vector<std::vector<mpz_class>> options;
        for (long i = 0; i <= k; ++i) {
            xs.push_back(points[static_cast<std::size_t>(i)].first);
            std::vector<mpz_class> ds;
            for (const auto& d : positive_divisors(points[static_cast<std::size_t>(i)].second, budget.trial_bound)) {
                ds.push_back(d);
                if (i > 0)
                    ds.push_back(-d); // the first value fixes the sign of g
            }
            options.push_back(std::move(ds));
        }
        std::vector<std::size_t> choice(xs.size(), 0);
        for (;;) {
            steps.spend();
            std::vector<mpz_class> ys;
            for (std::size_t i = 0; i < xs.size(); ++i)
                ys.push_back(options[i][choice[i]]);
            const Poly g = interpolate(xs, ys, field);
            if (g.degree() == k && integral(g) && exact_quotient(f, g, field))
                return primitive_part(g);
            std::size_t i = 0;
            while (i < choice.size() && ++choice[i] == options[i].size())
                choice[i++] = 0;
            if (i == choice.size())
                break;
        }
    }
    return f;
}

std::vector<PrimePower> factor_rationals(const Poly& f, const Ring& ring, const FactorBudget& budget,
                                         StepCounter& steps)
{
    const CoefficientField& field = ring.field();
    std::vector<PrimePower> out;
    Poly rest = primitive_part(f);
    while (rest.degree() >= 1) {
        const Poly g = smallest_factor(rest, field, budget, steps);
        unsigned e = 0;
        while (rest.degree() >= 1) {
            auto q = exact_quotient(rest, g, field);
            if (!q)
                break;
            rest = primitive_part(*q);
            ++e;
        }
        out.push_back({Element(ring, poly::monic(g, field)), e});
    }
    return out;
}

} // namespace

const std::vector<unsigned>& small_primes()
{
    static const std::vector<unsigned> primes = [] {
        std::vector<char> composite(sieve_limit + 1, 0);
        std::vector<unsigned> out;
        for (unsigned long i = 2; i <= sieve_limit; ++i) {
            if (composite[i])
                continue;
            out.push_back(static_cast<unsigned>(i));
            for (unsigned long j = i * i; j <= sieve_limit; j += i)
                composite[j] = 1;
        }
        return out;
    }();
    return primes;
}

Factorization factor(const Element& a, const FactorBudget& budget)
{
    const Ring& ring = a.ring();
    if (ring.is_quotient())
        throw Error(ErrorCode::unsupported_ring, "factorization needs Z, Q[x] or F_p[x]");
    if (is_zero(a))
        throw Error(ErrorCode::zero_input, "cannot factor zero");
    if (budget.trial_bound > sieve_limit)
        throw Error(ErrorCode::precondition_failed, "trial division bound is limited to 10^6");

    StepCounter steps(budget.search_steps);
    Factorization out{one(ring), {}};
    if (ring.kind() == RingKind::integers) {
        for (auto& [p, e] : factor_natural(abs(a.integer()), budget.trial_bound))
            out.factors.push_back({Element(ring, p), e});
    } else {
        const Poly& f = a.polynomial();
        out.factors = ring.field().is_rationals() ? factor_rationals(f, ring, budget, steps)
                                                  : factor_finite_field(poly::monic(f, ring.field()), ring, steps);
    }
    sort_factors(out.factors);

    Element product = one(ring);
    for (const auto& pp : out.factors)
        for (unsigned k = 0; k < pp.exponent; ++k)
            product = mul(product, pp.prime);
    out.unit = divide_exact(a, product);
    return out;
}

Element radical(const Factorization& f, const Ring& ring)
{
    Element r = one(ring);
    for (const auto& pp : f.factors)
        r = mul(r, pp.prime);
    return r;
}

} // namespace bezout
