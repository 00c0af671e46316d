#include "bezout/matrix.hpp"

#include "bezout/element_structure.hpp"

namespace bezout {

namespace {

// Keeps P*A*Q = M while M is transformed, along with explicit inverses.
class Reducer {
public:
    explicit Reducer(const Matrix& a)
        : m_(a), p_(Matrix::identity(a.ring(), a.rows())), p_inv_(p_), q_(Matrix::identity(a.ring(), a.cols())),
          q_inv_(q_)
    {
    }

    Matrix& current() { return m_; }
    const Ring& ring() const { return m_.ring(); }

    // rows (i, j) <- T * rows (i, j), T = [[t11, t12], [t21, t22]] with unit determinant.
    void rows(std::size_t i, std::size_t j, const Element& t11, const Element& t12, const Element& t21,
              const Element& t22, const char* op)
    {
        const Element det_inv = inverse(t11 * t22 - t12 * t21);
        combine_rows(m_, i, j, t11, t12, t21, t22);
        combine_rows(p_, i, j, t11, t12, t21, t22);
        // P_inv <- P_inv * T^-1
        combine_cols(p_inv_, i, j, t22 * det_inv, -t12 * det_inv, -t21 * det_inv, t11 * det_inv);
        certificate_.push_back({"row", op, i, j, {t11, t12, t21, t22}});
    }

    // cols (i, j) <- cols (i, j) * S, S = [[s11, s12], [s21, s22]] with unit determinant.
    void cols(std::size_t i, std::size_t j, const Element& s11, const Element& s12, const Element& s21,
              const Element& s22, const char* op)
    {
        const Element det_inv = inverse(s11 * s22 - s12 * s21);
        combine_cols(m_, i, j, s11, s12, s21, s22);
        combine_cols(q_, i, j, s11, s12, s21, s22);
        // Q_inv <- S^-1 * Q_inv
        combine_rows(q_inv_, i, j, s22 * det_inv, -s12 * det_inv, -s21 * det_inv, s11 * det_inv);
        certificate_.push_back({"col", op, i, j, {s11, s12, s21, s22}});
    }

    void scale_row(std::size_t i, const Element& w)
    {
        const Element w_inv = inverse(w);
        for (std::size_t k = 0; k < m_.cols(); ++k)
            m_(i, k) = m_(i, k) * w;
        for (std::size_t k = 0; k < p_.cols(); ++k)
            p_(i, k) = p_(i, k) * w;
        for (std::size_t k = 0; k < p_inv_.rows(); ++k)
            p_inv_(k, i) = p_inv_(k, i) * w_inv;
        certificate_.push_back({"row", "scale", i, i, {w}});
    }

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i != j)
            rows(i, j, zero(ring()), one(ring()), one(ring()), zero(ring()), "swap");
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i != j)
            cols(i, j, zero(ring()), one(ring()), one(ring()), zero(ring()), "swap");
    }

    DiagonalReduction finish() &&
    {
        return {std::move(p_), std::move(m_), std::move(q_), std::move(p_inv_), std::move(q_inv_),
                std::move(certificate_)};
    }

private:
    static void combine_rows(Matrix& x, std::size_t i, std::size_t j, const Element& t11, const Element& t12,
                             const Element& t21, const Element& t22)
    {
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const Element xi = x(i, k), xj = x(j, k);
            x(i, k) = t11 * xi + t12 * xj;
            x(j, k) = t21 * xi + t22 * xj;
        }
    }

    static void combine_cols(Matrix& x, std::size_t i, std::size_t j, const Element& s11, const Element& s12,
                             const Element& s21, const Element& s22)
    {
        for (std::size_t k = 0; k < x.rows(); ++k) {
            const Element xi = x(k, i), xj = x(k, j);
            x(k, i) = xi * s11 + xj * s21;
            x(k, j) = xi * s12 + xj * s22;
        }
    }

    Matrix m_;
    Matrix p_;
    Matrix p_inv_;
    Matrix q_;
    Matrix q_inv_;
    std::vector<Transform> certificate_;
};

// Zero out M(i, t) against the pivot M(t, t) with row operations.
void clear_below(Reducer& red, std::size_t t, std::size_t i)
{
    const Matrix& m = red.current();
    const Element pivot = m(t, t), x = m(i, t);
    const Ring& ring = red.ring();
    if (is_zero(x))
        return;
    if (auto q = try_divide(x, pivot)) {
        red.rows(t, i, one(ring), zero(ring), -*q, one(ring), "add");
        return;
    }
    const ExtendedGcd g = gcdex(pivot, x);
    red.rows(t, i, g.u, g.v, -g.b0, g.a0, "bezout");
}

void clear_right(Reducer& red, std::size_t t, std::size_t j)
{
    const Matrix& m = red.current();
    const Element pivot = m(t, t), x = m(t, j);
    const Ring& ring = red.ring();
    if (is_zero(x))
        return;
    if (auto q = try_divide(x, pivot)) {
        red.cols(t, j, one(ring), -*q, zero(ring), one(ring), "add");
        return;
    }
    const ExtendedGcd g = gcdex(pivot, x);
    red.cols(t, j, g.u, -g.b0, g.v, g.a0, "bezout");
}

} // namespace

HermitePair hermite_reduce_pair(const Element& a, const Element& b)
{
    const ExtendedGcd g = gcdex(a, b);
    const Ring& ring = a.ring();
    if (g.degenerate)
        return {g.d, Matrix::identity(ring, 2)};
    return {g.d, Matrix::from_rows(ring, {{g.u, -g.b0}, {g.v, g.a0}})};
}

Element gelfand_range_1_witness(const Element& a, const Element& b)
{
    if (!(a.ring() == b.ring()))
        throw Error(ErrorCode::ring_mismatch, "operands live in different rings");
    if (is_zero(a) && is_zero(b))
        throw Error(ErrorCode::not_comaximal, "aR + bR = 0");
    for (long n = 0;; n = n > 0 ? -n : -n + 1) {
        const Element t = from_integer(a.ring(), n);
        if (!is_zero(a + b * t))
            return t;
    }
}

DiagonalReduction diagonal_reduce(const Matrix& a)
{
    if (a.ring().is_quotient())
        throw Error(ErrorCode::unsupported_ring, "diagonal_reduce needs Z, Q[x] or F_p[x]");
    Reducer red(a);
    const std::size_t m = a.rows(), n = a.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // Pivot: nonzero entry of least euclidean size in the trailing block.
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const Element& x = red.current()(i, j);
                if (!is_zero(x) &&
                    (!best || euclidean_size(x) < euclidean_size(red.current()(best->first, best->second))))
                    best = std::make_pair(i, j);
            }
        if (!best)
            break;
        red.swap_rows(t, best->first);
        red.swap_cols(t, best->second);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i)
                clear_below(red, t, i);
            for (std::size_t j = t + 1; j < n; ++j)
                clear_right(red, t, j);
            for (std::size_t i = t + 1; i < m && clean; ++i)
                clean = is_zero(red.current()(i, t));
            if (!clean)
                continue;
            // The pivot must divide the trailing block; otherwise fold the
            // offending row into row t and eliminate again.
            std::optional<std::size_t> offender;
            for (std::size_t i = t + 1; i < m && !offender; ++i)
                for (std::size_t j = t + 1; j < n && !offender; ++j)
                    if (!try_divide(red.current()(i, j), red.current()(t, t)))
                        offender = i;
            if (!offender)
                break;
            red.rows(t, *offender, one(a.ring()), one(a.ring()), zero(a.ring()), one(a.ring()), "add");
        }
        const Element w = normalizing_unit(red.current()(t, t));
        if (!is_one(w))
            red.scale_row(t, w);
    }
    return std::move(red).finish();
}

std::vector<std::string> check_trace(const Theorem21Trace& t)
{
    std::vector<std::string> out;
    auto need = [&](bool ok, const char* what) {
        if (!ok)
            out.emplace_back(what);
    };
    const Element one_ = one(t.a.ring());
    need(t.a * t.u + t.c * t.v == t.d, "a*u + c*v != d");
    need(comaximal(t.b, t.d), "bR + dR != R");
    need(t.k == t.b + t.d * t.t, "k != b + d*t");
    need(!is_zero(t.k), "k = 0");
    need(t.k == t.r * t.s, "k != r*s");
    need(comaximal(t.r, t.a), "rR + aR != R");
    need(comaximal(t.s, t.c), "sR + cR != R");
    need(t.s * t.p + t.c * t.l == one_, "s*p + c*l != 1");
    need(t.q == t.r * t.l, "q != r*l");
    need(t.p == t.p1 * t.delta && t.q == t.q1 * t.delta, "p, q != (p1, q1)*delta");
    need(comaximal(t.p1, t.q1), "p1R + q1R != R");
    need(t.alpha == t.p1 * t.a && t.beta == t.p1 * t.k + t.q1 * t.c, "alpha, beta mismatch");
    need(comaximal(t.alpha, t.beta), "p1*a and p1*k + q1*c are not comaximal");
    return out;
}

Theorem21Result reduce_2x2_theorem21(const Element& a, const Element& b, const Element& c)
{
    if (!(a.ring() == b.ring()) || !(a.ring() == c.ring()))
        throw Error(ErrorCode::ring_mismatch, "operands live in different rings");
    const Ring& ring = a.ring();
    if (ring.is_quotient())
        throw Error(ErrorCode::unsupported_ring, "the 2x2 procedure needs Z, Q[x] or F_p[x]");
    const Element g = gcdex(gcdex(a, b).d, c).d;
    if (!is_unit(g))
        throw Error(ErrorCode::precondition_failed,
                    "precondition aR+bR+cR=R fails: gcd(a, b, c) = " + to_string(g));

    Theorem21Trace tr{a, b, c, a, a, a, a, a, a, a, a, a, a, a, a, a, a, a};
    // d = gcd(a, c) is coprime to b, and adding t*d to b stays inside the
    // orbit of elementary shears.
    const ExtendedGcd ac = gcdex(a, c);
    tr.d = ac.d;
    tr.u = ac.u;
    tr.v = ac.v;
    tr.t = gelfand_range_1_witness(b, tr.d);
    tr.k = b + tr.d * tr.t;

    const SplitWitness split = gelfand_decompose(tr.k, a, c);
    tr.r = split.r;
    tr.s = split.s;
    const ExtendedGcd sc = gcdex(tr.s, c);
    const Element w = inverse(sc.d);
    tr.p = sc.u * w;
    tr.l = sc.v * w;
    tr.q = tr.r * tr.l;
    const ExtendedGcd pq = gcdex(tr.p, tr.q);
    tr.delta = pq.d;
    tr.p1 = pq.a0;
    tr.q1 = pq.b0;
    tr.alpha = tr.p1 * a;
    tr.beta = tr.p1 * tr.k + tr.q1 * c;
    if (auto bad = check_trace(tr); !bad.empty())
        throw Error(ErrorCode::trace_invariant_violation, bad.front());

    const Matrix input = Matrix::from_rows(ring, {{a, zero(ring)}, {b, c}});
    Reducer red(input);
    const Element o = one(ring), z = zero(ring);
    // [[a, 0], [b, c]] -> [[a, 0], [k, c]]
    red.rows(0, 1, o, z, tr.u * tr.t, o, "shear");
    red.cols(0, 1, o, z, tr.v * tr.t, o, "shear");
    // The column (p1, q1) is unimodular and maps to (alpha, beta).
    const ExtendedGcd unimodular = gcdex(tr.p1, tr.q1);
    const Element wu = inverse(unimodular.d);
    red.cols(0, 1, tr.p1, -(unimodular.v * wu), tr.q1, unimodular.u * wu, "kaplansky");
    const ExtendedGcd ab = gcdex(tr.alpha, tr.beta);
    const Element wa = inverse(ab.d);
    red.rows(0, 1, ab.u * wa, ab.v * wa, -tr.beta, tr.alpha, "kaplansky");
    // Now [[1, e], [0, f]] with f an associate of a*c.
    const Element e = red.current()(0, 1);
    if (!is_zero(e))
        red.cols(0, 1, o, -e, z, o, "add");
    const Element unit = normalizing_unit(red.current()(1, 1));
    if (!is_one(unit))
        red.scale_row(1, unit);

    Theorem21Result out{std::move(red).finish(), tr};
    if (!is_one(out.reduction.D(0, 0)) || !(out.reduction.D(1, 1) == canonical_associate(a * c)))
        throw Error(ErrorCode::trace_invariant_violation, "final diagonal is not diag(1, a*c)");
    return out;
}

} // namespace bezout
