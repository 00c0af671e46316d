#pragma once

// Matrices over the ring instances and their diagonal reduction.

#include "bezout/ring.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace bezout {

class Matrix {
public:
    /// rows x cols zero matrix.
    Matrix(Ring ring, std::size_t rows, std::size_t cols);
    static Matrix identity(const Ring& ring, std::size_t n);
    /// Nonempty, rectangular, every entry in `ring`.
    static Matrix from_rows(const Ring& ring, const std::vector<std::vector<Element>>& rows);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Element& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Element& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Ring ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Laplace expansion; square matrices up to 8x8.
Element determinant(const Matrix& a);

/// One elementary or witness transform applied during a reduction. `side`
/// is "row" or "col"; `entries` is the 2x2 block [t11, t12, t21, t22] acting
/// on indices (i, j), or the single scaling unit when op == "scale".
struct Transform {
    std::string side;
    std::string op;
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<Element> entries;
};

struct DiagonalReduction {
    Matrix P;
    Matrix D;
    Matrix Q;
    Matrix P_inv;
    Matrix Q_inv;
    std::vector<Transform> certificate;
};

/// (a b) * Q = (d 0) with det Q = 1; Q = I when a = b = 0.
struct HermitePair {
    Element d;
    Matrix Q;
};

HermitePair hermite_reduce_pair(const Element& a, const Element& b);

/// First t in 0, 1, -1, 2, -2, ... with a + b*t nonzero. Nonzero elements of
/// the shipped domains all have clean, hence Gelfand, quotients. Throws
/// NotComaximal when a = b = 0.
Element gelfand_range_1_witness(const Element& a, const Element& b);

/// Witnesses of the 2x2 procedure for [[a, 0], [b, c]].
struct Theorem21Trace {
    Element a, b, c;
    Element d, u, v; // a*u + c*v = d
    Element t, k;    // k = b + d*t
    Element r, s;    // k = r*s, rR + aR = R, sR + cR = R
    Element p, l;    // s*p + c*l = 1
    Element q;       // q = r*l
    Element delta, p1, q1;
    Element alpha, beta; // p1*a and p1*k + q1*c, comaximal
};

/// Every trace identity that fails, as readable text.
std::vector<std::string> check_trace(const Theorem21Trace& t);

struct Theorem21Result {
    DiagonalReduction reduction;
    Theorem21Trace trace;
};

/// Diagonal reduction of [[a, 0], [b, c]] through an explicit unimodular
/// column (p1, q1). Throws PreconditionFailed when aR + bR + cR != R and
/// TraceInvariantViolation if a witness identity breaks.
Theorem21Result reduce_2x2_theorem21(const Element& a, const Element& b, const Element& c);

/// Smith form over Z, Q[x] or F_p[x]: normalized diagonal, divisibility chain,
/// zeros last. Throws UnsupportedRing for quotient rings.
DiagonalReduction diagonal_reduce(const Matrix& a);

/// d_k = Delta_k / Delta_{k-1} from gcds of k x k minors. Integer matrices
/// with min(rows, cols) <= 6.
std::vector<mpz_class> snf_oracle_integers(const Matrix& a);

struct VerificationResult {
    bool ok = true;
    std::vector<std::string> violations;
};

VerificationResult verify_reduction(const Matrix& a, const DiagonalReduction& red);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Ring& ring, const nlohmann::json& rows);
nlohmann::json reduction_to_json(const DiagonalReduction& red);
nlohmann::json trace_to_json(const Theorem21Trace& t);

} // namespace bezout
