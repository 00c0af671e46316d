#include "bezout/matrix.hpp"

#include "bezout/encoding.hpp"

#include <functional>

namespace bezout {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, zero(ring_))
{
}

Matrix Matrix::identity(const Ring& ring, std::size_t n)
{
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = one(ring);
    return m;
}

Matrix Matrix::from_rows(const Ring& ring, const std::vector<std::vector<Element>>& rows)
{
    if (rows.empty() || rows.front().empty())
        throw Error(ErrorCode::parse_error, "matrix must have at least one row and one column");
    Matrix m(ring, rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw Error(ErrorCode::parse_error, "matrix rows have different lengths");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!(rows[i][j].ring() == ring))
                throw Error(ErrorCode::ring_mismatch, "matrix entry outside " + ring.describe());
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorCode::precondition_failed, "matrix shapes do not match for multiplication");
    Matrix out(a.ring(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k)))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = out(i, j) + a(i, k) * b(k, j);
        }
    return out;
}

Element determinant(const Matrix& a)
{
    if (a.rows() != a.cols())
        throw Error(ErrorCode::precondition_failed, "determinant of a non-square matrix");
    if (a.rows() > 8)
        throw Error(ErrorCode::too_large, "direct determinant is limited to 8x8");
    const std::size_t n = a.rows();
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
        cols.push_back(j);
    std::function<Element(std::size_t, std::vector<std::size_t>&)> expand =
        [&](std::size_t row, std::vector<std::size_t>& free) -> Element {
        if (row == n)
            return one(a.ring());
        Element sum = zero(a.ring());
        for (std::size_t k = 0; k < free.size(); ++k) {
            const std::size_t j = free[k];
            if (is_zero(a(row, j)))
                continue;
            free.erase(free.begin() + static_cast<long>(k));
            Element term = a(row, j) * expand(row + 1, free);
            free.insert(free.begin() + static_cast<long>(k), j);
            sum = k % 2 ? sum - term : sum + term;
        }
        return sum;
    };
    return expand(0, cols);
}

namespace {

mpz_class integer_determinant(const std::vector<std::vector<mpz_class>>& m, std::size_t row,
                              std::vector<std::size_t>& free)
{
    if (row == m.size())
        return 1;
    mpz_class sum = 0;
    for (std::size_t k = 0; k < free.size(); ++k) {
        const std::size_t j = free[k];
        if (m[row][j] == 0)
            continue;
        free.erase(free.begin() + static_cast<long>(k));
        const mpz_class term = m[row][j] * integer_determinant(m, row + 1, free);
        free.insert(free.begin() + static_cast<long>(k), j);
        sum += k % 2 ? mpz_class(-term) : term;
    }
    return sum;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace

std::vector<mpz_class> snf_oracle_integers(const Matrix& a)
{
    if (a.ring().kind() != RingKind::integers)
        throw Error(ErrorCode::unsupported_ring, "the minors oracle works over Z only");
    const std::size_t n = std::min(a.rows(), a.cols());
    if (n > 6)
        throw Error(ErrorCode::too_large, "the minors oracle is limited to min(rows, cols) <= 6");
    std::vector<mpz_class> out;
    mpz_class previous = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        mpz_class delta = 0;
        for (const auto& rs : subsets(a.rows(), k))
            for (const auto& cs : subsets(a.cols(), k)) {
                std::vector<std::vector<mpz_class>> minor(k, std::vector<mpz_class>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        minor[i][j] = a(rs[i], cs[j]).integer();
                std::vector<std::size_t> free;
                for (std::size_t j = 0; j < k; ++j)
                    free.push_back(j);
                const mpz_class det = integer_determinant(minor, 0, free);
                mpz_gcd(delta.get_mpz_t(), delta.get_mpz_t(), det.get_mpz_t());
            }
        out.push_back(previous == 0 ? mpz_class(0) : mpz_class(delta / previous));
        previous = delta;
    }
    return out;
}

VerificationResult verify_reduction(const Matrix& a, const DiagonalReduction& red)
{
    VerificationResult out;
    auto fail = [&](std::string what) {
        out.ok = false;
        out.violations.push_back(std::move(what));
    };
    const std::size_t m = a.rows(), n = a.cols();
    if (red.P.rows() != m || red.P.cols() != m || red.Q.rows() != n || red.Q.cols() != n ||
        red.D.rows() != m || red.D.cols() != n || red.P_inv.rows() != m || red.P_inv.cols() != m ||
        red.Q_inv.rows() != n || red.Q_inv.cols() != n) {
        fail("shape mismatch");
        return out;
    }
    if (!(red.P * a * red.Q == red.D))
        fail("P*A*Q != D");
    const Matrix Im = Matrix::identity(a.ring(), m), In = Matrix::identity(a.ring(), n);
    if (!(red.P * red.P_inv == Im) || !(red.P_inv * red.P == Im))
        fail("P_inv is not the inverse of P");
    if (!(red.Q * red.Q_inv == In) || !(red.Q_inv * red.Q == In))
        fail("Q_inv is not the inverse of Q");
    if (m <= 3 && !is_unit(determinant(red.P)))
        fail("det P is not a unit");
    if (n <= 3 && !is_unit(determinant(red.Q)))
        fail("det Q is not a unit");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !is_zero(red.D(i, j)))
                fail("D is not diagonal at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    for (std::size_t i = 0; i + 1 < std::min(m, n); ++i)
        if (!try_divide(red.D(i + 1, i + 1), red.D(i, i)))
            fail("divisibility chain breaks: d" + std::to_string(i + 1) + " = " + to_string(red.D(i, i)) +
                 " does not divide d" + std::to_string(i + 2) + " = " + to_string(red.D(i + 1, i + 1)));
    return out;
}

nlohmann::json matrix_to_json(const Matrix& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(element_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Ring& ring, const nlohmann::json& rows)
{
    if (!rows.is_array())
        throw Error(ErrorCode::parse_error, "matrix must be an array of rows");
    std::vector<std::vector<Element>> out;
    for (const auto& row : rows) {
        if (!row.is_array())
            throw Error(ErrorCode::parse_error, "matrix row must be an array");
        std::vector<Element> r;
        for (const auto& entry : row)
            r.push_back(element_from_json(ring, entry));
        out.push_back(std::move(r));
    }
    return Matrix::from_rows(ring, out);
}

nlohmann::json reduction_to_json(const DiagonalReduction& red)
{
    nlohmann::json certificate = nlohmann::json::array();
    for (const auto& t : red.certificate) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& e : t.entries)
            entries.push_back(element_to_json(e));
        certificate.push_back({{"side", t.side}, {"op", t.op}, {"i", t.i}, {"j", t.j}, {"entries", entries}});
    }
    return {
        {"P", matrix_to_json(red.P)},         {"D", matrix_to_json(red.D)},
        {"Q", matrix_to_json(red.Q)},         {"P_inv", matrix_to_json(red.P_inv)},
        {"Q_inv", matrix_to_json(red.Q_inv)}, {"certificate", certificate},
    };
}

nlohmann::json trace_to_json(const Theorem21Trace& t)
{
    const std::pair<const char*, const Element*> fields[] = {
        {"a", &t.a},         {"b", &t.b},   {"c", &t.c},         {"d", &t.d},         {"u", &t.u},
        {"v", &t.v},         {"t", &t.t},   {"k", &t.k},         {"r", &t.r},         {"s", &t.s},
        {"p", &t.p},         {"l", &t.l},   {"q", &t.q},         {"delta", &t.delta}, {"p1", &t.p1},
        {"q1", &t.q1},       {"alpha", &t.alpha}, {"beta", &t.beta},
    };
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [name, value] : fields)
        out[name] = element_to_json(*value);
    return out;
}

} // namespace bezout
