#include "bezout/encoding.hpp"

#include "bezout/quotient.hpp"

#include <cctype>
#include <regex>
#include <vector>

namespace bezout {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

mpq_class parse_rational(std::string_view token)
{
    static const std::regex pattern(R"([+-]?[0-9]+(/[0-9]+)?)");
    std::string text(trim(token));
    if (!text.empty() && text.front() == '+')
        text.erase(0, 1);
    if (!std::regex_match(text, pattern))
        throw Error(ErrorCode::parse_error, "not a number: '" + text + "'");
    mpq_class q(text);
    if (q.get_den() == 0)
        throw Error(ErrorCode::parse_error, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

mpz_class parse_integer(std::string_view token)
{
    mpq_class q = parse_rational(token);
    if (q.get_den() != 1)
        throw Error(ErrorCode::parse_error, "expected an integer, got " + q.get_str());
    return q.get_num();
}

Poly parse_coefficient_list(std::string_view text)
{
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw Error(ErrorCode::parse_error, "expected a coefficient list like [1,0,1]");
    text = trim(text.substr(1, text.size() - 2));
    std::vector<mpq_class> coeffs;
    while (!text.empty()) {
        const auto comma = text.find(',');
        coeffs.push_back(parse_rational(text.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        text = text.substr(comma + 1);
    }
    return Poly(std::move(coeffs));
}

Payload payload_for(const Ring& domain, const mpq_class& q)
{
    if (domain.kind() == RingKind::integers) {
        if (q.get_den() != 1)
            throw Error(ErrorCode::parse_error, "expected an integer, got " + q.get_str());
        return q.get_num();
    }
    return Poly::constant(q);
}

const Ring& domain_of(const Ring& ring)
{
    return ring.is_quotient() ? ring.base() : ring;
}

nlohmann::json integer_json(const mpz_class& n)
{
    if (n.fits_slong_p())
        return n.get_si();
    return n.get_str();
}

nlohmann::json rational_json(const mpq_class& q)
{
    if (q.get_den() == 1)
        return integer_json(q.get_num());
    return q.get_str();
}

mpq_class rational_from_json(const nlohmann::json& v)
{
    if (v.is_number_integer())
        return mpq_class(mpz_class(std::to_string(v.get<long long>())));
    if (v.is_number_unsigned())
        return mpq_class(mpz_class(std::to_string(v.get<unsigned long long>())));
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    throw Error(ErrorCode::parse_error, "expected an exact number, got " + v.dump());
}

} // namespace

Ring parse_ring(std::string_view input)
{
    const std::string text(trim(input));
    static const std::regex integers(R"(Z)");
    static const std::regex rationals_poly(R"(Q\[x\])");
    static const std::regex prime_poly(R"(F([0-9]+)\[x\])");
    static const std::regex int_quotient(R"(Z/(-?[0-9]+))");
    static const std::regex poly_quotient(R"((Q|F[0-9]+)\[x\]/(\[.*\]))");
    std::smatch m;
    if (std::regex_match(text, integers))
        return Ring::integers();
    if (std::regex_match(text, rationals_poly))
        return Ring::polynomials(CoefficientField::rationals());
    if (std::regex_match(text, m, prime_poly)) {
        mpz_class p(m[1].str());
        if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
            throw Error(ErrorCode::parse_error, "F" + p.get_str() + ": characteristic must be prime");
        return Ring::polynomials(CoefficientField::prime(p));
    }
    if (std::regex_match(text, m, int_quotient)) {
        const Ring z = Ring::integers();
        return make_quotient(z, Element(z, parse_integer(m[1].str())));
    }
    if (std::regex_match(text, m, poly_quotient)) {
        const Ring base = parse_ring(m[1].str() + "[x]");
        return make_quotient(base, Element(base, parse_coefficient_list(m[2].str())));
    }
    throw Error(ErrorCode::parse_error,
                "unknown ring '" + text + "' (expected Z, Q[x], F<p>[x], Z/<n> or F<p>[x]/<poly>)");
}

Element parse_element(const Ring& ring, std::string_view input)
{
    const std::string_view text = trim(input);
    const Ring& domain = domain_of(ring);
    Payload payload;
    if (!text.empty() && text.front() == '[') {
        if (domain.kind() == RingKind::integers)
            throw Error(ErrorCode::parse_error, "coefficient list given for an integer ring");
        payload = parse_coefficient_list(text);
    } else {
        payload = payload_for(domain, parse_rational(text));
    }
    return Element(ring, std::move(payload));
}

nlohmann::json element_to_json(const Element& a)
{
    if (auto* n = std::get_if<mpz_class>(&a.value()))
        return integer_json(*n);
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : a.polynomial().coefficients())
        out.push_back(rational_json(c));
    return out;
}

Element element_from_json(const Ring& ring, const nlohmann::json& value)
{
    const Ring& domain = domain_of(ring);
    if (value.is_array()) {
        if (domain.kind() == RingKind::integers)
            throw Error(ErrorCode::parse_error, "coefficient list given for an integer ring");
        std::vector<mpq_class> coeffs;
        for (const auto& c : value)
            coeffs.push_back(rational_from_json(c));
        return Element(ring, Poly(std::move(coeffs)));
    }
    return Element(ring, payload_for(domain, rational_from_json(value)));
}

} // namespace bezout
