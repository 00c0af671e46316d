#include "bezout/finite_ring.hpp"

#include "bezout/encoding.hpp"

#include <algorithm>
#include <numeric>

namespace bezout {

namespace {

using Digits = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    for (a %= m; k; k >>= 1, a = mulmod(a, a, m))
        if (k & 1)
            r = mulmod(r, a, m);
    return r;
}

void trim(Digits& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

// gcd over F_p of two trimmed polynomials; only its degree matters here.
long gcd_degree(Digits a, Digits b, std::uint64_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        const std::uint64_t inv = powmod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            const std::uint64_t factor = mulmod(a.back(), inv, p);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = (a[shift + i] + p - mulmod(factor, b[i], p)) % p;
            trim(a);
        }
        std::swap(a, b);
    }
    return static_cast<long>(a.size()) - 1;
}

} // namespace

struct FiniteRing::Cache {
    bool ideals_ready = false;
    std::vector<std::uint32_t> class_of;
    std::vector<Index> representative;
    std::vector<std::vector<char>> mask;
    std::vector<std::vector<Index>> members;
    mutable std::vector<char> comax; // 0 unknown, 1 no, 2 yes
    std::optional<std::vector<char>> radical;
};

FiniteRing::FiniteRing(Ring q, AnalysisCaps caps) : ring_(std::move(q)), caps_(caps)
{
    size_ = checked_size(ring_, caps_.linear);
    one_ = index(bezout::one(ring_));
    if (ring_.base().kind() == RingKind::integers) {
        n_ = size_;
    } else {
        p_ = ring_.field().characteristic().get_ui();
        const Poly& f = ring_.modulus().polynomial();
        degree_ = static_cast<std::size_t>(f.degree());
        for (const auto& c : f.coefficients())
            modulus_.push_back(c.get_num().get_ui());
        powers_.assign(degree_ + 1, 1);
        for (std::size_t i = 1; i <= degree_; ++i)
            powers_[i] = powers_[i - 1] * p_;
    }
    unit_.assign(size_, 0);
    for (Index a = 0; a < size_; ++a) {
        if (n_) {
            unit_[a] = std::gcd<std::uint64_t>(a, n_) == 1;
        } else {
            Digits digits(degree_);
            std::uint64_t rest = a;
            for (auto& d : digits) {
                d = rest % p_;
                rest /= p_;
            }
            unit_[a] = gcd_degree(std::move(digits), modulus_, p_) == 0;
        }
    }
    if (!n_ && size_ <= 2048) {
        std::vector<Index> table(size_ * size_);
        for (Index a = 0; a < size_; ++a)
            for (Index b = 0; b <= a; ++b)
                table[a * size_ + b] = table[b * size_ + a] = mul(a, b);
        table_ = std::move(table);
    }
}

FiniteRing::~FiniteRing() = default;
FiniteRing::FiniteRing(FiniteRing&&) noexcept = default;
FiniteRing& FiniteRing::operator=(FiniteRing&&) noexcept = default;

FiniteRing::Index FiniteRing::add(Index a, Index b) const
{
    if (n_)
        return static_cast<Index>((std::uint64_t{a} + b) % n_);
    Index out = 0;
    for (std::size_t i = 0; i < degree_; ++i) {
        const std::uint64_t da = a / powers_[i] % p_, db = b / powers_[i] % p_;
        out += static_cast<Index>((da + db) % p_ * powers_[i]);
    }
    return out;
}

FiniteRing::Index FiniteRing::sub(Index a, Index b) const
{
    if (n_)
        return static_cast<Index>((std::uint64_t{a} + n_ - b) % n_);
    Index out = 0;
    for (std::size_t i = 0; i < degree_; ++i) {
        const std::uint64_t da = a / powers_[i] % p_, db = b / powers_[i] % p_;
        out += static_cast<Index>((da + p_ - db) % p_ * powers_[i]);
    }
    return out;
}

FiniteRing::Index FiniteRing::mul(Index a, Index b) const
{
    if (n_)
        return static_cast<Index>(std::uint64_t{a} * b % n_);
    if (!table_.empty())
        return table_[std::size_t{a} * size_ + b];
    Digits prod(2 * degree_, 0);
    for (std::size_t i = 0; i < degree_; ++i) {
        const std::uint64_t da = a / powers_[i] % p_;
        if (da == 0)
            continue;
        for (std::size_t j = 0; j < degree_; ++j)
            prod[i + j] = (prod[i + j] + mulmod(da, b / powers_[j] % p_, p_)) % p_;
    }
    // The modulus is monic: subtract multiples of x^k f from the top down.
    for (std::size_t k = prod.size(); k-- > degree_;) {
        const std::uint64_t c = prod[k];
        if (c == 0)
            continue;
        const std::size_t shift = k - degree_;
        for (std::size_t i = 0; i <= degree_; ++i)
            prod[shift + i] = (prod[shift + i] + p_ - mulmod(c, modulus_[i], p_)) % p_;
    }
    Index out = 0;
    for (std::size_t i = 0; i < degree_; ++i)
        out += static_cast<Index>(prod[i] * powers_[i]);
    return out;
}

FiniteRing::Index FiniteRing::pow(Index a, std::uint64_t k) const
{
    Index r = one_;
    for (; k; k >>= 1, a = mul(a, a))
        if (k & 1)
            r = mul(r, a);
    return r;
}

Element FiniteRing::element(Index a) const
{
    return element_at(ring_, mpz_class(static_cast<unsigned long>(a)));
}

FiniteRing::Index FiniteRing::index(const Element& a) const
{
    if (!(a.ring() == ring_))
        throw Error(ErrorCode::ring_mismatch, "element does not belong to " + ring_.describe());
    return static_cast<Index>(index_of(a).get_ui());
}

std::vector<Element> FiniteRing::elements(const std::vector<Index>& xs) const
{
    std::vector<Element> out;
    out.reserve(xs.size());
    for (Index x : xs)
        out.push_back(element(x));
    return out;
}

std::vector<FiniteRing::Index> FiniteRing::idempotents() const
{
    std::vector<Index> out;
    for (Index a = 0; a < size_; ++a)
        if (is_idempotent(a))
            out.push_back(a);
    return out;
}

std::size_t FiniteRing::unit_count() const
{
    return static_cast<std::size_t>(std::count(unit_.begin(), unit_.end(), 1));
}

std::vector<FiniteRing::Index> FiniteRing::principal_ideal(Index a) const
{
    std::vector<char> seen(size_, 0);
    for (Index y = 0; y < size_; ++y)
        seen[mul(a, y)] = 1;
    std::vector<Index> out;
    for (Index x = 0; x < size_; ++x)
        if (seen[x])
            out.push_back(x);
    return out;
}

std::vector<FiniteRing::Index> FiniteRing::annihilator(Index a) const
{
    std::vector<Index> out;
    for (Index x = 0; x < size_; ++x)
        if (mul(a, x) == 0)
            out.push_back(x);
    return out;
}

void FiniteRing::require_quadratic(const char* what) const
{
    if (size_ > caps_.quadratic)
        throw Error(ErrorCode::too_large, std::string(what) + " on " + ring_.describe() + " with " +
                                              std::to_string(size_) + " elements exceeds the cap of " +
                                              std::to_string(caps_.quadratic));
}

const FiniteRing::Cache& FiniteRing::ideals() const
{
    if (!cache_)
        cache_ = std::make_unique<Cache>();
    Cache& c = *cache_;
    if (c.ideals_ready)
        return c;
    require_quadratic("principal ideal lattice");
    std::map<std::vector<char>, std::uint32_t> ids;
    c.class_of.resize(size_);
    for (Index a = 0; a < size_; ++a) {
        std::vector<char> mask(size_, 0);
        for (Index y = 0; y < size_; ++y)
            mask[mul(a, y)] = 1;
        auto [it, inserted] = ids.try_emplace(std::move(mask), static_cast<std::uint32_t>(c.mask.size()));
        if (inserted) {
            c.representative.push_back(a);
            c.mask.push_back(it->first);
            std::vector<Index> members;
            for (Index x = 0; x < size_; ++x)
                if (it->first[x])
                    members.push_back(x);
            c.members.push_back(std::move(members));
        }
        c.class_of[a] = it->second;
    }
    c.comax.assign(c.mask.size() * c.mask.size(), 0);
    c.ideals_ready = true;
    return c;
}

bool FiniteRing::comaximal(Index a, Index b) const
{
    const Cache& c = ideals();
    const std::size_t k = c.mask.size();
    const std::uint32_t i = c.class_of[a], j = c.class_of[b];
    char& memo = c.comax[i * k + j];
    if (memo == 0) {
        // 1 in aR + bR iff 1 - a*r lies in bR for some r.
        bool found = false;
        const Index rep = c.representative[i];
        for (Index r = 0; r < size_ && !found; ++r)
            found = c.mask[j][sub(one_, mul(rep, r))] != 0;
        memo = found ? 2 : 1;
        c.comax[j * k + i] = memo;
    }
    return memo == 2;
}

const std::vector<char>& FiniteRing::radical_mask() const
{
    if (!cache_)
        cache_ = std::make_unique<Cache>();
    if (!cache_->radical) {
        require_quadratic("jacobson_radical");
        std::vector<char> mask(size_, 0);
        for (Index x = 0; x < size_; ++x) {
            bool in = true;
            for (Index y = 0; y < size_ && in; ++y)
                in = is_unit(add(one_, mul(x, y)));
            mask[x] = in;
        }
        cache_->radical = std::move(mask);
    }
    return *cache_->radical;
}

std::vector<FiniteRing::Index> FiniteRing::jacobson_radical() const
{
    const auto& mask = radical_mask();
    std::vector<Index> out;
    for (Index x = 0; x < size_; ++x)
        if (mask[x])
            out.push_back(x);
    return out;
}

bool FiniteRing::in_jacobson_radical(Index a) const
{
    return radical_mask()[a] != 0;
}

Verdict FiniteRing::is_field() const
{
    for (Index a = 1; a < size_; ++a)
        if (!is_unit(a))
            return {false, {{"non_unit", {element(a)}}}};
    return {true, {}};
}

Verdict FiniteRing::is_reduced() const
{
    for (Index a = 1; a < size_; ++a)
        if (pow(a, size_) == 0)
            return {false, {{"nilpotent", {element(a)}}}};
    return {true, {}};
}

Verdict FiniteRing::is_indecomposable() const
{
    for (Index e : idempotents())
        if (e != 0 && e != one_)
            return {false, {{"nontrivial_idempotent", {element(e)}}}};
    return {true, {}};
}

Verdict FiniteRing::is_clean() const
{
    const std::vector<Index> es = idempotents();
    for (Index a = 0; a < size_; ++a) {
        const bool clean = std::any_of(es.begin(), es.end(), [&](Index e) { return is_unit(sub(a, e)); });
        if (!clean)
            return {false, {{"not_clean", {element(a)}}}};
    }
    return {true, {}};
}

Verdict FiniteRing::is_von_neumann_regular() const
{
    require_quadratic("is_von_neumann_regular");
    for (Index a = 0; a < size_; ++a) {
        bool found = false;
        for (Index x = 0; x < size_ && !found; ++x)
            found = mul(mul(a, x), a) == a;
        if (!found)
            return {false, {{"no_inner_inverse", {element(a)}}}};
    }
    return {true, {}};
}

Verdict FiniteRing::is_semiregular() const
{
    require_quadratic("is_semiregular");
    const auto& J = radical_mask();
    // R/J is von Neumann regular: a - a*x*a in J for some x.
    for (Index a = 0; a < size_; ++a) {
        bool found = false;
        for (Index x = 0; x < size_ && !found; ++x)
            found = J[sub(a, mul(mul(a, x), a))] != 0;
        if (!found)
            return {false, {{"not_regular_mod_radical", {element(a)}}}};
    }
    // Idempotents of R/J lift: a^2 - a in J gives an idempotent e with e - a in J.
    const std::vector<Index> es = idempotents();
    for (Index a = 0; a < size_; ++a) {
        if (!J[sub(mul(a, a), a)])
            continue;
        const bool lifts = std::any_of(es.begin(), es.end(), [&](Index e) { return J[sub(e, a)] != 0; });
        if (!lifts)
            return {false, {{"idempotent_does_not_lift", {element(a)}}}};
    }
    return {true, {}};
}

Verdict FiniteRing::is_semipotent() const
{
    require_quadratic("is_semipotent");
    const auto& J = radical_mask();
    for (Index b = 0; b < size_; ++b) {
        if (J[b])
            continue;
        bool found = false;
        for (Index y = 0; y < size_ && !found; ++y) {
            const Index e = mul(b, y);
            found = e != 0 && is_idempotent(e);
        }
        if (!found)
            return {false, {{"ideal_without_idempotent", {element(b)}}}};
    }
    return {true, {}};
}

Verdict FiniteRing::is_gelfand() const
{
    require_quadratic("is_gelfand");
    const Cache& c = ideals();
    const std::size_t k = c.representative.size();
    // Comaximality and c*d = 0 only depend on the principal ideals involved.
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const Index a = c.representative[i], b = c.representative[j];
            if (!comaximal(a, b))
                continue;
            bool found = false;
            for (std::size_t s = 0; s < k && !found; ++s) {
                const Index x = c.representative[s];
                if (!comaximal(a, x))
                    continue;
                for (std::size_t t = 0; t < k && !found; ++t) {
                    const Index y = c.representative[t];
                    found = mul(x, y) == 0 && comaximal(b, y);
                }
            }
            if (!found)
                return {false, {{"comaximal_pair", {element(a), element(b)}}}};
        }
    }
    return {true, {}};
}

Verdict FiniteRing::is_stable_range_1() const
{
    require_quadratic("is_stable_range_1");
    const Cache& c = ideals();
    const std::size_t k = c.representative.size();
    // {a + b*y} = a + bR, so only the ideal of b matters.
    for (Index a = 0; a < size_; ++a) {
        for (std::size_t j = 0; j < k; ++j) {
            const Index b = c.representative[j];
            if (!comaximal(a, b))
                continue;
            const auto& bR = c.members[j];
            const bool found = std::any_of(bR.begin(), bR.end(), [&](Index z) { return is_unit(add(a, z)); });
            if (!found)
                return {false, {{"comaximal_pair", {element(a), element(b)}}}};
        }
    }
    return {true, {}};
}

std::vector<std::string> check_implications(const std::map<std::string, Verdict>& flags)
{
    static const std::pair<const char*, const char*> chain[] = {
        {"field", "von_neumann_regular"}, {"von_neumann_regular", "reduced"},
        {"field", "reduced"},             {"clean", "gelfand"},
        {"clean", "semipotent"},          {"von_neumann_regular", "semiregular"},
    };
    std::vector<std::string> out;
    for (const auto& [from, to] : chain) {
        auto f = flags.find(from), t = flags.find(to);
        if (f != flags.end() && t != flags.end() && f->second.holds && !t->second.holds)
            out.push_back(std::string(from) + " => " + to);
    }
    return out;
}

StructureReport analyze_ring(const Ring& q, AnalysisCaps caps)
{
    const FiniteRing fr(q, caps);
    StructureReport r;
    r.ring = q.describe();
    r.cardinality = fr.size();
    for (auto e : fr.idempotents())
        r.idempotents.push_back(fr.element(e));
    r.unit_count = fr.unit_count();

    const std::pair<const char*, Verdict (FiniteRing::*)() const> predicates[] = {
        {"field", &FiniteRing::is_field},
        {"reduced", &FiniteRing::is_reduced},
        {"indecomposable", &FiniteRing::is_indecomposable},
        {"clean", &FiniteRing::is_clean},
        {"von_neumann_regular", &FiniteRing::is_von_neumann_regular},
        {"semiregular", &FiniteRing::is_semiregular},
        {"semipotent", &FiniteRing::is_semipotent},
        {"gelfand", &FiniteRing::is_gelfand},
        {"stable_range_1", &FiniteRing::is_stable_range_1},
    };
    for (const auto& [name, fn] : predicates) {
        try {
            r.flags.emplace(name, (fr.*fn)());
        } catch (const Error& e) {
            if (e.code() != ErrorCode::too_large)
                throw;
            r.skipped.emplace(name, "cap");
        }
    }
    if (fr.size() <= caps.quadratic) {
        std::vector<Element> j;
        for (auto x : fr.jacobson_radical())
            j.push_back(fr.element(x));
        r.jacobson_radical = std::move(j);
    }
    r.implication_violations = check_implications(r.flags);
    return r;
}

nlohmann::json verdict_to_json(const Verdict& v)
{
    nlohmann::json evidence = nlohmann::json::array();
    for (const auto& e : v.evidence) {
        nlohmann::json elements = nlohmann::json::array();
        for (const auto& x : e.elements)
            elements.push_back(element_to_json(x));
        evidence.push_back({{"name", e.name}, {"elements", elements}});
    }
    return {{"holds", v.holds}, {"evidence", evidence}};
}

nlohmann::json report_to_json(const StructureReport& r)
{
    auto list = [](const std::vector<Element>& xs) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& x : xs)
            out.push_back(element_to_json(x));
        return out;
    };
    nlohmann::json flags = nlohmann::json::object();
    for (const auto& [name, v] : r.flags)
        flags[name] = verdict_to_json(v);
    nlohmann::json out = {
        {"ring", r.ring},
        {"cardinality", r.cardinality},
        {"idempotents", list(r.idempotents)},
        {"unit_count", r.unit_count},
        {"flags", flags},
        {"skipped", r.skipped},
        {"implication_violations", r.implication_violations},
    };
    out["jacobson_radical"] = r.jacobson_radical ? list(*r.jacobson_radical) : nlohmann::json(nullptr);
    return out;
}

} // namespace bezout
