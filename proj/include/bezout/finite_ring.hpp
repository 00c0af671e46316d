#pragma once

// Brute-force structure predicates on finite quotient rings Z/n and F_p[x]/f.
//
// Elements are addressed by their canonical index (see element_at), and all
// arithmetic runs natively on indices. Predicates that loop over pairs of
// elements refuse rings larger than the quadratic cap.

#include "bezout/quotient.hpp"
#include "bezout/ring.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bezout {

struct AnalysisCaps {
    std::size_t linear = default_enumeration_cap;
    std::size_t quadratic = 5000;
};

/// A named tuple of elements backing a verdict, e.g. {"counterexample", [2]}.
struct Evidence {
    std::string name;
    std::vector<Element> elements;
};

struct Verdict {
    bool holds = false;
    std::vector<Evidence> evidence;
};

class FiniteRing {
public:
    using Index = std::uint32_t;

    /// Throws TooLarge above caps.linear, UnsupportedRing for infinite rings.
    explicit FiniteRing(Ring q, AnalysisCaps caps = {});
    ~FiniteRing();
    FiniteRing(FiniteRing&&) noexcept;
    FiniteRing& operator=(FiniteRing&&) noexcept;

    const Ring& ring() const { return ring_; }
    std::size_t size() const { return size_; }
    const AnalysisCaps& caps() const { return caps_; }

    Index add(Index a, Index b) const;
    Index sub(Index a, Index b) const;
    Index mul(Index a, Index b) const;
    Index pow(Index a, std::uint64_t k) const;
    Index one() const { return one_; }
    bool is_unit(Index a) const { return unit_[a] != 0; }
    bool is_idempotent(Index a) const { return mul(a, a) == a; }

    Element element(Index a) const;
    Index index(const Element& a) const;

    std::vector<Index> idempotents() const;
    std::size_t unit_count() const;
    /// Members of aR in increasing index order.
    std::vector<Index> principal_ideal(Index a) const;
    /// {x : a*x = 0} in increasing index order.
    std::vector<Index> annihilator(Index a) const;
    /// 1 in aR + bR, decided on the lattice of principal ideals.
    bool comaximal(Index a, Index b) const;

    // Quadratic in the ring size; TooLarge above caps.quadratic.
    std::vector<Index> jacobson_radical() const;
    bool in_jacobson_radical(Index a) const;

    Verdict is_field() const;
    Verdict is_reduced() const;
    Verdict is_indecomposable() const;
    Verdict is_clean() const;
    Verdict is_von_neumann_regular() const;
    Verdict is_semiregular() const;
    Verdict is_semipotent() const;
    Verdict is_gelfand() const;
    Verdict is_stable_range_1() const;

private:
    struct Cache;

    void require_quadratic(const char* what) const;
    const Cache& ideals() const;
    const std::vector<char>& radical_mask() const;
    std::vector<Element> elements(const std::vector<Index>& xs) const;

    Ring ring_;
    AnalysisCaps caps_;
    std::size_t size_ = 0;
    Index one_ = 0;
    // Z/n: modulus; F_p[x]/f: characteristic and monic modulus digits.
    std::uint64_t n_ = 0;
    std::uint64_t p_ = 0;
    std::size_t degree_ = 0;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint64_t> powers_;
    std::vector<char> unit_;
    std::vector<Index> table_;
    mutable std::unique_ptr<Cache> cache_;
};

/// Flag names in report order: field, reduced, von_neumann_regular,
/// indecomposable, clean, semiregular, semipotent, gelfand, stable_range_1.
struct StructureReport {
    std::string ring;
    std::size_t cardinality = 0;
    std::vector<Element> idempotents;
    std::size_t unit_count = 0;
    std::optional<std::vector<Element>> jacobson_radical;
    std::map<std::string, Verdict> flags;
    /// Flags that were not computed, with the reason.
    std::map<std::string, std::string> skipped;
    /// Broken implications such as "clean => gelfand"; always empty for a
    /// correct implementation.
    std::vector<std::string> implication_violations;
};

StructureReport analyze_ring(const Ring& q, AnalysisCaps caps = {});

/// Implications between the flags that were computed.
std::vector<std::string> check_implications(const std::map<std::string, Verdict>& flags);

nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json report_to_json(const StructureReport& r);

} // namespace bezout
