#pragma once

// Element classifiers and two-factor decompositions over Z, Q[x] and F_p[x].
//
// Classifiers factor their argument and are therefore budgeted; the splits
// (adequate, avoidable, Gelfand) only iterate gcds and have no budget.

#include "bezout/factor.hpp"
#include "bezout/finite_ring.hpp"
#include "bezout/ring.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bezout {

/// Not a zero divisor. Finite quotients are checked by enumeration (cap),
/// Q[x]/f through gcd(lift a, f).
bool is_regular(const Element& a, std::size_t cap = default_enumeration_cap);

// The three classifiers below take a nonzero non-unit of Z, Q[x] or F_p[x]
// and raise UnitOrZeroInput otherwise.

/// Irreducible; equivalently R/aR is a field.
bool is_atom(const Element& a, const FactorBudget& budget = {});
/// Squarefree: every factorization a = bc has bR + cR = R.
bool is_inpseudo_irreducible(const Element& a, const FactorBudget& budget = {});
/// A power of a single prime up to a unit: no split into comaximal non-units.
bool is_pseudo_irreducible(const Element& a, const FactorBudget& budget = {});

struct ComaximalFactorization {
    Element base;
    Element unit;
    std::vector<Element> factors; // prime powers, pairwise comaximal
};

ComaximalFactorization comaximal_refinement(const Element& a, const FactorBudget& budget = {});

enum class SplitKind { adequate, avoidable, gelfand, semipotent };

std::string to_string(SplitKind kind);

/// a = r*s relative to b (and c for avoidable / Gelfand splits).
struct SplitWitness {
    SplitKind kind = SplitKind::adequate;
    Element a;
    Element b;
    std::optional<Element> c;
    Element r;
    Element s;
    /// Semipotent splits: the idempotent of (R/aR) that produced the split.
    std::optional<Element> idempotent;
};

/// r = a with every factor shared with b moved into s. Throws ZeroInput.
SplitWitness adequate_split(const Element& a, const Element& b);

/// Requires aR + bR + cR = R (PreconditionFailed) and a != 0 (ZeroInput).
SplitWitness avoidable_decompose(const Element& a, const Element& b, const Element& c);
SplitWitness gelfand_decompose(const Element& a, const Element& b, const Element& c);

struct InRadical {
    Element a;
    Element b;
};

using SemipotentResult = std::variant<SplitWitness, InRadical>;

/// InRadical when b + aR lies in J(R/aR); otherwise the split built from an
/// idempotent of the ideal generated by b + aR. R/aR must be finite and
/// within caps.quadratic.
SemipotentResult semipotent_witness(const Element& a, const Element& b, AnalysisCaps caps = {});

/// Every condition the witness kind promises that fails, as readable text.
std::vector<std::string> verify_split(const SplitWitness& w);

/// Repeatedly strip gcd(t, b) from t = s; the terminal t.
Element coprime_core(const Element& s, const Element& b);

nlohmann::json split_to_json(const SplitWitness& w);
nlohmann::json factorization_to_json(const ComaximalFactorization& f);

} // namespace bezout
