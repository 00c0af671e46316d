#pragma once

// Command implementations behind the `bezout` executable. They live in the
// library so tests can drive them without spawning processes.

#include "bezout/finite_ring.hpp"
#include "bezout/ring.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bezout::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_input_error = 1,
    exit_verification_failure = 2,
    exit_theorem_violation = 3,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

inline const std::vector<std::string>& sweep_names()
{
    static const std::vector<std::string> names{"prop2", "prop7", "thm9",  "thm11", "thm12",
                                                "thm14", "thm16", "thm18", "cor10"};
    return names;
}

struct SweepConfig {
    long from = 2;
    long to = 200;
    std::vector<std::string> theorems = sweep_names();
    std::uint64_t seed = 1;
    /// Pairs (b, c) tried per modulus when Z/a x Z/a is larger than this.
    std::size_t samples = 64;
    AnalysisCaps caps;
};

/// Sweep over Z/a for a in [from, to]. The report carries, per theorem, the
/// number of checked instances and every violation found.
nlohmann::json run_sweep(const SweepConfig& config);

/// Element report: classifiers, comaximal factors, quotient flags and the
/// witnesses relative to b (and c).
nlohmann::json classify_element(const Element& a, const std::optional<Element>& b,
                                const std::optional<Element>& c, AnalysisCaps caps = {});

/// Human-readable rendering of any report.
std::string render_text(const nlohmann::json& report);

} // namespace bezout::cli
