#include "bezout/cli.hpp"

#include "bezout/element_structure.hpp"
#include "bezout/encoding.hpp"
#include "bezout/matrix.hpp"
#include "bezout/quotient.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace bezout::cli {

namespace {

constexpr std::size_t listed_violations = 50;

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::trace_invariant_violation:
    case ErrorCode::search_exhausted:
        return exit_verification_failure;
    default:
        return exit_input_error;
    }
}

// Independent number-theory oracles for the sweeps.

bool oracle_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool oracle_squarefree(long n)
{
    for (long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0)
            return false;
    return true;
}

bool oracle_prime_power(long n)
{
    long p = 2;
    while (n % p != 0)
        ++p;
    while (n % p == 0)
        n /= p;
    return n == 1;
}

class Tally {
public:
    void check() { ++checked_; }
    void violation(nlohmann::json detail)
    {
        if (violations_.size() < listed_violations)
            violations_.push_back(std::move(detail));
        ++count_;
    }
    std::size_t count() const { return count_; }
    nlohmann::json to_json() const
    {
        return {{"checked", checked_}, {"violation_count", count_}, {"violations", violations_}};
    }

private:
    std::size_t checked_ = 0;
    std::size_t count_ = 0;
    nlohmann::json violations_ = nlohmann::json::array();
};

std::vector<std::pair<long, long>> residue_pairs(long a, const SweepConfig& config)
{
    std::vector<std::pair<long, long>> out;
    if (static_cast<std::size_t>(a) * static_cast<std::size_t>(a) <= config.samples) {
        for (long b = 0; b < a; ++b)
            for (long c = 0; c < a; ++c)
                out.emplace_back(b, c);
        return out;
    }
    std::mt19937_64 rng(config.seed ^ (static_cast<std::uint64_t>(a) * 0x9E3779B97F4A7C15ULL));
    for (std::size_t i = 0; i < config.samples; ++i)
        out.emplace_back(static_cast<long>(rng() % static_cast<std::uint64_t>(a)),
                         static_cast<long>(rng() % static_cast<std::uint64_t>(a)));
    return out;
}

nlohmann::json violations_json(const std::vector<std::string>& v)
{
    return nlohmann::json(v);
}

void sweep_modulus(long a, const SweepConfig& config, std::map<std::string, Tally>& tallies)
{
    const Ring Z = Ring::integers();
    const Element ea = from_integer(Z, a);
    const Ring q = make_quotient(Z, ea);
    const FiniteRing fr(q, config.caps);
    auto wants = [&](const char* name) { return tallies.count(name) != 0; };
    auto z = [&](long n) { return from_integer(Z, n); };

    if (wants("prop2")) {
        Tally& t = tallies["prop2"];
        t.check();
        const bool atom = is_atom(ea), field = fr.is_field().holds, prime = oracle_prime(a);
        if (atom != field || field != prime)
            t.violation({{"a", a}, {"atom", atom}, {"field", field}, {"prime", prime}});
    }
    if (wants("thm9")) {
        Tally& t = tallies["thm9"];
        t.check();
        const bool inpseudo = is_inpseudo_irreducible(ea), reduced = fr.is_reduced().holds,
                   vnr = fr.is_von_neumann_regular().holds, squarefree = oracle_squarefree(a);
        if (inpseudo != reduced || reduced != vnr || vnr != squarefree)
            t.violation({{"a", a},
                         {"inpseudo_irreducible", inpseudo},
                         {"reduced", reduced},
                         {"von_neumann_regular", vnr},
                         {"squarefree", squarefree}});
    }
    if (wants("thm11")) {
        Tally& t = tallies["thm11"];
        t.check();
        const bool pseudo = is_pseudo_irreducible(ea), indecomposable = fr.is_indecomposable().holds,
                   prime_power = oracle_prime_power(a);
        if (pseudo != indecomposable || indecomposable != prime_power)
            t.violation({{"a", a},
                         {"pseudo_irreducible", pseudo},
                         {"indecomposable", indecomposable},
                         {"prime_power", prime_power}});
    }
    if (wants("prop7")) {
        Tally& t = tallies["prop7"];
        for (FiniteRing::Index b = 0; b < fr.size(); ++b) {
            t.check();
            const Element gen = annihilator_generator(q, fr.element(b));
            const FiniteRing::Index g = fr.index(gen);
            const auto ann = fr.annihilator(b);
            if (ann != fr.principal_ideal(g)) {
                t.violation({{"a", a}, {"b", b}, {"generator", element_to_json(gen)}, {"claim", "Ann(b) = gR"}});
                continue;
            }
            // Ann(Ann b) = Ann(gR) = Ann(g) must equal bR.
            if (fr.annihilator(g) != fr.principal_ideal(b))
                t.violation({{"a", a}, {"b", b}, {"claim", "Ann(Ann(b)) = bR"}});
        }
    }
    if (wants("thm12")) {
        Tally& t = tallies["thm12"];
        t.check();
        if (!fr.is_semiregular().holds)
            t.violation({{"a", a}, {"claim", "Z/a is semiregular"}});
        for (long b = 0; b < a; ++b) {
            t.check();
            const SplitWitness w = adequate_split(ea, z(b));
            if (auto bad = verify_split(w); !bad.empty())
                t.violation({{"a", a}, {"b", b}, {"witness", split_to_json(w)}, {"failed", violations_json(bad)}});
        }
    }
    for (const char* name : {"thm14", "thm18"}) {
        if (!wants(name))
            continue;
        Tally& t = tallies[name];
        const bool avoidable = std::string(name) == "thm14";
        t.check();
        const bool ring_flag = avoidable ? fr.is_clean().holds : fr.is_gelfand().holds;
        if (!ring_flag)
            t.violation({{"a", a}, {"claim", avoidable ? "Z/a is clean" : "Z/a is Gelfand"}});
        for (const auto& [b, c] : residue_pairs(a, config)) {
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            t.check();
            const SplitWitness w =
                avoidable ? avoidable_decompose(ea, z(b), z(c)) : gelfand_decompose(ea, z(b), z(c));
            if (auto bad = verify_split(w); !bad.empty())
                t.violation({{"a", a}, {"b", b}, {"c", c}, {"witness", split_to_json(w)}, {"failed", violations_json(bad)}});
        }
    }
    if (wants("thm16")) {
        Tally& t = tallies["thm16"];
        t.check();
        if (!fr.is_semipotent().holds)
            t.violation({{"a", a}, {"claim", "Z/a is semipotent"}});
        for (long b = 0; b < a; ++b) {
            t.check();
            const SemipotentResult res = semipotent_witness(ea, z(b), config.caps);
            const bool in_j = fr.in_jacobson_radical(static_cast<FiniteRing::Index>(b));
            if (std::holds_alternative<InRadical>(res)) {
                if (!in_j)
                    t.violation({{"a", a}, {"b", b}, {"claim", "InRadical only inside J"}});
                continue;
            }
            const auto& w = std::get<SplitWitness>(res);
            auto bad = verify_split(w);
            if (in_j)
                bad.push_back("b lies in J but a split was returned");
            if (!bad.empty())
                t.violation({{"a", a}, {"b", b}, {"witness", split_to_json(w)}, {"failed", violations_json(bad)}});
        }
    }
    if (wants("cor10")) {
        Tally& t = tallies["cor10"];
        t.check();
        const Verdict v = fr.is_stable_range_1();
        if (!v.holds)
            t.violation({{"a", a}, {"verdict", verdict_to_json(v)}});
    }
}

// ---------------------------------------------------------------- output

void render(const nlohmann::json& v, const std::string& indent, std::ostringstream& out)
{
    for (auto it = v.begin(); it != v.end(); ++it) {
        const auto& value = it.value();
        const bool nested = (value.is_object() && !value.empty()) ||
                            (value.is_array() && std::any_of(value.begin(), value.end(), [](const auto& x) {
                                 return x.is_object();
                             }));
        const std::string key = v.is_object() ? it.key() : "-";
        if (!nested) {
            out << indent << key << ": " << value.dump() << '\n';
            continue;
        }
        out << indent << key << ":\n";
        render(value, indent + "  ", out);
    }
}

struct CommonOptions {
    bool json = false;
    bool pretty = false;
    std::string out_path;
    std::size_t cap = default_enumeration_cap;
    std::size_t quadratic_cap = 5000;
    std::uint64_t seed = 1;
};

void emit(const nlohmann::json& report, const CommonOptions& opts, std::ostream& out)
{
    const std::string text = opts.pretty ? render_text(report) : report.dump(2) + "\n";
    if (opts.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opts.out_path);
    if (!file)
        throw Error(ErrorCode::parse_error, "cannot write " + opts.out_path);
    file << text;
}

// "RING ELEMENT" or "ELEMENT" with --ring.
std::pair<Ring, std::string> ring_and_element(const std::vector<std::string>& positional,
                                              const std::string& ring_flag)
{
    if (positional.size() == 2)
        return {parse_ring(positional[0]), positional[1]};
    if (positional.size() == 1 && !ring_flag.empty())
        return {parse_ring(ring_flag), positional[0]};
    throw Error(ErrorCode::parse_error, "expected RING ELEMENT, or ELEMENT together with --ring");
}

std::pair<long, long> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw Error(ErrorCode::parse_error, "range must look like 2..200");
    try {
        return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw Error(ErrorCode::parse_error, "range must look like 2..200");
    }
}

nlohmann::json read_json_input(const std::string& path)
{
    std::stringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file)
            throw Error(ErrorCode::parse_error, "cannot read " + path);
        buffer << file.rdbuf();
    }
    try {
        return nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------- commands

int cmd_reduce(const std::string& input, const std::string& method, const CommonOptions& opts,
               std::ostream& out, std::ostream& err)
{
    const nlohmann::json doc = read_json_input(input);
    if (!doc.is_object() || !doc.contains("ring") || !doc.contains("matrix") || !doc["ring"].is_string())
        throw Error(ErrorCode::parse_error, R"(expected {"ring": "...", "matrix": [[...], ...]})");
    const Ring ring = parse_ring(doc["ring"].get<std::string>());
    const Matrix a = matrix_from_json(ring, doc["matrix"]);

    nlohmann::json report = {{"schema", 1}, {"command", "reduce"}, {"method", method},
                             {"ring", ring.describe()}, {"input", matrix_to_json(a)}};
    DiagonalReduction red = [&] {
        if (method == "generic")
            return diagonal_reduce(a);
        if (method != "thm21")
            throw Error(ErrorCode::parse_error, "unknown method " + method + " (generic or thm21)");
        if (a.rows() != 2 || a.cols() != 2 || !is_zero(a(0, 1)))
            throw Error(ErrorCode::parse_error, "thm21 needs a 2x2 matrix of the form [[a, 0], [b, c]]");
        Theorem21Result res = reduce_2x2_theorem21(a(0, 0), a(1, 0), a(1, 1));
        report["trace"] = trace_to_json(res.trace);
        return std::move(res.reduction);
    }();
    const VerificationResult check = verify_reduction(a, red);
    if (!check.ok) {
        for (const auto& v : check.violations)
            err << "verification failed: " << v << '\n';
        return exit_verification_failure;
    }
    report["reduction"] = reduction_to_json(red);
    nlohmann::json diagonal = nlohmann::json::array();
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
        diagonal.push_back(element_to_json(red.D(i, i)));
    report["diagonal"] = diagonal;
    report["verified"] = true;
    emit(report, opts, out);
    return exit_ok;
}

int cmd_split(const std::string& kind, const Element& a, const std::optional<Element>& b,
              const std::optional<Element>& c, const CommonOptions& opts, std::ostream& out)
{
    if (!b)
        throw Error(ErrorCode::parse_error, "split needs --b");
    nlohmann::json report = {{"schema", 1}, {"command", "split"}, {"kind", kind}, {"ring", a.ring().describe()}};
    std::optional<SplitWitness> w;
    if (kind == "adequate") {
        w = adequate_split(a, *b);
    } else if (kind == "avoidable" || kind == "gelfand") {
        if (!c)
            throw Error(ErrorCode::parse_error, kind + " split needs --c");
        w = kind == "avoidable" ? avoidable_decompose(a, *b, *c) : gelfand_decompose(a, *b, *c);
    } else if (kind == "semipotent") {
        SemipotentResult res = semipotent_witness(a, *b, {opts.cap, opts.quadratic_cap});
        report["in_radical"] = std::holds_alternative<InRadical>(res);
        if (auto* split = std::get_if<SplitWitness>(&res))
            w = *split;
    } else {
        throw Error(ErrorCode::parse_error, "unknown kind " + kind);
    }
    std::vector<std::string> bad;
    if (w) {
        bad = verify_split(*w);
        report["witness"] = split_to_json(*w);
    }
    report["violations"] = bad;
    emit(report, opts, out);
    return bad.empty() ? exit_ok : exit_theorem_violation;
}

} // namespace

nlohmann::json run_sweep(const SweepConfig& config)
{
    if (config.from > config.to)
        throw Error(ErrorCode::parse_error,
                    "empty range " + std::to_string(config.from) + ".." + std::to_string(config.to));
    if (config.from < 2)
        throw Error(ErrorCode::parse_error, "range must start at 2 or above");
    if (config.theorems.empty())
        throw Error(ErrorCode::parse_error, "no theorems selected");
    std::map<std::string, Tally> tallies;
    for (const auto& name : config.theorems) {
        if (std::find(sweep_names().begin(), sweep_names().end(), name) == sweep_names().end())
            throw Error(ErrorCode::parse_error, "unknown theorem selector " + name);
        tallies[name];
    }
    for (long a = config.from; a <= config.to; ++a)
        sweep_modulus(a, config, tallies);

    nlohmann::json theorems = nlohmann::json::object();
    std::size_t total = 0;
    for (const auto& [name, tally] : tallies) {
        theorems[name] = tally.to_json();
        total += tally.count();
    }
    return {{"schema", 1},   {"command", "verify"},   {"range", {config.from, config.to}},
            {"seed", config.seed}, {"samples", config.samples}, {"theorems", theorems},
            {"total_violations", total}};
}

nlohmann::json classify_element(const Element& a, const std::optional<Element>& b,
                                const std::optional<Element>& c, AnalysisCaps caps)
{
    const Ring& ring = a.ring();
    nlohmann::json r = {{"schema", 1}, {"command", "classify"}, {"ring", ring.describe()},
                        {"element", element_to_json(a)}};
    nlohmann::json skipped = nlohmann::json::object();
    r["regular"] = is_regular(a, caps.linear);
    r["unit"] = is_unit(a);

    if (ring.is_quotient()) {
        r["annihilator_generator"] = element_to_json(annihilator_generator(ring, a));
        for (const char* name : {"atom", "inpseudo_irreducible", "pseudo_irreducible", "comaximal_factors"})
            skipped[name] = "unsupported ring";
        r["skipped"] = skipped;
        return r;
    }

    auto budgeted = [&](const char* name, auto fn) {
        try {
            r[name] = fn();
        } catch (const Error& e) {
            if (e.code() != ErrorCode::factorization_budget_exceeded)
                throw;
            skipped[name] = "factorization budget";
        }
    };
    budgeted("atom", [&] { return is_atom(a); });
    budgeted("inpseudo_irreducible", [&] { return is_inpseudo_irreducible(a); });
    budgeted("pseudo_irreducible", [&] { return is_pseudo_irreducible(a); });
    budgeted("comaximal_factors", [&] { return factorization_to_json(comaximal_refinement(a)); });

    try {
        const StructureReport rep = analyze_ring(make_quotient(ring, a), caps);
        r["quotient"] = report_to_json(rep);
        for (const auto& [name, v] : rep.flags)
            r["quotient_" + name] = v.holds;
        for (const auto& [name, why] : rep.skipped)
            skipped["quotient_" + name] = why;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::too_large)
            skipped["quotient_flags"] = "cap";
        else if (e.code() == ErrorCode::unsupported_ring)
            skipped["quotient_flags"] = "infinite quotient";
        else
            throw;
    }

    nlohmann::json witnesses = nlohmann::json::object();
    auto record = [&](const SplitWitness& w) {
        nlohmann::json j = split_to_json(w);
        j["violations"] = verify_split(w);
        witnesses[to_string(w.kind)] = j;
    };
    if (b) {
        record(adequate_split(a, *b));
        try {
            SemipotentResult res = semipotent_witness(a, *b, caps);
            if (auto* w = std::get_if<SplitWitness>(&res))
                record(*w);
            else
                witnesses["semipotent"] = {{"in_radical", true}};
        } catch (const Error& e) {
            if (e.code() != ErrorCode::too_large && e.code() != ErrorCode::unsupported_ring)
                throw;
            skipped["semipotent"] = e.code() == ErrorCode::too_large ? "cap" : "infinite quotient";
        }
    }
    if (b && c) {
        record(avoidable_decompose(a, *b, *c));
        record(gelfand_decompose(a, *b, *c));
    }
    r["witnesses"] = witnesses;
    r["skipped"] = skipped;
    return r;
}

std::string render_text(const nlohmann::json& report)
{
    std::ostringstream out;
    render(report, "", out);
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact diagonal reduction and element structure over Bezout rings", "bezout"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOptions opts;
    std::string ring_flag, method = "generic", kind, b_text, c_text, range = "2..200", input;
    std::string first, second;
    std::vector<std::string> theorems;
    std::size_t samples = 64;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", opts.json, "JSON output (default)");
        cmd->add_flag("--pretty", opts.pretty, "Indented text output");
        cmd->add_option("--out", opts.out_path, "Write the report to this file");
        cmd->add_option("--cap", opts.cap, "Enumeration cap for finite rings");
        cmd->add_option("--quadratic-cap", opts.quadratic_cap, "Cap for pairwise finite-ring predicates");
        cmd->add_option("--ring", ring_flag, "Ring: Z, Q[x], F<p>[x], Z/<n>, F<p>[x]/[c0,...]");
    };

    auto* reduce = app.add_subcommand("reduce", "Diagonal reduction of a matrix file");
    reduce->add_option("input", input, "Matrix JSON file, or - for stdin")->required();
    reduce->add_option("--method", method, "generic or thm21");
    add_common(reduce);

    auto* classify = app.add_subcommand("classify", "Classify an element and its quotient ring");
    classify->add_option("first", first, "RING, or ELEMENT when --ring is given")->required();
    classify->add_option("element", second, "ELEMENT");
    classify->add_option("--b", b_text, "Second element for split witnesses");
    classify->add_option("--c", c_text, "Third element for avoidable / Gelfand witnesses");
    add_common(classify);

    auto* comax = app.add_subcommand("comax", "Comaximal factorization into prime powers");
    comax->add_option("first", first, "RING, or ELEMENT when --ring is given")->required();
    comax->add_option("element", second, "ELEMENT");
    add_common(comax);

    auto* split = app.add_subcommand("split", "Adequate, avoidable, Gelfand or semipotent split");
    split->add_option("first", first, "RING, or ELEMENT when --ring is given")->required();
    split->add_option("element", second, "ELEMENT");
    split->add_option("--kind", kind, "adequate | avoidable | gelfand | semipotent")->required();
    split->add_option("--b", b_text, "Element b");
    split->add_option("--c", c_text, "Element c");
    add_common(split);

    auto* analyze = app.add_subcommand("analyze-ring", "Structure report of a finite quotient ring");
    analyze->add_option("RING", first, "Finite quotient ring, e.g. Z/12");
    add_common(analyze);

    auto* verify = app.add_subcommand("verify", "Theorem sweeps over Z/a");
    verify->add_option("--theorems", theorems, "Comma-separated selectors")->delimiter(',');
    verify->add_option("--range", range, "Moduli range, e.g. 2..200");
    verify->add_option("--seed", opts.seed, "Seed for sampled pairs");
    verify->add_option("--samples", samples, "Pairs per modulus when not exhaustive");
    add_common(verify);

    std::vector<std::string> argv_storage{"bezout"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage)
        argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        const AnalysisCaps caps{opts.cap, opts.quadratic_cap};
        // Scalar positionals keep CLI11 from splitting coefficient lists such as [1,0,1].
        std::vector<std::string> positional;
        for (const auto* s : {&first, &second})
            if (!s->empty())
                positional.push_back(*s);
        if (reduce->parsed())
            return cmd_reduce(input, method, opts, out, err);
        if (verify->parsed()) {
            SweepConfig config;
            std::tie(config.from, config.to) = parse_range(range);
            if (!theorems.empty())
                config.theorems = theorems;
            config.seed = opts.seed;
            config.samples = samples;
            config.caps = caps;
            const nlohmann::json report = run_sweep(config);
            emit(report, opts, out);
            return report["total_violations"].get<std::size_t>() == 0 ? exit_ok : exit_theorem_violation;
        }
        if (analyze->parsed()) {
            if (positional.size() > 1 || (positional.empty() && ring_flag.empty()))
                throw Error(ErrorCode::parse_error, "analyze-ring expects one RING");
            const Ring q = parse_ring(positional.empty() ? ring_flag : positional[0]);
            const StructureReport rep = analyze_ring(q, caps);
            emit({{"schema", 1}, {"command", "analyze-ring"}, {"report", report_to_json(rep)}}, opts, out);
            return rep.implication_violations.empty() ? exit_ok : exit_theorem_violation;
        }

        const auto [ring, element_text] = ring_and_element(positional, ring_flag);
        const Element a = parse_element(ring, element_text);
        std::optional<Element> b, c;
        if (!b_text.empty())
            b = parse_element(ring, b_text);
        if (!c_text.empty())
            c = parse_element(ring, c_text);
        if (classify->parsed()) {
            emit(classify_element(a, b, c, caps), opts, out);
            return exit_ok;
        }
        if (comax->parsed()) {
            emit({{"schema", 1},
                  {"command", "comax"},
                  {"ring", ring.describe()},
                  {"factorization", factorization_to_json(comaximal_refinement(a))}},
                 opts, out);
            return exit_ok;
        }
        return cmd_split(kind, a, b, c, opts, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
}

} // namespace bezout::cli
