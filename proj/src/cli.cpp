#include "oscount/cli.hpp"

#include <filesystem>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "oscount/engine.hpp"
#include "oscount/error.hpp"
#include "oscount/io.hpp"
#include "oscount/verify.hpp"

namespace oscount::cli {

namespace {

using io::Json;

enum class Format { text, json, csv };

struct Invocation {
    std::string space;
    std::string descriptor;
    std::string beta;
    std::string format = "text";
    std::string cache;
    std::optional<std::uint64_t> max_partitions;
    std::optional<std::size_t> max_bits;
    unsigned threads = 1;
};

Format parse_format(const std::string& f)
{
    if (f == "text")
        return Format::text;
    if (f == "json")
        return Format::json;
    if (f == "csv")
        return Format::csv;
    throw Error(ErrorKind::argument, "--format must be text, json or csv, not '" + f + "'");
}

AmbientSpace resolve_space(const Invocation& inv)
{
    if (!inv.space.empty() && !inv.descriptor.empty())
        throw Error(ErrorKind::argument, "give either --space or --descriptor, not both");
    if (!inv.descriptor.empty())
        return io::load_descriptor(inv.descriptor);
    if (inv.space.empty())
        throw Error(ErrorKind::argument, "--space or --descriptor is required");
    CurveClass dims;
    try {
        dims = CurveClass::parse(inv.space);
    } catch (const Error&) {
        throw Error(ErrorKind::argument, "--space '" + inv.space + "' is not a comma-separated list of dimensions");
    }
    for (auto s : dims.coeffs())
        if (s < 1)
            throw Error(ErrorKind::argument, "--space '" + inv.space + "': every dimension must be >= 1");
    return AmbientSpace::product({dims.coeffs().begin(), dims.coeffs().end()});
}

CurveClass resolve_beta(const Invocation& inv, const AmbientSpace& space)
{
    if (inv.beta.empty())
        throw Error(ErrorKind::argument, "--beta is required");
    CurveClass beta;
    try {
        beta = CurveClass::parse(inv.beta);
    } catch (const Error&) {
        throw Error(ErrorKind::argument, "--beta '" + inv.beta + "' is not a comma-separated list of integers");
    }
    if (beta.rank() != space.rank())
        throw Error(ErrorKind::argument, "--beta '" + inv.beta + "' has " + std::to_string(beta.rank())
                                             + " coefficients but the space has " + std::to_string(space.rank())
                                             + " factors");
    if (beta.is_zero())
        throw Error(ErrorKind::argument, "--beta '" + inv.beta + "' is the zero class");
    return beta;
}

EngineOptions engine_options(const Invocation& inv)
{
    EngineOptions opts;
    opts.budget.max_partitions = inv.max_partitions;
    opts.budget.max_bits = inv.max_bits;
    opts.threads = inv.threads;
    return opts;
}

Json class_json(const CurveClass& beta)
{
    Json arr = Json::array();
    for (auto c : beta.coeffs())
        arr.push_back(c);
    return arr;
}

Json space_json(const AmbientSpace& space)
{
    if (!space.is_product())
        return io::space_to_json(space);
    Json arr = Json::array();
    for (auto s : space.dims())
        arr.push_back(s);
    return arr;
}

std::string csv_header(std::size_t rank, const char* value_column)
{
    std::string h;
    for (std::size_t i = 1; i <= rank; ++i)
        h += "beta_" + std::to_string(i) + ",";
    return h + value_column;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// Engine warmed from --cache when the file exists.
struct Session {
    AmbientSpace space;
    std::optional<OCTable> loaded;

    explicit Session(const Invocation& inv) : space(resolve_space(inv))
    {
        if (!inv.cache.empty() && std::filesystem::exists(inv.cache)) {
            OCTable table = io::load_table(inv.cache);
            if (!(table.space() == space))
                throw Error(ErrorKind::argument, "cache " + inv.cache + " belongs to " + table.space().describe()
                                                     + ", not " + space.describe());
            loaded = std::move(table);
        }
    }

    std::unique_ptr<Engine> engine(const Invocation& inv) const
    {
        if (loaded)
            return std::make_unique<Engine>(*loaded, engine_options(inv));
        return std::make_unique<Engine>(space, engine_options(inv));
    }
};

void report_cache(const Invocation& inv, const Engine& engine, Json* doc, std::ostream& err)
{
    if (inv.cache.empty())
        return;
    io::save_table(engine.table(), inv.cache);
    auto st = engine.stats();
    if (doc) {
        (*doc)["cache_hits"] = st.cache_hits;
        (*doc)["computed"] = st.computed;
    } else {
        err << "cache hits: " << st.cache_hits << ", computed: " << st.computed << '\n';
    }
}

int cmd_compute(const Invocation& inv, std::ostream& out, std::ostream& err)
{
    Format fmt = parse_format(inv.format);
    Session session(inv);
    CurveClass beta = resolve_beta(inv, session.space);
    auto engine = session.engine(inv);
    Rational oc = engine->osculating_count(beta);

    if (fmt == Format::json) {
        Json doc;
        doc["space"] = space_json(session.space);
        doc["beta"] = class_json(beta);
        doc["oc"] = to_string(oc);
        doc["integral"] = is_integral(oc);
        if (beta.has_zero_component())
            doc["zero_component"] = true;
        report_cache(inv, *engine, &doc, err);
        out << doc.dump() << '\n';
        return exit_ok;
    }
    if (beta.has_zero_component())
        err << "note: class (" << beta.key() << ") has a zero component\n";
    if (!is_integral(oc))
        err << "warning: OC(" << beta.key() << ") is not an integer\n";
    if (fmt == Format::csv)
        out << csv_header(beta.rank(), "oc") << '\n' << beta.key() << ',' << to_string(oc) << '\n';
    else
        out << to_string(oc) << '\n';
    report_cache(inv, *engine, nullptr, err);
    return exit_ok;
}

int cmd_table(const Invocation& inv, std::ostream& out, std::ostream& err)
{
    Format fmt = parse_format(inv.format);
    Session session(inv);
    CurveClass beta = resolve_beta(inv, session.space);
    auto engine = session.engine(inv);
    OCTable table = engine->compute_table(beta);
    auto order = subclasses(beta);

    for (const auto& gamma : table.non_integral_classes())
        err << "warning: OC(" << gamma.key() << ") is not an integer\n";

    if (fmt == Format::json) {
        Json doc = io::table_to_json(table);
        report_cache(inv, *engine, &doc, err);
        out << doc.dump() << '\n';
        return exit_ok;
    }
    if (fmt == Format::csv) {
        out << csv_header(beta.rank(), "oc") << '\n';
        for (const auto& gamma : order)
            out << gamma.key() << ',' << to_string(*table.find(gamma)) << '\n';
    } else {
        for (const auto& gamma : order)
            out << "(" << gamma.key() << ") " << to_string(*table.find(gamma)) << '\n';
    }
    report_cache(inv, *engine, nullptr, err);
    return exit_ok;
}

Json partition_json(const VectorPartition& p)
{
    Json arr = Json::array();
    for (const auto& b : p.blocks()) {
        Json block;
        block["part"] = class_json(b.part);
        block["multiplicity"] = b.multiplicity;
        arr.push_back(std::move(block));
    }
    return arr;
}

int cmd_breakdown(const Invocation& inv, std::ostream& out, std::ostream& err)
{
    Format fmt = parse_format(inv.format);
    Session session(inv);
    CurveClass beta = resolve_beta(inv, session.space);
    auto engine = session.engine(inv);
    ContributionReport report = engine->contribution_breakdown(beta);

    if (fmt == Format::json) {
        Json doc;
        doc["space"] = space_json(session.space);
        doc["beta"] = class_json(beta);
        doc["leading"] = to_string(report.leading_term);
        doc["corrections"] = Json::array();
        for (const auto& c : report.corrections) {
            Json row;
            row["partition"] = partition_json(c.partition);
            row["weight"] = to_string(c.weight);
            row["product"] = to_string(c.product_term);
            row["total"] = to_string(c.total);
            doc["corrections"].push_back(std::move(row));
        }
        doc["result"] = to_string(report.result);
        report_cache(inv, *engine, &doc, err);
        out << doc.dump() << '\n';
        return exit_ok;
    }
    if (fmt == Format::csv) {
        out << "partition,weight,product,total\n";
        out << "leading,,," << to_string(report.leading_term) << '\n';
        for (const auto& c : report.corrections)
            out << csv_quote(c.partition.to_string()) << ',' << to_string(c.weight) << ','
                << to_string(c.product_term) << ',' << to_string(c.total) << '\n';
        out << "result,,," << to_string(report.result) << '\n';
    } else {
        out << "beta    (" << beta.key() << ") on " << session.space.describe() << '\n';
        out << "leading " << to_string(report.leading_term) << '\n';
        for (const auto& c : report.corrections)
            out << "  - " << c.partition.to_string() << "  weight " << to_string(c.weight) << "  product "
                << to_string(c.product_term) << "  total " << to_string(c.total) << '\n';
        out << "result  " << to_string(report.result) << '\n';
    }
    report_cache(inv, *engine, nullptr, err);
    return exit_ok;
}

// OC values come from --cache when given (no computation), otherwise from
// the engine.
int cmd_gw(const Invocation& inv, std::ostream& out, std::ostream&)
{
    Format fmt = parse_format(inv.format);
    AmbientSpace space = resolve_space(inv);
    CurveClass beta = resolve_beta(inv, space);
    OCTable table(space);
    if (!inv.cache.empty()) {
        table = io::load_table(inv.cache);
        if (!(table.space() == space))
            throw Error(ErrorKind::argument, "cache " + inv.cache + " belongs to " + table.space().describe());
    } else {
        table = compute_table(space, beta, engine_options(inv));
    }
    Rational value = invariant_from_oc(space, beta, table);

    if (fmt == Format::json) {
        Json doc;
        doc["space"] = space_json(space);
        doc["beta"] = class_json(beta);
        doc["invariant"] = to_string(value);
        out << doc.dump() << '\n';
    } else if (fmt == Format::csv) {
        out << csv_header(beta.rank(), "invariant") << '\n' << beta.key() << ',' << to_string(value) << '\n';
    } else {
        out << to_string(value) << '\n';
    }
    return exit_ok;
}

int cmd_verify(const Invocation& inv, std::ostream& out, std::ostream&)
{
    Format fmt = parse_format(inv.format);
    auto results = run_verification(engine_options(inv));
    bool all = true;
    Json doc = Json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        if (fmt == Format::json) {
            Json row;
            row["check"] = r.name;
            row["passed"] = r.passed;
            if (!r.passed)
                row["detail"] = r.detail;
            doc.push_back(std::move(row));
        } else if (fmt == Format::csv) {
            out << csv_quote(r.name) << ',' << (r.passed ? "pass" : "fail") << '\n';
        } else {
            out << (r.passed ? "PASS " : "FAIL ") << r.name;
            if (!r.passed)
                out << ": " << r.detail;
            out << '\n';
        }
    }
    if (fmt == Format::json)
        out << doc.dump() << '\n';
    else if (fmt == Format::text)
        out << (all ? "all " : "some ") << "checks " << (all ? "passed" : "FAILED") << " (" << results.size()
            << " total)\n";
    return all ? exit_ok : exit_verify_failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact counts of rational curves osculating a hypersurface", "oscount"};
    app.require_subcommand(1);

    Invocation inv;
    auto add_common = [&](CLI::App* sub, bool needs_beta) {
        sub->add_option("--space", inv.space, "factor dimensions s_1,...,s_t of P^s_1 x ... x P^s_t");
        sub->add_option("--descriptor", inv.descriptor, "generic homogeneous space descriptor (JSON)");
        if (needs_beta)
            sub->add_option("--beta", inv.beta, "curve class b_1,...,b_t");
        sub->add_option("--format", inv.format, "text, json or csv");
        sub->add_option("--max-partitions", inv.max_partitions, "cap on partitions visited");
        sub->add_option("--max-bits", inv.max_bits, "cap on integer bit length");
        sub->add_option("--threads", inv.threads, "worker threads per correction sum")->check(CLI::PositiveNumber);
    };

    auto* compute = app.add_subcommand("compute", "OC(beta, X)");
    add_common(compute, true);
    compute->add_option("--cache", inv.cache, "cache file, read if present and rewritten");
    auto* table = app.add_subcommand("table", "OC(gamma, X) for every nonzero gamma <= beta");
    add_common(table, true);
    table->add_option("--cache", inv.cache, "cache file, read if present and rewritten");
    auto* breakdown = app.add_subcommand("breakdown", "per-partition contributions to OC(beta, X)");
    add_common(breakdown, true);
    breakdown->add_option("--cache", inv.cache, "cache file, read if present and rewritten");
    auto* gw = app.add_subcommand("gw", "I_{1,beta}(pt) recovered from OC values");
    add_common(gw, true);
    gw->add_option("--cache", inv.cache, "cache file supplying the OC values");
    auto* verify = app.add_subcommand("verify", "run the built-in verification suite");
    verify->add_option("--format", inv.format, "text, json or csv");
    verify->add_option("--threads", inv.threads, "worker threads per correction sum")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_argument;
    }

    try {
        if (compute->parsed())
            return cmd_compute(inv, out, err);
        if (table->parsed())
            return cmd_table(inv, out, err);
        if (breakdown->parsed())
            return cmd_breakdown(inv, out, err);
        if (gw->parsed())
            return cmd_gw(inv, out, err);
        return cmd_verify(inv, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::budget_exceeded ? exit_budget : exit_argument;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_argument;
    }
}

}  // namespace oscount::cli
