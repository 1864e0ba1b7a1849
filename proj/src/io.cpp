#include "oscount/io.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "oscount/error.hpp"

namespace oscount::io {

namespace {

constexpr int cache_version = 1;

Error format_error(const std::string& what) { return Error(ErrorKind::format, what); }

std::vector<std::uint32_t> uint_list(const Json& node, const char* name)
{
    if (!node.is_array() || node.empty())
        throw format_error(std::string("'") + name + "' must be a non-empty array of integers");
    std::vector<std::uint32_t> out;
    for (const auto& v : node) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
            throw format_error(std::string("'") + name + "' must contain non-negative integers");
        out.push_back(v.get<std::uint32_t>());
    }
    return out;
}

Json read_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::argument, "cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw format_error(path.string() + ": " + e.what());
    }
}

}  // namespace

AmbientSpace descriptor_from_json(const Json& doc)
{
    if (!doc.is_object() || !doc.contains("chern") || !doc.contains("invariants"))
        throw format_error("descriptor must be an object with 'chern' and 'invariants'");
    auto chern = uint_list(doc["chern"], "chern");
    const Json& inv = doc["invariants"];
    if (!inv.is_object())
        throw format_error("'invariants' must be an object");
    std::map<CurveClass, Rational> table;
    for (const auto& [key, value] : inv.items()) {
        if (!value.is_string())
            throw format_error("invariant for '" + key + "' must be a rational string");
        table.emplace(CurveClass::parse(key), parse_rational(value.get<std::string>()));
    }
    return AmbientSpace::generic(std::move(chern), std::move(table));
}

Json descriptor_to_json(const AmbientSpace& space)
{
    Json doc;
    doc["chern"] = Json::array();
    for (auto c : space.chern())
        doc["chern"].push_back(c);
    doc["invariants"] = Json::object();
    for (const auto& [beta, value] : space.invariant_table())
        doc["invariants"][beta.key()] = to_string(value);
    return doc;
}

AmbientSpace load_descriptor(const std::filesystem::path& path) { return descriptor_from_json(read_json(path)); }

Json space_to_json(const AmbientSpace& space)
{
    if (!space.is_product())
        return descriptor_to_json(space);
    Json doc;
    doc["dims"] = Json::array();
    for (auto s : space.dims())
        doc["dims"].push_back(s);
    return doc;
}

AmbientSpace space_from_json(const Json& doc)
{
    if (doc.is_object() && doc.contains("dims"))
        return AmbientSpace::product(uint_list(doc["dims"], "dims"));
    return descriptor_from_json(doc);
}

Json table_to_json(const OCTable& table)
{
    Json doc;
    doc["space"] = space_to_json(table.space());
    doc["entries"] = Json::object();
    // Box-shaped tables (the usual compute_table output) keep subclass order.
    std::vector<CurveClass> order;
    if (!table.entries().empty()) {
        const CurveClass& top = table.entries().rbegin()->first;
        CurveClass max = top;
        for (const auto& [beta, entry] : table.entries()) {
            std::vector<std::uint32_t> m(max.coeffs().begin(), max.coeffs().end());
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = std::max(m[i], beta[i]);
            max = CurveClass(std::move(m));
        }
        auto box = subclasses(max);
        if (box.size() == table.size())
            order = std::move(box);
        else
            for (const auto& [beta, entry] : table.entries())
                order.push_back(beta);
    }
    for (const auto& beta : order)
        doc["entries"][beta.key()] = to_string(*table.find(beta));
    doc["version"] = cache_version;
    return doc;
}

OCTable table_from_json(const Json& doc, std::uint64_t seed)
{
    if (!doc.is_object() || !doc.contains("space") || !doc.contains("entries") || !doc.contains("version"))
        throw format_error("cache must be an object with 'space', 'entries' and 'version'");
    if (doc["version"] != cache_version)
        throw format_error("unsupported cache version " + doc["version"].dump());
    OCTable table(space_from_json(doc["space"]));
    const Json& entries = doc["entries"];
    if (!entries.is_object())
        throw format_error("'entries' must be an object");
    for (const auto& [key, value] : entries.items()) {
        if (!value.is_string())
            throw format_error("entry '" + key + "' must be a rational string");
        CurveClass beta = CurveClass::parse(key);
        try {
            table.insert(beta, parse_rational(value.get<std::string>()));
        } catch (const Error& e) {
            throw format_error("cache entry '" + key + "': " + e.what());
        }
    }
    if (auto gap = table.closure_gap())
        throw format_error("cache is not closed under the recursion: class (" + gap->key() + ") is missing");
    if (!table.entries().empty()) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
        auto it = std::next(table.entries().begin(), std::ptrdiff_t(pick(rng)));
        Rational expected = recompute_from_table(table.space(), it->first, table);
        if (expected != it->second.value)
            throw format_error("cache entry (" + it->first.key() + ") = " + to_string(it->second.value)
                               + " does not re-derive (expected " + to_string(expected) + ")");
    }
    return table;
}

void save_table(const OCTable& table, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::argument, "cannot write " + path.string());
    out << table_to_json(table).dump(2) << '\n';
}

OCTable load_table(const std::filesystem::path& path, std::uint64_t seed)
{
    return table_from_json(read_json(path), seed);
}

}  // namespace oscount::io
