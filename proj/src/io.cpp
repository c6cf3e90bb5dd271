#include "ydl/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ydl {

namespace {

using json = nlohmann::json;

std::string quote(const std::string& s)
{
    return json(s).dump();
}

std::string strip_exception_id(std::string what)
{
    if (!what.empty() && what.front() == '[')
    {
        const auto close = what.find("] ");
        if (close != std::string::npos)
            what.erase(0, close + 2);
    }
    return what;
}

json parse_json(const std::string& text)
{
    try
    {
        return json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw ParseError(strip_exception_id(e.what()));
    }
}

const json& member(const json& doc, const std::string& key)
{
    const auto it = doc.find(key);
    if (it == doc.end())
        throw ParseError(key + ": missing");
    return *it;
}

void reject_unknown(const json& doc, const std::set<std::string>& known)
{
    if (!doc.is_object())
        throw ParseError("top level: expected an object");
    for (const auto& [key, value] : doc.items())
        if (!known.count(key))
            throw ParseError(key + ": unknown field");
}

std::string optional_name(const json& doc, const std::string& fallback)
{
    if (!doc.contains("name"))
        return fallback;
    if (!doc["name"].is_string())
        throw ParseError("name: expected a string");
    return doc["name"].get<std::string>();
}

std::string scalar(const json& v, const std::string& where)
{
    if (!v.is_string())
        throw ParseError(where + ": expected a fraction string such as \"1/2\", got " + v.dump());
    const auto s = v.get<std::string>();
    BigInt num, den;
    try
    {
        detail::split_fraction(s, num, den);
    }
    catch (const std::invalid_argument& e)
    {
        throw ParseError(where + ": " + e.what());
    }
    return s;
}

const json& array_of(const json& v, std::size_t size, const std::string& where)
{
    if (!v.is_array())
        throw ParseError(where + ": expected an array");
    if (v.size() != size)
        throw ParseError(where + ": expected " + std::to_string(size) + " entries, got " + std::to_string(v.size()));
    return v;
}

std::vector<std::string> scalar_row(const json& v, std::size_t n, const std::string& where)
{
    std::vector<std::string> out;
    const auto& a = array_of(v, n, where);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(scalar(a[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

ScalarGrid scalar_grid(const json& v, std::size_t n, const std::string& where)
{
    ScalarGrid out;
    const auto& a = array_of(v, n, where);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(scalar_row(a[i], n, where + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<ScalarGrid> scalar_cube(const json& v, std::size_t n, const std::string& where)
{
    std::vector<ScalarGrid> out;
    const auto& a = array_of(v, n, where);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(scalar_grid(a[i], n, where + "[" + std::to_string(i) + "]"));
    return out;
}

std::string row_text(const std::vector<std::string>& row)
{
    std::string out = "[";
    for (std::size_t i = 0; i < row.size(); ++i)
        out += (i ? ", " : "") + quote(row[i]);
    return out + "]";
}

std::string grid_text(const ScalarGrid& g)
{
    std::string out = "[";
    for (std::size_t i = 0; i < g.size(); ++i)
        out += (i ? ", " : "") + row_text(g[i]);
    return out + "]";
}

template <typename Row, typename F>
void block(std::ostringstream& os, const std::vector<Row>& rows, F text)
{
    os << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
        os << "    " << text(rows[i]) << (i + 1 < rows.size() ? ",\n" : "\n");
    os << "  ]";
}

}  // namespace

FieldSpec FieldSpec::parse(const std::string& text)
{
    if (text == "rational")
        return {};
    std::istringstream is(text);
    std::string word;
    std::uint64_t p = 0;
    std::string rest;
    if (is >> word && word == "prime" && is >> p && !(is >> rest) && p >= 2)
        return {p};
    throw ParseError("field: expected \"rational\" or \"prime p\", got " + quote(text));
}

AlgebraFile parse_algebra(const std::string& text)
{
    const json doc = parse_json(text);
    reject_unknown(doc, {"name", "field", "dim", "basis", "mul", "comul", "unit", "counit", "antipode"});
    AlgebraFile f;
    f.name = optional_name(doc, "H");
    const auto& field = member(doc, "field");
    if (!field.is_string())
        throw ParseError("field: expected a string");
    f.field = FieldSpec::parse(field.get<std::string>());
    const auto& dim = member(doc, "dim");
    if (!dim.is_number_integer() || dim.get<long long>() < 1 || dim.get<long long>() > 4096)
        throw ParseError("dim: expected a positive integer");
    f.dim = dim.get<int>();
    const auto n = static_cast<std::size_t>(f.dim);
    const auto& basis = array_of(member(doc, "basis"), n, "basis");
    for (std::size_t i = 0; i < n; ++i)
    {
        if (!basis[i].is_string())
            throw ParseError("basis[" + std::to_string(i) + "]: expected a string");
        f.basis.push_back(basis[i].get<std::string>());
    }
    f.mul = scalar_cube(member(doc, "mul"), n, "mul");
    f.comul = scalar_cube(member(doc, "comul"), n, "comul");
    f.unit = scalar_row(member(doc, "unit"), n, "unit");
    f.counit = scalar_row(member(doc, "counit"), n, "counit");
    f.antipode = scalar_grid(member(doc, "antipode"), n, "antipode");
    return f;
}

std::string print_algebra(const AlgebraFile& f)
{
    std::ostringstream os;
    os << "{\n";
    os << "  \"name\": " << quote(f.name) << ",\n";
    os << "  \"field\": " << quote(f.field.str()) << ",\n";
    os << "  \"dim\": " << f.dim << ",\n";
    os << "  \"basis\": " << row_text(f.basis) << ",\n";
    os << "  \"mul\": ";
    block(os, f.mul, grid_text);
    os << ",\n  \"comul\": ";
    block(os, f.comul, grid_text);
    os << ",\n  \"unit\": " << row_text(f.unit) << ",\n";
    os << "  \"counit\": " << row_text(f.counit) << ",\n";
    os << "  \"antipode\": ";
    block(os, f.antipode, row_text);
    os << "\n}\n";
    return os.str();
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path + ": cannot open");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw std::runtime_error(path + ": cannot write");
}

AlgebraFile read_algebra_file(const std::string& path)
{
    try
    {
        return parse_algebra(read_text_file(path));
    }
    catch (const ParseError& e)
    {
        throw ParseError(path + ": " + e.what());
    }
}

CoefficientFile parse_coefficients(const std::string& text, const std::string& key)
{
    const json doc = parse_json(text);
    reject_unknown(doc, {"name", key});
    CoefficientFile f;
    f.name = optional_name(doc, key);
    const auto& rows = member(doc, key);
    if (!rows.is_array() || rows.empty())
        throw ParseError(key + ": expected a non-empty array of rows");
    for (std::size_t i = 0; i < rows.size(); ++i)
        f.entries.push_back(scalar_row(rows[i], rows.size(), key + "[" + std::to_string(i) + "]"));
    return f;
}

std::string print_coefficients(const CoefficientFile& f, const std::string& key)
{
    std::ostringstream os;
    os << "{\n  \"name\": " << quote(f.name) << ",\n  " << quote(key) << ": ";
    block(os, f.entries, row_text);
    os << "\n}\n";
    return os.str();
}

CoefficientFile read_coefficient_file(const std::string& path, const std::string& key)
{
    try
    {
        return parse_coefficients(read_text_file(path), key);
    }
    catch (const ParseError& e)
    {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace ydl
