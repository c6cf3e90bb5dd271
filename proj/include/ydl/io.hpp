#ifndef YDL_IO_HPP
#define YDL_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopf_algebra.hpp"
#include "scalar.hpp"

namespace ydl {

/// Malformed input file; what() names the offending field, e.g. "mul[1][0]".
class ParseError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/// "rational" or "prime p".
struct FieldSpec
{
    std::uint64_t prime = 0;

    bool rational() const { return prime == 0; }
    std::string str() const { return rational() ? "rational" : "prime " + std::to_string(prime); }
    static FieldSpec parse(const std::string& text);

    bool operator==(const FieldSpec&) const = default;
};

template <typename Scalar>
FieldSpec current_field()
{
    return {FieldTraits<Scalar>::characteristic()};
}

using ScalarGrid = std::vector<std::vector<std::string>>;

/**
 * Structure constants as exact fraction strings.
 *
 *   mul[i][j][k]   coefficient of e_k in e_i e_j
 *   comul[i][j][k] coefficient of e_j (x) e_k in Delta(e_i)
 *   unit[k]        coefficient of e_k in 1
 *   counit[i]      epsilon(e_i)
 *   antipode[i][k] coefficient of e_k in S(e_i)
 */
struct AlgebraFile
{
    std::string name;
    FieldSpec field;
    int dim = 0;
    std::vector<std::string> basis;
    std::vector<ScalarGrid> mul;
    std::vector<ScalarGrid> comul;
    std::vector<std::string> unit;
    std::vector<std::string> counit;
    ScalarGrid antipode;

    bool operator==(const AlgebraFile&) const = default;
};

/// Parses and shape-checks an algebra file.  Throws ParseError.
AlgebraFile parse_algebra(const std::string& text);
/// Canonical text; parse_algebra(print_algebra(f)) == f.
std::string print_algebra(const AlgebraFile& f);

AlgebraFile read_algebra_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

/// A square coefficient table stored under `key` ("R" or "zeta").
struct CoefficientFile
{
    std::string name;
    ScalarGrid entries;
};

CoefficientFile parse_coefficients(const std::string& text, const std::string& key);
std::string print_coefficients(const CoefficientFile& f, const std::string& key);
CoefficientFile read_coefficient_file(const std::string& path, const std::string& key);

namespace detail {

template <typename Scalar>
Scalar parse_entry(const std::string& text, const std::string& where)
{
    try
    {
        return FieldTraits<Scalar>::parse(text);
    }
    catch (const std::invalid_argument& e)
    {
        throw ParseError(where + ": " + e.what());
    }
}

inline std::string at(const std::string& field, std::initializer_list<std::size_t> index)
{
    std::string out = field;
    for (auto i : index)
        out += "[" + std::to_string(i) + "]";
    return out;
}

}  // namespace detail

template <typename Scalar>
AlgebraFile to_file(const HopfAlgebra<Scalar>& H)
{
    const int n = H.dim();
    auto fmt = [](const Scalar& x) { return FieldTraits<Scalar>::format(x); };
    AlgebraFile f;
    f.name = H.name();
    f.field = current_field<Scalar>();
    f.dim = n;
    f.basis = H.basis();
    const auto mul = H.mul().dense(), comul = H.comul().dense(), unit = H.unit().dense(),
               counit = H.counit().dense(), S = H.antipode().dense();
    f.mul.assign(n, ScalarGrid(n, std::vector<std::string>(n)));
    f.comul.assign(n, ScalarGrid(n, std::vector<std::string>(n)));
    f.antipode.assign(n, std::vector<std::string>(n));
    for (int i = 0; i < n; ++i)
    {
        f.unit.push_back(fmt(unit(i, 0)));
        f.counit.push_back(fmt(counit(0, i)));
        for (int j = 0; j < n; ++j)
        {
            f.antipode[i][j] = fmt(S(j, i));
            for (int k = 0; k < n; ++k)
            {
                f.mul[i][j][k] = fmt(mul(k, i * n + j));
                f.comul[i][j][k] = fmt(comul(j * n + k, i));
            }
        }
    }
    return f;
}

/// Builds the algebra in the current field.  checked = false skips the axiom batteries (shape checks still run).
template <typename Scalar>
HopfAlgebra<Scalar> to_hopf(const AlgebraFile& f, bool checked = true)
{
    using Map = LinearMap<Scalar>;
    using T = typename Map::Triplet;
    if (f.field != current_field<Scalar>())
        throw ParseError("field: file is over " + f.field.str() + ", reader expects " + current_field<Scalar>().str());
    const int n = f.dim;
    std::vector<T> mul, comul, unit, counit, S;
    auto put = [](std::vector<T>& v, int row, int col, const Scalar& x) {
        if (!is_zero(x))
            v.emplace_back(row, col, x);
    };
    using detail::at;
    using detail::parse_entry;
    for (int i = 0; i < n; ++i)
    {
        const auto ui = static_cast<std::size_t>(i);
        put(unit, i, 0, parse_entry<Scalar>(f.unit[ui], at("unit", {ui})));
        put(counit, 0, i, parse_entry<Scalar>(f.counit[ui], at("counit", {ui})));
        for (int j = 0; j < n; ++j)
        {
            const auto uj = static_cast<std::size_t>(j);
            put(S, j, i, parse_entry<Scalar>(f.antipode[ui][uj], at("antipode", {ui, uj})));
            for (int k = 0; k < n; ++k)
            {
                const auto uk = static_cast<std::size_t>(k);
                put(mul, k, i * n + j, parse_entry<Scalar>(f.mul[ui][uj][uk], at("mul", {ui, uj, uk})));
                put(comul, j * n + k, i, parse_entry<Scalar>(f.comul[ui][uj][uk], at("comul", {ui, uj, uk})));
            }
        }
    }
    typename HopfAlgebra<Scalar>::Structure s{f.name,
                                              f.basis,
                                              Map::from_triplets({n}, {n, n}, mul),
                                              Map::from_triplets({n}, {}, unit),
                                              Map::from_triplets({n, n}, {n}, comul),
                                              Map::from_triplets({}, {n}, counit),
                                              Map::from_triplets({n}, {n}, S)};
    return checked ? HopfAlgebra<Scalar>(std::move(s)) : HopfAlgebra<Scalar>::unchecked(std::move(s));
}

template <typename Scalar>
HopfAlgebra<Scalar> load_hopf(const std::string& path, bool checked = true)
{
    return to_hopf<Scalar>(read_algebra_file(path), checked);
}

template <typename Scalar>
void save_hopf(const HopfAlgebra<Scalar>& H, const std::string& path)
{
    write_text_file(path, print_algebra(to_file(H)));
}

/// entries[i][j] as an n x n matrix in the current field.
template <typename Scalar>
Matrix<Scalar> to_matrix(const CoefficientFile& f, int n, const std::string& key)
{
    if (static_cast<int>(f.entries.size()) != n)
        throw ShapeError(key + ": expected " + std::to_string(n) + " rows, got " + std::to_string(f.entries.size()));
    Matrix<Scalar> out(n, n);
    for (std::size_t i = 0; i < f.entries.size(); ++i)
    {
        if (static_cast<int>(f.entries[i].size()) != n)
            throw ShapeError(detail::at(key, {i}) + ": expected " + std::to_string(n) + " entries, got " +
                             std::to_string(f.entries[i].size()));
        for (std::size_t j = 0; j < f.entries[i].size(); ++j)
            out(static_cast<int>(i), static_cast<int>(j)) =
                detail::parse_entry<Scalar>(f.entries[i][j], detail::at(key, {i, j}));
    }
    return out;
}

template <typename Scalar>
CoefficientFile to_coefficients(const Matrix<Scalar>& m, std::string name)
{
    CoefficientFile f{std::move(name), {}};
    for (int i = 0; i < m.rows(); ++i)
    {
        f.entries.emplace_back();
        for (int j = 0; j < m.cols(); ++j)
            f.entries.back().push_back(FieldTraits<Scalar>::format(m(i, j)));
    }
    return f;
}

}  // namespace ydl

#endif
