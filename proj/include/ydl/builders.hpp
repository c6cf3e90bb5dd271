#ifndef YDL_BUILDERS_HPP
#define YDL_BUILDERS_HPP

#include <array>
#include <string>
#include <vector>

#include "hopf_algebra.hpp"

namespace ydl {

/// table[a][b] is the index of the product ab.
using CayleyTable = std::vector<std::vector<int>>;

namespace detail {

inline std::vector<int> check_group(const CayleyTable& table)
{
    const int n = static_cast<int>(table.size());
    if (n == 0)
        throw StructuralError("not a group: empty table");
    for (int a = 0; a < n; ++a)
    {
        if (static_cast<int>(table[a].size()) != n)
            throw StructuralError("not a group: row " + std::to_string(a) + " has " +
                                  std::to_string(table[a].size()) + " entries, expected " + std::to_string(n));
        for (int b = 0; b < n; ++b)
            if (table[a][b] < 0 || table[a][b] >= n)
                throw StructuralError("not a group: product (" + std::to_string(a) + "," + std::to_string(b) +
                                      ") out of range");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw StructuralError("not a group: (ab)c != a(bc) at (a,b,c) = (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")");
    int e = -1;
    for (int a = 0; a < n && e < 0; ++a)
    {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b)
            ok = table[a][b] == b && table[b][a] == b;
        if (ok)
            e = a;
    }
    if (e < 0)
        throw StructuralError("not a group: no identity element");
    std::vector<int> inverse(n, -1);
    for (int a = 0; a < n; ++a)
    {
        for (int b = 0; b < n; ++b)
            if (table[a][b] == e && table[b][a] == e)
                inverse[a] = b;
        if (inverse[a] < 0)
            throw StructuralError("not a group: element " + std::to_string(a) + " has no inverse");
    }
    inverse.push_back(e);
    return inverse;
}

inline std::string toggle_star(const std::string& s)
{
    if (!s.empty() && s.back() == '*')
        return s.substr(0, s.size() - 1);
    return s + "*";
}

}  // namespace detail

/// kG with Delta(g) = g (x) g, epsilon(g) = 1, S(g) = g^{-1}.
template <typename Scalar>
HopfAlgebra<Scalar> group_algebra(const std::string& name, const std::vector<std::string>& elements,
                                  const CayleyTable& table)
{
    using Map = LinearMap<Scalar>;
    using T = typename Map::Triplet;
    auto inverse = detail::check_group(table);
    const int n = static_cast<int>(table.size());
    const int e = inverse.back();
    if (static_cast<int>(elements.size()) != n)
        throw ShapeError(name + ": " + std::to_string(elements.size()) + " names for " + std::to_string(n) +
                         " group elements");
    std::vector<T> mul, comul, antipode;
    for (int a = 0; a < n; ++a)
    {
        for (int b = 0; b < n; ++b)
            mul.emplace_back(table[a][b], a * n + b, Scalar(1));
        comul.emplace_back(a * n + a, a, Scalar(1));
        antipode.emplace_back(inverse[a], a, Scalar(1));
    }
    typename HopfAlgebra<Scalar>::Structure s{
        name,
        elements,
        Map::from_triplets({n}, {n, n}, mul),
        Map::element({n}, basis_vector<Scalar>(n, e)),
        Map::from_triplets({n, n}, {n}, comul),
        Map::functional({n}, Vector<Scalar>::Ones(n)),
        Map::from_triplets({n}, {n}, antipode)};
    return HopfAlgebra<Scalar>(std::move(s));
}

/// The ground field as a one-dimensional Hopf algebra.
template <typename Scalar>
HopfAlgebra<Scalar> trivial_hopf()
{
    return group_algebra<Scalar>("k", {"1"}, {{0}});
}

template <typename Scalar>
HopfAlgebra<Scalar> cyclic_group_algebra(int order)
{
    CayleyTable table(order, std::vector<int>(order));
    std::vector<std::string> names;
    for (int a = 0; a < order; ++a)
    {
        names.push_back(a == 0 ? "1" : a == 1 ? "g" : "g" + std::to_string(a));
        for (int b = 0; b < order; ++b)
            table[a][b] = (a + b) % order;
    }
    return group_algebra<Scalar>("kC" + std::to_string(order), names, table);
}

/// k[C2 x C2] on {1, a, b, ab}.
template <typename Scalar>
HopfAlgebra<Scalar> klein_group_algebra()
{
    CayleyTable table(4, std::vector<int>(4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            table[x][y] = x ^ y;
    return group_algebra<Scalar>("k(C2xC2)", {"1", "a", "b", "ab"}, table);
}

/// kS3; products compose right to left, (st)(i) = s(t(i)).
template <typename Scalar>
HopfAlgebra<Scalar> symmetric_group_algebra_s3()
{
    using Perm = std::array<int, 3>;
    const std::vector<Perm> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::string> names = {"()", "(12)", "(13)", "(23)", "(123)", "(132)"};
    CayleyTable table(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
        {
            Perm p;
            for (int i = 0; i < 3; ++i)
                p[i] = perms[a][perms[b][i]];
            for (int c = 0; c < 6; ++c)
                if (perms[c] == p)
                    table[a][b] = c;
        }
    return group_algebra<Scalar>("kS3", names, table);
}

/**
 * Sweedler's four-dimensional algebra on {1, g, x, gx}:
 * g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x (x) 1 + g (x) x, S(x) = -gx.
 */
template <typename Scalar>
HopfAlgebra<Scalar> sweedler_algebra()
{
    using Map = LinearMap<Scalar>;
    using T = typename Map::Triplet;
    if (FieldTraits<Scalar>::characteristic() == 2)
        throw StructuralError("Sweedler algebra needs characteristic != 2");
    // index = a + 2b for g^a x^b
    std::vector<T> mul;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
        {
            const int a = i % 2, b = i / 2, c = j % 2, d = j / 2;
            if (b + d > 1)
                continue;
            const Scalar sign = (b * c) % 2 ? Scalar(-1) : Scalar(1);
            mul.emplace_back((a + c) % 2 + 2 * (b + d), i * 4 + j, sign);
        }
    const std::vector<T> comul = {{0 * 4 + 0, 0, Scalar(1)}, {1 * 4 + 1, 1, Scalar(1)}, {2 * 4 + 0, 2, Scalar(1)},
                                  {1 * 4 + 2, 2, Scalar(1)}, {3 * 4 + 1, 3, Scalar(1)}, {0 * 4 + 3, 3, Scalar(1)}};
    const std::vector<T> antipode = {{0, 0, Scalar(1)}, {1, 1, Scalar(1)}, {3, 2, Scalar(-1)}, {2, 3, Scalar(1)}};
    Vector<Scalar> counit(4);
    counit << Scalar(1), Scalar(1), Scalar(0), Scalar(0);
    typename HopfAlgebra<Scalar>::Structure s{"Sweedler",
                                              {"1", "g", "x", "gx"},
                                              Map::from_triplets({4}, {4, 4}, mul),
                                              Map::element({4}, basis_vector<Scalar>(4, 0)),
                                              Map::from_triplets({4, 4}, {4}, comul),
                                              Map::functional({4}, counit),
                                              Map::from_triplets({4}, {4}, antipode)};
    return HopfAlgebra<Scalar>(std::move(s));
}

/// H (x) K with componentwise product and Delta = (id (x) tau (x) id)(Delta_H (x) Delta_K).
template <typename Scalar>
HopfAlgebra<Scalar> tensor_hopf(const HopfAlgebra<Scalar>& H, const HopfAlgebra<Scalar>& K)
{
    const int n = H.dim(), p = K.dim();
    std::vector<std::string> names;
    for (const auto& a : H.basis())
        for (const auto& b : K.basis())
            names.push_back("(" + a + "," + b + ")");
    const auto mul = compose(kronecker(H.mul(), K.mul()), permute_legs<Scalar>({n, p, n, p}, {0, 2, 1, 3}));
    const auto comul = compose(permute_legs<Scalar>({n, n, p, p}, {0, 2, 1, 3}), kronecker(H.comul(), K.comul()));
    typename HopfAlgebra<Scalar>::Structure s{H.name() + "⊗" + K.name(),
                                              names,
                                              mul.reshaped({n * p}, {n * p, n * p}),
                                              kronecker(H.unit(), K.unit()),
                                              comul.reshaped({n * p, n * p}, {n * p}),
                                              kronecker(H.counit(), K.counit()),
                                              kronecker(H.antipode(), K.antipode()).reshaped({n * p}, {n * p})};
    return HopfAlgebra<Scalar>(std::move(s));
}

/// H* on the dual basis: every structure map is transposed, algebra and coalgebra roles swapped.
template <typename Scalar>
HopfAlgebra<Scalar> dual_hopf(const HopfAlgebra<Scalar>& H)
{
    std::vector<std::string> names;
    for (const auto& b : H.basis())
        names.push_back(detail::toggle_star(b));
    typename HopfAlgebra<Scalar>::Structure s{detail::toggle_star(H.name()),
                                              names,
                                              H.comul().transpose(),
                                              H.counit().transpose(),
                                              H.mul().transpose(),
                                              H.unit().transpose(),
                                              H.antipode().transpose()};
    return HopfAlgebra<Scalar>(std::move(s));
}

inline const std::vector<std::string>& catalog_keys()
{
    static const std::vector<std::string> keys = {"k",     "c2",      "c3",       "c2xc2",
                                                  "s3",    "dual_s3", "sweedler", "c2_tensor_c2"};
    return keys;
}

inline bool is_catalog_key(const std::string& key)
{
    for (const auto& k : catalog_keys())
        if (k == key)
            return true;
    return false;
}

template <typename Scalar>
HopfAlgebra<Scalar> catalog_algebra(const std::string& key)
{
    if (key == "k")
        return trivial_hopf<Scalar>();
    if (key == "c2")
        return cyclic_group_algebra<Scalar>(2);
    if (key == "c3")
        return cyclic_group_algebra<Scalar>(3);
    if (key == "c2xc2")
        return klein_group_algebra<Scalar>();
    if (key == "s3")
        return symmetric_group_algebra_s3<Scalar>();
    if (key == "dual_s3")
        return dual_hopf(symmetric_group_algebra_s3<Scalar>());
    if (key == "sweedler")
        return sweedler_algebra<Scalar>();
    if (key == "c2_tensor_c2")
        return tensor_hopf(cyclic_group_algebra<Scalar>(2), cyclic_group_algebra<Scalar>(2));
    throw std::invalid_argument("unknown catalog key \"" + key + "\"");
}

}  // namespace ydl

#endif
