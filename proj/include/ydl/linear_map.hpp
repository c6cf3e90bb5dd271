#ifndef YDL_LINEAR_MAP_HPP
#define YDL_LINEAR_MAP_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "errors.hpp"
#include "scalar.hpp"

/**
 * Exact linear maps between tensor products of finite-dimensional spaces.
 *
 * A LinearMap is a matrix together with the dimensions of the tensor legs of
 * its domain and codomain.  The basis of V (x) W is ordered row-major,
 * (i, j) -> i * dim(W) + j, everywhere in the library; with that convention a
 * Sweedler-notation identity becomes an equality of two composites built
 * from compose(), kronecker() and permute_legs().
 *
 * Storage is column-major sparse with explicit zeros pruned, so tensor powers
 * of small structure maps stay cheap.  A space with no legs is the ground
 * field: elements of V are maps k -> V, functionals are maps V -> k.
 */

namespace ydl {

using Legs = std::vector<int>;

template <typename Scalar>
using SparseMatrix = Eigen::SparseMatrix<Scalar, Eigen::ColMajor, int>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline int leg_product(const Legs& legs)
{
    return std::accumulate(legs.begin(), legs.end(), 1, [](int a, int b) { return a * b; });
}

inline std::string legs_string(const Legs& legs)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < legs.size(); ++i)
        os << (i ? "," : "") << legs[i];
    os << ']';
    return os.str();
}

/// Splits a flat index of a tensor product into one index per leg.
inline std::vector<int> split_index(int index, const Legs& legs)
{
    std::vector<int> digits(legs.size());
    for (std::size_t k = legs.size(); k-- > 0;)
    {
        digits[k] = index % legs[k];
        index /= legs[k];
    }
    return digits;
}

inline int join_index(const std::vector<int>& digits, const Legs& legs)
{
    int index = 0;
    for (std::size_t k = 0; k < legs.size(); ++k)
        index = index * legs[k] + digits[k];
    return index;
}

template <typename Scalar>
class LinearMap
{
    public:
        using Triplet = Eigen::Triplet<Scalar, int>;

        /// The zero endomorphism of the ground field.
        LinearMap() : LinearMap(Legs{}, Legs{}) {}

        /// Zero map with the given leg shapes.
        LinearMap(Legs out, Legs in)
            : legs_out_(std::move(out)), legs_in_(std::move(in)),
              matrix_(leg_product(legs_out_), leg_product(legs_in_))
        {
            check_legs();
        }

        LinearMap(Legs out, Legs in, SparseMatrix<Scalar> m)
            : legs_out_(std::move(out)), legs_in_(std::move(in)), matrix_(std::move(m))
        {
            check_legs();
            if (matrix_.rows() != leg_product(legs_out_) || matrix_.cols() != leg_product(legs_in_))
                throw ShapeError("matrix of size " + std::to_string(matrix_.rows()) + "x" +
                                 std::to_string(matrix_.cols()) + " does not match legs " +
                                 legs_string(legs_out_) + "<-" + legs_string(legs_in_));
            prune();
        }

        static LinearMap from_triplets(Legs out, Legs in, const std::vector<Triplet>& entries)
        {
            SparseMatrix<Scalar> m(leg_product(out), leg_product(in));
            m.setFromTriplets(entries.begin(), entries.end());
            return LinearMap(std::move(out), std::move(in), std::move(m));
        }

        static LinearMap from_dense(Legs out, Legs in, const Matrix<Scalar>& dense)
        {
            std::vector<Triplet> entries;
            for (int j = 0; j < dense.cols(); ++j)
                for (int i = 0; i < dense.rows(); ++i)
                    if (!is_zero(dense(i, j)))
                        entries.emplace_back(i, j, dense(i, j));
            if (dense.rows() != leg_product(out) || dense.cols() != leg_product(in))
                throw ShapeError("dense matrix does not match legs " + legs_string(out) + "<-" + legs_string(in));
            return from_triplets(std::move(out), std::move(in), entries);
        }

        static LinearMap identity(const Legs& legs)
        {
            const int n = leg_product(legs);
            std::vector<Triplet> entries;
            entries.reserve(n);
            for (int i = 0; i < n; ++i)
                entries.emplace_back(i, i, Scalar(1));
            return from_triplets(legs, legs, entries);
        }

        static LinearMap identity(int n) { return identity(Legs{n}); }

        /// The vector v as a map k -> V.
        static LinearMap element(Legs out, const Vector<Scalar>& v)
        {
            return from_dense(std::move(out), Legs{}, Matrix<Scalar>(v));
        }

        /// The functional with coefficients f as a map V -> k.
        static LinearMap functional(Legs in, const Vector<Scalar>& f)
        {
            return from_dense(Legs{}, std::move(in), Matrix<Scalar>(f.transpose()));
        }

        int rows() const { return static_cast<int>(matrix_.rows()); }
        int cols() const { return static_cast<int>(matrix_.cols()); }
        const Legs& legs_out() const { return legs_out_; }
        const Legs& legs_in() const { return legs_in_; }
        const SparseMatrix<Scalar>& matrix() const { return matrix_; }
        Eigen::Index nonzeros() const { return matrix_.nonZeros(); }

        std::string shape() const { return legs_string(legs_out_) + "<-" + legs_string(legs_in_); }

        Scalar coeff(int i, int j) const { return matrix_.coeff(i, j); }

        Vector<Scalar> column(int j) const
        {
            Vector<Scalar> v = Vector<Scalar>::Zero(rows());
            for (typename SparseMatrix<Scalar>::InnerIterator it(matrix_, j); it; ++it)
                v(it.row()) = it.value();
            return v;
        }

        Matrix<Scalar> dense() const
        {
            Matrix<Scalar> out = Matrix<Scalar>::Zero(rows(), cols());
            for (int j = 0; j < cols(); ++j)
                for (typename SparseMatrix<Scalar>::InnerIterator it(matrix_, j); it; ++it)
                    out(it.row(), j) = it.value();
            return out;
        }

        Vector<Scalar> apply(const Vector<Scalar>& x) const
        {
            if (x.size() != cols())
                throw ShapeError("apply: vector of length " + std::to_string(x.size()) + " to map " + shape());
            Vector<Scalar> y = Vector<Scalar>::Zero(rows());
            for (int j = 0; j < cols(); ++j)
            {
                if (is_zero(x(j)))
                    continue;
                for (typename SparseMatrix<Scalar>::InnerIterator it(matrix_, j); it; ++it)
                    y(it.row()) += it.value() * x(j);
            }
            return y;
        }

        /// As an element when the domain is k: the coefficient vector.
        Vector<Scalar> as_vector() const
        {
            if (cols() == 1)
                return column(0);
            if (rows() == 1)
                return transpose().column(0);
            throw ShapeError("as_vector: map " + shape() + " is neither an element nor a functional");
        }

        LinearMap transpose() const
        {
            return LinearMap(legs_in_, legs_out_, SparseMatrix<Scalar>(matrix_.transpose()));
        }

        /// Same matrix, different tensor-leg bookkeeping.
        LinearMap reshaped(Legs out, Legs in) const { return LinearMap(std::move(out), std::move(in), matrix_); }

        bool is_zero_map() const { return matrix_.nonZeros() == 0; }

        LinearMap& operator+=(const LinearMap& o)
        {
            same_size(o, "+");
            matrix_ += o.matrix_;
            prune();
            return *this;
        }
        LinearMap& operator-=(const LinearMap& o)
        {
            same_size(o, "-");
            matrix_ -= o.matrix_;
            prune();
            return *this;
        }
        LinearMap& operator*=(const Scalar& c)
        {
            matrix_ *= c;
            prune();
            return *this;
        }

        friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
        friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
        friend LinearMap operator*(const Scalar& c, LinearMap a) { return a *= c; }

        /// Entrywise equality; leg bookkeeping is not compared.
        friend bool operator==(const LinearMap& a, const LinearMap& b)
        {
            if (a.rows() != b.rows() || a.cols() != b.cols())
                return false;
            for (int j = 0; j < a.cols(); ++j)
                if (!column_equal(a, b, j))
                    return false;
            return true;
        }
        friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

        static bool column_equal(const LinearMap& a, const LinearMap& b, int j)
        {
            typename SparseMatrix<Scalar>::InnerIterator ia(a.matrix_, j), ib(b.matrix_, j);
            for (; ia && ib; ++ia, ++ib)
                if (ia.row() != ib.row() || ia.value() != ib.value())
                    return false;
            return !ia && !ib;
        }

    private:
        void check_legs() const
        {
            for (int d : legs_out_)
                if (d <= 0)
                    throw ShapeError("non-positive leg dimension in " + legs_string(legs_out_));
            for (int d : legs_in_)
                if (d <= 0)
                    throw ShapeError("non-positive leg dimension in " + legs_string(legs_in_));
        }

        void same_size(const LinearMap& o, const char* op) const
        {
            if (rows() != o.rows() || cols() != o.cols())
                throw ShapeError(std::string("operator") + op + ": shapes " + shape() + " and " + o.shape() + " differ");
        }

        void prune()
        {
            matrix_.prune([](const int&, const int&, const Scalar& v) { return !is_zero(v); });
            matrix_.makeCompressed();
        }

        Legs legs_out_;
        Legs legs_in_;
        SparseMatrix<Scalar> matrix_;
};

/// f o g.
template <typename Scalar>
LinearMap<Scalar> compose(const LinearMap<Scalar>& f, const LinearMap<Scalar>& g)
{
    if (f.cols() != g.rows())
        throw ShapeError("compose: cannot apply f " + f.shape() + " after g " + g.shape());
    SparseMatrix<Scalar> product = f.matrix() * g.matrix();
    return LinearMap<Scalar>(f.legs_out(), g.legs_in(), std::move(product));
}

/// compose(f, g, h) = f o g o h.
template <typename Scalar, typename... Rest>
LinearMap<Scalar> compose(const LinearMap<Scalar>& f, const LinearMap<Scalar>& g, const Rest&... rest)
{
    return compose(f, compose(g, rest...));
}

template <typename Scalar>
LinearMap<Scalar> operator*(const LinearMap<Scalar>& f, const LinearMap<Scalar>& g)
{
    return compose(f, g);
}

/// f (x) g with (f (x) g)[(a,c),(b,d)] = f[a,b] g[c,d]; legs concatenate.
template <typename Scalar>
LinearMap<Scalar> kronecker(const LinearMap<Scalar>& f, const LinearMap<Scalar>& g)
{
    using It = typename SparseMatrix<Scalar>::InnerIterator;
    Legs out = f.legs_out(), in = f.legs_in();
    out.insert(out.end(), g.legs_out().begin(), g.legs_out().end());
    in.insert(in.end(), g.legs_in().begin(), g.legs_in().end());
    std::vector<typename LinearMap<Scalar>::Triplet> entries;
    entries.reserve(static_cast<std::size_t>(f.nonzeros() * g.nonzeros()));
    for (int b = 0; b < f.cols(); ++b)
        for (It fi(f.matrix(), b); fi; ++fi)
            for (int d = 0; d < g.cols(); ++d)
                for (It gi(g.matrix(), d); gi; ++gi)
                    entries.emplace_back(static_cast<int>(fi.row()) * g.rows() + static_cast<int>(gi.row()),
                                         b * g.cols() + d, fi.value() * gi.value());
    return LinearMap<Scalar>::from_triplets(std::move(out), std::move(in), entries);
}

template <typename Scalar, typename... Rest>
LinearMap<Scalar> tensor(const LinearMap<Scalar>& f)
{
    return f;
}

/// tensor(f, g, h) = f (x) g (x) h.
template <typename Scalar, typename... Rest>
LinearMap<Scalar> tensor(const LinearMap<Scalar>& f, const LinearMap<Scalar>& g, const Rest&... rest)
{
    if constexpr (sizeof...(rest) == 0)
        return kronecker(f, g);
    else
        return tensor(kronecker(f, g), rest...);
}

/**
 * Permutation of tensor legs.  The output's leg i is the input's leg perm[i]:
 * permute_legs({a, b, c}, {2, 0, 1}) sends x (x) y (x) z to z (x) x (x) y.
 */
template <typename Scalar>
LinearMap<Scalar> permute_legs(const Legs& dims, const std::vector<int>& perm)
{
    if (perm.size() != dims.size())
        throw ShapeError("permute_legs: permutation of length " + std::to_string(perm.size()) + " for legs " +
                         legs_string(dims));
    std::vector<int> seen(perm.size(), 0);
    for (int p : perm)
    {
        if (p < 0 || p >= static_cast<int>(perm.size()) || seen[p]++)
            throw ShapeError("permute_legs: not a permutation");
    }
    Legs out(dims.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        out[i] = dims[perm[i]];
    const int n = leg_product(dims);
    std::vector<typename LinearMap<Scalar>::Triplet> entries;
    entries.reserve(n);
    std::vector<int> target(dims.size());
    for (int index = 0; index < n; ++index)
    {
        const auto digits = split_index(index, dims);
        for (std::size_t i = 0; i < perm.size(); ++i)
            target[i] = digits[perm[i]];
        entries.emplace_back(join_index(target, out), index, Scalar(1));
    }
    return LinearMap<Scalar>::from_triplets(out, dims, entries);
}

/// The flip M (x) N -> N (x) M.
template <typename Scalar>
LinearMap<Scalar> flip(int m, int n)
{
    return permute_legs<Scalar>(Legs{m, n}, {1, 0});
}

namespace detail {

// Gauss-Jordan on [a | b]; returns the rank of a.  When a is square and of
// full rank, b is overwritten by a^{-1} b.
template <typename Scalar>
int gauss_jordan(Matrix<Scalar>& a, Matrix<Scalar>& b)
{
    const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c)
    {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!is_zero(a(r, c)))
            {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        a.row(pivot).swap(a.row(rank));
        b.row(pivot).swap(b.row(rank));
        const Scalar inv = Scalar(1) / a(rank, c);
        for (int k = 0; k < cols; ++k)
            a(rank, k) *= inv;
        for (int k = 0; k < b.cols(); ++k)
            b(rank, k) *= inv;
        for (int r = 0; r < rows; ++r)
        {
            if (r == rank || is_zero(a(r, c)))
                continue;
            const Scalar factor = a(r, c);
            for (int k = 0; k < cols; ++k)
                if (!is_zero(a(rank, k)))
                    a(r, k) -= factor * a(rank, k);
            for (int k = 0; k < b.cols(); ++k)
                if (!is_zero(b(rank, k)))
                    b(r, k) -= factor * b(rank, k);
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

template <typename Scalar>
int rank(const LinearMap<Scalar>& f)
{
    Matrix<Scalar> a = f.dense();
    Matrix<Scalar> none(f.rows(), 0);
    return detail::gauss_jordan(a, none);
}

/// Exact inverse by rational Gauss-Jordan elimination.
template <typename Scalar>
LinearMap<Scalar> invert(const LinearMap<Scalar>& f)
{
    if (f.rows() != f.cols())
        throw ShapeError("invert: map " + f.shape() + " is not square");
    Matrix<Scalar> a = f.dense();
    Matrix<Scalar> b = Matrix<Scalar>::Identity(f.rows(), f.rows());
    const int r = detail::gauss_jordan(a, b);
    if (r < f.rows())
        throw SingularError("not invertible: rank " + std::to_string(r) + " of " + std::to_string(f.rows()), r,
                            f.rows());
    return LinearMap<Scalar>::from_dense(f.legs_in(), f.legs_out(), b);
}

/// First column where a and b differ, if any.  Sizes must agree.
template <typename Scalar>
std::optional<int> first_difference(const LinearMap<Scalar>& a, const LinearMap<Scalar>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("first_difference: shapes " + a.shape() + " and " + b.shape() + " differ");
    for (int j = 0; j < a.cols(); ++j)
        if (!LinearMap<Scalar>::column_equal(a, b, j))
            return j;
    return std::nullopt;
}

template <typename Scalar>
Vector<Scalar> basis_vector(int n, int i)
{
    Vector<Scalar> v = Vector<Scalar>::Zero(n);
    v(i) = Scalar(1);
    return v;
}

/// Coefficients of a (x) b in the row-major product basis.
template <typename Scalar>
Vector<Scalar> kronecker(const Vector<Scalar>& a, const Vector<Scalar>& b)
{
    Vector<Scalar> out = Vector<Scalar>::Zero(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
    {
        if (is_zero(a(i)))
            continue;
        for (Eigen::Index j = 0; j < b.size(); ++j)
            if (!is_zero(b(j)))
                out(i * b.size() + j) = a(i) * b(j);
    }
    return out;
}

}  // namespace ydl

#endif
