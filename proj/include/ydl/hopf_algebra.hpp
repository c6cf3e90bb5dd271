#ifndef YDL_HOPF_ALGEBRA_HPP
#define YDL_HOPF_ALGEBRA_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linear_map.hpp"
#include "report.hpp"

namespace ydl {

/**
 * A finite-dimensional Hopf algebra given by structure maps on a named basis.
 *
 *   mul      : H (x) H -> H
 *   unit     : k -> H
 *   comul    : H -> H (x) H
 *   counit   : H -> k
 *   antipode : H -> H
 *
 * The public constructor runs every axiom battery and throws AxiomError on
 * the first failure.  unchecked() performs shape checks only.
 */
template <typename Scalar>
class HopfAlgebra
{
    public:
        using Map = LinearMap<Scalar>;

        struct Structure
        {
            std::string name;
            std::vector<std::string> basis;
            Map mul, unit, comul, counit, antipode;
        };

        explicit HopfAlgebra(Structure s);

        static HopfAlgebra unchecked(Structure s) { return HopfAlgebra(std::move(s), false); }

        const std::string& name() const { return s_.name; }
        int dim() const { return static_cast<int>(s_.basis.size()); }
        const std::vector<std::string>& basis() const { return s_.basis; }
        const Map& mul() const { return s_.mul; }
        const Map& unit() const { return s_.unit; }
        const Map& comul() const { return s_.comul; }
        const Map& counit() const { return s_.counit; }
        const Map& antipode() const { return s_.antipode; }
        const Structure& structure() const { return s_; }
        bool checked() const { return checked_; }

        /// Labels for the tensor power H^{(x) legs}.
        Labels labels(int legs = 1) const { return Labels(legs, s_.basis); }

        Map id() const { return Map::identity(dim()); }

        /// S^{-1}, computed on first use and shared between copies.
        const Map& antipode_inverse() const
        {
            std::lock_guard lock(cache_->mutex);
            if (!cache_->antipode_inv)
            {
                try
                {
                    cache_->antipode_inv = invert(s_.antipode);
                }
                catch (const SingularError& e)
                {
                    throw SingularError("antipode not bijective (rank " + std::to_string(e.rank()) + " of " +
                                            std::to_string(e.size()) + ")",
                                        e.rank(), e.size());
                }
            }
            return *cache_->antipode_inv;
        }

    private:
        struct Cache
        {
            std::mutex mutex;
            std::optional<Map> antipode_inv;
        };

        HopfAlgebra(Structure s, bool run_checks);

        Structure s_;
        bool checked_ = false;
        std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

template <typename Scalar>
HopfAlgebra<Scalar>::HopfAlgebra(Structure s, bool run_checks) : s_(std::move(s))
{
    const int n = dim();
    if (n == 0)
        throw ShapeError(s_.name + ": empty basis");
    auto fit = [&](Map& f, const char* what, Legs out, Legs in) {
        if (f.rows() != leg_product(out) || f.cols() != leg_product(in))
            throw ShapeError(s_.name + ": " + what + " has shape " + std::to_string(f.rows()) + "x" +
                             std::to_string(f.cols()) + ", expected " + legs_string(out) + "<-" + legs_string(in));
        f = f.reshaped(std::move(out), std::move(in));
    };
    fit(s_.mul, "mul", {n}, {n, n});
    fit(s_.unit, "unit", {n}, {});
    fit(s_.comul, "comul", {n, n}, {n});
    fit(s_.counit, "counit", {}, {n});
    fit(s_.antipode, "antipode", {n}, {n});
    if (!run_checks)
        return;
    checked_ = true;
}

template <typename Scalar>
std::vector<AxiomReport<Scalar>> check_bialgebra(const HopfAlgebra<Scalar>& H);
template <typename Scalar>
AxiomReport<Scalar> check_antipode(const HopfAlgebra<Scalar>& H);

template <typename Scalar>
HopfAlgebra<Scalar>::HopfAlgebra(Structure s) : HopfAlgebra(std::move(s), true)
{
    auto reports = check_bialgebra(*this);
    reports.push_back(check_antipode(*this));
    if (const auto* bad = first_failure(reports))
        throw AxiomError(bad->axiom, name() + " at " + bad->witness->input + ": " + bad->witness->lhs_text +
                                         " != " + bad->witness->rhs_text);
}

/// Delta^2 = (Delta (x) id) o Delta.
template <typename Scalar>
LinearMap<Scalar> comul2(const HopfAlgebra<Scalar>& H)
{
    return compose(kronecker(H.comul(), H.id()), H.comul());
}

/// Associativity, unit, coassociativity, counit, and Delta, epsilon being algebra maps.
template <typename Scalar>
std::vector<AxiomReport<Scalar>> check_bialgebra(const HopfAlgebra<Scalar>& H)
{
    using Map = LinearMap<Scalar>;
    const int n = H.dim();
    const Map I = H.id();
    const Map& m = H.mul();
    const Map& D = H.comul();
    const Map one = Map::identity(Legs{});
    const Map mid = permute_legs<Scalar>({n, n, n, n}, {0, 2, 1, 3});
    std::vector<AxiomReport<Scalar>> out;

    out.push_back(compare("associativity", compose(m, kronecker(m, I)), compose(m, kronecker(I, m)), H.labels(3),
                          H.labels(1)));

    auto unit = compare("unit", compose(m, kronecker(H.unit(), I)), I, H.labels(1), H.labels(1));
    if (unit.passed)
        unit = compare("unit", compose(m, kronecker(I, H.unit())), I, H.labels(1), H.labels(1));
    out.push_back(std::move(unit));

    out.push_back(compare("coassociativity", compose(kronecker(D, I), D), compose(kronecker(I, D), D), H.labels(1),
                          H.labels(3)));

    auto counit = compare("counit", compose(kronecker(H.counit(), I), D).reshaped({n}, {n}), I, H.labels(1),
                          H.labels(1));
    if (counit.passed)
        counit = compare("counit", compose(kronecker(I, H.counit()), D).reshaped({n}, {n}), I, H.labels(1),
                         H.labels(1));
    out.push_back(std::move(counit));

    out.push_back(compare("comultiplication multiplicative", compose(D, m),
                          compose(kronecker(m, m), mid, kronecker(D, D)), H.labels(2), H.labels(2)));
    out.push_back(compare("comultiplication unital", compose(D, H.unit()), kronecker(H.unit(), H.unit()), Labels{},
                          H.labels(2)));
    out.push_back(compare("counit multiplicative", compose(H.counit(), m), kronecker(H.counit(), H.counit()),
                          H.labels(2), Labels{}));
    out.push_back(compare("counit unital", compose(H.counit(), H.unit()), one, Labels{}, Labels{}));
    return out;
}

/// m (S (x) id) Delta = u epsilon = m (id (x) S) Delta.
template <typename Scalar>
AxiomReport<Scalar> check_antipode(const HopfAlgebra<Scalar>& H)
{
    const auto I = H.id();
    const auto ue = compose(H.unit(), H.counit());
    auto r = compare("antipode", compose(H.mul(), kronecker(H.antipode(), I), H.comul()), ue, H.labels(1),
                     H.labels(1));
    if (r.passed)
        r = compare("antipode", compose(H.mul(), kronecker(I, H.antipode()), H.comul()), ue, H.labels(1),
                    H.labels(1));
    return r;
}

template <typename Scalar>
LinearMap<Scalar> antipode_inverse(const HopfAlgebra<Scalar>& H)
{
    return H.antipode_inverse();
}

template <typename Scalar>
AxiomReport<Scalar> is_commutative(const HopfAlgebra<Scalar>& H)
{
    const int n = H.dim();
    return compare("commutativity", compose(H.mul(), flip<Scalar>(n, n)), H.mul(), H.labels(2), H.labels(1));
}

template <typename Scalar>
AxiomReport<Scalar> is_cocommutative(const HopfAlgebra<Scalar>& H)
{
    const int n = H.dim();
    return compare("cocommutativity", compose(flip<Scalar>(n, n), H.comul()), H.comul(), H.labels(1),
                   H.labels(2));
}

/// S o S = id.
template <typename Scalar>
AxiomReport<Scalar> is_involutive(const HopfAlgebra<Scalar>& H)
{
    return compare("involutivity", compose(H.antipode(), H.antipode()), H.id(), H.labels(1), H.labels(1));
}

/// Same basis size and identical structure constants; names are not compared.
template <typename Scalar>
bool same_structure(const HopfAlgebra<Scalar>& a, const HopfAlgebra<Scalar>& b)
{
    return a.dim() == b.dim() && a.mul() == b.mul() && a.unit() == b.unit() && a.comul() == b.comul() &&
           a.counit() == b.counit() && a.antipode() == b.antipode();
}

}  // namespace ydl

#endif
