#ifndef YDL_BRAIDING_ANALYSIS_HPP
#define YDL_BRAIDING_ANALYSIS_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ydl_bimodule.hpp"

namespace ydl {

/// Verdict of a round-trip test.  On failure the witness carries the output as lhs and the input as rhs.
template <typename Scalar>
struct SymmetryVerdict
{
    bool symmetric = true;
    std::optional<Witness<Scalar>> witness;
};

template <typename Scalar>
SymmetryVerdict<Scalar> verdict_from(const AxiomReport<Scalar>& r)
{
    return {r.passed, r.witness};
}

/// psi_{N,M} o psi_{M,N}
template <typename Scalar>
LinearMap<Scalar> round_trip(const YDLBimodule<Scalar>& M, const YDLBimodule<Scalar>& N)
{
    return compose(braiding(N, M), braiding(M, N));
}

template <typename Scalar>
SymmetryVerdict<Scalar> is_symmetric_pair(const YDLBimodule<Scalar>& M, const YDLBimodule<Scalar>& N)
{
    const Labels mn = {M.basis(), N.basis()};
    return verdict_from(compare("symmetry", round_trip(M, N), LinearMap<Scalar>::identity(M.dim() * N.dim()), mn, mn));
}

template <typename Scalar>
AxiomReport<Scalar> is_flip(const YDLBimodule<Scalar>& M, const YDLBimodule<Scalar>& N)
{
    return compare("flip", braiding(M, N), flip<Scalar>(M.dim(), N.dim()), Labels{M.basis(), N.basis()},
                   Labels{N.basis(), M.basis()});
}

/**
 * Both sides of the pseudosymmetry identity as maps U (x) V (x) W -> W (x) V (x) U:
 *
 *   lhs = (id_W (x) psi_{U,V}) (psi^{-1} (x) id_V) (id_U (x) psi_{V,W})
 *   rhs = (psi_{V,W} (x) id_U) (id_V (x) psi^{-1}) (psi_{U,V} (x) id_W)
 *
 * where psi^{-1} : U (x) W -> W (x) U is the inverse of psi_{W,U}, the only
 * inverse braiding that makes both composites well typed.
 */
template <typename Scalar>
std::pair<LinearMap<Scalar>, LinearMap<Scalar>> pseudosymmetry_sides(const YDLBimodule<Scalar>& U,
                                                                     const YDLBimodule<Scalar>& V,
                                                                     const YDLBimodule<Scalar>& W)
{
    const auto IU = U.id(), IV = V.id(), IW = W.id();
    const auto psi_uv = braiding(U, V), psi_vw = braiding(V, W);
    const auto inv_wu = braiding_inverse(W, U);
    auto lhs = compose(kronecker(IW, psi_uv), kronecker(inv_wu, IV), kronecker(IU, psi_vw));
    auto rhs = compose(kronecker(psi_vw, IU), kronecker(IV, inv_wu), kronecker(psi_uv, IW));
    return {std::move(lhs), std::move(rhs)};
}

template <typename Scalar>
SymmetryVerdict<Scalar> is_pseudosymmetric_triple(const YDLBimodule<Scalar>& U, const YDLBimodule<Scalar>& V,
                                                  const YDLBimodule<Scalar>& W)
{
    const auto [lhs, rhs] = pseudosymmetry_sides(U, V, W);
    return verdict_from(compare("pseudosymmetry", lhs, rhs, Labels{U.basis(), V.basis(), W.basis()},
                                Labels{W.basis(), V.basis(), U.basis()}));
}

/// One pair (M, N) of the symmetry obstruction: psi_{N,M} psi_{M,N}(1 (x) k (x) 1 (x) 1) against 1 (x) k1 (x) 1 (x) k2.
template <typename Scalar>
struct PairObstruction
{
    std::string pair;
    SymmetryVerdict<Scalar> verdict;
    bool round_trip_formula = false;
    std::optional<Witness<Scalar>> witness;
};

template <typename Scalar>
struct SymmetryObstruction
{
    bool trivial = false;
    std::vector<PairObstruction<Scalar>> pairs;
    bool holds = false;
};

namespace detail {

// inject : H -> M (x) N places k in the slot that carries it; expected : H -> M (x) N is the predicted round trip.
template <typename Scalar>
PairObstruction<Scalar> pair_obstruction(const YDLBimodule<Scalar>& M, const YDLBimodule<Scalar>& N,
                                         const LinearMap<Scalar>& inject, const LinearMap<Scalar>& expected,
                                         const Labels& out)
{
    PairObstruction<Scalar> r;
    r.pair = "(" + M.name() + ", " + N.name() + ")";
    r.verdict = is_symmetric_pair(M, N);
    const auto image = compose(round_trip(M, N), inject);
    r.round_trip_formula = image == expected;
    if (auto j = first_difference(image, inject))
    {
        Witness<Scalar> w;
        w.tuple = {*j};
        w.lhs = image.column(*j);
        w.rhs = inject.column(*j);
        w.input = format_vector(w.rhs, out);
        w.lhs_text = format_vector(w.lhs, out);
        w.rhs_text = w.input;
        r.witness = std::move(w);
    }
    return r;
}

}  // namespace detail

/**
 * Round trips of (H1,H2), (H1,H3), (H4,H2), (H4,H3) on 1 (x) k (x) 1 (x) 1.
 * For dim H > 1 every pair must fail symmetry with a witness k; for H = k
 * every pair must be symmetric.
 */
template <typename Scalar>
SymmetryObstruction<Scalar> symmetry_obstruction(const HopfAlgebra<Scalar>& H)
{
    const auto I = H.id();
    const auto& u = H.unit();
    const auto inject = tensor(u, I, u, u);
    const auto expected = compose(tensor(u, I, u, I), H.comul());
    SymmetryObstruction<Scalar> out;
    out.trivial = H.dim() == 1;
    const std::array<std::pair<int, int>, 4> pairs = {{{1, 2}, {1, 3}, {4, 2}, {4, 3}}};
    bool ok = true;
    for (auto [i, j] : pairs)
    {
        auto r = detail::pair_obstruction(example_module(H, i), example_module(H, j), inject, expected, H.labels(4));
        ok = ok && r.round_trip_formula && (out.trivial ? r.verdict.symmetric && !r.witness
                                                        : !r.verdict.symmetric && r.witness.has_value());
        out.pairs.push_back(std::move(r));
    }
    out.holds = ok;
    return out;
}

/// The right-right Yetter-Drinfeld modules k (x) H sitting inside H1 and H2.
template <typename Scalar>
std::pair<YDLBimodule<Scalar>, YDLBimodule<Scalar>> right_right_slices(const HopfAlgebra<Scalar>& H)
{
    return {embed_rryd(H, "k⊗H[1]", H.basis(), right_adjoint_action(H), H.comul()),
            embed_rryd(H, "k⊗H[2]", H.basis(), H.mul(), right_coadjoint_coaction(H))};
}

/// The left-left Yetter-Drinfeld modules H (x) k sitting inside H1 and H2.
template <typename Scalar>
std::pair<YDLBimodule<Scalar>, YDLBimodule<Scalar>> left_left_slices(const HopfAlgebra<Scalar>& H)
{
    return {embed_llyd(H, "H⊗k[1]", H.basis(), H.mul(), adjoint_coaction(H)),
            embed_llyd(H, "H⊗k[2]", H.basis(), left_adjoint_action(H), H.comul())};
}

/// The obstruction restricted to right-right Yetter-Drinfeld modules: k (x) 1 |-> k1 (x) k2.
template <typename Scalar>
SymmetryObstruction<Scalar> right_right_symmetry_obstruction(const HopfAlgebra<Scalar>& H)
{
    const auto [M, N] = right_right_slices(H);
    SymmetryObstruction<Scalar> out;
    out.trivial = H.dim() == 1;
    auto r = detail::pair_obstruction(M, N, kronecker(H.id(), H.unit()), H.comul(), H.labels(2));
    out.holds = r.round_trip_formula &&
                (out.trivial ? r.verdict.symmetric && !r.witness : !r.verdict.symmetric && r.witness.has_value());
    out.pairs.push_back(std::move(r));
    return out;
}

/// The obstruction restricted to left-left Yetter-Drinfeld modules: 1 (x) k |-> k1 (x) k2 in (H (x) k)[1] (x) (H (x) k)[2].
template <typename Scalar>
SymmetryObstruction<Scalar> left_left_symmetry_obstruction(const HopfAlgebra<Scalar>& H)
{
    const auto [M, N] = left_left_slices(H);
    SymmetryObstruction<Scalar> out;
    out.trivial = H.dim() == 1;
    auto r = detail::pair_obstruction(M, N, kronecker(H.unit(), H.id()), H.comul(), H.labels(2));
    out.holds = r.round_trip_formula &&
                (out.trivial ? r.verdict.symmetric && !r.witness : !r.verdict.symmetric && r.witness.has_value());
    out.pairs.push_back(std::move(r));
    return out;
}

/// A violation of the pseudosymmetry identity after the epsilon-projection used to read it off.
template <typename Scalar>
struct ProjectedWitness
{
    std::string form;
    std::string k;
    std::string g;
    Vector<Scalar> lhs;
    Vector<Scalar> rhs;
    std::string lhs_text;
    std::string rhs_text;
    std::optional<bool> matches_closed_form;
};

template <typename Scalar>
struct TripleVerdict
{
    std::string triple;
    SymmetryVerdict<Scalar> verdict;
    std::optional<ProjectedWitness<Scalar>> projected;
};

template <typename Scalar>
struct PseudosymmetryVerdict
{
    bool commutative = false;
    bool cocommutative = false;
    std::vector<TripleVerdict<Scalar>> triples;
    bool triples_pass = true;
    bool biconditional_holds = false;
};

namespace detail {

template <typename Scalar>
std::string triple_name(const YDLBimodule<Scalar>& U, const YDLBimodule<Scalar>& V, const YDLBimodule<Scalar>& W)
{
    return "(" + U.name() + ", " + V.name() + ", " + W.name() + ")";
}

// (H1,H2,H1) on 1(x)1 (x) k(x)1 (x) 1(x)1, projected by id(x)e(x)e(x)e(x)id(x)e:
// lhs reads k2 (x) k3 S^{-1}(k1), rhs reads k (x) 1.
template <typename Scalar>
std::optional<ProjectedWitness<Scalar>> cocommutativity_projection(const HopfAlgebra<Scalar>& H,
                                                                   const LinearMap<Scalar>& lhs,
                                                                   const LinearMap<Scalar>& rhs)
{
    const int n = H.dim();
    const auto I = H.id();
    const auto& e = H.counit();
    const auto P = tensor(I, e, e, e, I, e);
    const auto closed = compose(kronecker(I, H.mul()), tensor(I, I, H.antipode_inverse()),
                                permute_legs<Scalar>({n, n, n}, {1, 2, 0}), comul2(H));
    const Vector<Scalar> u = H.unit().column(0);
    for (int k = 0; k < n; ++k)
    {
        const Vector<Scalar> x =
            kronecker(kronecker(kronecker(u, u), kronecker(basis_vector<Scalar>(n, k), u)), kronecker(u, u));
        const Vector<Scalar> l = P.apply(lhs.apply(x)), r = P.apply(rhs.apply(x));
        if (l == r)
            continue;
        ProjectedWitness<Scalar> w;
        w.form = "k₂⊗k₃S⁻¹(k₁) = k⊗1";
        w.k = H.basis()[k];
        w.lhs = l;
        w.rhs = r;
        w.lhs_text = format_vector(l, H.labels(2));
        w.rhs_text = format_vector(r, H.labels(2));
        w.matches_closed_form = l == closed.column(k);
        return w;
    }
    return std::nullopt;
}

// (H1,H2,H2) on 1(x)1 (x) k(x)1 (x) g(x)1, projected by (e(x)e(x)id(x)e(x)id(x)e)(id^4 (x) S (x) id):
// lhs reads k3 (x) k1 g S(k2) when H is cocommutative, rhs reads k (x) g.
template <typename Scalar>
std::optional<ProjectedWitness<Scalar>> commutativity_projection(const HopfAlgebra<Scalar>& H, bool cocommutative,
                                                                 const LinearMap<Scalar>& lhs,
                                                                 const LinearMap<Scalar>& rhs)
{
    const int n = H.dim();
    const auto I = H.id();
    const auto& e = H.counit();
    const auto P = compose(tensor(e, e, I, e, I, e), tensor(I, I, I, I, H.antipode(), I));
    const auto closed =
        compose(kronecker(I, compose(H.mul(), kronecker(H.mul(), I))), tensor(I, I, I, H.antipode()),
                permute_legs<Scalar>({n, n, n, n}, {2, 0, 3, 1}), kronecker(comul2(H), I));
    const Vector<Scalar> u = H.unit().column(0);
    for (int k = 0; k < n; ++k)
        for (int g = 0; g < n; ++g)
        {
            const Vector<Scalar> x = kronecker(kronecker(kronecker(u, u), kronecker(basis_vector<Scalar>(n, k), u)),
                                               kronecker(basis_vector<Scalar>(n, g), u));
            const Vector<Scalar> l = P.apply(lhs.apply(x)), r = P.apply(rhs.apply(x));
            if (l == r)
                continue;
            ProjectedWitness<Scalar> w;
            w.form = "k₃⊗k₁gS(k₂) = k⊗g";
            w.k = H.basis()[k];
            w.g = H.basis()[g];
            w.lhs = l;
            w.rhs = r;
            w.lhs_text = format_vector(l, H.labels(2));
            w.rhs_text = format_vector(r, H.labels(2));
            if (cocommutative)
                w.matches_closed_form = l == closed.column(k * n + g);
            return w;
        }
    return std::nullopt;
}

template <typename Scalar>
void finish(PseudosymmetryVerdict<Scalar>& v)
{
    v.triples_pass = true;
    for (const auto& t : v.triples)
        v.triples_pass = v.triples_pass && t.verdict.symmetric;
    v.biconditional_holds = v.triples_pass == (v.commutative && v.cocommutative);
}

}  // namespace detail

/**
 * Pseudosymmetry on the canonical triples (H1,H2,H1) and (H1,H2,H2), plus
 * any extra triples, against commutativity and cocommutativity of H.
 * Failing canonical triples also report the projected witness.
 */
template <typename Scalar>
PseudosymmetryVerdict<Scalar> pseudosymmetry_verdict(
    const HopfAlgebra<Scalar>& H, const std::vector<std::array<YDLBimodule<Scalar>, 3>>& extra = {})
{
    PseudosymmetryVerdict<Scalar> v;
    v.commutative = is_commutative(H).passed;
    v.cocommutative = is_cocommutative(H).passed;
    const auto H1 = example_module(H, 1), H2 = example_module(H, 2);
    for (int t = 0; t < 2; ++t)
    {
        const auto& W = t == 0 ? H1 : H2;
        const auto [lhs, rhs] = pseudosymmetry_sides(H1, H2, W);
        TripleVerdict<Scalar> tv;
        tv.triple = detail::triple_name(H1, H2, W);
        tv.verdict = verdict_from(compare("pseudosymmetry", lhs, rhs, Labels{H1.basis(), H2.basis(), W.basis()},
                                          Labels{W.basis(), H2.basis(), H1.basis()}));
        if (!tv.verdict.symmetric)
            tv.projected = t == 0 ? detail::cocommutativity_projection(H, lhs, rhs)
                                  : detail::commutativity_projection(H, v.cocommutative, lhs, rhs);
        v.triples.push_back(std::move(tv));
    }
    for (const auto& [U, V, W] : extra)
        v.triples.push_back({detail::triple_name(U, V, W), is_pseudosymmetric_triple(U, V, W), std::nullopt});
    detail::finish(v);
    return v;
}

/// Pseudosymmetry restricted to left-left Yetter-Drinfeld modules, on the triples of their H (x) k slices.
template <typename Scalar>
PseudosymmetryVerdict<Scalar> left_left_pseudosymmetry_verdict(const HopfAlgebra<Scalar>& H)
{
    PseudosymmetryVerdict<Scalar> v;
    v.commutative = is_commutative(H).passed;
    v.cocommutative = is_cocommutative(H).passed;
    const auto [E1, E2] = left_left_slices(H);
    v.triples.push_back({detail::triple_name(E1, E2, E1), is_pseudosymmetric_triple(E1, E2, E1), std::nullopt});
    v.triples.push_back({detail::triple_name(E1, E2, E2), is_pseudosymmetric_triple(E1, E2, E2), std::nullopt});
    detail::finish(v);
    return v;
}

}  // namespace ydl

#endif
