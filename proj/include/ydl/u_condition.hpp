#ifndef YDL_U_CONDITION_HPP
#define YDL_U_CONDITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "braiding_analysis.hpp"

namespace ydl {

/// m |-> m[-1] > m[0](0) < m[0](1): left coaction first, right coaction on the [0] leg.
template <typename Scalar>
LinearMap<Scalar> u_composite(const YDLBimodule<Scalar>& M)
{
    const auto I = M.over().id();
    return compose(M.right_action(), kronecker(M.left_action(), I), kronecker(I, M.right_coaction()),
                   M.left_coaction());
}

/// m |-> m(0)[-1] > m(0)[0] < m(1): right coaction first.
template <typename Scalar>
LinearMap<Scalar> u_composite_right_first(const YDLBimodule<Scalar>& M)
{
    const auto I = M.over().id();
    return compose(M.right_action(), kronecker(M.left_action(), I), kronecker(M.left_coaction(), I),
                   M.right_coaction());
}

template <typename Scalar>
struct UVerdict
{
    bool holds = true;
    std::optional<Witness<Scalar>> witness;
    bool orderings_agree = true;
};

template <typename Scalar>
UVerdict<Scalar> check_u(const YDLBimodule<Scalar>& M)
{
    const auto u = u_composite(M);
    const auto r = compare("u-condition", u, M.id(), M.labels(), M.labels());
    return {r.passed, r.witness, u == u_composite_right_first(M)};
}

/// Outcome of the u-condition for one of the four example modules.
template <typename Scalar>
struct ExampleU
{
    int variant = 0;
    UVerdict<Scalar> verdict;
    // first k with u(k (x) 1) != k (x) 1
    std::optional<Witness<Scalar>> slice_witness;
};

template <typename Scalar>
struct ExampleUVerdict
{
    bool involutive = false;
    std::vector<ExampleU<Scalar>> modules;
    bool holds = false;
};

/// The u-condition on H1..H4 against S^2 = id.
template <typename Scalar>
ExampleUVerdict<Scalar> example_u_verdict(const HopfAlgebra<Scalar>& H)
{
    ExampleUVerdict<Scalar> out;
    out.involutive = is_involutive(H).passed;
    const auto slice = kronecker(H.id(), H.unit());
    out.holds = true;
    for (int i = 1; i <= 4; ++i)
    {
        const auto M = example_module(H, i);
        ExampleU<Scalar> e;
        e.variant = i;
        e.verdict = check_u(M);
        const auto r = compare("u-condition", compose(u_composite(M), slice), slice, H.labels(), H.labels(2));
        e.slice_witness = r.witness;
        if (e.slice_witness)
            e.slice_witness->input = e.slice_witness->rhs_text;
        out.holds = out.holds && e.verdict.orderings_agree && e.verdict.holds == out.involutive &&
                    (out.involutive || e.slice_witness.has_value());
        out.modules.push_back(std::move(e));
    }
    return out;
}

template <typename Scalar>
struct TensorUVerdict
{
    UVerdict<Scalar> tensor_u;
    SymmetryVerdict<Scalar> symmetry;
    // u of M (x) N equals psi_{N,M} psi_{M,N} as maps
    bool proof_identity = false;
    bool holds = false;
};

/// Requires S^2 = id and the u-condition on both factors; throws PreconditionError naming the first that fails.
template <typename Scalar>
TensorUVerdict<Scalar> tensor_u_verdict(const YDLBimodule<Scalar>& M, const YDLBimodule<Scalar>& N)
{
    require_same_base(M, N);
    if (!is_involutive(M.over()).passed)
        throw PreconditionError("S^2 = id fails for " + M.over().name());
    if (!check_u(M).holds)
        throw PreconditionError("u-condition fails for " + M.name());
    if (!check_u(N).holds)
        throw PreconditionError("u-condition fails for " + N.name());
    TensorUVerdict<Scalar> out;
    const auto MN = tensor_ydl(M, N);
    out.tensor_u = check_u(MN);
    out.symmetry = is_symmetric_pair(M, N);
    out.proof_identity = u_composite(MN) == round_trip(M, N);
    out.holds = out.proof_identity && out.tensor_u.holds == out.symmetry.symmetric;
    return out;
}

template <typename Scalar>
struct PairU
{
    int i = 0;
    int j = 0;
    bool u_holds = false;
    bool symmetric = false;
    bool proof_identity = false;
};

/// u-condition on Hi (x) Hj against symmetry of psi_{Hi,Hj}, for all i, j.  Requires S^2 = id.
template <typename Scalar>
std::vector<PairU<Scalar>> example_tensor_u_table(const HopfAlgebra<Scalar>& H)
{
    if (!is_involutive(H).passed)
        throw PreconditionError("S^2 = id fails for " + H.name());
    std::vector<YDLBimodule<Scalar>> mods;
    for (int i = 1; i <= 4; ++i)
        mods.push_back(example_module(H, i));
    std::vector<PairU<Scalar>> out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
        {
            const auto u = u_composite(tensor_ydl(mods[i], mods[j]));
            const auto rt = round_trip(mods[i], mods[j]);
            const auto I = LinearMap<Scalar>::identity(u.cols());
            out.push_back({i + 1, j + 1, u == I, rt == I, u == rt});
        }
    return out;
}

}  // namespace ydl

#endif
