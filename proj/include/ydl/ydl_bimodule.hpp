#ifndef YDL_YDL_BIMODULE_HPP
#define YDL_YDL_BIMODULE_HPP

#include <string>
#include <vector>

#include "hopf_algebra.hpp"

/**
 * Yetter-Drinfeld-Long bimodules: an H-bimodule and H-bicomodule M with
 *
 *   left_action    : H (x) M -> M        h (x) m  |-> h > m
 *   right_action   : M (x) H -> M        m (x) h  |-> m < h
 *   left_coaction  : M -> H (x) M        m |-> m[-1] (x) m[0]
 *   right_coaction : M -> M (x) H        m |-> m(0) (x) m(1)
 *
 * M is stored as a single tensor leg of size dim(M); a tensor product of
 * objects is again one leg, with basis names joined by "⊗".
 */

namespace ydl {

template <typename Scalar>
class YDLBimodule
{
    public:
        using Map = LinearMap<Scalar>;

        YDLBimodule(HopfAlgebra<Scalar> H, std::string name, std::vector<std::string> basis, Map left_action,
                    Map right_action, Map left_coaction, Map right_coaction)
            : H_(std::move(H)), name_(std::move(name)), basis_(std::move(basis)), left_action_(std::move(left_action)),
              right_action_(std::move(right_action)), left_coaction_(std::move(left_coaction)),
              right_coaction_(std::move(right_coaction))
        {
            const int n = H_.dim(), m = dim();
            if (m == 0)
                throw ShapeError(name_ + ": empty basis");
            fit(left_action_, "left action", {m}, {n, m});
            fit(right_action_, "right action", {m}, {m, n});
            fit(left_coaction_, "left coaction", {n, m}, {m});
            fit(right_coaction_, "right coaction", {m, n}, {m});
        }

        const HopfAlgebra<Scalar>& over() const { return H_; }
        const std::string& name() const { return name_; }
        int dim() const { return static_cast<int>(basis_.size()); }
        const std::vector<std::string>& basis() const { return basis_; }
        Labels labels() const { return {basis_}; }
        Map id() const { return Map::identity(dim()); }

        const Map& left_action() const { return left_action_; }
        const Map& right_action() const { return right_action_; }
        const Map& left_coaction() const { return left_coaction_; }
        const Map& right_coaction() const { return right_coaction_; }

    private:
        void fit(Map& f, const char* what, Legs out, Legs in) const
        {
            if (f.rows() != leg_product(out) || f.cols() != leg_product(in))
                throw ShapeError(name_ + ": " + what + " has shape " + std::to_string(f.rows()) + "x" +
                                 std::to_string(f.cols()) + ", expected " + legs_string(out) + "<-" +
                                 legs_string(in));
            f = f.reshaped(std::move(out), std::move(in));
        }

        HopfAlgebra<Scalar> H_;
        std::string name_;
        std::vector<std::string> basis_;
        Map left_action_, right_action_, left_coaction_, right_coaction_;
};

/// k |-> k1 S(k3) (x) k2
template <typename Scalar>
LinearMap<Scalar> adjoint_coaction(const HopfAlgebra<Scalar>& H)
{
    const int n = H.dim();
    const auto I = H.id();
    return compose(kronecker(H.mul(), I), tensor(I, H.antipode(), I), permute_legs<Scalar>({n, n, n}, {0, 2, 1}),
                   comul2(H));
}

/// l (x) h |-> S(h1) l h2
template <typename Scalar>
LinearMap<Scalar> right_adjoint_action(const HopfAlgebra<Scalar>& H)
{
    const int n = H.dim();
    const auto I = H.id();
    return compose(H.mul(), kronecker(H.mul(), I), tensor(H.antipode(), I, I),
                   permute_legs<Scalar>({n, n, n}, {1, 0, 2}), kronecker(I, H.comul()));
}

/// h (x) k |-> h1 k S(h2)
template <typename Scalar>
LinearMap<Scalar> left_adjoint_action(const HopfAlgebra<Scalar>& H)
{
    const int n = H.dim();
    const auto I = H.id();
    return compose(H.mul(), kronecker(H.mul(), I), tensor(I, I, H.antipode()),
                   permute_legs<Scalar>({n, n, n}, {0, 2, 1}), kronecker(H.comul(), I));
}

/// l |-> l2 (x) S(l1) l3
template <typename Scalar>
LinearMap<Scalar> right_coadjoint_coaction(const HopfAlgebra<Scalar>& H)
{
    const int n = H.dim();
    const auto I = H.id();
    return compose(kronecker(I, H.mul()), tensor(I, H.antipode(), I), permute_legs<Scalar>({n, n, n}, {1, 0, 2}),
                   comul2(H));
}

inline std::vector<std::string> tensor_names(const std::vector<std::string>& a, const std::vector<std::string>& b)
{
    std::vector<std::string> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b)
            out.push_back(x + "⊗" + y);
    return out;
}

/**
 * The four structures on H (x) H:
 *
 *   variant  h > k(x)l      k(x)l < h       rho_l(k(x)l)          rho_r(k(x)l)
 *   1        hk(x)l         k(x)S(h1)lh2    k1S(k3) (x) k2(x)l    k(x)l1 (x) l2
 *   2        h1kS(h2)(x)l   k(x)lh          k1 (x) k2(x)l         k(x)l2 (x) S(l1)l3
 *   3        hk(x)l         k(x)lh          k1S(k3) (x) k2(x)l    k(x)l2 (x) S(l1)l3
 *   4        h1kS(h2)(x)l   k(x)S(h1)lh2    k1 (x) k2(x)l         k(x)l1 (x) l2
 */
template <typename Scalar>
YDLBimodule<Scalar> example_module(const HopfAlgebra<Scalar>& H, int variant)
{
    if (variant < 1 || variant > 4)
        throw std::invalid_argument("example_module: variant must be 1..4, got " + std::to_string(variant));
    const auto I = H.id();
    const bool mult_left = variant == 1 || variant == 3;
    const bool mult_right = variant == 2 || variant == 3;
    auto left_action = mult_left ? kronecker(H.mul(), I) : kronecker(left_adjoint_action(H), I);
    auto left_coaction = mult_left ? kronecker(adjoint_coaction(H), I) : kronecker(H.comul(), I);
    auto right_action = mult_right ? kronecker(I, H.mul()) : kronecker(I, right_adjoint_action(H));
    auto right_coaction = mult_right ? kronecker(I, right_coadjoint_coaction(H)) : kronecker(I, H.comul());
    return YDLBimodule<Scalar>(H, "H" + std::to_string(variant) + "(" + H.name() + ")",
                               tensor_names(H.basis(), H.basis()), std::move(left_action),
                               std::move(right_action), std::move(left_coaction), std::move(right_coaction));
}

/// The ground field with actions through epsilon and coactions through the unit.
template <typename Scalar>
YDLBimodule<Scalar> trivial_module(const HopfAlgebra<Scalar>& H)
{
    return YDLBimodule<Scalar>(H, "k", {"1"}, H.counit(), H.counit(), H.unit(), H.unit());
}

/// Left-left Yetter-Drinfeld data extended by m < h = epsilon(h) m and m |-> m (x) 1.
template <typename Scalar>
YDLBimodule<Scalar> embed_llyd(const HopfAlgebra<Scalar>& H, std::string name, std::vector<std::string> basis,
                               const LinearMap<Scalar>& action, const LinearMap<Scalar>& coaction)
{
    const auto I = LinearMap<Scalar>::identity(static_cast<int>(basis.size()));
    return YDLBimodule<Scalar>(H, std::move(name), std::move(basis), action, kronecker(I, H.counit()), coaction,
                               kronecker(I, H.unit()));
}

/// Right-right Yetter-Drinfeld data extended by h > m = epsilon(h) m and m |-> 1 (x) m.
template <typename Scalar>
YDLBimodule<Scalar> embed_rryd(const HopfAlgebra<Scalar>& H, std::string name, std::vector<std::string> basis,
                               const LinearMap<Scalar>& action, const LinearMap<Scalar>& coaction)
{
    const auto I = LinearMap<Scalar>::identity(static_cast<int>(basis.size()));
    return YDLBimodule<Scalar>(H, std::move(name), std::move(basis), kronecker(H.counit(), I), action,
                               kronecker(H.unit(), I), coaction);
}

/// Module, comodule, bimodule, bicomodule and the four compatibility laws, each on every basis input.
template <typename Scalar>
std::vector<AxiomReport<Scalar>> check_ydl(const YDLBimodule<Scalar>& M)
{
    using Map = LinearMap<Scalar>;
    const auto& H = M.over();
    const int n = H.dim(), m = M.dim();
    const Map IH = H.id(), IM = M.id();
    const Map& la = M.left_action();
    const Map& ra = M.right_action();
    const Map& lc = M.left_coaction();
    const Map& rc = M.right_coaction();
    const Labels h = H.labels(), x = M.labels();
    std::vector<AxiomReport<Scalar>> out;

    auto left = compare("left module", compose(la, kronecker(H.mul(), IM)), compose(la, kronecker(IH, la)),
                        concat(H.labels(2), x), x);
    if (left.passed)
        left = compare("left module", compose(la, kronecker(H.unit(), IM)), IM, x, x);
    out.push_back(std::move(left));

    auto right = compare("right module", compose(ra, kronecker(ra, IH)), compose(ra, kronecker(IM, H.mul())),
                         concat(x, H.labels(2)), x);
    if (right.passed)
        right = compare("right module", compose(ra, kronecker(IM, H.unit())), IM, x, x);
    out.push_back(std::move(right));

    out.push_back(compare("bimodule", compose(ra, kronecker(la, IH)), compose(la, kronecker(IH, ra)),
                          concat(concat(h, x), h), x));

    auto lco = compare("left comodule", compose(kronecker(IH, lc), lc), compose(kronecker(H.comul(), IM), lc), x,
                       concat(H.labels(2), x));
    if (lco.passed)
        lco = compare("left comodule", compose(kronecker(H.counit(), IM), lc).reshaped({m}, {m}), IM, x, x);
    out.push_back(std::move(lco));

    auto rco = compare("right comodule", compose(kronecker(rc, IH), rc), compose(kronecker(IM, H.comul()), rc), x,
                       concat(x, H.labels(2)));
    if (rco.passed)
        rco = compare("right comodule", compose(kronecker(IM, H.counit()), rc).reshaped({m}, {m}), IM, x, x);
    out.push_back(std::move(rco));

    out.push_back(compare("bicomodule", compose(kronecker(lc, IH), rc), compose(kronecker(IH, rc), lc), x,
                          concat(concat(h, x), h)));

    // (h1 > m)[-1] h2 (x) (h1 > m)[0] = h1 m[-1] (x) h2 > m[0]
    const Map ll_lhs = compose(kronecker(H.mul(), IM), kronecker(IH, flip<Scalar>(m, n)), kronecker(lc, IH),
                               kronecker(la, IH), kronecker(IH, flip<Scalar>(n, m)), kronecker(H.comul(), IM));
    const Map ll_rhs = compose(kronecker(H.mul(), la), permute_legs<Scalar>({n, n, n, m}, {0, 2, 1, 3}),
                               kronecker(H.comul(), lc));
    out.push_back(compare("left-left Yetter-Drinfeld", ll_lhs, ll_rhs, concat(h, x), concat(h, x)));

    // (h > m)(0) (x) (h > m)(1) = h > m(0) (x) m(1)
    out.push_back(compare("left-right Long", compose(rc, la), compose(kronecker(la, IH), kronecker(IH, rc)),
                          concat(h, x), concat(x, h)));

    // (m < h2)(0) (x) h1 (m < h2)(1) = m(0) < h1 (x) m(1) h2
    const Map rr_lhs = compose(kronecker(IM, H.mul()), kronecker(IM, flip<Scalar>(n, n)), kronecker(rc, IH),
                               kronecker(ra, IH), permute_legs<Scalar>({m, n, n}, {0, 2, 1}), kronecker(IM, H.comul()));
    const Map rr_rhs = compose(kronecker(ra, H.mul()), permute_legs<Scalar>({m, n, n, n}, {0, 2, 1, 3}),
                               kronecker(rc, H.comul()));
    out.push_back(compare("right-right Yetter-Drinfeld", rr_lhs, rr_rhs, concat(x, h), concat(x, h)));

    // (m < h)[-1] (x) (m < h)[0] = m[-1] (x) m[0] < h
    out.push_back(compare("right-left Long", compose(lc, ra), compose(kronecker(IH, ra), kronecker(lc, IH)),
                          concat(x, h), concat(h, x)));
    return out;
}

template <typename Scalar>
void require_same_base(const YDLBimodule<Scalar>& M, const YDLBimodule<Scalar>& N)
{
    if (!same_structure(M.over(), N.over()))
        throw StructuralError("base-algebra mismatch: " + M.name() + " over " + M.over().name() + ", " + N.name() +
                              " over " + N.over().name());
}

/// Diagonal actions through Delta, codiagonal coactions through m.
template <typename Scalar>
YDLBimodule<Scalar> tensor_ydl(const YDLBimodule<Scalar>& M, const YDLBimodule<Scalar>& N)
{
    require_same_base(M, N);
    const auto& H = M.over();
    const int n = H.dim(), a = M.dim(), b = N.dim();
    const auto IH = H.id(), IM = M.id(), IN = N.id();
    auto la = compose(kronecker(M.left_action(), N.left_action()), permute_legs<Scalar>({n, n, a, b}, {0, 2, 1, 3}),
                      tensor(H.comul(), IM, IN));
    auto lc = compose(tensor(H.mul(), IM, IN), permute_legs<Scalar>({n, a, n, b}, {0, 2, 1, 3}),
                      kronecker(M.left_coaction(), N.left_coaction()));
    auto ra = compose(kronecker(M.right_action(), N.right_action()),
                      permute_legs<Scalar>({a, b, n, n}, {0, 2, 1, 3}), tensor(IM, IN, H.comul()));
    auto rc = compose(tensor(IM, IN, H.mul()), permute_legs<Scalar>({a, n, b, n}, {0, 2, 1, 3}),
                      kronecker(M.right_coaction(), N.right_coaction()));
    const int ab = a * b;
    return YDLBimodule<Scalar>(H, M.name() + "⊗" + N.name(), tensor_names(M.basis(), N.basis()),
                               la.reshaped({ab}, {n, ab}), ra.reshaped({ab}, {ab, n}), lc.reshaped({n, ab}, {ab}),
                               rc.reshaped({ab, n}, {ab}));
}

/// psi_{M,N}(m (x) n) = m[-1] > n(0) (x) m[0] < n(1), as a map M (x) N -> N (x) M.
template <typename Scalar>
LinearMap<Scalar> braiding(const YDLBimodule<Scalar>& M, const YDLBimodule<Scalar>& N)
{
    require_same_base(M, N);
    const int n = M.over().dim(), a = M.dim(), b = N.dim();
    return compose(kronecker(N.left_action(), M.right_action()), permute_legs<Scalar>({n, a, b, n}, {0, 2, 1, 3}),
                   kronecker(M.left_coaction(), N.right_coaction()))
        .reshaped({b, a}, {a, b});
}

/// psi^{-1}(n (x) m) = m[0] < S^{-1}(n(1)) (x) S^{-1}(m[-1]) > n(0), as a map N (x) M -> M (x) N.
template <typename Scalar>
LinearMap<Scalar> braiding_inverse(const YDLBimodule<Scalar>& M, const YDLBimodule<Scalar>& N)
{
    require_same_base(M, N);
    const auto& H = M.over();
    const int n = H.dim(), a = M.dim(), b = N.dim();
    const auto& Si = H.antipode_inverse();
    return compose(kronecker(M.right_action(), N.left_action()), tensor(M.id(), Si, Si, N.id()),
                   permute_legs<Scalar>({b, n, n, a}, {3, 1, 2, 0}),
                   kronecker(N.right_coaction(), M.left_coaction()))
        .reshaped({a, b}, {b, a});
}

/// f : M -> N is H-bilinear and H-bicolinear.
template <typename Scalar>
std::vector<AxiomReport<Scalar>> check_morphism(const LinearMap<Scalar>& f, const YDLBimodule<Scalar>& M,
                                                const YDLBimodule<Scalar>& N)
{
    require_same_base(M, N);
    if (f.rows() != N.dim() || f.cols() != M.dim())
        throw ShapeError("check_morphism: map " + f.shape() + " between objects of dimension " +
                         std::to_string(M.dim()) + " and " + std::to_string(N.dim()));
    const auto& H = M.over();
    const auto IH = H.id();
    const Labels h = H.labels();
    std::vector<AxiomReport<Scalar>> out;
    out.push_back(compare("left linear", compose(f, M.left_action()), compose(N.left_action(), kronecker(IH, f)),
                          concat(h, M.labels()), N.labels()));
    out.push_back(compare("right linear", compose(f, M.right_action()),
                          compose(N.right_action(), kronecker(f, IH)), concat(M.labels(), h), N.labels()));
    out.push_back(compare("left colinear", compose(N.left_coaction(), f),
                          compose(kronecker(IH, f), M.left_coaction()), M.labels(), concat(h, N.labels())));
    out.push_back(compare("right colinear", compose(N.right_coaction(), f),
                          compose(kronecker(f, IH), M.right_coaction()), M.labels(), concat(N.labels(), h)));
    return out;
}

/// psi_{M,N} is a morphism M (x) N -> N (x) M.
template <typename Scalar>
std::vector<AxiomReport<Scalar>> check_braiding_morphism(const YDLBimodule<Scalar>& M, const YDLBimodule<Scalar>& N)
{
    return check_morphism(braiding(M, N), tensor_ydl(M, N), tensor_ydl(N, M));
}

/**
 * psi_{M(x)N,P} = (psi_{M,P} (x) id_N)(id_M (x) psi_{N,P})
 * psi_{M,N(x)P} = (id_N (x) psi_{M,P})(psi_{M,N} (x) id_P)
 */
template <typename Scalar>
std::vector<AxiomReport<Scalar>> check_hexagon(const YDLBimodule<Scalar>& M, const YDLBimodule<Scalar>& N,
                                               const YDLBimodule<Scalar>& P)
{
    const auto IM = M.id(), IN = N.id(), IP = P.id();
    const Labels in = {M.basis(), N.basis(), P.basis()};
    std::vector<AxiomReport<Scalar>> out;
    out.push_back(compare("hexagon (M⊗N, P)", braiding(tensor_ydl(M, N), P),
                          compose(kronecker(braiding(M, P), IN), kronecker(IM, braiding(N, P))), in,
                          Labels{P.basis(), M.basis(), N.basis()}));
    out.push_back(compare("hexagon (M, N⊗P)", braiding(M, tensor_ydl(N, P)),
                          compose(kronecker(IN, braiding(M, P)), kronecker(braiding(M, N), IP)), in,
                          Labels{N.basis(), P.basis(), M.basis()}));
    return out;
}

template <typename Scalar>
bool same_structure(const YDLBimodule<Scalar>& M, const YDLBimodule<Scalar>& N)
{
    return M.dim() == N.dim() && same_structure(M.over(), N.over()) && M.left_action() == N.left_action() &&
           M.right_action() == N.right_action() && M.left_coaction() == N.left_coaction() &&
           M.right_coaction() == N.right_coaction();
}

}  // namespace ydl

#endif
