#ifndef YDL_CQT_STRUCTURES_HPP
#define YDL_CQT_STRUCTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "braiding_analysis.hpp"

namespace ydl {

/// Z(i,j) = zeta(e_i, e_j).
template <typename Scalar>
struct BilinearForm
{
    Matrix<Scalar> Z;
    std::optional<Matrix<Scalar>> inverse;
};

template <typename Scalar>
LinearMap<Scalar> form_functional(const Matrix<Scalar>& Z)
{
    const int n = static_cast<int>(Z.rows());
    if (Z.cols() != n)
        throw ShapeError("bilinear form must be square");
    Vector<Scalar> v(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            v(i * n + j) = Z(i, j);
    return LinearMap<Scalar>::functional({n, n}, v);
}

template <typename Scalar>
Matrix<Scalar> form_matrix(const LinearMap<Scalar>& f, int n)
{
    const Vector<Scalar> v = f.as_vector();
    Matrix<Scalar> Z(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            Z(i, j) = v(i * n + j);
    return Z;
}

/// Comultiplication of the coalgebra H (x) H.
template <typename Scalar>
LinearMap<Scalar> tensor_square_comul(const HopfAlgebra<Scalar>& H)
{
    const int n = H.dim();
    return compose(permute_legs<Scalar>({n, n, n, n}, {0, 2, 1, 3}), kronecker(H.comul(), H.comul()));
}

namespace detail {

template <typename Scalar>
void require_form_shape(const HopfAlgebra<Scalar>& H, const Matrix<Scalar>& Z)
{
    if (Z.rows() != H.dim() || Z.cols() != H.dim())
        throw ShapeError("bilinear form must be " + std::to_string(H.dim()) + "x" + std::to_string(H.dim()));
}

}  // namespace detail

/// Convolution inverse, through the left-convolution operator of zeta on functionals of H (x) H.
template <typename Scalar>
Matrix<Scalar> convolution_inverse(const HopfAlgebra<Scalar>& H, const Matrix<Scalar>& Z)
{
    detail::require_form_shape(H, Z);
    const int n = H.dim();
    using Map = LinearMap<Scalar>;
    // xi |-> (zeta (x) xi) o Delta
    const Map L = compose(kronecker(form_functional(Z), Map::identity(Legs{n, n})), tensor_square_comul(H))
                      .transpose()
                      .reshaped({n, n}, {n, n});
    const int r = rank(L);
    if (r < n * n)
        throw SingularError("zeta not convolution invertible: left convolution has rank " + std::to_string(r) +
                                " of " + std::to_string(n * n),
                            r, n * n);
    const Vector<Scalar> ee = kronecker(H.counit(), H.counit()).transpose().column(0);
    return form_matrix(Map::functional({n, n}, invert(L).apply(ee)), n);
}

template <typename Scalar>
BilinearForm<Scalar> bilinear_form(const HopfAlgebra<Scalar>& H, Matrix<Scalar> Z)
{
    auto inverse = convolution_inverse(H, Z);
    return {std::move(Z), std::move(inverse)};
}

/// zeta(h, g) = epsilon(h) epsilon(g).
template <typename Scalar>
Matrix<Scalar> counit_form(const HopfAlgebra<Scalar>& H)
{
    const Vector<Scalar> e = H.counit().transpose().column(0);
    return e * e.transpose();
}

/// zeta(g^a, g^b) = (-1)^{ab} on kC2.
template <typename Scalar>
Matrix<Scalar> c2_sign_form()
{
    Matrix<Scalar> Z(2, 2);
    Z << Scalar(1), Scalar(1), Scalar(1), Scalar(-1);
    return Z;
}

/// The sign form on the grouplikes of Sweedler's algebra, zero whenever x appears.
template <typename Scalar>
Matrix<Scalar> sweedler_sign_form()
{
    Matrix<Scalar> Z = Matrix<Scalar>::Zero(4, 4);
    Z.topLeftCorner(2, 2) = c2_sign_form<Scalar>();
    return Z;
}

/// The coquasitriangularity battery; throws SingularError when zeta is not convolution invertible.
template <typename Scalar>
std::vector<AxiomReport<Scalar>> check_cqt(const HopfAlgebra<Scalar>& H, const Matrix<Scalar>& Z)
{
    convolution_inverse(H, Z);
    const int n = H.dim();
    const auto I = H.id();
    const auto F = form_functional(Z);
    const auto FF = kronecker(F, F);
    const auto& D = H.comul();
    const Labels one;
    std::vector<AxiomReport<Scalar>> out;
    out.push_back(compare("ζ(h,gl) = ζ(h₁,g)ζ(h₂,l)", compose(F, kronecker(I, H.mul())),
                          compose(FF, permute_legs<Scalar>({n, n, n, n}, {0, 2, 1, 3}), tensor(D, I, I)),
                          H.labels(3), one));
    out.push_back(compare("ζ(hg,l) = ζ(h,l₂)ζ(g,l₁)", compose(F, kronecker(H.mul(), I)),
                          compose(FF, permute_legs<Scalar>({n, n, n, n}, {0, 3, 1, 2}), tensor(I, I, D)),
                          H.labels(3), one));
    out.push_back(compare("ζ(h₁,g₁)g₂h₂ = h₁g₁ζ(h₂,g₂)",
                          compose(kronecker(F, H.mul()), permute_legs<Scalar>({n, n, n, n}, {0, 2, 3, 1}),
                                  kronecker(D, D)),
                          compose(kronecker(H.mul(), F), permute_legs<Scalar>({n, n, n, n}, {0, 2, 1, 3}),
                                  kronecker(D, D)),
                          H.labels(2), H.labels()));
    out.push_back(compare("ζ(h,1) = ε(h)", compose(F, kronecker(I, H.unit())), H.counit(), H.labels(), one));
    out.push_back(compare("ζ(1,h) = ε(h)", compose(F, kronecker(H.unit(), I)), H.counit(), H.labels(), one));
    return out;
}

/// zeta(h1, g1) zeta(g2, h2) = epsilon(g) epsilon(h).
template <typename Scalar>
AxiomReport<Scalar> is_cotriangular(const HopfAlgebra<Scalar>& H, const Matrix<Scalar>& Z)
{
    detail::require_form_shape(H, Z);
    const int n = H.dim();
    const auto F = form_functional(Z);
    return compare("cotriangularity",
                   compose(kronecker(F, F), permute_legs<Scalar>({n, n, n, n}, {0, 2, 3, 1}),
                           kronecker(H.comul(), H.comul())),
                   kronecker(H.counit(), H.counit()), H.labels(2), Labels{});
}

/// A plain H-bicomodule.
template <typename Scalar>
struct HopfBicomodule
{
    std::string name;
    std::vector<std::string> basis;
    LinearMap<Scalar> left_coaction;
    LinearMap<Scalar> right_coaction;

    int dim() const { return static_cast<int>(basis.size()); }
};

template <typename Scalar>
HopfBicomodule<Scalar> regular_bicomodule(const HopfAlgebra<Scalar>& H)
{
    return {H.name(), H.basis(), H.comul(), H.comul()};
}

/// H (x) H with coactions Delta (x) id and id (x) Delta.
template <typename Scalar>
HopfBicomodule<Scalar> outer_bicomodule(const HopfAlgebra<Scalar>& H)
{
    const auto I = H.id();
    return {"H⊗H", tensor_names(H.basis(), H.basis()), kronecker(H.comul(), I), kronecker(I, H.comul())};
}

template <typename Scalar>
std::vector<AxiomReport<Scalar>> check_bicomodule(const HopfAlgebra<Scalar>& H, const HopfBicomodule<Scalar>& C)
{
    const int n = H.dim(), m = C.dim();
    using Map = LinearMap<Scalar>;
    const Map l = C.left_coaction.reshaped({n, m}, {m}), r = C.right_coaction.reshaped({m, n}, {m});
    const auto I = H.id();
    const auto M = Map::identity(m);
    const Labels ml = {C.basis};
    std::vector<AxiomReport<Scalar>> out;
    auto left = compare("left comodule", compose(kronecker(H.comul(), M), l), compose(kronecker(I, l), l), ml,
                        Labels{H.basis(), H.basis(), C.basis});
    if (left.passed)
        left = compare("left comodule", compose(kronecker(H.counit(), M), l), M, ml, ml);
    out.push_back(std::move(left));
    auto right = compare("right comodule", compose(kronecker(M, H.comul()), r), compose(kronecker(r, I), r), ml,
                         Labels{C.basis, H.basis(), H.basis()});
    if (right.passed)
        right = compare("right comodule", compose(kronecker(M, H.counit()), r), M, ml, ml);
    out.push_back(std::move(right));
    out.push_back(compare("bicomodule", compose(kronecker(I, r), l), compose(kronecker(l, I), r), ml,
                          Labels{H.basis(), C.basis, H.basis()}));
    return out;
}

/// Actions h > m = zeta(h, m[-1]) m[0] and m < h = m(0) zeta(h, m(1)).  Throws AxiomError if C is not a bicomodule.
template <typename Scalar>
YDLBimodule<Scalar> induce_ydl_from_zeta(const HopfAlgebra<Scalar>& H, const Matrix<Scalar>& Z,
                                         const HopfBicomodule<Scalar>& C)
{
    for (const auto& rep : check_bicomodule(H, C))
        if (!rep.passed)
            throw AxiomError(rep.axiom, describe(rep));
    detail::require_form_shape(H, Z);
    const int n = H.dim(), m = C.dim();
    using Map = LinearMap<Scalar>;
    const auto F = form_functional(Z);
    const auto I = H.id();
    const auto M = Map::identity(m);
    const Map l = C.left_coaction.reshaped({n, m}, {m}), r = C.right_coaction.reshaped({m, n}, {m});
    const auto left = compose(kronecker(F, M), kronecker(I, l));
    const auto right = compose(kronecker(M, F), permute_legs<Scalar>({m, n, n}, {0, 2, 1}), kronecker(r, I));
    return YDLBimodule<Scalar>(H, C.name + "[ζ]", C.basis, left, right, l, r);
}

template <typename Scalar>
YDLBimodule<Scalar> induce_hh_from_zeta(const HopfAlgebra<Scalar>& H, const Matrix<Scalar>& Z)
{
    return induce_ydl_from_zeta(H, Z, outer_bicomodule(H));
}

template <typename Scalar>
SymmetryVerdict<Scalar> induced_zeta_symmetry(const HopfAlgebra<Scalar>& H, const Matrix<Scalar>& Z,
                                              const HopfBicomodule<Scalar>& A, const HopfBicomodule<Scalar>& B)
{
    return is_symmetric_pair(induce_ydl_from_zeta(H, Z, A), induce_ydl_from_zeta(H, Z, B));
}

/// A form read off a symmetric braiding, with the checks run on it.
template <typename Scalar>
struct ZetaExtraction
{
    BilinearForm<Scalar> zeta;
    std::vector<AxiomReport<Scalar>> cqt;
    AxiomReport<Scalar> cotriangular;

    bool passed() const { return all_passed(cqt) && cotriangular.passed; }
};

namespace detail {

template <typename Scalar>
void require_cosymmetric(const YDLBimodule<Scalar>& M, const YDLBimodule<Scalar>& N)
{
    const auto v = is_symmetric_pair(M, N);
    if (!v.symmetric)
        throw SymmetryError("not cotriangularizable: psi^2 != id at " + v.witness->input + ": " +
                            v.witness->lhs_text + " != " + v.witness->rhs_text);
}

template <typename Scalar>
ZetaExtraction<Scalar> finish_zeta(const HopfAlgebra<Scalar>& H, const Matrix<Scalar>& Z)
{
    ZetaExtraction<Scalar> out;
    out.zeta.Z = Z;
    out.cqt = check_cqt(H, Z);
    out.zeta.inverse = convolution_inverse(H, Z);
    out.cotriangular = is_cotriangular(H, Z);
    return out;
}

}  // namespace detail

/**
 * Reads zeta(k, g) = epsilon(k -> g) off H (x) H with coactions Delta (x) id,
 * id (x) Delta and actions -> (x) id, id (x) <- whose braiding is a symmetry.
 * The remaining identities of the reconstruction are checked and a failure
 * throws ConsistencyError naming it.
 */
template <typename Scalar>
ZetaExtraction<Scalar> extract_zeta(const YDLBimodule<Scalar>& M)
{
    const auto& H = M.over();
    const int n = H.dim();
    const auto I = H.id();
    if (M.dim() != n * n)
        throw StructuralError("extract_zeta: object has dimension " + std::to_string(M.dim()) + ", expected " +
                              std::to_string(n * n));
    const auto& e = H.counit();
    const auto& u = H.unit();
    const auto& D = H.comul();
    const auto la = compose(kronecker(I, e), M.left_action().reshaped({n, n}, {n, n, n}), kronecker(kronecker(I, I), u));
    const auto ra = compose(kronecker(e, I), M.right_action().reshaped({n, n}, {n, n, n}), kronecker(u, kronecker(I, I)));
    if (!(M.left_coaction() == kronecker(D, I)))
        throw StructuralError("extract_zeta: left coaction is not Δ ⊗ id");
    if (!(M.right_coaction() == kronecker(I, D)))
        throw StructuralError("extract_zeta: right coaction is not id ⊗ Δ");
    if (!(M.left_action() == kronecker(la, I)))
        throw StructuralError("extract_zeta: left action is not of the form ⇀ ⊗ id");
    if (!(M.right_action() == kronecker(I, ra)))
        throw StructuralError("extract_zeta: right action is not of the form id ⊗ ↼");
    detail::require_cosymmetric(M, M);

    const auto F = compose(e, la);
    const auto Si = H.antipode_inverse();
    const auto& S = H.antipode();
    const auto tau = flip<Scalar>(n, n);
    const Labels one, hh = H.labels(2);
    detail::require_equal("ε(k⇀g) = ε(S⁻¹(g)⇀k)", F, compose(F, kronecker(Si, I), tau), hh, one);
    detail::require_equal("ζ(k,g) = ζ(g,S(k))", F, compose(F, kronecker(I, S), tau), hh, one);
    detail::require_equal("ζ(h,l) = ε(l↼h)", F, compose(e, ra, tau), hh, one);
    detail::require_equal("ε(l↼h) = ε(h↼S⁻¹(l))", compose(e, ra), compose(e, ra, kronecker(I, Si), tau), hh, one);
    detail::require_equal("k⇀g = ζ(k,g₁)g₂", la, compose(kronecker(F, I), kronecker(I, D)), hh, H.labels());
    detail::require_equal("l↼h = ζ(h,l₂)l₁", ra,
                          compose(kronecker(I, F), permute_legs<Scalar>({n, n, n}, {0, 2, 1}), kronecker(D, I)), hh,
                          H.labels());
    // zeta(k,g) zeta(h,l) = (e (x) e (x) e (x) e) psi(k (x) l (x) g (x) h)
    detail::require_equal("ζ(k,g)ζ(h,l) = ε⁴ψ(k⊗l⊗g⊗h)",
                          compose(kronecker(F, F), permute_legs<Scalar>({n, n, n, n}, {0, 2, 3, 1})),
                          compose(tensor(e, e, e, e), braiding(M, M)).reshaped({}, {n, n, n, n}), H.labels(4), one);
    return detail::finish_zeta(H, form_matrix(F, n));
}

/// Reads zeta(k, g) = (epsilon (x) epsilon) psi(k (x) g) off a left-left Yetter-Drinfeld structure (H, ->, Delta).
template <typename Scalar>
ZetaExtraction<Scalar> extract_zeta_from_yd(const HopfAlgebra<Scalar>& H, const LinearMap<Scalar>& action)
{
    const int n = H.dim();
    const auto I = H.id();
    const auto E = embed_llyd(H, H.name(), H.basis(), action, H.comul());
    for (const auto& rep : check_ydl(E))
        if (!rep.passed)
            throw AxiomError(rep.axiom, describe(rep));
    detail::require_cosymmetric(E, E);
    const auto F = compose(kronecker(H.counit(), H.counit()), braiding(E, E)).reshaped({}, {n, n});
    detail::require_equal("k⇀g = ζ(k,g₁)g₂", action.reshaped({n}, {n, n}),
                          compose(kronecker(F, I), kronecker(I, H.comul())), H.labels(2), H.labels());
    return detail::finish_zeta(H, form_matrix(F, n));
}

template <typename Scalar>
struct H4SymmetryVerdict
{
    bool commutative = false;
    SymmetryVerdict<Scalar> symmetry;
    bool holds = false;
};

/// psi_{H4,H4} is a symmetry exactly when H is commutative.
template <typename Scalar>
H4SymmetryVerdict<Scalar> h4_symmetry_verdict(const HopfAlgebra<Scalar>& H)
{
    H4SymmetryVerdict<Scalar> out;
    out.commutative = is_commutative(H).passed;
    const auto H4 = example_module(H, 4);
    out.symmetry = is_symmetric_pair(H4, H4);
    out.holds = out.symmetry.symmetric == out.commutative;
    return out;
}

/// zeta(f, phi) = (phi (x) f)(R) on the dual, the form that corresponds to R under duality.
template <typename Scalar>
Matrix<Scalar> dual_form(const HopfAlgebra<Scalar>& H, const Vector<Scalar>& R)
{
    const int n = H.dim();
    if (R.size() != n * n)
        throw ShapeError("R must have " + std::to_string(n * n) + " coefficients");
    Matrix<Scalar> Z(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            Z(i, j) = R(j * n + i);
    return Z;
}

}  // namespace ydl

#endif
