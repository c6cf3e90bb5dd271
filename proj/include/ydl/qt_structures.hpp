#ifndef YDL_QT_STRUCTURES_HPP
#define YDL_QT_STRUCTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "braiding_analysis.hpp"

namespace ydl {

/// R = sum R[i,j] e_i (x) e_j, stored row-major in H (x) H.
template <typename Scalar>
struct RMatrix
{
    Vector<Scalar> element;
    std::optional<Vector<Scalar>> inverse;
};

/// Multiplication of the algebra H (x) H.
template <typename Scalar>
LinearMap<Scalar> tensor_square_mul(const HopfAlgebra<Scalar>& H)
{
    const int n = H.dim();
    return compose(kronecker(H.mul(), H.mul()), permute_legs<Scalar>({n, n, n, n}, {0, 2, 1, 3}));
}

template <typename Scalar>
Vector<Scalar> r_element(const HopfAlgebra<Scalar>& H, const Matrix<Scalar>& coefficients)
{
    const int n = H.dim();
    if (coefficients.rows() != n || coefficients.cols() != n)
        throw ShapeError("R coefficients must be " + std::to_string(n) + "x" + std::to_string(n));
    Vector<Scalar> v(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            v(i * n + j) = coefficients(i, j);
    return v;
}

/// Inverse in H (x) H, through the left-multiplication operator of R.
template <typename Scalar>
Vector<Scalar> r_inverse(const HopfAlgebra<Scalar>& H, const Vector<Scalar>& R)
{
    const int n = H.dim();
    if (R.size() != n * n)
        throw ShapeError("R must have " + std::to_string(n * n) + " coefficients");
    const auto L = compose(tensor_square_mul(H), kronecker(LinearMap<Scalar>::element({n, n}, R),
                                                           LinearMap<Scalar>::identity(Legs{n, n})));
    const int r = rank(L);
    if (r < n * n)
        throw SingularError("R not invertible: left multiplication has rank " + std::to_string(r) + " of " +
                                std::to_string(n * n),
                            r, n * n);
    return invert(L).apply(kronecker(H.unit(), H.unit()).column(0));
}

template <typename Scalar>
RMatrix<Scalar> r_matrix(const HopfAlgebra<Scalar>& H, Vector<Scalar> R)
{
    auto inverse = r_inverse(H, R);
    return {std::move(R), std::move(inverse)};
}

/// R0 = (1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g) / 2 on kC2.
template <typename Scalar>
Vector<Scalar> c2_sign_r_matrix()
{
    const Scalar h = Scalar(1) / Scalar(2);
    Vector<Scalar> v(4);
    v << h, h, h, -h;
    return v;
}

/// (1 (x) 1 + 1 (x) b + a (x) 1 - a (x) b) / 2 on k(C2xC2); quasitriangular but not triangular.
template <typename Scalar>
Vector<Scalar> klein_r_matrix()
{
    const Scalar h = Scalar(1) / Scalar(2);
    Vector<Scalar> v = Vector<Scalar>::Zero(16);
    v(0 * 4 + 0) = v(0 * 4 + 2) = v(1 * 4 + 0) = h;
    v(1 * 4 + 2) = -h;
    return v;
}

/// R_alpha = R0 + alpha/2 (x (x) x - x (x) gx + gx (x) x + gx (x) gx) on Sweedler's algebra.
template <typename Scalar>
Vector<Scalar> sweedler_r_matrix(const Scalar& alpha)
{
    const Scalar h = Scalar(1) / Scalar(2), a = alpha / Scalar(2);
    Vector<Scalar> v = Vector<Scalar>::Zero(16);
    v(0) = v(1) = v(4) = h;
    v(5) = -h;
    v(2 * 4 + 2) = v(3 * 4 + 2) = v(3 * 4 + 3) = a;
    v(2 * 4 + 3) = -a;
    return v;
}

/// The quasitriangularity battery; throws SingularError when R is not invertible.
template <typename Scalar>
std::vector<AxiomReport<Scalar>> check_qt(const HopfAlgebra<Scalar>& H, const Vector<Scalar>& R)
{
    const int n = H.dim();
    r_inverse(H, R);
    using Map = LinearMap<Scalar>;
    const auto I = H.id();
    const Map r = Map::element({n, n}, R);
    const Map rr = kronecker(r, r);
    const auto mHH = tensor_square_mul(H);
    const Labels none;
    std::vector<AxiomReport<Scalar>> out;
    out.push_back(compare("(Δ⊗id)R = R¹⊗r¹⊗R²r²", compose(kronecker(H.comul(), I), r),
                          compose(tensor(I, I, H.mul()), permute_legs<Scalar>({n, n, n, n}, {0, 2, 1, 3}), rr), none,
                          H.labels(3)));
    out.push_back(compare("(id⊗Δ)R = R¹r¹⊗r²⊗R²", compose(kronecker(I, H.comul()), r),
                          compose(tensor(H.mul(), I, I), permute_legs<Scalar>({n, n, n, n}, {0, 2, 3, 1}), rr), none,
                          H.labels(3)));
    out.push_back(compare("Δᶜᵒᵖ(h)R = RΔ(h)", compose(mHH, kronecker(compose(flip<Scalar>(n, n), H.comul()), r)),
                          compose(mHH, kronecker(r, H.comul())), H.labels(), H.labels(2)));
    out.push_back(compare("ε(R¹)R² = 1", compose(kronecker(H.counit(), I), r), H.unit(), none, H.labels()));
    out.push_back(compare("R¹ε(R²) = 1", compose(kronecker(I, H.counit()), r), H.unit(), none, H.labels()));
    return out;
}

/// R^{-1} = R² (x) R¹.
template <typename Scalar>
AxiomReport<Scalar> is_triangular(const HopfAlgebra<Scalar>& H, const Vector<Scalar>& R)
{
    const int n = H.dim();
    const auto inv = r_inverse(H, R);
    return compare("triangularity", LinearMap<Scalar>::element({n, n}, inv),
                   LinearMap<Scalar>::element({n, n}, flip<Scalar>(n, n).apply(R)), Labels{}, H.labels(2));
}

/// A plain H-bimodule.
template <typename Scalar>
struct HopfBimodule
{
    std::string name;
    std::vector<std::string> basis;
    LinearMap<Scalar> left_action;
    LinearMap<Scalar> right_action;

    int dim() const { return static_cast<int>(basis.size()); }
};

template <typename Scalar>
HopfBimodule<Scalar> regular_bimodule(const HopfAlgebra<Scalar>& H)
{
    return {H.name(), H.basis(), H.mul(), H.mul()};
}

/// H (x) H with h > (k (x) l) = hk (x) l and (k (x) l) < h = k (x) lh.
template <typename Scalar>
HopfBimodule<Scalar> outer_bimodule(const HopfAlgebra<Scalar>& H)
{
    const auto I = H.id();
    return {"H⊗H", tensor_names(H.basis(), H.basis()), kronecker(H.mul(), I), kronecker(I, H.mul())};
}

template <typename Scalar>
std::vector<AxiomReport<Scalar>> check_bimodule(const HopfAlgebra<Scalar>& H, const HopfBimodule<Scalar>& B)
{
    const int n = H.dim(), m = B.dim();
    using Map = LinearMap<Scalar>;
    const Map l = B.left_action.reshaped({m}, {n, m}), r = B.right_action.reshaped({m}, {m, n});
    const auto I = H.id();
    const auto M = Map::identity(m);
    const Labels ml = {B.basis};
    std::vector<AxiomReport<Scalar>> out;
    auto left = compare("left module", compose(l, kronecker(H.mul(), M)), compose(l, kronecker(I, l)),
                        Labels{H.basis(), H.basis(), B.basis}, ml);
    if (left.passed)
        left = compare("left module", compose(l, kronecker(H.unit(), M)), M, ml, ml);
    out.push_back(std::move(left));
    auto right = compare("right module", compose(r, kronecker(M, H.mul())), compose(r, kronecker(r, I)),
                         Labels{B.basis, H.basis(), H.basis()}, ml);
    if (right.passed)
        right = compare("right module", compose(r, kronecker(M, H.unit())), M, ml, ml);
    out.push_back(std::move(right));
    out.push_back(compare("bimodule", compose(r, kronecker(l, I)), compose(l, kronecker(I, r)),
                          Labels{H.basis(), B.basis, H.basis()}, ml));
    return out;
}

/// Coactions m |-> R² (x) R¹ > m and m |-> m < R¹ (x) R² on a bimodule.  Throws AxiomError if B is not one.
template <typename Scalar>
YDLBimodule<Scalar> induce_ydl_from_r(const HopfAlgebra<Scalar>& H, const Vector<Scalar>& R,
                                      const HopfBimodule<Scalar>& B)
{
    for (const auto& rep : check_bimodule(H, B))
        if (!rep.passed)
            throw AxiomError(rep.axiom, describe(rep));
    const int n = H.dim(), m = B.dim();
    if (R.size() != n * n)
        throw ShapeError("R must have " + std::to_string(n * n) + " coefficients");
    using Map = LinearMap<Scalar>;
    const Map r = Map::element({n, n}, R);
    const auto I = H.id();
    const auto M = Map::identity(m);
    const Map l = B.left_action.reshaped({m}, {n, m}), ra = B.right_action.reshaped({m}, {m, n});
    const auto left = compose(kronecker(I, l), permute_legs<Scalar>({n, n, m}, {1, 0, 2}), kronecker(r, M));
    const auto right = compose(kronecker(ra, I), kronecker(M, r));
    return YDLBimodule<Scalar>(H, B.name + "[R]", B.basis, l, ra, left, right);
}

template <typename Scalar>
YDLBimodule<Scalar> induce_hh_from_r(const HopfAlgebra<Scalar>& H, const Vector<Scalar>& R)
{
    return induce_ydl_from_r(H, R, outer_bimodule(H));
}

/// Symmetry of the braiding between two bimodules carrying the coactions induced by R.
template <typename Scalar>
SymmetryVerdict<Scalar> induced_r_symmetry(const HopfAlgebra<Scalar>& H, const Vector<Scalar>& R,
                                           const HopfBimodule<Scalar>& A, const HopfBimodule<Scalar>& B)
{
    return is_symmetric_pair(induce_ydl_from_r(H, R, A), induce_ydl_from_r(H, R, B));
}

/// An R read off a symmetric braiding, with the checks run on it.
template <typename Scalar>
struct RExtraction
{
    RMatrix<Scalar> r;
    std::vector<AxiomReport<Scalar>> qt;
    AxiomReport<Scalar> triangular;

    bool passed() const { return all_passed(qt) && triangular.passed; }
};

namespace detail {

template <typename Scalar>
void require_symmetric(const YDLBimodule<Scalar>& M, const YDLBimodule<Scalar>& N)
{
    const auto v = is_symmetric_pair(M, N);
    if (!v.symmetric)
        throw SymmetryError("not triangularizable: psi^2 != id at " + v.witness->input + ": " + v.witness->lhs_text +
                            " != " + v.witness->rhs_text);
}

template <typename Scalar>
RExtraction<Scalar> finish_extraction(const HopfAlgebra<Scalar>& H, const Vector<Scalar>& R)
{
    RExtraction<Scalar> out;
    out.r.element = R;
    out.qt = check_qt(H, R);
    out.r.inverse = r_inverse(H, R);
    out.triangular = is_triangular(H, R);
    return out;
}

}  // namespace detail

/**
 * Reads R off H (x) H with actions m (x) id, id (x) m and coactions
 * rho1 (x) id, id (x) rho2 whose braiding is a symmetry.  Every
 * intermediate identity of the reconstruction is checked and a failure
 * throws ConsistencyError naming it.
 */
template <typename Scalar>
RExtraction<Scalar> extract_r(const YDLBimodule<Scalar>& M)
{
    using Map = LinearMap<Scalar>;
    const auto& H = M.over();
    const int n = H.dim();
    const auto I = H.id();
    const auto II = Map::identity(Legs{n, n});
    if (M.dim() != n * n)
        throw StructuralError("extract_r: object has dimension " + std::to_string(M.dim()) + ", expected " +
                              std::to_string(n * n));
    const auto& e = H.counit();
    const auto& u = H.unit();
    const auto rho1 = compose(tensor(I, I, e), M.left_coaction().reshaped({n, n, n}, {n, n}), kronecker(I, u));
    const auto rho2 = compose(tensor(e, I, I), M.right_coaction().reshaped({n, n, n}, {n, n}), kronecker(u, I));
    if (!(M.left_action() == kronecker(H.mul(), I)))
        throw StructuralError("extract_r: left action is not m ⊗ id");
    if (!(M.right_action() == kronecker(I, H.mul())))
        throw StructuralError("extract_r: right action is not id ⊗ m");
    if (!(M.left_coaction() == kronecker(rho1, I)))
        throw StructuralError("extract_r: left coaction is not of the form ρ₁ ⊗ id");
    if (!(M.right_coaction() == kronecker(I, rho2)))
        throw StructuralError("extract_r: right coaction is not of the form id ⊗ ρ₂");
    detail::require_symmetric(M, M);

    const auto xy = compose(rho1, u);
    const auto st = compose(rho2, u);
    const auto Si = H.antipode_inverse();
    const auto tau = flip<Scalar>(n, n);
    const Labels none, hh = H.labels(2);
    detail::require_equal("xᵢ⊗yᵢ = yᵢ⊗S⁻¹(xᵢ)", xy, compose(kronecker(I, Si), tau, xy), none, hh);
    detail::require_equal("sᵢ⊗tᵢ = S⁻¹(tᵢ)⊗sᵢ", st, compose(kronecker(Si, I), tau, st), none, hh);
    detail::require_equal("xᵢ⊗S(yᵢ) = yᵢ⊗xᵢ", compose(kronecker(I, H.antipode()), xy), compose(tau, xy), none, hh);
    detail::require_equal("yᵢ⊗xᵢ = sᵢ⊗tᵢ", compose(tau, xy), st, none, hh);
    detail::require_equal("ρˡ(k⊗l) = xᵢ⊗yᵢk⊗l", M.left_coaction(), compose(tensor(I, H.mul(), I), kronecker(xy, II)),
                          hh, H.labels(3));
    detail::require_equal("ρʳ(k⊗l) = k⊗lsᵢ⊗tᵢ", M.right_coaction(),
                          compose(tensor(I, H.mul(), I), kronecker(II, st)), hh, H.labels(3));

    auto out = detail::finish_extraction(H, compose(tau, xy).as_vector());
    detail::require_equal("R⁻¹ = xᵢ⊗yᵢ = tᵢ⊗sᵢ", Map::element({n, n}, *out.r.inverse), xy, none, hh);
    return out;
}

/// Reads R = τ(ρ(1)) off a left-left Yetter-Drinfeld structure (H, m, ρ) whose braiding is a symmetry.
template <typename Scalar>
RExtraction<Scalar> extract_r_from_yd(const HopfAlgebra<Scalar>& H, const LinearMap<Scalar>& coaction)
{
    const int n = H.dim();
    const auto I = H.id();
    const auto E = embed_llyd(H, H.name(), H.basis(), H.mul(), coaction);
    for (const auto& rep : check_ydl(E))
        if (!rep.passed)
            throw AxiomError(rep.axiom, describe(rep));
    detail::require_symmetric(E, E);
    const auto rho1 = compose(coaction.reshaped({n, n}, {n}), H.unit());
    const auto tau = flip<Scalar>(n, n);
    detail::require_equal("ρ(k) = R²⊗R¹k", coaction.reshaped({n, n}, {n}),
                          compose(kronecker(I, H.mul()), kronecker(rho1, I)), H.labels(), H.labels(2));
    return detail::finish_extraction(H, compose(tau, rho1).as_vector());
}

template <typename Scalar>
struct H3SymmetryVerdict
{
    bool cocommutative = false;
    SymmetryVerdict<Scalar> symmetry;
    bool holds = false;
};

/// psi_{H3,H3} is a symmetry exactly when H is cocommutative.
template <typename Scalar>
H3SymmetryVerdict<Scalar> h3_symmetry_verdict(const HopfAlgebra<Scalar>& H)
{
    H3SymmetryVerdict<Scalar> out;
    out.cocommutative = is_cocommutative(H).passed;
    const auto H3 = example_module(H, 3);
    out.symmetry = is_symmetric_pair(H3, H3);
    out.holds = out.symmetry.symmetric == out.cocommutative;
    return out;
}

}  // namespace ydl

#endif
