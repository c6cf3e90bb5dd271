#include <catch2/catch_amalgamated.hpp>

#include "ydl/builders.hpp"
#include "ydl/qt_structures.hpp"

using namespace ydl;
using Q = Rational;
using Map = LinearMap<Q>;
using Vec = Vector<Q>;

namespace {

Vec one_one(const HopfAlgebra<Q>& H)
{
    return kronecker(H.unit(), H.unit()).column(0);
}

// (1 (x) 1 + 1 (x) b + a (x) 1 - a (x) b) / 2 on k(C2xC2): quasitriangular, not triangular
Vec klein_r()
{
    const auto H = klein_group_algebra<Q>();
    Matrix<Q> c = Matrix<Q>::Zero(4, 4);
    c(0, 0) = c(0, 2) = c(1, 0) = Q(1, 2);
    c(1, 2) = Q(-1, 2);
    return r_element(H, c);
}

// e.g. Sweedler R_1 = R0 + (x (x) x - x (x) gx + gx (x) x + gx (x) gx) / 2
Vec sweedler_r()
{
    const auto H = sweedler_algebra<Q>();
    Matrix<Q> c = Matrix<Q>::Zero(4, 4);
    const Q h(1, 2);
    c(0, 0) = c(0, 1) = c(1, 0) = h;
    c(1, 1) = -h;
    c(2, 2) = c(3, 2) = c(3, 3) = h;
    c(2, 3) = -h;
    return r_element(H, c);
}

const AxiomReport<Q>& find(const std::vector<AxiomReport<Q>>& reports, const std::string& prefix)
{
    for (const auto& r : reports)
        if (r.axiom.rfind(prefix, 0) == 0)
            return r;
    throw std::runtime_error("no report " + prefix);
}

}  // namespace

TEST_CASE("trivial R on kC2 is quasitriangular and triangular")
{
    const auto H = cyclic_group_algebra<Q>(2);
    const Vec R = one_one(H);
    const auto reports = check_qt(H, R);
    CHECK(reports.size() == 5);
    CHECK(all_passed(reports));
    CHECK(is_triangular(H, R).passed);
}

TEST_CASE("sign R-matrix on kC2")
{
    const auto H = cyclic_group_algebra<Q>(2);
    const Vec R = c2_sign_r_matrix<Q>();
    CHECK(format_vector(R, H.labels(2)) == "1/2·1⊗1 + 1/2·1⊗g + 1/2·g⊗1 - 1/2·g⊗g");
    CHECK(all_passed(check_qt(H, R)));
    CHECK(is_triangular(H, R).passed);
    // R0 is its own inverse
    CHECK(r_inverse(H, R) == R);
    // oracle: R0 = sum over a, b of (-1)^{ab} e_a (x) e_b with e_0 = (1 + g)/2, e_1 = (1 - g)/2
    Vec e0(2), e1(2);
    e0 << Q(1, 2), Q(1, 2);
    e1 << Q(1, 2), Q(-1, 2);
    const Vec oracle = kronecker(e0, e0) + kronecker(e0, e1) + kronecker(e1, e0) - kronecker(e1, e1);
    CHECK(oracle == R);
}

TEST_CASE("R = 1 (x) g fails the first coproduct law")
{
    const auto H = cyclic_group_algebra<Q>(2);
    Vec R = Vec::Zero(4);
    R(1) = 1;
    const auto reports = check_qt(H, R);
    const auto& qt1 = find(reports, "(Δ⊗id)R");
    REQUIRE_FALSE(qt1.passed);
    CHECK(qt1.witness->lhs_text == "1⊗1⊗g");
    CHECK(qt1.witness->rhs_text == "1⊗1⊗1");
}

TEST_CASE("non-invertible R is rejected with the rank")
{
    const auto H = cyclic_group_algebra<Q>(2);
    // (1 + g) (x) (1 + g) / 4 is an idempotent, rank 1
    Vec R(4);
    R << Q(1, 4), Q(1, 4), Q(1, 4), Q(1, 4);
    try
    {
        check_qt(H, R);
        FAIL("expected SingularError");
    }
    catch (const SingularError& e)
    {
        CHECK(e.rank() == 1);
        CHECK(e.size() == 4);
    }
}

TEST_CASE("a quasitriangular but not triangular R on k(C2xC2)")
{
    const auto H = klein_group_algebra<Q>();
    const Vec R = klein_r();
    CHECK(all_passed(check_qt(H, R)));
    const auto tri = is_triangular(H, R);
    REQUIRE_FALSE(tri.passed);
    CHECK(tri.witness->lhs_text == "1/2·1⊗1 + 1/2·1⊗b + 1/2·a⊗1 - 1/2·a⊗b");
}

TEST_CASE("Sweedler carries triangular R-matrices")
{
    const auto H = sweedler_algebra<Q>();
    const Vec R = sweedler_r();
    CHECK(all_passed(check_qt(H, R)));
    CHECK(is_triangular(H, R).passed);
}

TEST_CASE("induced structures are Yetter-Drinfeld-Long bimodules")
{
    struct Case
    {
        HopfAlgebra<Q> H;
        Vec R;
    };
    const auto C2 = cyclic_group_algebra<Q>(2);
    const auto K = klein_group_algebra<Q>();
    const auto Sw = sweedler_algebra<Q>();
    for (const auto& c : {Case{C2, one_one(C2)}, Case{C2, c2_sign_r_matrix<Q>()}, Case{K, klein_r()},
                          Case{Sw, sweedler_r()}})
    {
        INFO(c.H.name() << " " << format_vector(c.R, c.H.labels(2)));
        for (const auto& B : {regular_bimodule(c.H), outer_bimodule(c.H)})
        {
            CHECK(all_passed(check_bimodule(c.H, B)));
            for (const auto& r : check_ydl(induce_ydl_from_r(c.H, c.R, B)))
                CHECK(describe(r) == r.axiom + ": pass");
        }
    }
}

TEST_CASE("trivial R induces trivial coactions")
{
    const auto H = sweedler_algebra<Q>();
    const auto M = induce_ydl_from_r(H, one_one(H), regular_bimodule(H));
    CHECK(M.left_coaction() == kronecker(H.unit(), H.id()));
    CHECK(M.right_coaction() == kronecker(H.id(), H.unit()));
}

TEST_CASE("bimodule maps between induced objects are bicolinear")
{
    const auto H = cyclic_group_algebra<Q>(2);
    const auto M = induce_ydl_from_r(H, c2_sign_r_matrix<Q>(), regular_bimodule(H));
    // k |-> gk
    const Map g = compose(H.mul(), kronecker(Map::element({2}, basis_vector<Q>(2, 1)), H.id()));
    for (const auto& r : check_morphism(g, M, M))
        CHECK(describe(r) == r.axiom + ": pass");
}

TEST_CASE("bimodule validation")
{
    const auto H = cyclic_group_algebra<Q>(2);
    HopfBimodule<Q> bad = regular_bimodule(H);
    bad.right_action = kronecker(H.id(), H.unit().transpose());
    CHECK_FALSE(all_passed(check_bimodule(H, bad)));
    CHECK_THROWS_AS(induce_ydl_from_r(H, one_one(H), bad), AxiomError);
}

TEST_CASE("triangular R gives symmetric induced braidings")
{
    const auto C2 = cyclic_group_algebra<Q>(2);
    for (const Vec& R : {one_one(C2), c2_sign_r_matrix<Q>()})
    {
        const auto A = regular_bimodule(C2), B = outer_bimodule(C2);
        CHECK(induced_r_symmetry(C2, R, A, A).symmetric);
        CHECK(induced_r_symmetry(C2, R, A, B).symmetric);
        CHECK(induced_r_symmetry(C2, R, B, B).symmetric);
    }
    const auto Sw = sweedler_algebra<Q>();
    CHECK(induced_r_symmetry(Sw, sweedler_r(), regular_bimodule(Sw), regular_bimodule(Sw)).symmetric);

    const auto K = klein_group_algebra<Q>();
    const auto v = induced_r_symmetry(K, klein_r(), outer_bimodule(K), outer_bimodule(K));
    CHECK_FALSE(v.symmetric);
    CHECK(v.witness.has_value());
}

TEST_CASE("induced H (x) H has left coaction tau(R) (x) 1 at 1 (x) 1")
{
    const auto H = cyclic_group_algebra<Q>(2);
    const Vec R = c2_sign_r_matrix<Q>();
    const auto M = induce_hh_from_r(H, R);
    const Vec lhs = M.left_coaction().column(0);
    CHECK(lhs == kronecker(flip<Q>(2, 2).apply(R), basis_vector<Q>(2, 0)));
    CHECK(same_structure(induce_hh_from_r(H, one_one(H)),
                         YDLBimodule<Q>(H, "H⊗H", M.basis(), M.left_action(), M.right_action(),
                                        kronecker(H.unit(), M.id()), kronecker(M.id(), H.unit()))));
}

TEST_CASE("extracting R from the induced H (x) H recovers it")
{
    const auto C2 = cyclic_group_algebra<Q>(2);
    const auto Sw = sweedler_algebra<Q>();
    for (const auto& [H, R] : {std::pair{C2, c2_sign_r_matrix<Q>()}, std::pair{C2, one_one(C2)},
                               std::pair{Sw, sweedler_r()}})
    {
        INFO(H.name());
        const auto x = extract_r(induce_hh_from_r(H, R));
        CHECK(x.r.element == R);
        REQUIRE(x.r.inverse);
        CHECK(*x.r.inverse == flip<Q>(H.dim(), H.dim()).apply(R));
        CHECK(x.passed());
    }
}

TEST_CASE("extracting from H3 of a cocommutative algebra gives 1 (x) 1")
{
    for (const auto& key : {"c2", "c3", "s3"})
    {
        INFO(key);
        const auto H = catalog_algebra<Q>(key);
        const auto x = extract_r(example_module(H, 3));
        CHECK(x.r.element == one_one(H));
        CHECK(x.passed());
    }
}

TEST_CASE("extraction refuses non-symmetric and wrongly shaped input")
{
    const auto K = klein_group_algebra<Q>();
    try
    {
        extract_r(induce_hh_from_r(K, klein_r()));
        FAIL("expected SymmetryError");
    }
    catch (const SymmetryError& e)
    {
        CHECK(std::string(e.what()).find("not triangularizable") != std::string::npos);
    }
    CHECK_THROWS_AS(extract_r(example_module(sweedler_algebra<Q>(), 3)), SymmetryError);
    CHECK_THROWS_AS(extract_r(example_module(cyclic_group_algebra<Q>(2), 1)), StructuralError);
    CHECK_THROWS_AS(extract_r(trivial_module(cyclic_group_algebra<Q>(2))), StructuralError);
}

TEST_CASE("H3 braiding is a symmetry exactly for cocommutative H")
{
    for (const auto& key : catalog_keys())
    {
        INFO(key);
        const auto v = h3_symmetry_verdict(catalog_algebra<Q>(key));
        CHECK(v.holds);
        CHECK(v.symmetry.symmetric == (key != "dual_s3" && key != "sweedler"));
        CHECK(v.symmetry.witness.has_value() != v.symmetry.symmetric);
    }
}

TEST_CASE("extracting R from a classical Yetter-Drinfeld structure")
{
    const auto C3 = cyclic_group_algebra<Q>(3);
    CHECK(extract_r_from_yd(C3, adjoint_coaction(C3)).r.element == one_one(C3));
    const auto S3 = symmetric_group_algebra_s3<Q>();
    CHECK(extract_r_from_yd(S3, adjoint_coaction(S3)).r.element == one_one(S3));
    CHECK(extract_r_from_yd(S3, kronecker(S3.unit(), S3.id())).r.element == one_one(S3));

    const auto C2 = cyclic_group_algebra<Q>(2);
    const Vec R = c2_sign_r_matrix<Q>();
    // k |-> R² (x) R¹ k
    const Map rho = compose(kronecker(C2.id(), C2.mul()),
                            kronecker(Map::element({2, 2}, flip<Q>(2, 2).apply(R)), C2.id()));
    const auto x = extract_r_from_yd(C2, rho);
    CHECK(x.r.element == R);
    CHECK(x.passed());

    const auto Sw = sweedler_algebra<Q>();
    CHECK_THROWS_AS(extract_r_from_yd(Sw, adjoint_coaction(Sw)), SymmetryError);
    // the trivial coaction needs a cocommutative H
    CHECK_THROWS_AS(extract_r_from_yd(Sw, kronecker(Sw.unit(), Sw.id())), AxiomError);
}
