#include <catch2/catch_amalgamated.hpp>

#include "ydl/builders.hpp"

using namespace ydl;
using Q = Rational;
using Map = LinearMap<Q>;
using H_t = HopfAlgebra<Q>;

namespace {

H_t corrupt(const H_t& H, Map HopfAlgebra<Q>::Structure::*field, Map value)
{
    auto s = H.structure();
    s.*field = std::move(value);
    return H_t::unchecked(std::move(s));
}

const AxiomReport<Q>& find(const std::vector<AxiomReport<Q>>& reports, const std::string& axiom)
{
    for (const auto& r : reports)
        if (r.axiom == axiom)
            return r;
    throw std::runtime_error("no report " + axiom);
}

}  // namespace

TEST_CASE("catalog algebras pass every battery")
{
    for (const auto& key : catalog_keys())
    {
        INFO(key);
        const auto H = catalog_algebra<Q>(key);
        const auto reports = check_bialgebra(H);
        CHECK(reports.size() == 8);
        CHECK(all_passed(reports));
        CHECK(check_antipode(H).passed);
        CHECK(H.checked());
    }
}

TEST_CASE("ground field is one-dimensional with scalar structure maps")
{
    const auto H = trivial_hopf<Q>();
    CHECK(H.dim() == 1);
    CHECK(H.mul() == Map::identity(1));
    CHECK(H.antipode() == Map::identity(1));
    CHECK(antipode_inverse(H) == Map::identity(1));
}

TEST_CASE("corrupted comultiplication fails the counit law at g")
{
    const auto H = cyclic_group_algebra<Q>(2);
    // Delta(g) := g (x) 1
    const Map bad = Map::from_triplets({2, 2}, {2}, {{0, 0, Q(1)}, {2, 1, Q(1)}});
    const auto B = corrupt(H, &H_t::Structure::comul, bad);
    CHECK_FALSE(B.checked());
    const auto reports = check_bialgebra(B);
    const auto& counit = find(reports, "counit");
    REQUIRE_FALSE(counit.passed);
    CHECK(counit.witness->input == "g");
    CHECK(counit.witness->lhs_text == "1");
    CHECK(counit.witness->rhs_text == "g");

    auto s = H.structure();
    s.comul = bad;
    CHECK_THROWS_AS(H_t(s), AxiomError);
}

TEST_CASE("zero antipode fails at 1")
{
    const auto H = cyclic_group_algebra<Q>(2);
    const auto B = corrupt(H, &H_t::Structure::antipode, Map(Legs{2}, Legs{2}));
    const auto r = check_antipode(B);
    REQUIRE_FALSE(r.passed);
    CHECK(r.witness->input == "1");
    CHECK(r.witness->lhs_text == "0");
    CHECK(r.witness->rhs_text == "1");
    CHECK_THROWS_AS(antipode_inverse(B), SingularError);
}

TEST_CASE("structure maps of the wrong shape are rejected before any axiom")
{
    auto s = cyclic_group_algebra<Q>(2).structure();
    s.mul = Map(Legs{2}, Legs{2});
    CHECK_THROWS_AS(H_t::unchecked(s), ShapeError);
}

TEST_CASE("antipode inverse")
{
    const auto G = symmetric_group_algebra_s3<Q>();
    CHECK(antipode_inverse(G) == G.antipode());

    const auto H = sweedler_algebra<Q>();
    const Map Si = antipode_inverse(H);
    CHECK(compose(Si, H.antipode()) == H.id());
    // S^{-1}(x) = gx, S^{-1}(gx) = -x
    CHECK(format_vector(Si.column(2), H.labels()) == "gx");
    CHECK(format_vector(Si.column(3), H.labels()) == "-x");
}

TEST_CASE("predicates on kC2, kS3 and Sweedler")
{
    const auto C2 = cyclic_group_algebra<Q>(2);
    CHECK(is_commutative(C2).passed);
    CHECK(is_cocommutative(C2).passed);
    CHECK(is_involutive(C2).passed);

    const auto S3 = symmetric_group_algebra_s3<Q>();
    const auto comm = is_commutative(S3);
    REQUIRE_FALSE(comm.passed);
    // (12)(13) = (132) but (13)(12) = (123)
    CHECK(comm.witness->input == "(12)⊗(13)");
    CHECK(comm.witness->lhs_text == "(123)");
    CHECK(comm.witness->rhs_text == "(132)");
    CHECK(is_cocommutative(S3).passed);
    CHECK(is_involutive(S3).passed);

    const auto Sw = sweedler_algebra<Q>();
    CHECK_FALSE(is_commutative(Sw).passed);
    CHECK_FALSE(is_cocommutative(Sw).passed);
    const auto inv = is_involutive(Sw);
    REQUIRE_FALSE(inv.passed);
    CHECK(inv.witness->input == "x");
    CHECK(inv.witness->lhs_text == "-x");
}

TEST_CASE("group table validation names the failing triple")
{
    // a non-associative loop on three elements
    const CayleyTable bad = {{0, 1, 2}, {1, 0, 0}, {2, 0, 0}};
    try
    {
        group_algebra<Q>("bad", {"e", "a", "b"}, bad);
        FAIL("expected StructuralError");
    }
    catch (const StructuralError& e)
    {
        CHECK(std::string(e.what()).find("(a,b,c)") != std::string::npos);
    }
    CHECK_THROWS_AS(group_algebra<Q>("t", {"e", "a"}, {{0, 1}, {1, 1}}), StructuralError);
}

TEST_CASE("group algebras are cocommutative and involutive, commutative iff abelian")
{
    for (const auto& G : {trivial_hopf<Q>(), cyclic_group_algebra<Q>(2), cyclic_group_algebra<Q>(3),
                          klein_group_algebra<Q>(), symmetric_group_algebra_s3<Q>()})
    {
        INFO(G.name());
        CHECK(is_cocommutative(G).passed);
        CHECK(is_involutive(G).passed);
        CHECK(is_commutative(G).passed == (G.name() != "kS3"));
    }
}

TEST_CASE("tensor Hopf algebras")
{
    const auto k = trivial_hopf<Q>();
    const auto Sw = sweedler_algebra<Q>();
    CHECK(same_structure(tensor_hopf(k, Sw), Sw));
    CHECK_FALSE(is_involutive(tensor_hopf(Sw, k)).passed);

    const auto CC = tensor_hopf(cyclic_group_algebra<Q>(2), cyclic_group_algebra<Q>(2));
    CHECK(CC.dim() == 4);
    CHECK(is_commutative(CC).passed);
    CHECK(is_cocommutative(CC).passed);
}

TEST_CASE("dual of kC2 is isomorphic to kC2 through the characters")
{
    const auto H = cyclic_group_algebra<Q>(2);
    const auto D = dual_hopf(H);
    CHECK(D.basis() == std::vector<std::string>{"1*", "g*"});
    // 1 -> 1* + g*, g -> 1* - g*
    const Map phi = Map::from_triplets({2}, {2}, {{0, 0, Q(1)}, {1, 0, Q(1)}, {0, 1, Q(1)}, {1, 1, Q(-1)}});
    CHECK(compose(phi, H.mul()) == compose(D.mul(), kronecker(phi, phi)));
    CHECK(compose(D.comul(), phi) == compose(kronecker(phi, phi), H.comul()));
    CHECK(compose(phi, H.unit()) == D.unit());
    CHECK(compose(D.counit(), phi) == H.counit());
    CHECK(compose(D.antipode(), phi) == compose(phi, H.antipode()));
}

TEST_CASE("dualizing swaps commutativity and cocommutativity")
{
    for (const auto& key : catalog_keys())
    {
        INFO(key);
        const auto H = catalog_algebra<Q>(key);
        const auto D = dual_hopf(H);
        CHECK(is_commutative(D).passed == is_cocommutative(H).passed);
        CHECK(is_cocommutative(D).passed == is_commutative(H).passed);
        CHECK(same_structure(dual_hopf(D), H));
        CHECK(dual_hopf(D).basis() == H.basis());
    }
    const auto DS3 = catalog_algebra<Q>("dual_s3");
    CHECK(is_commutative(DS3).passed);
    CHECK_FALSE(is_cocommutative(DS3).passed);
}

TEST_CASE("unit and counit laws hold exhaustively")
{
    for (const auto& key : catalog_keys())
    {
        const auto H = catalog_algebra<Q>(key);
        const Map I = H.id();
        CHECK(compose(kronecker(H.counit(), I), H.comul()) == I);
        CHECK(compose(kronecker(I, H.counit()), H.comul()) == I);
        CHECK(compose(H.mul(), kronecker(H.unit(), I)) == I);
        CHECK(compose(H.mul(), kronecker(I, H.unit())) == I);
    }
}

TEST_CASE("involutive exactly when the antipode is its own inverse")
{
    for (const auto& key : catalog_keys())
    {
        const auto H = catalog_algebra<Q>(key);
        CHECK(is_involutive(H).passed == (antipode_inverse(H) == H.antipode()));
    }
}

TEST_CASE("prime field instances")
{
    {
        ModP::Scope scope(3);
        const auto H = sweedler_algebra<ModP>();
        CHECK(all_passed(check_bialgebra(H)));
        CHECK_FALSE(is_involutive(H).passed);
        CHECK(all_passed(check_bialgebra(symmetric_group_algebra_s3<ModP>())));
    }
    {
        ModP::Scope scope(2);
        CHECK_THROWS_AS(sweedler_algebra<ModP>(), StructuralError);
        CHECK(is_involutive(cyclic_group_algebra<ModP>(2)).passed);
    }
}
