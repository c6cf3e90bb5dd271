#include <catch2/catch_amalgamated.hpp>

#include "ydl/builders.hpp"
#include "ydl/ydl_bimodule.hpp"

using namespace ydl;
using Q = Rational;
using Map = LinearMap<Q>;

namespace {

const AxiomReport<Q>& find(const std::vector<AxiomReport<Q>>& reports, const std::string& axiom)
{
    for (const auto& r : reports)
        if (r.axiom == axiom)
            return r;
    throw std::runtime_error("no report " + axiom);
}

std::string image(const Map& f, int column, const Labels& out)
{
    return format_vector(f.column(column), out);
}

int index_of(const std::vector<std::string>& names, const std::string& name)
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return static_cast<int>(i);
    throw std::runtime_error("no basis element " + name);
}

}  // namespace

TEST_CASE("all four example modules pass the full battery on the catalog")
{
    for (const auto& key : catalog_keys())
        for (int i = 1; i <= 4; ++i)
        {
            INFO(key << " variant " << i);
            const auto reports = check_ydl(example_module(catalog_algebra<Q>(key), i));
            REQUIRE(reports.size() == 10);
            for (const auto& r : reports)
                CHECK(describe(r) == r.axiom + ": pass");
        }
}

TEST_CASE("trivial module passes the battery over every catalog algebra")
{
    for (const auto& key : catalog_keys())
        CHECK(all_passed(check_ydl(trivial_module(catalog_algebra<Q>(key)))));
}

TEST_CASE("grouplike elements have trivial adjoint coaction")
{
    const auto H = cyclic_group_algebra<Q>(2);
    const auto M1 = example_module(H, 1);
    const Labels out = concat(H.labels(), M1.labels());
    // g1 S(g3) = g g^{-1} = 1
    CHECK(image(M1.left_coaction(), index_of(M1.basis(), "g⊗1"), out) == "1⊗g⊗1");
    CHECK(image(M1.left_coaction(), index_of(M1.basis(), "g⊗g"), out) == "1⊗g⊗g");
}

TEST_CASE("variant 2 right coaction on the k (x) 1 slice")
{
    for (const auto& key : {"c3", "s3", "sweedler"})
    {
        const auto H = catalog_algebra<Q>(key);
        const auto M2 = example_module(H, 2);
        const Labels out = concat(M2.labels(), H.labels());
        for (int k = 0; k < H.dim(); ++k)
        {
            const std::string kk = H.basis()[k] + "⊗" + H.basis()[0];
            CHECK(image(M2.right_coaction(), index_of(M2.basis(), kk), out) == kk + "⊗" + H.basis()[0]);
        }
    }
}

TEST_CASE("Sweedler variant 1 with a trivial right action breaks the right-right compatibility")
{
    const auto H = sweedler_algebra<Q>();
    const auto M1 = example_module(H, 1);
    const YDLBimodule<Q> bad(H, "bad", M1.basis(), M1.left_action(), kronecker(M1.id(), H.counit()),
                             M1.left_coaction(), M1.right_coaction());
    const auto reports = check_ydl(bad);
    REQUIRE(reports.size() == 10);
    const auto& rr = find(reports, "right-right Yetter-Drinfeld");
    REQUIRE_FALSE(rr.passed);
    REQUIRE(rr.witness);
    CHECK(rr.witness->lhs != rr.witness->rhs);
    CHECK(find(reports, "left module").passed);
}

TEST_CASE("structure maps of the wrong shape are rejected")
{
    const auto H = cyclic_group_algebra<Q>(2);
    CHECK_THROWS_AS(YDLBimodule<Q>(H, "bad", {"a", "b"}, Map(Legs{2}, Legs{2}), H.counit(), H.unit(), H.unit()),
                    ShapeError);
    CHECK_THROWS_AS(example_module(H, 5), std::invalid_argument);
}

TEST_CASE("embedding the adjoint Yetter-Drinfeld module gives the k (x) 1 slice of variant 1")
{
    for (const auto& key : {"c2", "s3", "sweedler"})
    {
        INFO(key);
        const auto H = catalog_algebra<Q>(key);
        const auto E = embed_llyd(H, "H⊗k", H.basis(), H.mul(), adjoint_coaction(H));
        CHECK(all_passed(check_ydl(E)));
        const int n = H.dim();
        // k |-> k (x) 1
        const Map iota = kronecker(H.id(), H.unit()).reshaped({n * n}, {n});
        CHECK(all_passed(check_morphism(iota, E, example_module(H, 1))));
    }
}

TEST_CASE("embedding the trivial Yetter-Drinfeld module gives the trivial bimodule")
{
    const auto H = sweedler_algebra<Q>();
    const auto T = trivial_module(H);
    CHECK(same_structure(embed_llyd(H, "k", {"1"}, H.counit(), H.unit()), T));
    CHECK(same_structure(embed_rryd(H, "k", {"1"}, H.counit(), H.unit()), T));
}

TEST_CASE("braiding of embedded left-left modules is the classical Yetter-Drinfeld braiding")
{
    const auto H = sweedler_algebra<Q>();
    const int n = H.dim();
    const auto E = embed_llyd(H, "H⊗k", H.basis(), H.mul(), adjoint_coaction(H));
    const auto F = embed_llyd(H, "k⊗H", H.basis(), left_adjoint_action(H), H.comul());
    CHECK(all_passed(check_ydl(F)));
    // m (x) n |-> m[-1] > n (x) m[0]
    const Map classical = compose(kronecker(F.left_action(), E.id()), permute_legs<Q>({n, n, n}, {0, 2, 1}),
                                  kronecker(E.left_coaction(), F.id()));
    CHECK(braiding(E, F) == classical);
}

TEST_CASE("tensoring with the trivial module changes nothing")
{
    for (const auto& key : {"c2", "sweedler"})
    {
        const auto H = catalog_algebra<Q>(key);
        const auto T = trivial_module(H);
        for (int i = 1; i <= 4; ++i)
        {
            const auto M = example_module(H, i);
            CHECK(same_structure(tensor_ydl(M, T), M));
            CHECK(same_structure(tensor_ydl(T, M), M));
        }
    }
}

TEST_CASE("tensor products stay in the category and are strictly associative")
{
    const auto H = cyclic_group_algebra<Q>(2);
    const auto H1 = example_module(H, 1), H2 = example_module(H, 2);
    CHECK(all_passed(check_ydl(tensor_ydl(H1, H2))));
    CHECK(same_structure(tensor_ydl(tensor_ydl(H1, H2), H1), tensor_ydl(H1, tensor_ydl(H2, H1))));

    const auto S = sweedler_algebra<Q>();
    CHECK(all_passed(check_ydl(tensor_ydl(example_module(S, 3), example_module(S, 4)))));
}

TEST_CASE("tensor products of objects over different algebras are rejected")
{
    CHECK_THROWS_AS(tensor_ydl(example_module(cyclic_group_algebra<Q>(2), 1),
                               example_module(cyclic_group_algebra<Q>(3), 1)),
                    StructuralError);
}

TEST_CASE("braiding with the trivial module is the flip")
{
    for (const auto& key : {"c2", "s3", "sweedler"})
    {
        const auto H = catalog_algebra<Q>(key);
        const auto T = trivial_module(H);
        for (int i = 1; i <= 4; ++i)
        {
            const auto N = example_module(H, i);
            CHECK(braiding(T, N) == flip<Q>(1, N.dim()));
            CHECK(braiding(N, T) == flip<Q>(N.dim(), 1));
            CHECK(braiding_inverse(T, N) == flip<Q>(N.dim(), 1));
        }
    }
}

TEST_CASE("inner evaluation step: psi(1 (x) k (x) 1 (x) 1) = 1 (x) 1 (x) 1 (x) k")
{
    for (const auto& key : {"c2", "s3", "sweedler"})
    {
        INFO(key);
        const auto H = catalog_algebra<Q>(key);
        const auto H1 = example_module(H, 1), H2 = example_module(H, 2);
        const Map psi = braiding(H1, H2);
        const Labels out = {H2.basis(), H1.basis()};
        const int n = H.dim();
        REQUIRE(H.unit().column(0) == basis_vector<Q>(n, 0));
        const std::string one = H.basis()[0];
        for (int k = 0; k < n; ++k)
        {
            const int column = k * (n * n);
            CHECK(image(psi, column, out) == one + "⊗" + one + "⊗" + one + "⊗" + H.basis()[k]);
        }
    }
}

TEST_CASE("braiding inverse is a two-sided inverse on all catalog pairs")
{
    for (const auto& key : catalog_keys())
    {
        const auto H = catalog_algebra<Q>(key);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
            {
                INFO(key << " " << i << " " << j);
                const auto M = example_module(H, i), N = example_module(H, j);
                const Map psi = braiding(M, N), inv = braiding_inverse(M, N);
                CHECK(compose(inv, psi) == Map::identity(M.dim() * N.dim()));
                CHECK(compose(psi, inv) == Map::identity(M.dim() * N.dim()));
            }
    }
}

TEST_CASE("over a group algebra the inverse formula uses S itself")
{
    const auto H = cyclic_group_algebra<Q>(3);
    CHECK(H.antipode_inverse() == H.antipode());
}

TEST_CASE("braiding is a morphism of the tensor objects")
{
    for (const auto& key : {"c2", "sweedler"})
    {
        const auto H = catalog_algebra<Q>(key);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
            {
                INFO(key << " " << i << " " << j);
                for (const auto& r : check_braiding_morphism(example_module(H, i), example_module(H, j)))
                    CHECK(describe(r) == r.axiom + ": pass");
            }
    }
}

TEST_CASE("hexagon identities hold strictly")
{
    for (const auto& key : {"c2", "sweedler"})
    {
        const auto H = catalog_algebra<Q>(key);
        const auto H1 = example_module(H, 1), H2 = example_module(H, 2), H3 = example_module(H, 3),
                   H4 = example_module(H, 4);
        for (const auto& [a, b, c] : {std::tuple{&H1, &H2, &H1}, std::tuple{&H2, &H3, &H4}, std::tuple{&H4, &H1, &H3}})
        {
            INFO(key << " " << a->name() << " " << b->name() << " " << c->name());
            for (const auto& r : check_hexagon(*a, *b, *c))
                CHECK(describe(r) == r.axiom + ": pass");
        }
    }
}
