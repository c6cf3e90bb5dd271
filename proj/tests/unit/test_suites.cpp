#include <catch2/catch_amalgamated.hpp>

#include "ydl/builders.hpp"
#include "ydl/cqt_structures.hpp"
#include "ydl/io.hpp"
#include "ydl/qt_structures.hpp"
#include "ydl/suites.hpp"

using namespace ydl;
using Q = Rational;

namespace {

std::string data(const std::string& name)
{
    return std::string(YDL_SOURCE_DIR) + "/" + name;
}

template <typename Scalar>
const SuiteCheck<Scalar>& find(const CheckSuiteResult<Scalar>& r, const std::string& name)
{
    for (const auto& c : r.checks)
        if (c.report.axiom == name)
            return c;
    FAIL("no check named " << name);
    throw std::logic_error("unreachable");
}

template <typename Scalar>
bool conjunction(const CheckSuiteResult<Scalar>& r)
{
    bool all = true;
    for (const auto& c : r.checks)
        all = all && c.report.passed;
    return all;
}

template <typename Scalar>
SuiteOptions<Scalar> catalog(const std::string& key)
{
    SuiteOptions<Scalar> o;
    o.catalog_key = key;
    return o;
}

}  // namespace

TEST_CASE("every suite passes on kC2")
{
    const auto H = cyclic_group_algebra<Q>(2);
    for (const auto& s : suite_names())
    {
        INFO(s);
        const auto r = run_suite(s, H, catalog<Q>("c2"));
        CHECK(r.overall);
        CHECK_FALSE(r.checks.empty());
        CHECK(r.overall == conjunction(r));
    }
}

TEST_CASE("symmetry on kS3")
{
    const auto H = catalog_algebra<Q>("s3");
    const auto r = run_suite("symmetry", H, catalog<Q>("s3"));
    CHECK(r.overall);
    CHECK(find(r, "ψ(H3,H3)² = id ⟺ H cocommutative").detail == "H3 symmetric, cocommutative");
    const auto& h4 = find(r, "ψ(H4,H4)² = id ⟺ H commutative");
    CHECK(h4.detail == "H4 not symmetric, not commutative");
    CHECK(h4.report.witness.has_value());
    int obstructions = 0;
    for (const auto& c : r.checks)
        if (c.report.axiom.starts_with("round trip on "))
        {
            ++obstructions;
            CHECK(c.report.witness.has_value());
            CHECK(c.detail.starts_with("not symmetric"));
        }
    CHECK(obstructions > 0);
}

TEST_CASE("u on Sweedler fails on every example module with a witness")
{
    const auto H = catalog_algebra<Q>("sweedler");
    const auto r = run_suite("u", H, catalog<Q>("sweedler"));
    CHECK(r.overall);
    REQUIRE(r.checks.size() == 4);
    for (const auto& c : r.checks)
    {
        CHECK(c.detail.starts_with("u fails, S² ≠ id"));
        CHECK(c.report.witness.has_value());
    }
    const auto& w = *find(r, "u-condition on H1 ⟺ S² = id").report.witness;
    CHECK(w.input == "x⊗1");
    CHECK(w.lhs_text == "x⊗1 + 2·gx⊗1");
    CHECK(w.rhs_text == "x⊗1");
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0] == "u: S² ≠ id, the tensor-product table is not applicable");
}

TEST_CASE("the variant option restricts the module checks")
{
    const auto H = catalog_algebra<Q>("sweedler");
    auto o = catalog<Q>("sweedler");
    o.variant = 3;
    const auto r = run_suite("u", H, o);
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].report.axiom == "u-condition on H3 ⟺ S² = id");
    o.variant = 5;
    CHECK_THROWS_AS(run_suite("u", H, o), UsageError);
}

TEST_CASE("usage errors")
{
    const auto H = cyclic_group_algebra<Q>(2);
    CHECK_THROWS_AS(run_suite("nope", H), UsageError);
    CHECK_THROWS_WITH(run_suite("qt", H), Catch::Matchers::ContainsSubstring("needs --r"));
    CHECK_THROWS_WITH(run_suite("cqt", H), Catch::Matchers::ContainsSubstring("needs --zeta"));
    SuiteOptions<Q> o;
    o.r = Vector<Q>::Zero(3);
    CHECK_THROWS_AS(run_suite("qt", H, o), std::exception);
}

TEST_CASE("missing structures become notes under all")
{
    const auto H = cyclic_group_algebra<Q>(2);
    const auto r = run_suite("all", H);
    CHECK(r.overall);
    CHECK(std::find(r.notes.begin(), r.notes.end(), "qt: no R-matrix given (--r); dependent checks skipped") !=
          r.notes.end());
    const auto s = run_suite("all", catalog_algebra<Q>("s3"), catalog<Q>("s3"));
    CHECK(s.overall);
    CHECK(std::find(s.notes.begin(), s.notes.end(),
                    "cqt: the catalog has no coquasitriangular form for s3; dependent checks skipped") != s.notes.end());
}

TEST_CASE("checks come out in a fixed order")
{
    const auto H = catalog_algebra<Q>("c2xc2");
    const auto a = run_suite("all", H, catalog<Q>("c2xc2"));
    const auto b = run_suite("all", H, catalog<Q>("c2xc2"));
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i)
    {
        CHECK(a.checks[i].group == b.checks[i].group);
        CHECK(a.checks[i].report.axiom == b.checks[i].report.axiom);
        CHECK(a.checks[i].report.passed == b.checks[i].report.passed);
        CHECK(a.checks[i].detail == b.checks[i].detail);
    }
    CHECK(a.notes == b.notes);
    const std::vector<std::string> groups{"hopf", "ydl", "symmetry", "pseudosymmetry", "u", "qt", "cqt", "roundtrip"};
    std::size_t at = 0;
    for (const auto& c : a.checks)
    {
        while (at < groups.size() && groups[at] != c.group)
            ++at;
        CHECK(at < groups.size());
    }
}

TEST_CASE("the Klein R is quasitriangular but not triangular")
{
    const auto H = catalog_algebra<Q>("c2xc2");
    const auto r = run_suite("qt", H, catalog<Q>("c2xc2"));
    CHECK(r.overall);
    CHECK(find(r, "R⁻¹ = τ(R) ⟺ ψ symmetric on H⊗H[R]").detail == "not triangular, not symmetric");
    const auto t = run_suite("roundtrip", H, catalog<Q>("c2xc2"));
    CHECK(t.overall);
    find(t, "extract_r(H⊗H[R]) refuses exactly the non-triangular R");
}

TEST_CASE("a triangular R on Sweedler round trips")
{
    const auto H = catalog_algebra<Q>("sweedler");
    auto o = catalog<Q>("sweedler");
    o.r = sweedler_r_matrix<Q>(Q(3));
    const auto q = run_suite("qt", H, o);
    CHECK(q.overall);
    CHECK(find(q, "R⁻¹ = τ(R) ⟺ ψ symmetric on H⊗H[R]").detail == "triangular, symmetric");
    const auto t = run_suite("roundtrip", H, o);
    CHECK(t.overall);
    CHECK(find(t, "extract_r(H⊗H[R]) = R with R⁻¹ = τ(R)").report.passed);
}

TEST_CASE("a singular R fails its invertibility check")
{
    const auto H = cyclic_group_algebra<Q>(2);
    SuiteOptions<Q> o;
    o.r = r_element(H, to_matrix<Q>(read_coefficient_file(data("tests/data/c2_singular_r.json"), "R"), 2, "R"));
    const auto r = run_suite("qt", H, o);
    CHECK_FALSE(r.overall);
    CHECK_FALSE(find(r, "R invertible").report.passed);
    CHECK(r.overall == conjunction(r));
}

TEST_CASE("a corrupted ζ fails with a witness")
{
    const auto H = cyclic_group_algebra<Q>(2);
    SuiteOptions<Q> o;
    o.zeta = to_matrix<Q>(read_coefficient_file(data("tests/data/c2_corrupt_zeta.json"), "zeta"), 2, "zeta");
    const auto r = run_suite("cqt", H, o);
    CHECK_FALSE(r.overall);
    bool witnessed = false;
    for (const auto& c : r.checks)
        if (!c.report.passed && c.report.witness)
        {
            witnessed = true;
            CHECK(c.report.witness->input == "g⊗g⊗g");
        }
    CHECK(witnessed);
}

TEST_CASE("the Hopf battery gates the other suites")
{
    const auto f = read_algebra_file(data("tests/data/sweedler_bad_comul.json"));
    const auto H = to_hopf<Q>(f, false);
    const auto r = run_suite("symmetry", H);
    CHECK_FALSE(r.overall);
    for (const auto& c : r.checks)
        CHECK(c.group == "hopf");
    CHECK(r.notes == std::vector<std::string>{"hopf: the Hopf battery fails; remaining checks skipped"});
    CHECK(find(r, "counit").report.witness->input == "x");

    SuiteOptions<Q> o;
    o.unchecked = true;
    const auto u = run_suite("symmetry", H, o);
    for (const auto& c : u.checks)
        CHECK(c.group != "hopf");
    CHECK(u.notes.empty());
}

TEST_CASE("passing suites hide the gate checks")
{
    const auto r = run_suite("symmetry", cyclic_group_algebra<Q>(2));
    for (const auto& c : r.checks)
        CHECK(c.group == "symmetry");
    const auto h = run_suite("hopf", cyclic_group_algebra<Q>(2));
    for (const auto& c : h.checks)
        CHECK(c.group == "hopf");
}

TEST_CASE("cqt over F7 with a non-cotriangular form")
{
    ModP::Scope scope(7);
    const auto H = load_hopf<ModP>(data("data/c3_f7.json"));
    SuiteOptions<ModP> o;
    o.zeta = to_matrix<ModP>(read_coefficient_file(data("data/c3_f7_zeta.json"), "zeta"), 3, "zeta");
    const auto r = run_suite("cqt", H, o);
    CHECK(r.overall);
    CHECK(find(r, "ζ cotriangular ⟺ ψ symmetric on H⊗H[ζ]").detail == "not cotriangular, not symmetric");
    const auto t = run_suite("roundtrip", H, o);
    CHECK(t.overall);
    find(t, "extract_zeta(H⊗H[ζ]) refuses exactly the non-cotriangular ζ");
}

TEST_CASE("catalog structures")
{
    CHECK(catalog_r<Q>("c2").has_value());
    CHECK_FALSE(catalog_r<Q>("dual_s3").has_value());
    CHECK_FALSE(catalog_zeta<Q>("s3").has_value());
    CHECK(*catalog_zeta<Q>("sweedler") == sweedler_sign_form<Q>());
    CHECK(*catalog_r<Q>("c2xc2") == klein_r_matrix<Q>());
}
