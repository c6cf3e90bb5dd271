#include "ydl/suites.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "ydl/builders.hpp"
#include "ydl/cqt_structures.hpp"
#include "ydl/io.hpp"
#include "ydl/qt_structures.hpp"
#include "ydl/u_condition.hpp"

namespace ydl {

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"hopf", "ydl", "symmetry", "pseudosymmetry", "u",
                                                   "qt",   "cqt", "roundtrip", "all"};
    return names;
}

template <typename Scalar>
std::optional<Vector<Scalar>> catalog_r(const std::string& key)
{
    if (key == "c2")
        return c2_sign_r_matrix<Scalar>();
    if (key == "c2xc2")
        return klein_r_matrix<Scalar>();
    if (key == "sweedler")
        return sweedler_r_matrix<Scalar>(Scalar(1));
    if (key == "k" || key == "c3" || key == "s3" || key == "c2_tensor_c2")
    {
        const auto H = catalog_algebra<Scalar>(key);
        return kronecker(H.unit(), H.unit()).as_vector();
    }
    return std::nullopt;
}

template <typename Scalar>
std::optional<Matrix<Scalar>> catalog_zeta(const std::string& key)
{
    if (key == "c2")
        return c2_sign_form<Scalar>();
    if (key == "sweedler")
        return sweedler_sign_form<Scalar>();
    if (key == "k" || key == "c3" || key == "c2xc2" || key == "dual_s3" || key == "c2_tensor_c2")
        return counit_form(catalog_algebra<Scalar>(key));
    return std::nullopt;
}

namespace {

template <typename Scalar>
class Runner
{
    public:
        using Opt = std::optional<Witness<Scalar>>;

        Runner(const std::string& suite, const HopfAlgebra<Scalar>& H, const SuiteOptions<Scalar>& o,
               CheckSuiteResult<Scalar>& out)
            : suite_(suite), H_(H), o_(o), out_(out)
        {
        }

        void run(const std::string& name)
        {
            static const std::map<std::string, void (Runner::*)()> groups = {
                {"hopf", &Runner::hopf},         {"ydl", &Runner::ydl}, {"symmetry", &Runner::symmetry},
                {"pseudosymmetry", &Runner::pseudo}, {"u", &Runner::u}, {"qt", &Runner::qt},
                {"cqt", &Runner::cqt},           {"roundtrip", &Runner::roundtrip}};
            group_ = name;
            try
            {
                (this->*groups.at(name))();
            }
            catch (const UsageError&)
            {
                throw;
            }
            catch (const std::exception& e)
            {
                add("completes", false, e.what());
            }
        }

    private:
        void add(std::string name, bool passed, std::string detail = {}, Opt witness = std::nullopt)
        {
            out_.checks.push_back({group_, {std::move(name), passed, std::move(witness)}, std::move(detail)});
        }

        void add(const AxiomReport<Scalar>& r, const std::string& prefix = {})
        {
            out_.checks.push_back({group_, {prefix + r.axiom, r.passed, r.witness}, {}});
        }

        void note(const std::string& text) { out_.notes.push_back(group_ + ": " + text); }

        std::vector<int> variants() const
        {
            if (o_.variant)
                return {*o_.variant};
            return {1, 2, 3, 4};
        }

        bool selected(int i, int j) const { return !o_.variant || i == *o_.variant || j == *o_.variant; }

        std::optional<Vector<Scalar>> r() const
        {
            if (o_.r)
                return o_.r;
            if (!o_.catalog_key.empty())
                return catalog_r<Scalar>(o_.catalog_key);
            return std::nullopt;
        }

        std::optional<Matrix<Scalar>> zeta() const
        {
            if (o_.zeta)
                return o_.zeta;
            if (!o_.catalog_key.empty())
                return catalog_zeta<Scalar>(o_.catalog_key);
            return std::nullopt;
        }

        bool structure_available(bool present, const char* option, const char* what)
        {
            if (present)
                return true;
            if (o_.catalog_key.empty())
            {
                if (suite_ == group_)
                    throw UsageError("suite " + suite_ + " needs " + option + " or a catalog algebra");
                note(std::string("no ") + what + " given (" + option + "); dependent checks skipped");
            }
            else
                note(std::string("the catalog has no ") + what + " for " + o_.catalog_key +
                     "; dependent checks skipped");
            return false;
        }

        void hopf()
        {
            for (const auto& r : check_bialgebra(H_))
                add(r);
            add(check_antipode(H_));
        }

        void ydl()
        {
            for (int i : variants())
            {
                const auto M = example_module(H_, i);
                for (const auto& r : check_ydl(M))
                    add(r, M.name() + ": ");
            }
        }

        void obstruction(const SymmetryObstruction<Scalar>& ob, const std::string& formula)
        {
            for (const auto& p : ob.pairs)
            {
                const bool ok = p.round_trip_formula && (ob.trivial ? p.verdict.symmetric && !p.witness
                                                                    : !p.verdict.symmetric && p.witness.has_value());
                add("round trip on " + p.pair, ok,
                    std::string(p.verdict.symmetric ? "symmetric" : "not symmetric") + "; " + formula +
                        (p.round_trip_formula ? " holds" : " fails"),
                    p.witness);
            }
        }

        void symmetry()
        {
            obstruction(symmetry_obstruction(H_), "ψ²(1⊗k⊗1⊗1) = 1⊗k₁⊗1⊗k₂");
            obstruction(right_right_symmetry_obstruction(H_), "ψ²(k⊗1) = k₁⊗k₂");
            obstruction(left_left_symmetry_obstruction(H_), "ψ²(1⊗k) = k₁⊗k₂");
            const bool cocommutative = is_cocommutative(H_).passed;
            const auto H1 = example_module(H_, 1), H2 = example_module(H_, 2);
            const auto f = is_flip(H1, H2);
            add("H cocommutative ⟹ ψ(H1,H2) = flip", f.passed || !cocommutative,
                std::string(f.passed ? "flip" : "not the flip") + (cocommutative ? ", cocommutative" : ", not cocommutative"),
                f.witness);
            h3();
            h4();
        }

        void h3()
        {
            const auto v = h3_symmetry_verdict(H_);
            add("ψ(H3,H3)² = id ⟺ H cocommutative", v.holds,
                std::string(v.symmetry.symmetric ? "H3 symmetric" : "H3 not symmetric") +
                    (v.cocommutative ? ", cocommutative" : ", not cocommutative"),
                v.symmetry.witness);
        }

        void h4()
        {
            const auto v = h4_symmetry_verdict(H_);
            add("ψ(H4,H4)² = id ⟺ H commutative", v.holds,
                std::string(v.symmetry.symmetric ? "H4 symmetric" : "H4 not symmetric") +
                    (v.commutative ? ", commutative" : ", not commutative"),
                v.symmetry.witness);
        }

        static std::string projection_text(const std::optional<ProjectedWitness<Scalar>>& p)
        {
            if (!p)
                return {};
            return "; " + p->form + " fails at k = " + p->k + (p->g.empty() ? "" : ", g = " + p->g) + ": " +
                   p->lhs_text + " != " + p->rhs_text;
        }

        void pseudo()
        {
            const auto v = pseudosymmetry_verdict(H_);
            const bool comm = v.commutative, cocomm = v.cocommutative;
            const auto flags = std::string(comm ? "commutative" : "not commutative") +
                               (cocomm ? ", cocommutative" : ", not cocommutative");
            // canonical triples: (H1,H2,H1) then (H1,H2,H2)
            for (std::size_t i = 0; i < 2 && i < v.triples.size(); ++i)
            {
                const auto& t = v.triples[i];
                const bool sym = t.verdict.symmetric;
                const bool projection_due = !sym && (i == 0 ? !cocomm : cocomm && !comm);
                const bool ok = (i == 0 ? !sym || cocomm : !sym || !cocomm || comm) &&
                                (!projection_due || t.projected.has_value());
                add(i == 0 ? "pseudosymmetry on " + t.triple + " ⟹ H cocommutative"
                           : "pseudosymmetry on " + t.triple + ", H cocommutative ⟹ H commutative",
                    ok, std::string(sym ? "pseudosymmetric" : "not pseudosymmetric") + projection_text(t.projected),
                    t.verdict.witness);
            }
            add("canonical triples pseudosymmetric ⟺ H commutative and cocommutative", v.biconditional_holds,
                std::string(v.triples_pass ? "all pseudosymmetric, " : "not all pseudosymmetric, ") + flags);

            const auto ll = left_left_pseudosymmetry_verdict(H_);
            std::string detail;
            std::optional<Witness<Scalar>> witness;
            for (const auto& t : ll.triples)
            {
                detail += t.triple + (t.verdict.symmetric ? " pseudosymmetric; " : " not pseudosymmetric; ");
                if (!witness)
                    witness = t.verdict.witness;
            }
            add("left-left triples pseudosymmetric ⟺ H commutative and cocommutative", ll.biconditional_holds,
                detail + flags, witness);
        }

        void u()
        {
            const auto v = example_u_verdict(H_);
            for (const auto& m : v.modules)
            {
                if (o_.variant && m.variant != *o_.variant)
                    continue;
                const bool ok = m.verdict.holds == v.involutive && m.verdict.orderings_agree &&
                                (v.involutive || m.slice_witness.has_value());
                add("u-condition on H" + std::to_string(m.variant) + " ⟺ S² = id", ok,
                    std::string(m.verdict.holds ? "u holds" : "u fails") + (v.involutive ? ", S² = id" : ", S² ≠ id") +
                        (m.verdict.orderings_agree ? "" : ", coaction orderings disagree"),
                    m.slice_witness ? m.slice_witness : m.verdict.witness);
            }
            if (!v.involutive)
            {
                note("S² ≠ id, the tensor-product table is not applicable");
                return;
            }
            for (const auto& p : example_tensor_u_table(H_))
            {
                if (!selected(p.i, p.j))
                    continue;
                const auto i = std::to_string(p.i), j = std::to_string(p.j);
                add("u on H" + i + "⊗H" + j + " = ψ(H" + j + ",H" + i + ")ψ(H" + i + ",H" + j + ")",
                    p.proof_identity && p.u_holds == p.symmetric,
                    std::string(p.u_holds ? "u holds" : "u fails") + (p.symmetric ? ", symmetric" : ", not symmetric"));
            }
        }

        void qt()
        {
            h3();
            const auto R = r();
            if (!structure_available(R.has_value(), "--r", "R-matrix"))
                return;
            try
            {
                r_inverse(H_, *R);
                add("R invertible", true);
            }
            catch (const SingularError& e)
            {
                add("R invertible", false, e.what());
                return;
            }
            const auto reports = check_qt(H_, *R);
            for (const auto& rep : reports)
                add(rep);
            if (!all_passed(reports))
            {
                note("R is not quasitriangular; induced structures skipped");
                return;
            }
            const auto tri = is_triangular(H_, *R);
            const auto outer = outer_bimodule(H_), regular = regular_bimodule(H_);
            const auto sym = induced_r_symmetry(H_, *R, outer, outer);
            add("R⁻¹ = τ(R) ⟺ ψ symmetric on H⊗H[R]", tri.passed == sym.symmetric,
                std::string(tri.passed ? "triangular" : "not triangular") + (sym.symmetric ? ", symmetric" : ", not symmetric"),
                tri.witness ? tri.witness : sym.witness);
            for (const auto& B : {regular, outer})
            {
                const auto M = induce_ydl_from_r(H_, *R, B);
                for (const auto& rep : check_ydl(M))
                    add(rep, M.name() + ": ");
            }
            if (!tri.passed)
                return;
            for (const auto& [A, B] : {std::pair{regular, regular}, std::pair{regular, outer}})
            {
                const auto v = induced_r_symmetry(H_, *R, A, B);
                add("ψ symmetric on (" + A.name + "[R], " + B.name + "[R])", v.symmetric, {}, v.witness);
            }
        }

        void cqt()
        {
            h4();
            const auto Z = zeta();
            if (!structure_available(Z.has_value(), "--zeta", "coquasitriangular form"))
                return;
            if (Z->rows() != H_.dim() || Z->cols() != H_.dim())
                throw ShapeError("zeta must be " + std::to_string(H_.dim()) + "x" + std::to_string(H_.dim()));
            try
            {
                convolution_inverse(H_, *Z);
                add("ζ convolution invertible", true);
            }
            catch (const SingularError& e)
            {
                add("ζ convolution invertible", false, e.what());
                return;
            }
            const auto reports = check_cqt(H_, *Z);
            for (const auto& rep : reports)
                add(rep);
            if (!all_passed(reports))
            {
                note("ζ is not coquasitriangular; induced structures skipped");
                return;
            }
            const auto cot = is_cotriangular(H_, *Z);
            const auto outer = outer_bicomodule(H_), regular = regular_bicomodule(H_);
            const auto sym = induced_zeta_symmetry(H_, *Z, outer, outer);
            add("ζ cotriangular ⟺ ψ symmetric on H⊗H[ζ]", cot.passed == sym.symmetric,
                std::string(cot.passed ? "cotriangular" : "not cotriangular") +
                    (sym.symmetric ? ", symmetric" : ", not symmetric"),
                cot.witness ? cot.witness : sym.witness);
            for (const auto& C : {regular, outer})
            {
                const auto M = induce_ydl_from_zeta(H_, *Z, C);
                for (const auto& rep : check_ydl(M))
                    add(rep, M.name() + ": ");
            }
            if (!cot.passed)
                return;
            for (const auto& [A, B] : {std::pair{regular, regular}, std::pair{regular, outer}})
            {
                const auto v = induced_zeta_symmetry(H_, *Z, A, B);
                add("ψ symmetric on (" + A.name + "[ζ], " + B.name + "[ζ])", v.symmetric, {}, v.witness);
            }
        }

        void roundtrip()
        {
            const auto file = to_file(H_);
            const auto reparsed = parse_algebra(print_algebra(file));
            add("parse(print(file)) = file", reparsed == file);
            add("load(save(H)) = H", same_structure(to_hopf<Scalar>(reparsed, false), H_));

            const int n = H_.dim();
            if (const auto R = r(); R && R->size() == n * n)
            {
                bool triangular = false;
                try
                {
                    triangular = all_passed(check_qt(H_, *R)) && is_triangular(H_, *R).passed;
                }
                catch (const SingularError&)
                {
                }
                try
                {
                    const auto x = extract_r(induce_hh_from_r(H_, *R));
                    const Vector<Scalar> tau_r = flip<Scalar>(n, n).apply(*R);
                    const bool same = x.r.element == *R && x.r.inverse && *x.r.inverse == tau_r && x.passed();
                    add("extract_r(H⊗H[R]) = R with R⁻¹ = τ(R)", triangular && same,
                        "extracted " + format_vector(x.r.element, H_.labels(2)));
                }
                catch (const SymmetryError& e)
                {
                    add("extract_r(H⊗H[R]) refuses exactly the non-triangular R", !triangular, e.what());
                }
            }
            if (const auto Z = zeta(); Z && Z->rows() == n && Z->cols() == n)
            {
                bool cotriangular = false;
                try
                {
                    cotriangular = all_passed(check_cqt(H_, *Z)) && is_cotriangular(H_, *Z).passed;
                }
                catch (const SingularError&)
                {
                }
                try
                {
                    const auto x = extract_zeta(induce_hh_from_zeta(H_, *Z));
                    add("extract_zeta(H⊗H[ζ]) = ζ", cotriangular && x.zeta.Z == *Z && x.passed());
                }
                catch (const SymmetryError& e)
                {
                    add("extract_zeta(H⊗H[ζ]) refuses exactly the non-cotriangular ζ", !cotriangular, e.what());
                }
            }
        }

        const std::string& suite_;
        const HopfAlgebra<Scalar>& H_;
        const SuiteOptions<Scalar>& o_;
        CheckSuiteResult<Scalar>& out_;
        std::string group_;
};

}  // namespace

template <typename Scalar>
CheckSuiteResult<Scalar> run_suite(const std::string& name, const HopfAlgebra<Scalar>& H,
                                   const SuiteOptions<Scalar>& options)
{
    bool known = false;
    for (const auto& s : suite_names())
        known = known || s == name;
    if (!known)
        throw UsageError("unknown suite \"" + name + "\"");
    if (options.variant && (*options.variant < 1 || *options.variant > 4))
        throw UsageError("variant must be 1, 2, 3 or 4");
    if (options.r && options.r->size() != H.dim() * H.dim())
        throw ShapeError("R must have " + std::to_string(H.dim() * H.dim()) + " coefficients");

    const auto start = std::chrono::steady_clock::now();
    CheckSuiteResult<Scalar> out;
    out.suite = name;
    Runner<Scalar> runner(name, H, options, out);
    if (name == "hopf" || name == "all" || !options.unchecked)
        runner.run("hopf");
    bool hopf_ok = true;
    for (const auto& c : out.checks)
        hopf_ok = hopf_ok && c.report.passed;
    const bool gated = !options.unchecked && !hopf_ok;
    if (gated)
        out.notes.push_back("hopf: the Hopf battery fails; remaining checks skipped");
    else if (name == "all")
    {
        for (const auto& s : suite_names())
            if (s != "hopf" && s != "all")
                runner.run(s);
    }
    else if (name != "hopf")
    {
        if (!options.unchecked)
            out.checks.clear();
        runner.run(name);
    }
    for (const auto& c : out.checks)
        out.overall = out.overall && c.report.passed;
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

template CheckSuiteResult<Rational> run_suite(const std::string&, const HopfAlgebra<Rational>&,
                                              const SuiteOptions<Rational>&);
template CheckSuiteResult<ModP> run_suite(const std::string&, const HopfAlgebra<ModP>&, const SuiteOptions<ModP>&);
template std::optional<Vector<Rational>> catalog_r(const std::string&);
template std::optional<Vector<ModP>> catalog_r(const std::string&);
template std::optional<Matrix<Rational>> catalog_zeta(const std::string&);
template std::optional<Matrix<ModP>> catalog_zeta(const std::string&);

}  // namespace ydl
