#ifndef YDL_SUITE_REPORT_HPP
#define YDL_SUITE_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "io.hpp"
#include "suites.hpp"

namespace ydl {

/// A coefficient vector with its scalars already printed.
struct RenderedVector
{
    int dim = 0;
    std::vector<std::pair<int, std::string>> entries;
    std::string text;
};

struct RenderedWitness
{
    std::vector<int> tuple;
    std::string input;
    RenderedVector lhs;
    RenderedVector rhs;
};

struct RenderedCheck
{
    std::string group;
    std::string name;
    bool passed = true;
    std::string detail;
    std::optional<RenderedWitness> witness;
};

/// One suite on one algebra, independent of the scalar type.
struct SuiteRun
{
    std::string algebra;
    std::string source;
    std::string field;
    int dim = 0;
    std::vector<RenderedCheck> checks;
    std::vector<std::string> notes;
    bool overall = true;
    double seconds = 0;
};

template <typename Scalar>
RenderedVector render_vector(const Vector<Scalar>& v, const std::string& text)
{
    RenderedVector out{static_cast<int>(v.size()), {}, text};
    for (int i = 0; i < v.size(); ++i)
        if (!is_zero(v(i)))
            out.entries.emplace_back(i, FieldTraits<Scalar>::format(v(i)));
    return out;
}

template <typename Scalar>
SuiteRun render_run(const CheckSuiteResult<Scalar>& result, const HopfAlgebra<Scalar>& H, std::string source)
{
    SuiteRun run{H.name(), std::move(source), current_field<Scalar>().str(), H.dim(), {}, result.notes,
                 result.overall, result.seconds};
    for (const auto& c : result.checks)
    {
        RenderedCheck rc{c.group, c.report.axiom, c.report.passed, c.detail, std::nullopt};
        if (const auto& w = c.report.witness)
            rc.witness = RenderedWitness{w->tuple, w->input, render_vector(w->lhs, w->lhs_text),
                                         render_vector(w->rhs, w->rhs_text)};
        run.checks.push_back(std::move(rc));
    }
    return run;
}

/// Human-readable report; witnesses print as "input ↦ lhs (other side: rhs)".
std::string text_report(const std::string& suite, const std::vector<SuiteRun>& runs);

/// The machine-readable report documented in docs/report-schema.md.
std::string machine_report(const std::string& suite, const std::vector<SuiteRun>& runs);

/// Version of the machine-readable schema.
inline constexpr int report_schema_version = 1;

}  // namespace ydl

#endif
