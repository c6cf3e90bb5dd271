#include "ydl/suite_report.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ydl {

namespace {

using ojson = nlohmann::ordered_json;

std::string seconds_text(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

ojson vector_json(const RenderedVector& v)
{
    ojson entries = ojson::array();
    for (const auto& [i, c] : v.entries)
        entries.push_back(ojson::array({i, c}));
    return {{"text", v.text}, {"dim", v.dim}, {"entries", entries}};
}

ojson witness_json(const std::optional<RenderedWitness>& w)
{
    if (!w)
        return nullptr;
    return {{"input", w->input}, {"tuple", w->tuple}, {"lhs", vector_json(w->lhs)}, {"rhs", vector_json(w->rhs)}};
}

int failures(const SuiteRun& run)
{
    int n = 0;
    for (const auto& c : run.checks)
        n += c.passed ? 0 : 1;
    return n;
}

bool all_runs_pass(const std::vector<SuiteRun>& runs)
{
    for (const auto& r : runs)
        if (!r.overall)
            return false;
    return true;
}

}  // namespace

std::string text_report(const std::string& suite, const std::vector<SuiteRun>& runs)
{
    std::ostringstream os;
    for (const auto& run : runs)
    {
        os << "== " << suite << " on " << run.algebra << " [" << run.source << ", " << run.field << ", dim "
           << run.dim << "]\n";
        for (const auto& c : run.checks)
        {
            os << (c.passed ? "  pass  " : "  FAIL  ") << c.group << ": " << c.name << "\n";
            if (!c.detail.empty())
                os << "        " << c.detail << "\n";
            if (c.witness)
                os << "        witness " << c.witness->input << " ↦ " << c.witness->lhs.text
                   << " (other side: " << c.witness->rhs.text << ")\n";
        }
        for (const auto& n : run.notes)
            os << "  note  " << n << "\n";
        const int bad = failures(run);
        os << "  " << (run.overall ? "PASS" : "FAIL") << " " << run.checks.size() - bad << "/" << run.checks.size()
           << " checks in " << seconds_text(run.seconds) << " s\n";
    }
    if (runs.size() > 1)
        os << "overall: " << (all_runs_pass(runs) ? "PASS" : "FAIL") << " (" << runs.size() << " algebras)\n";
    return os.str();
}

std::string machine_report(const std::string& suite, const std::vector<SuiteRun>& runs)
{
    ojson out;
    out["schema"] = "ydl-check-report";
    out["version"] = report_schema_version;
    out["suite"] = suite;
    out["overall"] = all_runs_pass(runs);
    ojson list = ojson::array();
    for (const auto& run : runs)
    {
        ojson r;
        r["algebra"] = run.algebra;
        r["source"] = run.source;
        r["field"] = run.field;
        r["dim"] = run.dim;
        r["overall"] = run.overall;
        const int bad = failures(run);
        r["summary"] = {{"checks", run.checks.size()}, {"passed", run.checks.size() - bad}, {"failed", bad}};
        r["wall_seconds"] = std::stod(seconds_text(run.seconds));
        ojson checks = ojson::array();
        for (const auto& c : run.checks)
            checks.push_back({{"group", c.group},
                              {"name", c.name},
                              {"passed", c.passed},
                              {"detail", c.detail},
                              {"witness", witness_json(c.witness)}});
        r["checks"] = checks;
        r["notes"] = run.notes;
        list.push_back(r);
    }
    out["runs"] = list;
    return out.dump(2) + "\n";
}

}  // namespace ydl
