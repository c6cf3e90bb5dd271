#ifndef YDL_SUITES_HPP
#define YDL_SUITES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopf_algebra.hpp"
#include "report.hpp"

namespace ydl {

/// Unknown suite or a suite invoked without the inputs it needs.
class UsageError : public std::invalid_argument
{
    public:
        using std::invalid_argument::invalid_argument;
};

template <typename Scalar>
struct SuiteOptions
{
    // restricts the ydl and u suites to one example module
    std::optional<int> variant;
    // row-major coefficients of R in H (x) H
    std::optional<Vector<Scalar>> r;
    // zeta(e_i, e_j) = zeta(i, j)
    std::optional<Matrix<Scalar>> zeta;
    // supplies the catalog R and zeta when r or zeta is absent
    std::string catalog_key;
    // skip the Hopf battery that otherwise gates every suite
    bool unchecked = false;
};

/// One line of a suite: a named check, a free-form detail and the witness behind it.
template <typename Scalar>
struct SuiteCheck
{
    std::string group;
    AxiomReport<Scalar> report;
    std::string detail;
};

template <typename Scalar>
struct CheckSuiteResult
{
    std::string suite;
    std::vector<SuiteCheck<Scalar>> checks;
    std::vector<std::string> notes;
    bool overall = true;
    double seconds = 0;
};

/// hopf, ydl, symmetry, pseudosymmetry, u, qt, cqt, roundtrip, all.
const std::vector<std::string>& suite_names();

template <typename Scalar>
CheckSuiteResult<Scalar> run_suite(const std::string& name, const HopfAlgebra<Scalar>& H,
                                   const SuiteOptions<Scalar>& options = {});

/// The R the catalog pairs with `key`, if any.
template <typename Scalar>
std::optional<Vector<Scalar>> catalog_r(const std::string& key);

/// The coquasitriangular form the catalog pairs with `key`, if any.
template <typename Scalar>
std::optional<Matrix<Scalar>> catalog_zeta(const std::string& key);

}  // namespace ydl

#endif
