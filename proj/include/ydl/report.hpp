#ifndef YDL_REPORT_HPP
#define YDL_REPORT_HPP

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "linear_map.hpp"

namespace ydl {

/// Basis names, one list per tensor leg.
using Labels = std::vector<std::vector<std::string>>;

inline Labels concat(Labels a, const Labels& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline Legs leg_sizes(const Labels& labels)
{
    Legs out;
    for (const auto& leg : labels)
        out.push_back(static_cast<int>(leg.size()));
    return out;
}

inline std::string basis_term(int index, const Labels& labels)
{
    const auto digits = split_index(index, leg_sizes(labels));
    std::string out;
    for (std::size_t k = 0; k < digits.size(); ++k)
    {
        if (k)
            out += "⊗";
        out += labels[k][digits[k]];
    }
    return out;
}

/// "x⊗1 + 2·gx⊗1"; the empty combination prints as "0".
template <typename Scalar>
std::string format_vector(const Vector<Scalar>& v, const Labels& labels)
{
    if (v.size() != leg_product(leg_sizes(labels)))
        throw ShapeError("format_vector: " + std::to_string(v.size()) + " coefficients for labels " +
                         legs_string(leg_sizes(labels)));
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i)
    {
        if (is_zero(v(i)))
            continue;
        Scalar c = v(i);
        bool negative = false;
        if constexpr (std::is_same_v<Scalar, Rational>)
        {
            negative = c < 0;
            if (negative)
                c = -c;
        }
        if (!out.empty())
            out += negative ? " - " : " + ";
        else if (negative)
            out += "-";
        const std::string term = basis_term(static_cast<int>(i), labels);
        if (term.empty())
            out += FieldTraits<Scalar>::format(c);
        else if (c == Scalar(1))
            out += term;
        else
            out += FieldTraits<Scalar>::format(c) + "·" + term;
    }
    return out.empty() ? "0" : out;
}

/// A basis input on which two sides of an identity disagree.
template <typename Scalar>
struct Witness
{
    std::vector<int> tuple;
    std::string input;
    Vector<Scalar> lhs;
    Vector<Scalar> rhs;
    std::string lhs_text;
    std::string rhs_text;
};

template <typename Scalar>
struct AxiomReport
{
    std::string axiom;
    bool passed = true;
    std::optional<Witness<Scalar>> witness;
};

template <typename Scalar>
Witness<Scalar> make_witness(int column, const Vector<Scalar>& lhs, const Vector<Scalar>& rhs, const Labels& in,
                             const Labels& out)
{
    Witness<Scalar> w;
    w.tuple = split_index(column, leg_sizes(in));
    w.input = basis_term(column, in);
    if (w.input.empty())
        w.input = "1";
    w.lhs = lhs;
    w.rhs = rhs;
    w.lhs_text = format_vector(lhs, out);
    w.rhs_text = format_vector(rhs, out);
    return w;
}

/// Compares two maps column by column and reports the first basis input where they differ.
template <typename Scalar>
AxiomReport<Scalar> compare(std::string axiom, const LinearMap<Scalar>& lhs, const LinearMap<Scalar>& rhs,
                            const Labels& in, const Labels& out)
{
    AxiomReport<Scalar> report{std::move(axiom), true, std::nullopt};
    if (auto j = first_difference(lhs, rhs))
    {
        report.passed = false;
        report.witness = make_witness(*j, lhs.column(*j), rhs.column(*j), in, out);
    }
    return report;
}

namespace detail {

/// Throws ConsistencyError naming the equation when the two sides differ.
template <typename Scalar>
void require_equal(const std::string& equation, const LinearMap<Scalar>& lhs, const LinearMap<Scalar>& rhs,
                   const Labels& in, const Labels& out)
{
    const auto rep = compare(equation, lhs, rhs, in, out);
    if (!rep.passed)
        throw ConsistencyError(equation, "at " + rep.witness->input + ": " + rep.witness->lhs_text +
                                             " != " + rep.witness->rhs_text);
}

}  // namespace detail

template <typename Scalar>
bool all_passed(const std::vector<AxiomReport<Scalar>>& reports)
{
    for (const auto& r : reports)
        if (!r.passed)
            return false;
    return true;
}

template <typename Scalar>
std::string describe(const AxiomReport<Scalar>& r)
{
    if (r.passed)
        return r.axiom + ": pass";
    std::string out = r.axiom + ": FAIL";
    if (r.witness)
        out += " at " + r.witness->input + ": " + r.witness->lhs_text + " != " + r.witness->rhs_text;
    return out;
}

template <typename Scalar>
const AxiomReport<Scalar>* first_failure(const std::vector<AxiomReport<Scalar>>& reports)
{
    for (const auto& r : reports)
        if (!r.passed)
            return &r;
    return nullptr;
}

}  // namespace ydl

#endif
