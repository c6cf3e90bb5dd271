#ifndef YDL_ERRORS_HPP
#define YDL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ydl {

/// Operand shapes do not fit (composition, tensor legs, structure-map sizes).
class ShapeError : public std::invalid_argument
{
    public:
        using std::invalid_argument::invalid_argument;
};

/// A square map that has no inverse.
class SingularError : public std::domain_error
{
    public:
        SingularError(const std::string& what, int rank, int size)
            : std::domain_error(what), rank_(rank), size_(size)
        {
        }
        int rank() const noexcept { return rank_; }
        int size() const noexcept { return size_; }

    private:
        int rank_;
        int size_;
};

/// Input does not have the shape an extraction requires (e.g. actions not m (x) id).
class StructuralError : public std::invalid_argument
{
    public:
        using std::invalid_argument::invalid_argument;
};

/// A named hypothesis of a driver is violated by the supplied instance.
class PreconditionError : public std::logic_error
{
    public:
        using std::logic_error::logic_error;
};

/// An intermediate identity of an extraction failed; what() names the equation.
class ConsistencyError : public std::runtime_error
{
    public:
        ConsistencyError(const std::string& equation, const std::string& detail)
            : std::runtime_error(equation + ": " + detail), equation_(equation)
        {
        }
        const std::string& equation() const noexcept { return equation_; }

    private:
        std::string equation_;
};

/// A constructor refused data that fails one of its axioms.
class AxiomError : public std::runtime_error
{
    public:
        AxiomError(const std::string& axiom, const std::string& detail)
            : std::runtime_error(axiom + " fails: " + detail), axiom_(axiom)
        {
        }
        const std::string& axiom() const noexcept { return axiom_; }

    private:
        std::string axiom_;
};

/// An extraction needs a symmetric braiding and the one supplied is not.
class SymmetryError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

}  // namespace ydl

#endif
