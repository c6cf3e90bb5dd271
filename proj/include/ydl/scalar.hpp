#ifndef YDL_SCALAR_HPP
#define YDL_SCALAR_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

namespace ydl {

/// Exact rationals, always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

namespace detail {

inline thread_local std::uint64_t current_modulus = 0;

// Accepts "[+-]digits" and "[+-]digits/digits".
inline void split_fraction(std::string_view text, BigInt& num, BigInt& den)
{
    auto digits_ok = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view top = body.substr(0, slash);
    std::string_view bottom = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits_ok(top) || !digits_ok(bottom))
        throw std::invalid_argument("malformed scalar \"" + std::string(text) + "\" (expected \"p\" or \"p/q\")");
    num = BigInt(std::string(top));
    den = BigInt(std::string(bottom));
    if (den == 0)
        throw std::invalid_argument("malformed scalar \"" + std::string(text) + "\": zero denominator");
    if (negative)
        num = -num;
}

}  // namespace detail

/**
 * Element of the prime field F_p.  The modulus is a thread-local context set
 * with ModP::Scope; every element created inside a scope belongs to that
 * field.  Arithmetic outside any scope throws std::logic_error.
 */
class ModP
{
    public:
        class Scope
        {
            public:
                explicit Scope(std::uint64_t p) : previous_(detail::current_modulus)
                {
                    if (p < 2 || (p > 3 && !boost::multiprecision::miller_rabin_test(BigInt(p), 25)))
                        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
                    if (p >= (std::uint64_t(1) << 62))
                        throw std::invalid_argument("modulus " + std::to_string(p) + " too large (must be < 2^62)");
                    detail::current_modulus = p;
                }
                ~Scope() { detail::current_modulus = previous_; }
                Scope(const Scope&) = delete;
                Scope& operator=(const Scope&) = delete;

            private:
                std::uint64_t previous_;
        };

        static std::uint64_t modulus() noexcept { return detail::current_modulus; }

        ModP() = default;

        ModP(long long x)
        {
            if (x == 0)
                return;
            const auto p = static_cast<long long>(require_modulus());
            long long r = x % p;
            value_ = static_cast<std::uint64_t>(r < 0 ? r + p : r);
        }

        static ModP from_residue(std::uint64_t r) { ModP out; out.value_ = r % require_modulus(); return out; }

        std::uint64_t residue() const noexcept { return value_; }

        ModP operator-() const { return value_ == 0 ? *this : from_residue(require_modulus() - value_); }

        ModP& operator+=(const ModP& o)
        {
            const auto p = require_modulus();
            value_ = (value_ + o.value_) % p;
            return *this;
        }
        ModP& operator-=(const ModP& o)
        {
            const auto p = require_modulus();
            value_ = (value_ + p - o.value_) % p;
            return *this;
        }
        ModP& operator*=(const ModP& o)
        {
            const auto p = require_modulus();
            value_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(value_) * o.value_) % p);
            return *this;
        }
        ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

        friend ModP operator+(ModP a, const ModP& b) { return a += b; }
        friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
        friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
        friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
        friend bool operator==(const ModP& a, const ModP& b) { return a.value_ == b.value_; }
        friend bool operator!=(const ModP& a, const ModP& b) { return a.value_ != b.value_; }

        ModP inverse() const
        {
            const auto p = require_modulus();
            if (value_ == 0)
                throw std::domain_error("division by zero in F_" + std::to_string(p));
            // Fermat: a^(p-2)
            ModP base = *this, out = from_residue(1);
            for (std::uint64_t e = p - 2; e > 0; e >>= 1)
            {
                if (e & 1)
                    out *= base;
                base *= base;
            }
            return out;
        }

        friend std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.value_; }

    private:
        static std::uint64_t require_modulus()
        {
            if (detail::current_modulus == 0)
                throw std::logic_error("ModP arithmetic outside of a ModP::Scope");
            return detail::current_modulus;
        }

        std::uint64_t value_ = 0;
};

/// Field-specific parsing, printing and metadata.
template <typename Scalar>
struct FieldTraits;

template <>
struct FieldTraits<Rational>
{
    static std::uint64_t characteristic() { return 0; }
    static std::string name() { return "rational"; }
    static bool is_zero(const Rational& x) { return x.is_zero(); }

    static Rational parse(std::string_view text)
    {
        BigInt num, den;
        detail::split_fraction(text, num, den);
        return Rational(num, den);
    }

    static std::string format(const Rational& x) { return x.str(); }
};

template <>
struct FieldTraits<ModP>
{
    static std::uint64_t characteristic() { return ModP::modulus(); }
    static std::string name() { return "prime " + std::to_string(ModP::modulus()); }
    static bool is_zero(const ModP& x) { return x.residue() == 0; }

    static ModP parse(std::string_view text)
    {
        BigInt num, den;
        detail::split_fraction(text, num, den);
        const BigInt p(ModP::modulus());
        if (p == 0)
            throw std::logic_error("parsing a prime-field scalar outside of a ModP::Scope");
        auto reduce = [&](const BigInt& v) {
            BigInt r = v % p;
            if (r < 0)
                r += p;
            return ModP::from_residue(r.convert_to<std::uint64_t>());
        };
        return reduce(num) / reduce(den);
    }

    static std::string format(const ModP& x) { return std::to_string(x.residue()); }
};

template <typename Scalar>
bool is_zero(const Scalar& x)
{
    return FieldTraits<Scalar>::is_zero(x);
}

/// num/den as a field element.
template <typename Scalar>
Scalar fraction(long long num, long long den = 1)
{
    return Scalar(num) / Scalar(den);
}

}  // namespace ydl

namespace Eigen {

template <>
struct NumTraits<ydl::ModP> : GenericNumTraits<ydl::ModP>
{
    using Real = ydl::ModP;
    using NonInteger = ydl::ModP;
    using Literal = ydl::ModP;
    using Nested = ydl::ModP;
    enum
    {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static inline Real epsilon() { return Real(); }
    static inline Real dummy_precision() { return Real(); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif
