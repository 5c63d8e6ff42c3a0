#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace lprev {

/**
 * Exact rational number.
 *
 * Values whose reduced numerator and denominator fit in 63 bits are held
 * inline; anything larger is promoted to a heap-allocated GMP rational and
 * demoted again as soon as a result fits. The representation is always
 * reduced with a positive denominator, so equality is structural.
 */
class Rational {
public:
    Rational() noexcept = default;
    Rational(int value) noexcept : num_(value) {}
    Rational(long value);
    Rational(long long value);
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& value);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept = default;
    ~Rational() = default;

    /// Parses "p/q", "p" or a finite decimal such as "-0.25".
    static Rational parse(std::string_view text);

    /// "p/q", or "p" when the denominator is one.
    std::string to_string() const;

    int sign() const noexcept;
    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_integer() const noexcept;

    mpz_class numerator() const;
    mpz_class denominator() const;
    mpq_class to_mpq() const;
    double to_double() const;

    Rational operator-() const;
    Rational abs() const;
    Rational inverse() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) noexcept;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    /// Orders by absolute value of the numerator; used as a pivoting heuristic.
    static int compare_abs_numerators(const Rational& lhs, const Rational& rhs);

    std::size_t hash() const noexcept;

private:
    void assign_big(const mpq_class& value);
    void assign_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace lprev

template <>
struct std::hash<lprev::Rational> {
    std::size_t operator()(const lprev::Rational& value) const noexcept { return value.hash(); }
};
