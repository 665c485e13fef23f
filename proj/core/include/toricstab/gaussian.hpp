#ifndef TORICSTAB_GAUSSIAN_HPP
#define TORICSTAB_GAUSSIAN_HPP

#include "toricstab/rational.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace toric {

/// Element of Q(i): an exact complex number with rational real and
/// imaginary parts. All arithmetic is exact; there is no rounding
/// anywhere in the library.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational real, Rational imag)
        : re(std::move(real)), im(std::move(imag)) {}
    explicit GaussianRational(long long real) : re(real), im(0) {}
    explicit GaussianRational(const Rational& real) : re(real), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conjugate() const { return {re, -im}; }
    /// |z|^2 as a rational; zero iff z is zero.
    Rational norm2() const { return re * re + im * im; }

    /// Multiplicative inverse; throws ValidationError on zero.
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    bool operator==(const GaussianRational& o) const = default;
};

GaussianRational operator+(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(GaussianRational a, const GaussianRational& b);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

/// Lexicographic order on (re, im); used only for canonical serialization.
bool operator<(const GaussianRational& a, const GaussianRational& b);

/// Canonical wire form "p/q+r/s*i" (both parts always present, reduced,
/// denominators positive, imaginary sign between the parts).
std::string gaussian_string(const GaussianRational& z);

/// Parses the canonical form plus the shorthands "p/q" (real) and
/// "r/s*i" (imaginary); fractions may omit "/1". Throws ValidationError.
GaussianRational parse_gaussian(std::string_view text);

}  // namespace toric

#endif
