#include "toricstab/gaussian.hpp"

#include "toricstab/errors.hpp"

#include <cctype>

namespace toric {

namespace {

bool valid_integer_token(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

}  // namespace

std::string fraction_string(const Rational& value)
{
    return numerator(value).str() + "/" + denominator(value).str();
}

Rational parse_fraction(std::string_view text)
{
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos
                               ? std::string_view("1")
                               : text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw ValidationError("malformed rational: '" + std::string(text) + "'");
    BigInt p{std::string(num)};
    BigInt q{std::string(den)};
    if (q == 0)
        throw ValidationError("zero denominator in rational: '" + std::string(text) + "'");
    return Rational(p, q);
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero())
        throw ValidationError("division by zero Gaussian rational");
    const Rational n = norm2();
    return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    const Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    return *this *= o.inverse();
}

GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b)
{
    GaussianRational r = a;
    return r *= b;
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b)
{
    GaussianRational r = a;
    return r /= b;
}

bool operator<(const GaussianRational& a, const GaussianRational& b)
{
    if (a.re != b.re)
        return a.re < b.re;
    return a.im < b.im;
}

std::string gaussian_string(const GaussianRational& z)
{
    std::string out = fraction_string(z.re);
    if (z.im < 0) {
        out += '-';
        out += fraction_string(-z.im);
    } else {
        out += '+';
        out += fraction_string(z.im);
    }
    out += "*i";
    return out;
}

GaussianRational parse_gaussian(std::string_view text)
{
    std::string_view s = text;
    bool has_imag = false;
    if (s.size() >= 2 && s.substr(s.size() - 2) == "*i") {
        has_imag = true;
        s.remove_suffix(2);
    }
    if (!has_imag)
        return GaussianRational(parse_fraction(s));

    // The parts contain only digits and '/', so any sign past position 0
    // separates the real part from the imaginary magnitude.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] == '+' || s[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos)
        return {Rational(0), parse_fraction(s)};

    Rational re = parse_fraction(s.substr(0, split));
    Rational im = parse_fraction(s.substr(split + 1));
    if (s[split] == '-')
        im = -im;
    return {std::move(re), std::move(im)};
}

}  // namespace toric
