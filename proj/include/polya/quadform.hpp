#ifndef POLYA_QUADFORM_HPP
#define POLYA_QUADFORM_HPP

// Integral binary quadratic forms a x^2 + b xy + c y^2 as value triples,
// templated on the integer type so hot sweeps can run on machine words.
// The algorithms (reduction, composition, class groups) live in forms.hpp;
// this header only carries the type so field-level code can name forms
// without pulling in the whole machinery.

#include <numeric>
#include <ostream>
#include <type_traits>

#include <polya/intarith.hpp>

namespace polya {

namespace detail {

template <class I>
I gcd_any(const I& x, const I& y)
{
    if constexpr (std::is_integral_v<I>)
        return std::gcd(x, y);
    else
        return gcd(x, y);
}

template <class I>
I abs_any(const I& x)
{
    return x < 0 ? I(-x) : x;
}

// Floor division; the C++ quotient truncates toward zero instead.
template <class I>
I floor_div(const I& x, const I& y)
{
    I q = x / y;
    I r = x - q * y;
    if (r != 0 && ((r < 0) != (y < 0))) --q;
    return q;
}

} // namespace detail

template <class I>
struct basic_quad_form {
    I a{}, b{}, c{};

    I discriminant() const { return b * b - 4 * a * c; }

    bool primitive() const
    {
        return detail::gcd_any(detail::gcd_any(a, b), c) == 1;
    }

    friend bool operator==(const basic_quad_form& f, const basic_quad_form& g)
    {
        return f.a == g.a && f.b == g.b && f.c == g.c;
    }

    friend bool operator<(const basic_quad_form& f, const basic_quad_form& g)
    {
        if (f.a != g.a) return f.a < g.a;
        if (f.b != g.b) return f.b < g.b;
        return f.c < g.c;
    }

    friend std::ostream& operator<<(std::ostream& os, const basic_quad_form& f)
    {
        return os << '(' << f.a << ',' << f.b << ',' << f.c << ')';
    }
};

using QuadForm = basic_quad_form<Int>;

} // namespace polya

#endif
