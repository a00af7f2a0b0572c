#pragma once

#include <string>

namespace conway::sl2
{

// 2x2 matrix over a commutative coefficient ring T (Scalar or Series).
// T must be constructible from int and provide is_zero().
template <class T>
struct Mat2
{
    T a{0}, b{0}, c{0}, d{0};

    static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }
    static Mat2 diagonal(const T &x, const T &y) { return {x, T(0), T(0), y}; }

    T trace() const { return a + d; }
    T det() const { return a * d - b * c; }

    // Inverse assuming determinant one: the adjugate.
    Mat2 inverse_sl2() const { return {d, -b, -c, a}; }
    Mat2 inverse() const
    {
        T inv_det = T(1) / det();
        return {d * inv_det, -b * inv_det, -c * inv_det, a * inv_det};
    }

    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    Mat2 &operator*=(const Mat2 &o)
    {
        *this = *this * o;
        return *this;
    }
    friend Mat2 operator*(const Mat2 &x, const Mat2 &y)
    {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator*(const T &s, const Mat2 &m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
    friend Mat2 operator+(const Mat2 &x, const Mat2 &y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
    friend Mat2 operator-(const Mat2 &x, const Mat2 &y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    bool is_scalar_multiple_of_identity() const
    {
        return b.is_zero() && c.is_zero() && (a - d).is_zero();
    }
    bool is_identity() const { return (*this - identity()).is_zero(); }
    bool is_minus_identity() const { return (*this + identity()).is_zero(); }
    bool is_upper_triangular() const { return c.is_zero(); }

    friend bool operator==(const Mat2 &x, const Mat2 &y) { return (x - y).is_zero(); }

    Mat2 conjugated_by(const Mat2 &g) const { return g * (*this) * g.inverse_sl2(); }

    std::string to_string() const
    {
        return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " + d.to_string() + "]]";
    }
};

template <class T>
Mat2<T> commutator(const Mat2<T> &x, const Mat2<T> &y)
{
    return x * y * x.inverse_sl2() * y.inverse_sl2();
}

} // namespace conway::sl2
