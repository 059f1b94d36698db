#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "conerank/rational.hpp"

namespace conerank {

/// A point or direction in criteria space with exact coordinates.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : coords_(dim, Rational(0)) {}
    explicit Vector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Vector(std::initializer_list<Rational> coords) : coords_(coords) {}

    static Vector from_doubles(std::span<const double> xs)
    {
        Vector v(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            v[i] = from_double(xs[i]);
        }
        return v;
    }

    static Vector unit(std::size_t dim, std::size_t axis, int s = 1)
    {
        Vector v(dim);
        v[axis] = s;
        return v;
    }

    std::size_t size() const noexcept { return coords_.size(); }
    bool empty() const noexcept { return coords_.empty(); }

    Rational& operator[](std::size_t i) { return coords_[i]; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }
    auto begin() { return coords_.begin(); }
    auto end() { return coords_.end(); }

    const std::vector<Rational>& coords() const noexcept { return coords_; }

    bool is_zero() const
    {
        return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
    }

    std::vector<double> to_doubles() const
    {
        std::vector<double> out(size());
        for (std::size_t i = 0; i < size(); ++i) {
            out[i] = coords_[i].get_d();
        }
        return out;
    }

    std::vector<std::string> to_strings() const
    {
        std::vector<std::string> out;
        out.reserve(size());
        for (const auto& q : coords_) {
            out.push_back(q.get_str());
        }
        return out;
    }

    Vector& operator+=(const Vector& o)
    {
        for (std::size_t i = 0; i < size(); ++i) {
            coords_[i] += o[i];
        }
        return *this;
    }
    Vector& operator-=(const Vector& o)
    {
        for (std::size_t i = 0; i < size(); ++i) {
            coords_[i] -= o[i];
        }
        return *this;
    }
    Vector& operator*=(const Rational& s)
    {
        for (auto& q : coords_) {
            q *= s;
        }
        return *this;
    }

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(Vector a, const Rational& s) { return a *= s; }
    friend Vector operator*(const Rational& s, Vector a) { return a *= s; }
    friend Vector operator-(Vector a)
    {
        for (auto& q : a.coords_) {
            q = -q;
        }
        return a;
    }

    friend bool operator==(const Vector& a, const Vector& b) { return a.coords_ == b.coords_; }

    /// Lexicographic order; used for deterministic output.
    friend bool operator<(const Vector& a, const Vector& b)
    {
        return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
    }

private:
    std::vector<Rational> coords_;
};

inline Rational dot(const Vector& a, const Vector& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

inline Rational l1_norm(const Vector& v)
{
    Rational s = 0;
    for (const auto& q : v) {
        s += abs(q);
    }
    return s;
}

/// Scales a nonzero vector to unit L1 norm. Nonnegative weights end up summing to one.
inline Vector normalized_l1(Vector v)
{
    Rational n = l1_norm(v);
    if (n != 0) {
        v *= Rational(1) / n;
    }
    return v;
}

inline Vector vec(std::initializer_list<double> xs)
{
    std::vector<double> tmp(xs);
    return Vector::from_doubles(tmp);
}

} // namespace conerank
