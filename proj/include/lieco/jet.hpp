#pragma once

#include "lieco/scalar.hpp"

namespace lieco {

// Dual number v + d*eps with eps^2 = 0.
template <class T>
struct Jet {
    T v{};
    T d{};

    Jet() = default;
    Jet(T value) : v(std::move(value)) {}
    Jet(long value) : v(value) {}
    Jet(T value, T deriv) : v(std::move(value)), d(std::move(deriv)) {}

    bool is_zero() const { return v.is_zero() && d.is_zero(); }

    Jet operator-() const { return Jet(-v, -d); }
    Jet& operator+=(const Jet& b) {
        v += b.v;
        d += b.d;
        return *this;
    }
    Jet& operator-=(const Jet& b) {
        v -= b.v;
        d -= b.d;
        return *this;
    }
    Jet& operator*=(const Jet& b) {
        T nd = v * b.d;
        nd += d * b.v;
        v *= b.v;
        d = std::move(nd);
        return *this;
    }
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
    friend bool operator==(const Jet& a, const Jet& b) { return a.v == b.v && a.d == b.d; }
    friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }
};

}  // namespace lieco
