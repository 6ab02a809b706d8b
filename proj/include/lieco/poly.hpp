#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lieco/scalar.hpp"

namespace lieco {

// Dense univariate polynomial, coefficients lowest degree first.
// The zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }

    static Poly monomial(std::size_t deg, Scalar coef = Scalar(1)) {
        std::vector<Scalar> c(deg + 1);
        c[deg] = std::move(coef);
        return Poly(std::move(c));
    }

    const std::vector<Scalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Scalar& lead() const { return c_.back(); }
    Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(); }

    Scalar operator()(const Scalar& x) const {
        Scalar acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        Scalar inv = lead().inv();
        std::vector<Scalar> c = c_;
        for (auto& x : c) x *= inv;
        return Poly(std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // (quotient, remainder); throws DivisionByZero on b = 0
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DivisionByZero();
        std::vector<Scalar> r = a.c_;
        if (a.degree() < b.degree()) return {Poly(), a};
        std::vector<Scalar> q(r.size() - b.c_.size() + 1);
        Scalar inv = b.lead().inv();
        for (std::size_t k = q.size(); k-- > 0;) {
            Scalar t = r[k + b.c_.size() - 1] * inv;
            if (t.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= t * b.c_[j];
            q[k] = std::move(t);
        }
        return {Poly(std::move(q)), Poly(std::move(r))};
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c_[k].str() + ")";
            if (k > 0) out += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

// Monic gcd by the Euclidean algorithm; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

}  // namespace lieco
