#pragma once

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lieco {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Element of Q(i). mpq_class keeps both parts canonical (positive
// denominators, lowest terms) after every operation.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(const mpq_class& re) : re_(re) {}
    Scalar(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {}
    Scalar(long num, long den) {
        if (den == 0) throw DivisionByZero();
        re_ = mpq_class(mpz_class(num), mpz_class(den));
        re_.canonicalize();
    }

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& b) {
        re_ += b.re_;
        if (sgn(b.im_) != 0) im_ += b.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& b) {
        re_ -= b.re_;
        if (sgn(b.im_) != 0) im_ -= b.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& b) {
        if (sgn(im_) == 0 && sgn(b.im_) == 0) {
            re_ *= b.re_;
            return *this;
        }
        mpq_class r = re_ * b.re_ - im_ * b.im_;
        mpq_class m = re_ * b.im_ + im_ * b.re_;
        re_.swap(r);
        im_.swap(m);
        return *this;
    }
    Scalar& operator/=(const Scalar& b) { return *this *= b.inv(); }

    // |z|^2
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    Scalar inv() const {
        if (is_zero()) throw DivisionByZero();
        if (sgn(im_) == 0) return Scalar(mpq_class(1) / re_);
        mpq_class n = norm();
        return Scalar(mpq_class(re_ / n), mpq_class(-im_ / n));
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;
    static Scalar parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

inline std::optional<Scalar> checked_div(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) return std::nullopt;
    return a / b;
}

// Canonical text: "a/b", "c/d*i", "a/b+c/d*i"; unit imaginary parts print as "i" / "-i".
inline std::string Scalar::str() const {
    bool has_re = sgn(re_) != 0, has_im = sgn(im_) != 0;
    if (!has_re && !has_im) return "0";
    std::string out;
    if (has_re) out = re_.get_str();
    if (has_im) {
        std::string m;
        if (im_ == 1) m = "i";
        else if (im_ == -1) m = "-i";
        else m = im_.get_str() + "*i";
        if (has_re && m[0] != '-') out += '+';
        out += m;
    }
    return out;
}

namespace detail {

inline mpq_class parse_rational(std::string_view t, std::string_view whole) {
    auto bad = [&] { return ParseError("malformed scalar '" + std::string(whole) + "'"); };
    if (t.empty()) throw bad();
    std::size_t slash = t.find('/');
    auto digits = [](std::string_view d) {
        if (d.empty()) return false;
        for (char c : d)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = t.substr(0, slash);
    bool neg = false;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
        neg = num[0] == '-';
        num.remove_prefix(1);
    }
    if (!digits(num)) throw bad();
    mpz_class n{std::string(num)}, d{1};
    if (slash != std::string_view::npos) {
        std::string_view den = t.substr(slash + 1);
        if (!digits(den)) throw bad();
        d = mpz_class(std::string(den));
        if (d == 0) throw DivisionByZero();
    }
    mpq_class q(n, d);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty scalar");
    mpq_class re(0), im(0);
    bool seen_re = false, seen_im = false;
    std::size_t start = 0;
    while (start < s.size()) {
        std::size_t end = start + 1;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string_view term(s.data() + start, end - start);
        if (term.back() == 'i') {
            if (seen_im) throw ParseError("malformed scalar '" + s + "'");
            seen_im = true;
            std::string_view coef = term.substr(0, term.size() - 1);
            if (!coef.empty() && coef.back() == '*') {
                coef.remove_suffix(1);
                im = detail::parse_rational(coef, s);
            } else if (coef.empty() || coef == "+") {
                im = 1;
            } else if (coef == "-") {
                im = -1;
            } else {
                throw ParseError("malformed scalar '" + s + "'");
            }
        } else {
            if (seen_re || seen_im) throw ParseError("malformed scalar '" + s + "'");
            seen_re = true;
            re = detail::parse_rational(term, s);
        }
        start = end;
    }
    return Scalar(re, im);
}

}  // namespace lieco
