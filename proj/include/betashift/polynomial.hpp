#pragma once

// Dense univariate polynomials over Q with the pieces needed to isolate and
// certify real algebraic numbers: Euclidean gcd, square-free part and Sturm
// root counting.

#include <utility>
#include <vector>

#include "rational.hpp"

namespace betashift {

class Polynomial {
public:
    Polynomial() = default;

    /// Coefficients in ascending order: coeffs[i] multiplies x^i.
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

    /// x^k
    static Polynomial monomial(std::size_t k, const Rational& c = Rational(1)) {
        std::vector<Rational> coeffs(k + 1);
        coeffs[k] = c;
        return Polynomial(std::move(coeffs));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& at) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * at + *it;
        }
        return acc;
    }

    int sign_at(const Rational& at) const { return sign((*this)(at)); }

    Polynomial derivative() const {
        if (c_.size() <= 1) {
            return {};
        }
        std::vector<Rational> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            out[i - 1] = c_[i] * static_cast<long>(i);
        }
        return Polynomial(std::move(out));
    }

    Polynomial monic() const {
        if (is_zero()) {
            return {};
        }
        const Rational lead = leading();
        std::vector<Rational> out(c_);
        for (auto& c : out) {
            c /= lead;
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = a.coeff(i) + b.coeff(i);
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = a.coeff(i) - b.coeff(i);
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        std::vector<Rational> out(p.c_);
        for (auto& c : out) {
            c *= s;
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Quotient and remainder of Euclidean division; divisor must be nonzero.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
        if (den.is_zero()) {
            throw Error(ErrorKind::InvalidInput, "polynomial division by zero");
        }
        std::vector<Rational> rem(num.c_);
        const int dd = den.degree();
        if (num.degree() < dd) {
            return {Polynomial{}, num};
        }
        std::vector<Rational> quot(num.c_.size() - den.c_.size() + 1);
        const Rational lead = den.leading();
        for (int i = num.degree(); i >= dd; --i) {
            const Rational factor = rem[i] / lead;
            quot[i - dd] = factor;
            if (factor == 0) {
                continue;
            }
            for (int j = 0; j <= dd; ++j) {
                rem[i - dd + j] -= factor * den.c_[j];
            }
        }
        rem.resize(dd);
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    friend Polynomial operator%(const Polynomial& num, const Polynomial& den) { return divmod(num, den).second; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
    }

    std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) is the zero polynomial.
inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline Polynomial square_free_part(const Polynomial& p) {
    if (p.degree() <= 0) {
        return p.monic();
    }
    const Polynomial g = gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

inline std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
    std::vector<Polynomial> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        Polynomial r = seq[seq.size() - 2] % seq.back();
        seq.push_back(Rational(-1) * r);
    }
    seq.pop_back();
    return seq;
}

inline int sign_variations(const std::vector<Polynomial>& seq, const Rational& at) {
    int variations = 0;
    int last = 0;
    for (const auto& q : seq) {
        const int s = q.sign_at(at);
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++variations;
        }
        last = s;
    }
    return variations;
}

/// Number of distinct real roots in the half-open interval (lo, hi].
inline int count_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.degree() <= 0 || hi <= lo) {
        return 0;
    }
    const auto seq = sturm_sequence(p);
    return sign_variations(seq, lo) - sign_variations(seq, hi);
}

} // namespace betashift
