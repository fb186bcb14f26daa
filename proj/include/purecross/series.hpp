#pragma once

#include "purecross/numeric.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace purecross {

class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/**
 * Truncated formal power series c_0 + c_1 x + ... + c_N x^N over exact
 * rationals. N is the order: every coefficient up to x^N is exact and
 * nothing beyond it is known.
 *
 * Operations never extend precision they do not have. Binary operations on
 * series of different orders truncate to the smaller order; `shift_down`
 * loses one order and `shift_up` gains one.
 */
class Series {
public:
    explicit Series(int order = 0);
    /// Coefficients beyond `order` are dropped, missing ones are zero.
    Series(int order, std::vector<Rational> coeffs);

    static Series zero(int order) { return Series(order); }
    static Series constant(int order, const Rational& c);
    /// The identity series x.
    static Series x(int order);
    /// x / (1 - x) = x + x^2 + ...
    static Series x_over_one_minus_x(int order);
    /// x / (1 + x) = x - x^2 + ...
    static Series x_over_one_plus_x(int order);
    /// 1 / (1 + x)
    static Series inverse_one_plus_x(int order);

    int order() const noexcept { return order_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^k; throws if k is past the order.
    const Rational& operator[](int k) const;

    Series truncated(int order) const;
    /// Multiplies by x; order grows by one.
    Series shift_up() const;
    /// Divides by x; requires a zero constant term and loses one order.
    Series shift_down() const;
    Series derivative() const;
    /// 1 / f; requires a nonzero constant term.
    Series reciprocal() const;
    /// f^k for k >= 0.
    Series pow(int k) const;

    Series operator-() const;
    Series& operator+=(const Series& g);
    Series& operator-=(const Series& g);
    Series& operator*=(const Series& g);
    Series& operator*=(const Rational& s);

    friend Series operator+(Series f, const Series& g) { return f += g; }
    friend Series operator-(Series f, const Series& g) { return f -= g; }
    friend Series operator*(Series f, const Series& g) { return f *= g; }
    friend Series operator*(Series f, const Rational& s) { return f *= s; }
    friend Series operator*(const Rational& s, Series f) { return f *= s; }
    /// f / g; requires g(0) != 0.
    friend Series operator/(const Series& f, const Series& g) { return f * g.reciprocal(); }

    friend bool operator==(const Series&, const Series&) = default;

    /// True iff every coefficient has denominator 1.
    bool is_integral() const;

    /// "c0 + c1*x + c2*x^2 + ..." with rationals as p/q; zero terms omitted.
    std::string to_string() const;
    /// Array of coefficient strings, x^0 first.
    nlohmann::json to_json() const;

private:
    int order_;
    std::vector<Rational> coeffs_;
};

Series add(const Series& f, const Series& g);
Series mul(const Series& f, const Series& g);

/// f(g(x)); requires g(0) == 0. The result has order min(f, g).
Series compose(const Series& f, const Series& g);

/// Compositional inverse of f; requires f(0) == 0 and f'(0) != 0.
Series reversion(const Series& f);

/**
 * The unique D with D(0) = 1 and D = 1 + c(x D) through c's order.
 * Requires c(0) == 0. Solved by fixed-point iteration, which gains at least
 * one exact coefficient per pass.
 */
Series solve_D(const Series& c);

}  // namespace purecross
