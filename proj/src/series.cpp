#include "purecross/series.hpp"

#include <algorithm>

namespace purecross {

namespace {

std::size_t idx(int k) { return static_cast<std::size_t>(k); }

}  // namespace

Series::Series(int order)
    : order_(order), coeffs_(idx(order) + 1)
{
    if (order < 0) throw SeriesError("negative series order");
}

Series::Series(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs))
{
    if (order < 0) throw SeriesError("negative series order");
    coeffs_.resize(idx(order) + 1);
}

Series Series::constant(int order, const Rational& c)
{
    Series s(order);
    s.coeffs_[0] = c;
    return s;
}

Series Series::x(int order)
{
    Series s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
}

Series Series::x_over_one_minus_x(int order)
{
    Series s(order);
    for (int k = 1; k <= order; ++k) s.coeffs_[idx(k)] = 1;
    return s;
}

Series Series::x_over_one_plus_x(int order)
{
    Series s(order);
    for (int k = 1; k <= order; ++k) s.coeffs_[idx(k)] = (k % 2) ? 1 : -1;
    return s;
}

Series Series::inverse_one_plus_x(int order)
{
    Series s(order);
    for (int k = 0; k <= order; ++k) s.coeffs_[idx(k)] = (k % 2) ? -1 : 1;
    return s;
}

const Rational& Series::operator[](int k) const
{
    if (k < 0 || k > order_) throw SeriesError("coefficient x^" + std::to_string(k) + " is beyond order " + std::to_string(order_));
    return coeffs_[idx(k)];
}

Series Series::truncated(int order) const
{
    if (order > order_) throw SeriesError("cannot raise series order by truncation");
    return Series(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Series Series::shift_up() const
{
    std::vector<Rational> c(idx(order_) + 2);
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
    return Series(order_ + 1, std::move(c));
}

Series Series::shift_down() const
{
    if (coeffs_[0] != 0) throw SeriesError("division by x needs a zero constant term");
    if (order_ == 0) throw SeriesError("division by x of an order-0 series leaves nothing");
    return Series(order_ - 1, std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

Series Series::derivative() const
{
    // Differentiation lowers the known order by one.
    if (order_ == 0) return Series(0);
    Series d(order_ - 1);
    for (int k = 1; k <= order_; ++k) d.coeffs_[idx(k - 1)] = coeffs_[idx(k)] * k;
    return d;
}

Series Series::reciprocal() const
{
    if (coeffs_[0] == 0) throw SeriesError("reciprocal of a series with zero constant term");
    Series r(order_);
    const Rational inv0 = 1 / coeffs_[0];
    r.coeffs_[0] = inv0;
    for (int k = 1; k <= order_; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += coeffs_[idx(j)] * r.coeffs_[idx(k - j)];
        r.coeffs_[idx(k)] = -acc * inv0;
    }
    return r;
}

Series Series::pow(int k) const
{
    if (k < 0) throw SeriesError("negative power");
    Series result = constant(order_, 1);
    Series base = *this;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

Series Series::operator-() const
{
    Series s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

Series& Series::operator+=(const Series& g)
{
    if (g.order_ < order_) *this = truncated(g.order_);
    for (int k = 0; k <= order_; ++k) coeffs_[idx(k)] += g.coeffs_[idx(k)];
    return *this;
}

Series& Series::operator-=(const Series& g)
{
    if (g.order_ < order_) *this = truncated(g.order_);
    for (int k = 0; k <= order_; ++k) coeffs_[idx(k)] -= g.coeffs_[idx(k)];
    return *this;
}

Series& Series::operator*=(const Series& g)
{
    const int n = std::min(order_, g.order_);
    std::vector<Rational> out(idx(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (coeffs_[idx(i)] == 0) continue;
        for (int j = 0; i + j <= n; ++j) out[idx(i + j)] += coeffs_[idx(i)] * g.coeffs_[idx(j)];
    }
    order_ = n;
    coeffs_ = std::move(out);
    return *this;
}

Series& Series::operator*=(const Rational& s)
{
    for (auto& c : coeffs_) c *= s;
    return *this;
}

bool Series::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

std::string Series::to_string() const
{
    std::string out;
    for (int k = 0; k <= order_; ++k) {
        const Rational& c = coeffs_[idx(k)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += purecross::to_string(mag);
        if (k == 1) out += "*x";
        if (k > 1) out += "*x^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

nlohmann::json Series::to_json() const
{
    auto out = nlohmann::json::array();
    for (const auto& c : coeffs_) out.push_back(purecross::to_string(c));
    return out;
}

Series add(const Series& f, const Series& g) { return f + g; }
Series mul(const Series& f, const Series& g) { return f * g; }

Series compose(const Series& f, const Series& g)
{
    if (g[0] != 0) throw SeriesError("inner series of a composition must vanish at 0");
    const int n = std::min(f.order(), g.order());
    const Series inner = g.truncated(n);
    // Horner: f_n, then (acc * g + f_k) down to k = 0.
    Series acc = Series::constant(n, f[n]);
    for (int k = n - 1; k >= 0; --k) {
        acc *= inner;
        acc += Series::constant(n, f[k]);
    }
    return acc;
}

Series reversion(const Series& f)
{
    const int n = f.order();
    if (n < 1) throw SeriesError("reversion needs order >= 1");
    if (f[0] != 0) throw SeriesError("reversion needs f(0) == 0");
    if (f[1] == 0) throw SeriesError("reversion needs a nonzero linear coefficient");

    // Newton on f(g) = x: g <- g - (f(g) - x) / f'(g). The derivative is only
    // known to order n-1, which is enough because the correction term
    // f(g) - x vanishes at x^0 and x^1 once g is correct to order 1.
    const Series fprime = f.derivative();
    const Series target = Series::x(n);
    Series g = Series::x(n) * (1 / f[1]);
    for (int pass = 0; pass <= n + 1; ++pass) {
        const Series residual = compose(f, g) - target;
        if (residual == Series::zero(n)) return g;
        Series denom = compose(fprime, g.truncated(std::max(n - 1, 0)));
        // residual has zero terms through x^1, so residual / denom is exact to
        // order n even though denom stops at n-1.
        Series step = (residual.shift_down() * denom.reciprocal()).shift_up();
        g -= step;
    }
    throw SeriesError("reversion did not converge");
}

Series solve_D(const Series& c)
{
    if (c[0] != 0) throw SeriesError("solve_D needs c(0) == 0");
    const int n = c.order();
    const Series one = Series::constant(n, 1);
    Series d = one;
    for (int pass = 0; pass <= n + 1; ++pass) {
        Series next = one + compose(c, d.shift_up());
        if (next == d) return d;
        d = std::move(next);
    }
    throw SeriesError("solve_D did not reach a fixed point");
}

}  // namespace purecross
