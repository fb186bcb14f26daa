#include "purecross/pipeline.hpp"
#include "purecross/enumerate.hpp"

#include <algorithm>

namespace purecross {

Series bell_series(int order)
{
    if (order < 1) throw PipelineError("Bell series needs order >= 1");
    // Each triangle row starts with the last entry of the previous row; the
    // leading entries are the Bell numbers.
    std::vector<Rational> coeffs{1};
    std::vector<BigInt> row{1};
    for (int n = 1; n <= order; ++n) {
        std::vector<BigInt> next{row.back()};
        for (const auto& above : row) next.push_back(next.back() + above);
        row = std::move(next);
        coeffs.emplace_back(row.front());
    }
    return Series(order, std::move(coeffs));
}

Series derive_C_from_D(const Series& d)
{
    if (d[0] != 1) throw PipelineError("D must have constant term 1");
    const Series f = d.shift_up();
    const Series f_inv = reversion(f);
    // w / F^{-1}(w) is a unit series because F^{-1} = w + O(w^2).
    return f_inv.shift_down().reciprocal() - Series::constant(d.order(), 1);
}

Series derive_B_from_C(const Series& c)
{
    if (c[0] != 0) throw PipelineError("C must vanish at 0");
    return compose(c, Series::x_over_one_plus_x(c.order()));
}

Series derive_A_from_B(const Series& b)
{
    if (b.order() < 1 || b[1] != 1)
        throw PipelineError("B must have linear coefficient 1, got " + (b.order() < 1 ? std::string("none") : to_string(b[1])));
    return (b - Series::x(b.order())) * Series::inverse_one_plus_x(b.order());
}

const Series& GeneratingFunctions::get(char which) const
{
    switch (which) {
    case 'A': return a;
    case 'B': return b;
    case 'C': return c;
    case 'D': return d;
    }
    throw std::invalid_argument(std::string("unknown generating function '") + which + "'");
}

GeneratingFunctions backward_pipeline(int order)
{
    Series d = bell_series(order);
    Series c = derive_C_from_D(d);
    Series b = derive_B_from_C(c);
    Series a = derive_A_from_B(b);
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

GeneratingFunctions forward_weighted(const Series& a)
{
    if (a[0] != 0) throw PipelineError("A must vanish at 0");
    const int n = a.order();
    const Series x = Series::x(n);
    Series b = x + (Series::constant(n, 1) + x) * a;
    Series c = compose(b, Series::x_over_one_minus_x(n));
    Series d = solve_D(c);
    return {a, std::move(b), std::move(c), std::move(d)};
}

Series weighted_a_series(const WeightAssignment& w, int order)
{
    const Series unweighted = backward_pipeline(order).a;
    std::vector<Rational> coeffs(unweighted.coeffs());
    for (auto& c : coeffs) c *= w.default_weight();
    for (const auto& [pi, q] : w.entries())
        if (pi.size() <= order) coeffs[static_cast<std::size_t>(pi.size())] += q - w.default_weight();
    return Series(order, std::move(coeffs));
}

Series series_for(char which, int order, const WeightAssignment* w)
{
    if (!w) return backward_pipeline(order).get(which);
    return forward_weighted(weighted_a_series(*w, order)).get(which);
}

WeightedCoefficients weighted_brute_coeffs(int n, const WeightAssignment& w)
{
    WeightedCoefficients out;
    for_each_partition(n, PartitionClass::PurelyCrossing, [&](const Partition& p) { out.a += w.a(p); });
    for_each_partition(n, PartitionClass::PcPlus, [&](const Partition& p) { out.b += weight_b(p, w); });
    for_each_partition(n, PartitionClass::Connected, [&](const Partition& p) { out.c += weight_c(p, w); });
    for_each_partition(n, PartitionClass::All, [&](const Partition& p) { out.d += weight_d(p, w); });
    return out;
}

std::string CountsTable::to_tsv() const
{
    std::string out = "n\tPC\tPC+\tCO\tP\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + '\t' + to_string(r.pc) + '\t' + to_string(r.pc_plus) + '\t' + to_string(r.co) +
               '\t' + to_string(r.all) + '\n';
    }
    return out;
}

nlohmann::json CountsTable::to_json() const
{
    auto number = [](const BigInt& z) -> nlohmann::json {
        if (z.fits_slong_p()) return z.get_si();
        return to_string(z);
    };
    auto out = nlohmann::json::array();
    for (const auto& r : rows) {
        out.push_back({{"n", r.n},
                       {"PC", number(r.pc)},
                       {"PC+", number(r.pc_plus)},
                       {"CO", number(r.co)},
                       {"P", number(r.all)}});
    }
    return out;
}

CountsTable table(int max_n, int check_enum_up_to, unsigned workers)
{
    if (max_n < 1) throw PipelineError("table needs max_n >= 1");
    const auto gf = backward_pipeline(max_n);
    auto integral = [](const Rational& q, const char* what, int n) {
        if (q.get_den() != 1 || q < 0)
            throw PipelineError(std::string(what) + " coefficient at n=" + std::to_string(n) +
                                " is not a nonnegative integer: " + to_string(q));
        return BigInt(q.get_num());
    };
    CountsTable t;
    for (int n = 1; n <= max_n; ++n) {
        CountsRow row{n, integral(gf.a[n], "A", n), integral(gf.b[n], "B", n), integral(gf.c[n], "C", n),
                      integral(gf.d[n], "D", n)};
        if (n <= check_enum_up_to) {
            const CountsRow counted{n, count(n, PartitionClass::PurelyCrossing, workers),
                                    count(n, PartitionClass::PcPlus, workers),
                                    count(n, PartitionClass::Connected, workers), count(n, PartitionClass::All, workers)};
            if (counted != row) {
                throw PipelineError("series and enumeration disagree at n=" + std::to_string(n) + ": series (" +
                                    to_string(row.pc) + ", " + to_string(row.pc_plus) + ", " + to_string(row.co) + ", " +
                                    to_string(row.all) + ") vs enumeration (" + to_string(counted.pc) + ", " +
                                    to_string(counted.pc_plus) + ", " + to_string(counted.co) + ", " +
                                    to_string(counted.all) + ")");
            }
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

BigInt catalan(int n)
{
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    return binom / (n + 1);
}

}  // namespace purecross
