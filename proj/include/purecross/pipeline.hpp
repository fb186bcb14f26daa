#pragma once

#include "purecross/bijections.hpp"
#include "purecross/numeric.hpp"
#include "purecross/series.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace purecross {

/// Raised when the series pipeline and brute-force enumeration disagree, or
/// when an input series breaks a pipeline precondition.
class PipelineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 1 + sum |P(n)| x^n via the Bell triangle.
Series bell_series(int order);

/// From x D(x) = F and F^{-1}(w) = w / (1 + C(w)): C(w) = w / F^{-1}(w) - 1.
Series derive_C_from_D(const Series& d);
/// Inverts C(x) = B(x / (1 - x)) by substituting x / (1 + x).
Series derive_B_from_C(const Series& c);
/// A = (B - x) / (1 + x); requires b_1 == 1.
Series derive_A_from_B(const Series& b);

/// The four generating functions A, B, C, D at a common order.
struct GeneratingFunctions {
    Series a;
    Series b;
    Series c;
    Series d;

    const Series& get(char which) const;
};

/// Bell -> D -> C -> B -> A.
GeneratingFunctions backward_pipeline(int order);

/// A -> B -> C -> D using B = x + (1 + x) A, C = B(x / (1 - x)) and
/// D = 1 + C(x D). The returned struct carries `a` unchanged.
GeneratingFunctions forward_weighted(const Series& a);

/**
 * A(x) for a weight assignment: a_n = sum over PC(n) of a(pi).
 *
 * Unlisted partitions carry the default weight, so
 * a_n = default * |PC(n)| + sum over listed pi of size n of (a(pi) - default),
 * with |PC(n)| taken from the backward pipeline. No enumeration is needed.
 */
Series weighted_a_series(const WeightAssignment& w, int order);

/// Series A, B, C or D for `order`, weighted when `w` is given.
Series series_for(char which, int order, const WeightAssignment* w = nullptr);

struct WeightedCoefficients {
    Rational a;
    Rational b;
    Rational c;
    Rational d;
    friend bool operator==(const WeightedCoefficients&, const WeightedCoefficients&) = default;
};

/// Direct sums of a, b, c, d over PC(n), PC+(n), CO(n) and P(n).
WeightedCoefficients weighted_brute_coeffs(int n, const WeightAssignment& w);

struct CountsRow {
    int n;
    BigInt pc;
    BigInt pc_plus;
    BigInt co;
    BigInt all;
    friend bool operator==(const CountsRow&, const CountsRow&) = default;
};

struct CountsTable {
    std::vector<CountsRow> rows;

    /// Header "n\tPC\tPC+\tCO\tP", one line per row.
    std::string to_tsv() const;
    nlohmann::json to_json() const;
};

/**
 * Counts for n = 1..max_n from the backward series pipeline. Rows with
 * n <= check_enum_up_to are recounted by enumeration and any disagreement
 * throws PipelineError.
 */
CountsTable table(int max_n, int check_enum_up_to = 0, unsigned workers = 1);

/// (2n choose n) / (n + 1).
BigInt catalan(int n);

}  // namespace purecross
