#pragma once

#include "purecross/numeric.hpp"
#include "purecross/partition.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace purecross {

/// Ordered positive parts (k_1, ..., k_l); part j stands for the interval
/// I_j = {k_1 + ... + k_{j-1} + 1, ..., k_1 + ... + k_j}.
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int total() const noexcept { return total_; }
    /// Interval I_j for 1 <= j <= length().
    AtomSet interval_of(int j) const;

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

/// Compositions of n with exactly `parts` parts (any number when parts <= 0),
/// in lexicographic order.
std::vector<Composition> compositions(int n, int parts = 0);

/// pi in PC(n) itself.
struct PcCase {
    Partition pi;
};
/// pi = sigma~, i.e. n adjoined to the block of 1 in sigma in PC(n-1).
struct TildeCase {
    Partition sigma;
};
using PcPlusSplit = std::variant<PcCase, TildeCase>;

/// Output of `phi_inv`: a PC+ base and the lengths of its maximal intervals.
struct PhiDecomposition {
    Partition sigma;
    Composition comp;
};

/// tau in NC(n); sigmas[j] is connected on |block j of tau| atoms.
struct PsiDecomposition {
    Partition tau;
    std::vector<Partition> sigmas;
};

/// sigma in CO(l) and l tails; tails may be `Partition::empty()`.
struct ThetaDecomposition {
    Partition sigma;
    std::vector<Partition> tails;
};

/// Adjoins atom n+1 to the block containing 1.
Partition adjoin_to_first_block(const Partition& sigma);

/// Splits PC+(n), n >= 2, into PC(n) and the image of PC(n-1) under ~.
PcPlusSplit pc_plus_decompose(const Partition& pi);

/// Replaces atom j of sigma by the interval I_j of `comp`.
Partition phi(const Partition& sigma, const Composition& comp);
/// Collapses maximal single-block intervals.
PhiDecomposition phi_inv(const Partition& pi);

Partition psi(const PsiDecomposition& dec);
PsiDecomposition psi_inv(const Partition& pi);

ThetaDecomposition theta(const Partition& pi);
Partition theta_inv(const ThetaDecomposition& dec);

/**
 * The weights a(pi) on purely crossing partitions.
 *
 * Unlisted members take `default_weight()`, which is 1 unless built with
 * `constant`, so the empty assignment reproduces plain counting.
 */
class WeightAssignment {
public:
    WeightAssignment() = default;
    static WeightAssignment constant(Rational value);

    /// Throws PartitionError if pi is not purely crossing.
    void set(const Partition& pi, Rational weight);
    /// a(pi); pi must be purely crossing.
    Rational a(const Partition& pi) const;

    const Rational& default_weight() const noexcept { return default_; }
    const std::map<Partition, Rational>& entries() const noexcept { return entries_; }

    /// [{"partition": "1,3|2,4", "weight": "7/2"}, ...]
    static WeightAssignment from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

private:
    Rational default_ = 1;
    std::map<Partition, Rational> entries_;
};

/// b on PC+: b(0_1) = 1, a(pi) on PC(n), a(sigma) on sigma~.
Rational weight_b(const Partition& pi, const WeightAssignment& w);
/// c on CO: b of the phi_inv base.
Rational weight_c(const Partition& pi, const WeightAssignment& w);
/// d on P: product of c over the psi_inv components; d(empty) = 1.
Rational weight_d(const Partition& pi, const WeightAssignment& w);

}  // namespace purecross
