#include "purecross/verify.hpp"
#include "purecross/enumerate.hpp"
#include "purecross/pipeline.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <sstream>

namespace purecross {

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

WeightAssignment random_weight_assignment(std::mt19937_64& rng, int max_size)
{
    WeightAssignment w;
    for (int n = 4; n <= max_size; ++n)
        for_each_partition(n, PartitionClass::PurelyCrossing, [&](const Partition& p) { w.set(p, random_rational(rng)); });
    return w;
}

Series random_unit_series(std::mt19937_64& rng, int order)
{
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    if (order >= 1) c[1] = 1;
    for (int k = 2; k <= order; ++k) c[static_cast<std::size_t>(k)] = coeff(rng);
    return Series(order, std::move(c));
}

Series lagrange_inversion(const Series& f)
{
    const int order = f.order();
    if (order < 1 || f[0] != 0 || f[1] == 0) throw SeriesError("Lagrange inversion needs f(0) = 0, f'(0) != 0");
    const Series x_over_f = f.shift_down().reciprocal();
    std::vector<Rational> g(static_cast<std::size_t>(order) + 1);
    for (int n = 1; n <= order; ++n) g[static_cast<std::size_t>(n)] = x_over_f.pow(n)[n - 1] / n;
    return Series(order, std::move(g));
}

namespace {

// Collects the first failure; later violations only bump the count.
class Report {
public:
    explicit Report(std::string name) { result_.name = std::move(name); }

    template <typename... Parts>
    void fail(const Parts&... parts)
    {
        if (result_.passed) {
            std::ostringstream os;
            (os << ... << parts);
            result_.detail = os.str();
        }
        result_.passed = false;
        ++failures_;
    }
    void note(std::string detail)
    {
        if (result_.passed) result_.detail = std::move(detail);
    }
    CheckResult finish()
    {
        if (failures_ > 1) result_.detail += " (+" + std::to_string(failures_ - 1) + " more)";
        return result_;
    }

private:
    CheckResult result_;
    int failures_ = 0;
};

std::vector<AtomSet> all_subsets(int n)
{
    std::vector<AtomSet> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        AtomSet s;
        for (int a = 1; a <= n; ++a)
            if (mask & (1u << (a - 1))) s.push_back(a);
        out.push_back(std::move(s));
    }
    return out;
}

AtomSet complement(const AtomSet& s, int n)
{
    AtomSet out;
    for (int a = 1; a <= n; ++a)
        if (!std::binary_search(s.begin(), s.end(), a)) out.push_back(a);
    return out;
}

CheckResult splits_complement(const VerifyOptions& o)
{
    Report r("partition: splits is symmetric under complement");
    for (int n = 1; n <= std::min(o.max_n, 7); ++n) {
        const auto subsets = all_subsets(n);
        for_each_partition(n, PartitionClass::All, [&](const Partition& p) {
            for (const auto& s : subsets)
                if (splits(s, p) != splits(complement(s, n), p)) r.fail("S=", s.size(), " atoms, pi=", p.to_string());
        });
    }
    return r.finish();
}

CheckResult connected_iff_cover_one(const VerifyOptions& o)
{
    Report r("partition: connected iff noncrossing cover is 1_n");
    for (int n = 1; n <= std::min(o.max_n, 9); ++n) {
        const auto one = Partition::one(n);
        for_each_partition(n, PartitionClass::All, [&](const Partition& p) {
            if (is_connected(p) != (noncrossing_cover(p) == one)) r.fail("pi=", p.to_string());
        });
    }
    return r.finish();
}

CheckResult cover_minimality(const VerifyOptions& o)
{
    Report r("partition: noncrossing cover is the least noncrossing upper bound");
    for (int n = 1; n <= std::min(o.max_n, 8); ++n) {
        const auto nc = collect(n, PartitionClass::Noncrossing);
        for_each_partition(n, PartitionClass::All, [&](const Partition& p) {
            const auto cover = noncrossing_cover(p);
            if (!is_noncrossing(cover) || !refines(p, cover)) {
                r.fail("cover of ", p.to_string(), " is not a noncrossing upper bound");
                return;
            }
            for (const auto& rho : nc)
                if (refines(p, rho) && !refines(cover, rho))
                    r.fail("cover of ", p.to_string(), " is not below ", rho.to_string());
        });
    }
    return r.finish();
}

CheckResult pc_rotation(const VerifyOptions& o)
{
    Report r("partition: purely crossing is closed under rotation");
    for (int n = 1; n <= std::min(o.max_n, 10); ++n) {
        for_each_partition(n, PartitionClass::PurelyCrossing, [&](const Partition& p) {
            for (int k = 1; k <= n; ++k)
                if (!is_purely_crossing(rotate(p, k))) r.fail("rotate(", p.to_string(), ", ", k, ")");
        });
    }
    return r.finish();
}

CheckResult pc_plus_no_singletons(const VerifyOptions& o)
{
    Report r("partition: PC+ has no singleton blocks for n >= 2");
    for (int n = 2; n <= o.max_n; ++n) {
        for_each_partition(n, PartitionClass::PcPlus, [&](const Partition& p) {
            for (const auto& b : p.blocks())
                if (b.size() == 1) r.fail("pi=", p.to_string());
        });
    }
    return r.finish();
}

CheckResult pc_small_sizes(const VerifyOptions& o)
{
    Report r("partition: PC(n) sizes 0,0,0,1,0,5,14 for n = 1..7");
    const int expected[] = {0, 0, 0, 1, 0, 5, 14};
    for (int n = 1; n <= std::min(o.max_n, 7); ++n) {
        int got = 0;
        for_each_partition(n, PartitionClass::All, [&](const Partition& p) { got += is_purely_crossing(p); });
        if (got != expected[n - 1]) r.fail("|PC(", n, ")| = ", got);
    }
    return r.finish();
}

CheckResult canonical_roundtrip(const VerifyOptions& o)
{
    Report r("partition: blocks, rgs and text forms round-trip");
    for (int n = 1; n <= o.max_n; ++n) {
        for_each_partition(n, PartitionClass::All, [&](const Partition& p) {
            auto reversed = p.blocks();
            std::reverse(reversed.begin(), reversed.end());
            for (auto& b : reversed) std::reverse(b.begin(), b.end());
            if (Partition::from_blocks(n, reversed) != p || Partition::from_rgs(p.rgs()) != p ||
                Partition::parse(p.to_string()) != p)
                r.fail("pi=", p.to_string());
        });
    }
    return r.finish();
}

PartitionClass all_classes[] = {PartitionClass::All, PartitionClass::Noncrossing, PartitionClass::Connected,
                                PartitionClass::PcPlus, PartitionClass::PurelyCrossing};

CheckResult filter_consistency(const VerifyOptions& o)
{
    Report r("enumerate: class streams equal filtered P(n)");
    for (int n = 1; n <= std::min(o.max_n, 9); ++n) {
        const auto all = collect(n, PartitionClass::All);
        for (auto cls : all_classes) {
            std::vector<Partition> filtered;
            std::copy_if(all.begin(), all.end(), std::back_inserter(filtered),
                         [&](const Partition& p) { return belongs(p, cls); });
            if (collect(n, cls) != filtered) r.fail("n=", n, " class=", class_name(cls));
        }
    }
    return r.finish();
}

CheckResult count_all_is_bell(const VerifyOptions& o)
{
    Report r("enumerate: |P(n)| equals the Bell series");
    const Series bell = bell_series(std::max(o.max_n, 1));
    for (int n = 1; n <= o.max_n; ++n)
        if (Rational(count(n, PartitionClass::All, o.workers)) != bell[n]) r.fail("n=", n);
    return r.finish();
}

CheckResult worker_independence(const VerifyOptions& o)
{
    Report r("enumerate: counts independent of worker count");
    for (int n = 1; n <= o.max_n; ++n)
        for (auto cls : all_classes) {
            const auto base = count(n, cls, 1);
            for (unsigned w : {2u, 8u})
                if (count(n, cls, w) != base) r.fail("n=", n, " class=", class_name(cls), " workers=", w);
        }
    return r.finish();
}

CheckResult nc_catalan(const VerifyOptions& o)
{
    Report r("enumerate: |NC(n)| is Catalan");
    for (int n = 1; n <= std::min(o.max_n, 12); ++n)
        if (count(n, PartitionClass::Noncrossing, o.workers) != catalan(n)) r.fail("n=", n);
    return r.finish();
}

CheckResult phi_bijective(const VerifyOptions& o)
{
    Report r("bijections: phi is a bijection onto CO(n)");
    for (int n = 1; n <= std::min(o.max_n, 10); ++n) {
        std::set<Partition> image;
        std::size_t domain = 0;
        for (int l = 1; l <= n; ++l) {
            const auto comps = compositions(n, l);
            for_each_partition(l, PartitionClass::PcPlus, [&](const Partition& sigma) {
                for (const auto& comp : comps) {
                    ++domain;
                    const auto pi = phi(sigma, comp);
                    if (!is_connected(pi)) r.fail("phi(", sigma.to_string(), ") not connected");
                    const auto back = phi_inv(pi);
                    if (back.sigma != sigma || !(back.comp == comp)) r.fail("phi_inv(phi(", sigma.to_string(), "))");
                    image.insert(pi);
                }
            });
        }
        if (image.size() != domain) r.fail("phi not injective at n=", n);
        for_each_partition(n, PartitionClass::Connected, [&](const Partition& pi) {
            if (!image.count(pi)) r.fail("CO member ", pi.to_string(), " missing from image");
            const auto dec = phi_inv(pi);
            if (phi(dec.sigma, dec.comp) != pi) r.fail("phi(phi_inv(", pi.to_string(), "))");
        });
        if (BigInt(image.size()) != count(n, PartitionClass::Connected)) r.fail("image size at n=", n);
    }
    return r.finish();
}

CheckResult psi_bijective(const VerifyOptions& o)
{
    Report r("bijections: psi is a bijection onto P(n)");
    for (int n = 1; n <= std::min(o.max_n, 9); ++n) {
        for_each_partition(n, PartitionClass::All, [&](const Partition& pi) {
            const auto dec = psi_inv(pi);
            if (psi(dec) != pi) r.fail("psi(psi_inv(", pi.to_string(), "))");
        });
    }
    // Enumerate the domain directly: every noncrossing tau with connected
    // inner partitions of matching sizes.
    for (int n = 1; n <= std::min(o.max_n, 8); ++n) {
        std::vector<std::vector<Partition>> connected(static_cast<std::size_t>(n) + 1);
        for (int k = 1; k <= n; ++k) connected[static_cast<std::size_t>(k)] = collect(k, PartitionClass::Connected);
        std::set<Partition> image;
        std::size_t domain = 0;
        for_each_partition(n, PartitionClass::Noncrossing, [&](const Partition& tau) {
            PsiDecomposition dec{tau, std::vector<Partition>(tau.block_count())};
            auto rec = [&](auto& self, std::size_t j) -> void {
                if (j == tau.block_count()) {
                    ++domain;
                    const auto pi = psi(dec);
                    image.insert(pi);
                    const auto back = psi_inv(pi);
                    if (back.tau != dec.tau || back.sigmas != dec.sigmas) r.fail("psi_inv(psi(...)) at ", pi.to_string());
                    return;
                }
                for (const auto& s : connected[tau.blocks()[j].size()]) {
                    dec.sigmas[j] = s;
                    self(self, j + 1);
                }
            };
            rec(rec, 0);
        });
        if (image.size() != domain || BigInt(domain) != count(n, PartitionClass::All)) r.fail("psi domain/image at n=", n);
    }
    return r.finish();
}

CheckResult theta_bijective(const VerifyOptions& o)
{
    Report r("bijections: theta_inv inverts theta");
    for (int n = 1; n <= std::min(o.max_n, 9); ++n) {
        for_each_partition(n, PartitionClass::All, [&](const Partition& pi) {
            const auto dec = theta(pi);
            int total = dec.sigma.size();
            for (const auto& t : dec.tails) total += t.size();
            if (!is_connected(dec.sigma) || total != n) r.fail("theta(", pi.to_string(), ") bookkeeping");
            if (theta_inv(dec) != pi) r.fail("theta_inv(theta(", pi.to_string(), "))");
        });
    }
    return r.finish();
}

CheckResult d_multiplicative(const VerifyOptions& o, std::mt19937_64& rng)
{
    Report r("bijections: d(pi) = c(sigma) * prod d(pi_j) under theta");
    const int depth = std::min(o.max_n, 8);
    std::vector<std::vector<Partition>> all(static_cast<std::size_t>(depth) + 1);
    for (int n = 1; n <= depth; ++n) all[static_cast<std::size_t>(n)] = collect(n, PartitionClass::All);
    for (int t = 0; t < o.weighted_trials; ++t) {
        const auto w = random_weight_assignment(rng, depth);
        for (int n = 1; n <= depth; ++n)
            for (const auto& pi : all[static_cast<std::size_t>(n)]) {
                const auto dec = theta(pi);
                Rational rhs = weight_c(dec.sigma, w);
                for (const auto& tail : dec.tails) rhs *= weight_d(tail, w);
                if (weight_d(pi, w) != rhs) r.fail("trial ", t, " pi=", pi.to_string());
            }
    }
    return r.finish();
}

CheckResult cardinality_transport(const VerifyOptions& o)
{
    Report r("bijections: |CO(n)| = sum_l |PC+(l)| binom(n-1, l-1)");
    for (int n = 1; n <= std::min(o.max_n, 12); ++n) {
        BigInt sum = 0;
        for (int l = 1; l <= n; ++l) {
            BigInt binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n - 1), static_cast<unsigned long>(l - 1));
            sum += count(l, PartitionClass::PcPlus, o.workers) * binom;
        }
        if (sum != count(n, PartitionClass::Connected, o.workers)) r.fail("n=", n);
    }
    return r.finish();
}

CheckResult reversion_identity(std::mt19937_64& rng)
{
    Report r("series: compose(f, reversion(f)) = x through order 30");
    for (int t = 0; t < 20; ++t) {
        const auto f = random_unit_series(rng, 30);
        const auto g = reversion(f);
        if (compose(f, g) != Series::x(30) || compose(g, f) != Series::x(30)) r.fail("trial ", t, " f=", f.to_string());
    }
    return r.finish();
}

CheckResult reversion_lagrange(std::mt19937_64& rng)
{
    Report r("series: reversion matches Lagrange inversion through order 20");
    for (int t = 0; t < 20; ++t) {
        const auto f = random_unit_series(rng, 20);
        if (reversion(f) != lagrange_inversion(f)) r.fail("trial ", t, " f=", f.to_string());
    }
    return r.finish();
}

Series random_series(std::mt19937_64& rng, int order, bool zero_constant)
{
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int k = zero_constant ? 1 : 0; k <= order; ++k) c[static_cast<std::size_t>(k)] = random_rational(rng);
    return Series(order, std::move(c));
}

CheckResult ring_laws(std::mt19937_64& rng)
{
    Report r("series: ring laws and compose associativity");
    for (int t = 0; t < 10; ++t) {
        const auto f = random_series(rng, 12, false);
        const auto g = random_series(rng, 12, true);
        const auto h = random_series(rng, 12, true);
        if ((f + g) + h != f + (g + h)) r.fail("add associativity, trial ", t);
        if ((f * g) * h != f * (g * h)) r.fail("mul associativity, trial ", t);
        if (f * (g + h) != f * g + f * h) r.fail("distributivity, trial ", t);
        if (compose(compose(f, g), h) != compose(f, compose(g, h))) r.fail("compose associativity, trial ", t);
    }
    return r.finish();
}

CheckResult backward_forward(const VerifyOptions&)
{
    Report r("pipeline: forward(backward A) reproduces B, C and Bell");
    const auto back = backward_pipeline(15);
    const auto fwd = forward_weighted(back.a);
    if (fwd.b != back.b) r.fail("B differs");
    if (fwd.c != back.c) r.fail("C differs");
    if (fwd.d != back.d) r.fail("D differs");
    return r.finish();
}

CheckResult integrality(const VerifyOptions&)
{
    Report r("pipeline: unweighted A, B, C, D are integral");
    const auto gf = backward_pipeline(15);
    for (char which : {'A', 'B', 'C', 'D'})
        if (!gf.get(which).is_integral()) r.fail(which, " has a non-integral coefficient");
    return r.finish();
}

CheckResult weighted_lemmas(const VerifyOptions& o, std::mt19937_64& rng)
{
    Report r("pipeline: forward series equal weighted brute-force sums");
    const int depth = std::min(o.max_n, 9);
    for (int t = 0; t < o.weighted_trials; ++t) {
        const auto w = random_weight_assignment(rng, std::min(depth, 8));
        const auto gf = forward_weighted(weighted_a_series(w, depth));
        for (int n = 1; n <= depth; ++n) {
            const auto brute = weighted_brute_coeffs(n, w);
            const WeightedCoefficients series{gf.a[n], gf.b[n], gf.c[n], gf.d[n]};
            if (!(brute == series)) r.fail("trial ", t, " n=", n);
        }
    }
    return r.finish();
}

CheckResult catalan_degeneration(const VerifyOptions& o)
{
    Report r("pipeline: a = 0 gives d_n = Catalan(n)");
    const int depth = std::min(o.max_n, 12);
    const auto gf = forward_weighted(Series::zero(std::max(depth, 1)));
    const auto zero = WeightAssignment::constant(0);
    for (int n = 1; n <= depth; ++n) {
        if (gf.d[n] != Rational(count(n, PartitionClass::Noncrossing, o.workers)) || gf.d[n] != Rational(catalan(n)))
            r.fail("n=", n);
        if (n <= std::min(depth, 7) && weighted_brute_coeffs(n, zero).d != gf.d[n]) r.fail("brute d at n=", n);
    }
    return r.finish();
}

CheckResult series_vs_enumeration(const VerifyOptions& o)
{
    Report r("pipeline: table agrees with enumeration");
    try {
        table(std::max(o.max_n, 1), o.max_n, o.workers);
    } catch (const std::exception& e) {
        r.fail(e.what());
    }
    return r.finish();
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options,
                                          const std::function<void(const CheckResult&)>& on_result)
{
    std::mt19937_64 rng(options.seed);
    std::vector<std::pair<std::string, std::function<CheckResult()>>> checks = {
        {"splits complement", [&] { return splits_complement(options); }},
        {"connected iff cover", [&] { return connected_iff_cover_one(options); }},
        {"cover minimality", [&] { return cover_minimality(options); }},
        {"pc rotation", [&] { return pc_rotation(options); }},
        {"pc+ singletons", [&] { return pc_plus_no_singletons(options); }},
        {"pc small sizes", [&] { return pc_small_sizes(options); }},
        {"canonical roundtrip", [&] { return canonical_roundtrip(options); }},
        {"filter consistency", [&] { return filter_consistency(options); }},
        {"bell counts", [&] { return count_all_is_bell(options); }},
        {"worker independence", [&] { return worker_independence(options); }},
        {"catalan counts", [&] { return nc_catalan(options); }},
        {"phi", [&] { return phi_bijective(options); }},
        {"psi", [&] { return psi_bijective(options); }},
        {"theta", [&] { return theta_bijective(options); }},
        {"d multiplicative", [&] { return d_multiplicative(options, rng); }},
        {"cardinality transport", [&] { return cardinality_transport(options); }},
        {"reversion identity", [&] { return reversion_identity(rng); }},
        {"reversion lagrange", [&] { return reversion_lagrange(rng); }},
        {"ring laws", [&] { return ring_laws(rng); }},
        {"backward forward", [&] { return backward_forward(options); }},
        {"integrality", [&] { return integrality(options); }},
        {"weighted lemmas", [&] { return weighted_lemmas(options, rng); }},
        {"catalan degeneration", [&] { return catalan_degeneration(options); }},
        {"series vs enumeration", [&] { return series_vs_enumeration(options); }},
    };
    std::vector<CheckResult> results;
    for (auto& [label, check] : checks) {
        CheckResult res;
        try {
            res = check();
        } catch (const std::exception& e) {
            res = {label, false, std::string("exception: ") + e.what()};
        }
        if (on_result) on_result(res);
        results.push_back(std::move(res));
    }
    return results;
}

}  // namespace purecross
