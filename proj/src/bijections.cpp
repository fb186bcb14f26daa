#include "purecross/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace purecross {

Composition::Composition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
    for (int k : parts_) {
        if (k < 1) throw std::invalid_argument("composition parts must be positive");
        total_ += k;
    }
}

AtomSet Composition::interval_of(int j) const
{
    if (j < 1 || j > length()) throw std::out_of_range("composition part index");
    int start = std::accumulate(parts_.begin(), parts_.begin() + (j - 1), 0);
    return interval(start + 1, start + parts_[static_cast<std::size_t>(j - 1)]);
}

std::vector<Composition> compositions(int n, int parts)
{
    std::vector<Composition> out;
    std::vector<int> current;
    auto rec = [&](auto& self, int remaining) -> void {
        if (remaining == 0) {
            if (parts <= 0 || static_cast<int>(current.size()) == parts) out.emplace_back(current);
            return;
        }
        if (parts > 0 && static_cast<int>(current.size()) >= parts) return;
        for (int k = 1; k <= remaining; ++k) {
            current.push_back(k);
            self(self, remaining - k);
            current.pop_back();
        }
    };
    if (n >= 1) rec(rec, n);
    return out;
}

Partition adjoin_to_first_block(const Partition& sigma)
{
    std::vector<int> r = sigma.rgs();
    r.push_back(0);
    return Partition::from_rgs(r);
}

PcPlusSplit pc_plus_decompose(const Partition& pi)
{
    const int n = pi.size();
    if (n < 2) throw PartitionError("PC+ decomposition needs n >= 2");
    if (!is_pc_plus(pi)) throw PartitionError("partition " + pi.to_string() + " is not in PC+");
    if (!pi.same_block(1, n)) return PcCase{pi};
    return TildeCase{restrict(pi, interval(1, n - 1))};
}

Partition phi(const Partition& sigma, const Composition& comp)
{
    if (!is_pc_plus(sigma)) throw PartitionError("phi base " + sigma.to_string() + " is not in PC+");
    if (comp.length() != sigma.size())
        throw std::invalid_argument("composition has " + std::to_string(comp.length()) + " parts, base has " +
                                    std::to_string(sigma.size()) + " atoms");
    std::vector<int> r;
    r.reserve(static_cast<std::size_t>(comp.total()));
    for (int j = 1; j <= sigma.size(); ++j)
        r.insert(r.end(), static_cast<std::size_t>(comp.parts()[static_cast<std::size_t>(j - 1)]), sigma.block_of(j));
    return Partition::from_rgs(r);
}

PhiDecomposition phi_inv(const Partition& pi)
{
    if (!is_connected(pi)) throw PartitionError("phi_inv input " + pi.to_string() + " is not connected");
    const auto& r = pi.rgs();
    std::vector<int> base;
    std::vector<int> parts;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i > 0 && r[i] == r[i - 1]) {
            ++parts.back();
        } else {
            base.push_back(r[i]);
            parts.push_back(1);
        }
    }
    // Collapsing runs keeps first-appearance order, so `base` is still a
    // restricted-growth string.
    return {Partition::from_rgs(base), Composition(std::move(parts))};
}

Partition psi(const PsiDecomposition& dec)
{
    const auto& tau = dec.tau;
    if (!is_noncrossing(tau)) throw PartitionError("psi outer partition " + tau.to_string() + " is crossing");
    if (dec.sigmas.size() != tau.block_count())
        throw PartitionError("psi needs one inner partition per block of the outer partition");
    std::vector<AtomSet> blocks;
    for (std::size_t j = 0; j < tau.block_count(); ++j) {
        const auto& outer = tau.blocks()[j];
        const auto& inner = dec.sigmas[j];
        if (inner.size() != static_cast<int>(outer.size()))
            throw PartitionError("inner partition " + std::to_string(j + 1) + " has the wrong size");
        if (!is_connected(inner))
            throw PartitionError("inner partition " + inner.to_string() + " is not connected");
        for (const auto& block : inner.blocks()) {
            AtomSet mapped;
            for (int a : block) mapped.push_back(outer[static_cast<std::size_t>(a - 1)]);
            blocks.push_back(std::move(mapped));
        }
    }
    return Partition::from_blocks(tau.size(), blocks);
}

PsiDecomposition psi_inv(const Partition& pi)
{
    PsiDecomposition dec{noncrossing_cover(pi), {}};
    for (const auto& block : dec.tau.blocks()) dec.sigmas.push_back(restrict(pi, block));
    return dec;
}

ThetaDecomposition theta(const Partition& pi)
{
    const int n = pi.size();
    if (n < 1) throw PartitionError("theta needs n >= 1");
    const auto cover = noncrossing_cover(pi);
    const AtomSet& first = cover.blocks().front();
    ThetaDecomposition dec{restrict(pi, first), {}};
    for (std::size_t j = 0; j < first.size(); ++j) {
        const int lo = first[j] + 1;
        const int hi = (j + 1 < first.size()) ? first[j + 1] - 1 : n;
        dec.tails.push_back(lo > hi ? Partition::empty() : restrict(pi, interval(lo, hi)));
    }
    return dec;
}

Partition theta_inv(const ThetaDecomposition& dec)
{
    const auto& sigma = dec.sigma;
    if (!is_connected(sigma)) throw PartitionError("theta_inv base " + sigma.to_string() + " is not connected");
    if (dec.tails.size() != static_cast<std::size_t>(sigma.size()))
        throw PartitionError("theta_inv needs one tail per atom of the base");

    // s[j] = k(1) + ... + k(j-1) + j
    std::vector<int> s;
    int pos = 0;
    for (const auto& tail : dec.tails) {
        s.push_back(++pos);
        pos += tail.size();
    }
    const int n = pos;
    std::vector<AtomSet> blocks;
    for (const auto& block : sigma.blocks()) {
        AtomSet mapped;
        for (int a : block) mapped.push_back(s[static_cast<std::size_t>(a - 1)]);
        blocks.push_back(std::move(mapped));
    }
    for (std::size_t j = 0; j < dec.tails.size(); ++j) {
        for (const auto& block : dec.tails[j].blocks()) {
            AtomSet shifted;
            for (int a : block) shifted.push_back(a + s[j]);
            blocks.push_back(std::move(shifted));
        }
    }
    return Partition::from_blocks(n, blocks);
}

WeightAssignment WeightAssignment::constant(Rational value)
{
    WeightAssignment w;
    w.default_ = std::move(value);
    return w;
}

void WeightAssignment::set(const Partition& pi, Rational weight)
{
    if (!is_purely_crossing(pi))
        throw PartitionError("weights are assigned to purely crossing partitions only; got " + pi.to_string());
    entries_[pi] = std::move(weight);
}

Rational WeightAssignment::a(const Partition& pi) const
{
    auto it = entries_.find(pi);
    return it == entries_.end() ? default_ : it->second;
}

WeightAssignment WeightAssignment::from_json(const nlohmann::json& j)
{
    if (!j.is_array()) throw std::invalid_argument("weight assignment must be a JSON array");
    WeightAssignment w;
    for (const auto& entry : j) {
        const auto pi = Partition::parse(entry.at("partition").get<std::string>());
        const auto& raw = entry.at("weight");
        Rational q = raw.is_string() ? parse_rational(raw.get<std::string>())
                                     : parse_rational(std::to_string(raw.get<long long>()));
        w.set(pi, std::move(q));
    }
    return w;
}

nlohmann::json WeightAssignment::to_json() const
{
    auto out = nlohmann::json::array();
    for (const auto& [pi, q] : entries_)
        out.push_back({{"partition", pi.to_string()}, {"weight", to_string(q)}});
    return out;
}

Rational weight_b(const Partition& pi, const WeightAssignment& w)
{
    if (pi.size() == 1) {
        if (!is_pc_plus(pi)) throw PartitionError("b is defined on PC+ only");
        return 1;
    }
    return std::visit(
        [&](const auto& split) -> Rational {
            using T = std::decay_t<decltype(split)>;
            if constexpr (std::is_same_v<T, PcCase>)
                return w.a(split.pi);
            else
                return w.a(split.sigma);
        },
        pc_plus_decompose(pi));
}

Rational weight_c(const Partition& pi, const WeightAssignment& w)
{
    return weight_b(phi_inv(pi).sigma, w);
}

Rational weight_d(const Partition& pi, const WeightAssignment& w)
{
    if (pi.is_empty()) return 1;
    Rational product = 1;
    for (const auto& sigma : psi_inv(pi).sigmas) {
        product *= weight_c(sigma, w);
        if (product == 0) break;
    }
    return product;
}

}  // namespace purecross
