#include "purecross/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <set>
#include <thread>

namespace purecross {

std::optional<PartitionClass> parse_class(std::string_view name)
{
    if (name == "all") return PartitionClass::All;
    if (name == "nc") return PartitionClass::Noncrossing;
    if (name == "co") return PartitionClass::Connected;
    if (name == "pc+") return PartitionClass::PcPlus;
    if (name == "pc") return PartitionClass::PurelyCrossing;
    return std::nullopt;
}

std::string_view class_name(PartitionClass cls)
{
    switch (cls) {
    case PartitionClass::All: return "all";
    case PartitionClass::Noncrossing: return "nc";
    case PartitionClass::Connected: return "co";
    case PartitionClass::PcPlus: return "pc+";
    case PartitionClass::PurelyCrossing: return "pc";
    }
    return "?";
}

namespace {

bool prunes_neighbors(PartitionClass cls)
{
    return cls == PartitionClass::PcPlus || cls == PartitionClass::PurelyCrossing;
}

bool accepts(std::span<const int> r, PartitionClass cls) noexcept
{
    switch (cls) {
    case PartitionClass::All: return true;
    case PartitionClass::Noncrossing: return rgs::is_noncrossing(r);
    case PartitionClass::Connected: return rgs::is_connected(r);
    case PartitionClass::PcPlus: return rgs::is_pc_plus(r);
    case PartitionClass::PurelyCrossing: return rgs::is_purely_crossing(r);
    }
    return false;
}

// Depth-first completion of buf[pos..n) given buf[0..pos). `leaf` sees every
// complete string that survives neighbour pruning (when enabled).
template <typename Leaf>
void walk(std::vector<int>& buf, std::size_t pos, int max_so_far, bool prune, Leaf& leaf)
{
    if (pos == buf.size()) {
        leaf(std::span<const int>(buf));
        return;
    }
    for (int v = 0; v <= max_so_far + 1; ++v) {
        if (prune && v == buf[pos - 1]) continue;
        buf[pos] = v;
        walk(buf, pos + 1, std::max(max_so_far, v), prune, leaf);
    }
}

// Checks that `prefix` can start a member; returns its running maximum or
// nullopt when no member extends it.
std::optional<int> prefix_state(int n, std::span<const int> prefix, bool prune)
{
    if (prefix.size() > static_cast<std::size_t>(n)) return std::nullopt;
    int max_so_far = -1;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (prefix[i] < 0 || prefix[i] > max_so_far + 1) return std::nullopt;
        if (prune && i > 0 && prefix[i] == prefix[i - 1]) return std::nullopt;
        max_so_far = std::max(max_so_far, prefix[i]);
    }
    return max_so_far;
}

template <typename Leaf>
void walk_from(int n, std::span<const int> prefix, bool prune, Leaf& leaf)
{
    if (n < 1) return;
    std::vector<int> start(prefix.begin(), prefix.end());
    if (start.empty()) start.push_back(0);
    auto state = prefix_state(n, start, prune);
    if (!state) return;
    std::vector<int> buf(static_cast<std::size_t>(n), 0);
    std::copy(start.begin(), start.end(), buf.begin());
    walk(buf, start.size(), *state, prune, leaf);
}

}  // namespace

bool belongs(const Partition& pi, PartitionClass cls)
{
    return accepts(pi.rgs(), cls);
}

void for_each_rgs(int n, PartitionClass cls, std::span<const int> prefix, const RgsVisitor& visit)
{
    auto leaf = [&](std::span<const int> r) {
        if (accepts(r, cls)) visit(r);
    };
    walk_from(n, prefix, prunes_neighbors(cls), leaf);
}

void for_each_partition(int n, PartitionClass cls, const std::function<void(const Partition&)>& visit)
{
    for_each_rgs(n, cls, {}, [&](std::span<const int> r) { visit(Partition::from_rgs(r)); });
}

std::vector<Partition> collect(int n, PartitionClass cls)
{
    std::vector<Partition> out;
    for_each_partition(n, cls, [&](const Partition& p) { out.push_back(p); });
    return out;
}

PartitionStream::PartitionStream(int n, PartitionClass cls)
    : n_(n), cls_(cls)
{
    if (n_ < 1) done_ = true;
}

bool PartitionStream::accept() const
{
    return accepts(rgs_, cls_);
}

// Lexicographic successor among strings that survive neighbour pruning.
bool PartitionStream::advance()
{
    const bool prune = prunes_neighbors(cls_);
    const auto n = static_cast<std::size_t>(n_);
    auto fill_from = [&](std::size_t pos) {
        for (std::size_t j = pos; j < n; ++j) {
            rgs_[j] = (prune && rgs_[j - 1] == 0) ? 1 : 0;
            max_[j] = std::max(max_[j - 1], rgs_[j]);
        }
    };
    if (!started_) {
        started_ = true;
        rgs_.assign(n, 0);
        max_.assign(n, 0);
        fill_from(1);
        return true;
    }
    for (std::size_t i = n; i-- > 1;) {
        int v = rgs_[i] + 1;
        if (prune && v == rgs_[i - 1]) ++v;
        if (v <= max_[i - 1] + 1) {
            rgs_[i] = v;
            max_[i] = std::max(max_[i - 1], v);
            fill_from(i + 1);
            return true;
        }
    }
    return false;
}

std::optional<Partition> PartitionStream::next()
{
    while (!done_) {
        if (!advance()) {
            done_ = true;
            break;
        }
        if (accept()) return Partition::from_rgs(rgs_);
    }
    return std::nullopt;
}

std::vector<std::vector<int>> work_prefixes(int n, PartitionClass cls, int depth)
{
    std::vector<std::vector<int>> out;
    if (n < 1) return out;
    const int len = std::clamp(depth, 1, n);
    auto leaf = [&](std::span<const int> r) { out.emplace_back(r.begin(), r.end()); };
    walk_from(len, {}, prunes_neighbors(cls), leaf);
    return out;
}

BigInt count(int n, PartitionClass cls, unsigned workers)
{
    if (n < 1) return 0;
    workers = std::max(1u, workers);
    const auto prefixes = work_prefixes(n, cls, std::min(n, 6));
    std::vector<std::uint64_t> partial(workers, 0);
    std::atomic<std::size_t> next{0};
    const bool prune = prunes_neighbors(cls);

    auto worker = [&](unsigned id) {
        std::uint64_t local = 0;
        auto leaf = [&](std::span<const int> r) {
            if (accepts(r, cls)) ++local;
        };
        for (std::size_t k = next.fetch_add(1); k < prefixes.size(); k = next.fetch_add(1))
            walk_from(n, prefixes[k], prune, leaf);
        partial[id] = local;
    };

    if (workers == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < workers; ++id) pool.emplace_back(worker, id);
    }
    BigInt total = 0;
    for (auto v : partial) {
        BigInt part;
        mpz_import(part.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
        total += part;
    }
    return total;
}

int orbit_size(const Partition& pi)
{
    std::set<Partition> seen;
    for (int r = 0; r < std::max(1, pi.size()); ++r) seen.insert(rotate(pi, r));
    return static_cast<int>(seen.size());
}

Partition orbit_representative(const Partition& pi)
{
    Partition best = pi;
    for (int r = 1; r < pi.size(); ++r) best = std::min(best, rotate(pi, r));
    return best;
}

}  // namespace purecross
