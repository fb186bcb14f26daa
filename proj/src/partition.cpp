#include "purecross/partition.hpp"
#include "purecross/numeric.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <numeric>

namespace purecross {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (std::size_t i = start; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/' && !seen_slash) {
            seen_slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            throw std::invalid_argument("malformed rational '" + s + "'");
        }
    }
    if (!digit_before || (seen_slash && !digit_after))
        throw std::invalid_argument("malformed rational '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

std::string to_string(const BigInt& z)
{
    return z.get_str();
}

namespace {

// Small-buffer scratch for per-block bookkeeping in the hot predicates.
class Scratch {
public:
    explicit Scratch(std::size_t n, int fill)
    {
        if (n <= inline_.size()) {
            data_ = inline_.data();
        } else {
            heap_.resize(n);
            data_ = heap_.data();
        }
        std::fill(data_, data_ + n, fill);
    }
    int& operator[](std::size_t i) noexcept { return data_[i]; }

private:
    std::array<int, 32> inline_{};
    std::vector<int> heap_;
    int* data_ = nullptr;
};

// Sorted merge of two sorted blocks; true when the A/B label sequence has
// at least four runs, i.e. contains an a < b < a' < b' pattern.
bool blocks_cross(const AtomSet& a, const AtomSet& b)
{
    std::size_t i = 0, j = 0;
    int runs = 0;
    int last = -1;
    while (i < a.size() || j < b.size()) {
        int label;
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            label = 0;
            ++i;
        } else {
            label = 1;
            ++j;
        }
        if (label != last) {
            if (++runs >= 4) return true;
            last = label;
        }
    }
    return false;
}

}  // namespace

Partition Partition::from_blocks(int n, const std::vector<AtomSet>& raw_blocks)
{
    if (n < 1) throw PartitionError("partition size must be positive, got " + std::to_string(n));
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < raw_blocks.size(); ++b) {
        if (raw_blocks[b].empty()) throw PartitionError("empty block");
        for (int a : raw_blocks[b]) {
            if (a < 1 || a > n)
                throw PartitionError("atom " + std::to_string(a) + " out of range 1.." + std::to_string(n), a);
            auto& slot = owner[static_cast<std::size_t>(a - 1)];
            if (slot != -1) throw PartitionError("atom " + std::to_string(a) + " appears twice", a);
            slot = static_cast<int>(b);
        }
    }
    for (int a = 1; a <= n; ++a)
        if (owner[static_cast<std::size_t>(a - 1)] == -1)
            throw PartitionError("atom " + std::to_string(a) + " uncovered", a);

    // Relabel blocks by first appearance.
    std::vector<int> relabel(raw_blocks.size(), -1);
    std::vector<int> rgs(static_cast<std::size_t>(n));
    int next = 0;
    for (std::size_t i = 0; i < owner.size(); ++i) {
        auto& r = relabel[static_cast<std::size_t>(owner[i])];
        if (r == -1) r = next++;
        rgs[i] = r;
    }
    return from_rgs(rgs);
}

Partition Partition::from_rgs(std::span<const int> rgs)
{
    if (rgs.empty()) return Partition();
    int max_seen = -1;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
        if (rgs[i] < 0 || rgs[i] > max_seen + 1)
            throw PartitionError("not a restricted-growth string at position " + std::to_string(i),
                                 static_cast<int>(i + 1));
        max_seen = std::max(max_seen, rgs[i]);
    }
    Partition p;
    p.n_ = static_cast<int>(rgs.size());
    p.rgs_.assign(rgs.begin(), rgs.end());
    p.blocks_.resize(static_cast<std::size_t>(max_seen + 1));
    for (std::size_t i = 0; i < rgs.size(); ++i)
        p.blocks_[static_cast<std::size_t>(rgs[i])].push_back(static_cast<int>(i + 1));
    return p;
}

Partition Partition::parse(std::string_view text)
{
    std::vector<AtomSet> blocks(1);
    std::vector<std::size_t> atom_pos;
    std::vector<int> atoms;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    skip_space();
    if (i == text.size()) throw ParseError("empty partition text", i);
    while (true) {
        skip_space();
        if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected an atom", i);
        std::size_t start = i;
        long value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > 1'000'000) throw ParseError("atom too large", start);
            ++i;
        }
        if (value < 1) throw ParseError("atoms start at 1", start);
        blocks.back().push_back(static_cast<int>(value));
        atoms.push_back(static_cast<int>(value));
        atom_pos.push_back(start);
        skip_space();
        if (i == text.size()) break;
        if (text[i] == ',') {
            ++i;
        } else if (text[i] == '|') {
            ++i;
            blocks.emplace_back();
        } else {
            throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", i);
        }
    }
    int n = *std::max_element(atoms.begin(), atoms.end());
    try {
        return from_blocks(n, blocks);
    } catch (const PartitionError& e) {
        std::size_t where = text.size();
        if (e.atom() != 0) {
            // Point at the second occurrence for duplicates, otherwise at the end.
            int seen = 0;
            for (std::size_t k = 0; k < atoms.size(); ++k)
                if (atoms[k] == e.atom() && ++seen == 2) where = atom_pos[k];
        }
        throw ParseError(e.what(), where);
    }
}

Partition Partition::one(int n)
{
    return from_rgs(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Partition Partition::zero(int n)
{
    std::vector<int> r(static_cast<std::size_t>(n));
    std::iota(r.begin(), r.end(), 0);
    return from_rgs(r);
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out += '|';
        for (std::size_t k = 0; k < blocks_[b].size(); ++k) {
            if (k) out += ',';
            out += std::to_string(blocks_[b][k]);
        }
    }
    return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (int v : p.rgs()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

void to_json(nlohmann::json& j, const Partition& p)
{
    j = nlohmann::json{{"n", p.size()}, {"blocks", p.blocks()}};
}

void from_json(const nlohmann::json& j, Partition& p)
{
    int n = j.at("n").get<int>();
    auto blocks = j.at("blocks").get<std::vector<AtomSet>>();
    p = (n == 0 && blocks.empty()) ? Partition::empty() : Partition::from_blocks(n, blocks);
}

namespace rgs {

bool has_neighbors(std::span<const int> r) noexcept
{
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] == r[i - 1]) return true;
    return false;
}

bool is_noncrossing(std::span<const int> r) noexcept
{
    const std::size_t n = r.size();
    Scratch last(n, -1);
    for (std::size_t i = 0; i < n; ++i) last[static_cast<std::size_t>(r[i])] = static_cast<int>(i);
    // Stack of open blocks (seen, with atoms still to come). Revisiting a
    // block is legal only when it sits on top.
    Scratch stack(n, 0);
    Scratch open(n, 0);
    std::size_t top = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto b = static_cast<std::size_t>(r[i]);
        if (open[b]) {
            if (stack[top - 1] != static_cast<int>(b)) return false;
        } else if (last[b] != static_cast<int>(i)) {
            open[b] = 1;
            stack[top++] = static_cast<int>(b);
        }
        if (open[b] && last[b] == static_cast<int>(i)) {
            open[b] = 0;
            --top;
        }
    }
    return true;
}

bool is_connected(std::span<const int> r) noexcept
{
    const std::size_t n = r.size();
    if (n == 0) return false;
    Scratch first(n, -1);
    Scratch last(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto b = static_cast<std::size_t>(r[i]);
        if (first[b] == -1) first[b] = static_cast<int>(i);
        last[b] = static_cast<int>(i);
    }
    // [l, rr] splits iff every atom's block starts at or after l and ends at
    // or before rr. Once a block reaching left of l enters, no extension of
    // the interval can recover.
    for (std::size_t l = 0; l < n; ++l) {
        int max_last = -1;
        for (std::size_t rr = l; rr < n; ++rr) {
            const auto b = static_cast<std::size_t>(r[rr]);
            if (first[b] < static_cast<int>(l)) break;
            max_last = std::max(max_last, last[b]);
            if (max_last == static_cast<int>(rr) && !(l == 0 && rr == n - 1)) return false;
        }
    }
    return true;
}

bool is_pc_plus(std::span<const int> r) noexcept
{
    return !has_neighbors(r) && is_connected(r);
}

bool is_purely_crossing(std::span<const int> r) noexcept
{
    return r.size() >= 2 && r.back() != r.front() && is_pc_plus(r);
}

}  // namespace rgs

bool splits(const AtomSet& s, const Partition& pi)
{
    const int n = pi.size();
    std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
    for (int a : s) {
        if (a < 1 || a > n) throw PartitionError("atom " + std::to_string(a) + " out of range", a);
        in[static_cast<std::size_t>(a)] = 1;
    }
    for (const auto& block : pi.blocks()) {
        bool meets = std::any_of(block.begin(), block.end(), [&](int a) { return in[static_cast<std::size_t>(a)]; });
        bool inside = std::all_of(block.begin(), block.end(), [&](int a) { return in[static_cast<std::size_t>(a)]; });
        if (meets && !inside) return false;
    }
    return true;
}

bool is_noncrossing(const Partition& pi) { return rgs::is_noncrossing(pi.rgs()); }
bool has_neighbors(const Partition& pi) { return rgs::has_neighbors(pi.rgs()); }
bool is_connected(const Partition& pi) { return rgs::is_connected(pi.rgs()); }
bool is_pc_plus(const Partition& pi) { return rgs::is_pc_plus(pi.rgs()); }
bool is_purely_crossing(const Partition& pi) { return rgs::is_purely_crossing(pi.rgs()); }

bool refines(const Partition& sigma, const Partition& pi)
{
    if (sigma.size() != pi.size()) throw PartitionError("refinement compares partitions of different sizes");
    // Every block of sigma must land inside a single block of pi.
    for (const auto& block : sigma.blocks())
        for (int a : block)
            if (pi.block_of(a) != pi.block_of(block.front())) return false;
    return true;
}

Partition noncrossing_cover(const Partition& pi)
{
    if (pi.is_empty()) return pi;
    std::vector<AtomSet> blocks = pi.blocks();
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < blocks.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                if (!blocks_cross(blocks[i], blocks[j])) continue;
                AtomSet joined;
                std::merge(blocks[i].begin(), blocks[i].end(), blocks[j].begin(), blocks[j].end(),
                           std::back_inserter(joined));
                blocks[i] = std::move(joined);
                blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
                merged = true;
                break;
            }
        }
    }
    return Partition::from_blocks(pi.size(), blocks);
}

Partition rotate(const Partition& pi, long r)
{
    const int n = pi.size();
    if (n == 0) return pi;
    const long shift = ((r % n) + n) % n;
    std::vector<AtomSet> blocks;
    blocks.reserve(pi.block_count());
    for (const auto& block : pi.blocks()) {
        AtomSet moved;
        for (int a : block) moved.push_back(static_cast<int>((a - 1 + shift) % n) + 1);
        blocks.push_back(std::move(moved));
    }
    return Partition::from_blocks(n, blocks);
}

Partition restrict(const Partition& pi, const AtomSet& s)
{
    if (s.empty()) throw PartitionError("restriction to the empty set");
    AtomSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PartitionError("restriction set has duplicate atoms");
    for (int a : sorted)
        if (a < 1 || a > pi.size()) throw PartitionError("atom " + std::to_string(a) + " out of range", a);

    // sorted[k] is the image of k+1 under the order-preserving bijection.
    std::vector<int> labels(sorted.size());
    for (std::size_t k = 0; k < sorted.size(); ++k) labels[k] = pi.block_of(sorted[k]);
    std::vector<int> relabel(pi.block_count(), -1);
    int next = 0;
    for (auto& v : labels) {
        auto& slot = relabel[static_cast<std::size_t>(v)];
        if (slot == -1) slot = next++;
        v = slot;
    }
    return Partition::from_rgs(labels);
}

AtomSet interval(int first, int last)
{
    AtomSet out;
    for (int a = first; a <= last; ++a) out.push_back(a);
    return out;
}

}  // namespace purecross
