#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace purecross {

/// A subset of the atoms {1, ..., n}.
using AtomSet = std::vector<int>;

/// Raised for malformed partitions. `atom()` names the offending atom when
/// there is one (0 otherwise).
class PartitionError : public std::invalid_argument {
public:
    PartitionError(const std::string& what, int atom = 0)
        : std::invalid_argument(what), atom_(atom) {}
    int atom() const noexcept { return atom_; }

private:
    int atom_;
};

/// Raised by `Partition::parse`; `position()` is the 0-based column of the
/// offending character.
class ParseError : public PartitionError {
public:
    ParseError(const std::string& what, std::size_t position)
        : PartitionError(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/**
 * A set partition of [n] = {1, ..., n} held in canonical form.
 *
 * Blocks are ordered by their minimum atom and atoms ascend within each
 * block. The restricted-growth string (rgs) is kept alongside: rgs[i] is the
 * index of the block holding atom i+1, so rgs[0] == 0 and every entry is at
 * most one more than the running maximum. Values are immutable.
 *
 * n == 0 is reserved for the distinguished empty partition (the single
 * element of P(0)), obtained from `Partition::empty()`.
 */
class Partition {
public:
    /// The empty partition of the empty set.
    Partition() = default;

    static Partition empty() { return Partition(); }

    /// Validates and canonicalizes. Throws PartitionError naming the atom
    /// that overlaps, is missing, or is out of range.
    static Partition from_blocks(int n, const std::vector<AtomSet>& raw_blocks);

    /// Throws PartitionError if `rgs` is not a restricted-growth string.
    static Partition from_rgs(std::span<const int> rgs);

    /// Text form "1,3|2,4". Throws ParseError with the failing column.
    static Partition parse(std::string_view text);

    /// 1_n: a single block.
    static Partition one(int n);
    /// 0_n: all singletons.
    static Partition zero(int n);

    int size() const noexcept { return n_; }
    bool is_empty() const noexcept { return n_ == 0; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<AtomSet>& blocks() const noexcept { return blocks_; }
    const std::vector<int>& rgs() const noexcept { return rgs_; }

    /// Index (into `blocks()`) of the block containing `atom`.
    int block_of(int atom) const { return rgs_.at(static_cast<std::size_t>(atom - 1)); }
    bool same_block(int i, int j) const { return block_of(i) == block_of(j); }

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) noexcept {
        return a.rgs_ == b.rgs_;
    }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.rgs_ <=> b.rgs_;
    }

private:
    int n_ = 0;
    std::vector<AtomSet> blocks_;
    std::vector<int> rgs_;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

/// True iff S is a union of blocks of pi.
bool splits(const AtomSet& s, const Partition& pi);

bool is_noncrossing(const Partition& pi);
/// True iff some k ~ k+1 (condition (b) holds exactly when this is false).
bool has_neighbors(const Partition& pi);
/// True iff no proper subinterval of [n] splits pi.
bool is_connected(const Partition& pi);
/// Connected and without neighbors; PC+(1) = {0_1}.
bool is_pc_plus(const Partition& pi);
/// PC+ with 1 and n in different blocks; false for n == 1.
bool is_purely_crossing(const Partition& pi);

/// sigma <= pi in the refinement order: every block of pi splits sigma.
bool refines(const Partition& sigma, const Partition& pi);

/// Least noncrossing partition above pi.
Partition noncrossing_cover(const Partition& pi);

/// Applies i -> ((i - 1 + r) mod n) + 1 to every atom.
Partition rotate(const Partition& pi, long r);

/// Restriction to S, relabeled onto [|S|] in order. Throws on empty S.
Partition restrict(const Partition& pi, const AtomSet& s);

/// Interval {first, ..., last}.
AtomSet interval(int first, int last);

namespace rgs {

// Predicates over raw restricted-growth strings, shared with the
// enumerators so that counting never materializes Partition values.

bool has_neighbors(std::span<const int> rgs) noexcept;
bool is_noncrossing(std::span<const int> rgs) noexcept;
bool is_connected(std::span<const int> rgs) noexcept;
bool is_pc_plus(std::span<const int> rgs) noexcept;
bool is_purely_crossing(std::span<const int> rgs) noexcept;

}  // namespace rgs

}  // namespace purecross
