#pragma once

#include "purecross/numeric.hpp"
#include "purecross/partition.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace purecross {

/// The partition families P(n), NC(n), CO(n), PC+(n) and PC(n).
enum class PartitionClass { All, Noncrossing, Connected, PcPlus, PurelyCrossing };

/// CLI spelling: all | nc | co | pc+ | pc.
std::optional<PartitionClass> parse_class(std::string_view name);
std::string_view class_name(PartitionClass cls);

/// Membership test matching `cls`.
bool belongs(const Partition& pi, PartitionClass cls);

/// Visitor receives the restricted-growth string of each member.
using RgsVisitor = std::function<void(std::span<const int>)>;

/**
 * Walks the members of `cls` of size n whose rgs begins with `prefix`, in
 * lexicographic rgs order. For PC+ and PC, prefixes that already place two
 * neighbouring atoms in one block are abandoned immediately; the remaining
 * conditions are only decidable on complete strings.
 */
void for_each_rgs(int n, PartitionClass cls, std::span<const int> prefix, const RgsVisitor& visit);

/// Every member of `cls` of size n, in lexicographic rgs order.
void for_each_partition(int n, PartitionClass cls, const std::function<void(const Partition&)>& visit);

std::vector<Partition> collect(int n, PartitionClass cls);

/**
 * Pull-style stream over a class, in the same order as `for_each_partition`.
 * Single consumer; `next()` returns nullopt once exhausted.
 */
class PartitionStream {
public:
    PartitionStream(int n, PartitionClass cls);
    std::optional<Partition> next();

private:
    bool advance();
    bool accept() const;

    int n_;
    PartitionClass cls_;
    std::vector<int> rgs_;
    std::vector<int> max_;  // max_[i] = max(rgs_[0..i])
    bool started_ = false;
    bool done_ = false;
};

/// Prefixes of length min(depth, n) from which the class is generated;
/// every member extends exactly one of them.
std::vector<std::vector<int>> work_prefixes(int n, PartitionClass cls, int depth);

/// |cls(n)|. Work is split over fixed-length rgs prefixes; the result does
/// not depend on `workers`.
BigInt count(int n, PartitionClass cls, unsigned workers = 1);

/// Number of distinct rotations of pi.
int orbit_size(const Partition& pi);

/// Canonical representative (minimum under rgs order) of pi's rotation orbit.
Partition orbit_representative(const Partition& pi);

}  // namespace purecross
