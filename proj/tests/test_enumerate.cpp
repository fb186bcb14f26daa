#include <doctest.h>

#include "oracles.hpp"
#include "purecross/enumerate.hpp"

#include <map>

using namespace purecross;

TEST_CASE("iterate examples")
{
    CHECK(collect(4, PartitionClass::PurelyCrossing) == std::vector<Partition>{Partition::parse("1,3|2,4")});
    CHECK(collect(3, PartitionClass::All).size() == 5);
    CHECK(collect(1, PartitionClass::PcPlus) == std::vector<Partition>{Partition::zero(1)});
    CHECK(collect(2, PartitionClass::PcPlus).empty());
}

TEST_CASE("enumeration is in lexicographic rgs order without repeats")
{
    for (auto cls : {PartitionClass::All, PartitionClass::Connected, PartitionClass::PurelyCrossing}) {
        auto v = collect(8, cls);
        CHECK(std::is_sorted(v.begin(), v.end()));
        CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
    }
}

TEST_CASE("classes match definition-based filters of all partitions")
{
    for (int n = 1; n <= 7; ++n) {
        const auto all = oracle::all_partitions(n);
        CHECK(collect(n, PartitionClass::All) == all);
        std::vector<Partition> nc, co, pcp, pc;
        for (const auto& p : all) {
            if (oracle::noncrossing(p)) nc.push_back(p);
            if (oracle::connected(p)) co.push_back(p);
            if (oracle::pc_plus(p)) pcp.push_back(p);
            if (oracle::purely_crossing(p)) pc.push_back(p);
        }
        CHECK(collect(n, PartitionClass::Noncrossing) == nc);
        CHECK(collect(n, PartitionClass::Connected) == co);
        CHECK(collect(n, PartitionClass::PcPlus) == pcp);
        CHECK(collect(n, PartitionClass::PurelyCrossing) == pc);
    }
}

TEST_CASE("PartitionStream matches the callback walk")
{
    for (int n = 1; n <= 8; ++n)
        for (auto cls : {PartitionClass::All, PartitionClass::Noncrossing, PartitionClass::Connected,
                         PartitionClass::PcPlus, PartitionClass::PurelyCrossing}) {
            PartitionStream stream(n, cls);
            std::vector<Partition> pulled;
            while (auto p = stream.next()) pulled.push_back(*p);
            CHECK(pulled == collect(n, cls));
            CHECK_FALSE(stream.next().has_value());
        }
}

TEST_CASE("prefix walks cover each member exactly once")
{
    const int n = 8;
    for (auto cls : {PartitionClass::All, PartitionClass::PurelyCrossing}) {
        std::vector<Partition> joined;
        for (const auto& prefix : work_prefixes(n, cls, 4))
            for_each_rgs(n, cls, prefix, [&](std::span<const int> r) { joined.push_back(Partition::from_rgs(r)); });
        CHECK(joined == collect(n, cls));
    }
    // A prefix that already has neighbours in one block yields nothing for PC.
    int seen = 0;
    for_each_rgs(6, PartitionClass::PurelyCrossing, std::vector<int>{0, 0}, [&](std::span<const int>) { ++seen; });
    CHECK(seen == 0);
}

TEST_CASE("counts")
{
    CHECK(count(10, PartitionClass::PurelyCrossing, 1) == 1494);
    CHECK(count(12, PartitionClass::Connected, 2) == 355884);
    CHECK(count(9, PartitionClass::PcPlus, 1) == 360);
    CHECK(count(5, PartitionClass::PurelyCrossing) == 0);
    auto catalan = oracle::catalan(12);
    for (int n = 1; n <= 12; ++n) CHECK(count(n, PartitionClass::Noncrossing) == static_cast<long>(catalan[static_cast<std::size_t>(n)]));
}

TEST_CASE("count does not depend on worker count")
{
    for (auto cls : {PartitionClass::All, PartitionClass::Noncrossing, PartitionClass::Connected, PartitionClass::PcPlus,
                     PartitionClass::PurelyCrossing}) {
        const auto base = count(9, cls, 1);
        CHECK(count(9, cls, 2) == base);
        CHECK(count(9, cls, 8) == base);
    }
}

TEST_CASE("orbit sizes")
{
    CHECK(orbit_size(Partition::parse("1,4|2,5|3,6")) == 1);
    CHECK(orbit_size(Partition::parse("1,3|2,5|4,6")) == 3);
    CHECK(orbit_size(Partition::parse("1,3,6|2,4|5,7")) == 7);
    CHECK(orbit_size(Partition::parse("1,3|2,4")) == 1);
}

TEST_CASE("PC(6) and PC(7) split into the listed rotation orbits")
{
    auto orbits = [](int n) {
        std::map<Partition, int> out;
        for (const auto& p : collect(n, PartitionClass::PurelyCrossing)) ++out[orbit_representative(p)];
        return out;
    };
    auto six = orbits(6);
    CHECK(six.size() == 3);
    CHECK(six.at(orbit_representative(Partition::parse("1,3,5|2,4,6"))) == 1);
    CHECK(six.at(orbit_representative(Partition::parse("1,3|2,5|4,6"))) == 3);
    CHECK(six.at(orbit_representative(Partition::parse("1,4|2,5|3,6"))) == 1);
    auto seven = orbits(7);
    CHECK(seven.size() == 2);
    CHECK(seven.at(orbit_representative(Partition::parse("1,3,6|2,4|5,7"))) == 7);
    CHECK(seven.at(orbit_representative(Partition::parse("1,3,6|2,5|4,7"))) == 7);
}

TEST_CASE("class names")
{
    for (auto cls : {PartitionClass::All, PartitionClass::Noncrossing, PartitionClass::Connected, PartitionClass::PcPlus,
                     PartitionClass::PurelyCrossing})
        CHECK(parse_class(class_name(cls)) == cls);
    CHECK_FALSE(parse_class("bogus").has_value());
}
