#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace equigrass {

// Exactly k nonnegative parts, stored ascending (zeros included).
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);  // sorts

    static Partition zeros(int k) { return Partition(std::vector<int>(k, 0)); }

    int k() const { return static_cast<int>(parts.size()); }
    int sum() const;
    int odd_count() const;

    auto operator<=>(const Partition&) const = default;
};

int weight(const Partition& p);

// partitions of n into k nonnegative parts with exactly j odd parts
std::uint64_t count_prt(int n, int k, int j);
std::uint64_t count_prt_enumerate(int n, int k, int j);
std::uint64_t count_prt_dp(int n, int k, int j);

std::vector<Partition> enumerate_partitions(int n, int k);
std::vector<Partition> successors(const Partition& p);
Partition minimal_root(const Partition& p);
// odd parts -1, even parts +1
Partition duality_bijection(const Partition& p);

std::string to_string(const Partition& p);
// orbit representative, part x on index i read as a_i^(x mod 2) b_i^(x div 2), e.g. "[a1 a2 b1]"
std::string orbit_string(const Partition& p);
// accepts "[0,1,3]", "0,1,3", "013" (unbracketed digit strings read one digit per part)
Partition parse_partition(const std::string& s);

}  // namespace equigrass
