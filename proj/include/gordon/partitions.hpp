#pragma once

// Brute-force partition oracles for the Rogers-Ramanujan-Gordon family and
// its parity-restricted variants.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gordon
{

// 1 <= a <= k.
struct GordonParams {
    int k = 1;
    int a = 1;

    void validate() const;
    bool same_parity() const noexcept { return (k - a) % 2 == 0; }
    friend bool operator==(const GordonParams &, const GordonParams &) = default;
};

namespace partitions
{

// Frequency representation (1^{f_1}, 2^{f_2}, ...). Zero multiplicities are
// never stored.
class Partition
{
public:
    Partition() = default;
    static Partition from_parts(const std::vector<int> &parts);

    int freq(int part) const;
    void add(int part, int multiplicity = 1);
    std::int64_t weight() const;
    int largest_part() const;
    const std::map<int, int> &freqs() const noexcept { return freqs_; }
    std::string str() const;

private:
    std::map<int, int> freqs_;
};

enum class Family { A, B, W, Wbar };

Family family_from_string(const std::string &name);
std::string to_string(Family f);

// f_1 <= a-1 and f_i + f_{i+1} <= k-1 for all i >= 1.
bool is_gordon_admissible(const Partition &p, const GordonParams &gp);
// Every even part has even multiplicity.
bool even_parts_even(const Partition &p);
// Every odd part has even multiplicity.
bool odd_parts_even(const Partition &p);
// No part congruent to 0 or +-a modulo 2k+1.
bool avoids_gordon_residues(const Partition &p, const GordonParams &gp);
bool in_family(const Partition &p, Family f, const GordonParams &gp);

// Visit every partition of n, largest part first.
void for_each_partition(int n, const std::function<void(const Partition &)> &visit);

// Reference counts: enumerate all partitions of n and filter.
std::uint64_t count_naive(Family f, int n, const GordonParams &gp);

std::uint64_t count_A(int n, const GordonParams &gp);
std::uint64_t count_B(int n, const GordonParams &gp);
std::uint64_t count_W(int n, const GordonParams &gp);
std::uint64_t count_Wbar(int n, const GordonParams &gp);

// [count(0), ..., count(n_max)] from a generator that only ever builds
// members of the family (frequencies chosen part by part, pruned on the
// remaining weight and on the adjacency/parity conditions).
std::vector<std::uint64_t> count_table(Family f, const GordonParams &gp, int n_max);
std::vector<std::uint64_t> count_table_naive(Family f, const GordonParams &gp, int n_max);

} // namespace partitions
} // namespace gordon
