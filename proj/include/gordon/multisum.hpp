#pragma once

// Nested sums over N_1 >= N_2 >= ... >= N_m >= 0 of a q-power times a
// product of Pochhammer factors in the differences n_i = N_i - N_{i+1}.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <gordon/qseries.hpp>

namespace gordon
{

// One Pochhammer factor (spec)_{count}, or its reciprocal. The count is
// n_index = N_index - N_{index+1} (with N_{m+1} = 0 and, when the sum has a
// top, N_0 = top), or N_index itself when `of_big` is set.
struct IndexFactor {
    int index = 1;
    bool of_big = false;
    PochSpec spec;
    bool inverse = true;
};

struct MultisumShape {
    int length = 0;
    // Terms are enumerated while square_weight * (N_1^2 + ... + N_m^2) < order.
    Rational square_weight = 1;
    // Upper bound N_1 <= top; also defines n_0 = top - N_1.
    std::optional<int> top;
    // Full exponent of the leading q-power (squares included).
    std::function<Rational(std::span<const int>)> exponent;
    std::vector<IndexFactor> factors;
};

// Visit N_1 >= ... >= N_m >= 0 (N_1 <= top) with weight*sum N_i^2 < bound.
void for_each_descending(int length, Rational weight, Rational bound, std::optional<int> top,
                         const std::function<void(std::span<const int>)> &visit);

Series eval_multisum(const MultisumShape &shape, Rational order);

// N_j for 1-based j, zero past the end.
inline int big_at(std::span<const int> big, int j)
{
    return j >= 1 && j <= static_cast<int>(big.size()) ? big[static_cast<std::size_t>(j - 1)] : 0;
}

// n_j = N_j - N_{j+1}.
inline int small_at(std::span<const int> big, int j)
{
    return big_at(big, j) - big_at(big, j + 1);
}

} // namespace gordon
