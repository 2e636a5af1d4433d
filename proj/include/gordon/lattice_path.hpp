#pragma once

// Lattice paths with NE/SE/E steps (East steps only on the x-axis), their
// peak statistics, and the staged construction that realizes each factor of
// the parity multisum as a path operation.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gordon/partitions.hpp>

namespace gordon::paths
{

enum class Step : char { NE = 'N', SE = 'S', E = 'E' };

// A path from (0, start_height). Valid paths never dip below the x-axis,
// take E steps only at height 0, and are either empty (from height 0) or
// finish with a SE step onto the x-axis.
class LatticePath
{
public:
    LatticePath() = default;
    LatticePath(int start_height, std::vector<Step> steps);

    static LatticePath from_string(int start_height, std::string_view steps);
    // "h=4:NSSE..." form.
    static LatticePath parse(std::string_view compact);
    static std::optional<std::string> validation_error(int start_height, const std::vector<Step> &steps);

    int start_height() const noexcept { return start_; }
    const std::vector<Step> &steps() const noexcept { return steps_; }
    std::size_t length() const noexcept { return steps_.size(); }
    // Height of every vertex; size length()+1.
    std::vector<int> heights() const;
    int max_height() const;

    std::string step_string() const;
    std::string compact() const;

    friend bool operator==(const LatticePath &, const LatticePath &) = default;

private:
    int start_ = 0;
    std::vector<Step> steps_;
};

// A vertex preceded by NE and followed by SE. Its weight is its x-coordinate.
struct Peak {
    int weight = 0;
    int height = 0;
    int relative_height = 0;

    friend bool operator==(const Peak &, const Peak &) = default;
};

// Peaks left to right with their relative heights.
std::vector<Peak> peaks(const LatticePath &p);
std::int64_t major_index(const LatticePath &p);
// Number of E steps among the first x steps.
int east_steps_before(const LatticePath &p, int x);

// Readings of the East-step condition on peaks of relative height k or k-1
// ("tall" peaks).
enum class EastReading {
    // The E steps before every tall peak number a multiple of 4.
    before_each_tall_peak,
    // As above, and no E step after the last tall peak.
    none_after_last_tall_peak,
};

std::string to_string(EastReading r);

// Start at (0, k+1-a), height at most k, weight = relative height (mod 2)
// at every peak, and the East-step condition.
bool is_S_admissible(const LatticePath &p, const GordonParams &gp,
                     EastReading reading = EastReading::before_each_tall_peak);

// Every admissible path with major index <= n_max. The search only extends a
// prefix while a further peak could still fit in the remaining major index,
// so it is exhaustive.
void for_each_admissible_path(const GordonParams &gp, int n_max, const std::function<void(const LatticePath &)> &visit,
                              EastReading reading = EastReading::before_each_tall_peak);
std::vector<std::uint64_t> count_S_table(const GordonParams &gp, int n_max,
                                         EastReading reading = EastReading::before_each_tall_peak);
std::uint64_t count_S(int n, const GordonParams &gp, EastReading reading = EastReading::before_each_tall_peak);

// Cut the path open at the peak, separate by two units and insert a peak one
// unit higher. Peaks to the right move by 2, so the major index grows by
// 1 + 2*(number of peaks to the right).
LatticePath volcanic_uplift(const LatticePath &p, std::size_t peak_index);

struct MoveResult {
    LatticePath path;
    // Index of the peak that actually moved (after any transfer).
    std::size_t moved_peak = 0;
};

// One elementary right-move of a relative-height-1 peak; the major index
// grows by exactly 1. While the next peak sits two units to the right the
// move is handed on to it. The peak's NS pair then trades places with the
// following step: past an E step (the end of the path counts as one, since
// the x-axis continues), past NE into a climb, or past SE down a slope.
MoveResult right_move_tracked(const LatticePath &p, std::size_t peak_index);
LatticePath right_move(const LatticePath &p, std::size_t peak_index);

// Exact inverse of right_move_tracked: hands the move leftward across peaks
// two units apart, then swaps the NS pair with the preceding step. Trailing
// E steps are dropped.
MoveResult left_move_tracked(const LatticePath &p, std::size_t peak_index);

// Choices that pick one path out of a multisum summand. Stage j runs over
// 1..k-2; the initial stage belongs to n_{k-1}.
struct ConstructionData {
    GordonParams gp;
    // n_1, ..., n_{k-1}
    std::vector<int> n;
    // b_1 >= b_2 >= ... >= 0, one per initial peak counted from the right;
    // the i-th peak from the right has 4*b_i East steps before it.
    std::vector<int> east_partition;
    // Ranks (counted from the right, 1-based) of initial peaks that get the
    // extra uplift; rank r contributes 2r-1.
    std::vector<int> uplift_ranks;
    // right_moves[j-1]: double-step counts of the stage-j peaks, rightmost
    // first, nonincreasing.
    std::vector<std::vector<int>> right_moves;

    void validate() const;
    // N_1^2 + ... + N_{k-1}^2 + 2N_a + 2N_{a+2} + ... + 2N_{k-1}
    std::int64_t base_exponent() const;
    // base_exponent() plus every stored choice weight.
    std::int64_t weight() const;

    friend bool operator==(const ConstructionData &, const ConstructionData &) = default;
};

// All-zero choices for the given n-vector.
ConstructionData minimal_data(const GordonParams &gp, const std::vector<int> &n);

LatticePath forward_construct(const ConstructionData &cd);
ConstructionData reverse_deconstruct(const LatticePath &p, const GordonParams &gp);

// Every ConstructionData whose weight is <= max_weight.
void for_each_construction(const GordonParams &gp, int max_weight,
                           const std::function<void(const ConstructionData &)> &visit);

std::string render_svg(const LatticePath &p);

} // namespace gordon::paths
