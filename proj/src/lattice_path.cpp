#include <gordon/lattice_path.hpp>
#include <gordon/qseries.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gordon::paths
{

namespace
{

int delta(Step s)
{
    switch (s) {
    case Step::NE:
        return 1;
    case Step::SE:
        return -1;
    case Step::E:
        return 0;
    }
    return 0;
}

std::vector<int> heights_of(int start, const std::vector<Step> &steps)
{
    std::vector<int> h;
    h.reserve(steps.size() + 1);
    h.push_back(start);
    for (const Step s : steps) {
        h.push_back(h.back() + delta(s));
    }
    return h;
}

bool is_peak_at(const std::vector<Step> &steps, std::size_t x)
{
    return x >= 1 && x < steps.size() && steps[x - 1] == Step::NE && steps[x] == Step::SE;
}

std::vector<int> peak_positions(const std::vector<Step> &steps)
{
    std::vector<int> out;
    for (std::size_t x = 1; x < steps.size(); ++x) {
        if (is_peak_at(steps, x)) {
            out.push_back(static_cast<int>(x));
        }
    }
    return out;
}

std::vector<Peak> peaks_of(int start, const std::vector<Step> &steps)
{
    const std::vector<int> h = heights_of(start, steps);
    const int last = static_cast<int>(h.size()) - 1;
    std::vector<Peak> out;
    for (const int x : peak_positions(steps)) {
        const int y = h[static_cast<std::size_t>(x)];
        int min_left = y;
        for (int j = x - 1; j >= 0 && h[static_cast<std::size_t>(j)] < y; --j) {
            min_left = std::min(min_left, h[static_cast<std::size_t>(j)]);
        }
        int min_right = y;
        for (int j = x + 1; j <= last && h[static_cast<std::size_t>(j)] <= y; ++j) {
            min_right = std::min(min_right, h[static_cast<std::size_t>(j)]);
        }
        out.push_back({x, y, y - std::max(min_left, min_right)});
    }
    return out;
}

int east_before(const std::vector<Step> &steps, int x)
{
    const auto end = steps.begin() + std::min<std::ptrdiff_t>(x, static_cast<std::ptrdiff_t>(steps.size()));
    return static_cast<int>(std::count(steps.begin(), end, Step::E));
}

bool admissible_raw(int start, const std::vector<Step> &steps, const GordonParams &gp, EastReading reading)
{
    if (start != gp.k + 1 - gp.a) {
        return false;
    }
    const std::vector<int> h = heights_of(start, steps);
    if (*std::max_element(h.begin(), h.end()) > gp.k) {
        return false;
    }
    int last_tall = -1;
    for (const Peak &p : peaks_of(start, steps)) {
        if ((p.weight - p.relative_height) % 2 != 0) {
            return false;
        }
        if (p.relative_height >= gp.k - 1) {
            if (east_before(steps, p.weight) % 4 != 0) {
                return false;
            }
            last_tall = p.weight;
        }
    }
    if (reading == EastReading::none_after_last_tall_peak) {
        const int tail = east_before(steps, static_cast<int>(steps.size())) - east_before(steps, std::max(last_tall, 0));
        return tail == 0;
    }
    return true;
}

std::vector<Step> steps_from(std::string_view text)
{
    std::vector<Step> out;
    out.reserve(text.size());
    for (const char c : text) {
        switch (c) {
        case 'N':
            out.push_back(Step::NE);
            break;
        case 'S':
            out.push_back(Step::SE);
            break;
        case 'E':
            out.push_back(Step::E);
            break;
        default:
            throw precondition_error(std::string("unknown step '") + c + "'");
        }
    }
    return out;
}

void insert_at(std::vector<Step> &steps, std::size_t pos, std::initializer_list<Step> what)
{
    steps.insert(steps.begin() + static_cast<std::ptrdiff_t>(pos), what);
}

} // namespace

LatticePath::LatticePath(int start_height, std::vector<Step> steps) : start_(start_height), steps_(std::move(steps))
{
    if (const auto err = validation_error(start_, steps_)) {
        throw precondition_error(*err);
    }
}

std::optional<std::string> LatticePath::validation_error(int start_height, const std::vector<Step> &steps)
{
    if (start_height < 0) {
        return "start height must be nonnegative";
    }
    int y = start_height;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == Step::E && y != 0) {
            return "E step off the x-axis at x=" + std::to_string(i);
        }
        y += delta(steps[i]);
        if (y < 0) {
            return "path goes below the x-axis at x=" + std::to_string(i + 1);
        }
    }
    if (y != 0) {
        return "path must end on the x-axis";
    }
    if (!steps.empty() && steps.back() != Step::SE) {
        return "path must end with a SE step";
    }
    return std::nullopt;
}

LatticePath LatticePath::from_string(int start_height, std::string_view steps)
{
    return LatticePath(start_height, steps_from(steps));
}

LatticePath LatticePath::parse(std::string_view compact)
{
    const auto colon = compact.find(':');
    if (compact.substr(0, 2) != "h=" || colon == std::string_view::npos) {
        throw precondition_error("expected 'h=<height>:<steps>'");
    }
    const std::string num(compact.substr(2, colon - 2));
    std::size_t used = 0;
    int h = 0;
    try {
        h = std::stoi(num, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (num.empty() || used != num.size()) {
        throw precondition_error("bad start height '" + num + "'");
    }
    return from_string(h, compact.substr(colon + 1));
}

std::vector<int> LatticePath::heights() const
{
    return heights_of(start_, steps_);
}

int LatticePath::max_height() const
{
    const auto h = heights();
    return *std::max_element(h.begin(), h.end());
}

std::string LatticePath::step_string() const
{
    std::string s;
    s.reserve(steps_.size());
    for (const Step st : steps_) {
        s.push_back(static_cast<char>(st));
    }
    return s;
}

std::string LatticePath::compact() const
{
    return "h=" + std::to_string(start_) + ":" + step_string();
}

std::vector<Peak> peaks(const LatticePath &p)
{
    return peaks_of(p.start_height(), p.steps());
}

std::int64_t major_index(const LatticePath &p)
{
    std::int64_t sum = 0;
    for (const int x : peak_positions(p.steps())) {
        sum += x;
    }
    return sum;
}

int east_steps_before(const LatticePath &p, int x)
{
    return east_before(p.steps(), x);
}

std::string to_string(EastReading r)
{
    return r == EastReading::before_each_tall_peak ? "before_each_tall_peak" : "none_after_last_tall_peak";
}

bool is_S_admissible(const LatticePath &p, const GordonParams &gp, EastReading reading)
{
    gp.validate();
    return admissible_raw(p.start_height(), p.steps(), gp, reading);
}

namespace
{

struct Search {
    const GordonParams &gp;
    int n_max;
    EastReading reading;
    const std::function<void(const LatticePath &)> &visit;
    std::vector<Step> steps;

    void run(int x, int y, int major)
    {
        if (y == 0 && !steps.empty() && steps.back() == Step::SE) {
            if (admissible_raw(gp.k + 1 - gp.a, steps, gp, reading)) {
                visit(LatticePath(gp.k + 1 - gp.a, steps));
            }
        }
        // Any NE step is followed by a peak at abscissa x+1 or later; an E
        // step must be followed by NE.
        if (y < gp.k && major + x + 1 <= n_max) {
            steps.push_back(Step::NE);
            run(x + 1, y + 1, major);
            steps.pop_back();
        }
        if (y > 0) {
            const int m = major + (!steps.empty() && steps.back() == Step::NE ? x : 0);
            if (m <= n_max) {
                steps.push_back(Step::SE);
                run(x + 1, y - 1, m);
                steps.pop_back();
            }
        }
        if (y == 0 && major + x + 2 <= n_max) {
            steps.push_back(Step::E);
            run(x + 1, y, major);
            steps.pop_back();
        }
    }
};

} // namespace

void for_each_admissible_path(const GordonParams &gp, int n_max, const std::function<void(const LatticePath &)> &visit,
                              EastReading reading)
{
    gp.validate();
    if (n_max < 0) {
        return;
    }
    Search s{gp, n_max, reading, visit, {}};
    s.run(0, gp.k + 1 - gp.a, 0);
}

std::vector<std::uint64_t> count_S_table(const GordonParams &gp, int n_max, EastReading reading)
{
    if (n_max < 0) {
        return {};
    }
    std::vector<std::uint64_t> table(static_cast<std::size_t>(n_max) + 1, 0);
    for_each_admissible_path(
        gp, n_max, [&](const LatticePath &p) { ++table[static_cast<std::size_t>(major_index(p))]; }, reading);
    return table;
}

std::uint64_t count_S(int n, const GordonParams &gp, EastReading reading)
{
    return n < 0 ? 0 : count_S_table(gp, n, reading).back();
}

LatticePath volcanic_uplift(const LatticePath &p, std::size_t peak_index)
{
    const auto pos = peak_positions(p.steps());
    if (peak_index >= pos.size()) {
        throw precondition_error("no peak with index " + std::to_string(peak_index));
    }
    std::vector<Step> steps = p.steps();
    insert_at(steps, static_cast<std::size_t>(pos[peak_index]), {Step::NE, Step::SE});
    return LatticePath(p.start_height(), std::move(steps));
}

MoveResult right_move_tracked(const LatticePath &p, std::size_t peak_index)
{
    const auto pk = peaks(p);
    if (peak_index >= pk.size()) {
        throw precondition_error("no peak with index " + std::to_string(peak_index));
    }
    std::size_t i = peak_index;
    while (i + 1 < pk.size() && pk[i + 1].weight - pk[i].weight == 2) {
        ++i;
    }
    if (pk[i].relative_height != 1) {
        throw precondition_error("right-move needs a peak of relative height 1");
    }
    const auto x = static_cast<std::size_t>(pk[i].weight);
    std::vector<Step> steps = p.steps();
    if (x + 1 >= steps.size()) {
        // The x-axis continues past the end: treat it as an E step.
        steps.push_back(Step::E);
    }
    const Step next = steps[x + 1];
    // N S X -> X N S
    steps[x - 1] = next;
    steps[x] = Step::NE;
    steps[x + 1] = Step::SE;
    if (next == Step::NE && (x + 2 >= steps.size() || steps[x + 2] != Step::NE)) {
        throw precondition_error("right-move into a climb needs two NE steps");
    }
    if (auto err = LatticePath::validation_error(p.start_height(), steps)) {
        throw precondition_error("right-move blocked: " + *err);
    }
    return {LatticePath(p.start_height(), std::move(steps)), i};
}

LatticePath right_move(const LatticePath &p, std::size_t peak_index)
{
    return right_move_tracked(p, peak_index).path;
}

MoveResult left_move_tracked(const LatticePath &p, std::size_t peak_index)
{
    const auto pk = peaks(p);
    if (peak_index >= pk.size()) {
        throw precondition_error("no peak with index " + std::to_string(peak_index));
    }
    std::size_t i = peak_index;
    while (i > 0 && pk[i].weight - pk[i - 1].weight == 2) {
        --i;
    }
    const auto x = static_cast<std::size_t>(pk[i].weight);
    if (x < 2) {
        throw precondition_error("left-move blocked at the start of the path");
    }
    std::vector<Step> steps = p.steps();
    // X N S -> N S X
    const Step prev = steps[x - 2];
    steps[x - 2] = Step::NE;
    steps[x - 1] = Step::SE;
    steps[x] = prev;
    while (!steps.empty() && steps.back() == Step::E) {
        steps.pop_back();
    }
    if (auto err = LatticePath::validation_error(p.start_height(), steps)) {
        throw precondition_error("left-move blocked: " + *err);
    }
    return {LatticePath(p.start_height(), std::move(steps)), i};
}

void ConstructionData::validate() const
{
    gp.validate();
    if (gp.same_parity()) {
        throw precondition_error("the path construction needs k and a of opposite parity");
    }
    const auto k = static_cast<std::size_t>(gp.k);
    if (n.size() != k - 1) {
        throw precondition_error("need k-1 entries in n");
    }
    if (std::any_of(n.begin(), n.end(), [](int v) { return v < 0; })) {
        throw precondition_error("n entries must be nonnegative");
    }
    const int m = n.back();
    if (east_partition.size() != static_cast<std::size_t>(m)) {
        throw precondition_error("east partition needs one entry per initial peak");
    }
    if (!std::is_sorted(east_partition.rbegin(), east_partition.rend()) ||
        (!east_partition.empty() && east_partition.back() < 0)) {
        throw precondition_error("east partition must be nonincreasing and nonnegative");
    }
    const std::set<int> ranks(uplift_ranks.begin(), uplift_ranks.end());
    if (ranks.size() != uplift_ranks.size() ||
        std::any_of(uplift_ranks.begin(), uplift_ranks.end(), [m](int r) { return r < 1 || r > m; })) {
        throw precondition_error("uplift ranks must be distinct and within 1..n_{k-1}");
    }
    if (right_moves.size() != k - 2) {
        throw precondition_error("need one right-move list per stage 1..k-2");
    }
    for (std::size_t j = 0; j + 2 < k; ++j) {
        const auto &mv = right_moves[j];
        if (mv.size() != static_cast<std::size_t>(n[j])) {
            throw precondition_error("stage " + std::to_string(j + 1) + " needs n_j right-move counts");
        }
        if (!std::is_sorted(mv.rbegin(), mv.rend()) || (!mv.empty() && mv.back() < 0)) {
            throw precondition_error("right-move counts must be nonincreasing and nonnegative");
        }
    }
}

std::int64_t ConstructionData::base_exponent() const
{
    // N_i = n_i + ... + n_{k-1}
    std::vector<std::int64_t> big(n.size() + 1, 0);
    for (std::size_t i = n.size(); i-- > 0;) {
        big[i] = big[i + 1] + n[i];
    }
    std::int64_t e = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        e += big[i] * big[i];
    }
    for (int j = gp.a; j <= gp.k - 1; j += 2) {
        e += 2 * big[static_cast<std::size_t>(j - 1)];
    }
    return e;
}

std::int64_t ConstructionData::weight() const
{
    std::int64_t w = base_exponent();
    w += 4 * std::accumulate(east_partition.begin(), east_partition.end(), std::int64_t{0});
    for (const int r : uplift_ranks) {
        w += 2 * r - 1;
    }
    for (const auto &mv : right_moves) {
        w += 2 * std::accumulate(mv.begin(), mv.end(), std::int64_t{0});
    }
    return w;
}

ConstructionData minimal_data(const GordonParams &gp, const std::vector<int> &n)
{
    ConstructionData cd;
    cd.gp = gp;
    cd.n = n;
    if (!n.empty()) {
        cd.east_partition.assign(static_cast<std::size_t>(std::max(n.back(), 0)), 0);
    }
    for (std::size_t j = 0; j + 1 < n.size(); ++j) {
        cd.right_moves.emplace_back(static_cast<std::size_t>(std::max(n[j], 0)), 0);
    }
    cd.validate();
    return cd;
}

LatticePath forward_construct(const ConstructionData &cd)
{
    cd.validate();
    const int k = cd.gp.k;
    const int a = cd.gp.a;
    const int m = cd.n.back();

    std::vector<Step> steps{Step::SE, Step::SE};
    for (int i = 0; i < m; ++i) {
        steps.push_back(Step::NE);
        steps.push_back(Step::SE);
    }
    int h0 = 2;

    // The i-th peak from the right gets 4(b_i - b_{i+1}) new E steps in front
    // of its NE step, so 4 b_i lie before it in total.
    for (int i = 1; i <= m; ++i) {
        const auto pos = peak_positions(steps);
        const int x = pos[static_cast<std::size_t>(m - i)];
        const int next = i < m ? cd.east_partition[static_cast<std::size_t>(i)] : 0;
        const int cnt = 4 * (cd.east_partition[static_cast<std::size_t>(i - 1)] - next);
        steps.insert(steps.begin() + x - 1, static_cast<std::size_t>(cnt), Step::E);
    }

    std::vector<int> ranks = cd.uplift_ranks;
    std::sort(ranks.begin(), ranks.end());
    LatticePath path(h0, steps);
    for (const int r : ranks) {
        path = volcanic_uplift(path, static_cast<std::size_t>(m - r));
    }

    for (int j = k - 2; j >= 1; --j) {
        const std::size_t count = peaks(path).size();
        for (std::size_t i = count; i-- > 0;) {
            path = volcanic_uplift(path, i);
        }
        const int nj = cd.n[static_cast<std::size_t>(j - 1)];
        std::vector<Step> grown;
        for (int i = 0; i < nj; ++i) {
            grown.push_back(Step::NE);
            grown.push_back(Step::SE);
        }
        grown.insert(grown.end(), path.steps().begin(), path.steps().end());
        path = LatticePath(h0, std::move(grown));

        const auto &moves = cd.right_moves[static_cast<std::size_t>(j - 1)];
        for (int idx = 0; idx < nj; ++idx) {
            std::size_t tracked = static_cast<std::size_t>(nj - 1 - idx);
            for (int t = 0; t < 2 * moves[static_cast<std::size_t>(idx)]; ++t) {
                auto res = right_move_tracked(path, tracked);
                path = std::move(res.path);
                tracked = res.moved_peak;
            }
        }
        if (j >= a && (j - a) % 2 == 0) {
            std::vector<Step> lowered{Step::SE, Step::SE};
            lowered.insert(lowered.end(), path.steps().begin(), path.steps().end());
            h0 += 2;
            path = LatticePath(h0, std::move(lowered));
        }
    }
    if (path.max_height() > k) {
        throw precondition_error("construction exceeded height k");
    }
    return path;
}

namespace
{

void require(bool ok, const std::string &what)
{
    if (!ok) {
        throw precondition_error("path is not reachable by the construction: " + what);
    }
}

bool starts_with_pair(const std::vector<Step> &steps, Step a, Step b)
{
    return steps.size() >= 2 && steps[0] == a && steps[1] == b;
}

// Remove the top NS of every peak (reverse of a full uplift).
std::vector<Step> lower_all_peaks(const std::vector<Step> &steps)
{
    std::vector<Step> out = steps;
    const auto pos = peak_positions(out);
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
        const auto x = static_cast<std::size_t>(*it);
        require(x >= 2 && out[x - 2] == Step::NE && x + 1 < out.size() && out[x + 1] == Step::SE,
                "peak too low to lower");
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(x) - 1, out.begin() + static_cast<std::ptrdiff_t>(x) + 1);
    }
    return out;
}

} // namespace

ConstructionData reverse_deconstruct(const LatticePath &p, const GordonParams &gp)
{
    gp.validate();
    if (gp.same_parity()) {
        throw precondition_error("the path construction needs k and a of opposite parity");
    }
    if (!is_S_admissible(p, gp)) {
        throw precondition_error("path is not admissible for (k, a)");
    }
    const int k = gp.k;
    const int a = gp.a;
    ConstructionData cd;
    cd.gp = gp;
    cd.n.assign(static_cast<std::size_t>(k - 1), 0);
    cd.right_moves.assign(static_cast<std::size_t>(k - 2), {});

    int h0 = p.start_height();
    std::vector<Step> steps = p.steps();
    for (int j = 1; j <= k - 2; ++j) {
        if (j >= a && (j - a) % 2 == 0) {
            require(starts_with_pair(steps, Step::SE, Step::SE), "missing leading descent");
            steps.erase(steps.begin(), steps.begin() + 2);
            h0 -= 2;
        }
        LatticePath cur(h0, steps);
        auto ones = [&cur] {
            std::vector<std::size_t> idx;
            const auto pk = peaks(cur);
            for (std::size_t i = 0; i < pk.size(); ++i) {
                if (pk[i].relative_height == 1) {
                    idx.push_back(i);
                }
            }
            return idx;
        };
        const int nj = static_cast<int>(ones().size());
        cd.n[static_cast<std::size_t>(j - 1)] = nj;
        std::vector<int> moves;
        for (int i = 0; i < nj; ++i) {
            std::size_t tracked = ones()[static_cast<std::size_t>(i)];
            const int target = 2 * i + 1;
            int count = 0;
            while (peaks(cur)[tracked].weight > target) {
                auto res = left_move_tracked(cur, tracked);
                cur = std::move(res.path);
                tracked = res.moved_peak;
                ++count;
            }
            require(peaks(cur)[tracked].weight == target && count % 2 == 0, "odd displacement");
            moves.push_back(count / 2);
        }
        std::reverse(moves.begin(), moves.end());
        cd.right_moves[static_cast<std::size_t>(j - 1)] = moves;

        steps = cur.steps();
        for (int i = 0; i < nj; ++i) {
            require(starts_with_pair(steps, Step::NE, Step::SE), "stage peaks not packed");
            steps.erase(steps.begin(), steps.begin() + 2);
        }
        steps = lower_all_peaks(steps);
    }

    require(h0 == 2 && starts_with_pair(steps, Step::SE, Step::SE), "bad initial descent");
    steps.erase(steps.begin(), steps.begin() + 2);
    const auto pk = peaks_of(0, steps);
    const int m = static_cast<int>(pk.size());
    cd.n.back() = m;
    for (int idx = 0; idx < m; ++idx) {
        if (pk[static_cast<std::size_t>(idx)].relative_height == 2) {
            cd.uplift_ranks.push_back(m - idx);
        }
    }
    std::sort(cd.uplift_ranks.begin(), cd.uplift_ranks.end());
    const auto pos = peak_positions(steps);
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
        const auto x = static_cast<std::size_t>(*it);
        if (x >= 2 && steps[x - 2] == Step::NE) {
            steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(x) - 1,
                        steps.begin() + static_cast<std::ptrdiff_t>(x) + 1);
        }
    }
    const auto low = peak_positions(steps);
    for (auto it = low.rbegin(); it != low.rend(); ++it) {
        const int e = east_before(steps, *it);
        require(e % 4 == 0, "East steps not in blocks of four");
        cd.east_partition.push_back(e / 4);
    }
    steps.erase(std::remove(steps.begin(), steps.end(), Step::E), steps.end());
    require(steps.size() == static_cast<std::size_t>(2 * m), "initial peaks not flat");
    for (int i = 0; i < m; ++i) {
        require(steps[static_cast<std::size_t>(2 * i)] == Step::NE && steps[static_cast<std::size_t>(2 * i + 1)] == Step::SE,
                "initial peaks not flat");
    }
    cd.validate();
    return cd;
}

namespace
{

void nonincreasing(std::size_t len, int budget, int cap, std::vector<int> &cur,
                   const std::function<void(const std::vector<int> &, int)> &visit)
{
    if (cur.size() == len) {
        visit(cur, budget);
        return;
    }
    for (int v = 0; v <= std::min(cap, budget); ++v) {
        cur.push_back(v);
        nonincreasing(len, budget - v, v, cur, visit);
        cur.pop_back();
    }
}

// Sequences v_1 >= ... >= v_len >= 0 with unit * sum <= budget; the callback
// receives the budget left over.
void for_each_nonincreasing(std::size_t len, int budget, int unit,
                            const std::function<void(const std::vector<int> &, int)> &visit)
{
    std::vector<int> cur;
    const int units = budget / unit;
    nonincreasing(len, units, units, cur,
                  [&](const std::vector<int> &v, int left) { visit(v, budget - unit * (units - left)); });
}

} // namespace

void for_each_construction(const GordonParams &gp, int max_weight,
                           const std::function<void(const ConstructionData &)> &visit)
{
    gp.validate();
    if (gp.same_parity()) {
        throw precondition_error("the path construction needs k and a of opposite parity");
    }
    const auto len = static_cast<std::size_t>(gp.k - 1);
    std::vector<int> big;
    std::function<void(int)> choose_big = [&](int squares) {
        if (big.size() == len) {
            ConstructionData cd;
            cd.gp = gp;
            cd.n.resize(len);
            for (std::size_t i = 0; i < len; ++i) {
                cd.n[i] = big[i] - (i + 1 < len ? big[i + 1] : 0);
            }
            const std::int64_t base = cd.base_exponent();
            if (base > max_weight) {
                return;
            }
            const int m = cd.n.back();
            for_each_nonincreasing(static_cast<std::size_t>(m), max_weight - static_cast<int>(base), 4,
                                   [&](const std::vector<int> &b, int left) {
                cd.east_partition = b;
                for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
                    int w = 0;
                    cd.uplift_ranks.clear();
                    for (int r = 1; r <= m; ++r) {
                        if ((mask >> (r - 1)) & 1u) {
                            cd.uplift_ranks.push_back(r);
                            w += 2 * r - 1;
                        }
                    }
                    if (w > left) {
                        continue;
                    }
                    cd.right_moves.assign(len - 1, {});
                    std::function<void(std::size_t, int)> stage = [&](std::size_t j, int rest) {
                        if (j == len - 1) {
                            visit(cd);
                            return;
                        }
                        for_each_nonincreasing(static_cast<std::size_t>(cd.n[j]), rest, 2,
                                               [&](const std::vector<int> &mv, int after) {
                            cd.right_moves[j] = mv;
                            stage(j + 1, after);
                        });
                    };
                    stage(0, left - w);
                }
            });
            return;
        }
        const int prev = big.empty() ? max_weight : big.back();
        for (int v = 0; v <= prev && squares + v * v <= max_weight; ++v) {
            big.push_back(v);
            choose_big(squares + v * v);
            big.pop_back();
        }
    };
    choose_big(0);
}

std::string render_svg(const LatticePath &p)
{
    constexpr int cell = 20;
    constexpr int margin = 20;
    const auto h = p.heights();
    const int top = *std::max_element(h.begin(), h.end());
    const int width = static_cast<int>(p.length()) * cell + 2 * margin;
    const int height = top * cell + 2 * margin;
    auto px = [&](int x) { return margin + x * cell; };
    auto py = [&](int y) { return margin + (top - y) * cell; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    os << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(static_cast<int>(p.length()))
       << "\" y2=\"" << py(0) << "\" stroke=\"#999\"/>\n";
    os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (std::size_t x = 0; x < h.size(); ++x) {
        os << (x ? " " : "") << px(static_cast<int>(x)) << "," << py(h[x]);
    }
    os << "\"/>\n";
    for (const Peak &pk : peaks(p)) {
        os << "  <circle cx=\"" << px(pk.weight) << "\" cy=\"" << py(pk.height) << "\" r=\"3\" fill=\"red\"/>\n";
        os << "  <text x=\"" << px(pk.weight) << "\" y=\"" << py(pk.height) - 6
           << "\" font-size=\"10\" text-anchor=\"middle\">" << pk.relative_height << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace gordon::paths
