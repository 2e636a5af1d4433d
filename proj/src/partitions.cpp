#include <gordon/partitions.hpp>
#include <gordon/qseries.hpp>

#include <algorithm>
#include <sstream>

namespace gordon
{

void GordonParams::validate() const
{
    if (k < 1 || a < 1 || a > k) {
        throw precondition_error("need 1 <= a <= k, got k=" + std::to_string(k) + ", a=" + std::to_string(a));
    }
}

namespace partitions
{

Partition Partition::from_parts(const std::vector<int> &parts)
{
    Partition p;
    for (const int part : parts) {
        p.add(part);
    }
    return p;
}

int Partition::freq(int part) const
{
    const auto it = freqs_.find(part);
    return it == freqs_.end() ? 0 : it->second;
}

void Partition::add(int part, int multiplicity)
{
    if (part < 1 || multiplicity < 0) {
        throw precondition_error("parts must be positive");
    }
    if (multiplicity > 0) {
        freqs_[part] += multiplicity;
    }
}

std::int64_t Partition::weight() const
{
    std::int64_t w = 0;
    for (const auto &[part, f] : freqs_) {
        w += static_cast<std::int64_t>(part) * f;
    }
    return w;
}

int Partition::largest_part() const
{
    return freqs_.empty() ? 0 : freqs_.rbegin()->first;
}

std::string Partition::str() const
{
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto it = freqs_.rbegin(); it != freqs_.rend(); ++it) {
        os << (first ? "" : ",") << it->first << "^" << it->second;
        first = false;
    }
    os << ")";
    return os.str();
}

Family family_from_string(const std::string &name)
{
    if (name == "A") {
        return Family::A;
    }
    if (name == "B") {
        return Family::B;
    }
    if (name == "W") {
        return Family::W;
    }
    if (name == "Wbar") {
        return Family::Wbar;
    }
    throw precondition_error("unknown partition family '" + name + "'");
}

std::string to_string(Family f)
{
    switch (f) {
    case Family::A:
        return "A";
    case Family::B:
        return "B";
    case Family::W:
        return "W";
    case Family::Wbar:
        return "Wbar";
    }
    return "?";
}

bool is_gordon_admissible(const Partition &p, const GordonParams &gp)
{
    if (p.freq(1) > gp.a - 1) {
        return false;
    }
    const int top = p.largest_part();
    for (int i = 1; i <= top; ++i) {
        if (p.freq(i) + p.freq(i + 1) > gp.k - 1) {
            return false;
        }
    }
    return true;
}

bool even_parts_even(const Partition &p)
{
    for (const auto &[part, f] : p.freqs()) {
        if (part % 2 == 0 && f % 2 != 0) {
            return false;
        }
    }
    return true;
}

bool odd_parts_even(const Partition &p)
{
    for (const auto &[part, f] : p.freqs()) {
        if (part % 2 != 0 && f % 2 != 0) {
            return false;
        }
    }
    return true;
}

bool avoids_gordon_residues(const Partition &p, const GordonParams &gp)
{
    const int m = 2 * gp.k + 1;
    for (const auto &[part, f] : p.freqs()) {
        const int r = part % m;
        if (r == 0 || r == gp.a || r == m - gp.a) {
            return false;
        }
    }
    return true;
}

bool in_family(const Partition &p, Family f, const GordonParams &gp)
{
    switch (f) {
    case Family::A:
        return avoids_gordon_residues(p, gp);
    case Family::B:
        return is_gordon_admissible(p, gp);
    case Family::W:
        return is_gordon_admissible(p, gp) && even_parts_even(p);
    case Family::Wbar:
        return is_gordon_admissible(p, gp) && odd_parts_even(p);
    }
    return false;
}

namespace
{

void visit_rec(int remaining, int max_part, Partition &cur, const std::function<void(const Partition &)> &visit)
{
    if (remaining == 0) {
        visit(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        Partition next = cur;
        next.add(part);
        visit_rec(remaining - part, part, next, visit);
    }
}

} // namespace

void for_each_partition(int n, const std::function<void(const Partition &)> &visit)
{
    if (n < 0) {
        return;
    }
    Partition empty;
    visit_rec(n, n, empty, visit);
}

std::uint64_t count_naive(Family f, int n, const GordonParams &gp)
{
    gp.validate();
    std::uint64_t count = 0;
    for_each_partition(n, [&](const Partition &p) {
        if (in_family(p, f, gp)) {
            ++count;
        }
    });
    return count;
}

namespace
{

// Frequencies are fixed for parts 1, 2, ... in turn; `prev` is f_{part-1}.
void gordon_rec(int part, int prev, int used, int n_max, const GordonParams &gp, Family f,
                std::vector<std::uint64_t> &table)
{
    if (part > n_max - used) {
        ++table[static_cast<std::size_t>(used)];
        return;
    }
    const int cap = (part == 1 ? gp.a - 1 : gp.k - 1 - prev);
    const bool need_even = (f == Family::W && part % 2 == 0) || (f == Family::Wbar && part % 2 != 0);
    for (int m = 0; m <= cap && used + m * part <= n_max; ++m) {
        if (need_even && m % 2 != 0) {
            continue;
        }
        gordon_rec(part + 1, m, used + m * part, n_max, gp, f, table);
    }
}

void residue_rec(int part, int used, int n_max, const GordonParams &gp, std::vector<std::uint64_t> &table)
{
    if (part > n_max - used) {
        ++table[static_cast<std::size_t>(used)];
        return;
    }
    const int m = 2 * gp.k + 1;
    const int r = part % m;
    if (r == 0 || r == gp.a || r == m - gp.a) {
        residue_rec(part + 1, used, n_max, gp, table);
        return;
    }
    for (int w = used; w <= n_max; w += part) {
        residue_rec(part + 1, w, n_max, gp, table);
    }
}

} // namespace

std::vector<std::uint64_t> count_table(Family f, const GordonParams &gp, int n_max)
{
    gp.validate();
    if (n_max < 0) {
        return {};
    }
    std::vector<std::uint64_t> table(static_cast<std::size_t>(n_max) + 1, 0);
    if (f == Family::A) {
        residue_rec(1, 0, n_max, gp, table);
    } else {
        gordon_rec(1, 0, 0, n_max, gp, f, table);
    }
    return table;
}

std::vector<std::uint64_t> count_table_naive(Family f, const GordonParams &gp, int n_max)
{
    std::vector<std::uint64_t> table;
    for (int n = 0; n <= n_max; ++n) {
        table.push_back(count_naive(f, n, gp));
    }
    return table;
}

std::uint64_t count_A(int n, const GordonParams &gp)
{
    return n < 0 ? 0 : count_table(Family::A, gp, n).back();
}

std::uint64_t count_B(int n, const GordonParams &gp)
{
    return n < 0 ? 0 : count_table(Family::B, gp, n).back();
}

std::uint64_t count_W(int n, const GordonParams &gp)
{
    return n < 0 ? 0 : count_table(Family::W, gp, n).back();
}

std::uint64_t count_Wbar(int n, const GordonParams &gp)
{
    return n < 0 ? 0 : count_table(Family::Wbar, gp, n).back();
}

} // namespace partitions
} // namespace gordon
