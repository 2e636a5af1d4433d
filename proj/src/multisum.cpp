#include <gordon/multisum.hpp>

#include <limits>
#include <map>
#include <utility>

namespace gordon
{

namespace
{

void descend(std::vector<int> &cur, int length, Rational weight, Rational room, int cap,
             const std::function<void(std::span<const int>)> &visit)
{
    if (static_cast<int>(cur.size()) == length) {
        visit(cur);
        return;
    }
    for (int v = 0; v <= cap; ++v) {
        const Rational cost = weight * Rational(static_cast<std::int64_t>(v) * v);
        if (cost >= room) {
            break;
        }
        cur.push_back(v);
        descend(cur, length, weight, room - cost, v, visit);
        cur.pop_back();
    }
}

} // namespace

void for_each_descending(int length, Rational weight, Rational bound, std::optional<int> top,
                         const std::function<void(std::span<const int>)> &visit)
{
    if (length < 0 || weight <= 0) {
        throw precondition_error("need a nonnegative length and a positive square weight");
    }
    if (bound <= 0) {
        return;
    }
    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(length));
    int cap = top.value_or(std::numeric_limits<int>::max());
    if (cap < 0) {
        return;
    }
    descend(cur, length, weight, bound, cap, visit);
}

Series eval_multisum(const MultisumShape &shape, Rational order)
{
    Series total = Series::zero(order);
    std::map<std::pair<std::size_t, int>, Series> cache;
    auto factor = [&](std::size_t which, int count) -> const Series & {
        const auto key = std::make_pair(which, count);
        auto it = cache.find(key);
        if (it == cache.end()) {
            const IndexFactor &f = shape.factors[which];
            Series s = f.inverse ? invert_poch(f.spec, count, order) : poch_finite(f.spec, count, order);
            it = cache.emplace(key, std::move(s)).first;
        }
        return it->second;
    };

    for_each_descending(shape.length, shape.square_weight, order, shape.top, [&](std::span<const int> big) {
        const Rational e = shape.exponent(big);
        if (e >= order) {
            return;
        }
        Series term = Series::monomial(Integer(1), e, order);
        for (std::size_t i = 0; i < shape.factors.size(); ++i) {
            const IndexFactor &f = shape.factors[i];
            int count = 0;
            if (f.index == 0) {
                count = *shape.top - big_at(big, 1);
            } else {
                count = f.of_big ? big_at(big, f.index) : small_at(big, f.index);
            }
            if (count > 0) {
                term *= factor(i, count);
            }
        }
        total += term;
    });
    return total;
}

} // namespace gordon
