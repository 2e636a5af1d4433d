#pragma once

// Bailey pairs as truncated tables and the transformations that grow the
// parity multisum out of the unit pair.

#include <optional>
#include <string>
#include <vector>

#include <gordon/partitions.hpp>
#include <gordon/qseries.hpp>

namespace gordon::bailey
{

// beta_n = sum_{r<=n} alpha_r / ((Q;Q)_{n-r} (aQ;Q)_{n+r}) with a = q^a_exponent
// and Q = q^base, checked below `order`.
struct BaileyPair {
    Rational a_exponent = 0;
    Rational base = 1;
    Rational order = 0;
    std::vector<Series> alpha;
    std::vector<Series> beta;

    int n_max() const noexcept { return static_cast<int>(alpha.size()) - 1; }
};

enum class Transform { S1, S2, D1, P41 };

std::string to_string(Transform t);

struct PairCheck {
    bool ok = true;
    std::optional<int> first_bad_n;
    std::optional<Discrepancy> discrepancy;
};

PairCheck check_pair_detail(const BaileyPair &bp);
bool check_pair(const BaileyPair &bp);

// a = 1: beta = (1, 0, 0, ...), alpha_0 = 1 and
// alpha_n = (-1)^n (q^{n(n-1)/2} + q^{n(n+1)/2}).
BaileyPair unit_pair(int n_max, Rational order);

// alpha'_r = a^r q^{r^2} alpha_r.
BaileyPair apply_S1(const BaileyPair &bp);
// alpha'_r = a^{r/2} q^{r^2/2} alpha_r; beta' carries (-sqrt(aq); q) factors.
BaileyPair apply_S2(const BaileyPair &bp);
// Base change: alpha'_n(q) = alpha_n(q^2) and beta' sums (-aq;q)_{2r} q^{n-r}/(q^2;q^2)_{n-r} beta_r(q^2).
BaileyPair apply_D1(const BaileyPair &bp);
// Needs alpha_n = (-1)^n q^{An^2}(q^{(A-1)n} + q^{-(A-1)n}), alpha_0 = 1 (a = 1).
// beta'_n = q^n beta_n and alpha' takes the same shape with A-1 replaced by A.
BaileyPair apply_P41(const BaileyPair &bp, Rational A);

// alpha_0 = 1, alpha_n = (-1)^n q^{Q n^2}(q^{L n} + q^{-L n}).
Series two_term_alpha(Rational Q, Rational L, int n, Rational order);
bool has_P41_shape(const BaileyPair &bp, Rational A);

struct ChainStage {
    // Empty for the seed.
    std::optional<Transform> transform;
    // P41 parameter.
    Rational A = 0;
    BaileyPair pair;
    PairCheck check;
};

// Unit pair, D1, then (S2, S2, P41) repeated (k-a-1)/2 times, then S2 a
// times. Needs k and a of opposite parity.
std::vector<ChainStage> chain_stages(const GordonParams &gp, int n_max, Rational order);
BaileyPair build_chain(const GordonParams &gp, int n_max, Rational order);

// (-1)^n q^{(k+1)n^2/2}(q^{-(k-a+1)n/2} + q^{(k-a+1)n/2}), alpha_0 = 1.
Series alpha_closed_form(const GordonParams &gp, int n, Rational order);

// The multisum for beta^{(k)}_n with (-sqrt q; q)_n in the denominator once
// or twice.
enum class BetaForm { single, doubled };
std::string to_string(BetaForm f);
Series displayed_beta(const GordonParams &gp, int n, Rational order, BetaForm form);

// Which displayed forms agree with the chain's beta for every n <= n_check.
std::vector<BetaForm> matching_beta_forms(const GordonParams &gp, int n_check, Rational order);

// Both sides of the n -> infinity identity, on the half-integer grid.
struct LimitIdentity {
    Series lhs;
    Series rhs;
    int depth = 0;
};

// n large enough that the finite relation at n is exact below `order`.
int limit_depth(Rational order);

// Both sides read off the chain's pair at n = limit_depth(order).
LimitIdentity limit_identity(const GordonParams &gp, Rational order);
// Direct evaluations: the (-sqrt q; q)_{N_{k-1}} multisum, and
// (-sqrt q;q)_inf/(q;q)_inf times the bilateral theta series.
Series limit_lhs_direct(const GordonParams &gp, Rational order);
Series limit_rhs_direct(const GordonParams &gp, Rational order);

} // namespace gordon::bailey
