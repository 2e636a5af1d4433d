#pragma once

// Both sides of the Andrews-Gordon identity, the parity-restricted
// variants, the (-q;q^2) multisum and its lattice-path count.

#include <optional>
#include <string>

#include <gordon/partitions.hpp>
#include <gordon/qseries.hpp>

namespace gordon::identities
{

enum class Theorem { AG, W_same, W_diff, Wbar_odd_even, Wbar_even_odd, Main, Paths };

std::string to_string(Theorem t);
Theorem theorem_from_string(const std::string &name);

// W and Wbar each have two parity regimes; pick the one that applies.
Theorem w_case(const GordonParams &gp);
std::optional<Theorem> wbar_case(const GordonParams &gp);

struct IdentitySpec {
    Theorem theorem = Theorem::Main;
    GordonParams gp;
    int order = 40;

    // Throws precondition_error when (k, a) violates the theorem's parity hypothesis.
    void validate() const;
};

struct VerificationReport {
    IdentitySpec spec;
    Series lhs;
    Series rhs;
    bool equal = false;
    std::optional<Discrepancy> first_discrepancy;
};

Series eval_multisum_AG(const GordonParams &gp, int order);
// theorem is W_same or W_diff.
Series eval_multisum_W(const GordonParams &gp, int order, Theorem parity_case);
// theorem is Wbar_odd_even or Wbar_even_odd.
Series eval_multisum_Wbar(const GordonParams &gp, int order, Theorem parity_case);
Series eval_multisum_main(const GordonParams &gp, int order);
// Generating function of a partition family from the pruned generator.
Series count_series(partitions::Family f, const GordonParams &gp, int order);
// Generating function of the admissible lattice paths.
Series path_series(const GordonParams &gp, int order);

Series eval_product_side(const IdentitySpec &spec);
// The multisum (or, for Paths, the path count) side.
Series eval_sum_side(const IdentitySpec &spec);

VerificationReport verify(const IdentitySpec &spec);

} // namespace gordon::identities
