#pragma once

#include <vector>

#include "koon/distribution.hpp"

namespace koon {

// A k-out-of-n system of independent active components plus one cold standby
// unit. The system works while at least k actives work; when the (n-k+1)-th
// failure occurs the standby takes over, and the system dies at the earlier of
// the standby's death or the (n-k+2)-th active failure.
struct SystemSpec {
    long n = 0;
    long k = 0;
    std::vector<DiscreteLifetime> active;
    // Defaults to a point mass at 0 so the struct is default-constructible;
    // validate() does not care, every real spec overwrites it.
    DiscreteLifetime standby = DiscreteLifetime::finite_pmf({1.0});

    // Throws InvalidArgs unless 1 <= k <= n and active.size() == n.
    void validate() const;

    bool iid_active() const;
};

}  // namespace koon
