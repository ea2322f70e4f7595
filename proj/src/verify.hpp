#pragma once

#include "rational.hpp"

#include <string>
#include <vector>

namespace fermatlat {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail; // filled in on failure
};

struct PrimeReport {
    long p = 0;
    long r = 0;
    long s = 0;
    Rational a_p;
    std::vector<CheckResult> checks;

    bool ok() const;
    std::vector<std::string> failed_names() const;
    std::string to_json() const;
};

/// Runs every identity the library knows about one prime: fibre
/// relation, split sanity, adjunction, the closed-form coefficients and
/// correction squares, the blow-down numbers, and the bound identities.
/// With inject_fault the configuration is corrupted first, to prove the
/// checks can fail.
PrimeReport verify_prime(long p, bool inject_fault = false);

} // namespace fermatlat
