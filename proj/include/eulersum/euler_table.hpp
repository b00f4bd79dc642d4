#pragma once

// Harmonic numbers, finite Euler partial sums and the table of known full
// Euler sums E(l, n) = sum_{j>=1} H_j^l / j^n.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>

#include "eulersum/closed_form.hpp"
#include "eulersum/rational.hpp"

namespace eulersum {

/// H_m = 1 + 1/2 + ... + 1/m, H_0 = 0. Memoized, safe for concurrent use.
Rational harmonic(long m);

/// P(l, n, m) = sum_{j=1}^m H_j^l / j^n. Memoized, safe for concurrent use.
Rational partial_euler(int hexp, int npow, long m);

/// sum_{k>=1} H_k / k^n = (n/2 + 1) zeta(n+1) - 1/2 sum_{j=1}^{n-2} zeta(n-j) zeta(j+1), n >= 2.
ClosedForm euler_linear(int npow);

class EulerTable {
public:
    /// Table with the built-in quadratic, cubic and quartic entries.
    EulerTable();

    /// E(0,n) and E(1,n) come from their formulas, everything else from the
    /// stored entries. std::nullopt means the value is not known.
    [[nodiscard]] std::optional<ClosedForm> lookup(EulerSumKey key) const;

    /// Adds or replaces a stored entry. Keys with l <= 1 or n < 2 are rejected.
    void set(EulerSumKey key, ClosedForm value);

    /// Reads lines of the form `E <l> <n> = <closed form>`; blank lines and
    /// lines starting with '#' are skipped. Errors name the offending line.
    void load(std::istream& in);
    void load_file(const std::filesystem::path& path);

    [[nodiscard]] const std::map<EulerSumKey, ClosedForm>& entries() const { return entries_; }

private:
    std::map<EulerSumKey, ClosedForm> entries_;
};

}  // namespace eulersum
