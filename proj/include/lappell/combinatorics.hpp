#pragma once

#include <vector>

#include "lappell/rational.hpp"

namespace lappell {

enum class StirlingKind {
    FirstSigned, ///< s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
    Second,      ///< S(n,k) = k S(n-1,k) + S(n-1,k-1)
};

/// Triangular table of Stirling numbers, rows 0..bound().
/// All values are integers stored exactly.
class StirlingTable {
public:
    StirlingTable(StirlingKind kind, int bound);

    StirlingKind kind() const { return kind_; }
    int bound() const { return static_cast<int>(rows_.size()) - 1; }

    /// Bounds-checked lookup, requires 0 <= k <= n <= bound().
    const Rational& at(int n, int k) const;

    void extend(int new_bound);

private:
    StirlingKind kind_;
    std::vector<std::vector<Rational>> rows_;
};

/// Memoized lookup in process-wide tables (eagerly built to 64 on first use,
/// grown on demand under a lock; hard cap 2048). Requires 0 <= k <= n.
Rational stirling(StirlingKind kind, int n, int k);

/// Rising product (a)_n = a (a+1) ... (a+n-1), (a)_0 = 1.
Rational pochhammer(const Rational& a, int n);

Rational factorial(int n);

/// Generalized binomial C(t, k) = t (t-1) ... (t-k+1) / k! for k >= 0.
Rational binomial(const Rational& t, int k);

} // namespace lappell
