#include "lappell/combinatorics.hpp"

#include <mutex>
#include <string>

#include "lappell/errors.hpp"

namespace lappell {

namespace {
constexpr int kDefaultBound = 64;
constexpr int kHardCap = 2048;
} // namespace

StirlingTable::StirlingTable(StirlingKind kind, int bound) : kind_(kind) {
    if (bound < 0) throw domain_error("stirling table with negative bound");
    rows_.push_back({Rational(1)}); // row 0
    extend(bound);
}

void StirlingTable::extend(int new_bound) {
    if (new_bound > kHardCap)
        throw domain_error("stirling table bound exceeds hard cap " + std::to_string(kHardCap));
    for (int n = bound() + 1; n <= new_bound; ++n) {
        std::vector<Rational> row(static_cast<size_t>(n) + 1, Rational(0));
        const auto& prev = rows_.back();
        for (int k = 1; k <= n; ++k) {
            const Rational& up_left = prev[static_cast<size_t>(k - 1)];
            const Rational up = k <= n - 1 ? prev[static_cast<size_t>(k)] : Rational(0);
            row[static_cast<size_t>(k)] =
                kind_ == StirlingKind::Second
                    ? Rational(k) * up + up_left
                    : up_left - Rational(n - 1) * up;
        }
        rows_.push_back(std::move(row));
    }
}

const Rational& StirlingTable::at(int n, int k) const {
    if (n < 0 || k < 0 || k > n || n > bound())
        throw domain_error("stirling index out of range: n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Rational stirling(StirlingKind kind, int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw domain_error("stirling index out of range: n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
    static std::mutex mtx;
    static StirlingTable second(StirlingKind::Second, kDefaultBound);
    static StirlingTable first(StirlingKind::FirstSigned, kDefaultBound);
    std::lock_guard<std::mutex> lock(mtx);
    StirlingTable& t = kind == StirlingKind::Second ? second : first;
    if (n > t.bound()) t.extend(n);
    return t.at(n, k);
}

Rational pochhammer(const Rational& a, int n) {
    if (n < 0) throw domain_error("pochhammer with negative index");
    Rational r(1);
    for (int i = 0; i < n; ++i) r *= a + Rational(i);
    return r;
}

Rational factorial(int n) {
    if (n < 0) throw domain_error("factorial of a negative integer");
    return pochhammer(Rational(1), n);
}

Rational binomial(const Rational& t, int k) {
    if (k < 0) throw domain_error("binomial with negative k");
    Rational num(1);
    for (int i = 0; i < k; ++i) num *= t - Rational(i);
    return num / factorial(k);
}

} // namespace lappell
