#include "lappell/rational.hpp"

#include <cctype>
#include <ostream>

#include "lappell/errors.hpp"

namespace lappell {

Rational::Rational(long num, long den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (sgn(v_.get_den()) == 0) throw domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    // Accepted grammar: -?digits(/digits)?  with a nonzero denominator.
    auto is_digits = [](std::string_view t) {
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view body = s;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    const auto slash = body.find('/');
    bool ok;
    if (slash == std::string_view::npos) {
        ok = is_digits(body);
    } else {
        ok = is_digits(body.substr(0, slash)) && is_digits(body.substr(slash + 1));
    }
    if (!ok) throw parse_error("malformed rational: '" + std::string(s) + "'");

    mpq_class v;
    if (v.set_str(std::string(s), 10) != 0)
        throw parse_error("malformed rational: '" + std::string(s) + "'");
    if (sgn(v.get_den()) == 0)
        throw parse_error("rational with zero denominator: '" + std::string(s) + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational abs(const Rational& x) {
    return x.sign() < 0 ? -x : x;
}

Rational pow(const Rational& x, int n) {
    if (n < 0) {
        if (x.is_zero()) throw domain_error("zero to a negative power");
        return Rational(1) / pow(x, -n);
    }
    Rational r(1), base(x);
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
}

} // namespace lappell
