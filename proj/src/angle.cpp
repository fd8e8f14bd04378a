#include "orbitope/angle.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace orbitope {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kTwoPiL = 2.0L * kPiL;

// Denominators stay well inside 64-bit range so that 4q fits comfortably.
constexpr std::int64_t kMaxDenominator = std::int64_t{1} << 40;

std::int64_t mod_positive(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// (cos, sin) of pi*r/q for 0 <= r < 2q. The argument is folded into the
// first octant with integer arithmetic, so multiples of pi/2 come out exact.
std::pair<double, double> cos_sin_pi_fraction(std::int64_t r, std::int64_t q) {
    const std::int64_t m = 2 * r;  // units of pi/(2q), in [0, 4q)
    const std::int64_t quadrant = m / q;
    const std::int64_t rem = m % q;

    long double c;
    long double s;
    if (rem == 0) {
        c = 1.0L;
        s = 0.0L;
    } else if (2 * rem > q) {
        const long double psi = kPiL * static_cast<long double>(q - rem) / (2.0L * q);
        c = std::sin(psi);
        s = std::cos(psi);
    } else {
        const long double phi = kPiL * static_cast<long double>(rem) / (2.0L * q);
        c = std::cos(phi);
        s = std::sin(phi);
    }

    switch (quadrant) {
    case 0:
        return {static_cast<double>(c), static_cast<double>(s)};
    case 1:
        return {static_cast<double>(-s), static_cast<double>(c)};
    case 2:
        return {static_cast<double>(-c), static_cast<double>(-s)};
    default:
        return {static_cast<double>(s), static_cast<double>(-c)};
    }
}

std::int64_t reduced_multiple(std::int64_t d, std::int64_t p, std::int64_t q) {
    const std::int64_t two_q = 2 * q;
    const __int128 prod = static_cast<__int128>(mod_positive(d, two_q)) * p;
    return static_cast<std::int64_t>(prod % two_q);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::int64_t parse_integer(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("malformed angle: " + std::string(whole));
    }
    return v;
}

}  // namespace

Angle Angle::rational(std::int64_t p, std::int64_t q) {
    if (q <= 0) throw std::invalid_argument("angle denominator must be positive");
    if (q > kMaxDenominator) throw std::invalid_argument("angle denominator too large");
    std::int64_t np = mod_positive(p, 2 * q);
    const std::int64_t g = std::gcd(np, q);
    return Angle(RationalPi{np / g, q / g});
}

Angle Angle::radians(double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("angle must be finite");
    return from_long_double(static_cast<long double>(value));
}

Angle Angle::from_long_double(long double v) {
    v = std::fmod(v, kTwoPiL);
    if (v < 0) v += kTwoPiL;
    if (v >= kTwoPiL) v = 0;
    return Angle(Real{v});
}

std::int64_t Angle::numerator() const {
    if (const auto* r = std::get_if<RationalPi>(&rep_)) return r->p;
    throw std::logic_error("angle is not a rational multiple of pi");
}

std::int64_t Angle::denominator() const {
    if (const auto* r = std::get_if<RationalPi>(&rep_)) return r->q;
    throw std::logic_error("angle is not a rational multiple of pi");
}

long double Angle::value_ld() const {
    if (const auto* r = std::get_if<RationalPi>(&rep_)) {
        return kPiL * static_cast<long double>(r->p) / static_cast<long double>(r->q);
    }
    return std::get<Real>(rep_).value;
}

double Angle::value() const { return static_cast<double>(value_ld()); }

Angle Angle::negated() const {
    if (const auto* r = std::get_if<RationalPi>(&rep_)) return rational(-r->p, r->q);
    return from_long_double(-std::get<Real>(rep_).value);
}

Angle Angle::shifted(double offset) const {
    return from_long_double(value_ld() + static_cast<long double>(offset));
}

std::string Angle::to_string() const {
    if (const auto* r = std::get_if<RationalPi>(&rep_)) {
        if (r->p == 0) return "0";
        std::string s = r->p == 1 ? "pi" : std::to_string(r->p) + "*pi";
        if (r->q != 1) s += "/" + std::to_string(r->q);
        return s;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value());
    return buf;
}

bool operator==(const Angle& a, const Angle& b) {
    if (a.is_rational() && b.is_rational()) {
        return a.numerator() == b.numerator() && a.denominator() == b.denominator();
    }
    long double d = std::fabs(a.value_ld() - b.value_ld());
    d = std::min(d, kTwoPiL - d);
    return d < kAngleTolerance;
}

double cos_at(std::int64_t d, const Angle& theta) {
    if (const auto* r = std::get_if<Angle::RationalPi>(&theta.rep_)) {
        return cos_sin_pi_fraction(reduced_multiple(d, r->p, r->q), r->q).first;
    }
    return static_cast<double>(std::cos(static_cast<long double>(d) * theta.value_ld()));
}

double sin_at(std::int64_t d, const Angle& theta) {
    if (const auto* r = std::get_if<Angle::RationalPi>(&theta.rep_)) {
        return cos_sin_pi_fraction(reduced_multiple(d, r->p, r->q), r->q).second;
    }
    return static_cast<double>(std::sin(static_cast<long double>(d) * theta.value_ld()));
}

double chebyshev_t(int d, double x) {
    if (d < 0) throw std::invalid_argument("Chebyshev degree must be nonnegative");
    if (!(std::fabs(x) <= 1.0 + 1e-12)) throw std::domain_error("Chebyshev argument outside [-1, 1]");
    if (d == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (int n = 2; n <= d; ++n) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Angle parse_angle(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty angle");

    const auto pi_pos = s.find("pi");
    if (pi_pos == std::string_view::npos) {
        double v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw std::invalid_argument("malformed angle: " + std::string(s));
        }
        return Angle::radians(v);
    }

    std::string_view head = trim(s.substr(0, pi_pos));
    std::string_view tail = trim(s.substr(pi_pos + 2));

    std::int64_t p = 1;
    if (head == "-") {
        p = -1;
    } else if (!head.empty() && head != "+") {
        if (head.back() != '*') throw std::invalid_argument("malformed angle: " + std::string(s));
        head.remove_suffix(1);
        head = trim(head);
        if (!head.empty() && head.front() == '+') head.remove_prefix(1);
        p = parse_integer(head, s);
    }

    std::int64_t q = 1;
    if (!tail.empty()) {
        if (tail.front() != '/') throw std::invalid_argument("malformed angle: " + std::string(s));
        q = parse_integer(trim(tail.substr(1)), s);
    }
    return Angle::rational(p, q);
}

double arc_length(const Angle& a, const Angle& b) {
    long double d = std::fabs(a.value_ld() - b.value_ld());
    d = std::fmod(d, kTwoPiL);
    return static_cast<double>(std::min(d, kTwoPiL - d));
}

}  // namespace orbitope
