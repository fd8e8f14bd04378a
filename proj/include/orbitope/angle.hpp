#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace orbitope {

/// An angle on the circle, canonicalized into [0, 2*pi).
///
/// Rational multiples of pi are kept exact as a reduced fraction p/q with
/// 0 <= p/q < 2, so that node angles such as 2*pi/5 evaluate reproducibly.
/// Free-valued angles are stored in extended precision; negating one is
/// then exact to well below double rounding.
class Angle {
public:
    /// The angle p*pi/q. Throws std::invalid_argument for q <= 0.
    static Angle rational(std::int64_t p, std::int64_t q);
    static Angle radians(double value);

    Angle() : Angle(rational(0, 1)) {}

    bool is_rational() const { return std::holds_alternative<RationalPi>(rep_); }
    /// Numerator/denominator of the pi-fraction; only meaningful when rational.
    std::int64_t numerator() const;
    std::int64_t denominator() const;

    double value() const;
    long double value_ld() const;

    Angle negated() const;
    /// Rotation by a real offset; the result is always free-valued.
    Angle shifted(double offset) const;

    /// "p*pi/q" for rational angles, 17 significant digits otherwise.
    std::string to_string() const;

    /// Rational angles compare exactly; anything involving a free-valued
    /// angle compares the circular distance against 1e-12.
    friend bool operator==(const Angle& a, const Angle& b);

private:
    struct RationalPi {
        std::int64_t p;
        std::int64_t q;
    };
    struct Real {
        long double value;
    };

    explicit Angle(RationalPi r) : rep_(r) {}
    explicit Angle(Real r) : rep_(r) {}
    static Angle from_long_double(long double v);

    std::variant<RationalPi, Real> rep_;

    friend double cos_at(std::int64_t d, const Angle& theta);
    friend double sin_at(std::int64_t d, const Angle& theta);
};

/// Tolerance used when comparing free-valued angles.
inline constexpr double kAngleTolerance = 1e-12;

/// cos(d * theta). Rational angles reduce d*p modulo 2q in integer
/// arithmetic before any transcendental call; multiples of pi/2 are exact.
double cos_at(std::int64_t d, const Angle& theta);
double sin_at(std::int64_t d, const Angle& theta);

/// Chebyshev polynomial of the first kind by the three-term recurrence.
/// Throws std::domain_error when |x| exceeds 1 by more than 1e-12.
double chebyshev_t(int d, double x);

/// Parses "p*pi/q", "pi/q", "-pi", "2*pi", ... into an exact angle, and any
/// other input as decimal radians. Throws std::invalid_argument.
Angle parse_angle(std::string_view text);

/// Shortest arc length between two points of the unit circle, in [0, pi].
double arc_length(const Angle& a, const Angle& b);

}  // namespace orbitope
