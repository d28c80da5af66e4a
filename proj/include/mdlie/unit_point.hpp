#pragma once

#include "mdlie/rational.hpp"

#include <string>
#include <string_view>

namespace mdlie {

/// A rational point (cos, sin) on the open upper unit semicircle, standing in
/// for an angle in (0, pi).
class UnitPoint {
public:
    /// Throws InputError unless c^2 + s^2 == 1 and s > 0.
    UnitPoint(Rational c, Rational s);
    /// Parses "c:s", e.g. "3/5:4/5".
    static UnitPoint parse(std::string_view text);

    const Rational& cos() const { return c_; }
    const Rational& sin() const { return s_; }
    std::string str() const { return c_.str() + ":" + s_.str(); }

    friend bool operator==(const UnitPoint&, const UnitPoint&) = default;

private:
    Rational c_;
    Rational s_;
};

}  // namespace mdlie
