#include "mdlie/unit_point.hpp"

#include "mdlie/errors.hpp"

namespace mdlie {

UnitPoint::UnitPoint(Rational c, Rational s) : c_(std::move(c)), s_(std::move(s)) {
    if (c_ * c_ + s_ * s_ != Rational(1))
        throw InputError("angle point " + str() + " is not on the unit circle");
    if (s_.sign() <= 0) throw InputError("angle point " + str() + " needs sin > 0 (angle in (0, pi))");
}

UnitPoint UnitPoint::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw InputError("angle must be written cos:sin, got \"" + std::string(text) + "\"");
    return UnitPoint(Rational::parse(text.substr(0, colon)), Rational::parse(text.substr(colon + 1)));
}

}  // namespace mdlie
