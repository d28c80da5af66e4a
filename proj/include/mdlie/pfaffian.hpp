#pragma once

namespace mdlie {

/// Pfaffian of the 4x4 skew matrix with strict upper triangle
/// (b12, b13, b14, b23, b24, b34). Its square is the determinant.
/// Works for any ring-like scalar (Rational, PolyQ).
template <typename T>
T pfaffian4(const T& b12, const T& b13, const T& b14, const T& b23, const T& b24, const T& b34) {
    return b12 * b34 - b13 * b24 + b14 * b23;
}

}  // namespace mdlie
