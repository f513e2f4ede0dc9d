#pragma once

#include "fglwb/expr.hpp"
#include "fglwb/combinat.hpp"
#include "fglwb/fgl.hpp"

namespace fglwb::test {

inline GradedPoly cp(int n) { return GradedPoly::cp(n); }
inline GradedPoly q(int i) { return GradedPoly::q(i); }
inline GradedPoly P(const std::string& text) { return parse_class(text); }

/// Tables shared across test cases; built once.
inline const FGLTable& fgl12() {
    static const FGLTable F = universal_fgl(12);
    return F;
}
inline const PairingTable& pairing12() {
    static const PairingTable A = pairing_series(fgl12());
    return A;
}

}  // namespace fglwb::test
