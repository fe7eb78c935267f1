#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <vector>

#include "cplab/freemoments.hpp"
#include "cplab/rational.hpp"

namespace cplab::oracles {

/// Catalan numbers by the convolution recurrence C_{n+1} = sum C_k C_{n-k}.
long long catalan(int n);

/// tau of a word over {X1, X2, X3, u, u^2} by brute-force enumeration:
/// sum over label-respecting non-crossing pairings of the X positions of the
/// product of u-marginals over the faces of the chord diagram. Entirely
/// independent of the centering recursion in freemoments.
Rational pairing_face_moment(const FreeWord& w);

}  // namespace cplab::oracles
