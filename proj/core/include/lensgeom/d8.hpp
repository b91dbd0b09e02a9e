#pragma once

#include <cstdint>

#include "lensgeom/quat.hpp"

namespace lensgeom::s3 {

/// The eight isometries of S^3 generated by the swap tau(z,w) = (w,z) and the
/// conjugation c(z,w) = (conj(z), w); they are exactly the isometries fixing
/// the Clifford torus {|z| = |w|} up to translations. Words act right-to-left:
/// TauC means "apply c, then tau".
enum class D8 : int {
    E = 0,
    Tau,
    C,
    TauC,
    CTau,
    CTauC,
    TauCTau,
    CTauCTau,
};

inline constexpr D8 kD8All[8] = {D8::E,    D8::Tau,   D8::C,       D8::TauC,
                                 D8::CTau, D8::CTauC, D8::TauCTau, D8::CTauCTau};

Quat d8_apply(D8 I, const Quat& x);

/// Group composition a∘b (apply b first).
D8 d8_compose(D8 a, D8 b);

/// Rotation exponent of the composite built from powers of the (p,q1)-lens
/// generator with the I-conjugate of the (p,q2)-lens generator: the composite
/// fixes the first complex factor and rotates the second by 2*pi*e/p, where e
/// is this exponent:
///
///   e        q1 - q2        tau      1 - q1*q2
///   c        q1 + q2        tau c   -q1*q2 - 1
///   c tau    q1*q2 + 1      c tau c  q1*q2 - 1
///   tau c tau  -(q1 + q2)   c tau c tau  q1 - q2
///
/// The result is reduced into [0, p).
std::int64_t d8_conjugate_exponent(D8 I, std::int64_t p, std::int64_t q1, std::int64_t q2);

/// Valid when every composite above rotates nontrivially (all eight exponents
/// nonzero mod p); otherwise carries the first order-listed element with a
/// vanishing exponent.
struct Certificate {
    bool valid;
    D8 witness; // meaningful only when !valid
};

Certificate distinctness_certificate(std::int64_t p, std::int64_t q1, std::int64_t q2);

const char* to_string(D8 I);

} // namespace lensgeom::s3
