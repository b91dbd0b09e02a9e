#include "lensgeom/d8.hpp"

#include <numeric>

#include "lensgeom/errors.hpp"

namespace lensgeom::s3 {

namespace {

// Every element acts as (z,w) -> (C1(u), C2(v)) where (u,v) is (z,w) or
// (w,z) and Ci optionally conjugates.
struct Action {
    bool swap, c1, c2;
};

constexpr Action kAction[8] = {
    {false, false, false}, // e
    {true, false, false},  // tau
    {false, true, false},  // c
    {true, false, true},   // tau c   : (w, conj z)
    {true, true, false},   // c tau   : (conj w, z)
    {true, true, true},    // c tau c : (conj w, conj z)
    {false, false, true},  // tau c tau : (z, conj w)
    {false, true, true},   // c tau c tau : (conj z, conj w)
};

using i64 = std::int64_t;
using i128 = __int128;

i64 mod_p(i128 v, i64 p) {
    i128 r = v % p;
    if (r < 0) r += p;
    return static_cast<i64>(r);
}

void require_params(i64 p, i64 q1, i64 q2) {
    if (p < 2 || q1 < 1 || q1 >= p || q2 < 1 || q2 >= p)
        throw precondition_error("require 1 <= q1, q2 < p");
}

} // namespace

Quat d8_apply(D8 I, const Quat& x) {
    const Action& a = kAction[static_cast<int>(I)];
    std::complex<double> u = x.z0(), v = x.z1();
    if (a.swap) std::swap(u, v);
    if (a.c1) u = std::conj(u);
    if (a.c2) v = std::conj(v);
    return Quat::from_complex(u, v);
}

D8 d8_compose(D8 a, D8 b) {
    const Action& ga = kAction[static_cast<int>(a)];
    const Action& gb = kAction[static_cast<int>(b)];
    Action r;
    r.swap = ga.swap != gb.swap;
    r.c1 = ga.c1 != (ga.swap ? gb.c2 : gb.c1);
    r.c2 = ga.c2 != (ga.swap ? gb.c1 : gb.c2);
    for (int i = 0; i < 8; ++i)
        if (kAction[i].swap == r.swap && kAction[i].c1 == r.c1 && kAction[i].c2 == r.c2)
            return static_cast<D8>(i);
    throw std::logic_error("d8_compose: table not closed");
}

std::int64_t d8_conjugate_exponent(D8 I, i64 p, i64 q1, i64 q2) {
    require_params(p, q1, q2);
    i128 e = 0;
    i128 prod = static_cast<i128>(q1) * q2;
    switch (I) {
    case D8::E: e = static_cast<i128>(q1) - q2; break;
    case D8::Tau: e = 1 - prod; break;
    case D8::C: e = static_cast<i128>(q1) + q2; break;
    case D8::TauC: e = -prod - 1; break;
    case D8::CTau: e = prod + 1; break;
    case D8::CTauC: e = prod - 1; break;
    case D8::TauCTau: e = -(static_cast<i128>(q1) + q2); break;
    case D8::CTauCTau: e = static_cast<i128>(q1) - q2; break;
    }
    return mod_p(e, p);
}

Certificate distinctness_certificate(i64 p, i64 q1, i64 q2) {
    require_params(p, q1, q2);
    if (std::gcd(p, q1) != 1 || std::gcd(p, q2) != 1)
        throw precondition_error("q1, q2 must be coprime to p");
    for (D8 I : kD8All)
        if (d8_conjugate_exponent(I, p, q1, q2) == 0) return {false, I};
    return {true, D8::E};
}

const char* to_string(D8 I) {
    switch (I) {
    case D8::E: return "e";
    case D8::Tau: return "tau";
    case D8::C: return "c";
    case D8::TauC: return "tau.c";
    case D8::CTau: return "c.tau";
    case D8::CTauC: return "c.tau.c";
    case D8::TauCTau: return "tau.c.tau";
    case D8::CTauCTau: return "c.tau.c.tau";
    }
    return "?";
}

} // namespace lensgeom::s3
