#ifndef PPF_GALOIS_RING_HPP
#define PPF_GALOIS_RING_HPP

#include "ppf/planar.hpp"

#include <optional>

namespace ppf {

// Residue of GR(4^n) arithmetic in Z/4Z.
using Z4 = std::uint8_t;

// An element a + 2b of GR(4^n) with a, b Teichmuller coordinates
// identified with GF(2^n) elements. The representation is unique.
struct GrElem {
    Fe a = 0;
    Fe b = 0;

    friend bool operator==(const GrElem&, const GrElem&) = default;
};

// Integer encoding (a << n) | b, used for tables and reports.
std::uint64_t gr_encode(const Field& f, GrElem x);
GrElem gr_decode(const Field& f, std::uint64_t v);

// Teichmuller addition carry rule: t(u) + t(v) = t(u^v) + 2 t(sqrt(uv)).
GrElem gr_add(const Field& f, GrElem x, GrElem y);
// -(a+2b) = a + 2(b^a), since 3 t(u) = t(u) + 2 t(u).
GrElem gr_neg(const Field& f, GrElem x);
GrElem gr_sub(const Field& f, GrElem x, GrElem y);
// (a+2b)(c+2d) = ac + 2(ad ^ bc).
GrElem gr_mul(const Field& f, GrElem x, GrElem y);

// tr_R(a+2b) = sum_k t(a^(2^k)) + 2 tr_{n/1}(b), the first sum taken in
// GR so the carries matter; the result lies in Z4.
Z4 tr_r(const Field& f, GrElem x);

// D = { t(x) + 2 t(sqrt(F(x))) : x in GF(2^n) }. Guarded to 2^n <= 2^12.
std::vector<GrElem> rds_from_function(const DOQuad& F);

struct RdsReport {
    bool ok = false;
    std::uint64_t unit_covered = 0;   // elements of R \ 2R hit exactly once
    std::uint64_t forbidden_hits = 0; // differences landing in 2R \ {0}
    // coverage multiplicity -> number of R \ 2R elements with it
    std::vector<std::pair<std::uint64_t, std::uint64_t>> histogram;
    std::optional<std::uint64_t> first_violation; // encoded element
    std::string violation_kind;                   // "over" | "under" | "forbidden"
};

// Checks that {d - d' : d != d'} covers every element of R \ 2R exactly
// once and never hits 2R \ {0}.
RdsReport verify_rds(const Field& f, const std::vector<GrElem>& D);

} // namespace ppf

#endif
