#include "ppf/galois_ring.hpp"

#include <map>

namespace ppf {

std::uint64_t gr_encode(const Field& f, GrElem x) {
    return (std::uint64_t(x.a) << f.n()) | x.b;
}

GrElem gr_decode(const Field& f, std::uint64_t v) {
    return GrElem{static_cast<Fe>(v >> f.n()),
                  static_cast<Fe>(v & (f.order() - 1))};
}

GrElem gr_add(const Field& f, GrElem x, GrElem y) {
    return GrElem{x.a ^ y.a, static_cast<Fe>(x.b ^ y.b ^ f.sqrt(f.mul(x.a, y.a)))};
}

GrElem gr_neg(const Field&, GrElem x) { return GrElem{x.a, static_cast<Fe>(x.b ^ x.a)}; }

GrElem gr_sub(const Field& f, GrElem x, GrElem y) { return gr_add(f, x, gr_neg(f, y)); }

GrElem gr_mul(const Field& f, GrElem x, GrElem y) {
    return GrElem{f.mul(x.a, y.a),
                  static_cast<Fe>(f.mul(x.a, y.b) ^ f.mul(x.b, y.a))};
}

Z4 tr_r(const Field& f, GrElem x) {
    GrElem s{0, 0};
    Fe conj = x.a;
    for (unsigned k = 0; k < f.n(); ++k) {
        s = gr_add(f, s, GrElem{conj, 0});
        conj = f.mul(conj, conj);
    }
    s.b ^= f.trace(x.b, 1);
    if (s.a > 1 || s.b > 1)
        throw std::logic_error("tr_R left Z4; Galois-ring arithmetic is broken");
    return static_cast<Z4>(s.a + 2 * s.b);
}

std::vector<GrElem> rds_from_function(const DOQuad& F) {
    const Field& f = F.field();
    if (f.n() > 12)
        throw std::invalid_argument("relative difference sets are limited to 2^n <= 2^12");
    std::vector<GrElem> D;
    D.reserve(f.order());
    for (std::uint64_t x = 0; x < f.order(); ++x) {
        const Fe fx = static_cast<Fe>(x);
        D.push_back(GrElem{fx, f.sqrt(F.eval(fx))});
    }
    return D;
}

RdsReport verify_rds(const Field& f, const std::vector<GrElem>& D) {
    if (D.size() != f.order())
        throw std::invalid_argument("|D| must be 2^n");
    const std::uint64_t ring = f.order() * f.order();
    std::vector<std::uint16_t> cover(ring, 0);
    for (std::size_t i = 0; i < D.size(); ++i)
        for (std::size_t j = 0; j < D.size(); ++j) {
            if (i == j) continue;
            ++cover[gr_encode(f, gr_sub(f, D[i], D[j]))];
        }

    RdsReport rep;
    rep.ok = true;
    std::map<std::uint64_t, std::uint64_t> hist;
    for (std::uint64_t v = 0; v < ring; ++v) {
        const GrElem e = gr_decode(f, v);
        const bool forbidden = (e.a == 0); // 2R = {0 + 2b}
        if (forbidden) {
            if (v != 0 && cover[v] != 0) {
                rep.forbidden_hits += cover[v];
                if (rep.ok) {
                    rep.ok = false;
                    rep.first_violation = v;
                    rep.violation_kind = "forbidden";
                }
            }
            continue;
        }
        ++hist[cover[v]];
        if (cover[v] == 1) {
            ++rep.unit_covered;
        } else if (rep.ok) {
            rep.ok = false;
            rep.first_violation = v;
            rep.violation_kind = cover[v] == 0 ? "under" : "over";
        }
    }
    rep.histogram.assign(hist.begin(), hist.end());
    return rep;
}

} // namespace ppf
