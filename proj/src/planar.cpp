#include "ppf/planar.hpp"

#include <algorithm>

namespace ppf {

DOQuad DOQuad::zero(const Field& f) {
    DOQuad F;
    F.field_ = &f;
    if (f.has_split()) F.family_ = FamilyCoeffs::zero(f.t(), f.m());
    return F;
}

DOQuad DOQuad::from_generic(const Field& f,
                            const std::vector<std::pair<Exponent, Fe>>& terms) {
    DOQuad F;
    F.field_ = &f;
    for (const auto& [e, c] : terms) {
        const auto [i, j] = e;
        if (i >= j || j >= f.n())
            throw std::invalid_argument("generic term needs exponents 0 <= i < j < n");
        if (c) F.coeffs_[e] ^= c;
    }
    std::erase_if(F.coeffs_, [](const auto& kv) { return kv.second == 0; });

    // Recover the family view when the split is set and every exponent
    // difference is a multiple of m.
    if (f.has_split()) {
        const unsigned m = f.m();
        FamilyCoeffs fam = FamilyCoeffs::zero(f.t(), m);
        bool structured = true;
        for (const auto& [e, c] : F.coeffs_) {
            const unsigned d = e.second - e.first;
            if (d % m != 0) { structured = false; break; }
            fam.c[d / m - 1][e.first] = c;
        }
        if (structured) F.family_ = std::move(fam);
    }
    return F;
}

DOQuad DOQuad::from_family(const Field& f,
                           const std::vector<std::tuple<unsigned, unsigned, Fe>>& terms) {
    const unsigned t = f.t(), m = f.m(), n = f.n();
    std::vector<std::pair<Exponent, Fe>> generic;
    for (const auto& [k, i, c] : terms) {
        if (k < 1 || k >= t)
            throw std::invalid_argument("family term needs 1 <= k <= t-1");
        if (c == 0) continue;
        const unsigned lo = i % n, hi = (k * m + i) % n;
        generic.push_back({{std::min(lo, hi), std::max(lo, hi)}, c});
    }
    DOQuad F = from_generic(f, generic);
    if (!F.family_)
        throw std::logic_error("family normalization failed to produce a structured view");
    return F;
}

const FamilyCoeffs& DOQuad::family() const {
    if (!family_)
        throw std::invalid_argument("function is not in the structured family form");
    return *family_;
}

Fe DOQuad::eval(Fe x) const {
    const Field& f = *field_;
    // Frobenius powers of x, shared across terms.
    Fe fx[Field::max_degree];
    fx[0] = x;
    for (unsigned i = 1; i < f.n(); ++i) fx[i] = f.mul(fx[i - 1], fx[i - 1]);
    Fe acc = 0;
    for (const auto& [e, c] : coeffs_)
        acc ^= f.mul(c, f.mul(fx[e.first], fx[e.second]));
    return acc;
}

std::vector<Fe> DOQuad::value_table() const {
    std::vector<Fe> tab(field_->order());
    for (std::uint64_t x = 0; x < field_->order(); ++x)
        tab[x] = eval(static_cast<Fe>(x));
    return tab;
}

bool is_pp_bruteforce(const DOQuad& F) {
    const Field& f = F.field();
    if (f.n() > 20)
        throw std::invalid_argument(
            "field too large for the brute-force test; use the family criterion");
    const std::uint64_t size = f.order();
    const std::vector<Fe> tab = F.value_table();
    std::vector<std::uint32_t> stamp(size, 0);
    for (std::uint64_t a = 1; a < size; ++a) {
        const Fe fa = static_cast<Fe>(a);
        for (std::uint64_t x = 0; x < size; ++x) {
            const Fe v = tab[x ^ a] ^ tab[x] ^ f.mul(fa, static_cast<Fe>(x));
            if (stamp[v] == a) return false; // value hit twice for this a
            stamp[v] = static_cast<std::uint32_t>(a);
        }
    }
    return true;
}

Fe criterion_det(const Field& f, const FamilyCoeffs& fam, Fe b) {
    const unsigned t = f.t(), m = f.m();
    const std::uint64_t q = f.q();
    const LinPoly A = dual_of_derivative(f, fam, b);
    switch (t) {
    case 2:
        // b^(q+1) + A_1^2
        return f.pow(b, q + 1) ^ f.sqr(A.coeffs[1]);
    case 3:
        // b^(q^2+q+1) + tr_{n/m}(b^q A_2^2)
        return f.pow(b, q * q + q + 1) ^
               f.trace(f.mul(f.frob(b, m), f.sqr(A.coeffs[2])), m);
    case 4: {
        // b^(q^3+q^2+q+1) + A_2^(2q+2) + A_3^(2q^2+2) + A_3^(2q^3+2q)
        //   + b^(q^2+1) A_2^(2q) + b^(q^3+q) A_2^2 + tr_{n/m}(b^(q^2+q) A_3^2)
        const Fe A2 = A.coeffs[2], A3 = A.coeffs[3];
        const Fe A2sq = f.sqr(A2), A3sq = f.sqr(A3);
        Fe det = f.pow(b, q * q * q + q * q + q + 1);
        det ^= f.mul(A2sq, f.frob(A2sq, m));                       // A_2^(2q+2)
        det ^= f.mul(A3sq, f.frob(A3sq, 2 * m));                   // A_3^(2q^2+2)
        det ^= f.mul(f.frob(A3sq, 3 * m), f.frob(A3sq, m));        // A_3^(2q^3+2q)
        det ^= f.mul(f.pow(b, q * q + 1), f.frob(A2sq, m));        // b^(q^2+1) A_2^(2q)
        det ^= f.mul(f.pow(b, q * q * q + q), A2sq);               // b^(q^3+q) A_2^2
        det ^= f.trace(f.mul(f.pow(b, q * q + q), A3sq), m);       // tr(b^(q^2+q) A_3^2)
        return det;
    }
    default:
        return dickson_det(f, A);
    }
}

bool is_pp_criterion(const DOQuad& F) {
    const Field& f = F.field();
    const FamilyCoeffs& fam = F.family(); // throws when no structured view
    const Fe g = f.generator();
    Fe b = 1;
    for (std::uint64_t j = 0; j < f.group_order(); ++j) {
        if (criterion_det(f, fam, b) == 0) return false;
        b = f.mul(b, g);
    }
    return true;
}

bool trinomial_condition(const Field& f, Fe c1, Fe c2, Fe c3) {
    if (f.t() != 3) throw std::invalid_argument("trinomial_condition needs t = 3");
    const unsigned m = f.m();
    const std::uint64_t q = f.q();
    const Fe s1 = f.sqr(c1), s2 = f.sqr(c2), s3 = f.sqr(c3);
    const Fe g = f.generator();
    Fe b = 1;
    for (std::uint64_t j = 0; j < f.group_order(); ++j) {
        Fe v = f.pow(b, q * q + q + 1);
        Fe arg = 0;
        if (s1) arg ^= f.mul(s1, f.pow(b, q * q + 2));
        if (s2) arg ^= f.mul(s2, f.pow(b, 3));
        if (s3) arg ^= f.mul(s3, f.pow(b, q + 2));
        v ^= f.trace(arg, m);
        if (v == 0) return false;
        b = f.mul(b, g);
    }
    return true;
}

bool mono_t3_condition(const Field& f, Fe c) {
    if (f.t() != 3) throw std::invalid_argument("mono_t3_condition needs t = 3");
    if (c == 0) throw std::invalid_argument("mono_t3_condition needs c != 0");
    const unsigned m = f.m();
    const std::uint64_t q = f.q();
    // Cube test: for even n every third power index must vanish; for odd
    // n cubing is a bijection.
    if (f.n() % 2 == 0 && f.pow(c, f.group_order() / 3) != 1)
        throw std::invalid_argument("c is not a cube");
    Fe c0 = 0;
    for (std::uint64_t y = 1; y < f.order(); ++y) {
        const Fe fy = static_cast<Fe>(y);
        if (f.mul(fy, f.sqr(fy)) == c) { c0 = fy; break; }
    }
    const Fe u = f.pow(f.inv(c0), 2 * (q * q + q + 1));
    if (u == 1) return false;
    const Fe iu1 = f.inv(u ^ 1);
    const std::vector<Fe> gq = f.subfield_elements(m);
    for (Fe b2 : gq) {
        const Fe b3 = f.mul(b2 ^ 1, iu1);
        // Cubic over GF(q) is reducible iff it has a root in GF(q).
        bool has_root = false;
        for (Fe x : gq) {
            const Fe x2 = f.sqr(x);
            if ((f.mul(x2, x) ^ x2 ^ f.mul(b2, x) ^ b3) == 0) { has_root = true; break; }
        }
        if (!has_root) return false;
    }
    return true;
}

// --- family constructors ------------------------------------------------

static void need_t(const Field& f, unsigned t, const char* who) {
    if (!f.has_split() || f.t() != t)
        throw std::invalid_argument(std::string(who) + " needs the t=" +
                                    std::to_string(t) + " split");
}

DOQuad fam_t3_binomial(const Field& f, Fe c) {
    need_t(f, 3, "fam_t3_binomial");
    return DOQuad::from_family(f, {{1, 1, c}, {2, 1, f.frob(c, f.m())}});
}

DOQuad fam_t3_quadrinomial(const Field& f) {
    need_t(f, 3, "fam_t3_quadrinomial");
    return DOQuad::from_family(f, {{1, 1, 1}, {2, 0, 1}, {1, f.m(), 1}, {2, 1, 1}});
}

DOQuad fam_t3_trinomial_alpha(const Field& f) {
    need_t(f, 3, "fam_t3_trinomial_alpha");
    Fe alpha = 0;
    for (std::uint64_t x = 1; x < f.order(); ++x) {
        const Fe fx = static_cast<Fe>(x);
        const Fe x2 = f.sqr(fx);
        if ((f.mul(x2, fx) ^ x2 ^ 1) == 0) { alpha = fx; break; }
    }
    if (alpha == 0) throw std::logic_error("no root of x^3+x^2+1; 3 | n expected");
    return DOQuad::from_family(f, {{1, 0, 1}, {1, f.m(), alpha}, {2, 0, 1}});
}

DOQuad fam_t4_quadrinomial(const Field& f) {
    need_t(f, 4, "fam_t4_quadrinomial");
    return DOQuad::from_family(f, {{1, 0, 1}, {2, 0, 1}, {2, f.m(), 1}, {3, 0, 1}});
}

DOQuad fam_t4_trinomial(const Field& f) {
    need_t(f, 4, "fam_t4_trinomial");
    return DOQuad::from_family(f, {{1, f.m(), 1}, {1, 2 * f.m(), 1}, {2, f.m(), 1}});
}

DOQuad mono_t2(const Field& f, Fe c) {
    need_t(f, 2, "mono_t2");
    return DOQuad::from_family(f, {{1, 0, c}});
}

DOQuad mono_t3(const Field& f, Fe c) {
    need_t(f, 3, "mono_t3");
    return DOQuad::from_family(f, {{1, f.m(), c}});
}

DOQuad hu_binomial_a(const Field& f, Fe a) {
    need_t(f, 3, "hu_binomial_a");
    if (a == 0) throw std::invalid_argument("hu_binomial_a needs a != 0");
    const std::uint64_t q = f.q();
    return DOQuad::from_family(
        f, {{1, 0, f.inv(f.pow(a, q + 1))}, {2, 0, f.pow(a, q * q + 1)}});
}

DOQuad kantor(const Field& f, const std::vector<unsigned>& chain,
              const std::vector<Fe>& zetas) {
    const unsigned n = f.n();
    if (chain.size() < 2 || chain[0] != n)
        throw std::invalid_argument("kantor chain must start at n and name at least one subfield");
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (chain[i] == 0 || chain[i] >= chain[i - 1] || chain[i - 1] % chain[i] != 0)
            throw std::invalid_argument("kantor chain entries must divide strictly downward");
    }
    const unsigned mr = chain.back();
    if ((n / mr) % 2 == 0)
        throw std::invalid_argument("kantor needs odd extension degree n / chain.back()");
    if (zetas.size() != chain.size() - 1)
        throw std::invalid_argument("kantor needs one zeta per chain subfield");
    for (Fe z : zetas)
        if (z == 0) throw std::invalid_argument("kantor zetas must be nonzero");
    if (!f.has_split() || f.m() != mr)
        throw std::invalid_argument("kantor needs the field split m = chain.back()");

    // (x * sum_i tr_{n/d_i}(zeta_i x))^2
    //   = sum_i sum_{j>=1} zeta_i^(2^(j d_i + 1)) x^(2 + 2^(j d_i + 1))
    // (the j = 0 terms square to linearized monomials and are dropped).
    std::vector<std::tuple<unsigned, unsigned, Fe>> terms;
    for (std::size_t idx = 1; idx < chain.size(); ++idx) {
        const unsigned d = chain[idx];
        const Fe zeta = zetas[idx - 1];
        for (unsigned j = 1; j < n / d; ++j) {
            const unsigned e = j * d + 1; // exponent pair (1, e), difference j*d
            terms.push_back({j * d / mr, 1, f.frob(zeta, e % n)});
        }
    }
    return DOQuad::from_family(f, terms);
}

std::uint64_t mono_t2_census(const Field& f) {
    if (f.t() != 2) throw std::invalid_argument("mono_t2_census needs t = 2");
    const std::uint64_t q = f.q();
    const unsigned m = f.m();
    std::uint64_t count = 0;
    // c^(q+1) = N_{n/m}(c) lies in GF(q); the condition is its GF(q)
    // absolute trace.
    for (std::uint64_t c = 0; c < f.order(); ++c)
        if (f.subfield_trace(f.pow(static_cast<Fe>(c), q + 1), m) == 0) ++count;
    return count;
}

} // namespace ppf
