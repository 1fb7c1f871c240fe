#include "ppf/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace ppf {

GaussInt gauss_mul(GaussInt a, GaussInt b) {
    return GaussInt{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt gauss_conj(GaussInt a) { return GaussInt{a.re, -a.im}; }

GaussInt omega_pow(unsigned k) {
    switch (k & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

void RationalPow2::reduce() {
    if (num == 0) { den_log2 = 0; return; }
    while (den_log2 > 0 && (num & 1) == 0) { num >>= 1; --den_log2; }
}

std::string RationalPow2::str() const {
    if (den_log2 == 0) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(std::uint64_t(1) << den_log2);
}

double RationalPow2::value() const { return std::ldexp(double(num), -int(den_log2)); }

bool rational_less(const RationalPow2& a, const RationalPow2& b) {
    // Compare a.num/2^a.d < b.num/2^b.d on a common denominator.
    const unsigned d = std::max(a.den_log2, b.den_log2);
    return (a.num << (d - a.den_log2)) < (b.num << (d - b.den_log2));
}

RationalPow2 inner_sq(const CxVec& u, const CxVec& v) {
    if (u.num.size() != v.num.size())
        throw std::invalid_argument("inner product of mismatched dimensions");
    GaussInt acc{0, 0};
    for (std::size_t j = 0; j < u.num.size(); ++j) {
        const GaussInt p = gauss_mul(u.num[j], gauss_conj(v.num[j]));
        acc.re += p.re;
        acc.im += p.im;
    }
    RationalPow2 r{acc.re * acc.re + acc.im * acc.im, u.scale_log2 + v.scale_log2};
    r.reduce();
    return r;
}

bool unit_norm(const CxVec& v) {
    std::int64_t s = 0;
    for (const GaussInt& g : v.num) s += g.re * g.re + g.im * g.im;
    return s == std::int64_t(1) << v.scale_log2;
}

EntryVal canonical_entry(GaussInt g, unsigned scale_log2) {
    EntryVal e{g.re, g.im, scale_log2};
    if (e.re == 0 && e.im == 0) { e.scale_log2 = 0; return e; }
    while (e.scale_log2 >= 2 && (e.re & 1) == 0 && (e.im & 1) == 0) {
        e.re >>= 1;
        e.im >>= 1;
        e.scale_log2 -= 2;
    }
    return e;
}

// ---- MUB ------------------------------------------------------------------

MubSet mub_from_function(const DOQuad& F) {
    const Field& f = F.field();
    const unsigned n = f.n();
    if (n > 10)
        throw std::invalid_argument("MUB construction is limited to 2^n <= 2^10");
    if (!is_pp_bruteforce(F))
        throw std::invalid_argument("F is not pseudo-planar; the MUB theorem does not apply");

    const std::uint64_t size = f.order();
    const std::vector<Fe> ftab = F.value_table();

    MubSet mub;
    mub.field = &f;
    mub.bases.resize(size + 1);
    for (std::uint64_t mi = 0; mi < size; ++mi) {
        const Fe m = static_cast<Fe>(mi);
        auto& basis = mub.bases[mi];
        basis.resize(size);
        for (std::uint64_t vi = 0; vi < size; ++vi) {
            const Fe v = static_cast<Fe>(vi);
            CxVec vec;
            vec.scale_log2 = n;
            vec.num.resize(size);
            for (std::uint64_t wi = 0; wi < size; ++wi) {
                const Fe w = static_cast<Fe>(wi);
                // m^(w^2 + 2F(w)) + 2v^w^ in pair form.
                const GrElem arg{f.mul(m, f.sqr(w)),
                                 static_cast<Fe>(f.mul(m, ftab[wi]) ^ f.mul(v, w))};
                vec.num[wi] = omega_pow(tr_r(f, arg));
            }
            basis[vi] = std::move(vec);
        }
    }
    auto& std_basis = mub.bases[size];
    std_basis.resize(size);
    for (std::uint64_t wi = 0; wi < size; ++wi) {
        CxVec e;
        e.scale_log2 = 0;
        e.num.assign(size, GaussInt{0, 0});
        e.num[wi] = GaussInt{1, 0};
        std_basis[wi] = std::move(e);
    }
    return mub;
}

Z4 mub_exponent_direct(const Field& f, const DOQuad& F, Fe m, Fe v, Fe w) {
    const GrElem mh{m, 0}, wh{w, 0};
    const GrElem w2 = gr_mul(f, wh, wh);
    const GrElem two_fw{0, F.eval(w)};
    const GrElem two_vw = gr_mul(f, GrElem{0, v}, wh); // 2v^ * w^
    const GrElem arg = gr_add(f, gr_mul(f, mh, gr_add(f, w2, two_fw)), two_vw);
    return tr_r(f, arg);
}

MubReport verify_mub(const MubSet& mub) {
    const Field& f = *mub.field;
    const unsigned n = f.n();
    MubReport rep;
    rep.worst_deviation = RationalPow2{0, 0};
    const RationalPow2 target{1, n};
    const RationalPow2 zero{0, 0};

    auto label = [&](std::size_t bi, std::size_t vi) {
        std::ostringstream os;
        if (bi == mub.bases.size() - 1) os << "Binf[" << vi << "]";
        else os << "B" << bi << "[" << vi << "]";
        return os.str();
    };

    for (std::size_t bi = 0; bi < mub.bases.size(); ++bi) {
        const auto& basis = mub.bases[bi];
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!unit_norm(basis[i])) { rep.orthonormal = false; rep.worst_pair = label(bi, i); }
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                if (!(inner_sq(basis[i], basis[j]) == zero)) {
                    rep.orthonormal = false;
                    rep.worst_pair = label(bi, i) + " x " + label(bi, j);
                }
            }
        }
    }
    for (std::size_t bi = 0; bi < mub.bases.size(); ++bi)
        for (std::size_t bj = bi + 1; bj < mub.bases.size(); ++bj)
            for (std::size_t i = 0; i < mub.bases[bi].size(); ++i)
                for (std::size_t j = 0; j < mub.bases[bj].size(); ++j) {
                    ++rep.cross_pairs;
                    const RationalPow2 s = inner_sq(mub.bases[bi][i], mub.bases[bj][j]);
                    if (s == target) continue;
                    rep.unbiased = false;
                    // |s - 1/2^n| on the common denominator.
                    const unsigned d = std::max(s.den_log2, target.den_log2);
                    RationalPow2 dev{std::abs((s.num << (d - s.den_log2)) -
                                              (target.num << (d - target.den_log2))),
                                     d};
                    dev.reduce();
                    if (rational_less(rep.worst_deviation, dev)) {
                        rep.worst_deviation = dev;
                        rep.worst_pair = label(bi, i) + " x " + label(bj, j);
                    }
                }
    rep.ok = rep.orthonormal && rep.unbiased;
    return rep;
}

// ---- codebooks --------------------------------------------------------------

Codebook codebook_from_function(const DOQuad& F) {
    const MubSet mub = mub_from_function(F);
    const Field& f = F.field();
    Codebook cb;
    cb.K = static_cast<unsigned>(f.order());
    cb.vecs.reserve(f.order() * f.order() + f.order());
    for (std::uint64_t mi = 0; mi < f.order(); ++mi)
        for (std::uint64_t vi = 0; vi < f.order(); ++vi)
            cb.vecs.push_back(mub.bases[mi][vi]);
    cb.standard_basis_from = cb.vecs.size();
    for (std::uint64_t wi = 0; wi < f.order(); ++wi)
        cb.vecs.push_back(mub.bases[f.order()][wi]);
    return cb;
}

Codebook rds_codebook(const Field& f, const std::vector<GrElem>& D) {
    const RdsReport check = verify_rds(f, D);
    if (!check.ok)
        throw std::invalid_argument("D is not a relative difference set (" +
                                    check.violation_kind + " coverage)");
    const unsigned n = f.n();
    const std::uint64_t k = f.order();
    Codebook cb;
    cb.K = static_cast<unsigned>(k);
    cb.vecs.reserve(k * k + k);
    for (std::uint64_t y = 0; y < k * k; ++y) {
        const GrElem ye = gr_decode(f, y);
        CxVec vec;
        vec.scale_log2 = n;
        vec.num.resize(k);
        for (std::uint64_t j = 0; j < k; ++j)
            vec.num[j] = omega_pow(tr_r(f, gr_mul(f, ye, D[j])));
        cb.vecs.push_back(std::move(vec));
    }
    cb.standard_basis_from = cb.vecs.size();
    for (std::uint64_t i = 0; i < k; ++i) {
        CxVec e;
        e.scale_log2 = 0;
        e.num.assign(k, GaussInt{0, 0});
        e.num[i] = GaussInt{1, 0};
        cb.vecs.push_back(std::move(e));
    }
    return cb;
}

RationalPow2 codebook_imax_sq(const Codebook& cb) {
    RationalPow2 best{0, 0};
    for (std::size_t i = 0; i < cb.vecs.size(); ++i)
        for (std::size_t j = i + 1; j < cb.vecs.size(); ++j) {
            const RationalPow2 s = inner_sq(cb.vecs[i], cb.vecs[j]);
            if (rational_less(best, s)) best = s;
        }
    return best;
}

std::vector<EntryVal> alphabet_census(const Codebook& cb) {
    std::set<EntryVal> values;
    for (const CxVec& v : cb.vecs)
        for (const GaussInt& g : v.num) values.insert(canonical_entry(g, v.scale_log2));
    return std::vector<EntryVal>(values.begin(), values.end());
}

std::vector<RationalPow2> gram_spectrum(const Codebook& cb) {
    std::vector<RationalPow2> spec;
    spec.reserve(cb.vecs.size() * (cb.vecs.size() - 1) / 2);
    for (std::size_t i = 0; i < cb.vecs.size(); ++i)
        for (std::size_t j = i + 1; j < cb.vecs.size(); ++j)
            spec.push_back(inner_sq(cb.vecs[i], cb.vecs[j]));
    std::sort(spec.begin(), spec.end(), rational_less);
    return spec;
}

// ---- bounds -----------------------------------------------------------------

std::string Ratio::str() const { return std::to_string(num) + "/" + std::to_string(den); }

Ratio levenstein_bound_sq(std::uint64_t N, std::uint64_t K) {
    if (N <= K * K)
        throw std::invalid_argument("Levenstein bound needs N > K^2");
    Ratio r{2 * N - K * K - K, (K + 1) * (N - K)};
    const std::uint64_t g = std::gcd(r.num, r.den);
    r.num /= g;
    r.den /= g;
    return r;
}

double levenstein_bound(std::uint64_t N, std::uint64_t K) {
    return std::sqrt(levenstein_bound_sq(N, K).value());
}

Ratio welch_bound_sq(std::uint64_t N, std::uint64_t K) {
    if (N <= K) throw std::invalid_argument("Welch bound needs N > K");
    Ratio r{N - K, (N - 1) * K};
    const std::uint64_t g = std::gcd(r.num, r.den);
    r.num /= g;
    r.den /= g;
    return r;
}

double welch_bound(std::uint64_t N, std::uint64_t K) {
    return std::sqrt(welch_bound_sq(N, K).value());
}

bool meets_levenstein(const Codebook& cb) {
    const Ratio bound = levenstein_bound_sq(cb.N(), cb.K);
    const RationalPow2 imax = codebook_imax_sq(cb);
    // imax.num / 2^imax.den == bound.num / bound.den, cross-multiplied.
    return static_cast<std::uint64_t>(imax.num) * bound.den ==
           bound.num << imax.den_log2;
}

// ---- sensing matrix ---------------------------------------------------------

SensingMatrix sensing_matrix(const Codebook& cb) {
    SensingMatrix sm;
    sm.rows = cb.K;
    sm.cols = cb.N();
    sm.entries.assign(cb.K, std::vector<GaussInt>(cb.N()));
    sm.col_scale_log2.resize(cb.N());
    for (std::size_t c = 0; c < cb.N(); ++c) {
        sm.col_scale_log2[c] = cb.vecs[c].scale_log2;
        for (unsigned r = 0; r < cb.K; ++r) sm.entries[r][c] = cb.vecs[c].num[r];
    }
    sm.coherence_sq = codebook_imax_sq(cb);
    return sm;
}

} // namespace ppf
