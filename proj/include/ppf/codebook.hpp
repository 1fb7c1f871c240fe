#ifndef PPF_CODEBOOK_HPP
#define PPF_CODEBOOK_HPP

#include "ppf/galois_ring.hpp"

#include <string>

namespace ppf {

// Gaussian integer; vector entries are numerators over a power-of-two
// square-root denominator, so every inner product stays exact.
struct GaussInt {
    std::int64_t re = 0, im = 0;

    friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

GaussInt gauss_mul(GaussInt a, GaussInt b);
GaussInt gauss_conj(GaussInt a);
GaussInt omega_pow(unsigned k); // i^k

// value_j = num[j] / 2^(scale_log2/2). MUB vectors use scale_log2 = n,
// standard-basis vectors use scale_log2 = 0.
struct CxVec {
    std::vector<GaussInt> num;
    unsigned scale_log2 = 0;

    friend bool operator==(const CxVec&, const CxVec&) = default;
};

// num / 2^den_log2, kept reduced (num odd or den_log2 == 0).
struct RationalPow2 {
    std::int64_t num = 0;
    unsigned den_log2 = 0;

    void reduce();
    std::string str() const; // "1/8", "0", "1"
    double value() const;
    friend bool operator==(const RationalPow2&, const RationalPow2&) = default;
    auto operator<=>(const RationalPow2&) const = delete;
};

bool rational_less(const RationalPow2& a, const RationalPow2& b);

// |<u, v>|^2, exactly.
RationalPow2 inner_sq(const CxVec& u, const CxVec& v);
bool unit_norm(const CxVec& v);

// Canonical exact entry value, for the alphabet census.
struct EntryVal {
    std::int64_t re = 0, im = 0;
    unsigned scale_log2 = 0;

    friend bool operator==(const EntryVal&, const EntryVal&) = default;
    friend auto operator<=>(const EntryVal&, const EntryVal&) = default;
};
EntryVal canonical_entry(GaussInt g, unsigned scale_log2);

// ---- MUB construction ---------------------------------------------------

// bases[i] for i < 2^n is B_m with m encoded as i; bases[2^n] is the
// standard basis B_infty. Every basis holds 2^n vectors indexed by v.
struct MubSet {
    const Field* field = nullptr;
    std::vector<std::vector<CxVec>> bases;
};

// b_{m,v}[w] = omega^{tr_R(m^(w^2 + 2F(w)) + 2 v^ w^)} / sqrt(2^n), with the
// Galois-ring argument assembled in pair form (m w^2, m F(w) ^ v w).
// Requires F pseudo-planar (checked by brute force); 2^n <= 2^10.
MubSet mub_from_function(const DOQuad& F);

// The same exponent evaluated through explicit gr_mul/gr_add chains;
// the pair-form assembly must match it (used as a cross-check).
Z4 mub_exponent_direct(const Field& f, const DOQuad& F, Fe m, Fe v, Fe w);

struct MubReport {
    bool ok = false;
    bool orthonormal = true;     // every within-basis Gram is the identity
    bool unbiased = true;        // every cross pair at exactly 1/2^n
    std::uint64_t cross_pairs = 0;
    RationalPow2 worst_deviation; // max |inner_sq - 1/2^n| over cross pairs
    std::string worst_pair;       // "B2[3] x B5[0]" style label
};
MubReport verify_mub(const MubSet& mub);

// ---- codebooks ----------------------------------------------------------

struct Codebook {
    unsigned K = 0;
    std::vector<CxVec> vecs;
    std::size_t standard_basis_from = 0; // index of the first E_K vector

    std::size_t N() const { return vecs.size(); }
};

// Union of all MUB vectors (m ascending, v ascending) and the standard
// basis: an (2^(2n) + 2^n, 2^n) codebook.
Codebook codebook_from_function(const DOQuad& F);

// One codeword per character chi_y(x) = omega^{tr_R(y x)} of (R, +),
// y in gr-encoding order, entries chi(d_j)/sqrt(|D|), plus E_K.
// D must verify as a relative difference set (throws otherwise).
Codebook rds_codebook(const Field& f, const std::vector<GrElem>& D);

RationalPow2 codebook_imax_sq(const Codebook& cb);
std::vector<EntryVal> alphabet_census(const Codebook& cb);
// Sorted multiset of |<u,v>|^2 over unordered distinct pairs.
std::vector<RationalPow2> gram_spectrum(const Codebook& cb);

// ---- bounds -------------------------------------------------------------

// (2N - K^2 - K) / ((K+1)(N-K)); requires N > K^2.
struct Ratio {
    std::uint64_t num = 0, den = 1;
    double value() const { return double(num) / double(den); }
    std::string str() const;
};
Ratio levenstein_bound_sq(std::uint64_t N, std::uint64_t K);
double levenstein_bound(std::uint64_t N, std::uint64_t K);
double welch_bound(std::uint64_t N, std::uint64_t K);
Ratio welch_bound_sq(std::uint64_t N, std::uint64_t K);
// Imax^2 == Levenstein bound squared, compared exactly.
bool meets_levenstein(const Codebook& cb);

// ---- sensing matrix -------------------------------------------------------

// K x N matrix whose columns are the codebook vectors (the transpose of
// the row-stacked arrangement); coherence equals the codebook Imax.
struct SensingMatrix {
    unsigned rows = 0;
    std::uint64_t cols = 0;
    std::vector<std::vector<GaussInt>> entries; // [row][col] numerators
    std::vector<unsigned> col_scale_log2;
    RationalPow2 coherence_sq;
};
SensingMatrix sensing_matrix(const Codebook& cb);

} // namespace ppf

#endif
