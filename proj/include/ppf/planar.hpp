#ifndef PPF_PLANAR_HPP
#define PPF_PLANAR_HPP

#include "ppf/linear.hpp"

#include <map>
#include <utility>

namespace ppf {

// A quadratic (Dembowski-Ostrom) function sum c_{ij} x^(2^i + 2^j),
// 0 <= i < j < n, free of linearized terms. When the coefficients fit
// the structured general-family form, that view is kept alongside the
// generic map; the two always expand to the same function.
class DOQuad {
public:
    using Exponent = std::pair<unsigned, unsigned>; // (i, j), i < j < n

    static DOQuad zero(const Field& f);
    static DOQuad from_generic(const Field& f,
                               const std::vector<std::pair<Exponent, Fe>>& terms);
    // Terms (k, i, c) for c * x^(2^i (q^k+1)), 1 <= k <= t-1. Indices are
    // folded by x^(2^n) = x, so i beyond the family range is accepted and
    // normalized; requires the (t,m) split.
    static DOQuad from_family(const Field& f,
                              const std::vector<std::tuple<unsigned, unsigned, Fe>>& terms);

    const Field& field() const { return *field_; }
    const std::map<Exponent, Fe>& coeffs() const { return coeffs_; }
    bool has_family() const { return family_.has_value(); }
    const FamilyCoeffs& family() const;
    bool is_zero() const { return coeffs_.empty(); }

    Fe eval(Fe x) const;
    std::vector<Fe> value_table() const; // eval over the whole field

private:
    const Field* field_ = nullptr;
    std::map<Exponent, Fe> coeffs_;
    std::optional<FamilyCoeffs> family_;
};

// Definition check: x -> F(x+a) + F(x) + a x is a permutation for every
// a != 0, tested directly with a hit table. Guarded to 2^n <= 2^20.
bool is_pp_bruteforce(const DOQuad& F);

// Dual-polynomial criterion: det M_b != 0 for all b != 0, where M_b is
// the Dickson matrix of the dual of the derivative. Uses the closed
// forms for t = 2, 3, 4 and the generic determinant otherwise. Needs the
// structured family view.
bool is_pp_criterion(const DOQuad& F);

// det M_b for a family-form F at one b (specialized path).
Fe criterion_det(const Field& f, const FamilyCoeffs& fam, Fe b);

// Pseudo-planarity of c1 x^(q+1) + c2 x^(q^2+q) + c3 x^(q^2+1) via
//   b^(q^2+q+1) + tr_{n/m}(c1^2 b^(q^2+2) + c2^2 b^3 + c3^2 b^(q+2)) != 0.
bool trinomial_condition(const Field& f, Fe c1, Fe c2, Fe c3);

// Monomial c x^(q^2+q), c a nonzero cube with least-encoding cube root
// c0 and u = c0^(-2(q^2+q+1)): pseudo-planar iff u != 1 and
// x^3 + x^2 + B2 x + (B2+1)/(u+1) is reducible over GF(q) for every B2.
bool mono_t3_condition(const Field& f, Fe c);

// --- family constructors ----------------------------------------------
DOQuad fam_t3_binomial(const Field& f, Fe c);      // c x^(2(q+1)) + c^q x^(2(q^2+1))
DOQuad fam_t3_quadrinomial(const Field& f);        // x^(2(q+1)) + x^(q^2+1) + x^(q^2+q) + x^(2(q^2+1))
// x^(q+1) + a x^(q^2+q) + x^(q^2+1) with a the least root of
// x^3+x^2+1 (a always embeds, since 3 | 3m). Pseudo-planar exactly when
// a lies in GF(q), i.e. 3 | m: the determinant only factors through the
// symmetric functions when a is fixed by Frobenius^m.
DOQuad fam_t3_trinomial_alpha(const Field& f);
DOQuad fam_t4_quadrinomial(const Field& f);        // x^(q+1) + x^(q^2+1) + x^(q^3+q) + x^(q^3+1)
DOQuad fam_t4_trinomial(const Field& f);           // x^(q^2+q) + x^(q^3+q^2) + x^(q^3+q)
DOQuad mono_t2(const Field& f, Fe c);              // c x^(q+1), t = 2
DOQuad mono_t3(const Field& f, Fe c);              // c x^(q^2+q), t = 3
DOQuad hu_binomial_a(const Field& f, Fe a);        // a^-(q+1) x^(q+1) + a^(q^2+1) x^(q^2+1)
// (x * sum_i tr_{n/chain[i]}(zeta_i x))^2 with chain[0] = n, each entry
// dividing the previous, n/chain.back() odd; linearized terms drop out.
DOQuad kantor(const Field& f, const std::vector<unsigned>& chain,
              const std::vector<Fe>& zetas);

// Census of c in GF(2^(2m)) with tr_{m/1}(c^(q+1)) = 0; the number of c
// for which mono_t2(c) is pseudo-planar (2^(2m-1) - 2^(m-1)).
std::uint64_t mono_t2_census(const Field& f);

} // namespace ppf

#endif
