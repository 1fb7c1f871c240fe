#ifndef PPF_LINEAR_HPP
#define PPF_LINEAR_HPP

#include "ppf/field.hpp"

namespace ppf {

// L(x) = sum_i coeffs[i] * x^(2^(base*i)), an additive map of GF(2^n).
// base | n and coeffs.size() == n/base.
struct LinPoly {
    unsigned base = 1;
    std::vector<Fe> coeffs;

    static LinPoly identity(const Field& f, unsigned base = 1);
};

// Coefficients of the structured family form
//   F(x) = sum_{k=1}^{t-1} sum_{i=0}^{(t-k)m-1} c[k-1][i] * x^(2^i (q^k+1)).
struct FamilyCoeffs {
    std::vector<std::vector<Fe>> c; // c[k-1] has length (t-k)*m

    static FamilyCoeffs zero(unsigned t, unsigned m);
    Fe get(unsigned k, unsigned i) const { return c.at(k - 1).at(i); }
    unsigned t() const { return static_cast<unsigned>(c.size()) + 1; }
};

Fe lin_eval(const Field& f, const LinPoly& L, Fe x);

// t x t Dickson determinant of (a_0, ..., a_{t-1}) with rows Frobenius-
// twisted by q = 2^m; zero iff L is not a permutation. Needs base == m
// under the field's (t,m) split.
Fe dickson_det(const Field& f, const LinPoly& L);

// Kernel test: enumerates the field when 2^n <= 2^16, otherwise ranks the
// n x n GF(2) matrix of L in the polynomial basis.
bool is_lin_permutation(const Field& f, const LinPoly& L);

// The dual L*_b of the derivative L_a(x) = F(x+a)+F(x)+F(a)+ax, as a
// q-polynomial (A_0, ..., A_{t-1}) with A_0 = b and
//   A_j = sum_i (c[j][i] b)^(2^(n-i)) + sum_i (c[t-j][i] b)^(2^(jm-i)).
LinPoly dual_of_derivative(const Field& f, const FamilyCoeffs& fam, Fe b);

} // namespace ppf

#endif
