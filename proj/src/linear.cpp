#include "ppf/linear.hpp"

namespace ppf {

LinPoly LinPoly::identity(const Field& f, unsigned base) {
    LinPoly L;
    L.base = base;
    L.coeffs.assign(f.n() / base, 0);
    L.coeffs[0] = 1;
    return L;
}

FamilyCoeffs FamilyCoeffs::zero(unsigned t, unsigned m) {
    FamilyCoeffs fam;
    fam.c.resize(t - 1);
    for (unsigned k = 1; k < t; ++k) fam.c[k - 1].assign((t - k) * m, 0);
    return fam;
}

Fe lin_eval(const Field& f, const LinPoly& L, Fe x) {
    Fe acc = 0, p = x;
    for (std::size_t i = 0; i < L.coeffs.size(); ++i) {
        if (L.coeffs[i]) acc ^= f.mul(L.coeffs[i], p);
        p = f.frob(p, L.base);
    }
    return acc;
}

Fe dickson_det(const Field& f, const LinPoly& L) {
    const unsigned t = f.t(), m = f.m();
    if (L.base != m || L.coeffs.size() != t)
        throw std::invalid_argument("dickson_det needs a q-polynomial of length t");

    // M[r][c] = a_{(c-r) mod t} ^ (q^r)
    std::vector<std::vector<Fe>> M(t, std::vector<Fe>(t));
    for (unsigned r = 0; r < t; ++r)
        for (unsigned c = 0; c < t; ++c)
            M[r][c] = f.frob(L.coeffs[(c + t - r) % t], (r * m) % f.n());

    // Gaussian elimination; division is exact, first nonzero pivot per column.
    Fe det = 1;
    for (unsigned col = 0; col < t; ++col) {
        unsigned piv = col;
        while (piv < t && M[piv][col] == 0) ++piv;
        if (piv == t) return 0;
        if (piv != col) std::swap(M[piv], M[col]); // char 2: no sign
        det = f.mul(det, M[col][col]);
        const Fe ipiv = f.inv(M[col][col]);
        for (unsigned r = col + 1; r < t; ++r) {
            if (M[r][col] == 0) continue;
            const Fe factor = f.mul(M[r][col], ipiv);
            for (unsigned c = col; c < t; ++c)
                M[r][c] ^= f.mul(factor, M[col][c]);
        }
    }
    return det;
}

static bool kernel_trivial_by_rank(const Field& f, const LinPoly& L) {
    const unsigned n = f.n();
    // Columns are images of the basis x^i; row-reduce over GF(2).
    std::vector<std::uint64_t> rows(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        const Fe img = lin_eval(f, L, Fe(1) << i);
        for (unsigned r = 0; r < n; ++r)
            if ((img >> r) & 1) rows[r] |= std::uint64_t(1) << i;
    }
    unsigned rank = 0;
    for (unsigned col = 0; col < n; ++col) {
        unsigned piv = rank;
        while (piv < n && !((rows[piv] >> col) & 1)) ++piv;
        if (piv == n) continue;
        std::swap(rows[piv], rows[rank]);
        for (unsigned r = 0; r < n; ++r)
            if (r != rank && ((rows[r] >> col) & 1)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank == n;
}

bool is_lin_permutation(const Field& f, const LinPoly& L) {
    if (f.n() <= 16) {
        for (std::uint64_t x = 1; x < f.order(); ++x)
            if (lin_eval(f, L, static_cast<Fe>(x)) == 0) return false;
        return true;
    }
    return kernel_trivial_by_rank(f, L);
}

LinPoly dual_of_derivative(const Field& f, const FamilyCoeffs& fam, Fe b) {
    const unsigned t = f.t(), m = f.m(), n = f.n();
    if (fam.t() != t)
        throw std::invalid_argument("family coefficients do not match the field's t");
    LinPoly L;
    L.base = m;
    L.coeffs.assign(t, 0);
    L.coeffs[0] = b;
    for (unsigned j = 1; j < t; ++j) {
        Fe a = 0;
        for (unsigned i = 0; i < (t - j) * m; ++i) {
            const Fe cj = fam.c[j - 1][i];
            if (cj) a ^= f.frob(f.mul(cj, b), (n - i) % n);
        }
        for (unsigned i = 0; i < j * m; ++i) {
            const Fe ck = fam.c[t - j - 1][i];
            if (ck) a ^= f.frob(f.mul(ck, b), (j * m - i) % n);
        }
        L.coeffs[j] = a;
    }
    return L;
}

} // namespace ppf
