#ifndef PPF_FIELD_HPP
#define PPF_FIELD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppf {

// An element of GF(2^n) as an n-bit coordinate vector in the polynomial
// basis: bit i is the coefficient of x^i modulo the defining polynomial.
using Fe = std::uint32_t;

// Characteristic polynomial of b over the subfield GF(q), q = 2^m:
//   m_b(x) = x^t + B_1 x^{t-1} + ... + B_t,  all B_j in GF(q).
// coeffs[j] holds B_{j+1}; the leading 1 is implicit.
struct SubfieldPoly {
    std::vector<Fe> coeffs;

    unsigned degree() const { return static_cast<unsigned>(coeffs.size()); }
    Fe b(unsigned j) const { return coeffs.at(j - 1); } // B_j, 1-based
};

// GF(2^n) with a fixed defining polynomial, an optional subfield split
// n = t*m (so GF(2^m) <= GF(2^n) with q = 2^m), and exp/log tables for
// small n. Immutable after setup; all operations are pure and safe for
// concurrent readers.
class Field {
public:
    static constexpr unsigned max_degree = 32;
    static constexpr unsigned eager_table_degree = 16; // tables built in ctor
    static constexpr unsigned max_table_degree = 20;   // tables on demand

    // Uses the lexicographically least monic irreducible of degree n
    // (coefficient vector read as an integer, bit 0 = constant term)
    // when no polynomial is given. A supplied polynomial must be monic
    // of degree n and irreducible, else this throws.
    explicit Field(unsigned n, std::optional<std::uint64_t> poly = std::nullopt);

    // Declares the subfield split n = t*m, t >= 2. Call once, before
    // sharing the context across threads.
    void set_split(unsigned t, unsigned m);

    // Builds exp/log tables for 17 <= n <= 20 (no-op when already built).
    // Not thread-safe; intended for the setup phase.
    void ensure_tables();

    unsigned n() const { return n_; }
    std::uint64_t defining_poly() const { return poly_; }
    std::uint64_t order() const { return std::uint64_t(1) << n_; } // 2^n
    std::uint64_t group_order() const { return order() - 1; }      // 2^n - 1

    bool has_split() const { return t_ != 0; }
    unsigned t() const;
    unsigned m() const;
    std::uint64_t q() const; // 2^m

    bool has_tables() const { return !log_.empty(); }

    // --- arithmetic ---------------------------------------------------
    static Fe add(Fe a, Fe b) { return a ^ b; }
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;            // throws std::domain_error on 0
    Fe pow(Fe a, std::uint64_t e) const;
    Fe sqr(Fe a) const { return mul(a, a); }
    Fe sqrt(Fe a) const;           // a^(2^(n-1)); sqrt(a)^2 == a
    Fe frob(Fe a, unsigned k) const; // a^(2^k), k taken mod n

    // --- subfield structure --------------------------------------------
    Fe trace(Fe a, unsigned k = 1) const; // sum of a^(2^(ik)), needs k | n
    Fe norm(Fe a, unsigned k = 1) const;  // a^((2^n-1)/(2^k-1)), needs k | n
    bool in_subfield(Fe a, unsigned k) const; // frob(a,k) == a, needs k | n
    std::uint64_t mult_order(Fe a) const;     // throws on 0
    Fe generator() const;                     // cached primitive element

    // Requires the (t,m) split. B_j are the elementary symmetric
    // functions of the conjugates b, b^q, ..., b^(q^(t-1)).
    SubfieldPoly char_poly(Fe b) const;
    // m_b irreducible over GF(q) <=> b lies in no GF(q^r) for a proper
    // divisor r of t.
    bool char_poly_irreducible(Fe b) const;

    // x^2 + a x + b irreducible over GF(2^n) <=> trace(b/a^2) == 1.
    // Requires a != 0 (throws otherwise).
    bool quad_irreducible(Fe a, Fe b) const;

    // Elements of the subfield GF(2^k) inside this field, in increasing
    // encoding order. Needs k | n.
    std::vector<Fe> subfield_elements(unsigned k) const;

    // tr_{k/1}: absolute trace of GF(2^k), for x already in that
    // subfield: sum of x^(2^i), i < k. (The full trace(x, 1) collapses
    // to 0 on GF(2^k) whenever n/k is even.)
    Fe subfield_trace(Fe x, unsigned k) const;

    std::string describe() const; // "n=6,poly=0x43,m=2"

private:
    void check_divisor(unsigned k) const;
    void build_tables();
    Fe mul_clmul(Fe a, Fe b) const;
    std::uint64_t reduce_exp(std::uint64_t e) const { return e % group_order(); }
    const std::vector<std::uint64_t>& order_prime_factors() const;

    unsigned n_ = 0;
    std::uint64_t poly_ = 0;
    unsigned t_ = 0, m_ = 0;
    std::vector<Fe> exp_; // exp_[i] = g^i, i in [0, 2*(2^n-1))
    std::vector<std::uint32_t> log_;
    mutable Fe generator_ = 0; // 0 = not yet found
    mutable std::vector<std::uint64_t> factors_; // prime factors of 2^n-1
};

// Parses "n=<int>[,poly=0x<hex>][,m=<int>]".
Field parse_field_spec(const std::string& spec);

// GF(2)[x] helpers shared by construction and tests.
std::uint64_t gf2x_mod(std::uint64_t a, std::uint64_t b);
int gf2x_degree(std::uint64_t a);
// Degree of the least-degree nontrivial factor, or 0 when irreducible.
// Polynomials with zero constant term report factor degree 1 (x divides).
unsigned gf2x_smallest_factor_degree(std::uint64_t f);

} // namespace ppf

#endif
