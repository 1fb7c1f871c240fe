#ifndef PPF_SEMIFIELD_HPP
#define PPF_SEMIFIELD_HPP

#include "ppf/planar.hpp"

namespace ppf {

// x * y = xy + F(x+y) + F(x) + F(y), pointwise.
Fe star(const DOQuad& F, Fe x, Fe y);

// The presemifield (GF(2^n), +, *) with the full product table cached.
// Construction checks biadditivity implicitly (the product is built from
// one) and rejects zero divisors. Guarded to 2^n <= 2^10.
class Presemifield {
public:
    explicit Presemifield(const DOQuad& F);

    const Field& field() const { return *field_; }
    Fe mul(Fe x, Fe y) const { return table_[(std::size_t(x) << field_->n()) | y]; }

private:
    const Field* field_;
    std::vector<Fe> table_;
};

// Full multiplication table of a (commutative) semifield with recorded
// identity element.
struct SemifieldTable {
    const Field* field = nullptr;
    Fe identity = 0;
    std::vector<Fe> table; // [(x << n) | y]

    Fe mul(Fe x, Fe y) const { return table[(std::size_t(x) << field->n()) | y]; }
};

// Isotope (x * e) o (e * y) = x * y: inverts u -> u*e and v -> e*v and
// tabulates o. Identity is e*e. Throws when a translation map fails to
// be a bijection (which signals a non-pseudo-planar F).
SemifieldTable derive_semifield(const DOQuad& F, Fe e = 1);

struct Nuclei {
    std::uint64_t left = 0, middle = 0, right = 0; // sizes
    std::vector<Fe> left_elems, middle_elems, right_elems;
};

// Exhaustive associativity scans; each nucleus is verified closed under
// + and o, and its size must be a power of two. Guarded to 2^n <= 2^10.
Nuclei nuclei(const SemifieldTable& S);

bool is_associative(const SemifieldTable& S);
bool is_commutative(const SemifieldTable& S);

} // namespace ppf

#endif
