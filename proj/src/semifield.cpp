#include "ppf/semifield.hpp"

namespace ppf {

Fe star(const DOQuad& F, Fe x, Fe y) {
    const Field& f = F.field();
    return f.mul(x, y) ^ F.eval(x ^ y) ^ F.eval(x) ^ F.eval(y);
}

static void check_size(const Field& f, const char* who) {
    if (f.n() > 10)
        throw std::invalid_argument(std::string(who) + " is limited to 2^n <= 2^10");
}

Presemifield::Presemifield(const DOQuad& F) : field_(&F.field()) {
    check_size(*field_, "presemifield construction");
    const std::uint64_t size = field_->order();
    const std::vector<Fe> ftab = F.value_table();
    table_.resize(size * size);
    for (std::uint64_t x = 0; x < size; ++x)
        for (std::uint64_t y = 0; y < size; ++y)
            table_[(x << field_->n()) | y] =
                field_->mul(Fe(x), Fe(y)) ^ ftab[x ^ y] ^ ftab[x] ^ ftab[y];
    // No zero divisors: every row x != 0 must be a permutation.
    std::vector<std::uint32_t> stamp(size, 0);
    for (std::uint64_t x = 1; x < size; ++x) {
        for (std::uint64_t y = 1; y < size; ++y) {
            const Fe v = table_[(x << field_->n()) | y];
            if (v == 0 || stamp[v] == x)
                throw std::invalid_argument("presemifield has zero divisors; F is not pseudo-planar");
            stamp[v] = static_cast<std::uint32_t>(x);
        }
    }
}

SemifieldTable derive_semifield(const DOQuad& F, Fe e) {
    const Field& f = F.field();
    check_size(f, "semifield derivation");
    if (e == 0) throw std::invalid_argument("semifield derivation needs e != 0");
    const Presemifield P(F);
    const std::uint64_t size = f.order();

    // u = x * e and v = e * y are bijections; invert them.
    std::vector<Fe> right_inv(size, 0), left_inv(size, 0);
    std::vector<char> seen_r(size, 0), seen_l(size, 0);
    for (std::uint64_t x = 0; x < size; ++x) {
        const Fe u = P.mul(Fe(x), e);
        const Fe v = P.mul(e, Fe(x));
        if (seen_r[u] || seen_l[v])
            throw std::invalid_argument("translation by e is not a bijection");
        seen_r[u] = seen_l[v] = 1;
        right_inv[u] = Fe(x);
        left_inv[v] = Fe(x);
    }

    SemifieldTable S;
    S.field = &f;
    S.identity = P.mul(e, e);
    S.table.resize(size * size);
    for (std::uint64_t x = 0; x < size; ++x)
        for (std::uint64_t y = 0; y < size; ++y)
            S.table[(x << f.n()) | y] = P.mul(right_inv[x], left_inv[y]);

    for (std::uint64_t x = 0; x < size; ++x) {
        if (S.mul(S.identity, Fe(x)) != Fe(x) || S.mul(Fe(x), S.identity) != Fe(x))
            throw std::logic_error("derived identity fails e*e o x = x");
    }
    return S;
}

bool is_associative(const SemifieldTable& S) {
    const Field& f = *S.field;
    check_size(f, "associativity scan");
    const std::uint64_t size = f.order();
    for (std::uint64_t a = 0; a < size; ++a)
        for (std::uint64_t x = 0; x < size; ++x) {
            const Fe ax = S.mul(Fe(a), Fe(x));
            for (std::uint64_t y = 0; y < size; ++y)
                if (S.mul(ax, Fe(y)) != S.mul(Fe(a), S.mul(Fe(x), Fe(y)))) return false;
        }
    return true;
}

bool is_commutative(const SemifieldTable& S) {
    const std::uint64_t size = S.field->order();
    for (std::uint64_t x = 0; x < size; ++x)
        for (std::uint64_t y = x + 1; y < size; ++y)
            if (S.mul(Fe(x), Fe(y)) != S.mul(Fe(y), Fe(x))) return false;
    return true;
}

static bool power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

Nuclei nuclei(const SemifieldTable& S) {
    const Field& f = *S.field;
    check_size(f, "nucleus scan");
    const std::uint64_t size = f.order();
    Nuclei N;

    auto scan = [&](auto&& pred, std::vector<Fe>& out) {
        for (std::uint64_t a = 0; a < size; ++a)
            if (pred(Fe(a))) out.push_back(Fe(a));
    };

    scan([&](Fe a) {
        for (std::uint64_t x = 0; x < size; ++x) {
            const Fe ax = S.mul(a, Fe(x));
            for (std::uint64_t y = 0; y < size; ++y)
                if (S.mul(ax, Fe(y)) != S.mul(a, S.mul(Fe(x), Fe(y)))) return false;
        }
        return true;
    }, N.left_elems);
    scan([&](Fe a) {
        for (std::uint64_t x = 0; x < size; ++x) {
            const Fe xa = S.mul(Fe(x), a);
            for (std::uint64_t y = 0; y < size; ++y)
                if (S.mul(xa, Fe(y)) != S.mul(Fe(x), S.mul(a, Fe(y)))) return false;
        }
        return true;
    }, N.middle_elems);
    scan([&](Fe a) {
        for (std::uint64_t x = 0; x < size; ++x)
            for (std::uint64_t y = 0; y < size; ++y)
                if (S.mul(S.mul(Fe(x), Fe(y)), a) != S.mul(Fe(x), S.mul(Fe(y), a))) return false;
        return true;
    }, N.right_elems);

    N.left = N.left_elems.size();
    N.middle = N.middle_elems.size();
    N.right = N.right_elems.size();

    // Each nucleus is a finite field inside S: closed under + and o.
    auto check_closed = [&](const std::vector<Fe>& elems) {
        std::vector<char> in(size, 0);
        for (Fe e : elems) in[e] = 1;
        for (Fe a : elems)
            for (Fe b : elems)
                if (!in[a ^ b] || !in[S.mul(a, b)])
                    throw std::logic_error("nucleus is not closed; table is not a semifield");
    };
    check_closed(N.left_elems);
    check_closed(N.middle_elems);
    check_closed(N.right_elems);
    if (!power_of_two(N.left) || !power_of_two(N.middle) || !power_of_two(N.right))
        throw std::logic_error("nucleus size is not a power of two");
    return N;
}

} // namespace ppf
