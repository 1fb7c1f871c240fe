#include "ppf/field.hpp"

#include <algorithm>
#include <sstream>

namespace ppf {

int gf2x_degree(std::uint64_t a) {
    if (a == 0) return -1;
    return 63 - __builtin_clzll(a);
}

std::uint64_t gf2x_mod(std::uint64_t a, std::uint64_t b) {
    const int db = gf2x_degree(b);
    int da = gf2x_degree(a);
    while (da >= db) {
        a ^= b << (da - db);
        da = gf2x_degree(a);
    }
    return a;
}

unsigned gf2x_smallest_factor_degree(std::uint64_t f) {
    const int n = gf2x_degree(f);
    if (n <= 1) return 0;
    // Trial division, degree ascending: the first divisor found is the
    // least-degree nontrivial factor.
    for (unsigned d = 1; d <= static_cast<unsigned>(n) / 2; ++d) {
        const std::uint64_t lo = std::uint64_t(1) << d;
        for (std::uint64_t g = lo; g < (lo << 1); ++g) {
            if (gf2x_mod(f, g) == 0) return d;
        }
    }
    return 0;
}

Field::Field(unsigned n, std::optional<std::uint64_t> poly) : n_(n) {
    if (n < 1 || n > max_degree)
        throw std::invalid_argument("field degree out of range [1,32]: n=" + std::to_string(n));
    if (poly) {
        const std::uint64_t f = *poly;
        if (gf2x_degree(f) != static_cast<int>(n))
            throw std::invalid_argument("defining polynomial is not monic of degree " + std::to_string(n));
        if ((f & 1) == 0)
            throw std::invalid_argument("reducible defining polynomial: has a factor of degree 1");
        if (unsigned d = gf2x_smallest_factor_degree(f))
            throw std::invalid_argument("reducible defining polynomial: has a factor of degree " + std::to_string(d));
        poly_ = f;
    } else {
        // Least monic irreducible of degree n with nonzero constant term.
        const std::uint64_t lo = std::uint64_t(1) << n;
        for (std::uint64_t f = lo | 1; f < (lo << 1); f += 2) {
            if (gf2x_smallest_factor_degree(f) == 0) { poly_ = f; break; }
        }
    }
    if (n_ <= eager_table_degree) build_tables();
}

void Field::set_split(unsigned t, unsigned m) {
    if (t < 2 || m < 1 || t * m != n_)
        throw std::invalid_argument("invalid split: need t*m = n with t >= 2");
    t_ = t;
    m_ = m;
}

unsigned Field::t() const {
    if (!has_split()) throw std::logic_error("no (t,m) split set on this field");
    return t_;
}

unsigned Field::m() const {
    if (!has_split()) throw std::logic_error("no (t,m) split set on this field");
    return m_;
}

std::uint64_t Field::q() const { return std::uint64_t(1) << m(); }

Fe Field::mul_clmul(Fe a, Fe b) const {
    std::uint64_t r = 0, x = a;
    std::uint64_t y = b;
    while (y) {
        if (y & 1) r ^= x;
        x <<= 1;
        y >>= 1;
    }
    for (int bit = 2 * static_cast<int>(n_) - 2; bit >= static_cast<int>(n_); --bit) {
        if ((r >> bit) & 1) r ^= poly_ << (bit - n_);
    }
    return static_cast<Fe>(r);
}

Fe Field::mul(Fe a, Fe b) const {
    if (!log_.empty()) {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + std::uint64_t(log_[b])];
    }
    return mul_clmul(a, b);
}

Fe Field::pow(Fe a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    e = reduce_exp(e);
    if (!log_.empty())
        return exp_[static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(log_[a]) * e) % group_order())];
    Fe r = 1, x = a;
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

Fe Field::inv(Fe a) const {
    if (a == 0) throw std::domain_error("inverse of 0");
    if (!log_.empty()) return exp_[group_order() - log_[a]];
    return pow(a, order() - 2);
}

Fe Field::sqrt(Fe a) const { return frob(a, n_ - 1); }

Fe Field::frob(Fe a, unsigned k) const {
    k %= n_;
    Fe r = a;
    for (unsigned i = 0; i < k; ++i) r = mul(r, r);
    return r;
}

void Field::check_divisor(unsigned k) const {
    if (k == 0 || n_ % k != 0)
        throw std::invalid_argument("k=" + std::to_string(k) + " does not divide n=" + std::to_string(n_));
}

Fe Field::trace(Fe a, unsigned k) const {
    check_divisor(k);
    Fe acc = 0, x = a;
    for (unsigned i = 0; i < n_ / k; ++i) {
        acc ^= x;
        x = frob(x, k);
    }
    return acc;
}

Fe Field::norm(Fe a, unsigned k) const {
    check_divisor(k);
    return pow(a, group_order() / ((std::uint64_t(1) << k) - 1));
}

bool Field::in_subfield(Fe a, unsigned k) const {
    check_divisor(k);
    return frob(a, k % n_) == a;
}

const std::vector<std::uint64_t>& Field::order_prime_factors() const {
    if (factors_.empty()) {
        std::uint64_t v = group_order();
        for (std::uint64_t p = 2; p * p <= v; ++p) {
            if (v % p == 0) {
                factors_.push_back(p);
                while (v % p == 0) v /= p;
            }
        }
        if (v > 1) factors_.push_back(v);
    }
    return factors_;
}

std::uint64_t Field::mult_order(Fe a) const {
    if (a == 0) throw std::domain_error("multiplicative order of 0");
    std::uint64_t ord = group_order();
    for (std::uint64_t p : order_prime_factors()) {
        while (ord % p == 0 && pow(a, ord / p) == 1) ord /= p;
    }
    return ord;
}

Fe Field::generator() const {
    if (generator_ == 0) {
        if (n_ == 1) {
            generator_ = 1;
        } else {
            for (Fe c = 2; ; ++c) {
                if (mult_order(c) == group_order()) { generator_ = c; break; }
            }
        }
    }
    return generator_;
}

void Field::build_tables() {
    if (!log_.empty()) return;
    const std::uint64_t go = group_order();
    const Fe g = generator();
    exp_.assign(2 * go, 0);
    log_.assign(order(), 0);
    Fe cur = 1;
    for (std::uint64_t i = 0; i < go; ++i) {
        exp_[i] = cur;
        log_[cur] = static_cast<std::uint32_t>(i);
        cur = mul_clmul(cur, g);
    }
    for (std::uint64_t i = 0; i < go; ++i) exp_[go + i] = exp_[i];
}

void Field::ensure_tables() {
    if (has_tables()) return;
    if (n_ > max_table_degree)
        throw std::invalid_argument("exp/log tables limited to n <= 20");
    build_tables();
}

SubfieldPoly Field::char_poly(Fe b) const {
    const unsigned t = this->t(), m = this->m();
    // Expand prod_i (x + b^(q^i)); char 2, so signs vanish.
    std::vector<Fe> p{1}; // coefficients, degree descending; p[j] = coeff of x^(deg-j)
    Fe conj = b;
    for (unsigned i = 0; i < t; ++i) {
        std::vector<Fe> np(p.size() + 1, 0);
        for (std::size_t j = 0; j < p.size(); ++j) {
            np[j] ^= p[j];
            np[j + 1] ^= mul(p[j], conj);
        }
        p = std::move(np);
        conj = frob(conj, m);
    }
    SubfieldPoly cp;
    cp.coeffs.assign(p.begin() + 1, p.end());
    return cp;
}

bool Field::char_poly_irreducible(Fe b) const {
    const unsigned t = this->t(), m = this->m();
    for (unsigned r = 1; r < t; ++r) {
        if (t % r == 0 && frob(b, (m * r) % n_) == b) return false;
    }
    return true;
}

bool Field::quad_irreducible(Fe a, Fe b) const {
    if (a == 0) throw std::invalid_argument("quad_irreducible requires a != 0");
    return trace(mul(b, inv(mul(a, a))), 1) == 1;
}

std::vector<Fe> Field::subfield_elements(unsigned k) const {
    check_divisor(k);
    std::vector<Fe> out;
    out.reserve(std::size_t(1) << k);
    for (std::uint64_t x = 0; x < order(); ++x) {
        if (frob(static_cast<Fe>(x), k % n_) == static_cast<Fe>(x)) out.push_back(static_cast<Fe>(x));
    }
    return out;
}

Fe Field::subfield_trace(Fe x, unsigned k) const {
    check_divisor(k);
    if (frob(x, k % n_) != x)
        throw std::invalid_argument("subfield_trace argument is not in GF(2^k)");
    Fe acc = 0, c = x;
    for (unsigned i = 0; i < k; ++i) {
        acc ^= c;
        c = mul(c, c);
    }
    return acc;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "n=" << n_ << ",poly=0x" << std::hex << poly_;
    if (has_split()) os << std::dec << ",m=" << m_;
    return os.str();
}

Field parse_field_spec(const std::string& spec) {
    unsigned n = 0, m = 0;
    std::optional<std::uint64_t> poly;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad field spec item: " + item);
        const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        try {
            if (key == "n") n = static_cast<unsigned>(std::stoul(val, nullptr, 0));
            else if (key == "m") m = static_cast<unsigned>(std::stoul(val, nullptr, 0));
            else if (key == "poly") poly = std::stoull(val, nullptr, 0);
            else throw std::invalid_argument("unknown field spec key: " + key);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad field spec value: " + item);
        }
    }
    if (n == 0) throw std::invalid_argument("field spec needs n=<int>");
    Field f(n, poly);
    if (m != 0) {
        if (m > n || n % m != 0 || n / m < 2)
            throw std::invalid_argument("field spec m must satisfy n = t*m, t >= 2");
        f.set_split(n / m, m);
    }
    return f;
}

} // namespace ppf
