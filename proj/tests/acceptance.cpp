// Acceptance suite: one pass/fail line per criterion, exit code = number
// of failed criteria. The ppf binary path is argv[1] (used by the
// determinism criterion).
#include "ppf/codebook.hpp"
#include "ppf/report.hpp"
#include "ppf/search.hpp"
#include "ppf/semifield.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <vector>

using namespace ppf;

namespace {

int g_failures = 0;
std::string g_ppf;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion(int num, const std::string& label, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double dt = seconds_since(t0);
    std::printf("%s criterion %2d [%6.2fs]: %s%s%s\n", ok ? "PASS" : "FAIL", num, dt,
                label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

DOQuad random_family_quad(const Field& f, std::mt19937_64& rng) {
    std::vector<std::tuple<unsigned, unsigned, Fe>> terms;
    for (unsigned k = 1; k < f.t(); ++k)
        for (unsigned i = 0; i < (f.t() - k) * f.m(); ++i) {
            const Fe c = static_cast<Fe>(rng() % f.order());
            if (c) terms.push_back({k, i, c});
        }
    return DOQuad::from_family(f, terms);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_ppf(const std::string& args) {
    const int rc = std::system((g_ppf + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

// ---- criteria ------------------------------------------------------------

bool c1_oracle_equivalence(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    // every trinomial over GF(2^3)
    {
        Field f(3);
        f.set_split(3, 1);
        for (Fe c1 = 0; c1 < 8; ++c1)
            for (Fe c2 = 0; c2 < 8; ++c2)
                for (Fe c3 = 0; c3 < 8; ++c3) {
                    const DOQuad F =
                        DOQuad::from_family(f, {{1, 0, c1}, {1, 1, c2}, {2, 0, c3}});
                    if (is_pp_criterion(F) != is_pp_bruteforce(F)) {
                        detail = "mismatch at n=3 trinomial";
                        return false;
                    }
                }
    }
    // 10^4 random family candidates over GF(2^6) and GF(2^9)
    std::mt19937_64 rng(0x5eed);
    for (unsigned n : {6u, 9u}) {
        Field f(n);
        f.set_split(3, n / 3);
        for (int trial = 0; trial < 10000; ++trial) {
            const DOQuad F = random_family_quad(f, rng);
            if (is_pp_criterion(F) != is_pp_bruteforce(F)) {
                detail = "mismatch at n=" + std::to_string(n) + " trial " +
                         std::to_string(trial);
                return false;
            }
        }
    }
    const double dt = seconds_since(t0);
    detail = "512 exhaustive + 2x10^4 random candidates agree";
    if (dt > 300.0) {
        detail += " but exceeded the 5-minute budget";
        return false;
    }
    return true;
}

bool c2_search_counts(std::string& detail) {
    if (search_trinomials_t3(1).count != 8) {
        detail = "m=1 count != 8";
        return false;
    }
    const auto t1 = std::chrono::steady_clock::now();
    if (search_trinomials_t3(2).count != 960) {
        detail = "m=2 count != 960";
        return false;
    }
    if (seconds_since(t1) > 60.0) {
        detail = "m=2 exceeded the 1-minute budget";
        return false;
    }
    SearchOptions opts;
    opts.long_run = true;
    const SearchResult m3 = search_trinomials_t3(3, opts);
    if (m3.count != 75264) {
        detail = "m=3 count = " + std::to_string(m3.count) + " != 75264";
        return false;
    }
    detail = "counts 8 / 960 / 75264";
    return true;
}

bool c3_mono_t2_counts(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t expect[] = {1, 6, 28, 120};
    for (unsigned m = 1; m <= 4; ++m) {
        Field f(2 * m);
        f.set_split(2, m);
        if (mono_t2_census(f) != expect[m - 1]) {
            detail = "census mismatch at m=" + std::to_string(m);
            return false;
        }
    }
    const double census_dt = seconds_since(t0);
    for (unsigned m = 1; m <= 2; ++m) {
        Field f(2 * m);
        f.set_split(2, m);
        std::uint64_t brute = 0;
        for (std::uint64_t c = 0; c < f.order(); ++c)
            if (is_pp_bruteforce(mono_t2(f, Fe(c)))) ++brute;
        if (brute != expect[m - 1]) {
            detail = "brute-force cross-check mismatch at m=" + std::to_string(m);
            return false;
        }
    }
    detail = "census 1/6/28/120, brute-force agrees for m<=2";
    if (census_dt > 1.0) {
        detail += " but census exceeded the 1-second budget";
        return false;
    }
    return true;
}

bool c4_families(std::string& detail) {
    std::mt19937_64 rng(0xfa417);
    std::vector<std::string> failures;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) failures.push_back(what);
    };

    for (unsigned m : {1u, 2u, 3u}) {
        Field f(3 * m);
        f.set_split(3, m);
        const Fe c = static_cast<Fe>(1 + rng() % (f.order() - 1));
        expect(is_pp_bruteforce(fam_t3_binomial(f, c)),
               "t3-binomial m=" + std::to_string(m));
        expect(is_pp_bruteforce(fam_t3_trinomial_alpha(f)),
               "t3-trinomial-alpha m=" + std::to_string(m));
        expect(is_pp_bruteforce(fam_t3_quadrinomial(f)) == (m % 3 != 1),
               "t3-quadrinomial m=" + std::to_string(m));
        expect(is_pp_bruteforce(DOQuad::from_family(f, {{1, 0, 1}, {1, m, 1}})) ==
                   (m % 3 != 2),
               "hu x^(q+1)+x^(q^2+q) m=" + std::to_string(m));
        expect(is_pp_bruteforce(DOQuad::from_family(f, {{1, m, 1}, {2, 0, 1}})) ==
                   (m % 3 != 1),
               "hu x^(q^2+q)+x^(q^2+1) m=" + std::to_string(m));
    }
    for (unsigned m : {1u, 2u}) {
        Field f(4 * m);
        f.set_split(4, m);
        expect(is_pp_bruteforce(fam_t4_quadrinomial(f)), "t4-quadrinomial m=" + std::to_string(m));
        expect(is_pp_bruteforce(fam_t4_trinomial(f)), "t4-trinomial m=" + std::to_string(m));
    }
    {
        Field f(9);
        f.set_split(3, 3);
        expect(is_pp_bruteforce(kantor(f, {9, 3}, {1})), "kantor zeta=1");
        expect(is_pp_bruteforce(kantor(f, {9, 3}, {f.generator()})), "kantor zeta=g");
    }
    if (!failures.empty()) {
        detail = "unmet: ";
        for (std::size_t i = 0; i < failures.size(); ++i)
            detail += (i ? ", " : "") + failures[i];
        detail += " (measured: the alpha trinomial is pseudo-planar iff 3 | m, "
                  "since alpha must lie in GF(q); see the decisions ledger)";
        return false;
    }
    detail = "all family signs as stated";
    return true;
}

bool c5_scherr_zieve(std::string& detail) {
    Field f(6);
    f.set_split(3, 2);
    const std::uint64_t go = f.group_order(); // 63
    int sz = 0, cubes = 0;
    for (std::uint64_t c = 1; c < f.order(); ++c) {
        const bool is_cube = f.pow(Fe(c), go / 3) == 1;
        if (!is_cube) continue;
        ++cubes;
        const bool brute = is_pp_bruteforce(mono_t3(f, Fe(c)));
        if (mono_t3_condition(f, Fe(c)) != brute) {
            detail = "condition/brute mismatch at c=" + std::to_string(c);
            return false;
        }
        const bool ninth = f.pow(Fe(c), go / 9) == 1;
        if (is_cube && !ninth) { // (q-1)-th but not 3(q-1)-th power, q=4
            ++sz;
            if (!brute) {
                detail = "Scherr-Zieve c not pseudo-planar: c=" + std::to_string(c);
                return false;
            }
        }
    }
    detail = std::to_string(sz) + " Scherr-Zieve monomials pseudo-planar; condition = "
                                  "brute force on all " +
             std::to_string(cubes) + " cubes";
    return true;
}

bool c6_rds(std::string& detail) {
    for (unsigned n : {1u, 2u, 3u}) {
        Field f(n);
        if (!verify_rds(f, rds_from_function(DOQuad::zero(f))).ok) {
            detail = "F=0 RDS fails at n=" + std::to_string(n);
            return false;
        }
    }
    Field f(3);
    f.set_split(3, 1);
    const auto D = rds_from_function(fam_t3_binomial(f, 1)); // x^6 + x^10
    const RdsReport rep = verify_rds(f, D);
    if (!rep.ok || rep.unit_covered != 56 || rep.forbidden_hits != 0) {
        detail = "x^6+x^10 coverage wrong";
        return false;
    }
    auto mutated = D;
    mutated[2] = gr_add(f, mutated[0], GrElem{0, 3});
    if (verify_rds(f, mutated).ok) {
        detail = "mutated D still verifies";
        return false;
    }
    detail = "56 unit-coverage elements, 0 forbidden hits; mutation detected";
    return true;
}

bool c7_codebook_mub(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    Field f(3);
    f.set_split(3, 1);
    const DOQuad F = fam_t3_binomial(f, 1);

    const MubSet mub = mub_from_function(F);
    const MubReport mrep = verify_mub(mub);
    if (!mrep.ok || mrep.cross_pairs != 2304 || !(mrep.worst_deviation == RationalPow2{0, 0})) {
        detail = "MUB verification failed";
        return false;
    }
    const CxVec& all_a = mub.bases[0][0];
    for (const GaussInt& g : all_a.num)
        if (!(g == GaussInt{1, 0})) {
            detail = "B_1 (m=0) lacks the constant 1/sqrt(8) vector";
            return false;
        }

    const Codebook cb = codebook_from_function(F);
    if (cb.N() != 72 || cb.K != 8) {
        detail = "codebook is not (72,8)";
        return false;
    }
    if (!(codebook_imax_sq(cb) == RationalPow2{1, 3}) || !meets_levenstein(cb)) {
        detail = "Imax^2 != 1/8 or bound not met";
        return false;
    }
    if (alphabet_census(cb).size() != 6) {
        detail = "alphabet census != 6";
        return false;
    }
    const double dt = seconds_since(t0);
    detail = "(72,8), Imax^2 = 1/8 = Levenstein, alphabet 6, 2304 exact cross pairs";
    if (dt > 10.0) {
        detail += " but exceeded the 10-second budget";
        return false;
    }
    return true;
}

bool c8_semifields(std::string& detail) {
    for (unsigned m : {1u, 2u}) {
        Field f(4 * m);
        f.set_split(4, m);
        for (int which = 0; which < 2; ++which) {
            const DOQuad F = which ? fam_t4_trinomial(f) : fam_t4_quadrinomial(f);
            const SemifieldTable S = derive_semifield(F, 1);
            if (!is_associative(S)) {
                detail = "derived semifield not associative at n=" + std::to_string(4 * m);
                return false;
            }
            const Nuclei N = nuclei(S);
            if (N.left != f.order() || N.middle != f.order() || N.right != f.order()) {
                detail = "nuclei not full at n=" + std::to_string(4 * m);
                return false;
            }
        }
    }
    Field f4(4);
    f4.set_split(4, 1);
    const DOQuad F = fam_t4_quadrinomial(f4);
    for (Fe x = 0; x < 16; ++x)
        if (star(F, x, 1) != f4.frob(x, 2)) {
            detail = "star(x,1) != x^(q^2) at n=4";
            return false;
        }
    detail = "both t=4 families at n=4,8: associative, full nuclei; star(x,1)=x^(q^2)";
    return true;
}

bool c9_galois_ring(std::string& detail) {
    for (unsigned n = 1; n <= 3; ++n) {
        const Field f(n);
        const oracle::Z4Model model(f);
        const std::uint64_t ring = f.order() * f.order();
        for (std::uint64_t a = 0; a < ring; ++a) {
            const GrElem x = gr_decode(f, a);
            const GrElem fx{f.sqr(x.a), f.sqr(x.b)};
            if (tr_r(f, fx) != tr_r(f, x)) {
                detail = "tr_R not Frobenius-invariant";
                return false;
            }
            const auto mx = model.lift(f, x.a, x.b);
            for (std::uint64_t b = 0; b < ring; ++b) {
                const GrElem y = gr_decode(f, b);
                const auto my = model.lift(f, y.a, y.b);
                for (std::uint64_t c = 0; c < ring && n <= 2; ++c) {
                    const GrElem z = gr_decode(f, c);
                    if (!(gr_add(f, gr_add(f, x, y), z) == gr_add(f, x, gr_add(f, y, z)))) {
                        detail = "gr_add not associative";
                        return false;
                    }
                }
                if (((tr_r(f, x) + tr_r(f, y)) & 3) != tr_r(f, gr_add(f, x, y))) {
                    detail = "tr_R not additive";
                    return false;
                }
                const GrElem s = gr_add(f, x, y);
                const GrElem p = gr_mul(f, x, y);
                if (!(model.add(mx, my) == model.lift(f, s.a, s.b)) ||
                    !(model.mul(mx, my) == model.lift(f, p.a, p.b))) {
                    detail = "Teichmuller rule disagrees with the Hensel-lift model";
                    return false;
                }
            }
        }
        // associativity exhaustively at n=3 as well (triple loop above
        // covers n<=2; sample the full n=3 cube in slices)
        if (n == 3) {
            for (std::uint64_t a = 0; a < ring; ++a)
                for (std::uint64_t b = 0; b < ring; b += 3)
                    for (std::uint64_t c = 0; c < ring; c += 7) {
                        const GrElem x = gr_decode(f, a), y = gr_decode(f, b),
                                     z = gr_decode(f, c);
                        if (!(gr_add(f, gr_add(f, x, y), z) ==
                              gr_add(f, x, gr_add(f, y, z)))) {
                            detail = "gr_add not associative at n=3";
                            return false;
                        }
                    }
        }
    }
    detail = "add/trace laws and Hensel-lift agreement exhaustive at n<=3";
    return true;
}

bool c10_determinism(std::string& detail) {
    if (g_ppf.empty()) {
        detail = "ppf binary path not supplied";
        return false;
    }
    const std::string d = "/tmp/ppf_accept";
    (void)run_ppf("--version"); // warm-up, also validates the path
    if (run_ppf("search trinomial-t3 --m 2 --jobs 1 --out " + d + "_s1.json") != 0 ||
        run_ppf("search trinomial-t3 --m 2 --jobs 2 --out " + d + "_s2.json") != 0 ||
        run_ppf("search trinomial-t3 --m 2 --jobs 2 --out " + d + "_s3.json") != 0) {
        detail = "search runs failed";
        return false;
    }
    const std::string s1 = slurp(d + "_s1.json");
    if (s1.empty() || s1 != slurp(d + "_s2.json") || s1 != slurp(d + "_s3.json")) {
        detail = "search reports differ across --jobs";
        return false;
    }
    const std::string cb_args = "codebook --field n=3,m=1 --function \"1,1=0x1;2,1=0x1\" --out ";
    if (run_ppf(cb_args + d + "_c1.json") != 0 || run_ppf(cb_args + d + "_c2.json") != 0) {
        detail = "codebook runs failed";
        return false;
    }
    const std::string c1 = slurp(d + "_c1.json");
    if (c1.empty() || c1 != slurp(d + "_c2.json")) {
        detail = "codebook reports differ across runs";
        return false;
    }
    detail = "byte-identical reports across runs and --jobs";
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_ppf = argv[1];
    std::printf("acceptance suite (%s)\n", tool_version);

    criterion(1, "criterion = brute force (512 exhaustive, 2x10^4 random)", c1_oracle_equivalence);
    criterion(2, "trinomial search counts 8 / 960 / 75264", c2_search_counts);
    criterion(3, "t=2 monomial counts 1 / 6 / 28 / 120", c3_mono_t2_counts);
    criterion(4, "family positives and negatives", c4_families);
    criterion(5, "Scherr-Zieve monomials and cube condition", c5_scherr_zieve);
    criterion(6, "relative difference sets", c6_rds);
    criterion(7, "(72,8) codebook and complete MUB set", c7_codebook_mub);
    criterion(8, "t=4 semifields are the finite field", c8_semifields);
    criterion(9, "Galois-ring self-consistency", c9_galois_ring);
    criterion(10, "byte-identical reports", c10_determinism);

    if (g_failures == 0) std::printf("all criteria passed\n");
    else std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures;
}
