#include "ppf/parallel.hpp"
#include "ppf/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace ppf;

struct FunctionArgs {
    std::string function;
    std::string family;
    std::string c_hex = "0x1";
    std::string a_hex = "0x1";
    std::string chain_str;
    std::string zeta_str;
};

void add_function_opts(CLI::App* cmd, FunctionArgs& fa) {
    cmd->add_option("--function", fa.function,
                    "coefficient spec: k,i=0xHEX;... (structured) or gen:i,j=0xHEX;...");
    cmd->add_option("--family", fa.family,
                    "family constructor: t3-binomial|t3-quadrinomial|t3-trinomial-alpha|"
                    "t4-quadrinomial|t4-trinomial|mono-t2|mono-t3|hu-binomial|kantor");
    cmd->add_option("--c", fa.c_hex, "coefficient for t3-binomial / mono-t2 / mono-t3");
    cmd->add_option("--a", fa.a_hex, "parameter for hu-binomial");
    cmd->add_option("--chain", fa.chain_str, "kantor subfield chain, e.g. 9,3");
    cmd->add_option("--zeta", fa.zeta_str, "kantor zeta list, e.g. 0x1,0x2");
}

std::vector<unsigned> parse_uint_list(const std::string& s) {
    std::vector<unsigned> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(static_cast<unsigned>(std::stoul(item)));
    return out;
}

void need_split(Field& f, unsigned t, const std::string& family) {
    if (f.has_split()) {
        if (f.t() != t)
            throw std::invalid_argument(family + " needs t=" + std::to_string(t) +
                                        " but the field spec sets t=" + std::to_string(f.t()));
        return;
    }
    if (f.n() % t != 0)
        throw std::invalid_argument(family + " needs t=" + std::to_string(t) + " | n");
    f.set_split(t, f.n() / t);
}

DOQuad resolve_function(Field& f, const FunctionArgs& fa) {
    if (fa.family.empty())
        return parse_function_spec(f, fa.function.empty() ? "0" : fa.function);
    if (!fa.function.empty())
        throw std::invalid_argument("give either --function or --family, not both");
    const std::string& fam = fa.family;
    if (fam == "t3-binomial" || fam == "t3-binom") {
        need_split(f, 3, fam);
        return fam_t3_binomial(f, parse_fe_hex(fa.c_hex));
    }
    if (fam == "t3-quadrinomial" || fam == "t3-quad") {
        need_split(f, 3, fam);
        return fam_t3_quadrinomial(f);
    }
    if (fam == "t3-trinomial-alpha" || fam == "t3-alpha") {
        need_split(f, 3, fam);
        return fam_t3_trinomial_alpha(f);
    }
    if (fam == "t4-quadrinomial" || fam == "t4-quad") {
        need_split(f, 4, fam);
        return fam_t4_quadrinomial(f);
    }
    if (fam == "t4-trinomial" || fam == "t4-tri") {
        need_split(f, 4, fam);
        return fam_t4_trinomial(f);
    }
    if (fam == "mono-t2") {
        need_split(f, 2, fam);
        return mono_t2(f, parse_fe_hex(fa.c_hex));
    }
    if (fam == "mono-t3") {
        need_split(f, 3, fam);
        return mono_t3(f, parse_fe_hex(fa.c_hex));
    }
    if (fam == "hu-binomial" || fam == "hu") {
        need_split(f, 3, fam);
        return hu_binomial_a(f, parse_fe_hex(fa.a_hex));
    }
    if (fam == "kantor") {
        const std::vector<unsigned> chain = parse_uint_list(fa.chain_str);
        std::vector<Fe> zetas;
        std::stringstream ss(fa.zeta_str);
        std::string item;
        while (std::getline(ss, item, ',')) zetas.push_back(parse_fe_hex(item));
        if (chain.size() < 2)
            throw std::invalid_argument("kantor needs --chain n,d1[,d2...]");
        if (!f.has_split()) f.set_split(f.n() / chain.back(), chain.back());
        return kantor(f, chain, zetas);
    }
    throw std::invalid_argument("unknown family: " + fam);
}

Field make_field(const std::string& spec) {
    Field f = parse_field_spec(spec);
    if (f.n() <= Field::max_table_degree) f.ensure_tables();
    return f;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output path: " + out_path);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudo-planar functions over GF(2^n): verification, search, "
                 "and derived objects"};
    app.set_version_flag("--version", tool_version);
    app.require_subcommand(1);

    std::string field_spec, out_path, method = "auto", format = "json";
    std::string checkpoint;
    unsigned jobs = 0, m_arg = 0;
    bool long_run = false, count_only = false, do_verify = false, want_nuclei = false;
    std::uint64_t bN = 0, bK = 0;
    std::string e_hex = "0x1";
    FunctionArgs fa;

    auto* verify = app.add_subcommand("verify", "test pseudo-planarity");
    verify->add_option("--field", field_spec, "field spec n=<int>[,poly=0x..][,m=<int>]")->required();
    add_function_opts(verify, fa);
    verify->add_option("--method", method)->check(CLI::IsMember({"auto", "brute", "criterion", "both"}));
    verify->add_option("--out", out_path);

    auto* search = app.add_subcommand("search", "exhaustive family scans");
    search->require_subcommand(1);
    auto* tri = search->add_subcommand("trinomial-t3", "scan c1 x^(q+1) + c2 x^(q^2+q) + c3 x^(q^2+1)");
    auto* t2g = search->add_subcommand("t2-general", "scan sum c_i x^(2^(m+i)+2^i) over GF(2^(2m))");
    for (CLI::App* s : {tri, t2g}) {
        s->add_option("--m", m_arg, "subfield degree m")->required();
        s->add_option("--jobs", jobs, "worker threads (default: PPF_JOBS or hardware)");
        s->add_flag("--long-run", long_run, "acknowledge the expensive sizes");
        s->add_option("--checkpoint", checkpoint, "range-resume file");
        s->add_flag("--count-only", count_only, "omit the member listing");
        s->add_option("--out", out_path);
    }

    auto* rds = app.add_subcommand("rds", "relative difference set in GR(4^n)");
    rds->add_option("--field", field_spec)->required();
    add_function_opts(rds, fa);
    rds->add_flag("--verify", do_verify, "check the difference coverage");
    rds->add_option("--out", out_path);

    auto* cbk = app.add_subcommand("codebook", "MUB-union codebook with exact entries");
    cbk->add_option("--field", field_spec)->required();
    add_function_opts(cbk, fa);
    cbk->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    cbk->add_option("--out", out_path);

    auto* mub = app.add_subcommand("mub", "complete MUB set");
    mub->add_option("--field", field_spec)->required();
    add_function_opts(mub, fa);
    mub->add_flag("--verify", do_verify, "exact orthonormality + unbiasedness check");
    mub->add_option("--out", out_path);

    auto* sf = app.add_subcommand("semifield", "presemifield isotope and nuclei");
    sf->add_option("--field", field_spec)->required();
    add_function_opts(sf, fa);
    sf->add_option("--e", e_hex, "isotope base point (default 0x1)");
    sf->add_flag("--nuclei", want_nuclei, "compute the three nuclei");
    sf->add_option("--out", out_path);

    auto* bounds = app.add_subcommand("bounds", "Welch / Levenstein bounds for (N,K)");
    bounds->add_option("N", bN)->required();
    bounds->add_option("K", bK)->required();
    bounds->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            Field f = make_field(field_spec);
            const DOQuad F = resolve_function(f, fa);
            std::string how = method;
            if (how == "auto") {
                if (F.has_family() && f.has_split())
                    how = f.n() <= 20 ? "both" : "criterion";
                else how = "brute";
            }
            std::optional<bool> br, cr;
            if (how == "brute" || how == "both") br = is_pp_bruteforce(F);
            if (how == "criterion" || how == "both") cr = is_pp_criterion(F);
            emit(dump_report(verify_report(f, F, how, br, cr)), out_path);
            const bool pp = br ? *br : *cr;
            return pp ? 0 : 1;
        }
        if (*search) {
            const bool is_tri = static_cast<bool>(*tri);
            SearchOptions opts;
            opts.jobs = jobs;
            opts.long_run = long_run;
            opts.checkpoint = checkpoint;
            const SearchResult res =
                is_tri ? search_trinomials_t3(m_arg, opts) : search_t2_general(m_arg, opts);
            if (!count_only && out_path.empty() && res.count > 10000) {
                std::cerr << "listing has " << res.count
                          << " members; pass --out <path> or --count-only\n";
                return 2;
            }
            Field f(is_tri ? 3 * m_arg : 2 * m_arg);
            f.set_split(is_tri ? 3 : 2, m_arg);
            emit(dump_report(search_report(is_tri ? "trinomial-t3" : "t2-general", m_arg, f,
                                           res, !count_only)),
                 out_path);
            return 0;
        }
        if (*rds) {
            Field f = make_field(field_spec);
            const DOQuad F = resolve_function(f, fa);
            const std::vector<GrElem> D = rds_from_function(F);
            std::optional<RdsReport> rep;
            if (do_verify) rep = verify_rds(f, D);
            emit(dump_report(rds_report(f, function_spec(F), D.size(), rep)), out_path);
            return (rep && !rep->ok) ? 1 : 0;
        }
        if (*cbk) {
            Field f = make_field(field_spec);
            const DOQuad F = resolve_function(f, fa);
            const Codebook cb = codebook_from_function(F);
            if (format == "csv") emit(codebook_csv(cb), out_path);
            else emit(dump_report(codebook_json(f, function_spec(F), cb)), out_path);
            return 0;
        }
        if (*mub) {
            Field f = make_field(field_spec);
            const DOQuad F = resolve_function(f, fa);
            const MubSet bases = mub_from_function(F);
            std::optional<MubReport> rep;
            if (do_verify) rep = verify_mub(bases);
            emit(dump_report(mub_report(f, function_spec(F), rep, bases.bases.size(),
                                        f.order())),
                 out_path);
            return (rep && !rep->ok) ? 1 : 0;
        }
        if (*sf) {
            Field f = make_field(field_spec);
            const DOQuad F = resolve_function(f, fa);
            const Fe e = parse_fe_hex(e_hex);
            const SemifieldTable S = derive_semifield(F, e);
            const bool assoc = is_associative(S);
            const bool comm = is_commutative(S);
            std::optional<Nuclei> nuc;
            if (want_nuclei) nuc = nuclei(S);
            emit(dump_report(semifield_report(f, function_spec(F), e, S, assoc, comm, nuc)),
                 out_path);
            return 0;
        }
        if (*bounds) {
            emit(dump_report(bounds_report(bN, bK)), out_path);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
