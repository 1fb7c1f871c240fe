#include "ppf/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ppf {

std::string float17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fe_hex(Fe v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", v);
    return buf;
}

Fe parse_fe_hex(const std::string& s) {
    try {
        std::size_t pos = 0;
        const unsigned long v = std::stoul(s, &pos, 0);
        if (pos != s.size() || v > 0xffffffffUL) throw std::invalid_argument(s);
        return static_cast<Fe>(v);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad field element literal: " + s);
    }
}

Json field_json(const Field& f) {
    Json j;
    j["n"] = f.n();
    j["poly"] = "0x" + [&] {
        std::ostringstream os;
        os << std::hex << f.defining_poly();
        return os.str();
    }();
    if (f.has_split()) {
        j["t"] = f.t();
        j["m"] = f.m();
    }
    return j;
}

std::string function_spec(const DOQuad& F) {
    std::ostringstream os;
    if (F.has_family()) {
        const Field& f = F.field();
        const FamilyCoeffs& fam = F.family();
        bool first = true;
        for (unsigned k = 1; k < f.t(); ++k)
            for (unsigned i = 0; i < (f.t() - k) * f.m(); ++i) {
                if (fam.c[k - 1][i] == 0) continue;
                if (!first) os << ";";
                os << k << "," << i << "=" << fe_hex(fam.c[k - 1][i]);
                first = false;
            }
        if (first) os << "0";
        return os.str();
    }
    os << "gen:";
    bool first = true;
    for (const auto& [e, c] : F.coeffs()) {
        if (!first) os << ";";
        os << e.first << "," << e.second << "=" << fe_hex(c);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

DOQuad parse_function_spec(const Field& f, const std::string& spec) {
    std::string body = spec;
    bool generic = !f.has_split();
    if (body.rfind("gen:", 0) == 0) {
        generic = true;
        body = body.substr(4);
    }
    if (body.empty() || body == "0") {
        return DOQuad::zero(f);
    }
    std::vector<std::tuple<unsigned, unsigned, Fe>> terms;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ';')) {
        const auto comma = item.find(',');
        const auto eq = item.find('=');
        if (comma == std::string::npos || eq == std::string::npos || comma > eq)
            throw std::invalid_argument("bad coefficient term: " + item +
                                        " (want k,i=0xHEX or i,j=0xHEX)");
        unsigned a = 0, b = 0;
        try {
            a = static_cast<unsigned>(std::stoul(item.substr(0, comma)));
            b = static_cast<unsigned>(std::stoul(item.substr(comma + 1, eq - comma - 1)));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad coefficient term: " + item);
        }
        terms.push_back({a, b, parse_fe_hex(item.substr(eq + 1))});
    }
    if (generic) {
        std::vector<std::pair<DOQuad::Exponent, Fe>> gterms;
        for (const auto& [i, j, c] : terms) gterms.push_back({{i, j}, c});
        try {
            return DOQuad::from_generic(f, gterms);
        } catch (const std::invalid_argument& e) {
            if (!f.has_split() && body.size() == spec.size())
                throw std::invalid_argument(
                    std::string(e.what()) +
                    " (structured k,i specs need m=<int> in the field spec)");
            throw;
        }
    }
    return DOQuad::from_family(f, terms);
}

Json verify_report(const Field& f, const DOQuad& F, const std::string& method,
                   std::optional<bool> brute, std::optional<bool> criterion) {
    Json j;
    j["tool"] = tool_version;
    j["field"] = field_json(f);
    j["function"] = function_spec(F);
    j["method"] = method;
    if (brute) j["bruteforce"] = *brute;
    if (criterion) j["criterion"] = *criterion;
    const bool pp = brute ? *brute : *criterion;
    j["pseudo_planar"] = pp;
    if (brute && criterion) j["agree"] = (*brute == *criterion);
    return j;
}

Json search_report(const std::string& name, unsigned m, const Field& f,
                   const SearchResult& res, bool include_members) {
    Json j;
    j["tool"] = tool_version;
    j["field"] = field_json(f);
    j["search"] = name;
    j["m"] = m;
    j["candidates"] = res.total;
    j["count"] = res.count;
    if (include_members) {
        Json mem = Json::array();
        for (const auto& tup : res.members) {
            Json row = Json::array();
            for (Fe c : tup) row.push_back(fe_hex(c));
            mem.push_back(row);
        }
        j["members"] = mem;
    }
    return j;
}

Json rds_report(const Field& f, const std::string& fn_spec, std::size_t size,
                const std::optional<RdsReport>& verification) {
    Json j;
    j["tool"] = tool_version;
    j["field"] = field_json(f);
    j["function"] = fn_spec;
    j["size"] = size;
    if (verification) {
        j["rds"] = verification->ok;
        Json hist;
        for (const auto& [cover, cnt] : verification->histogram)
            hist[std::to_string(cover)] = cnt;
        j["coverage"] = {
            {"outside_forbidden_once", verification->unit_covered},
            {"forbidden_hits", verification->forbidden_hits},
            {"histogram", hist},
        };
        if (verification->first_violation) {
            j["first_violation"] = {
                {"element", "0x" + [&] {
                     std::ostringstream os;
                     os << std::hex << *verification->first_violation;
                     return os.str();
                 }()},
                {"kind", verification->violation_kind},
            };
        }
    }
    return j;
}

Json codebook_json(const Field& f, const std::string& fn_spec, const Codebook& cb) {
    Json j;
    j["tool"] = tool_version;
    j["field"] = field_json(f);
    j["function"] = fn_spec;
    j["n"] = f.n();
    j["N"] = cb.N();
    j["K"] = cb.K;
    const RationalPow2 imax = codebook_imax_sq(cb);
    j["imax_sq"] = imax.str();
    const Ratio lev = levenstein_bound_sq(cb.N(), cb.K);
    j["levenstein_sq"] = lev.str();
    j["meets_levenstein"] = meets_levenstein(cb);
    Json alpha = Json::array();
    for (const EntryVal& e : alphabet_census(cb))
        alpha.push_back({e.re, e.im, e.scale_log2});
    j["alphabet"] = alpha;
    j["alphabet_size"] = alpha.size();
    j["scale_denominator_sq"] = f.order();
    j["standard_basis_from"] = cb.standard_basis_from;
    Json vecs = Json::array();
    for (const CxVec& v : cb.vecs) {
        Json row = Json::array();
        for (const GaussInt& g : v.num) row.push_back({g.re, g.im});
        vecs.push_back(row);
    }
    j["vectors"] = vecs;
    return j;
}

std::string codebook_csv(const Codebook& cb) {
    std::ostringstream os;
    for (const CxVec& v : cb.vecs) {
        const double scale = std::pow(2.0, -double(v.scale_log2) / 2.0);
        for (std::size_t j = 0; j < v.num.size(); ++j) {
            if (j) os << ",";
            const double re = double(v.num[j].re) * scale;
            const double im = double(v.num[j].im) * scale;
            os << float17(re) << (im < 0 ? "-" : "+") << float17(std::abs(im)) << "j";
        }
        os << "\n";
    }
    return os.str();
}

Json mub_report(const Field& f, const std::string& fn_spec,
                const std::optional<MubReport>& rep, std::size_t bases,
                std::size_t dimension) {
    Json j;
    j["tool"] = tool_version;
    j["field"] = field_json(f);
    j["function"] = fn_spec;
    j["bases"] = bases;
    j["dimension"] = dimension;
    j["verified"] = rep.has_value();
    if (rep) {
        j["orthonormal"] = rep->orthonormal;
        j["unbiased"] = rep->unbiased;
        j["cross_pairs"] = rep->cross_pairs;
        j["target_sq"] = RationalPow2{1, f.n()}.str();
        j["worst_deviation"] = rep->worst_deviation.str();
        if (!rep->worst_pair.empty()) j["worst_pair"] = rep->worst_pair;
        j["pass"] = rep->ok;
    }
    return j;
}

Json semifield_report(const Field& f, const std::string& fn_spec, Fe e,
                      const SemifieldTable& S, bool associative, bool commutative,
                      const std::optional<Nuclei>& nuc) {
    Json j;
    j["tool"] = tool_version;
    j["field"] = field_json(f);
    j["function"] = fn_spec;
    j["e"] = fe_hex(e);
    j["identity"] = fe_hex(S.identity);
    j["commutative"] = commutative;
    j["associative"] = associative;
    if (nuc) {
        j["nuclei"] = {
            {"left", nuc->left},
            {"middle", nuc->middle},
            {"right", nuc->right},
        };
    }
    return j;
}

Json bounds_report(std::uint64_t N, std::uint64_t K) {
    Json j;
    j["tool"] = tool_version;
    j["N"] = N;
    j["K"] = K;
    const Ratio w = welch_bound_sq(N, K);
    j["welch_sq"] = w.str();
    j["welch"] = float17(std::sqrt(w.value()));
    if (N > K * K) {
        const Ratio lev = levenstein_bound_sq(N, K);
        j["levenstein_sq"] = lev.str();
        j["levenstein"] = float17(std::sqrt(lev.value()));
    } else {
        j["levenstein"] = nullptr; // bound needs N > K^2
    }
    return j;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

} // namespace ppf
