#include "ppf/search.hpp"
#include "ppf/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace ppf {

namespace {

using json = nlohmann::ordered_json;

// Table-driven scan over tuples (c_0, ..., c_{p-1}) in GF(2^n)^p,
// candidate index = c_0 major. A candidate survives when
//   base[j] ^ tab[0][c_0*S+j] ^ ... ^ tab[p-1][c_{p-1}*S+j] != 0
// for every j (b running over generator powers).
struct TableScan {
    unsigned n = 0;
    std::uint64_t S = 0;     // 2^n, table stride
    std::uint64_t jlen = 0;  // 2^n - 1
    std::vector<std::uint16_t> base;
    std::vector<std::vector<std::uint16_t>> tab;

    std::uint64_t total() const {
        return std::uint64_t(1) << (n * tab.size());
    }

    void scan(std::uint64_t lo, std::uint64_t hi,
              std::vector<std::uint64_t>& out) const {
        const unsigned p = static_cast<unsigned>(tab.size());
        const std::uint64_t mask = S - 1;
        std::vector<std::uint16_t> prefix(jlen);
        std::uint64_t cur_high = ~std::uint64_t(0);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            const std::uint64_t high = idx >> n;
            if (high != cur_high) {
                cur_high = high;
                for (std::uint64_t j = 0; j < jlen; ++j) prefix[j] = base[j];
                for (unsigned i = 0; i + 1 < p; ++i) {
                    const std::uint64_t c = (high >> (n * (p - 2 - i))) & mask;
                    const std::uint16_t* row = tab[i].data() + c * S;
                    for (std::uint64_t j = 0; j < jlen; ++j) prefix[j] ^= row[j];
                }
            }
            const std::uint16_t* last = tab[p - 1].data() + (idx & mask) * S;
            bool ok = true;
            for (std::uint64_t j = 0; j < jlen; ++j) {
                if (static_cast<std::uint16_t>(prefix[j] ^ last[j]) == 0) { ok = false; break; }
            }
            if (ok) out.push_back(idx);
        }
    }
};

struct CheckpointIo {
    std::string path;
    std::string search_name;
    unsigned m = 0;
    std::uint64_t chunk = 0, total = 0;

    bool load(std::vector<char>& chunk_done, std::vector<std::uint64_t>& members) const {
        if (path.empty()) return false;
        std::ifstream in(path);
        if (!in) return false;
        json j;
        try {
            in >> j;
        } catch (const json::exception&) {
            throw std::invalid_argument("unreadable checkpoint file: " + path);
        }
        if (j.value("search", "") != search_name || j.value("m", 0u) != m ||
            j.value("chunk", std::uint64_t(0)) != chunk ||
            j.value("total", std::uint64_t(0)) != total)
            throw std::invalid_argument("checkpoint does not match this search: " + path);
        for (const auto& r : j.at("range_done")) {
            const std::uint64_t lo = r.at(0), hi = r.at(1);
            if (lo % chunk != 0 || lo >= hi || hi > total ||
                (hi % chunk != 0 && hi != total))
                throw std::invalid_argument("corrupt checkpoint range");
            for (std::uint64_t c = lo / chunk; c * chunk < hi; ++c) chunk_done[c] = 1;
        }
        for (const auto& v : j.at("members")) members.push_back(v.get<std::uint64_t>());
        return true;
    }

    void save(const std::vector<char>& chunk_done,
              std::uint64_t partial_count,
              const std::vector<std::uint64_t>& members) const {
        if (path.empty()) return;
        json ranges = json::array();
        const std::uint64_t nchunks = chunk_done.size();
        for (std::uint64_t c = 0; c < nchunks; ++c) {
            if (!chunk_done[c]) continue;
            std::uint64_t d = c;
            while (d + 1 < nchunks && chunk_done[d + 1]) ++d;
            ranges.push_back({c * chunk, std::min(total, (d + 1) * chunk)});
            c = d;
        }
        std::vector<std::uint64_t> sorted = members;
        std::sort(sorted.begin(), sorted.end());
        json j;
        j["search"] = search_name;
        j["m"] = m;
        j["chunk"] = chunk;
        j["total"] = total;
        j["range_done"] = ranges;
        j["partial_count"] = partial_count;
        j["members"] = sorted;
        const std::string tmp = path + ".tmp";
        {
            std::ofstream out(tmp);
            out << j.dump();
        }
        std::rename(tmp.c_str(), path.c_str());
    }

    void remove() const {
        if (!path.empty()) std::remove(path.c_str());
    }
};

SearchResult run_table_scan(const TableScan& scan, const std::string& name,
                            unsigned m, unsigned tuple_len,
                            const SearchOptions& opts) {
    const std::uint64_t total = scan.total();
    const std::uint64_t chunk = std::min<std::uint64_t>(total, scan.S * scan.S);
    const std::uint64_t nchunks = (total + chunk - 1) / chunk;

    std::vector<char> chunk_done(nchunks, 0);
    std::vector<std::uint64_t> members;
    CheckpointIo ck{opts.checkpoint, name, m, chunk, total};
    const bool resumed = ck.load(chunk_done, members);

    std::vector<std::vector<std::uint64_t>> slots(nchunks);
    std::uint64_t completed = 0;
    run_chunks(
        total, chunk, opts.jobs,
        [&](std::uint64_t c) { return chunk_done[c] != 0; },
        [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
            scan.scan(lo, hi, slots[c]);
        },
        [&](std::uint64_t c) {
            members.insert(members.end(), slots[c].begin(), slots[c].end());
            slots[c].clear();
            slots[c].shrink_to_fit();
            chunk_done[c] = 1;
            if (!opts.checkpoint.empty() && (++completed % 64 == 0))
                ck.save(chunk_done, members.size(), members);
        });
    ck.remove();

    std::sort(members.begin(), members.end());
    SearchResult res;
    res.total = total;
    res.count = members.size();
    res.resumed = resumed;
    res.members.reserve(members.size());
    const std::uint64_t mask = scan.S - 1;
    for (std::uint64_t idx : members) {
        std::vector<Fe> tup(tuple_len);
        for (unsigned i = 0; i < tuple_len; ++i)
            tup[i] = static_cast<Fe>((idx >> (scan.n * (tuple_len - 1 - i))) & mask);
        res.members.push_back(std::move(tup));
    }
    return res;
}

} // namespace

SearchResult search_trinomials_t3(unsigned m, const SearchOptions& opts) {
    if (m < 1 || m > 3)
        throw std::invalid_argument("trinomial-t3 search supports 1 <= m <= 3");
    if (m == 3 && !opts.long_run)
        throw std::invalid_argument("trinomial-t3 at m=3 scans 2^27 candidates; pass the long-run flag");

    Field f(3 * m);
    f.set_split(3, m);
    const unsigned n = f.n();
    const std::uint64_t q = f.q();
    const std::uint64_t S = f.order(), jlen = f.group_order();

    TableScan scan;
    scan.n = n;
    scan.S = S;
    scan.jlen = jlen;
    scan.base.resize(jlen);
    scan.tab.assign(3, std::vector<std::uint16_t>(S * S));

    // b in generator-power order; per-b exponent values, then per (c, b):
    //   tab[s][c*S + j] = tr_{n/m}(c^2 * e_s(b_j))
    // with e_1 = b^(q^2+2), e_2 = b^3, e_3 = b^(q+2).
    const Fe g = f.generator();
    Fe b = 1;
    for (std::uint64_t j = 0; j < jlen; ++j) {
        scan.base[j] = static_cast<std::uint16_t>(f.pow(b, q * q + q + 1));
        const Fe e[3] = {f.pow(b, q * q + 2), f.pow(b, 3), f.pow(b, q + 2)};
        for (unsigned s = 0; s < 3; ++s)
            for (std::uint64_t c = 0; c < S; ++c)
                scan.tab[s][c * S + j] = static_cast<std::uint16_t>(
                    f.trace(f.mul(f.sqr(static_cast<Fe>(c)), e[s]), m));
        b = f.mul(b, g);
    }
    return run_table_scan(scan, "trinomial-t3", m, 3, opts);
}

SearchResult search_t2_general(unsigned m, const SearchOptions& opts) {
    if (m < 1 || m > 4)
        throw std::invalid_argument("t2-general search supports 1 <= m <= 4");
    if (m == 4 && !opts.long_run)
        throw std::invalid_argument("t2-general at m=4 scans 2^32 candidates; pass the long-run flag");

    Field f(2 * m);
    f.set_split(2, m);
    const unsigned n = f.n();
    const std::uint64_t q = f.q();
    const std::uint64_t S = f.order(), jlen = f.group_order();

    TableScan scan;
    scan.n = n;
    scan.S = S;
    scan.jlen = jlen;
    scan.base.resize(jlen);
    scan.tab.assign(m, std::vector<std::uint16_t>(S * S));

    // Condition per b: N(b) + A_1^2 != 0, i.e. sqrt(N(b)) != A_1 with
    //   A_1 = sum_i (c_i b)^(2^(2m-i)) + (c_i b)^(2^(m-i)).
    const Fe g = f.generator();
    Fe b = 1;
    for (std::uint64_t j = 0; j < jlen; ++j) {
        scan.base[j] = static_cast<std::uint16_t>(f.sqrt(f.pow(b, q + 1)));
        for (unsigned i = 0; i < m; ++i)
            for (std::uint64_t c = 0; c < S; ++c) {
                const Fe cb = f.mul(static_cast<Fe>(c), b);
                scan.tab[i][c * S + j] = static_cast<std::uint16_t>(
                    f.frob(cb, (2 * m - i) % n) ^ f.frob(cb, m - i));
            }
        b = f.mul(b, g);
    }
    return run_table_scan(scan, "t2-general", m, m, opts);
}

} // namespace ppf
