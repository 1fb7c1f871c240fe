#ifndef PPF_REPORT_HPP
#define PPF_REPORT_HPP

#include "ppf/codebook.hpp"
#include "ppf/search.hpp"
#include "ppf/semifield.hpp"

#include <json.hpp>

namespace ppf {

inline constexpr const char* tool_version = "ppf 0.1.0";

// Reports are emitted as ordered JSON with fixed key order, sorted
// listings and 17-significant-digit floats rendered as strings, so a
// given RunConfig always produces byte-identical output.
using Json = nlohmann::ordered_json;

std::string float17(double v);
std::string fe_hex(Fe v);
Fe parse_fe_hex(const std::string& s);

Json field_json(const Field& f);

// Canonical coefficient spec: "k,i=0x..;..." when the structured view
// exists, "gen:i,j=0x..;..." otherwise.
std::string function_spec(const DOQuad& F);
// Accepts the same formats; "gen:" forces the generic reading, otherwise
// pairs are read as structured (k,i) when the field has a split.
DOQuad parse_function_spec(const Field& f, const std::string& spec);

Json verify_report(const Field& f, const DOQuad& F, const std::string& method,
                   std::optional<bool> brute, std::optional<bool> criterion);
Json search_report(const std::string& name, unsigned m, const Field& f,
                   const SearchResult& res, bool include_members);
Json rds_report(const Field& f, const std::string& fn_spec, std::size_t size,
                const std::optional<RdsReport>& verification);
Json codebook_json(const Field& f, const std::string& fn_spec, const Codebook& cb);
std::string codebook_csv(const Codebook& cb);
Json mub_report(const Field& f, const std::string& fn_spec,
                const std::optional<MubReport>& rep, std::size_t bases,
                std::size_t dimension);
Json semifield_report(const Field& f, const std::string& fn_spec, Fe e,
                      const SemifieldTable& S, bool associative, bool commutative,
                      const std::optional<Nuclei>& nuc);
Json bounds_report(std::uint64_t N, std::uint64_t K);

std::string dump_report(const Json& j); // dump(2) + trailing newline

} // namespace ppf

#endif
