#ifndef PPF_SEARCH_HPP
#define PPF_SEARCH_HPP

#include "ppf/planar.hpp"

#include <string>

namespace ppf {

struct SearchOptions {
    unsigned jobs = 0;        // 0 = default_jobs()
    bool long_run = false;    // acknowledges the expensive sizes
    std::string checkpoint;   // range-resume file; empty = none
};

struct SearchResult {
    std::uint64_t total = 0;  // candidate space size
    std::uint64_t count = 0;  // pseudo-planar members found
    // Coefficient tuples of the members, sorted by candidate encoding
    // (lexicographic over the coefficients' integer encodings).
    std::vector<std::vector<Fe>> members;
    bool resumed = false;     // a checkpoint contributed prior ranges
};

// Exhaustive scan of c1 x^(q+1) + c2 x^(q^2+q) + c3 x^(q^2+1) over
// GF(2^(3m))^3. m <= 2 runs freely; m = 3 needs long_run.
SearchResult search_trinomials_t3(unsigned m, const SearchOptions& opts = {});

// Exhaustive scan of sum_i c_i x^(2^(m+i)+2^i) over GF(2^(2m))^m.
// m <= 3 runs freely; m = 4 needs long_run.
SearchResult search_t2_general(unsigned m, const SearchOptions& opts = {});

} // namespace ppf

#endif
