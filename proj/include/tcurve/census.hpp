#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tcurve/pipeline.hpp"

namespace tcurve {

struct CensusFilter {
    std::optional<int> components;
    std::optional<std::string> viro;          // canonical code, either glyph set
    std::optional<CurveTypeKind> type;

    bool accept(const CurveAnalysis& a, const std::string& code,
                const std::string& code_ascii) const;
};

struct CensusRow {
    std::string code;
    std::string code_ascii;
    CurveTypeKind type = CurveTypeKind::EmptyCurve;
    std::uint64_t count = 0;
    std::uint64_t first_index = 0;
    std::string witness;  // sign string in lexicographic point order
};

struct CensusResult {
    int degree = 0;
    std::uint64_t total = 0;    // distributions enumerated
    std::uint64_t matched = 0;  // distributions passing the filter
    std::vector<CensusRow> rows;  // ordered by first occurrence
};

// Distribution index: bit k (lexicographic point order) set means sign +1.
SignDistribution signs_from_index(int degree, std::uint64_t index);
std::string sign_string(const SignDistribution& d);

// Enumerates all 2^n sign distributions; counts are deterministic and
// independent of the worker count (workers own contiguous index blocks).
// Throws std::invalid_argument when degree exceeds the cap. The stream
// callback, when set, receives every matching distribution in index order.
CensusResult run_census(int degree, const CensusFilter& filter, int threads,
                        int degree_cap = 5,
                        const std::function<void(std::uint64_t, const std::string&,
                                                 const std::string&, CurveTypeKind)>& stream = {});

int census_threads_from_env();

}  // namespace tcurve
