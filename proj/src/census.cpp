#include "tcurve/census.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>

#include "tcurve/scheme.hpp"

namespace tcurve {

bool CensusFilter::accept(const CurveAnalysis& a, const std::string& code,
                          const std::string& code_ascii) const {
    if (components && a.projective.n_components != *components) return false;
    if (type && a.type.kind != *type) return false;
    if (viro && *viro != code && *viro != code_ascii) return false;
    return true;
}

SignDistribution signs_from_index(int degree, std::uint64_t index) {
    SignDistribution d = uniform_signs(degree, -1);
    for (std::size_t k = 0; k < d.signs.size(); ++k)
        if (index >> k & 1u) d.signs[k] = 1;
    return d;
}

std::string sign_string(const SignDistribution& d) {
    std::string s;
    s.reserve(d.signs.size());
    for (std::int8_t v : d.signs) s.push_back(v > 0 ? '+' : '-');
    return s;
}

int census_threads_from_env() {
    if (const char* env = std::getenv("TCURVE_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

struct Tally {
    std::uint64_t count = 0;
    std::uint64_t first_index = 0;
};

// a scheme of indeterminate type can occur with both types, so rows are
// keyed by (code, ascii code, type)
using RowKey = std::tuple<std::string, std::string, int>;
using BlockTally = std::map<RowKey, Tally>;

}  // namespace

CensusResult run_census(int degree, const CensusFilter& filter, int threads, int degree_cap,
                        const std::function<void(std::uint64_t, const std::string&,
                                                 const std::string&, CurveTypeKind)>& stream) {
    if (degree < 1) throw std::invalid_argument("census: degree must be positive");
    if (degree > degree_cap)
        throw std::invalid_argument("census: degree cap exceeded (cap " +
                                    std::to_string(degree_cap) + ")");
    const std::size_t n_points = standard_triangle(degree).lattice_points.size();
    const std::uint64_t total = std::uint64_t(1) << n_points;
    const RegularTriangulation& reg = standard_regular(degree);

    if (stream) threads = 1;  // stream order is the enumeration order
    threads = std::max(1, std::min<int>(threads, 64));
    const std::uint64_t block = (total + static_cast<std::uint64_t>(threads) - 1) /
                                static_cast<std::uint64_t>(threads);

    std::vector<BlockTally> tallies(static_cast<std::size_t>(threads));
    std::vector<std::uint64_t> matched(static_cast<std::size_t>(threads), 0);

    auto work = [&](int w) {
        std::uint64_t lo = static_cast<std::uint64_t>(w) * block;
        std::uint64_t hi = std::min(total, lo + block);
        BlockTally& tally = tallies[static_cast<std::size_t>(w)];
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            SignDistribution d = signs_from_index(degree, idx);
            CurveAnalysis a = analyze(reg, d);
            std::string code = viro_code(a.scheme);
            std::string ascii = viro_code_ascii(a.scheme);
            if (!filter.accept(a, code, ascii)) continue;
            ++matched[static_cast<std::size_t>(w)];
            if (stream) stream(idx, sign_string(d), code, a.type.kind);
            auto [it, inserted] = tally.try_emplace(
                RowKey{code, ascii, static_cast<int>(a.type.kind)}, Tally{0, idx});
            it->second.count += 1;
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    // deterministic merge: keyed accumulation, first occurrence = smallest index
    std::map<RowKey, Tally> merged;
    for (const auto& tally : tallies) {
        for (const auto& [key, t] : tally) {
            auto [it, inserted] = merged.try_emplace(key, t);
            if (!inserted) {
                it->second.count += t.count;
                it->second.first_index = std::min(it->second.first_index, t.first_index);
            }
        }
    }

    CensusResult res;
    res.degree = degree;
    res.total = total;
    for (std::uint64_t m : matched) res.matched += m;
    for (const auto& [key, t] : merged) {
        CensusRow row;
        row.code = std::get<0>(key);
        row.code_ascii = std::get<1>(key);
        row.type = static_cast<CurveTypeKind>(std::get<2>(key));
        row.count = t.count;
        row.first_index = t.first_index;
        row.witness = sign_string(signs_from_index(degree, t.first_index));
        res.rows.push_back(row);
    }
    std::sort(res.rows.begin(), res.rows.end(),
              [](const CensusRow& a, const CensusRow& b) { return a.first_index < b.first_index; });
    return res;
}

}  // namespace tcurve
