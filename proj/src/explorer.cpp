#include "stabspace/explorer.hpp"

#include <future>
#include <set>

#include "json.hpp"
#include "stabspace/dense.hpp"
#include "stabspace/entanglement.hpp"
#include "stabspace/kspace.hpp"

namespace stabspace::explorer {

TheoremViolation::TheoremViolation(const std::string &what_failed, std::string serialized)
    : std::logic_error(what_failed + " violated by:\n" + serialized), set_(std::move(serialized)) {}

namespace {

void check_config(const ScanConfig &c) {
    if (!is_prime(c.d)) throw std::invalid_argument("scans require a prime local dimension");
    if (c.n < 1 || c.n > 16) throw std::invalid_argument("scan site count out of range");
    if (c.k < 1 || c.k > 2 * c.n) throw std::invalid_argument("scan generator count out of range");
}

// Lexicographically next k-combination of columns; false when exhausted.
bool next_combination(std::vector<int> &comb, int cols) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < cols - (k - i)) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> combination_at(int index, int k, int cols) {
    std::vector<int> comb(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb[i] = i;
    for (int step = 0; step < index; ++step) {
        if (!next_combination(comb, cols)) throw std::invalid_argument("shard index out of range");
    }
    return comb;
}

int combination_count(int k, int cols) {
    long long count = 1;
    for (int i = 0; i < k; ++i) count = count * (cols - i) / (i + 1);
    if (count > 1'000'000) throw std::invalid_argument("too many pivot combinations for a shard walk");
    return static_cast<int>(count);
}

// Free cells of the reduced-echelon template for a pivot combination:
// entries right of each row's pivot, excluding all pivot columns.
std::vector<std::pair<int, int>> free_cells(const std::vector<int> &pivots, int cols) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        for (int c = pivots[r] + 1; c < cols; ++c) {
            if (!is_pivot[c]) cells.emplace_back(static_cast<int>(r), c);
        }
    }
    return cells;
}

std::uint64_t pow_or_saturate(int base, std::size_t exponent) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (out > UINT64_MAX / static_cast<std::uint64_t>(base)) return UINT64_MAX;
        out *= static_cast<std::uint64_t>(base);
    }
    return out;
}

// Fast validity pre-checks on symplectic rows (x parts in cols [0, N),
// z parts in [N, 2N)): pairwise commutation, and at d = 2 the order of
// each row. Full validation runs only on survivors.
bool rows_precheck(const std::vector<std::vector<int>> &rows, int d, int n) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            long long tau = 0;
            for (int s = 0; s < n; ++s) {
                tau += static_cast<long long>(rows[j][s]) * rows[i][n + s] - static_cast<long long>(rows[i][s]) * rows[j][n + s];
            }
            if (mod_reduce(tau, d) != 0) return false;
        }
    }
    const long long half_d = static_cast<long long>(d) * (d - 1) / 2;
    if (half_d % d != 0) {
        for (const auto &row : rows) {
            long long q = 0;
            for (int s = 0; s < n; ++s) q += static_cast<long long>(row[s]) * row[n + s];
            if (mod_reduce(q * half_d, d) != 0) return false;
        }
    }
    return true;
}

GeneratorSet set_from_rows(const std::vector<std::vector<int>> &rows, int d, int n) {
    std::vector<PauliWord> words;
    words.reserve(rows.size());
    for (const auto &row : rows) {
        std::vector<SitePauli> sites(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s) sites[s] = SitePauli{row[s], row[n + s]};
        words.emplace_back(d, 0, std::move(sites));
    }
    return GeneratorSet(d, std::move(words));
}

EnumStats enumerate_canonical_shard(const ScanConfig &config, int shard, const std::function<void(const GeneratorSet &)> &on_valid) {
    const int cols = 2 * config.n;
    const auto pivots = combination_at(shard, config.k, cols);
    const auto cells = free_cells(pivots, cols);

    EnumStats stats;
    if (pow_or_saturate(config.d, cells.size()) > config.budget) {
        stats.truncated = true;
        return stats;
    }

    std::vector<std::vector<int>> rows(static_cast<std::size_t>(config.k), std::vector<int>(static_cast<std::size_t>(cols), 0));
    for (std::size_t r = 0; r < pivots.size(); ++r) rows[r][pivots[r]] = 1;

    std::vector<int> odometer(cells.size(), 0);
    for (;;) {
        ++stats.candidates;
        if (rows_precheck(rows, config.d, config.n)) {
            const GeneratorSet set = set_from_rows(rows, config.d, config.n);
            if (validate(set).pass()) on_valid(set);
        }
        std::size_t pos = 0;
        while (pos < cells.size()) {
            const auto [r, c] = cells[pos];
            if (++odometer[pos] < config.d) {
                rows[r][c] = odometer[pos];
                break;
            }
            odometer[pos] = 0;
            rows[r][c] = 0;
            ++pos;
        }
        if (pos == cells.size()) break;
    }
    return stats;
}

EnumStats enumerate_raw(const ScanConfig &config, const std::function<void(const GeneratorSet &)> &on_valid) {
    const int cols = 2 * config.n;
    EnumStats stats;
    const std::uint64_t per_word = pow_or_saturate(config.d, static_cast<std::size_t>(cols));
    if (pow_or_saturate(config.d, static_cast<std::size_t>(cols) * config.k) > config.budget) {
        stats.truncated = true;
        return stats;
    }

    std::vector<std::uint64_t> codes(static_cast<std::size_t>(config.k), 0);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(config.k), std::vector<int>(static_cast<std::size_t>(cols), 0));
    for (;;) {
        ++stats.candidates;
        if (rows_precheck(rows, config.d, config.n)) {
            const GeneratorSet set = set_from_rows(rows, config.d, config.n);
            if (validate(set).pass()) on_valid(set);
        }
        std::size_t g = 0;
        while (g < codes.size()) {
            if (++codes[g] < per_word) {
                std::uint64_t rest = codes[g];
                for (int c = 0; c < cols; ++c) {
                    rows[g][c] = static_cast<int>(rest % static_cast<std::uint64_t>(config.d));
                    rest /= static_cast<std::uint64_t>(config.d);
                }
                break;
            }
            codes[g] = 0;
            rows[g].assign(static_cast<std::size_t>(cols), 0);
            ++g;
        }
        if (g == codes.size()) break;
    }
    return stats;
}

std::string group_key(const GeneratorSet &s) {
    const ZdMatrix reduced = row_reduce(s.symplectic_matrix());
    std::string key;
    for (std::size_t r = 0; r < reduced.rows(); ++r) {
        for (std::size_t c = 0; c < reduced.cols(); ++c) key += static_cast<char>('0' + reduced.row(r)[c]);
        key += '|';
    }
    return key;
}

// Dense cross-examination of a conjecture counterexample candidate: a
// genuinely entangled subspace admits no product state across any cut.
bool dense_ge_confirms(const GeneratorSet &s) {
    const long long dim = checked_pow(s.dim(), s.sites());
    if (dim > 729) return true; // too large to cross-examine; keep the candidate
    const DenseOperator p = projector(s, dim);
    const std::uint64_t cuts = Bipartition::canonical_cut_count(s.sites());
    for (std::uint64_t index = 1; index <= cuts; ++index) {
        const auto found = find_product_state(p, Bipartition::canonical_cut(s.sites(), index), 4, 500, 17 * index);
        if (found.overlap > 1.0 - 1e-6) return false;
    }
    return true;
}

struct GroupCheck {
    std::function<void(const GeneratorSet &, int dimk, bool ge, ScanReport &)> inspect;
};

// Shards run whole or not at all: those whose cumulative candidate count
// fits the budget are eligible, the rest only flip the truncation flag.
// Eligibility is decided upfront, so reports do not depend on the job
// count or scheduling.
std::vector<int> eligible_shards(const ScanConfig &config, int shard_begin, int shard_end, bool &truncated) {
    std::vector<int> eligible;
    std::uint64_t used = 0;
    for (int shard = shard_begin; shard < shard_end; ++shard) {
        const std::uint64_t cost = shard_candidates(config, shard);
        if (cost > config.budget - std::min(config.budget, used)) {
            truncated = true;
            continue;
        }
        used += cost;
        eligible.push_back(shard);
    }
    return eligible;
}

ScanReport run_range(const ScanConfig &config, int shard_begin, int shard_end, const GroupCheck &check) {
    check_config(config);
    const int total = shard_count(config);
    if (shard_begin < 0 || shard_end > total || shard_begin > shard_end) throw std::invalid_argument("shard range out of bounds");

    bool truncated = false;
    const std::vector<int> shards = eligible_shards(config, shard_begin, shard_end, truncated);

    auto run_shards = [&](std::size_t begin, std::size_t end) {
        ScanReport rep;
        std::set<std::string> seen; // raw mode only; canonical visits each group once
        for (std::size_t s = begin; s < end; ++s) {
            const EnumStats stats = enumerate_shard(config, shards[s], [&](const GeneratorSet &set) {
                if (!config.canonical && !seen.insert(group_key(set)).second) return;
                ++rep.groups;
                const KSpace ks = build_kspace(set);
                const bool ge = ge_from_kspace(ks);
                ++rep.dimk_histogram[ks.dim()];
                if (ge) ++rep.ge_count;
                check.inspect(set, ks.dim(), ge, rep);
            });
            rep.candidates += stats.candidates;
        }
        return rep;
    };

    ScanReport out;
    const int jobs = std::max(1, config.jobs);
    if (jobs == 1 || shards.size() <= 1 || !config.canonical) {
        out = run_shards(0, shards.size());
    } else {
        // Chunk the shard list; merging in chunk order keeps the report
        // independent of scheduling.
        const std::size_t chunk_count = std::min<std::size_t>(jobs, shards.size());
        std::vector<std::future<ScanReport>> futures;
        for (std::size_t c = 0; c < chunk_count; ++c) {
            const std::size_t begin = shards.size() * c / chunk_count;
            const std::size_t end = shards.size() * (c + 1) / chunk_count;
            futures.push_back(std::async(std::launch::async, run_shards, begin, end));
        }
        for (auto &f : futures) merge(out, f.get());
    }
    out.truncated = out.truncated || truncated;
    return out;
}

} // namespace

int shard_count(const ScanConfig &config) {
    check_config(config);
    if (!config.canonical) return 1;
    return combination_count(config.k, 2 * config.n);
}

std::uint64_t shard_candidates(const ScanConfig &config, int shard) {
    check_config(config);
    if (!config.canonical) return pow_or_saturate(config.d, static_cast<std::size_t>(2 * config.n) * config.k);
    const auto pivots = combination_at(shard, config.k, 2 * config.n);
    return pow_or_saturate(config.d, free_cells(pivots, 2 * config.n).size());
}

EnumStats enumerate_shard(const ScanConfig &config, int shard, const std::function<void(const GeneratorSet &)> &on_valid) {
    check_config(config);
    if (!config.canonical) {
        if (shard != 0) throw std::invalid_argument("raw enumeration is a single shard");
        return enumerate_raw(config, on_valid);
    }
    return enumerate_canonical_shard(config, shard, on_valid);
}

EnumStats enumerate(const ScanConfig &config, const std::function<void(const GeneratorSet &)> &on_valid) {
    EnumStats total;
    const std::vector<int> shards = eligible_shards(config, 0, shard_count(config), total.truncated);
    for (int shard : shards) {
        total.candidates += enumerate_shard(config, shard, on_valid).candidates;
    }
    return total;
}

ScanReport scan_conjecture1_range(const ScanConfig &config, int shard_begin, int shard_end) {
    const int bound = conjecture1_bound(config.n, config.d);
    GroupCheck check;
    check.inspect = [bound, &config](const GeneratorSet &set, int dimk, bool ge, ScanReport &rep) {
        if (!ge || dimk >= bound) return;
        const std::string serialized = format_generator_set(set);
        if (config.k == 2) {
            throw TheoremViolation("theorem 3 (k=2: genuinely entangled needs dim K >= ceil((N-1)/(d-1)))", serialized);
        }
        // The pairwise route and the K-space route are equivalent; treat a
        // disagreement (or a dense product state) as an internal error
        // rather than a conjecture counterexample.
        if (!is_genuinely_entangled(set).genuinely_entangled || !dense_ge_confirms(set)) {
            throw std::logic_error("genuine-entanglement routes disagree on:\n" + serialized);
        }
        rep.counterexamples.push_back(serialized);
    };
    return run_range(config, shard_begin, shard_end, check);
}

ScanReport scan_conjecture1(const ScanConfig &config) {
    return scan_conjecture1_range(config, 0, shard_count(config));
}

ScanReport scan_theorem2(int n, std::uint64_t budget, int jobs) {
    ScanReport out;
    for (int k = 1; k <= n; ++k) {
        ScanConfig config{2, n, k, true, budget, jobs};
        GroupCheck check;
        check.inspect = [n](const GeneratorSet &set, int dimk, bool ge, ScanReport &) {
            if (ge != (dimk == n - 1)) {
                throw TheoremViolation("theorem 2 (d=2: genuinely entangled iff dim K = N-1)", format_generator_set(set));
            }
        };
        merge(out, run_range(config, 0, shard_count(config), check));
    }
    return out;
}

void merge(ScanReport &into, const ScanReport &from) {
    into.candidates += from.candidates;
    into.groups += from.groups;
    into.ge_count += from.ge_count;
    for (const auto &[dim, count] : from.dimk_histogram) into.dimk_histogram[dim] += count;
    into.counterexamples.insert(into.counterexamples.end(), from.counterexamples.begin(), from.counterexamples.end());
    into.truncated = into.truncated || from.truncated;
}

std::string to_json_string(const ScanReport &report, const std::string &kind, const ScanConfig &config) {
    nlohmann::json j;
    j["kind"] = kind;
    j["d"] = config.d;
    j["n"] = config.n;
    j["k"] = config.k;
    j["mode"] = config.canonical ? "canonical" : "raw";
    j["candidates"] = report.candidates;
    j["groups"] = report.groups;
    j["geCount"] = report.ge_count;
    j["dimkHistogram"] = nlohmann::json::object();
    for (const auto &[dim, count] : report.dimk_histogram) j["dimkHistogram"][std::to_string(dim)] = count;
    j["counterexamples"] = report.counterexamples;
    j["truncated"] = report.truncated;
    return j.dump(2);
}

} // namespace stabspace::explorer
