/**************************************************************************
 * lrc.cpp
 *
 * Copyright 2026 The lrc4 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/
#include "lrc4/lrc.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <thread>

#include "lrc4/error.hpp"

namespace lrc4 {

std::size_t singleton_bound(std::size_t n, std::size_t k, std::size_t r, std::size_t delta) {
    if (k < 1 || r < 1 || delta < 2 || n <= k)
        throw PreconditionError("singleton_bound requires k >= 1, r >= 1, delta >= 2 and n > k");
    const long long blocks = static_cast<long long>((k + r - 1) / r) - 1;
    const long long d = static_cast<long long>(n) - static_cast<long long>(k) + 1 -
                        blocks * (static_cast<long long>(delta) - 1);
    if (d <= 0)
        throw DomainError("parameters infeasible: n=" + std::to_string(n) + " k=" + std::to_string(k) +
                          " r=" + std::to_string(r) + " delta=" + std::to_string(delta));
    return static_cast<std::size_t>(d);
}

RepairGroupSet make_repair_groups(const LinearCode& code, std::vector<Support> groups) {
    RepairGroupSet set;
    set.local_parity.reserve(groups.size());
    for (auto& g : groups) {
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        set.local_parity.push_back(restriction(code, g).parity());
    }
    set.groups = std::move(groups);
    return set;
}

namespace {

// Column vectors of the generator packed as bit planes; valid for k <= 64.
struct PackedColumn {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

PackedColumn scale(PackedColumn v, std::uint8_t s) {
    switch (s) {
        case 0: return {};
        case 1: return v;
        case 2: return {v.hi, v.lo ^ v.hi};  // times a
        default: return {v.lo ^ v.hi, v.lo};  // times b
    }
}

std::uint8_t entry(PackedColumn v, unsigned bit) {
    return static_cast<std::uint8_t>(((v.lo >> bit) & 1u) | (((v.hi >> bit) & 1u) << 1));
}

constexpr std::array<std::uint8_t, 4> kInverseBits{0, 1, 3, 2};

// Rank of up to 64 packed vectors by incremental reduction.
std::size_t packed_rank(const PackedColumn* cols, std::size_t count, std::size_t skip_mask = 0) {
    std::array<PackedColumn, 64> basis{};
    std::array<unsigned, 64> pivot{};
    std::size_t rank = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if ((skip_mask >> i) & 1u) continue;
        PackedColumn v = cols[i];
        for (std::size_t b = 0; b < rank; ++b) {
            const auto c = entry(v, pivot[b]);
            if (c != 0) {
                const auto s = scale(basis[b], c);
                v.lo ^= s.lo;
                v.hi ^= s.hi;
            }
        }
        const std::uint64_t nz = v.lo | v.hi;
        if (nz == 0) continue;
        const auto p = static_cast<unsigned>(std::countr_zero(nz));
        basis[rank] = scale(v, kInverseBits[entry(v, p)]);
        pivot[rank] = p;
        ++rank;
    }
    return rank;
}

class SupportTester {
public:
    SupportTester(const LinearCode& code, std::size_t delta) : code_(code), delta_(delta) {
        const Matrix& g = code.generator();
        packed_ = g.rows() <= 64;
        if (packed_) {
            columns_.resize(code.length());
            for (std::size_t c = 0; c < code.length(); ++c)
                for (std::size_t r = 0; r < g.rows(); ++r) {
                    const auto b = g(r, c).bits();
                    if (b & 1u) columns_[c].lo |= std::uint64_t{1} << r;
                    if (b & 2u) columns_[c].hi |= std::uint64_t{1} << r;
                }
        }
    }

    // d(C_R) >= delta iff deleting any delta - 1 coordinates keeps the rank.
    bool operator()(const Support& s) const {
        if (s.size() < delta_) return false;
        if (!packed_) return generic(s);
        std::array<PackedColumn, 64> cols{};
        if (s.size() > cols.size()) return generic(s);
        for (std::size_t i = 0; i < s.size(); ++i) {
            cols[i] = columns_[s[i]];
            if ((cols[i].lo | cols[i].hi) == 0) return false;
        }
        const std::size_t full = packed_rank(cols.data(), s.size());
        const std::size_t e = delta_ - 1;
        bool ok = true;
        for_each_subset(s.size(), e, [&](std::size_t mask) {
            if (ok && packed_rank(cols.data(), s.size(), mask) != full) ok = false;
        });
        return ok;
    }

private:
    template <typename Fn>
    static void for_each_subset(std::size_t n, std::size_t e, Fn&& fn) {
        if (e == 0) {
            fn(std::size_t{0});
            return;
        }
        std::size_t mask = (std::size_t{1} << e) - 1;
        const std::size_t limit = std::size_t{1} << n;
        while (mask < limit) {
            fn(mask);
            // next mask with the same popcount (Gosper)
            const std::size_t c = mask & (~mask + 1);
            const std::size_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }

    bool generic(const Support& s) const {
        const Matrix gs = select_columns(code_.generator(), s);
        for (std::size_t c = 0; c < gs.cols(); ++c) {
            bool zero = true;
            for (std::size_t r = 0; r < gs.rows() && zero; ++r) zero = gs(r, c).is_zero();
            if (zero) return false;
        }
        const std::size_t full = rank(gs);
        const std::size_t e = delta_ - 1;
        bool ok = true;
        for_each_subset(s.size(), e, [&](std::size_t mask) {
            if (!ok) return;
            std::vector<std::size_t> drop;
            for (std::size_t i = 0; i < s.size(); ++i)
                if ((mask >> i) & 1u) drop.push_back(i);
            if (rank(remove_columns(gs, drop)) != full) ok = false;
        });
        return ok;
    }

    const LinearCode& code_;
    std::size_t delta_;
    bool packed_ = false;
    std::vector<PackedColumn> columns_;
};

std::uint64_t saturating_binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    long double acc = 1;
    for (std::size_t i = 1; i <= k; ++i) acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (acc > 1.8e19L) return UINT64_MAX;
    return static_cast<std::uint64_t>(acc + 0.5L);
}

using Mask = std::vector<std::uint64_t>;

Mask to_mask(const Support& s, std::size_t n) {
    Mask m((n + 63) / 64, 0);
    for (auto i : s) m[i / 64] |= std::uint64_t{1} << (i % 64);
    return m;
}

bool subset_of(const Mask& a, const Mask& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] & ~b[i]) != 0) return false;
    return true;
}

// All size-s supports whose first element is congruent to `lane` mod `lanes`.
void scan_size(const SupportTester& test, std::size_t n, std::size_t s, std::size_t lane, std::size_t lanes,
               std::vector<Support>& out) {
    Support cur(s);
    for (std::size_t i = 0; i < s; ++i) cur[i] = i;
    while (true) {
        if (cur[0] % lanes == lane && test(cur)) out.push_back(cur);
        std::size_t i = s;
        while (i > 0 && cur[i - 1] == n - s + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < s; ++j) cur[j] = cur[j - 1] + 1;
    }
}

}  // namespace

bool is_repair_support(const LinearCode& code, const Support& support, std::size_t delta) {
    if (delta < 2) throw PreconditionError("delta must be at least 2");
    for (auto i : support)
        if (i >= code.length()) throw PreconditionError("support index out of range");
    return SupportTester(code, delta)(support);
}

LocalityReport verify_locality(const LinearCode& code, const std::vector<Support>& groups, std::size_t r,
                               std::size_t delta) {
    if (groups.empty()) throw PreconditionError("empty repair group list");
    if (r < 1 || delta < 2) throw PreconditionError("locality requires r >= 1 and delta >= 2");
    LocalityReport rep;
    std::vector<bool> covered(code.length(), false);
    rep.sizes_ok = true;
    rep.distances_ok = true;
    for (const auto& g : groups) {
        if (g.empty()) throw PreconditionError("empty repair group");
        GroupCheck gc;
        gc.support = g;
        for (auto i : g) {
            if (i >= code.length()) throw PreconditionError("repair group index out of range");
            covered[i] = true;
        }
        gc.size_ok = g.size() <= r + delta - 1;
        const LinearCode local = restriction(code, g);
        gc.local_dimension = local.dimension();
        gc.local_distance = local.dimension() == 0 ? 0 : min_distance(local);
        gc.distance_ok = gc.local_distance >= delta && !local.degenerate();
        rep.sizes_ok = rep.sizes_ok && gc.size_ok;
        rep.distances_ok = rep.distances_ok && gc.distance_ok;
        rep.groups.push_back(std::move(gc));
    }
    for (std::size_t i = 0; i < code.length(); ++i)
        if (!covered[i]) rep.uncovered.push_back(i);
    rep.covers = rep.uncovered.empty();
    return rep;
}

Discovery discover_repair_groups(const LinearCode& code, std::size_t r, std::size_t delta,
                                 const DiscoveryOptions& options) {
    if (r < 1 || delta < 2) throw PreconditionError("discovery requires r >= 1 and delta >= 2");
    const std::size_t n = code.length();
    const std::size_t smax = std::min(n, r + delta - 1);

    std::uint64_t candidates = 0;
    for (std::size_t s = delta; s <= smax; ++s) {
        const auto c = saturating_binomial(n, s);
        candidates = (UINT64_MAX - candidates < c) ? UINT64_MAX : candidates + c;
    }
    if (candidates > options.budget)
        throw CapExceeded("repair-group discovery needs " + std::to_string(candidates) + " candidate supports",
                          static_cast<std::size_t>(options.budget));

    const SupportTester test(code, delta);
    const std::size_t lanes = std::max(1u, options.threads);
    Discovery out;
    std::vector<Mask> kept;
    for (std::size_t s = delta; s <= smax; ++s) {
        std::vector<std::vector<Support>> found(lanes);
        if (lanes == 1) {
            scan_size(test, n, s, 0, 1, found[0]);
        } else {
            std::vector<std::thread> pool;
            for (std::size_t l = 0; l < lanes; ++l)
                pool.emplace_back([&, l] { scan_size(test, n, s, l, lanes, found[l]); });
            for (auto& t : pool) t.join();
        }
        std::vector<Support> level;
        for (auto& f : found) level.insert(level.end(), f.begin(), f.end());
        std::sort(level.begin(), level.end());
        for (auto& sup : level) {
            const Mask m = to_mask(sup, n);
            const bool minimal = std::none_of(kept.begin(), kept.end(), [&](const Mask& k) { return subset_of(k, m); });
            if (!minimal) continue;
            kept.push_back(m);
            out.groups.push_back(std::move(sup));
        }
    }
    std::vector<bool> covered(n, false);
    for (const auto& g : out.groups)
        for (auto i : g) covered[i] = true;
    out.covers = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
    return out;
}

Matrix dual_subcode(const LinearCode& code, const Support& support) {
    const std::size_t n = code.length();
    std::vector<bool> inside(n, false);
    for (auto i : support) {
        if (i >= n) throw PreconditionError("support index out of range");
        inside[i] = true;
    }
    Support outside;
    for (std::size_t i = 0; i < n; ++i)
        if (!inside[i]) outside.push_back(i);
    const LinearCode d = dual(code);
    if (outside.empty()) return d.generator();
    const LinearCode sh = shorten(d, outside);
    Support in_sorted;
    for (std::size_t i = 0; i < n; ++i)
        if (inside[i]) in_sorted.push_back(i);
    Matrix rows(sh.dimension(), n);
    for (std::size_t r = 0; r < sh.dimension(); ++r)
        for (std::size_t j = 0; j < in_sorted.size(); ++j) rows.at(r, in_sorted[j]) = sh.generator()(r, j);
    return rows;
}

Chain build_chain(const LinearCode& code, std::size_t delta, const std::vector<Support>& candidates,
                  const std::optional<Support>& seed) {
    std::vector<Support> pool = candidates;
    for (auto& s : pool) std::sort(s.begin(), s.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    if (seed) {
        Support s = *seed;
        std::sort(s.begin(), s.end());
        pool.erase(std::remove(pool.begin(), pool.end(), s), pool.end());
        pool.insert(pool.begin(), s);
    }
    std::vector<Matrix> subs;
    subs.reserve(pool.size());
    for (const auto& s : pool) subs.push_back(dual_subcode(code, s));

    Chain chain;
    std::vector<bool> used(pool.size(), false);
    Matrix sum(0, code.length());
    std::size_t dim = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (used[i]) continue;
            const Matrix next = vstack(sum, subs[i]);
            const std::size_t nd = rank(next);
            if (nd >= dim + delta - 1 && nd > dim) {
                used[i] = true;
                sum = rref(next).reduced;
                dim = nd;
                chain.supports.push_back(pool[i]);
                chain.subcodes.push_back(subs[i]);
                chain.running_dims.push_back(dim);
                grew = true;
                break;
            }
        }
    }
    return chain;
}

Support residue_prefix_support(const Chain& chain, std::size_t count) {
    Support u;
    for (std::size_t i = 0; i < count && i < chain.supports.size(); ++i)
        u.insert(u.end(), chain.supports[i].begin(), chain.supports[i].end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

LinearCode residue_code(const LinearCode& code, const Chain& chain, std::size_t r) {
    if (r < 1) throw PreconditionError("r must be positive");
    if (code.dimension() == 0) throw PreconditionError("residue of the zero code");
    const std::size_t m = (code.dimension() - 1) / r;
    if (chain.length() < m)
        throw PreconditionError("chain has " + std::to_string(chain.length()) + " subcodes, residue needs " +
                                std::to_string(m));
    if (m == 0) return code;
    return shorten(code, residue_prefix_support(chain, m));
}

bool design_check(const std::vector<Support>& groups, std::size_t t, std::size_t v, std::size_t lambda) {
    if (t == 0 || t > v) return false;
    std::map<Support, std::size_t> counts;
    for (const auto& g0 : groups) {
        Support g = g0;
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        if (!g.empty() && g.back() >= v) return false;
        if (g.size() < t) continue;
        Support idx(t);
        for (std::size_t i = 0; i < t; ++i) idx[i] = i;
        while (true) {
            Support sub(t);
            for (std::size_t i = 0; i < t; ++i) sub[i] = g[idx[i]];
            ++counts[sub];
            std::size_t i = t;
            while (i > 0 && idx[i - 1] == g.size() - t + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    if (lambda == 0) return counts.empty();
    if (counts.size() != saturating_binomial(v, t)) return false;
    return std::all_of(counts.begin(), counts.end(), [&](const auto& kv) { return kv.second == lambda; });
}

std::vector<std::size_t> replication_counts(const std::vector<Support>& groups, std::size_t v) {
    std::vector<std::size_t> c(v, 0);
    for (const auto& g : groups)
        for (auto i : g)
            if (i < v) ++c[i];
    return c;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "not evaluated";
    }
}

bool Assessment::passed() const {
    if (!optimal()) return false;
    for (Verdict v : {defect_bound, locality_bound, group_sizes, disjoint_groups, local_mds, residue})
        if (v == Verdict::fail) return false;
    return true;
}

namespace {

Verdict verdict(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

bool pairwise_disjoint(const std::vector<Support>& groups, std::size_t n) {
    std::vector<bool> seen(n, false);
    for (const auto& g : groups)
        for (auto i : g) {
            if (seen[i]) return false;
            seen[i] = true;
        }
    return true;
}

}  // namespace

Assessment verify_optimal(const LinearCode& code, std::size_t r, std::size_t delta, const AssessOptions& options) {
    Assessment a;
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    a.params = {n, k, 0, r, delta};
    a.params.d = options.distance ? *options.distance : min_distance(code, options.enumeration);
    const std::size_t d = a.params.d;

    if (options.groups) {
        a.groups = *options.groups;
    } else {
        a.groups = discover_repair_groups(code, r, delta, options.discovery).groups;
    }
    if (a.groups.empty()) {
        a.notes.emplace_back("no repair groups found");
        a.locality.covers = false;
        a.locality.uncovered.resize(n);
        for (std::size_t i = 0; i < n; ++i) a.locality.uncovered[i] = i;
    } else {
        a.locality = verify_locality(code, a.groups, r, delta);
    }

    try {
        a.bound = singleton_bound(n, k, r, delta);
        a.singleton_gap = static_cast<long long>(a.bound) - static_cast<long long>(d);
    } catch (const DomainError& e) {
        a.notes.emplace_back(e.what());
        a.singleton_gap = -static_cast<long long>(d);
    }
    a.defect = n - k + 1 - d;

    if (k >= 2) a.defect_bound = verdict(d <= 4 * (a.defect + 1));

    if (!a.groups.empty()) {
        const auto sz = a.groups.front().size();
        a.uniform_groups = verdict(std::all_of(a.groups.begin(), a.groups.end(),
                                               [&](const Support& g) { return g.size() == sz; }));
    }

    if (!a.optimal()) return a;

    const bool divides = (k - 1) % r == 0;
    a.locality_bound = verdict(divides ? d <= 4 * delta : d <= 4);

    if (a.locality.passed()) {
        bool mds = true;
        for (const auto& g : a.locality.groups)
            mds = mds && g.local_distance == delta && g.local_dimension + g.local_distance == g.support.size() + 1;
        a.local_mds = verdict(mds);
    }

    if (d > 4) {
        const bool sizes = std::all_of(a.groups.begin(), a.groups.end(),
                                       [&](const Support& g) { return g.size() == r + delta - 1; });
        a.group_sizes = verdict(sizes && divides);
        if (k > 2 * r) a.disjoint_groups = verdict(pairwise_disjoint(a.groups, n) && n % (r + delta - 1) == 0);
    }

    if (options.check_residue) {
        const Chain chain = build_chain(code, delta, a.groups);
        const std::size_t m = (k - 1) / r;
        const std::size_t need = (k + r - 1) / r;
        if (chain.length() < need) {
            a.residue = Verdict::fail;
            a.notes.emplace_back("maximal chain shorter than ceil(k/r)");
            return a;
        }
        const LinearCode res = residue_code(code, chain, r);
        const std::size_t expected_codim = n - k - m * (delta - 1);
        bool ok = res.codimension() == expected_codim && res.dimension() + m * r >= k && res.dimension() >= 1;
        if (d > 4) ok = ok && res.dimension() == 1;
        if (ok) {
            if (res.dimension() <= options.enumeration.cap) {
                ok = is_mds(res, options.enumeration);
            } else {
                a.notes.emplace_back("residue distance above enumeration cap");
            }
        }
        a.residue = verdict(ok);
        a.residue_code = res;
    }
    return a;
}

}  // namespace lrc4
