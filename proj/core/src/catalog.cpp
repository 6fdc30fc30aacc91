/**************************************************************************
 * catalog.cpp
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
#include "lrc4/catalog.hpp"

#include <algorithm>

#include "lrc4/error.hpp"

namespace lrc4 {

namespace {

using VM = VerificationMode;
using ES = EntryStatus;

std::string num(std::size_t x) { return std::to_string(x); }

CatalogEntry row(std::string id, std::size_t r, std::optional<std::size_t> delta, std::string n, std::string k,
                 std::string d, std::string domain, std::string anchor, VM mode, ES status = ES::constructive,
                 std::string note = {}) {
    CatalogEntry e;
    e.id = std::move(id);
    e.r = r;
    e.delta = delta;
    e.n_formula = std::move(n);
    e.k_formula = std::move(k);
    e.d_formula = std::move(d);
    e.domain = std::move(domain);
    e.anchor = std::move(anchor);
    e.mode = mode;
    e.status = status;
    e.note = std::move(note);
    return e;
}

CatalogEntry with_d(CatalogEntry e, std::size_t d) {
    e.d = d;
    return e;
}

CatalogEntry with_d_per_delta(CatalogEntry e, std::size_t m) {
    e.d_per_delta = m;
    return e;
}

CatalogEntry with_d_range(CatalogEntry e, std::size_t lo, std::size_t hi) {
    e.d_min = lo;
    e.d_max = hi;
    return e;
}

std::vector<CatalogEntry> build_entries() {
    const char* r1 = "r = 1 rows of the parameter table";
    std::vector<CatalogEntry> v;
    v.push_back(with_d_per_delta(row("r1.e0", 1, std::nullopt, "k delta", "k", "delta", "k >= 2, delta >= 3", r1, VM::exhaustive), 1));
    v.push_back(with_d_per_delta(row("r1.e1", 1, std::nullopt, "(k+1) delta", "k", "2 delta", "k >= 2, delta >= 3", r1, VM::exhaustive), 2));
    v.push_back(with_d_per_delta(row("r1.e2", 1, std::nullopt, "(k+2) delta", "k", "3 delta", "k in {2,3}, delta >= 3", r1, VM::exhaustive), 3));
    v.push_back(with_d_per_delta(row("r1.e3", 1, std::nullopt, "(k+3) delta", "k", "4 delta", "k in {2,3}, delta >= 3", r1, VM::exhaustive), 4));

    const char* d3 = "d = 3 rows of the parameter table";
    v.push_back(with_d(row("d3.r2", 2, 3, "4l - e", "2l - e", "3", "l >= 2, e in {0,1}", d3, VM::exhaustive), 3));
    v.push_back(with_d(row("d3.r3", 3, 3, "5l - e", "3l - e", "3", "l >= 2, e in {0,1,2}", d3, VM::exhaustive), 3));

    const char* d4 = "d = 4 rows of the parameter table";
    v.push_back(with_d(row("d4.r2delta3", 2, 3, "4l", "2l - 1", "4", "l >= 2 (k odd)", d4, VM::exhaustive), 4));
    v.push_back(with_d(row("d4.r2delta3.keven", 2, 3, "-", "even", "4", "k even",
                           "d = 4, r = 2, delta = 3 divisibility argument", VM::structural, ES::nonexistent,
                           "nonexistent: the length would not be a multiple of 4"),
                       4));
    v.push_back(with_d(row("d4.r3delta3", 3, 3, "5l - e", "3l - 1 - e", "4", "l >= 2, e in {0,1}", d4, VM::exhaustive), 4));
    v.push_back(with_d(row("d4.r3delta3.k0mod3", 3, 3, "-", "0 mod 3", "4", "k = 0 mod 3",
                           "d = 4, r = 3, delta = 3 divisibility argument", VM::structural, ES::nonexistent,
                           "nonexistent: k = 0 mod 3 is ruled out"),
                       4));
    v.push_back(with_d(row("d4.r2delta4", 2, 4, "5l - e", "2l - e", "4", "l >= 2, e in {0,1}", d4, VM::exhaustive), 4));
    v.push_back(with_d(row("d4.r3delta4", 3, 4, "6l - e", "3l - e", "4", "l >= 2, e in {0,1,2}", d4, VM::exhaustive), 4));

    const char* kr1 = "k = r + 1 rows of the parameter table";
    v.push_back(with_d_range(row("k_r1.c21", 2, 4, "d + 5", "3", "d", "12 <= n <= 21", "puncture table for c21", VM::fixed_matrix), 7, 16));
    v.push_back(with_d_range(row("k_r1.c21.short", 2, 4, "10, 11", "3", "5, 6", "n in {10, 11}", kr1, VM::structural,
                                 ES::nonexistent, "nonexistent: no optimal (2,4) code of dimension 3 below length 12"),
                             5, 6));
    v.push_back(with_d_range(row("k_r1.c16", 2, 3, "d + 4", "3", "d", "9 <= n <= 16", "puncture table for c16", VM::fixed_matrix,
                                 ES::constructive, "listed with r = 3 in the parameter table; measured groups have size 4, so r = 2"),
                             5, 12));
    v.push_back(with_d_range(row("k_r1.c17", 3, 3, "d + 5", "4", "d", "10 <= n <= 17", "puncture table for c17", VM::fixed_matrix), 5, 12));
    v.push_back(with_d_range(row("k_r1.c18", 3, 4, "d + 6", "4", "d", "12 <= n <= 18", "length-18 (3,4) matrix and its relatives", VM::fixed_matrix), 6, 12));
    v.push_back(with_d_range(row("k_r1.c18.short", 3, 4, "11", "4", "5", "n = 11", kr1, VM::structural, ES::nonexistent,
                                 "nonexistent: no optimal (3,4) code of dimension 4 below length 12"),
                             5, 5));

    const char* large = "k >= r + 2 rows of the parameter table";
    v.push_back(with_d(row("large.d8r2", 2, 3, "4l", "2l - 3", "8", "l in {3,4,5}", "five-group (2,3) d = 8 matrix", VM::fixed_matrix), 8));
    v.push_back(with_d(row("large.d12r2", 2, 3, "4l", "2l - 5", "12", "l in {4,5}", "five-group (2,3) d = 12 matrix", VM::fixed_matrix), 12));
    v.push_back(with_d(row("large.gtp33", 3, 3, "5l", "3l - 2", "5", "l >= 3", "(3,3), d = 5 tensor family", VM::exhaustive,
                           ES::constructive, "exhaustive for l <= 4, structural beyond"),
                       5));
    v.push_back(with_d(row("large.d10r3", 3, 3, "5l", "3l - 5", "10", "l = sigma + 2", large, VM::structural, ES::open,
                           "open: d = 10 is conjectured impossible; the d9 example ([20,7,9]) is shipped instead"),
                       10));
    v.push_back(with_d_range(row("large.r2delta4", 2, 4, "-", "k >= 4", "> 4", "k >= r + 2", large, VM::structural,
                                 ES::nonexistent, "nonexistent: no optimal (2,4) code with k >= r + 2 over GF(4)"),
                             5, 16));
    v.push_back(with_d(row("large.gtp34", 3, 4, "6l", "3l - 2", "6", "l >= 3", "(3,4), d = 6 tensor family", VM::exhaustive,
                           ES::constructive, "exhaustive for l <= 4, structural beyond"),
                       6));
    v.push_back(with_d(row("large.spread34", 3, 4, "6l", "3l - 5", "12", "3 <= l <= 17", "(3,4), d = 12 family, at most 21 groups",
                           VM::structural, ES::constructive, "exhaustive for l <= 4, pairwise certificate beyond"),
                       12));
    v.push_back(with_d(row("large.spread34.open", 3, 4, "6l", "3l - 5", "12", "18 <= l <= 21",
                           "(3,4), d = 12 family, at most 21 groups", VM::structural, ES::open,
                           "open: existence with 18 to 21 groups is unknown; more than 21 is impossible"),
                       12));
    return v;
}

bool matches(const CatalogEntry& e, const CatalogFilter& f) {
    if (f.r && e.r != *f.r) return false;
    if (f.delta) {
        if (e.delta ? *e.delta != *f.delta : *f.delta < 3) return false;
    }
    if (f.d) {
        if (e.d) return *e.d == *f.d;
        if (e.d_per_delta) return f.delta && e.d_per_delta * *f.delta == *f.d;
        if (e.d_max) return e.d_min <= *f.d && *f.d <= e.d_max;
        return false;
    }
    return true;
}

std::size_t need(const std::optional<std::size_t>& v, const char* name, const CatalogEntry& e) {
    if (!v) throw DomainError(std::string("parameter --") + name + " is required (" + e.domain + ")", e.anchor);
    return *v;
}

ConstructResult built(BuiltCode b) {
    ConstructResult r;
    r.anchor = {};
    r.code = std::move(b);
    return r;
}

ConstructResult verdict(const CatalogEntry& e, ES status, std::string text) {
    ConstructResult r;
    r.status = status;
    r.verdict = std::move(text);
    r.anchor = e.anchor;
    return r;
}

BuiltCode c18_family(std::size_t n) {
    switch (n) {
        case 18: return fixed_matrix_code("c18");
        case 17: return fixed_matrix_code("h17");
        case 16: return fixed_matrix_code("h16");
        case 15: return fixed_matrix_code("h15");
        case 14: return fixed_matrix_code("c18_minus4");
        case 13: return fixed_matrix_code("h13");
        case 12: return fixed_matrix_code("c18_minus6");
        default: break;
    }
    throw DomainError("n must be in 12..18, got n=" + num(n), "length-18 (3,4) matrix and its relatives");
}

}  // namespace

const char* to_string(VerificationMode m) {
    switch (m) {
        case VM::exhaustive: return "exhaustive";
        case VM::structural: return "structural";
        case VM::fixed_matrix: return "fixed-matrix";
    }
    return "?";
}

const char* to_string(EntryStatus s) {
    switch (s) {
        case ES::constructive: return "constructive";
        case ES::open: return "open";
        case ES::nonexistent: return "nonexistent";
    }
    return "?";
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

std::vector<CatalogEntry> catalog_list(const CatalogFilter& filter) {
    const bool any = filter.r || filter.delta || filter.d;
    std::vector<CatalogEntry> out;
    for (const auto& e : catalog_entries()) {
        if (!any) {
            out.push_back(e);
            continue;
        }
        if (e.status != ES::constructive && !filter.include_verdicts) continue;
        if (matches(e, filter)) out.push_back(e);
    }
    return out;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return e;
    throw PreconditionError("unknown family id '" + id + "'");
}

ConstructResult construct(const std::string& id, const ConstructParams& p) {
    const CatalogEntry& e = catalog_entry(id);
    if (e.status != ES::constructive) return verdict(e, e.status, e.note);

    if (id.rfind("r1.e", 0) == 0) {
        const std::size_t excess = static_cast<std::size_t>(id.back() - '0');
        if (p.e && *p.e != excess) throw DomainError("--e must be " + num(excess) + " for " + id, e.anchor);
        return built(r1_family(need(p.k, "k", e), need(p.delta, "delta", e), excess));
    }
    if (id == "d3.r2" || id == "d3.r3") return built(d3_family(e.r, need(p.l, "l", e), p.e.value_or(0)));

    if (id == "d4.r2delta3") {
        if (p.k) {
            if (*p.k % 2 == 0) return verdict(catalog_entry("d4.r2delta3.keven"), ES::nonexistent,
                                              catalog_entry("d4.r2delta3.keven").note);
            if (p.l && *p.l != (*p.k + 1) / 2) throw DomainError("k must equal 2l - 1", e.anchor);
            return built(d4_family(2, 3, (*p.k + 1) / 2, 0));
        }
        return built(d4_family(2, 3, need(p.l, "l", e), p.e.value_or(0)));
    }
    if (id == "d4.r3delta3") {
        if (p.k) {
            if (*p.k % 3 == 0) return verdict(catalog_entry("d4.r3delta3.k0mod3"), ES::nonexistent,
                                              catalog_entry("d4.r3delta3.k0mod3").note);
            const std::size_t ex = *p.k % 3 == 2 ? 0 : 1;
            if (p.e && *p.e != ex) throw DomainError("k = 3l - 1 - e fixes e=" + num(ex), e.anchor);
            return built(d4_family(3, 3, (*p.k + 1 + ex) / 3, ex));
        }
        return built(d4_family(3, 3, need(p.l, "l", e), p.e.value_or(0)));
    }
    if (id == "d4.r2delta4") return built(d4_family(2, 4, need(p.l, "l", e), p.e.value_or(0)));
    if (id == "d4.r3delta4") return built(d4_family(3, 4, need(p.l, "l", e), p.e.value_or(0)));

    if (id == "k_r1.c21") {
        const std::size_t n = need(p.n, "n", e);
        if (n == 10 || n == 11) {
            const auto& s = catalog_entry("k_r1.c21.short");
            return verdict(s, ES::nonexistent, s.note);
        }
        return built(table_puncture_family(TableBase::c21, n));
    }
    if (id == "k_r1.c16") return built(table_puncture_family(TableBase::c16, need(p.n, "n", e)));
    if (id == "k_r1.c17") return built(table_puncture_family(TableBase::c17, need(p.n, "n", e)));
    if (id == "k_r1.c18") {
        const std::size_t n = need(p.n, "n", e);
        if (n == 11) {
            const auto& s = catalog_entry("k_r1.c18.short");
            return verdict(s, ES::nonexistent, s.note);
        }
        return built(c18_family(n));
    }

    if (id == "large.d8r2") return built(d8_2_3_family(need(p.l, "l", e)));
    if (id == "large.d12r2") return built(d12_2_3_family(need(p.l, "l", e)));
    if (id == "large.gtp33" || id == "large.gtp34") {
        const std::size_t l = need(p.l, "l", e);
        if (l < 3) throw DomainError("l >= 3 required, got l=" + num(l) + " (l = 2 has k = r + 1)", e.anchor);
        return built(id == "large.gtp33" ? gtp33_family(l) : gtp34_family(l));
    }
    if (id == "large.spread34") {
        const std::size_t l = need(p.l, "l", e);
        if (l > kProvenMaxGroups)
            return verdict(e, ES::nonexistent, "nonexistent: at most " + num(kProvenMaxGroups) + " groups are possible");
        if (l > kSpreadMaxGroups) {
            const auto& s = catalog_entry("large.spread34.open");
            return verdict(s, ES::open, s.note);
        }
        return built(spread_construction_3_4_d12(l));
    }
    throw PreconditionError("no builder for family id '" + id + "'");
}

ConstructParams smallest_params(const CatalogEntry& e) {
    ConstructParams p;
    const std::string& id = e.id;
    if (id.rfind("r1.", 0) == 0) {
        p.k = 2;
        p.delta = 3;
    } else if (id.rfind("d3.", 0) == 0 || id.rfind("d4.", 0) == 0) {
        p.l = 2;
        p.e = 0;
    } else if (id == "k_r1.c21") {
        p.n = 12;
    } else if (id == "k_r1.c16") {
        p.n = 9;
    } else if (id == "k_r1.c17") {
        p.n = 10;
    } else if (id == "k_r1.c18") {
        p.n = 12;
    } else if (id == "large.d8r2") {
        p.l = 3;
    } else if (id == "large.d12r2") {
        p.l = 4;
    } else {
        p.l = 3;
    }
    return p;
}

}  // namespace lrc4
