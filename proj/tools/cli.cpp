/**************************************************************************
 * cli.cpp
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
#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "lrc4/catalog.hpp"
#include "lrc4/error.hpp"
#include "lrc4/lrc.hpp"
#include "lrc4/matrix_io.hpp"

namespace lrc4::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join_groups(const std::vector<Support>& groups) {
    std::ostringstream s;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i) s << ' ';
        s << '{';
        const auto pos = to_one_based(groups[i]);
        for (std::size_t j = 0; j < pos.size(); ++j) s << (j ? "," : "") << pos[j];
        s << '}';
    }
    return s.str();
}

std::string params_line(const LrcParams& p) {
    std::ostringstream s;
    s << "n=" << p.n << " k=" << p.k << " d=" << p.d << " r=" << p.r << " delta=" << p.delta;
    return s.str();
}

void print_entry(std::ostream& out, const CatalogEntry& e) {
    out << e.id << "  r=" << e.r << " delta=" << (e.delta ? std::to_string(*e.delta) : std::string("any"));
    out << "  n=" << e.n_formula << "  k=" << e.k_formula << "  d=" << e.d_formula;
    out << "  [" << e.domain << "]  " << to_string(e.mode) << "  " << to_string(e.status);
    out << "  (" << e.anchor << ")";
    if (!e.note.empty()) out << "  " << e.note;
    out << '\n';
}

LinearCode load_code(const std::string& path) { return code_from_import(import_matrix_text(read_text_file(path))); }

struct Options {
    // catalog
    std::optional<std::size_t> r, delta, d;
    bool all = false;
    // construct
    std::string id;
    std::optional<std::size_t> l, k, e, n;
    std::string out_file, groups_out;
    bool generator = false;
    // shared
    std::string file, groups_file, word;
    std::size_t cap = kDefaultEnumerationCap;
    unsigned threads = 1;
    std::optional<std::size_t> distance;
    // designcheck
    std::size_t t = 0, lambda = 0;
    std::optional<std::size_t> v;
};

int cmd_catalog(const Options& o, std::ostream& out) {
    CatalogFilter f;
    f.r = o.r;
    f.delta = o.delta;
    f.d = o.d;
    f.include_verdicts = o.all;
    const auto entries = catalog_list(f);
    for (const auto& e : entries) print_entry(out, e);
    out << entries.size() << " entries\n";
    return kExitOk;
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
    ConstructParams p;
    p.l = o.l;
    p.k = o.k;
    p.e = o.e;
    p.n = o.n;
    p.delta = o.delta;
    ConstructResult res;
    if (o.id.rfind("fixed.", 0) == 0)
        res.code = fixed_matrix_code(o.id.substr(6));
    else
        res = construct(o.id, p);
    if (!res.code) {
        out << o.id << ": " << to_string(res.status) << "  (" << res.anchor << ")\n";
        if (!res.verdict.empty()) out << res.verdict << '\n';
        return kExitFailed;
    }
    const BuiltCode& b = *res.code;
    const bool as_generator = o.generator || b.kind == MatrixKind::generator;
    const Matrix m = o.generator && b.kind == MatrixKind::parity ? b.code.generator() : b.matrix;
    const std::string text = export_matrix(m, as_generator ? MatrixKind::generator : MatrixKind::parity);

    std::ostream& info = o.out_file.empty() ? err : out;
    info << b.name << "  n=" << b.code.length() << " k=" << b.code.dimension() << " design_d=" << b.design_distance
         << " r=" << b.r << " delta=" << b.delta << '\n';
    info << "groups " << join_groups(b.groups) << '\n';
    if (o.out_file.empty())
        out << text;
    else
        write_text_file(o.out_file, text);
    if (!o.groups_out.empty()) write_text_file(o.groups_out, export_groups(b.groups));
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const LinearCode code = load_code(o.file);
    AssessOptions opts;
    opts.enumeration.cap = o.cap;
    opts.enumeration.threads = o.threads;
    opts.discovery.threads = o.threads;
    opts.distance = o.distance;
    if (!o.groups_file.empty()) opts.groups = import_groups(read_text_file(o.groups_file));
    const Assessment a = verify_optimal(code, *o.r, *o.delta, opts);

    out << params_line(a.params) << '\n';
    out << "bound=" << a.bound << " gap=" << a.singleton_gap << " defect=" << a.defect << '\n';
    out << "groups " << a.groups.size() << " " << join_groups(a.groups) << '\n';
    out << "locality " << (a.locality.passed() ? "pass" : "fail");
    if (!a.locality.covers) out << " (uncovered " << a.locality.uncovered.size() << ")";
    out << '\n';
    out << "defect_bound " << to_string(a.defect_bound) << '\n';
    out << "locality_bound " << to_string(a.locality_bound) << '\n';
    out << "group_sizes " << to_string(a.group_sizes) << '\n';
    out << "disjoint_groups " << to_string(a.disjoint_groups) << '\n';
    out << "uniform_groups " << to_string(a.uniform_groups) << '\n';
    out << "local_mds " << to_string(a.local_mds) << '\n';
    out << "residue " << to_string(a.residue);
    if (a.residue_code) out << " [" << a.residue_code->length() << "," << a.residue_code->dimension() << "]";
    out << '\n';
    for (const auto& note : a.notes) out << "note " << note << '\n';
    out << (a.passed() ? "optimal" : "not optimal") << '\n';
    return a.passed() ? kExitOk : kExitFailed;
}

int cmd_distance(const Options& o, std::ostream& out) {
    const LinearCode code = load_code(o.file);
    EnumerationOptions opts;
    opts.cap = o.cap;
    opts.threads = o.threads;
    const WeightDistribution w = weight_distribution(code, opts);
    out << "n=" << code.length() << " k=" << code.dimension() << " d=" << w.min_distance() << '\n';
    for (std::size_t i = 0; i < w.counts.size(); ++i)
        if (w.counts[i]) out << "A" << i << "=" << w.counts[i] << '\n';
    return kExitOk;
}

int cmd_repair(const Options& o, std::ostream& out) {
    const LinearCode code = load_code(o.file);
    const ErasureWord word = parse_erasure_word(o.word);
    if (word.size() != code.length())
        throw UsageError("word has " + std::to_string(word.size()) + " symbols, code length is " +
                         std::to_string(code.length()));
    std::vector<Support> groups;
    if (!o.groups_file.empty()) groups = import_groups(read_text_file(o.groups_file));
    const RepairResult res = repair_erasures(code, make_repair_groups(code, groups), word);
    out << to_string(res.status) << '\n';
    if (!res.local.empty()) out << "local " << join_groups({res.local}) << '\n';
    if (!res.global.empty()) out << "global " << join_groups({res.global}) << '\n';
    if (res.ok()) out << format_word(res.word) << '\n';
    return res.ok() ? kExitOk : kExitFailed;
}

bool looks_like_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        return line.compare(pos, 3, "gf4") == 0;
    }
    return false;
}

int cmd_designcheck(const Options& o, std::ostream& out) {
    const std::string text = read_text_file(o.file);
    std::vector<Support> groups;
    std::size_t v = 0;
    if (looks_like_matrix(text)) {
        if (!o.r || !o.delta) throw UsageError("a matrix file needs --r and --delta to discover groups");
        const LinearCode code = code_from_import(import_matrix_text(text));
        DiscoveryOptions opts;
        opts.threads = o.threads;
        groups = discover_repair_groups(code, *o.r, *o.delta, opts).groups;
        v = code.length();
    } else {
        groups = import_groups(text);
        if (!o.v) throw UsageError("a groups file needs --v (number of points)");
        v = *o.v;
    }
    const bool ok = design_check(groups, o.t, v, o.lambda);
    out << "groups=" << groups.size() << " points=" << v << '\n';
    const auto reps = replication_counts(groups, v);
    out << "replication";
    for (auto c : reps) out << ' ' << c;
    out << '\n';
    out << o.t << "-(" << v << "," << (groups.empty() ? 0 : groups.front().size()) << "," << o.lambda << ") design "
        << (ok ? "yes" : "no") << '\n';
    return ok ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quaternary locally repairable codes: catalog, construction and verification"};
    app.name("lrc4");
    app.require_subcommand(1);
    Options o;

    auto* catalog = app.add_subcommand("catalog", "List catalog families");
    catalog->add_option("--r", o.r, "Locality r");
    catalog->add_option("--delta", o.delta, "Local distance delta");
    catalog->add_option("--d", o.d, "Minimum distance");
    catalog->add_flag("--all", o.all, "Also list open and nonexistent verdicts when filtering");

    auto* cons = app.add_subcommand("construct", "Build a catalog family instance");
    cons->add_option("family_id", o.id, "Family id from `lrc4 catalog`, or fixed.<name> for a stored matrix")->required();
    cons->add_option("--l", o.l, "Number of groups");
    cons->add_option("--k", o.k, "Dimension");
    cons->add_option("--e", o.e, "Excess / shortening parameter");
    cons->add_option("--n", o.n, "Length (puncture-table families)");
    cons->add_option("--delta", o.delta, "Local distance (r = 1 families)");
    cons->add_option("--out", o.out_file, "Write the matrix to FILE");
    cons->add_option("--groups-out", o.groups_out, "Write the repair groups to FILE");
    cons->add_flag("--generator", o.generator, "Emit a generator matrix");

    auto* verify = app.add_subcommand("verify", "Check Singleton optimality and locality");
    verify->add_option("FILE", o.file, "Matrix file")->required();
    verify->add_option("--r", o.r, "Locality r")->required();
    verify->add_option("--delta", o.delta, "Local distance delta")->required();
    verify->add_option("--groups", o.groups_file, "Repair groups file (discovered when omitted)");
    verify->add_option("--cap", o.cap, "Largest dimension enumerated exhaustively");
    verify->add_option("--distance", o.distance, "Known minimum distance; skips enumeration");
    verify->add_option("--threads", o.threads, "Enumeration threads (0 = all cores)");

    auto* distance = app.add_subcommand("distance", "Weight distribution and minimum distance");
    distance->add_option("FILE", o.file, "Matrix file")->required();
    distance->add_option("--cap", o.cap, "Largest dimension enumerated exhaustively");
    distance->add_option("--threads", o.threads, "Enumeration threads (0 = all cores)");

    auto* repair = app.add_subcommand("repair", "Fill erasures ('?') in a received word");
    repair->add_option("FILE", o.file, "Matrix file")->required();
    repair->add_option("--word", o.word, "Symbols from {0,1,a,b,?} separated by spaces")->required();
    repair->add_option("--groups", o.groups_file, "Repair groups file; global repair only when omitted");

    auto* design = app.add_subcommand("designcheck", "Check that repair groups form a t-design");
    design->add_option("FILE", o.file, "Matrix file, or a groups file with --v")->required();
    design->add_option("--t", o.t, "Strength t")->required();
    design->add_option("--lambda", o.lambda, "Index lambda")->required();
    design->add_option("--r", o.r, "Locality r (matrix files)");
    design->add_option("--delta", o.delta, "Local distance delta (matrix files)");
    design->add_option("--v", o.v, "Number of points (groups files)");
    design->add_option("--threads", o.threads, "Discovery threads");

    std::vector<const char*> argv{"lrc4"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*catalog) return cmd_catalog(o, out);
        if (*cons) return cmd_construct(o, out, err);
        if (*verify) return cmd_verify(o, out);
        if (*distance) return cmd_distance(o, out);
        if (*repair) return cmd_repair(o, out);
        if (*design) return cmd_designcheck(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace lrc4::cli
