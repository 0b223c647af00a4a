#include "fss/cli.hpp"

#include "fss/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

namespace fss {

IntRange parse_range(const std::string& text)
{
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size() || v < 1) throw std::invalid_argument("bad range '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    IntRange r;
    if (dots == std::string::npos) {
        r.lo = r.hi = number(text);
    } else {
        r.lo = number(text.substr(0, dots));
        r.hi = number(text.substr(dots + 2));
    }
    if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
    return r;
}

BettiMode parse_betti_mode(const std::string& name)
{
    if (name == "formula") return BettiMode::Formula;
    if (name == "genfun") return BettiMode::Genfun;
    if (name == "complex") return BettiMode::Complex;
    throw std::invalid_argument("unknown mode '" + name + "'");
}

namespace {

void check_cap(bool within, bool allow_large, const std::string& what)
{
    if (!within && !allow_large) throw ResourceCapError(what + " exceeds the resource cap (use --allow-large)");
}

}  // namespace

Grid betti_table(IntRange ks, IntRange ns, BettiMode mode, bool allow_large)
{
    if (mode == BettiMode::Complex)
        check_cap(ks.hi <= Caps::complex_k && ns.hi <= Caps::complex_n, allow_large,
                  "complex mode with k <= " + std::to_string(ks.hi) + ", n <= " + std::to_string(ns.hi));
    Grid g;
    g.corner = "k/n";
    for (int n = ns.lo; n <= ns.hi; ++n) g.column_labels.push_back(std::to_string(n));
    for (int k = ks.lo; k <= ks.hi; ++k) g.row_labels.push_back(std::to_string(k));
    g.cells.assign(static_cast<std::size_t>(ks.hi - ks.lo + 1), {});
    for (int n = ns.lo; n <= ns.hi; ++n) {
        std::vector<Integer> series;
        if (mode == BettiMode::Genfun) series = betti_genfun(n, ks.hi);
        for (int k = ks.lo; k <= ks.hi; ++k) {
            Integer v;
            switch (mode) {
            case BettiMode::Formula: v = betti_formula(k, n); break;
            case BettiMode::Genfun: v = series[static_cast<std::size_t>(k)]; break;
            case BettiMode::Complex:
                v = static_cast<unsigned long>(homology(build_complex(ComplexLabel::unbased(k, n)), true).rank(k));
                break;
            }
            g.cells[static_cast<std::size_t>(k - ks.lo)].push_back(v);
        }
    }
    return g;
}

namespace {

struct Options {
    std::string format = "table";
    bool allow_large = false;
    int k = 0;
    int n = 0;
    std::string k_range;
    std::string n_range;
    std::string mode = "formula";
    std::string space = "unbased";
    std::string path;
    std::string suite = "all";
    std::string verify_format = "json";
    bool checks = false;
};

// Metadata lines for the table and csv formats.
void write_pairs(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& pairs, Format format)
{
    const char sep = format == Format::Csv ? ',' : '\t';
    for (const auto& [key, value] : pairs) {
        std::string v = value;
        if (format == Format::Csv && v.find_first_of(",\"") != std::string::npos) {
            std::string q = "\"";
            for (char c : v) {
                if (c == '"') q += '"';
                q += c;
            }
            v = q + "\"";
        }
        out << key << sep << v << '\n';
    }
}

std::string join(const std::vector<int>& v, const char* sep)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

int cmd_betti(const Options& o, std::ostream& out)
{
    IntRange ks = o.k_range.empty() ? IntRange{o.k, o.k} : parse_range(o.k_range);
    IntRange ns = o.n_range.empty() ? IntRange{o.n, o.n} : parse_range(o.n_range);
    if (ks.lo < 1 || ns.lo < 1) throw std::invalid_argument("betti needs --k or --k-range and --n or --n-range");
    const Format format = parse_format(o.format);
    const Grid g = betti_table(ks, ns, parse_betti_mode(o.mode), o.allow_large);
    if (format == Format::Json) {
        nlohmann::ordered_json j;
        j["quantity"] = "betti";
        j["mode"] = o.mode;
        const auto grid = grid_json(g);
        for (const char* key : {"columns", "rows", "values"}) j[key] = grid.at(key);
        out << j.dump(2) << '\n';
    } else {
        write_grid(out, g, format);
    }
    return 0;
}

int cmd_homology(const Options& o, std::ostream& out, std::ostream& err)
{
    if (o.k < 1 || o.n < 1) throw std::invalid_argument("homology needs --k and --n");
    if (o.space != "based" && o.space != "unbased") throw std::invalid_argument("unknown space '" + o.space + "'");
    const Format format = parse_format(o.format);
    check_cap(o.k <= Caps::complex_k && o.n <= Caps::complex_n, o.allow_large,
              "homology with k = " + std::to_string(o.k) + ", n = " + std::to_string(o.n));
    const bool based = o.space == "based";
    const ComplexLabel label = based ? ComplexLabel::based(o.k, o.n) : ComplexLabel::unbased(o.k, o.n);
    const auto h = homology(build_complex(label), true);

    // Explicit bases: B(k,n) in dimension k and B(k-1,n) in dimension k-1.
    std::map<int, std::size_t> basis;
    auto within_basis_cap = [&](int k) { return k <= Caps::basis_k || o.allow_large; };
    if (!based && within_basis_cap(o.k)) basis[o.k] = basis_Bkn(o.k, o.n).size();
    if (o.k >= 2 && within_basis_cap(o.k - 1)) basis[o.k - 1] = basis_Bkn(o.k - 1, o.n).size();
    bool consistent = true;
    for (const auto& [d, size] : basis) consistent = consistent && size == h.rank(d);

    auto torsion_text = [](const std::vector<Integer>& t) {
        if (t.empty()) return std::string("-");
        std::string s;
        for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + t[i].get_str();
        return s;
    };
    if (format == Format::Json) {
        nlohmann::ordered_json j;
        j["space"] = o.space;
        j["k"] = o.k;
        j["n"] = o.n;
        j["reduced"] = true;
        j["torsion_free"] = h.torsion_free();
        nlohmann::ordered_json groups = nlohmann::ordered_json::array();
        for (const auto& g : h.groups) {
            nlohmann::ordered_json e;
            e["dim"] = g.dim;
            e["rank"] = std::to_string(g.rank);
            nlohmann::ordered_json t = nlohmann::ordered_json::array();
            for (const auto& v : g.torsion) t.push_back(v.get_str());
            e["torsion"] = std::move(t);
            if (basis.count(g.dim)) e["basis_size"] = std::to_string(basis.at(g.dim));
            groups.push_back(std::move(e));
        }
        j["groups"] = std::move(groups);
        out << j.dump(2) << '\n';
    } else {
        const char sep = format == Format::Csv ? ',' : '\t';
        write_pairs(out, {{"space", o.space}, {"k", std::to_string(o.k)}, {"n", std::to_string(o.n)}, {"reduced", "true"}},
                    format);
        out << "dim" << sep << "rank" << sep << "torsion" << sep << "basis\n";
        for (const auto& g : h.groups)
            out << g.dim << sep << g.rank << sep << torsion_text(g.torsion) << sep
                << (basis.count(g.dim) ? std::to_string(basis.at(g.dim)) : "-") << '\n';
    }
    if (!consistent) {
        err << "basis sizes disagree with the computed ranks\n";
        return static_cast<int>(ExitCode::VerifyFailed);
    }
    return 0;
}

int cmd_map_matrix(const Options& o, std::ostream& out)
{
    if (o.k < 1) throw std::invalid_argument("map-matrix needs --k");
    const Format format = parse_format(o.format);
    const GraphMap phi = read_map_file(o.path);
    check_cap(o.k <= Caps::basis_k && std::max(phi.n, phi.m) <= Caps::basis_n, o.allow_large,
              "map-matrix with k = " + std::to_string(o.k));
    const auto hm = homology_matrix(phi, o.k);
    const Grid g = matrix_grid(hm.matrix, hm.row_legend, hm.column_legend);
    if (format == Format::Json) {
        nlohmann::ordered_json j;
        j["k"] = o.k;
        j["source_edges"] = phi.n;
        j["target_edges"] = phi.m;
        nlohmann::ordered_json words = nlohmann::ordered_json::array();
        for (const auto& w : phi.words) words.push_back(w.str());
        j["words"] = std::move(words);
        j["matrix"] = grid_json(g);
        out << j.dump(2) << '\n';
    } else {
        write_pairs(out, {{"k", std::to_string(o.k)}, {"map", std::to_string(phi.n) + " -> " + std::to_string(phi.m)}}, format);
        write_grid(out, g, format);
    }
    return 0;
}

int cmd_braid(const Options& o, std::ostream& out, std::ostream& err)
{
    if (o.k < 1) throw std::invalid_argument("braid needs --k");
    const Format format = parse_format(o.format);
    const BraidWord beta = read_braid_file(o.path);
    check_cap(o.k <= Caps::basis_k && beta.n <= Caps::basis_n, o.allow_large, "braid with k = " + std::to_string(o.k));
    const BraidRepresentation rep(o.k, beta.n);
    const ActionReport a = braid_matrix(rep, beta);
    const auto& basis = rep.basis();
    const Grid full = matrix_grid(a.matrix, basis.generators, basis.generators);

    const bool restricted = o.k == 3 && beta.n == 3;
    Grid vw;
    std::string sigma = "-";
    if (restricted) {
        const IntMatrix m = restrict_to_vw(a.matrix, basis);
        vw.corner = "row/col";
        vw.column_labels = vw.row_labels = {"v", "w1", "w2", "w3"};
        for (std::size_t r = 0; r < 4; ++r) {
            std::vector<Integer> row;
            for (std::size_t c = 0; c < 4; ++c) row.push_back(m(r, c));
            vw.cells.push_back(std::move(row));
        }
        sigma = Integer(m(0, 1) + m(0, 2) + m(0, 3)).get_str();
    }

    bool ok = true;
    std::string failure;
    StructureReport structure;
    if (o.checks) {
        std::vector<BraidWord> samples{beta};
        for (auto& g : pure_generators(beta.n)) samples.push_back(std::move(g));
        structure = verify_structure(rep, samples);
        if (!structure.ok) {
            ok = false;
            failure = structure.failure;
        }
        if (restricted) {
            try {
                (void)b3_sigma_invariant(restrict_to_vw(a.matrix, basis));
            } catch (const std::exception& e) {
                ok = false;
                if (failure.empty()) failure = e.what();
            }
        }
    }

    std::string blocks;
    for (const auto& b : a.blocks)
        blocks += (blocks.empty() ? "" : " ") + ("F" + std::to_string(b.index) + ":[" + std::to_string(b.begin) + "," +
                                                 std::to_string(b.end) + ")");
    if (format == Format::Json) {
        nlohmann::ordered_json j;
        j["braid"] = beta.str();
        j["n"] = beta.n;
        j["k"] = o.k;
        j["permutation"] = a.permutation;
        j["pure"] = a.pure;
        nlohmann::ordered_json bl = nlohmann::ordered_json::array();
        for (const auto& b : a.blocks) bl.push_back({{"index", b.index}, {"begin", b.begin}, {"end", b.end}});
        j["blocks"] = std::move(bl);
        j["block_upper_triangular"] = a.block_upper_triangular;
        j["unipotent"] = a.unipotent;
        j["matrix"] = grid_json(full);
        if (restricted) {
            j["restricted"] = grid_json(vw);
            j["sigma"] = sigma;
        }
        if (o.checks) {
            nlohmann::ordered_json c;
            c["passed"] = ok;
            c["class_bound"] = structure.class_bound;
            c["commutator_depth"] = structure.commutator_depth;
            c["max_nontrivial_depth"] = structure.max_nontrivial_depth;
            c["commutators_checked"] = structure.commutators_checked;
            if (!ok) c["failure"] = failure;
            j["checks"] = std::move(c);
        }
        out << j.dump(2) << '\n';
    } else {
        std::vector<std::pair<std::string, std::string>> pairs{
            {"braid", beta.str().empty() ? "1" : beta.str()},
            {"n", std::to_string(beta.n)},
            {"k", std::to_string(o.k)},
            {"permutation", join(a.permutation, " ")},
            {"pure", a.pure ? "true" : "false"},
            {"blocks", blocks},
            {"block_upper_triangular", a.block_upper_triangular ? "true" : "false"},
            {"unipotent", a.unipotent ? "true" : "false"},
        };
        if (restricted) pairs.emplace_back("sigma", sigma);
        if (o.checks) {
            pairs.emplace_back("checks", ok ? "pass" : "fail: " + failure);
            pairs.emplace_back("max_nontrivial_depth", std::to_string(structure.max_nontrivial_depth));
        }
        write_pairs(out, pairs, format);
        write_grid(out, full, format);
        if (restricted) {
            out << '\n';
            write_grid(out, vw, format);
        }
    }
    if (!ok) {
        err << "check failed: " << failure << '\n';
        return static_cast<int>(ExitCode::VerifyFailed);
    }
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const VerifyReport r = run_verify(o.suite);
    const Format format = parse_format(o.verify_format);
    if (format == Format::Json) {
        out << r.json() << '\n';
    } else {
        const char sep = format == Format::Csv ? ',' : '\t';
        out << "suite" << sep << "check" << sep << "result" << sep << "cases\n";
        for (const auto& c : r.checks) {
            std::string name = c.name;
            if (format == Format::Csv && name.find(',') != std::string::npos) name = "\"" + name + "\"";
            out << c.suite << sep << name << sep << (c.passed ? "pass" : "FAIL") << sep << c.cases << '\n';
            if (!c.passed) out << "# witness: " << c.witness << '\n';
        }
    }
    return r.passed() ? 0 : static_cast<int>(ExitCode::VerifyFailed);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Homology, chain ring and braid actions for finite subset spaces of wedges of circles", "fss"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> formats{"table", "json", "csv"};

    auto* betti = app.add_subcommand("betti", "Betti numbers b_k(exp_k Gamma_n)");
    betti->add_option("--k", o.k, "single k");
    betti->add_option("--n", o.n, "single n");
    betti->add_option("--k-range", o.k_range, "k range A..B");
    betti->add_option("--n-range", o.n_range, "n range A..B");
    betti->add_option("--mode", o.mode, "formula, genfun or complex")->check(CLI::IsMember({"formula", "genfun", "complex"}));

    auto* hom = app.add_subcommand("homology", "reduced integral homology of exp_k Gamma_n");
    hom->add_option("--k", o.k)->required();
    hom->add_option("--n", o.n)->required();
    hom->add_option("--space", o.space, "based or unbased")->check(CLI::IsMember({"based", "unbased"}));

    auto* map = app.add_subcommand("map-matrix", "matrix of a graph map on H_k");
    map->add_option("mapfile", o.path, "map spec file")->required();
    map->add_option("--k", o.k)->required();

    auto* braid = app.add_subcommand("braid", "matrix of a braid on H_k(exp_k Gamma_n)");
    braid->add_option("braidfile", o.path, "braid word file")->required();
    braid->add_option("--k", o.k)->required();
    braid->add_flag("--checks", o.checks, "run the structure checks");

    auto* verify = app.add_subcommand("verify", "desk-scale property suites");
    verify->add_option("suite", o.suite, "all, complex, homology, ring, maps or braid")->check(CLI::IsMember(verify_suites()));
    verify->add_option("--format", o.verify_format, "json (default), table or csv")->check(CLI::IsMember(formats));

    for (auto* sub : {betti, hom, map, braid}) {
        sub->add_option("--format", o.format, "table, json or csv")->check(CLI::IsMember(formats));
        sub->add_flag("--allow-large", o.allow_large, "lift the resource caps");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(ExitCode::Usage);
    }

    try {
        if (betti->parsed()) return cmd_betti(o, out);
        if (hom->parsed()) return cmd_homology(o, out, err);
        if (map->parsed()) return cmd_map_matrix(o, out);
        if (braid->parsed()) return cmd_braid(o, out, err);
        if (verify->parsed()) return cmd_verify(o, out);
    } catch (const ResourceCapError& e) {
        err << "fss: " << e.what() << '\n';
        return static_cast<int>(ExitCode::Cap);
    } catch (const ParseError& e) {
        err << "fss: " << o.path << ": " << e.what() << '\n';
        return static_cast<int>(ExitCode::Usage);
    } catch (const std::invalid_argument& e) {
        err << "fss: " << e.what() << '\n';
        return static_cast<int>(ExitCode::Usage);
    } catch (const std::exception& e) {
        err << "fss: " << e.what() << '\n';
        return static_cast<int>(ExitCode::VerifyFailed);
    }
    return static_cast<int>(ExitCode::Usage);
}

}  // namespace fss
