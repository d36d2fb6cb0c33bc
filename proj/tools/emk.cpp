#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "emk/baranyai.hpp"
#include "emk/constructions.hpp"
#include "emk/core.hpp"
#include "emk/exactsolve.hpp"
#include "emk/formulas.hpp"
#include "emk/lemmalab.hpp"
#include "emk/search.hpp"

namespace {

using nlohmann::json;
using namespace emk;

constexpr int kExitOk = 0;
constexpr int kExitFailedVerification = 1;
constexpr int kExitUsage = 2;

// All numeric payload values go out as decimal strings; native JSON
// numbers cannot hold the big integers exactly.
std::string dec(long v) { return std::to_string(v); }

int read_threads_env() {
    // Parallelism cap; all solvers currently run single-threaded, but the
    // variable is validated so configured pipelines behave predictably.
    const char* raw = std::getenv("EMK_THREADS");
    if (!raw) return 1;
    try {
        int v = std::stoi(raw);
        return v >= 1 ? v : 1;
    } catch (const std::exception&) {
        return 1;
    }
}

void emit(const json& j, const std::string& out_format) {
    if (out_format == "csv") {
        // flat objects only: header line then a single value row
        std::string header, row;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!header.empty()) {
                header += ",";
                row += ",";
            }
            header += it.key();
            row += it.value().is_string() ? it.value().get<std::string>()
                                          : it.value().dump();
        }
        std::cout << header << "\n" << row << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

void emit_rows(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows,
               const std::string& out_format) {
    if (out_format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json obj;
            for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = r[i];
            arr.push_back(std::move(obj));
        }
        std::cout << arr.dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < header.size(); ++i)
        std::cout << (i ? "," : "") << header[i];
    std::cout << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
            std::cout << (i ? "," : "") << r[i];
        std::cout << "\n";
    }
}

int cmd_formulas(int m, int s, int ell, const std::string& out_format) {
    Params p(m, s, ell);
    json j;
    j["m"] = dec(m);
    j["s"] = dec(s);
    j["l"] = dec(ell);
    j["n"] = dec(p.n());
    j["a"] = dec(p.a());
    j["r"] = dec(p.r());
    for (int i = 0; i <= m; ++i)
        j["lambda_" + std::to_string(i)] = to_decimal(lambda_layer(p, i));
    j["lambda"] = to_decimal(lambda_total(p));
    j["p_size"] = to_decimal(p_size(p));
    if (m == 3) {
        j["a3_size"] = to_decimal(a3_size(s, ell));
        j["pprime_size"] = to_decimal(pprime_size(s, ell));
        j["lambda_minus_a3"] = lambda_minus_a3(s, ell).get_str();
        if (s >= 2) {
            QuadraticSurd t = t_threshold(s);
            j["t_floor"] = t.floor_value().get_str();
            j["t_integral"] = t.is_integer();
        }
    }
    emit(j, out_format);
    return kExitOk;
}

int cmd_construct_p(int m, int s, int ell) {
    write_family(std::cout, p_build(p_spec(Params(m, s, ell))));
    return kExitOk;
}

int cmd_construct_pprime(int s, int ell) {
    write_family(std::cout, pprime_build(pprime_spec(s, ell)));
    return kExitOk;
}

int cmd_construct_lift(int m, const std::string& file) {
    SetFamily g = load_family(file);
    write_family(std::cout, lift(g, m, g.n));
    return kExitOk;
}

int cmd_verify_blocker(int q, int t, int d, const std::string& out_format) {
    Count exact = min_blocker(BlockerInstance(q, t, d));
    Count bound = blocker_bound(q, t, d);
    json j;
    j["claim"] = "blocker";
    j["q"] = dec(q);
    j["t"] = dec(t);
    j["d"] = dec(d);
    j["min_blocker"] = to_decimal(exact);
    j["bound"] = to_decimal(bound);
    const bool holds = exact >= bound;
    j["holds"] = holds;
    emit(j, out_format);
    return holds ? kExitOk : kExitFailedVerification;
}

SetFamily default_or_file(const std::string& file, const Params& p) {
    if (!file.empty()) return load_family(file);
    return p_build(p_spec(p));
}

int cmd_verify_counting(int m, int s, int ell, const std::string& file,
                        const std::string& out_format) {
    Params p(m, s, ell);
    SetFamily f = default_or_file(file, p);
    Mask a_set = full_mask(p.a());
    CountingReport rep = verify_counting_claim(a_set, f, p);
    json j;
    j["claim"] = "counting-from-missing";
    j["instance"] = file.empty() ? "P(m,s,l)" : file;
    j["lhs"] = to_decimal(rep.lhs);
    j["rhs"] = rep.rhs.get_str();
    j["holds"] = rep.holds;
    j["equality"] = rep.equality;
    if (rep.equality) j["rigidity"] = rep.rigidity_ok;
    emit(j, out_format);
    return rep.holds ? kExitOk : kExitFailedVerification;
}

// Greedy disjoint low sets by decreasing deficit until the total reaches l.
Matching pick_deficit_witness(const SetFamily& f, const Params& p) {
    std::vector<Mask> low;
    for (Mask e : f.members)
        if (popcount(e) <= p.m) low.push_back(e);
    std::sort(low.begin(), low.end(), [&](Mask x, Mask y) {
        int dx = deficit(x, p.m), dy = deficit(y, p.m);
        return dx != dy ? dx > dy : x < y;
    });
    Matching q;
    Mask used = 0;
    long total = 0;
    for (Mask e : low) {
        if (e & used) continue;
        q.members.push_back(e);
        used |= e;
        total += deficit(e, p.m);
        if (total >= p.ell) break;
    }
    if (total < p.ell)
        throw std::domain_error(
            "instance has no disjoint low subfamily of deficit >= l");
    std::vector<Mask> minimal = minimal_deficit_subfamily(q.members, p.ell, p.m);
    return Matching{minimal};
}

int cmd_verify_deficit(int m, int s, int ell, const std::string& file,
                       const std::string& out_format) {
    Params p(m, s, ell);
    SetFamily f;
    std::string instance;
    if (!file.empty()) {
        f = load_family(file);
        instance = file;
    } else {
        // star demo instance: everything through vertex 1 has nu = 1
        if (ell > m)
            throw std::domain_error(
                "default deficit instance needs l <= m; pass --file");
        f.n = p.n();
        const Mask total = full_mask(f.n);
        for (Mask a = 1;; ++a) {
            if (a & 1) f.members.push_back(a);
            if (a == total) break;
        }
        instance = "star";
    }
    Matching q = pick_deficit_witness(f, p);
    DeficitCompletionReport rep = deficit_completion_check(f, q, p);
    json j;
    j["claim"] = "deficit-completion";
    j["instance"] = instance;
    json qw = json::array();
    for (Mask e : q.members) qw.push_back(mask_to_hex(e));
    j["witnesses"] = qw;
    j["q"] = dec(rep.q);
    j["delta"] = dec(rep.delta);
    j["t"] = dec(rep.t);
    j["d"] = dec(rep.d);
    j["w_size"] = dec(popcount(rep.w));
    j["nu_outer"] = dec(rep.nu_outer);
    j["nu_inner"] = dec(rep.nu_inner);
    j["bound"] = to_decimal(rep.bound);
    const bool holds = !rep.outer_ok || rep.inner_ok;
    j["holds"] = holds;
    emit(j, out_format);
    return holds ? kExitOk : kExitFailedVerification;
}

int cmd_verify_lowlayer(int m, int s, int ell, const std::string& file,
                        const std::string& out_format) {
    Params p(m, s, ell);
    SetFamily f = default_or_file(file, p);
    LowLayerReport rep = verify_low_layer_comparison(f, p);
    json j;
    j["claim"] = "low-layer-comparison";
    j["instance"] = file.empty() ? "P(m,s,l)" : file;
    j["lhs"] = to_decimal(rep.low_size);
    j["rhs"] = to_decimal(rep.hyp_rhs);
    j["hypothesis"] = rep.hypothesis;
    j["family_size"] = to_decimal(rep.f_size);
    j["target"] = to_decimal(rep.target);
    j["conclusion"] = rep.conclusion;
    j["holds"] = rep.holds();
    emit(j, out_format);
    return rep.holds() ? kExitOk : kExitFailedVerification;
}

int cmd_verify_coeff(int m, const std::string& out_format) {
    const bool holds = coefficient_gap(m);
    json j;
    j["claim"] = "coefficient-comparison";
    j["m"] = dec(m);
    j["holds"] = holds;
    emit(j, out_format);
    return holds ? kExitOk : kExitFailedVerification;
}

int cmd_verify_appendix(const std::string& name, long s, long second,
                        const std::string& out_format) {
    IdentityPair pair = appendix_identity(appendix_identity_from_name(name), s,
                                          second);
    json j;
    j["claim"] = name;
    j["s"] = dec(s);
    j["second"] = dec(second);
    j["lhs"] = pair.lhs.get_str();
    j["rhs"] = pair.rhs.get_str();
    j["holds"] = pair.holds();
    emit(j, out_format);
    return pair.holds() ? kExitOk : kExitFailedVerification;
}

int cmd_verify_decomposition(const std::string& file,
                             const std::string& out_format) {
    std::ifstream is(file);
    if (!is) throw std::runtime_error("cannot open " + file);
    std::stringstream buf;
    buf << is.rdbuf();
    Decomposition d = decomposition_from_json(buf.str());
    DecompositionCheck check = verify_decomposition(d);
    json j;
    j["claim"] = "baranyai-decomposition";
    j["instance"] = file;
    j["holds"] = check.ok;
    if (!check.ok) j["diagnostic"] = check.diagnostic;
    emit(j, out_format);
    return check.ok ? kExitOk : kExitFailedVerification;
}

int cmd_baranyai(int q, int t, const std::string& file) {
    Decomposition d = decompose(q, t);
    DecompositionCheck check = verify_decomposition(d);
    if (!check.ok) {
        std::cerr << "internal verification failed: " << check.diagnostic << "\n";
        return kExitFailedVerification;
    }
    const std::string text = decomposition_to_json(d);
    if (!file.empty()) {
        std::ofstream os(file);
        if (!os) throw std::runtime_error("cannot open " + file);
        os << text << "\n";
    }
    std::cout << text << "\n";
    return kExitOk;
}

int cmd_search(int n, int s, const std::string& file,
               const std::string& out_format) {
    SearchResult res = e_exact(n, s);
    json j;
    j["n"] = dec(n);
    j["s"] = dec(s);
    j["value"] = to_decimal(res.value);
    j["nodes"] = dec(res.nodes);
    json w = json::array();
    if (!res.witnesses.empty())
        for (Mask e : res.witnesses.front().members) w.push_back(mask_to_hex(e));
    j["witness"] = w;
    emit(j, out_format);
    if (!file.empty()) {
        // the persisted record carries the wall time; stdout stays
        // byte-reproducible
        std::vector<std::string> names;
        for (std::size_t i = 0; i < res.witnesses.size(); ++i) {
            std::string name = file + ".w" + std::to_string(i) + ".fam";
            save_family(name, res.witnesses[i]);
            names.push_back(name);
        }
        std::ofstream os(file);
        if (!os) throw std::runtime_error("cannot open " + file);
        os << search_result_to_json(res, names) << "\n";
    }
    return kExitOk;
}

int cmd_table(const std::string& kind, int s, int limit,
              const std::string& out_format) {
    if (kind == "lambda-vs-a3") {
        std::vector<std::vector<std::string>> rows;
        for (int ell = 1; ell <= s; ++ell)
            rows.push_back({dec(s), dec(ell), lambda_minus_a3(s, ell).get_str()});
        emit_rows({"s", "l", "lambda_minus_a3"}, rows, out_format);
        return kExitOk;
    }
    if (kind == "appendix") {
        std::vector<std::vector<std::string>> rows;
        for (const char* name :
             {"good-emc", "h3-gap", "case2-h3-1", "case2-h3-2", "case2-clique-1",
              "case2-clique-2"}) {
            AppendixIdentity which = appendix_identity_from_name(name);
            for (long second = 4; second <= s; ++second) {
                IdentityPair pair = appendix_identity(which, s, second);
                rows.push_back({name, dec(s), dec(second), pair.lhs.get_str(),
                                pair.rhs.get_str(),
                                pair.holds() ? "true" : "false"});
            }
        }
        emit_rows({"identity", "s", "second", "lhs", "rhs", "holds"}, rows,
                  out_format);
        return kExitOk;
    }
    if (kind == "dh-nh") {
        std::vector<std::vector<std::string>> rows;
        for (long a = 1; a <= limit; ++a) {
            const long r = 2 * a + 7;
            std::vector<std::string> row = {dec(a), dec(r)};
            for (int h = 1; h <= 4; ++h) {
                SignedCount gap = SignedCount(d_h(r, 3, h)) - n_h_closed(a, r, h);
                row.push_back(gap.get_str());
            }
            rows.push_back(std::move(row));
        }
        emit_rows({"a", "r", "d1_minus_n1", "d2_minus_n2", "d3_minus_n3",
                   "d4_minus_n4"},
                  rows, out_format);
        return kExitOk;
    }
    if (kind == "thresholds") {
        std::vector<std::vector<std::string>> rows;
        for (int sv = 2; sv <= s; ++sv) {
            QuadraticSurd t = t_threshold(sv);
            rows.push_back({dec(sv), t.floor_value().get_str(),
                            t.is_integer() ? "true" : "false"});
        }
        emit_rows({"s", "t_floor", "t_integral"}, rows, out_format);
        return kExitOk;
    }
    std::cerr << "unknown table kind: " << kind << "\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    (void)read_threads_env();

    CLI::App app{"exact toolkit for extremal set-family computations"};
    app.require_subcommand(1);

    int m = 3, s = 2, ell = 1, q = 2, t = 2, d = 0, n = 3, limit = 20;
    std::string out_format = "json", file, kind, name = "good-emc";
    long second = 4;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* formulas = app.add_subcommand("formulas", "closed-form sizes");
    formulas->add_option("--m", m)->required();
    formulas->add_option("--s", s)->required();
    formulas->add_option("--l", ell)->required();
    add_common(formulas);

    CLI::App* construct = app.add_subcommand("construct", "build families");
    construct->require_subcommand(1);
    CLI::App* cons_p = construct->add_subcommand("p", "canonical family P");
    cons_p->add_option("--m", m)->required();
    cons_p->add_option("--s", s)->required();
    cons_p->add_option("--l", ell)->required();
    CLI::App* cons_pp = construct->add_subcommand("pprime", "clique family P'");
    cons_pp->add_option("--s", s)->required();
    cons_pp->add_option("--l", ell)->required();
    CLI::App* cons_lift = construct->add_subcommand("lift", "lift m-uniform G");
    cons_lift->add_option("--m", m)->required();
    cons_lift->add_option("--file", file, "input family file")->required();

    CLI::App* verify = app.add_subcommand("verify", "instance verifiers");
    verify->require_subcommand(1);
    CLI::App* v_blocker = verify->add_subcommand("blocker", "blocker lemma");
    v_blocker->add_option("--q", q)->required();
    v_blocker->add_option("--t", t)->required();
    v_blocker->add_option("--d", d)->required();
    add_common(v_blocker);
    CLI::App* v_counting = verify->add_subcommand("counting", "counting claim");
    v_counting->add_option("--m", m)->required();
    v_counting->add_option("--s", s)->required();
    v_counting->add_option("--l", ell)->required();
    v_counting->add_option("--file", file, "family file (default P)");
    add_common(v_counting);
    CLI::App* v_deficit = verify->add_subcommand("deficit", "deficit completion");
    v_deficit->add_option("--m", m)->required();
    v_deficit->add_option("--s", s)->required();
    v_deficit->add_option("--l", ell)->required();
    v_deficit->add_option("--file", file, "family file (default star)");
    add_common(v_deficit);
    CLI::App* v_lowlayer = verify->add_subcommand("lowlayer", "low-layer lemma");
    v_lowlayer->add_option("--m", m)->required();
    v_lowlayer->add_option("--s", s)->required();
    v_lowlayer->add_option("--l", ell)->required();
    v_lowlayer->add_option("--file", file, "family file (default P)");
    add_common(v_lowlayer);
    CLI::App* v_coeff = verify->add_subcommand("coeff", "coefficient gap");
    v_coeff->add_option("--m", m)->required();
    add_common(v_coeff);
    CLI::App* v_appendix = verify->add_subcommand("appendix", "appendix identity");
    v_appendix->add_option("--name", name, "identity selector");
    v_appendix->add_option("--s", s)->required();
    v_appendix->add_option("--second", second, "p or l, by identity")->required();
    add_common(v_appendix);
    CLI::App* v_decomp =
        verify->add_subcommand("decomposition", "stored decomposition");
    v_decomp->add_option("--file", file)->required();
    add_common(v_decomp);

    CLI::App* baranyai = app.add_subcommand("baranyai", "decompose K_qt^(q)");
    baranyai->add_option("--q", q)->required();
    baranyai->add_option("--t", t)->required();
    baranyai->add_option("--file", file, "also write JSON here");

    CLI::App* search = app.add_subcommand("search", "exact e(n,s)");
    search->add_option("--n", n)->required();
    search->add_option("--s", s)->required();
    search->add_option("--file", file, "persist full record here");
    add_common(search);

    CLI::App* table = app.add_subcommand("table", "bulk tables");
    table->add_option("--kind", kind)->required();
    table->add_option("--s", s);
    table->add_option("--n", limit, "row limit for dh-nh");
    add_common(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (formulas->parsed()) return cmd_formulas(m, s, ell, out_format);
        if (cons_p->parsed()) return cmd_construct_p(m, s, ell);
        if (cons_pp->parsed()) return cmd_construct_pprime(s, ell);
        if (cons_lift->parsed()) return cmd_construct_lift(m, file);
        if (v_blocker->parsed()) return cmd_verify_blocker(q, t, d, out_format);
        if (v_counting->parsed())
            return cmd_verify_counting(m, s, ell, file, out_format);
        if (v_deficit->parsed())
            return cmd_verify_deficit(m, s, ell, file, out_format);
        if (v_lowlayer->parsed())
            return cmd_verify_lowlayer(m, s, ell, file, out_format);
        if (v_coeff->parsed()) return cmd_verify_coeff(m, out_format);
        if (v_appendix->parsed())
            return cmd_verify_appendix(name, s, second, out_format);
        if (v_decomp->parsed()) return cmd_verify_decomposition(file, out_format);
        if (baranyai->parsed()) return cmd_baranyai(q, t, file);
        if (search->parsed()) return cmd_search(n, s, file, out_format);
        if (table->parsed())
            return cmd_table(kind, s, limit,
                             table->count("--out") ? out_format : "csv");
        std::cerr << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
