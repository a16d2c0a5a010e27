// Command-line surface: characters by any route, verification suites,
// single-instance deep checks, and ideal dumps. Stdout is deterministic for
// a fixed invocation; wall time and per-suite elapsed go to stderr.

#include <qfusion/dualmodel.hpp>
#include <qfusion/funcmodel.hpp>
#include <qfusion/fusion.hpp>
#include <qfusion/ideals.hpp>
#include <qfusion/qchar.hpp>
#include <qfusion/rat.hpp>
#include <qfusion/sweeps.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace qfusion;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

long long sum_parts(const std::vector<int>& A) {
    long long s = 0;
    for (int a : A) s += a;
    return s;
}

std::vector<int> parse_parts(const std::string& s) {
    std::vector<int> A;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (...) {
            throw std::invalid_argument("bad part list '" + s + "'");
        }
        if (pos != tok.size() || v < 1)
            throw std::invalid_argument("bad part list '" + s + "'");
        A.push_back(v);
    }
    if (A.empty()) throw std::invalid_argument("empty part list");
    return A;
}

// Either "preset:NAME" resolved to n points, or a comma list of rationals.
std::vector<Rat> parse_points(const std::string& s, int n) {
    const std::string tag = "preset:";
    if (s.rfind(tag, 0) == 0) return point_preset(s.substr(tag.size()), n);
    std::vector<Rat> Z;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) Z.push_back(parse_rat(tok));
    if ((int)Z.size() != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " points, got " +
                                    std::to_string(Z.size()));
    return Z;
}

json points_json(const std::vector<Rat>& Z) {
    json a = json::array();
    for (const Rat& z : Z) a.push_back(rat_str(z));
    return a;
}

json entries_json(const CharTable& t) {
    json a = json::array();
    for (const auto& [ks, v] : t.e) a.push_back(json::array({ks.first, ks.second, v}));
    return a;
}

void emit_table(const std::string& route, const json& params, const CharTable& t,
                const std::string& format) {
    if (format == "tsv") {
        std::cout << t.to_tsv();
        return;
    }
    json out;
    out["route"] = route;
    out["params"] = params;
    out["entries"] = entries_json(t);
    out["total"] = t.total();
    std::cout << out.dump() << "\n";
}

void emit_zdims(const std::string& route, const json& params,
                const std::vector<long long>& zd, const std::string& format) {
    if (format == "tsv") {
        std::ostringstream os;
        os << "k\tdim\n";
        for (std::size_t k = 0; k < zd.size(); ++k) os << k << "\t" << zd[k] << "\n";
        std::cout << os.str();
        return;
    }
    long long total = 0;
    for (long long d : zd) total += d;
    json out;
    out["route"] = route;
    out["params"] = params;
    out["zdims"] = zd;
    out["total"] = total;
    std::cout << out.dump() << "\n";
}

struct CharArgs {
    std::string route;
    std::string A_str, Z_str = "preset:integers", T_str;
    std::string family = "limit";
    std::string format = "json";
    int k = 2;
    int cap = -1;
    long long kmax = -1, smax = -1, zmax = 6;
};

int cmd_char(const CharArgs& a) {
    json params;
    if (a.route == "recurrence" || a.route == "closed" || a.route == "dual") {
        const std::vector<int> A = parse_parts(a.A_str);
        const long long kdef = sum_parts(A) - (long long)A.size();
        const long long kmax = a.kmax >= 0 ? a.kmax : kdef;
        params["A"] = A;
        CharTable t;
        if (a.route == "recurrence")
            t = char_recurrence(A);
        else if (a.route == "closed")
            t = char_closed_form(profile(A));
        else {
            params["kmax"] = kmax;
            t = dual_char(A, kmax);
        }
        emit_table(a.route, params, t, a.format);
        return kExitPass;
    }
    if (a.route == "gordon") {
        params["k"] = a.k;
        params["zmax"] = a.zmax;
        params["smax"] = a.smax < 0 ? 4 : a.smax;
        emit_table(a.route, params, gordon_truncated(a.k, a.zmax, a.smax < 0 ? 4 : a.smax),
                   a.format);
        return kExitPass;
    }
    if (a.route == "quotient") {
        if (a.family == "window") {
            const long long qcap = a.smax < 0 ? 6 : a.smax;
            if (a.kmax < 0)
                throw std::invalid_argument("family window needs an explicit --kmax");
            params["family"] = a.family;
            params["k"] = a.k;
            params["smax"] = qcap;
            params["kmax"] = a.kmax;
            const IdealSpec spec = gens_Jk_window(a.k, (int)qcap + 1, qcap);
            emit_table(a.route, params, quotient_char(spec, a.kmax, qcap), a.format);
            return kExitPass;
        }
        const std::vector<int> A = parse_parts(a.A_str);
        const int n = (int)A.size();
        const long long kdef = sum_parts(A) - n;
        const long long kmax = a.kmax >= 0 ? a.kmax : kdef;
        params["family"] = a.family;
        params["A"] = A;
        params["kmax"] = kmax;
        if (a.family == "limit" || a.family == "I0") {
            if (a.smax >= 0) params["smax"] = a.smax;
            const IdealSpec spec = a.family == "limit" ? gens_JA_limit(A) : build_I0(A);
            emit_table(a.route, params, quotient_char(spec, kmax, a.smax), a.format);
            return kExitPass;
        }
        IdealSpec spec;
        if (a.family == "JAT") {
            const auto T = parse_points(a.T_str.empty() ? a.Z_str : a.T_str, n);
            params["T"] = points_json(T);
            spec = gens_JA_T(A, T);
        } else if (a.family == "IZ") {
            const auto Z = parse_points(a.Z_str, n);
            params["Z"] = points_json(Z);
            spec = gens_IZ(A, Z);
        } else if (a.family == "atpoint") {
            const auto Z = parse_points(a.Z_str, n);
            params["Z"] = points_json(Z);
            spec = ideal_at_point(A, Z);
        } else {
            throw std::invalid_argument("unknown family '" + a.family + "'");
        }
        emit_zdims(a.route, params, quotient_zdims(spec, kmax), a.format);
        return kExitPass;
    }
    if (a.route == "fusion") {
        const std::vector<int> A = parse_parts(a.A_str);
        const auto Z = parse_points(a.Z_str, (int)A.size());
        params["A"] = A;
        params["Z"] = points_json(Z);
        emit_table(a.route, params, fusion_character(A, Z), a.format);
        return kExitPass;
    }
    if (a.route == "funcmodel") {
        const std::vector<int> A = parse_parts(a.A_str);
        const int n = (int)A.size();
        const std::vector<Rat> T = a.T_str.empty()
                                       ? std::vector<Rat>((std::size_t)n, Rat(0))
                                       : parse_points(a.T_str, n);
        const int guard = (int)(sum_parts(A) * (n - 1)) + n;
        const int D = a.cap >= 0 ? a.cap : guard;
        const MtReport rep = mt_character(A, T, D);
        params["A"] = A;
        params["T"] = points_json(T);
        params["cap"] = D;
        params["certified"] = rep.certified;
        if (!rep.certified)
            throw std::logic_error("graded quotient not certified: " + rep.detail);
        if (a.format == "tsv") {
            std::cout << rep.table.to_tsv();
        } else {
            // The bigraded table exists only at the origin; away from it the
            // report carries the certified total alone.
            json out;
            out["route"] = a.route;
            out["params"] = params;
            out["entries"] = entries_json(rep.table);
            out["total"] = rep.total;
            std::cout << out.dump() << "\n";
        }
        return kExitPass;
    }
    throw std::invalid_argument("unknown route '" + a.route + "'");
}

struct SuiteRun {
    std::string name;
    SweepResult res;
    long long elapsed_ms = 0;
};

SuiteRun run_suite(const std::string& name, int max_sum, int k, long long smax,
                   long long zmax) {
    const auto t0 = std::chrono::steady_clock::now();
    SweepResult r;
    auto merge = [&r](const SweepResult& s) {
        r.instances += s.instances;
        if (s.max_component > r.max_component) r.max_component = s.max_component;
        if (r.ok && !s.ok) {
            r.ok = false;
            r.detail = s.detail;
        }
    };
    if (name == "thm21") {
        merge(sweep_mass(max_sum < 0 ? 7 : max_sum));
        if (r.ok) merge(sweep_points(max_sum < 0 ? 7 : max_sum));
    } else if (name == "thm31") {
        merge(sweep_filtration(max_sum < 0 ? 7 : max_sum));
    } else if (name == "thm41") {
        merge(sweep_funcmodel_core());
        if (r.ok) merge(sweep_funcmodel_totals(max_sum < 0 ? 7 : max_sum));
    } else if (name == "prop23") {
        merge(sweep_window(3, 4, smax < 0 ? 6 : smax));
    } else if (name == "prop24") {
        merge(sweep_mirror(max_sum < 0 ? 8 : max_sum));
    } else if (name == "gordon") {
        merge(sweep_gordon(k, smax < 0 ? 4 : smax, zmax));
    } else if (name == "dual") {
        merge(sweep_three_routes(max_sum < 0 ? 7 : max_sum));
    } else if (name == "rho") {
        merge(sweep_rho(max_sum < 0 ? 6 : max_sum));
    } else if (name == "qlaws") {
        merge(sweep_qlaws(max_sum < 0 ? 12 : max_sum));
    } else {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    const auto t1 = std::chrono::steady_clock::now();
    return SuiteRun{
        name, r,
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()};
}

int cmd_verify(const std::string& suite, int max_sum, int k, long long smax,
               long long zmax, const std::string& format) {
    std::vector<SuiteRun> runs;
    if (suite == "all") {
        for (const char* s :
             {"thm21", "thm31", "thm41", "prop23", "prop24", "gordon", "dual", "rho",
              "qlaws"})
            runs.push_back(run_suite(s, max_sum, k, smax, zmax));
    } else {
        runs.push_back(run_suite(suite, max_sum, k, smax, zmax));
    }

    bool all_ok = true, internal = false;
    if (format == "json") {
        json arr = json::array();
        for (const auto& run : runs) {
            json o;
            o["suite"] = run.name;
            o["status"] = run.res.ok ? "pass" : "fail";
            o["instances"] = run.res.instances;
            o["max_component"] = run.res.max_component;
            if (!run.res.ok) o["detail"] = run.res.detail;
            arr.push_back(o);
        }
        std::cout << (runs.size() == 1 ? arr[0] : arr).dump() << "\n";
    } else {
        for (const auto& run : runs) {
            std::cout << "suite=" << run.name << " status=" << (run.res.ok ? "pass" : "fail")
                      << " instances=" << run.res.instances
                      << " max_component=" << run.res.max_component << "\n";
            if (!run.res.ok) std::cout << "detail=" << run.res.detail << "\n";
        }
    }
    for (const auto& run : runs) {
        std::cerr << "suite=" << run.name << " elapsed_ms=" << run.elapsed_ms << "\n";
        if (!run.res.ok) {
            all_ok = false;
            if (run.res.detail.rfind("error: ", 0) == 0) internal = true;
        }
    }
    return all_ok ? kExitPass : (internal ? kExitInternal : kExitFalsified);
}

int cmd_fusion(const std::string& A_str, const std::string& Z_str,
               const std::string& format) {
    const std::vector<int> A = parse_parts(A_str);
    const auto Z = parse_points(Z_str, (int)A.size());
    const FiltrationReport rep = verify_filtration(A, Z);
    json params;
    params["A"] = A;
    params["Z"] = points_json(Z);
    params["char_match"] = rep.char_match;
    params["annihilator_match"] = rep.annihilator_match;
    if (format == "tsv") {
        std::cout << rep.table.to_tsv();
        if (!rep.ok) std::cerr << "mismatch: " << rep.detail << "\n";
    } else {
        json out;
        out["route"] = "filtration";
        out["params"] = params;
        out["entries"] = entries_json(rep.table);
        out["total"] = rep.table.total();
        if (!rep.ok) out["detail"] = rep.detail;
        std::cout << out.dump() << "\n";
    }
    return rep.ok ? kExitPass : kExitFalsified;
}

int cmd_funcmodel(const std::string& A_str, const std::string& T_str, int cap,
                  const std::string& format) {
    const std::vector<int> A = parse_parts(A_str);
    const int n = (int)A.size();
    const std::vector<Rat> T = T_str.empty() ? std::vector<Rat>((std::size_t)n, Rat(0))
                                             : parse_points(T_str, n);
    const int guard = (int)(sum_parts(A) * (n - 1)) + n;
    const int D = cap >= 0 ? cap : guard;
    const MtReport rep = mt_character(A, T, D);
    if (format == "tsv") {
        std::cout << rep.table.to_tsv();
        std::cerr << "expected=" << rep.expected << " lower=" << rep.lower
                  << " upper=" << rep.upper << " certified=" << rep.certified << "\n";
    } else {
        json out;
        out["route"] = "funcmodel";
        json params;
        params["A"] = A;
        params["T"] = points_json(T);
        params["cap"] = D;
        params["expected"] = rep.expected;
        params["upper"] = rep.upper;
        params["lower"] = rep.lower;
        params["stabilized"] = rep.stabilized;
        params["certified"] = rep.certified;
        out["params"] = params;
        out["entries"] = entries_json(rep.table);
        out["total"] = rep.total;
        if (!rep.detail.empty()) out["detail"] = rep.detail;
        std::cout << out.dump() << "\n";
    }
    return rep.certified && rep.total == rep.expected ? kExitPass : kExitFalsified;
}

struct IdealArgs {
    std::string family;
    std::string A_str, Z_str = "preset:integers", T_str;
    int k = 2;
    long long smax = 6;
    bool apply_opp = false;
    std::string shift_str, flow_str;
    std::string format = "text";
};

int cmd_ideal(const IdealArgs& a) {
    IdealSpec spec;
    json params;
    params["family"] = a.family;
    if (a.family == "window") {
        spec = gens_Jk_window(a.k, (int)a.smax + 1, a.smax);
        params["k"] = a.k;
        params["smax"] = a.smax;
    } else {
        const std::vector<int> A = parse_parts(a.A_str);
        const int n = (int)A.size();
        params["A"] = A;
        if (a.family == "limit")
            spec = gens_JA_limit(A);
        else if (a.family == "I0")
            spec = build_I0(A);
        else if (a.family == "JAT") {
            const auto T = parse_points(a.T_str.empty() ? a.Z_str : a.T_str, n);
            params["T"] = points_json(T);
            spec = gens_JA_T(A, T);
        } else if (a.family == "IZ") {
            const auto Z = parse_points(a.Z_str, n);
            params["Z"] = points_json(Z);
            spec = gens_IZ(A, Z);
        } else if (a.family == "atpoint") {
            const auto Z = parse_points(a.Z_str, n);
            params["Z"] = points_json(Z);
            spec = ideal_at_point(A, Z);
        } else
            throw std::invalid_argument("unknown family '" + a.family + "'");
    }
    if (a.apply_opp) {
        spec = opp(spec);
        params["opp"] = true;
    }
    if (!a.shift_str.empty()) {
        spec = shift_ideal(spec, parse_rat(a.shift_str));
        params["shift"] = a.shift_str;
    }
    if (!a.flow_str.empty()) {
        spec = st_flow(spec, parse_rat(a.flow_str));
        params["flow"] = a.flow_str;
    }
    const auto lines = ideal_dump(spec);
    if (a.format == "json") {
        json out;
        out["route"] = "ideal";
        out["params"] = params;
        out["generators"] = lines;
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& l : lines) std::cout << l << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    const auto t0 = std::chrono::steady_clock::now();
    CLI::App app{"Exact bigraded characters of fusion products and their ideal models"};
    app.require_subcommand(1);

    CharArgs ca;
    CLI::App* ch = app.add_subcommand("char", "compute one character table");
    ch->add_option("--route", ca.route,
                   "recurrence|closed|gordon|quotient|dual|fusion|funcmodel")
        ->required();
    ch->add_option("--A", ca.A_str, "comma list of parts, e.g. 2,2,3");
    ch->add_option("--Z", ca.Z_str, "points: comma list of rationals or preset:NAME");
    ch->add_option("--T", ca.T_str, "points for current ideals / functional model");
    ch->add_option("--family", ca.family, "limit|I0|JAT|IZ|atpoint|window");
    ch->add_option("--k", ca.k, "level for gordon/window");
    ch->add_option("--cap", ca.cap, "degree cap for the functional model");
    ch->add_option("--kmax", ca.kmax, "z-degree cap");
    ch->add_option("--smax", ca.smax, "q-degree cap");
    ch->add_option("--zmax", ca.zmax, "z-degree cap for gordon");
    ch->add_option("--format", ca.format, "json|tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    std::string suite, vformat = "text";
    int max_sum = -1, vk = 2;
    long long vsmax = -1, vzmax = 6;
    CLI::App* vf = app.add_subcommand("verify", "run a cross-validation suite");
    vf->add_option("--suite", suite,
                   "all|thm21|thm31|thm41|prop23|prop24|gordon|dual|rho|qlaws")
        ->required();
    vf->add_option("--max-sum", max_sum, "bound on sum of parts");
    vf->add_option("--k", vk, "level for the gordon suite");
    vf->add_option("--smax", vsmax, "q-degree window");
    vf->add_option("--zmax", vzmax, "z-degree window for the gordon suite");
    vf->add_option("--format", vformat, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string fA, fZ = "preset:integers", fformat = "json";
    CLI::App* fu = app.add_subcommand("fusion", "single-instance filtration check");
    fu->add_option("--A", fA)->required();
    fu->add_option("--Z", fZ);
    fu->add_option("--format", fformat)->check(CLI::IsMember({"json", "tsv"}));

    std::string mA, mT, mformat = "json";
    int mcap = -1;
    CLI::App* fm = app.add_subcommand("funcmodel", "single-instance graded quotient");
    fm->add_option("--A", mA)->required();
    fm->add_option("--T", mT, "points; defaults to the origin");
    fm->add_option("--cap", mcap, "degree cap (defaults to the stabilization guard)");
    fm->add_option("--format", mformat)->check(CLI::IsMember({"json", "tsv"}));

    IdealArgs ia;
    CLI::App* id = app.add_subcommand("ideal", "dump generators of an ideal family");
    id->add_option("--family", ia.family, "limit|I0|JAT|IZ|atpoint|window")->required();
    id->add_option("--A", ia.A_str);
    id->add_option("--Z", ia.Z_str);
    id->add_option("--T", ia.T_str);
    id->add_option("--k", ia.k, "level for the window family");
    id->add_option("--smax", ia.smax, "q-degree window");
    id->add_flag("--opp", ia.apply_opp, "apply the variable reversal");
    id->add_option("--shift", ia.shift_str, "transport along the shift by c");
    id->add_option("--flow", ia.flow_str, "apply the loop scaling by t");
    id->add_option("--format", ia.format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    int rc = kExitInternal;
    try {
        if (ch->parsed())
            rc = cmd_char(ca);
        else if (vf->parsed())
            rc = cmd_verify(suite, max_sum, vk, vsmax, vzmax, vformat);
        else if (fu->parsed())
            rc = cmd_fusion(fA, fZ, fformat);
        else if (fm->parsed())
            rc = cmd_funcmodel(mA, mT, mcap, mformat);
        else if (id->parsed())
            rc = cmd_ideal(ia);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        rc = kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        rc = kExitInternal;
    }
    const auto t1 = std::chrono::steady_clock::now();
    std::cerr << "wall_ms="
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << "\n";
    return rc;
}
