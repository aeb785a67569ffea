#include "cli_app.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rca/groups/reflection_group.hpp"
#include "rca/typea/hooks.hpp"
#include "rca/typea/intertwiner.hpp"
#include "rca/typea/tableaux.hpp"
#include "rca/unitarity/unitarity.hpp"
#include "rca/verma/verma.hpp"

namespace rca::cli {

namespace {

constexpr int kSchemaVersion = 1;
constexpr const char* kToolVersion = "0.3.0";

const std::vector<std::pair<std::string, std::string>> kCommands{
    {"certify", "certify unitarity up to --max-degree at given points"},
    {"sweep", "certify over a grid of parameters"},
    {"classify", "closed-form unitarity locus, or predicted membership of points"},
    {"tableaux", "periodic tableaux and their weight conditions"},
    {"singular", "singular vectors of M_c(tau) in one degree"},
    {"intertwine", "intertwiner identities for M_kappa(triv) over S_n"},
    {"compare", "grid points where a sweep contradicts the closed-form locus"}};

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

std::vector<Rational> parse_point(const std::string& s) {
    std::vector<Rational> p;
    for (const auto& t : split(s, ',')) p.push_back(parse_rational(t));
    if (p.empty()) throw ConfigParse("empty parameter point");
    return p;
}

std::string point_str(const std::vector<Rational>& p, char sep = ';') {
    std::vector<std::string> s;
    for (const auto& x : p) s.push_back(to_string(x));
    return join(s, std::string(1, sep));
}

json point_json(const std::vector<Rational>& p) {
    json j = json::array();
    for (const auto& x : p) j.push_back(to_string(x));
    return j;
}

size_t arity_of(const ReflectionGroup& g) {
    return g.kind() == GroupKind::Cyclic ? static_cast<size_t>(g.param() - 1) : static_cast<size_t>(g.num_classes());
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigParse(what);
}

// grid points, or explicit --c points, checked against the group's arity
std::vector<std::vector<Rational>> parameter_points(const JobConfig& cfg, const ReflectionGroup& g,
                                                    bool strict = true) {
    size_t ar = arity_of(g);
    std::vector<std::vector<Rational>> pts = cfg.points;
    if (!cfg.grid.empty()) {
        require(cfg.grid.size() == 1 || cfg.grid.size() == ar,
                "give one --grid for all coordinates or one per coordinate (" + std::to_string(ar) + ")");
        std::vector<std::vector<Rational>> axes;
        for (size_t k = 0; k < ar; ++k) axes.push_back(expand_grid(cfg.grid[cfg.grid.size() == 1 ? 0 : k]));
        std::vector<std::vector<Rational>> prod{{}};
        for (const auto& ax : axes) {
            std::vector<std::vector<Rational>> next;
            for (const auto& p : prod)
                for (const auto& x : ax) {
                    auto q = p;
                    q.push_back(x);
                    next.push_back(std::move(q));
                }
            prod = std::move(next);
        }
        pts.insert(pts.end(), prod.begin(), prod.end());
    }
    for (const auto& p : pts)
        require(!strict || p.size() == ar, g.spec() + " takes " + std::to_string(ar) + " parameter(s) per point");
    return pts;
}

bool predicted_member(const ReflectionGroup& g, const Irrep& tau, const std::vector<Rational>& p) {
    switch (g.kind()) {
        case GroupKind::Symmetric:
            return genera_locus(*tau.partition).contains(p);
        case GroupKind::Cyclic: {
            // b-coordinates are relative to the trivial character; other lowest types shift them
            require(tau.label() == "0", "the rank-one predictor is implemented for the trivial type");
            return predictor_rank1(g.param(), p);
        }
        default:
            return predictor_dihedral(g, tau).contains(p);
    }
}

struct Out {
    json results;
    json warnings = json::array();
    std::vector<std::string> csv;
    std::string summary;
    int code = 0;
};

void verdict_rows(const std::vector<SweepEntry>& entries, Out& o) {
    o.results = json::array();
    o.csv.push_back("point,kind,checked_degree,witness_degree,kernel_dims,error");
    long nu = 0, cons = 0, err = 0;
    for (const auto& e : entries) {
        json r{{"point", point_json(e.point)}};
        if (e.verdict) {
            r["verdict"] = e.verdict->to_json();
            std::vector<std::string> kd;
            for (long k : e.verdict->kernel_dims) kd.push_back(std::to_string(k));
            o.csv.push_back(point_str(e.point) + "," + r["verdict"]["kind"].get<std::string>() + "," +
                            std::to_string(e.verdict->checked_degree) + "," +
                            (e.verdict->non_unitary() ? std::to_string(e.verdict->witness_degree) : "") + "," +
                            join(kd, ";") + ",");
            (e.verdict->non_unitary() ? nu : cons) += 1;
        } else {
            r["error"] = e.error;
            o.warnings.push_back("point " + point_str(e.point) + ": " + e.error);
            o.csv.push_back(point_str(e.point) + ",,,,," + "\"" + e.error + "\"");
            ++err;
        }
        o.results.push_back(std::move(r));
    }
    o.summary = std::to_string(entries.size()) + " point(s): " + std::to_string(nu) + " NonUnitary, " +
                std::to_string(cons) + " ConsistentUpTo, " + std::to_string(err) + " error(s)";
    if (err) o.code = 2;
}

Out run_certify(const JobConfig& cfg) {
    require(!cfg.group.empty() && !cfg.tau.empty(), cfg.command + " needs --group and --tau");
    auto g = ReflectionGroup::from_spec(cfg.group);
    const auto& tau = g->irrep(cfg.tau);
    // a point of the wrong arity is a per-point error, reported with the other results
    auto pts = parameter_points(cfg, *g, false);
    require(!pts.empty(), cfg.command + " needs --c or --grid");
    Out o;
    verdict_rows(sweep(g, tau, pts, cfg.max_degree, cfg.workers), o);
    return o;
}

Out run_classify(const JobConfig& cfg) {
    require(!cfg.group.empty() && !cfg.tau.empty(), "classify needs --group and --tau");
    auto g = ReflectionGroup::from_spec(cfg.group);
    const auto& tau = g->irrep(cfg.tau);
    Out o;
    auto pts = parameter_points(cfg, *g);
    if (g->kind() == GroupKind::Cyclic) {
        require(!pts.empty(), "cyclic groups have no closed locus description; give --c or --grid points");
    } else {
        LocusDescription L = g->kind() == GroupKind::Symmetric ? genera_locus(*tau.partition) : predictor_dihedral(*g, tau);
        o.results["locus"] = L.to_json();
        o.results["description"] = L.str();
        o.summary = "locus: " + L.str();
    }
    o.csv.push_back("point,member");
    if (!pts.empty()) {
        json mem = json::array();
        for (const auto& p : pts) {
            bool in = predicted_member(*g, tau, p);
            mem.push_back({{"point", point_json(p)}, {"member", in}});
            o.csv.push_back(point_str(p) + "," + (in ? "true" : "false"));
        }
        o.results["membership"] = mem;
        if (o.summary.empty()) o.summary = std::to_string(pts.size()) + " point(s) classified";
    } else {
        o.csv.push_back("\"" + o.results["description"].get<std::string>() + "\",");
    }
    return o;
}

Out run_compare(const JobConfig& cfg) {
    require(!cfg.group.empty() && !cfg.tau.empty(), "compare needs --group and --tau");
    auto g = ReflectionGroup::from_spec(cfg.group);
    const auto& tau = g->irrep(cfg.tau);
    auto pts = parameter_points(cfg, *g);
    require(!pts.empty(), "compare needs --c or --grid");
    std::vector<bool> pred;
    for (const auto& p : pts) pred.push_back(predicted_member(*g, tau, p));
    auto entries = sweep(g, tau, pts, cfg.max_degree, cfg.workers);
    Out o;
    json disc = json::array();
    o.csv.push_back("point,predicted,kind,witness_degree");
    long errors = 0;
    for (size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (!e.verdict) {
            o.warnings.push_back("point " + point_str(e.point) + ": " + e.error);
            ++errors;
            continue;
        }
        bool unitary_so_far = !e.verdict->non_unitary();
        if (unitary_so_far == pred[i]) continue;
        json d{{"point", point_json(e.point)}, {"predicted_member", pred[i]}, {"verdict", e.verdict->to_json()}};
        disc.push_back(d);
        o.csv.push_back(point_str(e.point) + "," + (pred[i] ? "true" : "false") + "," +
                        d["verdict"]["kind"].get<std::string>() + "," +
                        (e.verdict->non_unitary() ? std::to_string(e.verdict->witness_degree) : ""));
    }
    o.results = {{"checked", entries.size()}, {"discrepancies", disc}};
    o.summary = std::to_string(entries.size()) + " point(s) compared, " + std::to_string(disc.size()) + " discrepancy(ies)";
    if (errors) o.code = 2;
    return o;
}

Out run_tableaux(const JobConfig& cfg) {
    require(!cfg.tau.empty(), "tableaux needs --tau");
    require(cfg.kappa.has_value(), "tableaux needs --kappa");
    Partition tau = Partition::parse(cfg.tau);
    int B = cfg.entry_bound.value_or(3 * tau.n());
    auto rep = spectra_unitary_check(tau, *cfg.kappa, B);
    Out o;
    o.results = json::array();
    o.csv.push_back("window,contents,alpha,alpha1_nonneg,gaps_ok");
    long pass = 0;
    for (const auto& r : rep) {
        std::vector<std::string> w;
        for (int v : r.entry.tableau.window) w.push_back(std::to_string(v));
        json j = r.entry.tableau.to_json();
        j["contents"] = point_json(r.entry.content.entries);
        j["alpha"] = point_json(r.entry.content.alpha);
        j["alpha1_nonneg"] = r.alpha1_nonneg;
        j["gaps_ok"] = r.gaps_ok;
        o.results.push_back(j);
        o.csv.push_back(join(w, ";") + "," + point_str(r.entry.content.entries) + "," + point_str(r.entry.content.alpha) +
                        "," + (r.alpha1_nonneg ? "true" : "false") + "," + (r.gaps_ok ? "true" : "false"));
        pass += r.pass();
    }
    o.summary = std::to_string(rep.size()) + " tableau(x) with entries <= " + std::to_string(B) + ", " +
                std::to_string(pass) + " passing both weight conditions";
    return o;
}

Out run_singular(const JobConfig& cfg) {
    require(!cfg.group.empty() && !cfg.tau.empty(), "singular needs --group and --tau");
    require(cfg.points.size() == 1, "singular needs exactly one --c point");
    require(cfg.degree >= 1, "singular needs --degree >= 1");
    auto g = ReflectionGroup::from_spec(cfg.group);
    const auto& tau = g->irrep(cfg.tau);
    require(cfg.points[0].size() == arity_of(*g), g->spec() + " takes " + std::to_string(arity_of(*g)) + " parameter(s)");
    auto c = point_parameters(*g, cfg.points[0]);
    Verma<Cyclotomic> V(g, tau, c);
    auto sv = singular_vectors(V, cfg.degree);
    Out o;
    json types = json::object();
    std::vector<std::string> ts;
    for (const auto& [label, mult] : sv.types) {
        types[label] = mult;
        if (mult) ts.push_back(label + ":" + std::to_string(mult));
    }
    o.results = {{"point", point_json(cfg.points[0])}, {"degree", sv.degree}, {"dimension", sv.dimension}, {"types", types}};
    o.csv.push_back("point,degree,dimension,types");
    o.csv.push_back(point_str(cfg.points[0]) + "," + std::to_string(sv.degree) + "," + std::to_string(sv.dimension) + "," +
                    join(ts, ";"));
    o.summary = "singular vectors in degree " + std::to_string(sv.degree) + ": dimension " + std::to_string(sv.dimension) +
                (ts.empty() ? "" : " (" + join(ts, ", ") + ")");
    return o;
}

Out run_intertwine(const JobConfig& cfg) {
    require(cfg.n >= 1, "intertwine needs --n");
    Rational kappa = cfg.kappa.value_or(frac(1000003, 999983));
    int D = cfg.max_degree_set ? cfg.max_degree : 3;
    auto rep = intertwiner_check(cfg.n, kappa, D);
    Out o;
    o.results = rep.to_json();
    for (const auto& s : rep.skipped) o.warnings.push_back("non-invertible z_i - z_{i+1}: " + s);
    o.csv.push_back("key,value");
    for (const auto& [k, v] : o.results.items())
        if (!v.is_array()) o.csv.push_back(k + "," + (v.is_string() ? v.get<std::string>() : v.dump()));
    o.summary = std::string("intertwiner identities ") + (rep.ok() ? "hold" : "FAIL") + " on degrees <= " +
                std::to_string(D) + " (" + std::to_string(rep.sigma_checks) + " sigma checks, " +
                std::to_string(rep.skipped.size()) + " skipped)";
    return o;
}

}  // namespace

json JobConfig::to_json() const {
    json pts = json::array();
    for (const auto& p : points) pts.push_back(point_json(p));
    json j{{"command", command}, {"group", group}, {"tau", tau}, {"points", pts}, {"grid", grid},
           {"max_degree", max_degree}, {"max_degree_set", max_degree_set}};
    j["entry_bound"] = entry_bound ? json(*entry_bound) : json(nullptr);
    j["kappa"] = kappa ? json(to_string(*kappa)) : json(nullptr);
    j["n"] = n;
    j["degree"] = degree;
    j["output"] = output;
    j["format"] = format;
    j["workers"] = workers;
    return j;
}

JobConfig JobConfig::from_json(const json& j) {
    JobConfig c;
    c.command = j.at("command").get<std::string>();
    c.group = j.at("group").get<std::string>();
    c.tau = j.at("tau").get<std::string>();
    for (const auto& p : j.at("points")) {
        std::vector<Rational> v;
        for (const auto& x : p) v.push_back(parse_rational(x.get<std::string>()));
        c.points.push_back(v);
    }
    c.grid = j.at("grid").get<std::vector<std::string>>();
    c.max_degree = j.at("max_degree").get<int>();
    c.max_degree_set = j.at("max_degree_set").get<bool>();
    if (!j.at("entry_bound").is_null()) c.entry_bound = j.at("entry_bound").get<int>();
    if (!j.at("kappa").is_null()) c.kappa = parse_rational(j.at("kappa").get<std::string>());
    c.n = j.at("n").get<int>();
    c.degree = j.at("degree").get<int>();
    c.output = j.at("output").get<std::string>();
    c.format = j.at("format").get<std::string>();
    c.workers = j.at("workers").get<int>();
    return c;
}

std::vector<Rational> expand_grid(const std::string& spec) {
    auto parts = split(spec, ':');
    if (parts.size() != 3) throw ConfigParse("grid must be min:max:denominator, got '" + spec + "'");
    Rational lo = parse_rational(parts[0]), hi = parse_rational(parts[1]);
    int den = 0;
    try {
        size_t pos = 0;
        den = std::stoi(parts[2], &pos);
        if (pos != parts[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw ConfigParse("bad grid denominator in '" + spec + "'");
    }
    if (den < 1 || lo > hi) throw ConfigParse("empty grid '" + spec + "'");
    return farey_grid(lo, hi, den);
}

RunResult run(const JobConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    require(cfg.format == "json" || cfg.format == "csv", "format must be json or csv");
    Out o;
    if (cfg.command == "certify" || cfg.command == "sweep")
        o = run_certify(cfg);
    else if (cfg.command == "classify")
        o = run_classify(cfg);
    else if (cfg.command == "compare")
        o = run_compare(cfg);
    else if (cfg.command == "tableaux")
        o = run_tableaux(cfg);
    else if (cfg.command == "singular")
        o = run_singular(cfg);
    else if (cfg.command == "intertwine")
        o = run_intertwine(cfg);
    else
        throw ConfigParse("unknown command '" + cfg.command + "'");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    RunResult r;
    r.envelope = {{"schema_version", kSchemaVersion},
                  {"tool_version", kToolVersion},
                  {"config", cfg.to_json()},
                  {"wall_time", secs},
                  {"results", o.results},
                  {"warnings", o.warnings}};
    r.csv = join(o.csv, "\n") + "\n";
    r.summary = cfg.command + ": " + o.summary;
    r.exit_code = o.code;
    return r;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact unitarity checks for rational Cherednik algebras"};
    app.require_subcommand(1);
    JobConfig cfg;
    std::vector<std::string> cs;
    std::string kappa;
    for (const auto& [name, help] : kCommands) {
        auto* sub = app.add_subcommand(name, help);
        if (name != "tableaux" && name != "intertwine") {
            sub->add_option("--group", cfg.group, "group spec, e.g. Sn:4, Cyc:3, DihOdd:2, DihEven:3");
            sub->add_option("--tau", cfg.tau, "lowest type: partition 2,1 / character index / triv, sign, tau1, ...");
            sub->add_option("--c", cs, "parameter point p/q (comma-separated for several classes)")->take_all();
            sub->add_option("--grid", cfg.grid, "min:max:denominator, once or per coordinate")->take_all();
        }
        if (name == "tableaux") {
            sub->add_option("--tau", cfg.tau, "partition")->required();
            sub->add_option("--bound", cfg.entry_bound, "largest window entry (default 3n)");
        }
        if (name == "tableaux" || name == "intertwine") sub->add_option("--kappa", kappa, "kappa = -1/c, p/q");
        if (name == "intertwine") sub->add_option("--n", cfg.n, "rank of S_n")->required();
        if (name == "singular") sub->add_option("--degree", cfg.degree, "degree to search")->required();
        sub->add_option("--max-degree", cfg.max_degree, "largest degree checked (default 8)");
        sub->add_option("--output,-o", cfg.output, "write the result here");
        sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--workers", cfg.workers, "worker threads (default: RCA_WORKERS or all cores)");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    }
    for (auto* sub : app.get_subcommands()) {
        cfg.command = sub->get_name();
        cfg.max_degree_set = sub->count("--max-degree") > 0;
    }
    RunResult res;
    try {
        for (const auto& s : cs) cfg.points.push_back(parse_point(s));
        if (!kappa.empty()) cfg.kappa = parse_rational(kappa);
        res = run(cfg);
    } catch (const ConfigParse& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    } catch (const UnknownGroupSpec& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    } catch (const PartitionParse& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    } catch (const UnsupportedIrrep& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    std::string payload = cfg.format == "csv" ? res.csv : res.envelope.dump(2) + "\n";
    if (cfg.output.empty()) {
        out << payload;
    } else {
        std::ofstream f(cfg.output);
        if (!f) {
            err << "cannot write " << cfg.output << "\n";
            return 1;
        }
        f << payload;
        out << res.summary << "\n";
    }
    for (const auto& w : res.envelope["warnings"]) err << "warning: " << w.get<std::string>() << "\n";
    return res.exit_code;
}

}  // namespace rca::cli
