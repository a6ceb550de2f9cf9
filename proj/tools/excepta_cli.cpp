// excepta: weight-combinatorics screening for exceptional irreducible
// restricted modules. Subcommands: rootinfo, orbit, screen, sweep, oracle, verify.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "excepta/sweep.hpp"

using json = nlohmann::ordered_json;
using namespace excepta;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConflict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIntegrity = 3;

long long env_cap(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    long long x = std::stoll(v);
    if (x <= 0) throw CLI::ValidationError(std::string(name) + " must be positive");
    return x;
}

struct Common {
    std::string family;
    int rank = 0;
    long long p = 0;
    std::vector<int> weight;
    std::string hints_path;
    std::string refs_path;
    std::string format = "json";
    int jobs = 1;
    long long orbit_cap = 5'000'000;
    long long gap_cap = kDefaultGapCap;
    long long budget = 10'000'000;
};

DynkinType dtype_of(const Common& c) {
    DynkinType t{parse_family(c.family), c.rank};
    check_rank(t.family, t.rank);
    return t;
}

Weight weight_of(const Common& c, int rank) {
    if (static_cast<int>(c.weight.size()) != rank)
        throw CLI::ValidationError("--weight must have exactly " + std::to_string(rank) +
                                   " comma-separated coordinates");
    return c.weight;
}

MultiplicityHints hints_of(const Common& c) {
    if (c.hints_path.empty()) return {};
    return MultiplicityHints::load_file(c.hints_path);
}

EmitFormat format_of(const Common& c) {
    if (c.format == "json") return EmitFormat::Json;
    if (c.format == "csv") return EmitFormat::Csv;
    if (c.format == "text") return EmitFormat::Text;
    throw CLI::ValidationError("--format must be json, csv, or text");
}

std::string default_refs_path(const char* argv0) {
    // Look next to the binary first (install layout), then the source-tree path.
    std::string exe(argv0);
    auto slash = exe.find_last_of('/');
    std::string dir = slash == std::string::npos ? "." : exe.substr(0, slash);
    for (const std::string& cand :
         {dir + "/reference_tables.json", dir + "/../data/reference_tables.json",
          std::string("data/reference_tables.json")}) {
        if (std::ifstream(cand).good()) return cand;
    }
    throw CLI::ValidationError("cannot locate reference_tables.json; pass --refs");
}

json screening_json(const ScreeningResult& s) {
    json e;
    e["lambda"] = s.lambda;
    e["p"] = s.p;
    e["s_value"] = s.s_value.str();
    e["r_p_num"] = s.rp_numerator.str();
    e["r_p_den"] = s.rp_denominator;
    e["limit"] = s.limit;
    e["absR"] = s.abs_R;
    e["short_circuited"] = s.short_circuited;
    e["overflowed"] = s.overflowed;
    json contribs = json::array();
    for (const auto& c : s.contributions) {
        contribs.push_back({{"mu", c.mu},
                            {"bad", c.bad},
                            {"mult", c.mult},
                            {"orbit", c.orbit.str()},
                            {"long_complement", c.long_complement}});
    }
    e["contributions"] = contribs;
    return e;
}

int run_sweep_grid(const RootSystem& rs, long long p, const MultiplicityHints& hints,
                   const ReferenceTables& refs, const SweepOptions& opts, EmitFormat fmt,
                   bool print) {
    SweepReport rep = sweep_restricted(rs, p, hints, opts);
    reconcile(rep, refs);
    if (print) std::cout << emit(rep, fmt);
    return rep.conflict_count == 0 ? kExitOk : kExitConflict;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weight-combinatorics screening of exceptional restricted modules"};
    app.require_subcommand(1);

    Common c;
    c.orbit_cap = env_cap("EXCEPTA_ORBIT_CAP", c.orbit_cap);
    c.gap_cap = env_cap("EXCEPTA_GAP_CAP", c.gap_cap);

    auto add_type = [&](CLI::App* sub) {
        sub->add_option("--type", c.family, "family letter (A,B,C,D,E,F,G)")->required();
        sub->add_option("--rank", c.rank, "rank")->required();
    };
    auto add_caps = [&](CLI::App* sub) {
        sub->add_option("--orbit-cap", c.orbit_cap, "orbit enumeration cap");
        sub->add_option("--gap-cap", c.gap_cap, "dominant-below gap-point cap");
    };

    auto* rootinfo = app.add_subcommand("rootinfo", "print the root system as JSON");
    add_type(rootinfo);

    auto* orbit = app.add_subcommand("orbit", "orbit size and centralizer of a dominant weight");
    add_type(orbit);
    orbit->add_option("--weight", c.weight, "omega-coordinates")->required()->delimiter(',');

    auto* screen_cmd = app.add_subcommand("screen", "screening sums and verdict for one weight");
    add_type(screen_cmd);
    screen_cmd->add_option("--p", c.p, "prime")->required();
    screen_cmd->add_option("--weight", c.weight, "omega-coordinates")->required()->delimiter(',');
    screen_cmd->add_option("--hints", c.hints_path, "multiplicity hints JSON file");
    add_caps(screen_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "classify all p-restricted weights");
    add_type(sweep_cmd);
    sweep_cmd->add_option("--p", c.p, "prime")->required();
    sweep_cmd->add_option("--hints", c.hints_path, "multiplicity hints JSON file");
    sweep_cmd->add_option("--refs", c.refs_path, "reference tables JSON file");
    sweep_cmd->add_option("--format", c.format, "json|csv|text");
    sweep_cmd->add_option("--jobs", c.jobs, "worker count")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--budget", c.budget, "max weights per grid");
    add_caps(sweep_cmd);

    auto* oracle = app.add_subcommand("oracle", "brute-force orbit enumeration cross-check");
    add_type(oracle);
    oracle->add_option("--weight", c.weight, "omega-coordinates")->required()->delimiter(',');
    add_caps(oracle);

    auto* verify = app.add_subcommand("verify", "run the sweep acceptance grids");
    verify->add_option("--refs", c.refs_path, "reference tables JSON file");
    verify->add_option("--hints", c.hints_path, "multiplicity hints JSON file");
    verify->add_option("--jobs", c.jobs, "worker count")->check(CLI::PositiveNumber);
    verify->add_flag("--quick", "skip the large E8 p in {5,7} grids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (rootinfo->parsed()) {
            RootSystem rs = build(dtype_of(c));
            json doc;
            doc["dtype"] = type_name(rs.dtype);
            doc["positive_roots"] = rs.positive_roots;
            doc["d"] = rs.d;
            doc["cartan"] = rs.cartan;
            doc["highest_root"] = rs.highest_root;
            json longs = json::array();
            for (int i : rs.long_positive_indices) longs.push_back(rs.positive_roots[i]);
            doc["long_positive_roots"] = longs;
            std::cout << doc.dump(2) << "\n";
            return kExitOk;
        }
        if (orbit->parsed()) {
            RootSystem rs = build(dtype_of(c));
            Weight mu = weight_of(c, rs.rank());
            json doc;
            doc["orbit_size"] = orbit_size(rs, mu).str();
            doc["centralizer_order"] = centralizer_order(rs, mu).str();
            json comps = json::array();
            for (const auto& comp : decompose_deleted_diagram(rs, mu).components) {
                json nodes = json::array();
                for (int n : comp.nodes) nodes.push_back(n + 1);  // 1-based for output
                comps.push_back({{"type", type_name(comp.dtype)}, {"nodes", nodes}});
            }
            doc["components"] = comps;
            std::cout << doc.dump(2) << "\n";
            return kExitOk;
        }
        if (screen_cmd->parsed()) {
            RootSystem rs = build(dtype_of(c));
            Weight lambda = weight_of(c, rs.rank());
            MultiplicityHints hints = hints_of(c);
            ScreenOptions so;
            so.gap_cap = c.gap_cap;
            Verdict v = classify_weight(rs, lambda, c.p, hints, so);
            json doc;
            doc["verdict"] = verdict_name(v.kind);
            json rsn = json::array();
            for (Reason r : v.reasons) rsn.push_back(reason_name(r));
            doc["reasons"] = rsn;
            if (v.screening) doc["screening"] = screening_json(*v.screening);
            std::cout << doc.dump(2) << "\n";
            return kExitOk;
        }
        if (oracle->parsed()) {
            RootSystem rs = build(dtype_of(c));
            Weight mu = weight_of(c, rs.rank());
            BigInt formula = orbit_size(rs, mu);
            auto orb = orbit_enumerate(rs, mu, c.orbit_cap);
            json doc;
            doc["orbit_size_formula"] = formula.str();
            doc["orbit_size_enumerated"] = orb.size();
            doc["match"] = (formula == orb.size());
            std::cout << doc.dump(2) << "\n";
            if (formula != orb.size())
                throw IntegrityError("orbit formula disagrees with enumeration");
            return kExitOk;
        }
        if (sweep_cmd->parsed()) {
            RootSystem rs = build(dtype_of(c));
            MultiplicityHints hints = hints_of(c);
            ReferenceTables refs = ReferenceTables::load_file(
                c.refs_path.empty() ? default_refs_path(argv[0]) : c.refs_path);
            SweepOptions so;
            so.jobs = c.jobs;
            so.budget = c.budget;
            so.screen.gap_cap = c.gap_cap;
            return run_sweep_grid(rs, c.p, hints, refs, so, format_of(c), true);
        }
        if (verify->parsed()) {
            MultiplicityHints hints = hints_of(c);
            ReferenceTables refs = ReferenceTables::load_file(
                c.refs_path.empty() ? default_refs_path(argv[0]) : c.refs_path);
            SweepOptions so;
            so.jobs = c.jobs;
            bool quick = verify->count("--quick") > 0;
            struct Grid {
                DynkinType t;
                long long p;
            };
            std::vector<Grid> grids;
            for (long long p : {2, 3, 5, 7}) {
                for (int l : {6, 7}) grids.push_back({{Family::E, l}, p});
                if (!quick || p < 5) grids.push_back({{Family::E, 8}, p});
                if (p != 2) grids.push_back({{Family::F, 4}, p});
                if (p != 3) grids.push_back({{Family::G, 2}, p});
            }
            for (int l = 1; l <= 5; ++l)
                for (long long p : {2, 3, 5}) grids.push_back({{Family::A, l}, p});
            for (int l = 2; l <= 4; ++l)
                for (long long p : {3, 5}) grids.push_back({{Family::B, l}, p});
            for (int l = 3; l <= 4; ++l)
                for (long long p : {3, 5}) grids.push_back({{Family::C, l}, p});
            for (long long p : {3, 5}) grids.push_back({{Family::D, 4}, p});

            long long conflicts = 0;
            for (const auto& g : grids) {
                RootSystem rs = build(g.t);
                SweepReport rep = sweep_restricted(rs, g.p, hints, so);
                reconcile(rep, refs);
                conflicts += rep.conflict_count;
                std::cerr << type_name(g.t) << " p=" << g.p << ": weights=" << rep.weights.size()
                          << " conflicts=" << rep.conflict_count << "\n";
            }
            json doc;
            doc["grids"] = grids.size();
            doc["conflicts"] = conflicts;
            std::cout << doc.dump(2) << "\n";
            return conflicts == 0 ? kExitOk : kExitConflict;
        }
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
