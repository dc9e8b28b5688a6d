// Command-line front end: scenario runner plus direct access to root-system
// dumps, system solving, torus evaluation, diagram presets and multiplicity
// tables. JSON goes to stdout, diagnostics to stderr, exit code 0/1.

#include "rootwork/classify.hpp"
#include "rootwork/json_io.hpp"
#include "rootwork/multiplicity.hpp"
#include "rootwork/presets.hpp"
#include "rootwork/scenarios.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

namespace {

using namespace rootwork;

int cmd_scenario_list() {
    for (const ScenarioInfo& s : list_scenarios()) {
        std::cout << s.name << "  [" << s.anchor << "]";
        if (s.needs_params)
            std::cout << "  (params: --p --e, default p=" << s.default_p << " e=" << s.default_e
                      << ")";
        std::cout << "\n    " << s.description << "\n";
    }
    return 0;
}

int cmd_scenario_run(const std::string& name, std::optional<long long> p, std::optional<int> e,
                     const std::string& report_path) {
    Scenario s{name, std::nullopt};
    const ScenarioInfo& info = scenario_info(name);
    if (p || e) {
        if (!info.needs_params) {
            std::cerr << "scenario \"" << name << "\" takes no field parameters\n";
            return 1;
        }
        s.params = CyclicParams::make(p.value_or(info.default_p), e.value_or(info.default_e));
    }
    const Report rep = run_scenario(s);
    for (const Check& c : rep.checks)
        std::cerr << (c.pass ? "  ok  " : " FAIL ") << c.id << "  [" << c.anchor << ", "
                  << provenance_name(c.provenance) << "]\n";
    const std::string line = rep.to_json().dump();
    std::cout << line << "\n";
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::app);
        if (!out) {
            std::cerr << "cannot open report file " << report_path << "\n";
            return 1;
        }
        out << line << "\n";
    }
    return rep.pass ? 0 : 1;
}

int cmd_rootsys_dump(const std::string& type) {
    const RootSystem rs = RootSystem::build(SimpleType::parse(type));
    std::cout << root_system_json(rs).dump(2) << "\n";
    return 0;
}

int cmd_ohmori_solve(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open system spec " << path << "\n";
        return 1;
    }
    Json j = Json::parse(in);
    const ParsedSystemSpec spec = parse_system_spec(j);
    std::cout << solution_json(solve(spec.system)).dump() << "\n";
    return 0;
}

int cmd_torus_eval(const std::string& type, long long p, int e, const std::vector<long long>& n,
                   const std::vector<long long>& raw, bool half) {
    const CyclicParams cp = CyclicParams::make(p, e);
    const RootSystem rs = RootSystem::build(SimpleType::parse(type));
    TorusElement t = raw.empty() ? make_ohmori_torus(cp, n, half) : TorusElement::make(cp, raw);
    if (t.rank() != rs.rank()) {
        std::cerr << "exponent vector length " << t.rank() << " != rank of " << type << "\n";
        return 1;
    }
    auto types = classify_type(kernel_subsystem(t, rs));
    std::sort(types.begin(), types.end(), [](SimpleType a, SimpleType b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        return a.family < b.family;
    });
    std::cout << torus_summary_json(order(t), types).dump() << "\n";
    return 0;
}

int cmd_mult_table(int n, bool as_json) {
    const MultiplicityTable table = kawanaka_table(n);
    if (as_json) {
        Json j;
        j["n"] = n;
        Json pairs = Json::array();
        for (const auto& p : table.rows) {
            Json pj;
            pj["x"] = p.x.to_string();
            pj["degree"] = p.degree;
            pj["tag"] = p.tag;
            pairs.push_back(std::move(pj));
        }
        j["pairs"] = pairs;
        j["classes"] = [&] {
            Json arr = Json::array();
            for (const CycleType& c : table.cols) arr.push_back(c.to_string());
            return arr;
        }();
        j["table"] = table.entries;
        std::cout << j.dump() << "\n";
        return 0;
    }
    size_t row_width = 12;
    for (const auto& p : table.rows)
        row_width = std::max(row_width, p.x.to_string().size() + 8);
    std::cout << std::left << std::setw(static_cast<int>(row_width)) << "(x, sigma)";
    for (const CycleType& c : table.cols) std::cout << std::setw(8) << c.to_string();
    std::cout << "\n";
    for (size_t r = 0; r < table.rows.size(); ++r) {
        const auto& p = table.rows[r];
        std::string label = p.x.to_string() + " #" + std::to_string(p.tag);
        std::cout << std::setw(static_cast<int>(row_width)) << label;
        for (size_t c = 0; c < table.cols.size(); ++c) std::cout << std::setw(8) << table.entries[r][c];
        std::cout << "\n";
    }
    return 0;
}

// Labels take the form "<cycle type>:<tag>", e.g. "2+2:3". The tool never
// guesses which pairs label which character; callers supply them and get a
// degree-one verdict back.
int cmd_mult_check(int n, const std::vector<std::string>& labels) {
    const PairSet ps = pair_set(n);
    Json out;
    out["n"] = n;
    Json results = Json::array();
    bool all_degree_one = true;
    for (const std::string& label : labels) {
        const auto colon = label.rfind(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("label \"" + label + "\" is not of the form x:tag");
        const std::string x = label.substr(0, colon);
        const int tag = std::stoi(label.substr(colon + 1));
        const PairSet::Pair* found = nullptr;
        for (const auto& p : ps.pairs)
            if (p.x.to_string() == x && p.tag == tag) found = &p;
        if (!found)
            throw std::invalid_argument("label \"" + label + "\" names no pair for n = " +
                                        std::to_string(n));
        Json r;
        r["x"] = x;
        r["tag"] = tag;
        r["degree"] = found->degree;
        r["degree_one"] = found->degree == 1;
        all_degree_one = all_degree_one && found->degree == 1;
        results.push_back(std::move(r));
    }
    out["pairs"] = results;
    out["all_degree_one"] = all_degree_one;
    std::cout << out.dump() << "\n";
    return all_degree_one ? 0 : 1;
}

int cmd_grading_preset(const std::string& name) {
    if (name.empty()) {
        for (const DiagramPreset& p : diagram_presets()) std::cout << p.name << "\n";
        std::cout << "d5a3-cuspidal\n";
        return 0;
    }
    if (name == "d5a3-cuspidal") {
        const RootSystem e8 = RootSystem::build({Family::E, 8});
        std::cout << diagram_json(d5a3_cuspidal(e8)).dump() << "\n";
        return 0;
    }
    const DiagramPreset& p = diagram_preset(name);
    const RootSystem rs = RootSystem::build(p.type);
    std::cout << diagram_json(WeightedDynkinDiagram::make(rs, p.weights)).dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact root-system workbench: gradings, integer support systems, "
                 "torus kernels and multiplicity tables"};
    app.require_subcommand(1);

    auto* scenario = app.add_subcommand("scenario", "run or list the verification scenarios");
    scenario->require_subcommand(1);
    scenario->add_subcommand("list", "list the scenario registry");
    auto* run = scenario->add_subcommand("run", "run one scenario and emit its JSON report");
    std::string run_name;
    run->add_option("name", run_name, "scenario name (see `scenario list`)")->required();
    long long opt_p = -1;
    int opt_e = -1;
    std::string report_path;
    run->add_option("--p", opt_p, "field characteristic");
    run->add_option("--e", opt_e, "field exponent (q = p^e)");
    run->add_option("--report", report_path, "append the JSON report line to this file");

    auto* rootsys = app.add_subcommand("rootsys", "root-system inspection");
    auto* dump = rootsys->add_subcommand(
        "dump",
        "dump a root system as canonical JSON; node numbering is Bourbaki throughout "
        "(E-types: chain 1-3-4-5-6(-7-8), node 2 on node 4), roots ordered by height then "
        "lexicographically");
    std::string dump_type;
    dump->add_option("type", dump_type, "simple type, e.g. E8 or B4")->required();
    rootsys->require_subcommand(1);

    auto* ohmori = app.add_subcommand("ohmori", "integer support-system solving");
    auto* solve_cmd = ohmori->add_subcommand("solve", "solve a JSON system spec exactly");
    std::string spec_path;
    solve_cmd->add_option("spec", spec_path, "path to the system spec (JSON)")->required();
    ohmori->require_subcommand(1);

    auto* torus = app.add_subcommand("torus", "torus element evaluation");
    auto* eval = torus->add_subcommand("eval", "order and kernel type of a torus element");
    std::string torus_type = "E8";
    long long torus_p = 13;
    int torus_e = 1;
    std::vector<long long> torus_n, torus_raw;
    bool torus_half = false;
    eval->add_option("--type", torus_type, "ambient simple type")->capture_default_str();
    eval->add_option("--p", torus_p, "field characteristic")->capture_default_str();
    eval->add_option("--e", torus_e, "field exponent (q = p^e)")->capture_default_str();
    eval->add_option("--n", torus_n, "integer vector; exponents are n_j * (q-1)/(p-1)")
        ->delimiter(',');
    eval->add_option("--exponents", torus_raw, "raw exponents mod q-1 (overrides --n)")
        ->delimiter(',');
    eval->add_flag("--half", torus_half, "use n_j * (q-1)/(2(p-1)) (q must be an even power)");
    torus->require_subcommand(1);

    auto* mult = app.add_subcommand("mult", "multiplicity tables");
    auto* table = mult->add_subcommand("table", "multiplicity table for component group S_n");
    int mult_n = 3;
    bool mult_json = false;
    table->add_option("n", mult_n, "3, 4 or 5")->required();
    table->add_flag("--json", mult_json, "emit JSON instead of aligned text");
    auto* check = mult->add_subcommand(
        "check", "verify that user-supplied pair labels all have degree one");
    int check_n = 3;
    std::vector<std::string> check_labels;
    check->add_option("n", check_n, "3, 4 or 5")->required();
    check->add_option("--pair", check_labels, "pair label <cycle type>:<tag>, e.g. 2+2:3")
        ->required();
    mult->require_subcommand(1);

    auto* grading = app.add_subcommand("grading", "weighted-diagram presets");
    auto* preset = grading->add_subcommand("preset", "print a named diagram preset (or list names)");
    std::string preset_name;
    preset->add_option("name", preset_name, "preset name; omit to list");
    grading->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (scenario->got_subcommand("list")) return cmd_scenario_list();
        if (scenario->got_subcommand("run"))
            return cmd_scenario_run(run_name,
                                    opt_p < 0 ? std::nullopt : std::optional<long long>(opt_p),
                                    opt_e < 0 ? std::nullopt : std::optional<int>(opt_e),
                                    report_path);
        if (rootsys->parsed()) return cmd_rootsys_dump(dump_type);
        if (ohmori->parsed()) return cmd_ohmori_solve(spec_path);
        if (torus->parsed()) {
            if (torus_n.empty() && torus_raw.empty()) {
                std::cerr << "torus eval: provide --n or --exponents\n";
                return 1;
            }
            return cmd_torus_eval(torus_type, torus_p, torus_e, torus_n, torus_raw, torus_half);
        }
        if (mult->got_subcommand("table")) return cmd_mult_table(mult_n, mult_json);
        if (mult->got_subcommand("check")) return cmd_mult_check(check_n, check_labels);
        if (grading->parsed()) return cmd_grading_preset(preset_name);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    std::cerr << "no subcommand\n";
    return 1;
}
