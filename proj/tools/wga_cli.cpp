// Command-line front end: build the W-graph algebra of a Coxeter system,
// validate W-graph files, verify the decomposition properties, and export
// the (refined) compatibility graphs.

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "wga/io.hpp"

using namespace wga;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

struct CommonOpts {
    std::string type;
    int m = 0;
    int max_length = 12;
    std::string report_path;
    std::string format = "text";
    int threads = 1;
    std::string out_dir = ".";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_out_dir = true) {
    cmd->add_option("--type", o.type, "Coxeter type tag (A1xN, I2, A3, A4, B3, B4, D4, F4, H3)")
        ->required();
    cmd->add_option("--m", o.m, "bond order for I2 / factor count for A1xN");
    cmd->add_option("--max-length", o.max_length, "path length bound for the quotient")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--report", o.report_path, "write a JSON report to this file");
    cmd->add_option("--format", o.format, "report format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--threads", o.threads, "worker threads for per-character checks")
        ->check(CLI::PositiveNumber);
    if (with_out_dir) cmd->add_option("--out-dir", o.out_dir, "output directory");
}

CoxeterSystem system_of(const CommonOpts& o) {
    CoxType t = parse_type_tag(o.type);
    int param = o.m;
    if (t == CoxType::I2 && param == 0)
        throw CLI::ValidationError("--m", "I2 requires --m >= 3");
    if (t == CoxType::A1xN && param == 0) param = 1;
    return build_system(t, param);
}

std::string file_tag(const CoxeterSystem& sys) {
    std::string tag = type_tag(sys.type);
    if (sys.param) tag += "_" + std::to_string(sys.param);
    return tag;
}

void print_or_write(const CommonOpts& o, const Json& j, const std::string& text) {
    if (o.format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << text;
    if (!o.report_path.empty()) write_file(o.report_path, j.dump(2) + "\n");
}

void export_graphs(const CoxeterSystem& sys, const std::string& dir) {
    fs::create_directories(dir);
    Quiver q = build_compatibility_graph(sys);
    write_file(dir + "/compatibility_" + file_tag(sys) + ".dot", quiver_to_dot(q, sys));
    write_file(dir + "/compatibility_" + file_tag(sys) + ".json",
               quiver_to_json(q, sys).dump(2) + "\n");
}

bool family_supported(CoxType t) {
    return t == CoxType::A1xN || t == CoxType::I2 || t == CoxType::A3 || t == CoxType::B3 ||
           t == CoxType::A4;
}

std::shared_ptr<QuotientAlgebra> compute_algebra(const CoxeterSystem& sys, const CommonOpts& o) {
    return QuotientAlgebra::compute(sys, std::min(4, o.max_length), o.max_length);
}

int cmd_build_omega(const CommonOpts& o) {
    CoxeterSystem sys = system_of(o);
    fs::create_directories(o.out_dir);
    std::shared_ptr<QuotientAlgebra> alg;
    try {
        // optional bundle cache keyed by type tag and length bound
        const char* cache = std::getenv("WGA_CACHE_DIR");
        std::string cache_file;
        if (cache && *cache) {
            cache_file = std::string(cache) + "/omega_" + file_tag(sys) + "_L" +
                         std::to_string(o.max_length) + ".json";
            if (fs::exists(cache_file)) {
                Json j = Json::parse(read_file(cache_file));
                std::cout << "cached bundle: " << cache_file << "\n";
                std::cout << "dim(algebra) = " << j.at("dim").get<int>() << "\n";
                std::cout << "dim(radical) = " << j.at("radical_dim").get<int>() << "\n";
                std::cout << "dim(semisimple quotient) = " << j.at("semisimple_dim").get<int>()
                          << "\n";
                std::cout << "certified length = " << j.at("certified_length").get<int>() << "\n";
                return kExitOk;
            }
        }
        alg = compute_algebra(sys, o);
        Json bundle = quotient_to_json(*alg);
        std::string bundle_path = o.out_dir + "/omega_" + file_tag(sys) + ".json";
        write_file(bundle_path, bundle.dump() + "\n");
        if (!cache_file.empty()) {
            fs::create_directories(cache);
            write_file(cache_file, bundle.dump() + "\n");
        }
        std::cout << "dim(algebra) = " << alg->dim() << "\n";
        std::cout << "dim(radical) = " << alg->radical().dim_radical << "\n";
        std::cout << "dim(semisimple quotient) = " << alg->radical().dim_semisimple << "\n";
        std::cout << "certified length = " << alg->certified_length()
                  << " (bound used " << alg->length_bound_used() << ")\n";
        std::cout << "bundle written to " << bundle_path << "\n";
        if (!o.report_path.empty()) write_file(o.report_path, bundle.dump(2) + "\n");
        return kExitOk;
    } catch (const stabilization_error& e) {
        std::cout << "unsupported-for-certification: " << e.what() << "\n";
        export_graphs(sys, o.out_dir);
        std::cout << "compatibility graph exported to " << o.out_dir << "\n";
        return kExitUnsupported;
    }
}

int cmd_verify_wgraph(const CommonOpts& o, const std::string& file) {
    CoxeterSystem sys = system_of(o);
    Json j = Json::parse(read_file(file));
    WGraph g = wgraph_from_json(sys, j);
    Report rep = validate_wgraph(sys, g);
    Json out;
    out["schema"] = 1;
    out["system"] = system_to_json(sys);
    out["file"] = file;
    out["report"] = report_to_json(rep);
    std::ostringstream text;
    rep.print(text);
    print_or_write(o, out, text.str());
    return rep.all_pass() ? kExitOk : kExitVerificationFailure;
}

int cmd_verify_conjecture(const CommonOpts& o) {
    CoxeterSystem sys = system_of(o);
    if (!family_supported(sys.type)) {
        std::cout << "unsupported type for the decomposition properties: " << o.type << "\n";
        return kExitUnsupported;
    }
    std::shared_ptr<QuotientAlgebra> alg;
    try {
        alg = compute_algebra(sys, o);
    } catch (const stabilization_error& e) {
        std::cout << "unsupported-for-certification: " << e.what() << "\n";
        return kExitUnsupported;
    }
    IrrData irr = irr_data(sys);
    IdempotentFamily fam = build_family(*alg);
    Report z12 = check_Z1_Z2(*alg, fam);
    Z3Result z3 = check_Z3(*alg, fam, irr);
    Report z4 = check_Z4(*alg, fam, irr, o.threads);
    Report rad = radical_cross_check(*alg, fam, irr);
    Report hecke = alg->hecke_embedding_check();
    DenominatorAudit audit = audit_denominators(fam);

    bool all = fam.construction_checks.all_pass() && z12.all_pass() && z3.report.all_pass() &&
               z4.all_pass() && rad.all_pass() && hecke.all_pass();

    Json out;
    out["schema"] = 1;
    out["system"] = system_to_json(sys);
    out["irr"] = irr_to_json(irr);
    out["dim"] = alg->dim();
    out["radical_dim"] = alg->radical().dim_radical;
    out["semisimple_dim"] = alg->radical().dim_semisimple;
    out["certified_length"] = alg->certified_length();
    out["construction"] = report_to_json(fam.construction_checks);
    out["Z1_Z2"] = report_to_json(z12);
    out["Z3"] = report_to_json(z3.report);
    Json realized = Json::array();
    for (const auto& [lo, hi] : z3.realized) realized.push_back(Json::array({lo, hi}));
    out["Z3_realized_order"] = realized;
    out["Z4"] = report_to_json(z4);
    out["radical_cross_check"] = report_to_json(rad);
    out["hecke_embedding"] = report_to_json(hecke);
    Json dens = Json::array();
    for (const auto& d : audit.denominators) dens.push_back(d);
    out["denominators"] = dens;
    out["denominators_all_powers_of_two"] = audit.all_powers_of_two;
    out["all_pass"] = all;

    std::ostringstream text;
    text << "type " << type_tag(sys.type);
    if (sys.param) text << "(" << sys.param << ")";
    text << ": dim = " << alg->dim() << ", dim(radical) = " << alg->radical().dim_radical
         << ", dim(semisimple quotient) = " << alg->radical().dim_semisimple << "\n";
    for (const Report* r : {&fam.construction_checks, &z12, &z3.report, &z4, &rad, &hecke})
        text << "  [" << (r->all_pass() ? "pass" : "FAIL") << "] " << r->title << " ("
             << r->items.size() - r->failures() << "/" << r->items.size() << ")\n";
    text << "  denominators: " << (audit.all_powers_of_two ? "powers of two only" : "general")
         << "\n";
    text << (all ? "all properties verified\n" : "VERIFICATION FAILED\n");
    print_or_write(o, out, text.str());
    return all ? kExitOk : kExitVerificationFailure;
}

int cmd_export_graph(const CommonOpts& o) {
    CoxeterSystem sys = system_of(o);
    export_graphs(sys, o.out_dir);
    std::cout << "compatibility graph written to " << o.out_dir << "\n";
    if (family_supported(sys.type)) {
        auto alg = compute_algebra(sys, o);
        IdempotentFamily fam = build_family(*alg);
        std::string path = o.out_dir + "/refined_" + file_tag(sys) + ".dot";
        write_file(path, refined_graph_to_dot(*alg, fam));
        std::cout << "refined graph written to " << path << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"W-graph algebra toolkit"};
    app.require_subcommand(1);

    CommonOpts bo, vw, vc, eg;
    std::string wgraph_file;

    CLI::App* build = app.add_subcommand("build-omega", "compute the quotient algebra");
    add_common(build, bo);
    CLI::App* verifyw = app.add_subcommand("verify-wgraph", "validate a W-graph JSON file");
    add_common(verifyw, vw);
    verifyw->add_option("file", wgraph_file, "W-graph JSON file")->required();
    CLI::App* verifyc =
        app.add_subcommand("verify-conjecture", "verify the decomposition properties");
    add_common(verifyc, vc);
    CLI::App* exportg = app.add_subcommand("export-graph", "export compatibility graphs");
    add_common(exportg, eg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (build->parsed()) return cmd_build_omega(bo);
        if (verifyw->parsed()) return cmd_verify_wgraph(vw, wgraph_file);
        if (verifyc->parsed()) return cmd_verify_conjecture(vc);
        if (exportg->parsed()) return cmd_export_graph(eg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
