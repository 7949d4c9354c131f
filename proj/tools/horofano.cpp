// Command-line front end: check / classify instance files, enumerate toric
// reflexive polytopes.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "horofano/horofano.hpp"

namespace {

using horofano::io::Json;

int read_instance(const std::string& path, horofano::io::Instance& out) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        out = horofano::io::parse_instance_text(buf.str());
    } catch (const horofano::ValidationError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return 2;
    }
    return 0;
}

bool write_json(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    out << j.dump(2) << "\n";
    return true;
}

int cmd_check(const std::string& path, const std::string& json_out) {
    horofano::io::Instance inst;
    if (int rc = read_instance(path, inst)) return rc;
    const auto analysis = horofano::io::analyze_instance(inst);
    std::cout << horofano::io::report_text(analysis);
    if (!json_out.empty() && !write_json(json_out, horofano::io::report_json(analysis))) return 2;
    return analysis.exit_code();
}

int cmd_classify(const std::string& path) {
    horofano::io::Instance inst;
    if (int rc = read_instance(path, inst)) return rc;
    const auto a = horofano::io::analyze_instance(inst);
    if (a.status == horofano::io::Status::Invalid) {
        std::cout << "invalid instance: " << a.message << "\n";
        return 2;
    }
    if (a.status == horofano::io::Status::Inconsistent) {
        std::cout << "INCONSISTENT: " << a.message << "\n";
        return 3;
    }
    const auto& t = *a.theorem;
    if (!t.equality) {
        std::cout << "strict inequality: " << t.lhs << " < " << t.d << "\n"
                  << "violated conditions: " << horofano::io::violated_conditions(t.conditions) << "\n";
        return 4;
    }
    std::cout << horofano::io::product_text(t.classification->factors) << "\n";
    return 0;
}

int cmd_enumerate(int dim, int box, unsigned threads, const std::string& json_out) {
    horofano::io::Sweep sweep;
    try {
        sweep = horofano::io::run_sweep({dim, box, true, threads});
    } catch (const horofano::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    std::cout << horofano::io::sweep_text(sweep);
    if (!json_out.empty() && !write_json(json_out, horofano::io::sweep_json(sweep))) return 2;
    return sweep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants and pseudo-index bound for Q-factorial horospherical Fano varieties"};
    app.require_subcommand(1);

    std::string check_path, check_json;
    auto* check = app.add_subcommand("check", "run the full pipeline on an instance file");
    check->add_option("file", check_path, "instance JSON")->required();
    check->add_option("--json", check_json, "write the JSON report here");

    std::string classify_path;
    auto* classify = app.add_subcommand("classify", "print the product decomposition of an equality case");
    classify->add_option("file", classify_path, "instance JSON")->required();

    int dim = 2, box = 1;
    unsigned threads = 1;
    std::string enum_json;
    auto* enumerate = app.add_subcommand("enumerate-toric", "enumerate simplicial reflexive polytopes in a box");
    enumerate->add_option("--dim", dim, "dimension (2 or 3)")->required()->check(CLI::Range(2, 3));
    enumerate->add_option("--box", box, "coordinate bound B (vertices in [-B,B]^dim)")->required()->check(CLI::Range(1, 4));
    enumerate->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 64u));
    enumerate->add_option("--json", enum_json, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage errors share the validation exit code
    }

    if (*check) return cmd_check(check_path, check_json);
    if (*classify) return cmd_classify(classify_path);
    return cmd_enumerate(dim, box, threads, enum_json);
}
