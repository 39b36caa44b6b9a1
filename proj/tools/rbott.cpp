#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rbott/bieberbach.hpp"
#include "rbott/bott_matrix.hpp"
#include "rbott/census.hpp"
#include "rbott/cohomology.hpp"
#include "rbott/invariants.hpp"

namespace {

using namespace rbott;

constexpr int kOk = 0;
constexpr int kParseError = 2;
constexpr int kNotBott = 3;
constexpr int kHypothesisViolation = 4;
constexpr int kVerificationFailure = 5;

int fail(int code, const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return code;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + path);
}

bool wants_json_format(const std::string& path, const std::string& format_in) {
    if (format_in == "json") return true;
    if (format_in == "txt") return false;
    return std::filesystem::path(path).extension() == ".json";
}

struct Loaded {
    BottMatrix matrix;        // strictly upper triangular
    Permutation permutation;  // relabeling applied on ingest
};

std::optional<Loaded> load_matrix(const std::string& path, const std::string& format_in, int& code) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& e) {
        code = fail(kParseError, e.what());
        return std::nullopt;
    }
    BottMatrix raw;
    try {
        raw = wants_json_format(path, format_in) ? parse_matrix_json(text) : parse_matrix_text(text);
    } catch (const MatrixParseError& e) {
        code = fail(kParseError, std::string(e.what()) + " in " + path);
        return std::nullopt;
    }
    auto norm = normalize(raw);
    if (!norm) {
        code = fail(kNotBott, "not a Bott matrix: the digraph of " + path + " contains a cycle");
        return std::nullopt;
    }
    return Loaded{norm->matrix, norm->permutation};
}

std::string permutation_str(const Permutation& p) {
    if (p.is_identity()) return "identity";
    std::string s = "(";
    for (std::size_t t = 0; t < p.order.size(); ++t) {
        if (t > 0) s += ",";
        s += std::to_string(p.order[t] + 1);
    }
    return s + ")";
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

/// '+'-separated terms of '*'-separated generators "xi", 1-based indices.
CohomologyClass parse_expression(const Ring& ctx, const std::string& expr) {
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::string cur;
        for (char c : s) {
            if (c == sep) {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        parts.push_back(cur);
        return parts;
    };
    auto trim = [](std::string s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        return s;
    };

    CohomologyClass acc = CohomologyClass::zero(ctx);
    for (const std::string& raw_term : split(expr, '+')) {
        CohomologyClass term = CohomologyClass::unit(ctx);
        for (const std::string& raw_factor : split(raw_term, '*')) {
            const std::string factor = trim(raw_factor);
            if (factor.size() < 2 || factor[0] != 'x' ||
                factor.find_first_not_of("0123456789", 1) != std::string::npos) {
                throw std::invalid_argument("bad generator \"" + factor + "\"; expected x1..x" +
                                            std::to_string(ctx->dim()));
            }
            const int index = std::stoi(factor.substr(1));
            if (index < 1 || index > ctx->dim()) {
                throw std::invalid_argument("generator index out of range in \"" + factor + "\"; expected x1..x" +
                                            std::to_string(ctx->dim()));
            }
            term = term * CohomologyClass::generator(ctx, index - 1);
        }
        acc = acc + term;
    }
    return acc;
}

int cmd_check(const Loaded& loaded, bool json_mode) {
    const BottMatrix& m = loaded.matrix;
    if (json_mode) {
        std::cout << verdict_json(m).dump(2) << "\n";
        return kOk;
    }
    const Ring ctx = make_ring(m);
    const SpinVerdict sv = has_spin(m);
    const int k = m.nonzero_row_count();
    std::cout << "n: " << m.dim() << "\n";
    std::cout << "k: " << k << "\n";
    std::cout << "permutation: " << permutation_str(loaded.permutation) << "\n";
    std::cout << "w1: " << stiefel_whitney(ctx, 1).str() << "\n";
    if (sv.orientable && k == 2) {
        const TwoRowShape shape = two_row_shape(*as_pair_matrix(m));
        std::cout << "case: " << case_name(shape.case_tag) << "\n";
        std::cout << "pattern: " << pattern_name(shape.pattern_tag) << "\n";
    }
    std::cout << "orientable: " << yesno(sv.orientable) << ", spin: " << yesno(sv.spin);
    if (sv.orientable) std::cout << ", w2: " << sv.w2.str();
    std::cout << "\n";
    return kOk;
}

int cmd_cohomology(const Loaded& loaded, const std::optional<int>& degree, const std::optional<std::string>& expr) {
    const Ring ctx = make_ring(loaded.matrix);
    if (degree) {
        if (*degree < 0 || *degree > ctx->dim()) {
            return fail(kParseError,
                        "degree " + std::to_string(*degree) + " out of range [0, " + std::to_string(ctx->dim()) + "]");
        }
        std::cout << stiefel_whitney(ctx, *degree).str() << "\n";
        return kOk;
    }
    CohomologyClass cls;
    try {
        cls = parse_expression(ctx, *expr);
    } catch (const std::invalid_argument& e) {
        return fail(kParseError, e.what());
    }
    std::cout << (cls * cls).str() << "\n";
    return kOk;
}

int cmd_decompose(const Loaded& loaded, const std::string& out_dir) {
    const BottMatrix& m = loaded.matrix;
    const int k = m.nonzero_row_count();
    if (k < 2 || k % 2 != 0) {
        return fail(kHypothesisViolation,
                    "the pairwise decomposition requires an even number of nonzero rows, at least two; this matrix "
                    "has k = " +
                        std::to_string(k));
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) return fail(kParseError, "cannot create " + out_dir + ": " + ec.message());

    nlohmann::json manifest;
    manifest["n"] = m.dim();
    manifest["k"] = k;
    nlohmann::json pairs = nlohmann::json::array();
    bool conjunction = true;
    try {
        for (const PairMatrix& p : decompose_pairs(m)) {
            const std::string name = "A_" + std::to_string(p.i + 1) + "_" + std::to_string(p.j + 1) + ".txt";
            write_file((std::filesystem::path(out_dir) / name).string(), to_text(p.base));
            const SpinVerdict sv = has_spin(p.base);
            conjunction = conjunction && sv.spin;
            pairs.push_back({{"i", p.i + 1},
                             {"j", p.j + 1},
                             {"file", name},
                             {"orientable", sv.orientable},
                             {"spin", sv.spin},
                             {"w2", sv.w2.str()}});
            std::cout << name << "  spin: " << yesno(sv.spin) << "\n";
        }
        manifest["pairs"] = pairs;
        manifest["conjunction"] = conjunction;
        write_file((std::filesystem::path(out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
    } catch (const std::runtime_error& e) {
        return fail(kParseError, e.what());
    }
    std::cout << "conjunction: " << yesno(conjunction) << "\n";
    return kOk;
}

int cmd_group(const Loaded& loaded) {
    const BottMatrix& m = loaded.matrix;
    const auto gens = generators(m);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::cout << "s" << (i + 1) << " = " << render(gens[i]) << "\n";
    }
    const bool lattice_ok = verify_lattice(m);
    std::cout << "lattice: " << (lattice_ok ? "ok" : "FAILED") << "\n";

    const std::uint64_t order = holonomy_order(m);
    bool span_ok = true;
    if (gf2_row_rank(m) <= 20) span_ok = holonomy_group(m).size() == order;

    const bool torsion_known = m.dim() <= 16;
    const bool torsion_free = torsion_known && verify_torsion_free(m);
    std::cout << "holonomy order " << order
              << ", torsion-free: " << (torsion_known ? yesno(torsion_free) : "skipped (n > 16)") << "\n";
    if (!span_ok) std::cout << "holonomy span order disagrees with its rank\n";

    const bool ok = lattice_ok && span_ok && (!torsion_known || torsion_free);
    return ok ? kOk : kVerificationFailure;
}

int cmd_verify(const Loaded& loaded) {
    const BottMatrix& m = loaded.matrix;
    const int k = m.nonzero_row_count();
    const OrientationVerdict ov = orientable(m);
    const SpinVerdict sv = has_spin(m);
    bool all_ok = true;
    auto report = [&](const std::string& name, bool applicable, bool ok, const std::string& note) {
        std::cout << name << ": " << (applicable ? (ok ? "ok" : "FAILED") : "skipped") << note << "\n";
        if (applicable && !ok) all_ok = false;
    };

    {
        const Ring ctx = make_ring(m);
        report("w1_equivalence", true, stiefel_whitney(ctx, 1).is_zero() == ov.orientable, "");
    }
    const bool even_k = k >= 2 && k % 2 == 0;
    report("main_theorem", even_k, even_k && main_theorem_check(m).agree, even_k ? "" : " (needs even k >= 2)");
    bool additive = false;
    if (even_k) {
        const AdditivityCheck ac = additivity_check(m);
        additive = ac.y_additive && ac.w2_additive;
    }
    report("additivity", even_k, additive, even_k ? "" : " (needs even k >= 2)");

    if (k == 2 && ov.orientable) {
        const TwoRowShape shape = two_row_shape(*as_pair_matrix(m));
        if (shape.pattern_tag == PatternTag::Unmatched) {
            report("two_row_cases", false, true, " (no closed-form clause; decided directly)");
        } else {
            report("two_row_cases", true, two_row_spin_criterion(shape) == sv.spin,
                   " (" + pattern_name(shape.pattern_tag) + ")");
        }
    } else {
        report("two_row_cases", false, true, " (needs orientable k = 2)");
    }

    bool group_ok = verify_lattice(m) && holonomy_group(m).size() == holonomy_order(m);
    const bool torsion_known = m.dim() <= 16;
    if (torsion_known) group_ok = group_ok && verify_torsion_free(m);
    report("group_sanity", true, group_ok, torsion_known ? "" : " (torsion check skipped, n > 16)");

    std::cout << "result: " << (all_ok ? "ok" : "FAILED") << "\n";
    return all_ok ? kOk : kVerificationFailure;
}

int cmd_census(int n, const std::vector<std::string>& check_names, const std::string& format, bool force_large,
               bool serial, const std::string& out_path) {
    CheckSelection sel{};
    for (const std::string& name : check_names) {
        if (name == "all") {
            sel = CheckSelection::all();
        } else if (name == "main_theorem") {
            sel.main_theorem = true;
        } else if (name == "additivity") {
            sel.additivity = true;
        } else if (name == "two_row_cases") {
            sel.two_row_cases = true;
        } else if (name == "group_sanity") {
            sel.group_sanity = true;
        } else if (name == "w1_equivalence") {
            sel.w1_equivalence = true;
        }
    }

    CensusOptions opts;
    opts.parallel = !serial;
    opts.force_large = force_large;
    if (n >= 7) opts.progress = &std::cerr;

    CensusReport report;
    try {
        report = serial ? run_census_serial(n, sel, opts) : run_census(n, sel, opts);
    } catch (const std::invalid_argument& e) {
        return fail(kHypothesisViolation, e.what());
    }

    const std::string payload = format == "json" ? export_report_json(report) : export_report_csv(report);
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        try {
            write_file(out_path, payload);
        } catch (const std::runtime_error& e) {
            return fail(kParseError, e.what());
        }
    }
    if (!report.violations.empty()) {
        std::cerr << "violations: " << report.violations.size() << "\n";
        return kVerificationFailure;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of real Bott manifolds: orientability, Spin structures, their isometry groups"};
    app.require_subcommand(1);

    std::string file;
    std::string format_in = "auto";
    auto add_matrix_arg = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "matrix file (text rows of 0/1, or JSON)")->required();
        cmd->add_option("--format-in", format_in, "input format; default: by extension")
            ->check(CLI::IsMember({"txt", "json"}));
    };

    bool json_mode = false;
    CLI::App* check = app.add_subcommand("check", "orientability and Spin verdict of one matrix");
    add_matrix_arg(check);
    check->add_flag("--json", json_mode, "emit the verdict as JSON");

    int degree = 0;
    std::string expr;
    CLI::App* cohomology = app.add_subcommand("cohomology", "normal forms in the mod-2 cohomology ring");
    add_matrix_arg(cohomology);
    auto* opt_degree =
        cohomology->add_option("--degree", degree, "print the Stiefel-Whitney class of this degree");
    auto* opt_class = cohomology->add_option("--class", expr, "print the normal form of this expression squared");
    opt_degree->excludes(opt_class);
    opt_class->excludes(opt_degree);

    std::string out_dir;
    CLI::App* decompose = app.add_subcommand("decompose", "write the pairwise decomposition and its Spin manifest");
    add_matrix_arg(decompose);
    decompose->add_option("--out", out_dir, "output directory")->required();

    CLI::App* group = app.add_subcommand("group", "generators and sanity checks of the isometry group");
    add_matrix_arg(group);

    CLI::App* verify = app.add_subcommand("verify", "run every applicable identity check on one matrix");
    add_matrix_arg(verify);

    int census_n = 0;
    std::vector<std::string> checks{"all"};
    std::string census_format = "csv";
    std::string census_out;
    bool force_large = false;
    bool serial = false;
    CLI::App* census = app.add_subcommand("census", "sweep every matrix of one dimension and verify the identities");
    census->add_option("--n", census_n, "matrix dimension, 2 to 8")->required();
    census->add_option("--checks", checks, "comma-separated checks; default all")
        ->delimiter(',')
        ->check(CLI::IsMember({"all", "main_theorem", "additivity", "two_row_cases", "group_sanity", "w1_equivalence"}));
    census->add_option("--format", census_format, "report format")->check(CLI::IsMember({"json", "csv"}));
    census->add_flag("--force-large", force_large, "confirm the long n >= 7 sweeps");
    census->add_flag("--serial", serial, "use the single-threaded reference sweep");
    census->add_option("--out", census_out, "write the report to this file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    if (app.got_subcommand(census)) {
        return cmd_census(census_n, checks, census_format, force_large, serial, census_out);
    }

    int code = 0;
    const auto loaded = load_matrix(file, format_in, code);
    if (!loaded) return code;

    if (app.got_subcommand(check)) return cmd_check(*loaded, json_mode);
    if (app.got_subcommand(cohomology)) {
        if (!*opt_degree && !*opt_class) {
            return fail(kParseError, "one of --degree or --class is required");
        }
        return cmd_cohomology(*loaded,
                              *opt_degree ? std::optional<int>(degree) : std::nullopt,
                              *opt_class ? std::optional<std::string>(expr) : std::nullopt);
    }
    if (app.got_subcommand(decompose)) return cmd_decompose(*loaded, out_dir);
    if (app.got_subcommand(group)) return cmd_group(*loaded);
    if (app.got_subcommand(verify)) return cmd_verify(*loaded);
    return fail(kParseError, "no subcommand");
}
