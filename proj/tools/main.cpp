// z2sys: mod-2 systolic invariants of finite simplicial complexes.
//
// Subcommands: gen (family generators), invariants (systole / cutting-area
// computations), verify (lemma and inequality suites, CSV report), css
// (check-matrix extraction).

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "z2sys/css.hpp"
#include "z2sys/generators.hpp"
#include "z2sys/json_io.hpp"
#include "z2sys/subdivision.hpp"
#include "z2sys/verify.hpp"

namespace {

using namespace z2sys;
using nlohmann::json;

struct CommonFlags {
    double eps = 0.5;
    std::uint64_t seed = 0;
    int enum_cap = 24;
    int weight_cap = 64;
    long long budget_ms = 60000;
    std::string vitali_order = "largest-first";

    SearchOptions search() const {
        SearchOptions s;
        s.enum_cap = enum_cap;
        s.weight_cap = weight_cap;
        s.budget_ms = budget_ms;
        s.seed = seed;
        return s;
    }
    VitaliOrder order() const {
        return vitali_order == "paper" ? VitaliOrder::NonDecreasing : VitaliOrder::LargestFirst;
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--eps", flags.eps, "exponent slack in the inequality reports");
    cmd->add_option("--seed", flags.seed, "seed for randomized suites");
    cmd->add_option("--enum-cap", flags.enum_cap, "full-enumeration dimension cap");
    cmd->add_option("--weight-cap", flags.weight_cap, "iterative-deepening weight cap");
    cmd->add_option("--budget-ms", flags.budget_ms, "per-search time budget (ms)");
    cmd->add_option("--order", flags.vitali_order, "disjoint-subfamily greedy order")
        ->check(CLI::IsMember({"largest-first", "paper"}));
}

std::string family_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

int cmd_gen(const std::string& family, int k, int m, int p, int nn, int t,
            const std::string& a_path, const std::string& b_path, const std::string& input,
            const std::string& out) {
    SimplicialComplex M = [&] {
        if (family == "grid-torus") return gen::grid_torus(k);
        if (family == "cycle") return gen::cycle_graph(m);
        if (family == "rp2") return gen::rp2_minimal();
        if (family == "s1-x-sphere") return gen::s1_x_sphere(p, nn);
        if (family == "connected-sum") {
            auto A = load_complex(a_path);
            auto B = load_complex(b_path);
            return gen::connected_sum(A, B).complex;
        }
        if (family == "subdivide") return subdivide(load_complex(input), t);
        throw CLI::ValidationError("unknown family " + family);
    }();
    save_complex(M, out);
    std::cout << "wrote " << out << ": n=" << M.top_dim() << " vol=" << M.volume()
              << " simplices=" << M.total_simplices() << "\n";
    return 0;
}

int cmd_invariants(const std::string& path, int k, const std::string& alpha_support,
                   const CommonFlags& flags) {
    const SimplicialComplex M = load_complex(path);
    const SearchOptions opts = flags.search();

    json out;
    out["file"] = path;
    out["n"] = M.top_dim();
    out["vol"] = M.volume();
    json ranks = json::array();
    for (int d = 0; d <= M.top_dim(); ++d) ranks.push_back(betti(M, d));
    out["betti"] = ranks;

    HomologyPair hp(M, k);
    json classes = json::array();

    auto report_class = [&](const CohomologyClass& alpha, const std::string& label) {
        json c;
        c["alpha"] = label;
        const MinWeightResult sys = sys_detected(M, hp, alpha, opts);
        c["sys_alpha"] = sys.weight;
        c["sys_alpha_certified"] = sys.certified;
        c["sys_alpha_method"] = sys.method;
        CutOptions copts;
        copts.search = opts;
        const CutResult cut = cut_alpha(M, alpha, copts);
        c["cut_alpha"] = cut.search.weight;
        c["cut_alpha_certified"] = cut.search.certified;
        c["cut_alpha_method"] = cut.search.method;
        classes.push_back(c);
    };

    if (alpha_support.empty()) {
        const auto basis = cohomology_basis(hp);
        for (std::size_t i = 0; i < basis.size(); ++i)
            report_class(basis[i], "basis:" + std::to_string(i));
    } else {
        Cochain w(k, static_cast<std::size_t>(M.count(k)));
        std::stringstream ss(alpha_support);
        std::string tok;
        while (std::getline(ss, tok, ',')) w.bits.set(std::stoul(tok));
        const CohomologyClass alpha = hp.cohomology_class(w);
        if (alpha.is_trivial()) throw std::invalid_argument("selector names a trivial class");
        report_class(alpha, "support:" + alpha_support);
    }
    out["classes"] = classes;

    json sys_a = json::array();
    for (const auto& cls : homology_basis(hp)) {
        const MinWeightResult r = min_weight_in_class(hp, cls, opts);
        json c;
        c["weight"] = r.weight;
        c["certified"] = r.certified;
        c["method"] = r.method;
        sys_a.push_back(c);
    }
    out["sys_class_basis"] = sys_a;

    std::cout << out.dump(2) << "\n";
    return 0;
}

VerificationReport run_instance_suites(const Instance& inst, const std::string& suite,
                                       const CommonFlags& flags) {
    VerificationReport rep;
    const SearchOptions opts = flags.search();
    const SimplicialComplex& M = inst.complex;

    const bool lemmas = suite == "all" || suite == "lemmas";
    const bool theorem = suite == "all" || suite == "theorem";
    const bool multiclass = suite == "all" || suite == "multiclass";

    if (lemmas) {
        rep.merge(coarea_suite(inst));
        rep.merge(separation_suite(inst, flags.seed, 2000));
    }

    HomologyPair h1(M, 1);
    if (h1.dim() == 0) return rep;
    const auto alphas = cohomology_basis(h1);
    const CohomologyClass& alpha = alphas.front();

    CutOptions copts;
    copts.search = opts;

    if (lemmas) {
        rep.merge(factoring_suite(inst, alpha, flags.seed + 1, 200, opts));
        const CutResult cut = cut_alpha(M, alpha, copts);
        rep.merge(vitali_suite(inst, cut.cut, flags.order()));
        rep.merge(cut_paste_suite(inst, alpha, cut.cut, flags.seed + 2, 50, opts));
        if (M.volume() <= 40 && is_closed_pseudomanifold(M))
            rep.merge(duality_equality_suite(inst, alpha, false, opts));
    }
    if (theorem) {
        // one representative class per instance keeps sweeps comparable across sizes
        rep.merge(theorem_suite(inst, alpha, flags.eps, copts));
    }
    if (multiclass && h1.dim() >= 2 && M.top_dim() >= 2) {
        std::vector<CohomologyClass> pair{alphas[0], alphas[1]};
        try {
            rep.merge(multiclass_suite(inst, pair, flags.eps, copts));
        } catch (const std::domain_error&) {
            // vanishing cup product: nothing to verify on this instance
        }
    }
    return rep;
}

int cmd_verify(const std::vector<std::string>& files, const std::string& family, int k_min,
               int k_max, const std::string& suite, const std::string& out_path,
               const CommonFlags& flags) {
    std::vector<Instance> instances;
    for (const auto& f : files)
        instances.push_back(Instance{family_of(f), "file", load_complex(f)});
    if (family == "grid-torus") {
        for (int k = k_min; k <= k_max; ++k)
            instances.push_back(
                Instance{"grid_torus_" + std::to_string(k), "grid_torus", gen::grid_torus(k)});
    } else if (family == "rp2") {
        instances.push_back(Instance{"rp2", "rp2", gen::rp2_minimal()});
    } else if (!family.empty()) {
        throw CLI::ValidationError("unknown sweep family " + family);
    }
    if (instances.empty()) throw CLI::ValidationError("no inputs: pass files or --family");

    VerificationReport rep;
    for (const auto& inst : instances) {
        std::cerr << "verify: " << inst.name << "\n";
        auto sub = run_instance_suites(inst, suite, flags);
        for (auto& row : sub.rows) {
            row.eps = flags.eps;
            if (row.seed == 0) row.seed = flags.seed;
        }
        rep.merge(sub);
    }

    const std::string csv = rep.to_csv();
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << csv;
        std::cout << "wrote " << out_path << " (" << rep.rows.size() << " rows)\n";
    }
    return rep.all_ok() ? 0 : 1;
}

int cmd_css(const std::string& path, int k, const std::string& out_prefix,
            const CommonFlags& flags) {
    const SimplicialComplex M = load_complex(path);
    const CssCode code = css_code(M, k, flags.search());

    const std::string base = out_prefix.empty() ? family_of(path) : out_prefix;
    write_check_matrix(code.h_x, base + "_hx.txt");
    write_check_matrix(code.h_z, base + "_hz.txt");

    std::cout << "[[" << code.qubits << ", " << code.logical_qubits << ", " << code.d_x.weight
              << ", " << code.d_z.weight << "]]"
              << " d_x_" << (code.d_x.certified ? "certified" : "upper_bound") << " d_z_"
              << (code.d_z.certified ? "certified" : "upper_bound")
              << " orthogonality=" << (code.orthogonal ? "pass" : "FAIL") << "\n";
    std::cout << "wrote " << base << "_hx.txt, " << base << "_hz.txt\n";
    return code.orthogonal ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mod-2 systolic invariants of finite simplicial complexes"};
    app.require_subcommand(1);

    CommonFlags flags;

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a family instance");
    std::string gen_family, gen_a, gen_b, gen_input, gen_out;
    int gen_k = 4, gen_m = 6, gen_p = 4, gen_n = 3, gen_t = 1;
    gen_cmd->add_option("family", gen_family,
                        "grid-torus | cycle | rp2 | s1-x-sphere | connected-sum | subdivide")
        ->required();
    gen_cmd->add_option("--k", gen_k, "grid size");
    gen_cmd->add_option("--m", gen_m, "cycle length");
    gen_cmd->add_option("--p", gen_p, "circle length of the product");
    gen_cmd->add_option("--n", gen_n, "ambient dimension of the product");
    gen_cmd->add_option("--t", gen_t, "subdivision iterations");
    gen_cmd->add_option("--a", gen_a, "first summand (json)");
    gen_cmd->add_option("--b", gen_b, "second summand (json)");
    gen_cmd->add_option("--input", gen_input, "input complex (json)");
    gen_cmd->add_option("-o,--output", gen_out, "output path")->required();

    // invariants
    auto* inv_cmd = app.add_subcommand("invariants", "systoles and cutting areas");
    std::string inv_file, inv_alpha;
    int inv_k = 1;
    inv_cmd->add_option("file", inv_file, "complex (json)")->required();
    inv_cmd->add_option("--k", inv_k, "class dimension");
    inv_cmd->add_option("--alpha-support", inv_alpha,
                        "explicit cocycle support (comma-separated simplex indices)");
    add_common(inv_cmd, flags);

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "lemma and inequality suites");
    std::vector<std::string> ver_files;
    std::string ver_family, ver_suite = "all", ver_out;
    int ver_kmin = 3, ver_kmax = 6;
    ver_cmd->add_option("files", ver_files, "complex files (json)");
    ver_cmd->add_option("--family", ver_family, "sweep family (grid-torus | rp2)");
    ver_cmd->add_option("--k-min", ver_kmin, "sweep start");
    ver_cmd->add_option("--k-max", ver_kmax, "sweep end");
    ver_cmd->add_option("--suite", ver_suite, "all | lemmas | theorem | multiclass")
        ->check(CLI::IsMember({"all", "lemmas", "theorem", "multiclass"}));
    ver_cmd->add_option("-o,--output", ver_out, "CSV output path");
    add_common(ver_cmd, flags);

    // css
    auto* css_cmd = app.add_subcommand("css", "check matrices from the chain complex");
    std::string css_file, css_out;
    int css_k = 1;
    css_cmd->add_option("file", css_file, "complex (json)")->required();
    css_cmd->add_option("--k", css_k, "qubit dimension");
    css_cmd->add_option("-o,--output", css_out, "output prefix");
    add_common(css_cmd, flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_cmd->parsed())
            return cmd_gen(gen_family, gen_k, gen_m, gen_p, gen_n, gen_t, gen_a, gen_b,
                           gen_input, gen_out);
        if (inv_cmd->parsed()) return cmd_invariants(inv_file, inv_k, inv_alpha, flags);
        if (ver_cmd->parsed())
            return cmd_verify(ver_files, ver_family, ver_kmin, ver_kmax, ver_suite, ver_out,
                              flags);
        if (css_cmd->parsed()) return cmd_css(css_file, css_k, css_out, flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
