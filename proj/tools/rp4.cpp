// rp4 — generate, verify, and transform the triangulations and designs
// provided by this library. All reports are line-oriented key=value text;
// "-" means stdin/stdout. Exit codes: 0 success/true, 1 check failed/false,
// 2 usage or malformed input.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "rp4/constructions.hpp"
#include "rp4/designs.hpp"
#include "rp4/flips.hpp"
#include "rp4/homology.hpp"
#include "rp4/io.hpp"
#include "rp4/manifold.hpp"
#include "rp4/symmetry.hpp"

using namespace rp4;

namespace {

struct CheckFailed {};   // reported condition is false -> exit 1
struct UsageError {      // bad input -> exit 2
    std::string msg;
};

void emit(const std::string& path, const SimplicialComplex& c, bool bracket,
          const std::string& inv_comment = "") {
    if (path == "-") {
        bracket ? write_bracket(std::cout, c) : write_fl(std::cout, c);
        if (!inv_comment.empty() && !bracket)
            std::cout << "# inv " << inv_comment << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError{"cannot open " + path + " for writing"};
    bracket ? write_bracket(out, c) : write_fl(out, c);
    if (!inv_comment.empty() && !bracket) out << "# inv " << inv_comment << "\n";
}

SimplicialComplex generate(const std::string& name, const std::string& stages_dir,
                           bool bracket, std::string* inv_comment) {
    auto dump = [&](const std::string& stem, const SimplicialComplex& c) {
        if (stages_dir.empty()) return;
        std::filesystem::create_directories(stages_dir);
        emit(stages_dir + "/" + stem + (bracket ? ".brk" : ".fl"), c, bracket);
    };

    if (name == "x6" || name == "x12" || name == "x32" || name == "s4-32" ||
        name == "rp4-c1") {
        auto art = c1_pipeline();
        dump("x6", art.x6);
        dump("x12", art.x12);
        dump("x32", art.x32);
        dump("s4-32", art.s4_32);
        dump("rp4-c1", art.rp4);
        if (name == "x32" || name == "s4-32") *inv_comment = art.sigma.to_cycles();
        if (name == "x6") return art.x6;
        if (name == "x12") return art.x12;
        if (name == "x32") return art.x32;
        if (name == "s4-32") return art.s4_32;
        return art.rp4;
    }
    if (name == "rp4-c2") {
        auto art = c2_pipeline();
        dump("x1-boundary", art.x1_boundary);
        dump("x2-boundary", art.x2_boundary);
        dump("x3-boundary", art.x3_boundary);
        dump("rp4-c2", art.rp4);
        return art.rp4;
    }
    if (name == "rp4-c3") {
        auto art = c3_pipeline();
        dump("boundary-pre-quotient", art.pre_quotient_boundary);
        dump("rp4-c3", art.rp4);
        return art.rp4;
    }
    if (name == "rp4-k6") return rp4_from_k6(build_k6());
    if (name == "rp2-6") return rp2_6();
    if (name == "rp3-11") return rp3_11();
    if (name.rfind("kuehnel:", 0) == 0) return kuehnel_rp(std::stoi(name.substr(8)));
    if (name.rfind("simplex:", 0) == 0) return simplex_boundary(std::stoi(name.substr(8)));
    if (name.rfind("crosspoly:", 0) == 0)
        return cross_polytope_boundary(std::stoi(name.substr(10)));
    throw UsageError{"unknown generator '" + name + "'"};
}

std::string csv(const std::vector<long long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

template <typename T>
std::string csv_sizes(const std::vector<T>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"triangulations of projective spaces and the related designs"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker cap for parallel checks (0 = all cores)");

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a named complex");
    std::string gen_name, gen_out = "-", stages_dir;
    bool gen_bracket = false;
    gen->add_option("name", gen_name,
                    "x6|x12|x32|s4-32|rp4-c1|rp4-c2|rp4-c3|rp4-k6|rp2-6|rp3-11|"
                    "kuehnel:<n>|simplex:<n>|crosspoly:<n>")
        ->required();
    gen->add_option("-o,--out", gen_out, "output file");
    gen->add_flag("--bracket", gen_bracket, "write bracket format");
    gen->add_option("--stages", stages_dir, "also dump intermediate complexes here");

    // ---- fvector ----
    auto* fv = app.add_subcommand("fvector", "face counts and Euler characteristic");
    std::string fv_file;
    fv->add_option("file", fv_file)->required();

    // ---- homology ----
    auto* hom = app.add_subcommand("homology", "integer simplicial homology");
    std::string hom_file;
    hom->add_option("file", hom_file)->required();

    // ---- aut ----
    auto* aut = app.add_subcommand("aut", "automorphism group of the facet set");
    std::string aut_file;
    aut->add_option("file", aut_file)->required();

    // ---- iso ----
    auto* iso = app.add_subcommand("iso", "isomorphism test; exit 0 with a bijection");
    std::string iso_a, iso_b;
    iso->add_option("a", iso_a)->required();
    iso->add_option("b", iso_b)->required();

    // ---- manifold ----
    auto* man = app.add_subcommand("manifold", "certify every vertex link");
    std::string man_file;
    std::uint64_t man_seed = 1;
    man->add_option("file", man_file)->required();
    man->add_option("--seed", man_seed, "seed for link reductions");

    // ---- antipodal ----
    auto* anti = app.add_subcommand("antipodal", "check a link-separating involution");
    std::string anti_file, anti_inv;
    anti->add_option("file", anti_file)->required();
    anti->add_option("--inv", anti_inv, "involution in cycle notation")->required();

    // ---- quotient ----
    auto* quo = app.add_subcommand("quotient", "antipodal quotient");
    std::string quo_file, quo_inv, quo_out = "-";
    bool quo_bracket = false;
    quo->add_option("file", quo_file)->required();
    quo->add_option("--inv", quo_inv, "involution in cycle notation")->required();
    quo->add_option("-o,--out", quo_out, "output file");
    quo->add_flag("--bracket", quo_bracket, "write bracket format");

    // ---- reduce ----
    auto* red = app.add_subcommand("reduce", "bistellar f-vector reduction");
    std::string red_file, red_out, red_trace;
    ReduceOptions ropts;
    red->add_option("file", red_file)->required();
    red->add_option("--seed", ropts.seed, "deterministic seed");
    red->add_option("--budget", ropts.budget, "steps per restart");
    red->add_option("--restarts", ropts.restarts, "independently seeded searches");
    red->add_option("-o,--out", red_out, "write the final complex here");
    red->add_option("--trace", red_trace, "write the move trace here");

    // ---- design ----
    auto* des = app.add_subcommand("design", "K6 designs and their verification");
    std::string des_name;
    bool des_table = false, des_verify = false, des_blocks = false;
    des->add_option("name", des_name, "k6|e|m|biplane-e|biplane-m|witt22")->required();
    des->add_flag("--table", des_table, "print the K6 label tables");
    des->add_flag("--verify", des_verify, "verify the design parameters");
    des->add_flag("--blocks", des_blocks, "print the blocks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return 0;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (*gen) {
        std::string inv_comment;
        auto c = generate(gen_name, stages_dir, gen_bracket, &inv_comment);
        emit(gen_out, c, gen_bracket, inv_comment);
        return 0;
    }
    if (*fv) {
        auto c = read_complex_file(fv_file);
        FVector f = f_vector(c);
        std::cout << "f=" << csv(f.counts) << "\n";
        std::cout << "chi=" << f.euler() << "\n";
        return 0;
    }
    if (*hom) {
        auto c = read_complex_file(hom_file);
        auto h = homology(c, jobs);
        for (std::size_t k = 0; k < h.size(); ++k)
            std::cout << "H_" << k << " = " << to_string(h[k]) << "\n";
        return 0;
    }
    if (*aut) {
        auto c = read_complex_file(aut_file);
        auto g = automorphism_group(c);
        std::cout << "order=" << g.order << "\n";
        for (const auto& gen_map : g.generators)
            std::cout << "gen " << cycles_string(gen_map) << "\n";
        std::cout << "vertex_orbits=" << csv_sizes(g.vertex_orbit_sizes()) << "\n";
        std::cout << "facet_orbits=" << csv_sizes(g.facet_orbit_sizes()) << "\n";
        return 0;
    }
    if (*iso) {
        auto a = read_complex_file(iso_a);
        auto b = read_complex_file(iso_b);
        auto bij = are_isomorphic(a, b);
        if (!bij) {
            std::cout << "isomorphic=false\n";
            throw CheckFailed{};
        }
        std::cout << "isomorphic=true\n";
        for (const auto& [x, y] : *bij) std::cout << "map " << x << " " << y << "\n";
        return 0;
    }
    if (*man) {
        auto c = read_complex_file(man_file);
        auto pm = is_closed_pseudomanifold(c);
        std::cout << "pseudomanifold=" << (pm.ok ? "true" : "false") << "\n";
        if (!pm.ok) {
            if (pm.bad_ridge)
                std::cout << "bad_ridge=" << to_string(*pm.bad_ridge)
                          << " degree=" << pm.bad_ridge_degree << "\n";
            throw CheckFailed{};
        }
        SphereCheckOptions opts;
        opts.jobs = jobs;
        opts.reduce.seed = man_seed;
        auto rep = check_combinatorial_manifold(c, opts);
        for (const auto& l : rep.links)
            std::cout << "link v=" << l.vertex << " status=" << to_string(l.status)
                      << " detail=\"" << l.detail << "\"\n";
        std::cout << "manifold=" << (rep.all_certified ? "true" : "false") << "\n";
        if (!rep.all_certified) throw CheckFailed{};
        return 0;
    }
    if (*anti) {
        auto c = read_complex_file(anti_file);
        Involution inv;
        try {
            inv = Involution::parse_cycles(anti_inv);
        } catch (const std::invalid_argument& e) {
            throw UsageError{e.what()};
        }
        auto rep = is_antipodal(c, inv);
        std::cout << "antipodal=" << (rep.ok ? "true" : "false") << "\n";
        std::cout << "failure=" << to_string(rep.failure) << "\n";
        if (rep.failure == AntipodalFailure::None ||
            rep.failure == AntipodalFailure::NotLinkSeparating)
            std::cout << "min_distance=" << rep.min_distance << "\n";
        if (rep.witness.first)
            std::cout << "witness=" << rep.witness.first << "," << rep.witness.second
                      << "\n";
        if (!rep.ok) throw CheckFailed{};
        return 0;
    }
    if (*quo) {
        auto c = read_complex_file(quo_file);
        Involution inv;
        try {
            inv = Involution::parse_cycles(quo_inv);
        } catch (const std::invalid_argument& e) {
            throw UsageError{e.what()};
        }
        try {
            emit(quo_out, quotient(c, inv), quo_bracket);
        } catch (const QuotientError& e) {
            std::cout << "failure=" << to_string(e.kind) << "\n";
            std::cerr << "error: " << e.what() << "\n";
            throw CheckFailed{};
        }
        return 0;
    }
    if (*red) {
        auto c = read_complex_file(red_file);
        ropts.jobs = jobs;
        auto rep = reduce(c, ropts);
        std::cout << "certified=" << (rep.certified ? "true" : "false") << "\n";
        std::cout << "seed=" << rep.winning_seed << "\n";
        std::cout << "moves=" << rep.moves_applied << "\n";
        std::cout << "f=" << csv(f_vector(rep.final_complex).counts) << "\n";
        if (!red_out.empty()) emit(red_out, rep.final_complex, false);
        if (!red_trace.empty()) {
            std::ofstream t(red_trace);
            if (!t) throw UsageError{"cannot open " + red_trace};
            for (const auto& m : rep.trace) t << to_string(m) << "\n";
        }
        return 0;
    }
    if (*des) {
        auto k6 = build_k6();
        auto print_blocks = [](const Design& d) {
            for (const auto& block : d.blocks) {
                for (std::size_t i = 0; i < block.size(); ++i)
                    std::cout << (i ? " " : "") << point_name(block[i]);
                std::cout << "\n";
            }
        };
        auto verify_and_report = [&](const Design& d, int t, int v, int k, int l) {
            auto chk = verify_design(d, t, v, k, l, jobs);
            std::cout << "design=" << t << "-(" << v << "," << k << "," << l << ")"
                      << " ok=" << (chk.ok ? "true" : "false") << "\n";
            if (!chk.ok && chk.counterexample) {
                std::cout << "counterexample=";
                for (std::size_t i = 0; i < chk.counterexample->size(); ++i)
                    std::cout << (i ? "," : "") << point_name((*chk.counterexample)[i]);
                std::cout << " count=" << chk.count_at_counterexample << "\n";
            }
            if (!chk.ok) throw CheckFailed{};
        };

        if (des_name == "k6") {
            std::cout << "# edge labels\n";
            for (const auto& e : k6.edges) {
                std::cout << point_name(e.u) << point_name(e.v) << " =";
                for (int b : e.label)
                    std::cout << " " << point_name(K6Structure::bisection_id(b));
                std::cout << "\n";
            }
            if (des_table) {
                std::cout << "# matchings\n";
                for (const auto& m : k6.matchings) {
                    for (int ei : m.edge_idx)
                        std::cout << point_name(k6.edges[ei].u) << point_name(k6.edges[ei].v)
                                  << " ";
                    std::cout << "=";
                    for (int b : m.label)
                        std::cout << " " << point_name(K6Structure::bisection_id(b));
                    std::cout << "\n";
                }
                std::cout << "# factorizations\n";
                for (std::size_t f = 0; f < k6.factorizations.size(); ++f) {
                    std::cout << point_name(K6Structure::factorization_id(static_cast<int>(f)))
                              << " = matchings";
                    for (int m : k6.factorizations[f]) std::cout << " " << m;
                    std::cout << "\n";
                }
                std::cout << "# dual edge labels m(f,g)\n";
                for (int f = 0; f < 6; ++f)
                    for (int g = f + 1; g < 6; ++g) {
                        int m = k6.common_matching(f, g);
                        std::cout << point_name(K6Structure::factorization_id(f))
                                  << point_name(K6Structure::factorization_id(g)) << " =";
                        for (int b : k6.matchings[m].label)
                            std::cout << " " << point_name(K6Structure::bisection_id(b));
                        std::cout << "\n";
                    }
            }
            return 0;
        }
        if (des_name == "e" || des_name == "m") {
            Design d = des_name == "e" ? design_e(k6) : design_m(k6);
            if (des_blocks) print_blocks(d);
            if (des_verify || !des_blocks) verify_and_report(d, 2, 10, 4, 2);
            return 0;
        }
        if (des_name == "biplane-e" || des_name == "biplane-m") {
            Design d = des_name == "biplane-e" ? biplane_e(k6) : biplane_m(k6);
            if (des_blocks) print_blocks(d);
            if (des_verify || !des_blocks) verify_and_report(d, 2, 16, 6, 2);
            return 0;
        }
        if (des_name == "witt22") {
            Design d = witt22(k6);
            if (des_blocks) print_blocks(d);
            if (des_verify || !des_blocks) verify_and_report(d, 3, 22, 6, 1);
            return 0;
        }
        throw UsageError{"unknown design '" + des_name + "'"};
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CheckFailed&) {
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.msg << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
