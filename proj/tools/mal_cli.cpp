#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mal/cubical.hpp"
#include "mal/errors.hpp"
#include "mal/euler_poly.hpp"
#include "mal/examples.hpp"
#include "mal/io.hpp"
#include "mal/koszul.hpp"
#include "mal/moment_angle.hpp"
#include "mal/reports.hpp"
#include "mal/simplicial_complex.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct CommonOpts {
    std::string input;
    std::string example;
    std::string format = "text";
    std::string output;
    int jobs = 1;
    int max_m = 0;  // 0 = defaults
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("-i,--input", o.input, "Facet file: one facet per line, 1-based indices");
    cmd->add_option("--example", o.example,
                    "Built-in complex, e.g. torus9, boundary-simplex:3, points:3, cyclic:4,7, "
                    "random:6,42");
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("-o,--output", o.output, "Write output to this path instead of stdout");
    cmd->add_option("-j,--jobs", o.jobs, "Worker threads for per-bidegree ranks")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-m", o.max_m, "Override all vertex-count caps")
        ->check(CLI::PositiveNumber);
}

mal::SimplicialComplex load(const CommonOpts& o) {
    if (o.input.empty() == o.example.empty())
        throw mal::InputError("exactly one of --input and --example is required");
    if (!o.example.empty()) return mal::examples::by_name(o.example);
    if (o.input == "-") return mal::io::parse_facets(std::cin);
    return mal::io::load_complex(o.input);
}

mal::MomentAngleCaps caps_for(const CommonOpts& o) {
    mal::MomentAngleCaps caps;
    int cap = o.max_m;
    if (cap == 0)
        if (const char* env = std::getenv("MAL_MAX_M")) cap = std::atoi(env);
    if (cap > 0) caps.max_m_zk = caps.max_m_wk = caps.max_m_hochster = cap;
    return caps;
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw mal::InputError("cannot write '" + o.output + "'");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

void reject_full_simplex(const mal::SimplicialComplex& K) {
    if (K.is_full_simplex()) throw mal::FullSimplexError(K.m());
}

std::string render_betti_text(const mal::BigradedBettiTable& t) {
    std::ostringstream os;
    os << "bigraded Betti numbers (m=" << t.m << ", n=" << t.n << ")\n";
    os << "  q    2p   b\n";
    for (const auto& [d, v] : t.b) {
        if (v == 0) continue;
        os << "  " << d.q << "    " << 2 * d.p << "   " << v << "\n";
    }
    os << "ordinary Betti numbers:";
    for (const auto& [k, v] : t.ordinary()) os << " b" << k << "=" << v;
    os << "\n";
    return os.str();
}

std::string render_report_text(const mal::VerificationReport& rep) {
    std::ostringstream os;
    for (const auto& c : rep.checks) {
        const char* status = c.status == mal::CheckStatus::Pass   ? "PASS"
                             : c.status == mal::CheckStatus::Fail ? "FAIL"
                                                                  : "SKIP";
        os << status << "  " << c.name << "  [" << c.citation << "]\n";
        if (c.status == mal::CheckStatus::Fail)
            os << "      lhs: " << c.lhs << "\n      rhs: " << c.rhs << "\n";
    }
    return os.str();
}

mal::BigradedBettiTable betti_by_method(const std::string& method, const std::string& space,
                                        const mal::SimplicialComplex& K,
                                        const mal::MomentAngleCaps& caps, int jobs) {
    if (space != "zk" && method != "cellular")
        throw mal::InputError("--method " + method + " is only available for --space zk");
    if (method == "cellular") {
        if (space == "zk") return mal::bigraded_betti(mal::build_zk_complex(K, caps), jobs);
        if (space == "wk") return mal::bigraded_betti(mal::build_wk_complex(K, caps), jobs);
        return mal::bigraded_betti(mal::build_zk_rel_torus(K, caps), jobs);
    }
    if (method == "koszul") return mal::tor_dimensions(mal::build_koszul_complex(K), jobs);
    return mal::hochster_oracle(K, caps);
}

int run(int argc, char** argv) {
    CLI::App app{"Moment-angle complex laboratory: bigraded Betti numbers, "
                 "generating polynomials and combinatorial identity checks"};
    app.require_subcommand(1);

    CommonOpts o;

    auto* cmd_f = app.add_subcommand("fvector", "Face-count vector of K");
    add_common(cmd_f, o);
    auto* cmd_h = app.add_subcommand("hvector", "h-vector of K");
    add_common(cmd_h, o);

    auto* cmd_betti = app.add_subcommand("betti", "Bigraded Betti numbers");
    std::string space = "zk", method = "cellular";
    bool compare = false;
    add_common(cmd_betti, o);
    cmd_betti->add_option("--space", space, "Which space")
        ->check(CLI::IsMember({"zk", "wk", "zk-rel-torus"}));
    cmd_betti->add_option("--method", method, "Pipeline")
        ->check(CLI::IsMember({"cellular", "koszul", "hochster"}));
    cmd_betti->add_flag("--compare", compare, "Run cellular and the chosen method, diff tables");

    auto* cmd_verify = app.add_subcommand("verify", "Run the identity suite");
    mal::Attestation attest;
    add_common(cmd_verify, o);
    cmd_verify->add_flag("--sphere", attest.sphere, "Attest that |K| is a sphere");
    cmd_verify->add_flag("--manifold", attest.manifold, "Attest that |K| is a closed manifold");
    cmd_verify->add_flag("--orientable", attest.orientable, "Attest orientability");

    auto* cmd_glb = app.add_subcommand("glb", "Lower-bound inequality report");
    add_common(cmd_glb, o);

    auto* cmd_poly = app.add_subcommand("euler-poly", "Euler-characteristic generating polynomial");
    std::string poly_space = "zk", poly_method = "both";
    add_common(cmd_poly, o);
    cmd_poly->add_option("--space", poly_space, "Which space")
        ->check(CLI::IsMember({"zk", "wk", "zk-rel-torus"}));
    cmd_poly->add_option("--method", poly_method, "direct = count cells, closed = h-vector formula")
        ->check(CLI::IsMember({"direct", "closed", "both"}));

    auto* cmd_arr = app.add_subcommand("arrangement",
                                       "Coordinate subspace arrangement of K and its complement");
    add_common(cmd_arr, o);

    auto* cmd_off = app.add_subcommand("off", "OFF dump of the embedded cubical complex");
    std::string off_kind = "cub";
    add_common(cmd_off, o);
    cmd_off->add_option("--kind", off_kind, "cub = |K| itself, cc = the cone over it")
        ->check(CLI::IsMember({"cub", "cc"}));

    CLI11_PARSE(app, argc, argv);

    const mal::SimplicialComplex K = load(o);
    const mal::MomentAngleCaps caps = caps_for(o);
    const bool json = o.format == "json";

    if (cmd_f->parsed() || cmd_h->parsed()) {
        const auto f = K.f_vector();
        const auto h = K.h_vector();
        if (json) {
            std::ostringstream os;
            os << "{\"m\": " << K.m() << ", \"n\": " << K.n() << ", \""
               << (cmd_f->parsed() ? "f" : "h") << "\": "
               << (cmd_f->parsed() ? f.to_string() : h.to_string()) << "}";
            std::string s = os.str();
            for (auto& ch : s)
                if (ch == '(') ch = '['; else if (ch == ')') ch = ']';
            emit(o, s);
        } else {
            emit(o, cmd_f->parsed() ? "f = " + f.to_string() : "h = " + h.to_string());
        }
        return kExitOk;
    }

    if (cmd_betti->parsed()) {
        reject_full_simplex(K);
        const auto table = betti_by_method(method, space, K, caps, o.jobs);
        if (compare) {
            const auto cellular = betti_by_method("cellular", space, K, caps, o.jobs);
            if (cellular != table) {
                emit(o, "tables differ:\ncellular:\n" + render_betti_text(cellular) +
                            method + ":\n" + render_betti_text(table));
                return kExitVerifyFailed;
            }
            emit(o, json ? mal::io::betti_table_to_json(table)
                         : "tables agree\n" + render_betti_text(table));
            return kExitOk;
        }
        emit(o, json ? mal::io::betti_table_to_json(table) : render_betti_text(table));
        return kExitOk;
    }

    if (cmd_verify->parsed()) {
        reject_full_simplex(K);
        const auto status = K.manifold_status(attest.manifold || attest.sphere);
        const auto rep = mal::verify_identities(K, status, attest, caps, o.jobs);
        emit(o, json ? mal::io::report_to_json(rep) : render_report_text(rep));
        return rep.all_passed() ? kExitOk : kExitVerifyFailed;
    }

    if (cmd_glb->parsed()) {
        reject_full_simplex(K);
        const auto rep = mal::glb_report(K, caps, o.jobs);
        emit(o, json ? mal::io::report_to_json(rep) : render_report_text(rep));
        return rep.all_passed() ? kExitOk : kExitVerifyFailed;
    }

    if (cmd_poly->parsed()) {
        reject_full_simplex(K);
        const auto sp = mal::space_from_name(poly_space);
        std::ostringstream os;
        if (poly_method == "direct" || poly_method == "both") {
            const auto direct = mal::euler_poly_direct(sp, K, caps);
            os << (json ? mal::io::euler_poly_to_json(direct, poly_space)
                        : "direct: " + direct.to_string() + "\n");
        }
        if (poly_method == "closed" || poly_method == "both") {
            const auto closed = mal::euler_poly_closed(sp, K);
            if (json && poly_method == "both") os << "\n";
            os << (json ? mal::io::euler_poly_to_json(closed, poly_space)
                        : "closed: " + closed.to_string() + "\n");
        }
        if (poly_method == "both") {
            const bool same =
                mal::euler_poly_direct(sp, K, caps).chi == mal::euler_poly_closed(sp, K).chi;
            if (!json) os << (same ? "direct = closed\n" : "MISMATCH\n");
            emit(o, os.str());
            return same ? kExitOk : kExitVerifyFailed;
        }
        emit(o, os.str());
        return kExitOk;
    }

    if (cmd_arr->parsed()) {
        const auto a = mal::arrangement_descriptor(K, caps, o.jobs);
        if (json) {
            std::ostringstream os;
            os << "{\"m\": " << a.m << ", \"planes\": [";
            for (std::size_t i = 0; i < a.maximal_planes.size(); ++i) {
                if (i) os << ", ";
                os << "{\"zero_coords\": [";
                const auto vs = a.maximal_planes[i].vertices();
                for (std::size_t k = 0; k < vs.size(); ++k) os << (k ? ", " : "") << vs[k];
                os << "], \"dim\": " << a.plane_dims[i] << "}";
            }
            os << "], \"complement_euler\": " << a.complement_euler
               << ",\n\"complement_betti\": " << mal::io::betti_table_to_json(a.complement_betti)
               << "}";
            emit(o, os.str());
        } else {
            std::ostringstream os;
            os << "arrangement in C^" << a.m << " with " << a.maximal_planes.size()
               << " maximal plane(s):\n";
            for (std::size_t i = 0; i < a.maximal_planes.size(); ++i)
                os << "  z_i = 0 for i in " << a.maximal_planes[i].to_string() << "  (dim "
                   << a.plane_dims[i] << ")\n";
            os << "complement Euler characteristic: " << a.complement_euler << "\n";
            os << "complement " << render_betti_text(a.complement_betti);
            emit(o, os.str());
        }
        return kExitOk;
    }

    if (cmd_off->parsed()) {
        const auto C = off_kind == "cub" ? mal::cub(K) : mal::cc(K);
        std::ostringstream os;
        C.write_off(os);
        emit(o, os.str());
        return kExitOk;
    }

    return kExitInput;  // unreachable: require_subcommand(1)
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mal::FullSimplexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const mal::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const mal::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInput;
    }
}
