#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hk/fixtures.hpp"
#include "hk/json_io.hpp"
#include "hk/version.hpp"

namespace {

using hk::Json;

struct Ctx {
    std::string format = "json";
    long seed = 0;  // recorded only; scheduling hint, never affects results
    Json arguments = Json::object();
    Json inputs = Json::object();
    std::string command;
    std::string outcome = "ok";
    Json payload = Json::object();
    int exit_code = 0;
};

long max_sym_dim() {
    if (const char* env = std::getenv("HK_MAX_DIM")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100000;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hk::MalformedInput("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw hk::MalformedInput(what + ": " + e.what());
    }
}

// --lattice accepts a JSON file path or a fixture name from the catalog.
hk::Lattice load_lattice_arg(Ctx& ctx, const std::string& spec) {
    std::ifstream probe(spec);
    hk::Lattice lat;
    if (probe.good()) {
        probe.close();
        std::string bytes = read_file(spec);
        lat = hk::lattice_from_json(parse_json(bytes, spec), "lattice");
        ctx.inputs["lattice"] = hk::fnv1a_hex(bytes);
    } else {
        lat = hk::load_fixture(spec);
        ctx.inputs["lattice"] = hk::fnv1a_hex(hk::lattice_to_json(lat).dump());
    }
    hk::check_symmetric(lat);
    return lat;
}

hk::IntVec parse_vec_arg(const std::string& text, const std::string& what) {
    return hk::intvec_from_json(parse_json(text, what), what);
}

hk::GaussVec parse_tau_arg(const std::string& text) {
    return hk::gaussvec_from_json(parse_json(text, "tau"), "tau");
}

hk::RatMat load_matrix_arg(Ctx& ctx, const std::string& path) {
    std::string bytes = read_file(path);
    ctx.inputs["matrix"] = hk::fnv1a_hex(bytes);
    Json j = parse_json(bytes, path);
    if (j.is_object() && j.contains("matrix")) j = j["matrix"];
    return hk::ratmat_from_json(j, "matrix");
}

hk::IntMat to_int_mat(const hk::RatMat& m, const std::string& what) {
    hk::IntMat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                throw hk::MalformedInput(what + ": entries must be integers");
            out(i, j) = m(i, j).get_num();
        }
    return out;
}

Json search_payload(const hk::SearchResult& r) {
    Json p;
    switch (r.status) {
        case hk::SearchStatus::Found:
            p["result"] = "found";
            p["vector"] = hk::intvec_to_json(*r.vector);
            break;
        case hk::SearchStatus::NotFoundWithinBound:
            p["result"] = "not_found";
            break;
        case hk::SearchStatus::NonexistenceProved:
            p["result"] = "nonexistence";
            break;
    }
    return p;
}

void apply_search_outcome(Ctx& ctx, const hk::SearchResult& r) {
    ctx.payload = search_payload(r);
    if (r.status == hk::SearchStatus::NotFoundWithinBound) {
        ctx.outcome = "not_found";
        ctx.exit_code = 2;
    }
}

void emit(const Ctx& ctx) {
    Json envelope;
    envelope["command"] = ctx.command;
    envelope["arguments"] = ctx.arguments;
    envelope["inputs"] = ctx.inputs;
    envelope["version"] = hk::kVersion;
    envelope["outcome"] = ctx.outcome;
    envelope["payload"] = ctx.payload;
    if (ctx.format == "text") {
        std::cout << "hk " << ctx.command << " (v" << hk::kVersion << ")\n"
                  << "outcome: " << ctx.outcome << "\n"
                  << ctx.payload.dump(2) << "\n";
    } else {
        std::cout << envelope.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic lattice certificates"};
    app.require_subcommand(1);

    Ctx ctx;
    app.add_option("--format", ctx.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", ctx.seed, "work scheduling seed (results unaffected)");

    std::string lattice_arg, delta_arg, v_arg, l_arg, alpha_arg, tau_arg, pol_arg, x_arg;
    std::string matrix_path, oracle_path, gens_path;
    long height = 4, budget = 10, depth = 1;
    int n = 1;
    bool bb = false, nilpotent = false, check_vanishing = false;

    std::function<void()> action;

    auto* sig = app.add_subcommand("sig", "signature of a lattice");
    sig->add_option("--lattice", lattice_arg)->required();
    sig->callback([&] {
        action = [&] {
            hk::Lattice lat = load_lattice_arg(ctx, lattice_arg);
            hk::Signature s = hk::signature(lat);
            ctx.payload["signature"] = Json::array({s.positive, s.negative});
        };
    });

    auto* validate = app.add_subcommand("validate", "check symmetry, nondegeneracy, signature");
    validate->add_option("--lattice", lattice_arg)->required();
    validate->add_flag("--bb", bb, "also require signature (3, rank-3)");
    validate->callback([&] {
        action = [&] {
            hk::Lattice lat = load_lattice_arg(ctx, lattice_arg);
            try {
                hk::validate_lattice(lat, bb);
                ctx.payload["valid"] = true;
                hk::Signature s = hk::signature(lat);
                ctx.payload["signature"] = Json::array({s.positive, s.negative});
            } catch (const hk::ValidationFailed& e) {
                ctx.payload["valid"] = false;
                ctx.payload["reason"] = e.what();
                ctx.outcome = "invalid";
                ctx.exit_code = 1;
            }
        };
    });

    auto* isotropic = app.add_subcommand("isotropic", "search for a primitive isotropic vector");
    isotropic->add_option("--lattice", lattice_arg)->required();
    isotropic->add_option("--height", height, "max-norm bound");
    isotropic->callback([&] {
        action = [&] {
            hk::Lattice lat = load_lattice_arg(ctx, lattice_arg);
            apply_search_outcome(ctx, hk::find_isotropic(lat, height));
        };
    });

    auto* polarize = app.add_subcommand("polarize", "positive class orthogonal to delta");
    polarize->add_option("--lattice", lattice_arg)->required();
    polarize->add_option("--delta", delta_arg)->required();
    polarize->add_option("--height", height);
    polarize->callback([&] {
        action = [&] {
            hk::Lattice lat = load_lattice_arg(ctx, lattice_arg);
            hk::IntVec delta = parse_vec_arg(delta_arg, "delta");
            apply_search_outcome(ctx, hk::find_polarization(lat, delta, height));
        };
    });

    auto* transvect = app.add_subcommand("transvect", "Eichler transvection from delta and v");
    transvect->add_option("--lattice", lattice_arg)->required();
    transvect->add_option("--delta", delta_arg)->required();
    transvect->add_option("--v", v_arg)->required();
    transvect->callback([&] {
        action = [&] {
            hk::Lattice lat = load_lattice_arg(ctx, lattice_arg);
            hk::IntVec delta = parse_vec_arg(delta_arg, "delta");
            hk::IntVec v = parse_vec_arg(v_arg, "v");
            hk::Isometry t = hk::eichler_transvection(lat, delta, v);
            ctx.payload["matrix"] = hk::intmat_to_json(t.matrix);
            ctx.payload["fixes_delta"] = t.matrix.mul(delta) == delta;
            ctx.payload["unipotency_index"] = hk::unipotency_index(t).value_or(0);
            hk::RatMat p = hk::to_rat(t.matrix) - hk::RatMat::identity(t.rank());
            ctx.payload["jordan_type"] = hk::jordan_type(p, true).partition;
        };
    });

    auto* jordan = app.add_subcommand("jordan", "Jordan type from the exact rank sequence");
    jordan->add_option("--matrix", matrix_path)->required();
    jordan->add_flag("--nilpotent", nilpotent, "require the matrix to be nilpotent");
    jordan->callback([&] {
        action = [&] {
            hk::RatMat m = load_matrix_arg(ctx, matrix_path);
            ctx.payload["partition"] = hk::jordan_type(m, nilpotent).partition;
            ctx.payload["rank_sequence"] = hk::rank_sequence(m);
        };
    });

    auto* wfilt = app.add_subcommand("wfilt", "weight filtration of an index-2 unipotent isometry");
    wfilt->add_option("--matrix", matrix_path)->required();
    wfilt->add_option("--lattice", lattice_arg)->required();
    wfilt->callback([&] {
        action = [&] {
            hk::Lattice lat = load_lattice_arg(ctx, lattice_arg);
            hk::IntMat m = to_int_mat(load_matrix_arg(ctx, matrix_path), "matrix");
            hk::Isometry t = hk::check_isometry(lat, m);
            auto [wf, pc] = hk::weight_filtration_order2(t);
            ctx.payload["dim_w2"] = wf.dim_w2;
            ctx.payload["dim_w1"] = wf.dim_w1;
            Json w2 = Json::array(), w1 = Json::array();
            for (const auto& b : wf.w2_basis) w2.push_back(hk::intvec_to_json(b));
            for (const auto& b : wf.w1_basis) w1.push_back(hk::intvec_to_json(b));
            ctx.payload["w2_basis"] = w2;
            ctx.payload["w1_basis"] = w1;
            ctx.payload["rank_t_minus_id"] = pc.rank_t_minus_id;
            ctx.payload["parity_even"] = pc.even;
        };
    });

    auto* sympow = app.add_subcommand("sympow", "matrix of the induced action on degree-n monomials");
    sympow->add_option("--matrix", matrix_path)->required();
    sympow->add_option("--n", n)->required();
    sympow->callback([&] {
        action = [&] {
            hk::RatMat m = load_matrix_arg(ctx, matrix_path);
            bool integral = true;
            for (int i = 0; i < m.rows() && integral; ++i)
                for (int j = 0; j < m.cols(); ++j)
                    if (m(i, j).get_den() != 1) { integral = false; break; }
            ctx.payload["n"] = n;
            if (integral) {
                hk::IntMat s = hk::sym_power_operator(to_int_mat(m, "matrix"), n, max_sym_dim());
                ctx.payload["dim"] = s.rows();
                ctx.payload["matrix"] = hk::intmat_to_json(s);
            } else {
                hk::RatMat s = hk::sym_power_operator(m, n, max_sym_dim());
                ctx.payload["dim"] = s.rows();
                ctx.payload["matrix"] = hk::ratmat_to_json(s);
            }
        };
    });

    auto* powvanish = app.add_subcommand("powvanish", "isotropic power vanishing in the truncated ring");
    powvanish->add_option("--lattice", lattice_arg)->required();
    powvanish->add_option("--l", l_arg)->required();
    powvanish->add_option("--n", n)->required();
    powvanish->add_option("--budget", budget, "max sampling shells");
    powvanish->add_option("--x", x_arg, "non-isotropic class to test");
    powvanish->callback([&] {
        action = [&] {
            hk::Lattice lat = load_lattice_arg(ctx, lattice_arg);
            hk::IntVec l = parse_vec_arg(l_arg, "l");
            std::optional<hk::IntVec> x;
            if (!x_arg.empty()) x = parse_vec_arg(x_arg, "x");
            hk::PowerVanishingCertificate cert =
                hk::verbitsky_power_vanishing(lat, l, n, budget, x);
            ctx.payload["n"] = cert.n;
            ctx.payload["l"] = hk::intvec_to_json(cert.l);
            ctx.payload["sym_dim"] = cert.sym_dim;
            ctx.payload["ideal_dim"] = cert.ideal_dim;
            Json tr = Json::array();
            for (const auto& s : cert.transcript) {
                Json e;
                e["height"] = s.height;
                e["sampled"] = s.sampled;
                e["dim_after"] = s.dim_after;
                tr.push_back(e);
            }
            ctx.payload["transcript"] = tr;
            ctx.payload["l_pow_n_nonzero"] = cert.l_pow_n_nonzero;
            ctx.payload["l_pow_n_plus_1_zero"] = cert.l_pow_n1_zero;
            if (cert.x_pow_n1_nonzero)
                ctx.payload["x_pow_n_plus_1_nonzero"] = *cert.x_pow_n1_nonzero;
        };
    });

    auto* lrl = app.add_subcommand("lrl-cert", "large-radius-limit certificate pipeline");
    lrl->add_option("--lattice", lattice_arg)->required();
    lrl->add_option("--n", n)->required();
    lrl->add_option("--height", height);
    lrl->callback([&] {
        action = [&] {
            hk::Lattice lat = load_lattice_arg(ctx, lattice_arg);
            hk::LrlOutcome out = hk::large_radius_certificate(lat, n, height, max_sym_dim());
            if (out.status == hk::SearchStatus::Found) {
                ctx.payload = hk::lrl_certificate_to_json(*out.certificate);
                auto fail = hk::recheck_lrl(*out.certificate);
                ctx.payload["recheck"] = fail ? *fail : "ok";
            } else {
                ctx.payload["result"] = out.status == hk::SearchStatus::NonexistenceProved
                                            ? "nonexistence"
                                            : "not_found";
                ctx.payload["missing"] = out.missing;
                if (out.status == hk::SearchStatus::NotFoundWithinBound) {
                    ctx.outcome = "not_found";
                    ctx.exit_code = 2;
                }
            }
        };
    });

    auto* period = app.add_subcommand("period", "period-point membership");
    period->add_option("--lattice", lattice_arg)->required();
    period->add_option("--tau", tau_arg)->required();
    period->callback([&] {
        action = [&] {
            hk::Lattice lat = load_lattice_arg(ctx, lattice_arg);
            hk::GaussVec tau = parse_tau_arg(tau_arg);
            hk::PeriodDiagnostics d = hk::is_period_point(lat, tau);
            ctx.payload["is_period_point"] = d.is_period;
            ctx.payload["pair_tau_tau"] = Json::array(
                {hk::rat_to_string(d.pair_tau_tau.re), hk::rat_to_string(d.pair_tau_tau.im)});
            ctx.payload["pair_tau_conj"] = hk::rat_to_string(d.pair_tau_conj);
        };
    });

    auto* type11 = app.add_subcommand("type11", "(1,1)-type criterion for an integral class");
    type11->add_option("--lattice", lattice_arg)->required();
    type11->add_option("--tau", tau_arg)->required();
    type11->add_option("--alpha", alpha_arg)->required();
    type11->callback([&] {
        action = [&] {
            hk::Lattice lat = load_lattice_arg(ctx, lattice_arg);
            hk::GaussVec tau = parse_tau_arg(tau_arg);
            hk::IntVec alpha = parse_vec_arg(alpha_arg, "alpha");
            bool t11 = hk::is_type_11(lat, tau, alpha);
            hk::GaussRat p = hk::pair_c(lat, hk::to_gauss(alpha), tau);
            ctx.payload["is_type_11"] = t11;
            ctx.payload["pairing"] =
                Json::array({hk::rat_to_string(p.re), hk::rat_to_string(p.im)});
        };
    });

    auto* rrh = app.add_subcommand("rrh", "Euler characteristic from an intersection oracle");
    rrh->add_option("--n", n)->required();
    rrh->add_option("--oracle", oracle_path)->required();
    rrh->add_flag("--check-vanishing", check_vanishing);
    rrh->callback([&] {
        action = [&] {
            std::string bytes = read_file(oracle_path);
            ctx.inputs["oracle"] = hk::fnv1a_hex(bytes);
            hk::IntersectionOracle oracle =
                hk::oracle_from_json(parse_json(bytes, oracle_path));
            if (oracle.n != n)
                throw hk::MalformedInput("oracle n does not match --n");
            hk::ChiResult chi = hk::euler_characteristic(oracle, n);
            ctx.payload["chi"] = hk::rat_to_string(chi.chi);
            Json terms = Json::array();
            for (const auto& t : chi.terms) {
                Json e;
                e["k"] = t.k;
                e["value"] = hk::rat_to_string(t.value);
                e["truncated"] = t.truncated;
                terms.push_back(e);
            }
            ctx.payload["terms"] = terms;
            if (check_vanishing) {
                hk::VanishingReport rep = hk::vanishing_relation_check(oracle, n);
                Json entries = Json::array();
                for (const auto& e : rep.entries) {
                    Json v;
                    v["k"] = e.k;
                    v["value"] = hk::rat_to_string(e.value);
                    v["pass"] = e.pass;
                    entries.push_back(v);
                }
                ctx.payload["vanishing"] = entries;
                ctx.payload["vanishing_all_pass"] = rep.all_pass;
            }
        };
    });

    auto* cusps = app.add_subcommand("cusps", "isotropic-line classes under generator words");
    cusps->add_option("--lattice", lattice_arg)->required();
    cusps->add_option("--polarization", pol_arg);
    cusps->add_option("--gens", gens_path);
    cusps->add_option("--height", height);
    cusps->add_option("--depth", depth);
    cusps->callback([&] {
        action = [&] {
            hk::Lattice lat = load_lattice_arg(ctx, lattice_arg);
            std::optional<hk::IntVec> pol;
            if (!pol_arg.empty()) pol = parse_vec_arg(pol_arg, "polarization");
            std::vector<hk::Isometry> gens;
            if (!gens_path.empty()) {
                std::string bytes = read_file(gens_path);
                ctx.inputs["gens"] = hk::fnv1a_hex(bytes);
                Json j = parse_json(bytes, gens_path);
                if (j.is_object() && j.contains("generators")) j = j["generators"];
                if (!j.is_array()) throw hk::ValidationFailed("gens: expected array");
                for (size_t i = 0; i < j.size(); ++i)
                    gens.push_back(hk::Isometry{
                        lat, hk::intmat_from_json(j[i], "gens[" + std::to_string(i) + "]")});
            }
            hk::CuspPartition part =
                hk::cusp_orbit_partition(lat, pol, gens, height, int(depth));
            Json points = Json::array();
            for (const auto& p : part.points) points.push_back(hk::intvec_to_json(p));
            ctx.payload["points"] = points;
            Json classes = Json::array();
            for (const auto& cls : part.classes) classes.push_back(cls);
            ctx.payload["classes"] = classes;
            Json witnesses = Json::array();
            for (const auto& w : part.witnesses) {
                Json e;
                e["from"] = w.from;
                e["to"] = w.to;
                Json word = Json::array();
                for (int letter : w.word) {
                    std::string g = "g" + std::to_string(std::abs(letter));
                    word.push_back(letter > 0 ? g : g + "^-1");
                }
                e["word"] = word;
                witnesses.push_back(e);
            }
            ctx.payload["witness_words"] = witnesses;
        };
    });

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (app.get_subcommands().empty() && e.get_exit_code() != 0) {
            // unknown or missing subcommand
            Json err;
            err["error"] = Json{{"kind", "UnknownCommand"}, {"message", e.what()}};
            std::cerr << err.dump(2) << "\n";
            return 1;
        }
        return app.exit(e);
    }

    CLI::App* sub = app.get_subcommands().front();
    ctx.command = sub->get_name();
    for (const auto* opt : sub->get_options()) {
        if (opt->count() == 0) continue;
        std::string name = opt->get_name();
        if (!name.empty() && name[0] == '-') name = name.substr(2);
        ctx.arguments[name] = opt->count() && !opt->results().empty()
                                  ? Json(opt->results().front())
                                  : Json(true);
    }
    ctx.arguments["format"] = ctx.format;

    try {
        action();
    } catch (const hk::Error& e) {
        ctx.outcome = "error";
        ctx.payload = Json{{"error", Json{{"kind", e.kind()}, {"message", e.what()}}}};
        ctx.exit_code = 1;
    } catch (const std::exception& e) {
        ctx.outcome = "error";
        ctx.payload = Json{{"error", Json{{"kind", "InternalError"}, {"message", e.what()}}}};
        ctx.exit_code = 1;
    }
    emit(ctx);
    return ctx.exit_code;
}
