#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pz/compactify.hpp"
#include "pz/critical.hpp"
#include "pz/portrait.hpp"
#include "pz/pzfield.hpp"
#include "pz/transforms.hpp"

using nlohmann::json;

namespace {

int log_level() {
    const char* v = std::getenv("PZ_LOG");
    if (!v) return 1;
    std::string s = v;
    if (s == "quiet") return 0;
    if (s == "debug") return 2;
    return 1;
}

void log_info(const std::string& msg) {
    if (log_level() >= 2) std::cerr << "[pzcli] " << msg << "\n";
}

struct ParamFlags {
    std::string a = "0", b = "0", c = "0", m = "1", k = "0";

    void attach(CLI::App* cmd, bool required) {
        auto opt_a = cmd->add_option("-a", a, "coefficient a (rational p/q)");
        auto opt_b = cmd->add_option("-b", b, "coefficient b (rational p/q)");
        auto opt_c = cmd->add_option("-c", c, "coefficient c (rational p/q)");
        auto opt_m = cmd->add_option("-m", m, "exponent parameter m (rational p/q)");
        auto opt_k = cmd->add_option("-k", k, "exponent parameter k (rational p/q)");
        if (required) {
            opt_a->required();
            opt_b->required();
            opt_c->required();
            opt_m->required();
            opt_k->required();
        }
    }

    pz::PZParams parse() const {
        return {pz::parse_rational(a), pz::parse_rational(b), pz::parse_rational(c),
                pz::parse_rational(m), pz::parse_rational(k)};
    }
};

json params_json(const pz::PZParams& p) {
    return json{{"a", pz::to_string(p.a)}, {"b", pz::to_string(p.b)}, {"c", pz::to_string(p.c)},
                {"m", pz::to_string(p.m)}, {"k", pz::to_string(p.k)}};
}

json classify_json(const pz::FamilyClass& cls) {
    json j;
    j["tag"] = pz::to_string(cls.tag);
    if (cls.s) j["s"] = *cls.s;
    if (cls.p) j["p"] = *cls.p;
    if (cls.r) j["r"] = *cls.r;
    j["degenerate"] = cls.degenerate;
    j["params"] = params_json(cls.params);
    j["field"] = pz::build_field(cls.params).str();
    return j;
}

json classification_json(const pz::Classification& cls) {
    json j;
    j["kind"] = pz::to_string(cls.kind);
    j["trace"] = cls.trace;
    if (cls.eigenvalues) {
        j["eigenvalues"] = {cls.eigenvalues->first.str(), cls.eigenvalues->second.str()};
    }
    if (cls.alpha != 0) {
        j["alpha"] = cls.alpha;
        j["a_lead"] = pz::to_string(cls.a_lead);
    }
    if (cls.beta) {
        j["beta"] = *cls.beta;
        if (cls.b_lead) j["b_lead"] = pz::to_string(*cls.b_lead);
    }
    return j;
}

json critical_json(const pz::CriticalPointSet& set, const pz::PlanarPolySystem* sys) {
    json pts = json::array();
    for (const auto& pt : set.points) {
        json j;
        j["x"] = pt.x.str();
        j["x_approx"] = pt.x.to_double();
        j["y"] = pz::to_string(pt.y);
        if (sys) {
            pz::Classification cls = pz::linearize(*sys, pt);
            j["kind"] = pz::to_string(cls.kind);
            j["trace"] = cls.trace;
            if (cls.eigenvalues)
                j["eigenvalues"] = {cls.eigenvalues->first.str(), cls.eigenvalues->second.str()};
        }
        pts.push_back(j);
    }
    json j;
    j["points"] = pts;
    j["complex_roots_excluded"] = set.complex_roots_excluded;
    j["notes"] = set.notes;
    return j;
}

json infinity_json(const std::vector<pz::InfinityPoint>& pts) {
    json arr = json::array();
    for (const auto& ip : pts) {
        json j;
        j["chart"] = pz::to_string(ip.chart);
        j["u"] = ip.point.x.str();
        j["v"] = pz::to_string(ip.point.y);
        j["on_equator"] = ip.on_equator;
        j["classification"] = classification_json(ip.cls);
        j["notes"] = ip.notes;
        arr.push_back(j);
    }
    return arr;
}

json pipeline_json(const pz::PipelineReport& rep) {
    json j;
    j["params"] = params_json(rep.params);
    json stages = json::array();
    for (const auto& st : rep.stages)
        stages.push_back({{"name", st.name},
                          {"equation", st.equation},
                          {"change_of_variables", st.change_of_variables}});
    j["stages"] = stages;
    j["notes"] = rep.notes;
    if (rep.legendre) {
        j["legendre"] = {{"mu", pz::to_string(rep.legendre->mu)},
                         {"nu1", rep.legendre->nu1.str()},
                         {"nu2", rep.legendre->nu2.str()},
                         {"c0", pz::to_string(rep.legendre->c0)}};
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polyanin-Zaitsev planar vector field toolkit"};
    app.require_subcommand(1);

    ParamFlags classify_flags, transform_flags, critical_flags, portrait_flags, verify_flags;

    auto* cmd_classify = app.add_subcommand("classify", "classify the parameter family");
    classify_flags.attach(cmd_classify, true);

    auto* cmd_transform = app.add_subcommand("transform", "run the full transformation chain");
    transform_flags.attach(cmd_transform, true);

    auto* cmd_critical = app.add_subcommand("critical", "finite (and infinite) critical points");
    critical_flags.attach(cmd_critical, true);
    bool with_infinity = false;
    cmd_critical->add_flag("--infinity", with_infinity, "include the Poincare-chart analysis");

    auto* cmd_portrait = app.add_subcommand("portrait", "numerical phase portrait");
    portrait_flags.attach(cmd_portrait, true);
    std::string out_prefix = "portrait";
    std::string format = "svg";
    int n_seeds = 64;
    double win = 4.0;
    cmd_portrait->add_option("-o,--output", out_prefix, "output file prefix");
    cmd_portrait->add_option("--format", format, "svg or csv")
        ->check(CLI::IsMember({"svg", "csv"}));
    cmd_portrait->add_option("--seeds", n_seeds, "number of seed points");
    cmd_portrait->add_option("--window", win, "half-width of the square window");

    auto* cmd_verify = app.add_subcommand("verify", "residual check of every pipeline stage");
    verify_flags.attach(cmd_verify, true);
    double tol = 1e-7;
    cmd_verify->add_option("--tol", tol, "residual threshold");

    auto* cmd_example = app.add_subcommand("example-pz", "biparametric quadratic showcase");
    std::string ex_b = "1", ex_c = "1";
    cmd_example->add_option("-b", ex_b, "parameter b (rational p/q)")->required();
    cmd_example->add_option("-c", ex_c, "parameter c (rational p/q)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*cmd_classify) {
            pz::PZParams prm = classify_flags.parse();
            std::cout << classify_json(pz::classify_family(prm)).dump(2) << "\n";
        } else if (*cmd_transform) {
            pz::PZParams prm = transform_flags.parse();
            std::cout << pipeline_json(pz::full_pipeline(prm)).dump(2) << "\n";
        } else if (*cmd_critical) {
            pz::PZParams prm = critical_flags.parse();
            pz::FamilyClass cls = pz::classify_family(prm);
            json j;
            j["family"] = classify_json(cls);
            if (cls.tag != pz::FamilyTag::NonPolynomial) {
                pz::PlanarPolySystem sys = pz::instantiate_family(cls).to_planar();
                j["finite"] = critical_json(pz::finite_critical_points(cls), &sys);
                if (with_infinity) j["infinity"] = infinity_json(pz::infinity_analysis(sys));
            } else {
                j["finite"] = critical_json(pz::finite_critical_points(prm), nullptr);
                if (with_infinity)
                    throw pz::NotPolynomial();
            }
            std::cout << j.dump(2) << "\n";
        } else if (*cmd_portrait) {
            pz::PZParams prm = portrait_flags.parse();
            pz::FamilyClass cls = pz::classify_family(prm);
            pz::PlanarPolySystem sys = pz::instantiate_family(cls).to_planar();
            pz::Window window{-win, win, -win, win};
            log_info("integrating portrait trajectories");
            pz::PortraitData data = pz::phase_portrait(sys, window, n_seeds);
            std::string path = out_prefix + "." + format;
            std::ofstream out(path, std::ios::binary);
            out << (format == "svg" ? pz::render_svg(data) : pz::render_csv(data));
            if (!out) throw pz::DomainError("cannot write " + path);
            std::cout << "wrote " << path << " (" << data.trajectories.size()
                      << " trajectories, " << data.critical_points.size()
                      << " critical points)\n";
        } else if (*cmd_verify) {
            pz::PZParams prm = verify_flags.parse();
            pz::full_pipeline(prm);  // raises StageError on inapplicable stages
            pz::VerificationReport rep = pz::verify_pipeline(prm, 1.0, 2.0, 0.5, 64);
            std::cout << "stage            residual\n";
            bool ok = true;
            for (const auto& st : rep.stages) {
                std::cout << st.stage << std::string(17 - std::min<size_t>(16, st.stage.size()), ' ')
                          << pz::format_double(st.residual) << "\n";
                ok = ok && st.residual <= tol;
            }
            std::cout << "control          " << pz::format_double(rep.control_residual) << "\n";
            if (!ok) {
                std::cerr << "residual threshold " << tol << " exceeded\n";
                return 1;
            }
        } else if (*cmd_example) {
            pz::Rational b = pz::parse_rational(ex_b), c = pz::parse_rational(ex_c);
            pz::PZParams prm{0, b, c, pz::Rational(3, 2), pz::Rational(1, 2)};
            pz::FamilyClass cls = pz::classify_family(prm);
            pz::PlanarPolySystem sys = pz::instantiate_family(cls).to_planar();
            json j;
            j["family"] = classify_json(cls);
            j["system"] = {{"xdot", sys.P.str()}, {"ydot", sys.Q.str()}};
            j["riccati"] = pz::lienard_to_riccati(prm).str();
            j["finite"] = critical_json(pz::finite_critical_points(cls), &sys);
            pz::ChartSystem u1 = pz::chart_transform(sys, pz::Chart::U1);
            pz::ChartSystem u2 = pz::chart_transform(sys, pz::Chart::U2);
            j["charts"] = {
                {"U1", {{"udot", u1.P_chart.str("u", "v")}, {"vdot", u1.Q_chart.str("u", "v")}}},
                {"U2", {{"udot", u2.P_chart.str("u", "v")}, {"vdot", u2.Q_chart.str("u", "v")}}}};
            j["infinity"] = infinity_json(pz::infinity_analysis(sys));
            std::cout << j.dump(2) << "\n";
        }
    } catch (const pz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
