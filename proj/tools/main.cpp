// ggp-atlas: interpolation-region classifier, Euler-factor calculator,
// q-expansion operator toolbox, and atlas report generator.

#include "ggp/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace ggp;

void emit(const std::string& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << doc;
}

Json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw validation_error("cannot open input file: " + path);
    try {
        return Json::parse(f);
    } catch (const std::exception& e) {
        throw validation_error(std::string("bad JSON input: ") + e.what());
    }
}

int run(int argc, char** argv) {
    CLI::App app{"computable skeleton of the GSp4 x GL2 x GL2 interpolation atlas"};
    app.require_subcommand(1);

    std::string format = "text", out_path, input_path, region_arg = "auto";
    bool strict = false;
    auto add_out = [&](CLI::App* c) {
        c->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    long k1 = 0, k2 = 0, c1 = 0, c2 = 0;

    auto* cmd_classify = app.add_subcommand("classify", "classify a weight quadruple");
    cmd_classify->add_option("--k1", k1)->required();
    cmd_classify->add_option("--k2", k2)->required();
    cmd_classify->add_option("--c1", c1)->required();
    cmd_classify->add_option("--c2", c2)->required();
    cmd_classify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    add_out(cmd_classify);

    auto* cmd_figure = app.add_subcommand("figure", "render the region map");
    cmd_figure->add_option("--k1", k1)->required();
    cmd_figure->add_option("--k2", k2)->required();
    cmd_figure->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json", "svg"}));
    add_out(cmd_figure);

    auto* cmd_table = app.add_subcommand("table1", "regenerate the region table");
    cmd_table->add_option("--k1", k1)->default_val(8);
    cmd_table->add_option("--k2", k2)->default_val(5);
    cmd_table->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    add_out(cmd_table);

    auto* cmd_euler = app.add_subcommand("euler", "evaluate the local Euler factor");
    cmd_euler->add_option("--input", input_path, "Euler input JSON")->required();
    cmd_euler->add_option("--region", region_arg,
                          "expected region label, or 'auto'");
    cmd_euler->add_flag("--strict", strict,
                        "reject eigenvalues of the critical valuation");
    cmd_euler->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    add_out(cmd_euler);

    auto* cmd_qexp = app.add_subcommand("qexp", "q-expansion operators");
    cmd_qexp->require_subcommand(1);
    std::string qexp_in;
    long theta_t = 1, spec_k = 0, pstab_M = 10;
    std::string prime_arg = "0", ell_arg = "0";
    auto add_io = [&](CLI::App* c) {
        c->add_option("--input", qexp_in, "series JSON")->required();
        add_out(c);
    };
    auto* q_deplete = cmd_qexp->add_subcommand("deplete", "p-depletion");
    add_io(q_deplete);
    q_deplete->add_option("--p", prime_arg)->required();
    auto* q_theta = cmd_qexp->add_subcommand("theta", "theta power");
    add_io(q_theta);
    q_theta->add_option("--t", theta_t)->required();
    auto* q_stab = cmd_qexp->add_subcommand("stabilize", "ordinary p-stabilisation");
    add_io(q_stab);
    q_stab->add_option("--p", prime_arg)->required();
    auto* q_spec = cmd_qexp->add_subcommand("specialize", "specialise a family");
    add_io(q_spec);
    q_spec->add_option("--k", spec_k)->required();
    auto* q_hecke = cmd_qexp->add_subcommand("hecke", "Hecke operator T_ell");
    add_io(q_hecke);
    q_hecke->add_option("--ell", ell_arg)->required();

    auto* cmd_atlas = app.add_subcommand("atlas", "full atlas report for a family");
    cmd_atlas->add_option("--input", input_path, "family descriptor JSON")->required();
    cmd_atlas->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json", "svg"}));
    add_out(cmd_atlas);

    CLI11_PARSE(app, argc, argv);

    if (*cmd_classify) {
        Weights w(k1, k2, c1, c2);
        RegionLabel r = classify(w);
        if (format == "json") {
            Json j{{"region", region_name(r)},
                   {"sign_infinity", sign_infinity(r)},
                   {"w", w.w()},
                   {"t", w.t()},
                   {"parabolic", parabolic_name(parabolic_of_region(r)[0])}};
            emit(j.dump(2) + "\n", out_path);
        } else {
            std::ostringstream s;
            s << "region " << region_name(r) << ", sign "
              << (sign_infinity(r) == 1 ? "+1" : "-1") << ", w = " << w.w()
              << ", t = " << w.t() << "\n";
            emit(s.str(), out_path);
        }
    } else if (*cmd_figure) {
        if (!(k1 >= k2 && k2 >= 2)) throw range_violation("need k1 >= k2 >= 2");
        if (format == "svg") emit(figure_svg(k1, k2), out_path);
        else if (format == "json") emit(figure_json(k1, k2).dump(2) + "\n", out_path);
        else emit(figure_text(k1, k2), out_path);
    } else if (*cmd_table) {
        if (format == "json") emit(table1_json(k1, k2).dump(2) + "\n", out_path);
        else emit(table1_text(k1, k2), out_path);
        if (!table1_diff(k1, k2).empty()) return 1;
    } else if (*cmd_euler) {
        EulerInput in = json_euler_input(load_json(input_path));
        RegionLabel r = classify(in.weights);
        if (region_arg != "auto" && region_from_name(region_arg) != r)
            throw wrong_region("input weights lie in region " + region_name(r));
        AlgNum e = euler_factor(in, strict);
        if (format == "json") {
            Json j{{"region", region_name(r)},
                   {"value", e.str()},
                   {"valuation", rat_str(e.is_zero() ? Rat(0) : e.valuation(in.p()))},
                   {"nonvanishing", !e.is_zero()}};
            emit(j.dump(2) + "\n", out_path);
        } else {
            std::ostringstream s;
            s << "region " << region_name(r) << "\nE_p = " << e.str() << "\n";
            if (!e.is_zero()) s << "v_p(E_p) = " << rat_str(e.valuation(in.p())) << "\n";
            emit(s.str(), out_path);
        }
    } else if (*cmd_qexp) {
        Json series = load_json(qexp_in);
        Json result;
        if (*q_deplete) {
            result = with_parsed_series(series, [&](auto f) {
                return series_to_json(p_deplete(f, Int(prime_arg)));
            });
        } else if (*q_theta) {
            result = with_parsed_series(series, [&](auto f) {
                return series_to_json(theta_power(f, theta_t));
            });
        } else if (*q_stab) {
            Int p(prime_arg);
            const Json& r = series.at("ring");
            ZpRing R(p, r.at("type") == "zp"
                            ? static_cast<int>(json_long(r.at("M")))
                            : static_cast<int>(pstab_M));
            auto f = json_series_with_ring(series, R);
            auto [g, alpha] = p_stabilize(f, p);
            result = series_to_json(g);
            result["unit_eigenvalue"] = alpha.str();
        } else if (*q_spec) {
            const Json& r = series.at("ring");
            IwRing R(json_int(r.at("p")), static_cast<int>(json_long(r.at("M"))),
                     static_cast<int>(json_long(r.at("D"))));
            result = series_to_json(specialize(json_series_with_ring(series, R), spec_k));
        } else if (*q_hecke) {
            result = with_parsed_series(series, [&](auto f) {
                return series_to_json(hecke_T(f, Int(ell_arg)));
            });
        }
        emit(result.dump(2) + "\n", out_path);
    } else if (*cmd_atlas) {
        FamilyDescriptor fd = json_family(load_json(input_path));
        emit(render_atlas(fd, format), out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ggp::validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const ggp::arithmetic_error& e) {
        std::cerr << "arithmetic error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
