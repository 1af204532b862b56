// Command-line front-end: exact arithmetic on finite sums c*t^k*exp(lambda*t),
// the AP projection, the Laplace bridge, witness tuples and numeric probes.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "bohl/bohl_function.hpp"
#include "bohl/errors.hpp"
#include "bohl/json_io.hpp"
#include "bohl/laplace.hpp"
#include "bohl/numerics.hpp"
#include "bohl/parser.hpp"
#include "bohl/witness.hpp"

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw bohl::Error("cannot open '" + out_path + "' for writing");
    out << text;
    if (!out) throw bohl::Error("failed writing '" + out_path + "'");
}

void emit_json(const json& j, const std::string& out_path) {
    emit(j.dump(2) + "\n", out_path);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bohl::Error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw bohl::JsonError("malformed JSON in '" + path + "': " + e.what());
    }
}

bohl::BindingEnv bindings_for(const bohl::BohlFunction& f,
                              const std::vector<std::string>& binds) {
    const char* scheme = std::getenv("BOHL_DEFAULT_BINDINGS");
    if (scheme != nullptr && std::string(scheme) != "primes")
        throw bohl::BindingError("unknown BOHL_DEFAULT_BINDINGS scheme '" + std::string(scheme) +
                                 "' (supported: primes)");
    bohl::BindingEnv env = bohl::BindingEnv::defaults_for(f.generators());
    for (const std::string& spec : binds) {
        auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0)
            throw bohl::BindingError("expected --bind name=value, got '" + spec + "'");
        std::string name = spec.substr(0, eq);
        if (!bohl::is_valid_generator_name(name))
            throw bohl::BindingError("invalid generator name '" + name + "'");
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(spec.substr(eq + 1), &used);
            if (used != spec.size() - eq - 1) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw bohl::BindingError("malformed binding value in '" + spec + "'");
        }
        env.bind(name, value);
    }
    return env;
}

json function_report(const bohl::BohlFunction& f) {
    return json{{"terms", bohl::function_to_json(f)}, {"text", bohl::format(f)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact kernel for finite sums of c*t^k*exp(lambda*t)"};
    app.require_subcommand(1);

    std::string expr, expr2, out_path, file_f, file_g, in_file, part = "both", mode;
    std::vector<std::string> binds;
    std::vector<double> horizons;
    double t_value = 0.0, t0 = 0.0, t1 = 1.0;
    int grid = 100, n_param = 1, s_param = 1;

    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_path, "write output to a file"); };

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression at a point");
    eval_cmd->add_option("expr", expr, "expression")->required();
    eval_cmd->add_option("--t", t_value, "evaluation point")->required();
    eval_cmd->add_option("--bind", binds, "generator binding name=value")->take_all();
    add_out(eval_cmd);
    eval_cmd->callback([&] {
        bohl::BohlFunction f = bohl::lower_expression(expr);
        auto value = bohl::evaluate(f, t_value, bindings_for(f, binds));
        emit_json(json{{"t", t_value}, {"value", {{"re", value.real()}, {"im", value.imag()}}}},
                  out_path);
    });

    auto* arith_cmd = app.add_subcommand("arith", "add or multiply two expressions");
    arith_cmd->add_option("op", mode, "add or mul")
        ->required()
        ->check(CLI::IsMember({"add", "mul"}));
    arith_cmd->add_option("lhs", expr, "left expression")->required();
    arith_cmd->add_option("rhs", expr2, "right expression")->required();
    add_out(arith_cmd);
    arith_cmd->callback([&] {
        bohl::BohlFunction a = bohl::lower_expression(expr);
        bohl::BohlFunction b = bohl::lower_expression(expr2);
        emit_json(function_report(mode == "add" ? a + b : a * b), out_path);
    });

    auto* diff_cmd = app.add_subcommand("diff", "differentiate an expression");
    diff_cmd->add_option("expr", expr, "expression")->required();
    add_out(diff_cmd);
    diff_cmd->callback([&] {
        emit_json(function_report(bohl::lower_expression(expr).differentiate()), out_path);
    });

    auto* laplace_cmd = app.add_subcommand("laplace", "partial-fraction Laplace transform");
    laplace_cmd->add_option("expr", expr, "expression")->required();
    add_out(laplace_cmd);
    laplace_cmd->callback([&] {
        bohl::PartialFractionForm pf = bohl::laplace(bohl::lower_expression(expr));
        json out = bohl::pf_to_json(pf);
        out["text"] = pf.to_string();
        emit_json(out, out_path);
    });

    auto* partfrac_cmd =
        app.add_subcommand("partfrac", "partial fractions of a factored transfer function");
    partfrac_cmd->add_option("file", in_file, "rational-function JSON file")->required();
    add_out(partfrac_cmd);
    partfrac_cmd->callback([&] {
        bohl::RationalFunction rf = bohl::rational_function_from_json(read_json_file(in_file));
        bohl::PartialFractionForm pf = bohl::partial_fractions(rf);
        json out = bohl::pf_to_json(pf);
        out["text"] = pf.to_string();
        emit_json(out, out_path);
    });

    auto* inv_cmd = app.add_subcommand("invlaplace", "inverse transform of a partial-fraction file");
    inv_cmd->add_option("file", in_file, "partial-fraction JSON file")->required();
    add_out(inv_cmd);
    inv_cmd->callback([&] {
        bohl::PartialFractionForm pf = bohl::pf_from_json(read_json_file(in_file));
        emit_json(function_report(bohl::inverse_laplace(pf)), out_path);
    });

    auto* psi_cmd = app.add_subcommand("psi", "project onto AP form");
    psi_cmd->add_option("expr", expr, "expression")->required();
    add_out(psi_cmd);
    psi_cmd->callback([&] {
        emit_json(function_report(bohl::lower_expression(expr).psi()), out_path);
    });

    auto* unit_cmd = app.add_subcommand("is-unit", "unit test with explicit inverse");
    unit_cmd->add_option("expr", expr, "expression")->required();
    add_out(unit_cmd);
    unit_cmd->callback([&] {
        bohl::BohlFunction f = bohl::lower_expression(expr);
        json out{{"unit", f.is_unit()}};
        if (f.is_unit()) out["inverse"] = bohl::format(f.unit_inverse());
        emit_json(out, out_path);
    });

    auto* bounded_cmd = app.add_subcommand("is-bounded", "syntactic boundedness decision");
    bounded_cmd->add_option("expr", expr, "expression")->required();
    add_out(bounded_cmd);
    bounded_cmd->callback([&] {
        emit_json(json{{"bounded", bohl::lower_expression(expr).is_bounded()}}, out_path);
    });

    auto* witness_cmd = app.add_subcommand("witness", "construct unimodular witness tuples");
    witness_cmd->require_subcommand(1);
    auto* bsr_cmd = witness_cmd->add_subcommand("bsr", "(f_1..f_N, g) with explicit inverse");
    bsr_cmd->add_option("--n", n_param, "tuple parameter N")->required();
    bsr_cmd->add_option("--s", s_param, "exponent power s");
    bsr_cmd->add_option("--part", part, "tuple, inverse or both")
        ->check(CLI::IsMember({"tuple", "inverse", "both"}));
    add_out(bsr_cmd);
    bsr_cmd->callback([&] {
        bohl::WitnessSpec spec = bohl::WitnessSpec::with_default_names(n_param, s_param);
        if (part == "tuple")
            emit_json(bohl::tuple_to_json(bohl::bsr_witness(spec)), out_path);
        else if (part == "inverse")
            emit_json(bohl::tuple_to_json(bohl::bsr_witness_inverse(spec)), out_path);
        else
            emit_json(json{{"tuple", bohl::tuple_to_json(bohl::bsr_witness(spec))},
                           {"inverse", bohl::tuple_to_json(bohl::bsr_witness_inverse(spec))}},
                      out_path);
    });
    auto* tsr_cmd = witness_cmd->add_subcommand("tsr", "(f_1..f_n) trigonometric tuple");
    tsr_cmd->add_option("--n", n_param, "tuple length n")->required();
    add_out(tsr_cmd);
    tsr_cmd->callback([&] {
        std::vector<std::string> names;
        for (int k = 1; k <= 2 * n_param; ++k) names.push_back("w" + std::to_string(k));
        emit_json(bohl::tuple_to_json(bohl::tsr_witness(n_param, names)), out_path);
    });

    auto* bezout_cmd = app.add_subcommand("bezout-check", "verify sum f_j*g_j == 1");
    bezout_cmd->add_option("--f", file_f, "tuple JSON file")->required();
    bezout_cmd->add_option("--g", file_g, "tuple JSON file")->required();
    add_out(bezout_cmd);
    bezout_cmd->callback([&] {
        bohl::BohlTuple f = bohl::tuple_from_json(read_json_file(file_f));
        bohl::BohlTuple g = bohl::tuple_from_json(read_json_file(file_g));
        emit_json(json{{"bezout", bohl::bezout_verify(f, g)}}, out_path);
    });

    auto* sample_cmd = app.add_subcommand("sample", "equispaced samples as CSV");
    sample_cmd->add_option("expr", expr, "expression")->required();
    sample_cmd->add_option("--t0", t0, "interval start")->required();
    sample_cmd->add_option("--t1", t1, "interval end")->required();
    sample_cmd->add_option("--n", grid, "number of steps")->required();
    sample_cmd->add_option("--bind", binds, "generator binding name=value")->take_all();
    add_out(sample_cmd);
    sample_cmd->callback([&] {
        bohl::BohlFunction f = bohl::lower_expression(expr);
        emit(bohl::to_csv(bohl::sample(f, t0, t1, grid, bindings_for(f, binds))), out_path);
    });

    auto* probe_cmd = app.add_subcommand("probe", "sup-norm growth probe over horizons");
    probe_cmd->add_option("expr", expr, "expression")->required();
    probe_cmd->add_option("--horizons", horizons, "comma-separated horizons")
        ->required()
        ->delimiter(',');
    probe_cmd->add_option("--bind", binds, "generator binding name=value")->take_all();
    add_out(probe_cmd);
    probe_cmd->callback([&] {
        bohl::BohlFunction f = bohl::lower_expression(expr);
        json out = json::array();
        for (const auto& p : bohl::unboundedness_probe(f, horizons, bindings_for(f, binds)))
            out.push_back(json{{"horizon", p.horizon}, {"sup", p.sup_estimate}});
        emit_json(out, out_path);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const bohl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
