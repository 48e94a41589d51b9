// grasscs: basis, generator, coherent-state and verification driver for the
// [lambda,lambda] representation tower on the rank-two complex Grassmannian.

#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "grasscs/cohstate.hpp"
#include "grasscs/fock8.hpp"
#include "grasscs/gmeasure.hpp"
#include "grasscs/gops.hpp"
#include "grasscs/numutil.hpp"
#include "grasscs/verify.hpp"

namespace {

using namespace grasscs;
using nlohmann::ordered_json;

constexpr int kLambdaSoftCap = 6;

void check_lambda_cap(int lambda, bool force) {
    if (lambda > kLambdaSoftCap && !force)
        throw CLI::ValidationError("--lambda",
                                   "lambda > 6 makes the dense suites expensive; pass --force to override");
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw CLI::ValidationError("--out", "cannot open " + out);
    f << text;
}

ordered_json matrix_json(const Eigen::MatrixXcd& m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string matrix_csv(const Eigen::MatrixXcd& m) {
    std::string out;
    char buf[64];
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            std::snprintf(buf, sizeof(buf), "%s%.17g,%.17g", c ? "," : "", m(r, c).real(), m(r, c).imag());
            out += buf;
        }
        out += "\n";
    }
    return out;
}

OpMatrix named_operator(const IrrepContext& ctx, const std::string& token) {
    if (token == "T30") return op_T30(ctx);
    if (token == "C2") return casimir2(ctx);
    if (token == "M2") return op_quadratic(ctx, Quad::M2);
    if (token == "T-T-") return op_quadratic(ctx, Quad::TmTm);
    if (token == "T+T+") return op_quadratic(ctx, Quad::TpTp);
    if (token == "T+T-") return op_quadratic(ctx, Quad::TpTm);
    if (token == "T-T+") return op_quadratic(ctx, Quad::TmTp);
    if (token.size() == 3 && token[0] == 'T' && (token[1] == '+' || token[1] == '-')) {
        const int mu = token[2] - '0';
        if (mu >= 0 && mu <= 3) return token[1] == '+' ? op_Tplus(ctx, mu) : op_Tminus(ctx, mu);
    }
    if (token.size() == 3 && token[0] == 'S' && (token[1] == 'a' || token[1] == 'b')) {
        const Layer l = token[1] == 'a' ? Layer::a : Layer::b;
        if (token[2] == '3') return op_spin(ctx, l, SpinComponent::third);
        if (token[2] == '+') return op_spin(ctx, l, SpinComponent::plus);
        if (token[2] == '-') return op_spin(ctx, l, SpinComponent::minus);
    }
    if (token.size() == 3 && token[0] == 'M') {
        const int mu = token[1] - '0', nu = token[2] - '0';
        if (mu >= 0 && mu <= 3 && nu >= 0 && nu <= 3) return op_M(ctx, mu, nu);
    }
    throw CLI::ValidationError("--which", "unknown operator token: " + token);
}

CMat4 named_fundamental(const std::string& token) {
    if (token == "T30") return tau(3, 0);
    if (token.size() == 3 && token[0] == 'T' && (token[1] == '+' || token[1] == '-')) {
        const int mu = token[2] - '0';
        const CMat4 t = tau_ladder(token[1] == '+' ? Sign::plus : Sign::minus, mu);
        return CMat4(eta(mu) * t);
    }
    if (token.size() == 5 && token.substr(0, 3) == "tau") return tau(token[3] - '0', token[4] - '0');
    if (token.size() == 3 && token[0] == 'm') return m_lorentz(token[1] - '0', token[2] - '0');
    if (token.size() == 3 && token[0] == 'M') return m_lorentz(token[1] - '0', token[2] - '0');
    if (token.size() == 3 && token[0] == 'S') {
        const Layer l = token[1] == 'a' ? Layer::a : Layer::b;
        return fundamental_matrix(token[2] == '3' ? Gen::spin3(l)
                                                  : (token[2] == '+' ? Gen::spin_plus(l) : Gen::spin_minus(l)));
    }
    if (token == "C2") return casimir2_fundamental();
    throw CLI::ValidationError("--which", "unknown fundamental token: " + token);
}

CMat2 parse_Z(const std::vector<double>& v) {
    if (v.size() != 8)
        throw CLI::ValidationError("--Z", "expected 8 reals: re,im of z11,z12,z21,z22");
    CMat2 Z;
    Z << Cplx(v[0], v[1]), Cplx(v[2], v[3]), Cplx(v[4], v[5]), Cplx(v[6], v[7]);
    return Z;
}

BasisLabel parse_label(const std::vector<double>& v) {
    if (v.size() != 4) throw CLI::ValidationError("--label", "expected j,m,qa,qb");
    auto half = [](double x) { return HalfInt(static_cast<int>(std::lround(2.0 * x))); };
    return {half(v[0]), static_cast<int>(std::lround(v[1])), half(v[2]), half(v[3])};
}

std::string label_json(const BasisLabel& l) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "{\"j\":%g,\"m\":%d,\"qa\":%g,\"qb\":%g}", l.j.value(), l.m, l.qa.value(),
                  l.qb.value());
    return buf;
}

int run_verify(const RunConfig& cfg, const std::string& suite) {
    std::vector<CheckResult> checks =
        (suite == "all") ? run_all_suites(cfg) : run_suite(suite, cfg);
    const std::string text = (cfg.format == "csv") ? report_csv(checks) : report_json(cfg, checks);
    emit(text, cfg.out);
    return all_passed(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orthonormal bases, u(4) generator matrices, boson realization and coherent "
                 "states for the [lambda,lambda] tower on U(4)/U(2)^2"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string suite = "all";
    std::string which = "T30";
    std::vector<double> zvals, zpvals, labelvals;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--lambda", cfg.lambda, "representation index")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_flag("--force", cfg.force, "lift the lambda soft cap");
    };

    CLI::App* dim = app.add_subcommand("dim", "print dim H_lambda");
    dim->add_option("--lambda", cfg.lambda)->required()->check(CLI::NonNegativeNumber);

    CLI::App* basis = app.add_subcommand("basis", "list basis labels and normalizations as JSON lines");
    add_common(basis);

    CLI::App* gens = app.add_subcommand("generators", "export generator matrices");
    add_common(gens);
    gens->add_option("--which", which, "comma list: T30,T+0..T+3,T-0..T-3,Sa3,Sa+,Sa-,Sb3,Sb+,Sb-,M01..,M2,"
                                       "T-T-,T+T+,T+T-,T-T+,C2");

    CLI::App* fund = app.add_subcommand("fundamental", "export 4x4 fundamental matrices");
    fund->add_option("--which", which, "comma list: tau30,tau01..,m01..,T+0..,Sa3..,C2");
    fund->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
    fund->add_option("--out", cfg.out);

    CLI::App* cs = app.add_subcommand("cs", "coherent-state components at Z");
    add_common(cs);
    cs->add_option("--Z", zvals, "re,im of z11,z12,z21,z22")->expected(8)->delimiter(',')->required();

    CLI::App* ovl = app.add_subcommand("overlap", "coherent-state overlap <Z'|Z>");
    add_common(ovl);
    ovl->add_option("--Z", zvals)->expected(8)->delimiter(',')->required();
    ovl->add_option("--Zprime", zpvals)->expected(8)->delimiter(',')->required();

    CLI::App* fock = app.add_subcommand("fock", "occupation amplitudes of one basis state");
    add_common(fock);
    fock->add_option("--label", labelvals, "j,m,qa,qb (half-integers as decimals)")
        ->expected(4)
        ->delimiter(',')
        ->required();

    CLI::App* verify = app.add_subcommand("verify", "run verification suites and emit a report");
    add_common(verify);
    verify->add_option("--suite", suite, "algebra|basis|gops|fock|cs|measure|all")
        ->check(CLI::IsMember({"algebra", "basis", "gops", "fock", "cs", "measure", "all"}));
    verify->add_option("--seed", cfg.seed, "base seed for every stochastic check");
    verify->add_option("--samples", cfg.samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
    verify->add_option("--tol-structure", cfg.tol_structure)->check(CLI::PositiveNumber);
    verify->add_option("--tol-matrix", cfg.tol_matrix)->check(CLI::PositiveNumber);
    verify->add_option("--tol-mc-nsigma", cfg.mc_nsigma)->check(CLI::PositiveNumber);
    verify->add_option("--threads", cfg.threads, "worker cap (default GRASSCS_THREADS or hardware)");
    verify->add_flag("--timing", cfg.timing, "record wall clock per check (report no longer byte-stable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dim->parsed()) {
            std::cout << dim_lambda(cfg.lambda) << "\n";
            return 0;
        }
        if (basis->parsed()) {
            check_lambda_cap(cfg.lambda, cfg.force);
            const IrrepContext ctx(cfg.lambda);
            std::string out;
            char buf[160];
            for (int i = 0; i < ctx.dim(); ++i) {
                const auto& l = ctx.label(i);
                std::snprintf(buf, sizeof(buf),
                              "{\"index\":%d,\"j\":%g,\"m\":%d,\"qa\":%g,\"qb\":%g,\"norm\":%.17g}\n", i,
                              l.j.value(), l.m, l.qa.value(), l.qb.value(),
                              normalization(cfg.lambda, l.j, l.m));
                out += buf;
            }
            emit(out, cfg.out);
            return 0;
        }
        if (gens->parsed()) {
            check_lambda_cap(cfg.lambda, cfg.force);
            const IrrepContext ctx(cfg.lambda);
            std::vector<std::string> tokens;
            for (std::stringstream ss(which); std::getline(ss, tokens.emplace_back(), ',');) {}
            if (!tokens.empty() && tokens.back().empty()) tokens.pop_back();
            if (cfg.format == "csv") {
                std::string out;
                for (const auto& t : tokens) out += "# " + t + "\n" + matrix_csv(named_operator(ctx, t));
                emit(out, cfg.out);
            } else {
                ordered_json j;
                j["lambda"] = cfg.lambda;
                j["dim"] = ctx.dim();
                for (const auto& t : tokens) j["operators"][t] = matrix_json(named_operator(ctx, t));
                emit(j.dump(2) + "\n", cfg.out);
            }
            return 0;
        }
        if (fund->parsed()) {
            std::vector<std::string> tokens;
            for (std::stringstream ss(which); std::getline(ss, tokens.emplace_back(), ',');) {}
            if (!tokens.empty() && tokens.back().empty()) tokens.pop_back();
            if (cfg.format == "csv") {
                std::string out;
                for (const auto& t : tokens) out += "# " + t + "\n" + matrix_csv(named_fundamental(t));
                emit(out, cfg.out);
            } else {
                ordered_json j;
                for (const auto& t : tokens) j["matrices"][t] = matrix_json(named_fundamental(t));
                emit(j.dump(2) + "\n", cfg.out);
            }
            return 0;
        }
        if (cs->parsed()) {
            check_lambda_cap(cfg.lambda, cfg.force);
            const IrrepContext ctx(cfg.lambda);
            const CoeffVector v = cs_components(ctx, parse_Z(zvals));
            std::string out;
            char buf[192];
            for (int i = 0; i < ctx.dim(); ++i) {
                std::snprintf(buf, sizeof(buf), "{\"label\":%s,\"re\":%.17g,\"im\":%.17g}\n",
                              label_json(ctx.label(i)).c_str(), v(i).real(), v(i).imag());
                out += buf;
            }
            emit(out, cfg.out);
            return 0;
        }
        if (ovl->parsed()) {
            const Cplx o = cs_overlap(cfg.lambda, parse_Z(zpvals), parse_Z(zvals));
            char buf[96];
            std::snprintf(buf, sizeof(buf), "{\"re\":%.17g,\"im\":%.17g}\n", o.real(), o.imag());
            emit(buf, cfg.out);
            return 0;
        }
        if (fock->parsed()) {
            check_lambda_cap(cfg.lambda, cfg.force);
            const IrrepContext ctx(cfg.lambda);
            const BasisLabel label = parse_label(labelvals);
            const FockVector v = basis_fock(ctx, label);
            std::string out;
            char buf[256];
            for (const auto& [s, a] : v.amps()) {
                std::snprintf(buf, sizeof(buf),
                              "{\"na\":[%d,%d,%d,%d],\"nb\":[%d,%d,%d,%d],\"re\":%.17g,\"im\":%.17g}\n", s[0],
                              s[1], s[2], s[3], s[4], s[5], s[6], s[7], a.real(), a.imag());
                out += buf;
            }
            emit(out, cfg.out);
            return 0;
        }
        if (verify->parsed()) {
            check_lambda_cap(cfg.lambda, cfg.force);
            return run_verify(cfg, suite);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
