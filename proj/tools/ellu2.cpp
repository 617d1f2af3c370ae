// Command-line front end: sampling verification campaigns over the elliptic
// U(2) pairing machinery, plus one-shot evaluation of the basic objects.
//
//   ellu2 verify <theta|qdybe|gen-pairing|det-pairing|matrix-pairing|
//                 action|antipode|star|singular|all> [flags]
//   ellu2 eval   <theta|rmatrix|vseries|pairing> [flags]
//
// Exit status: 0 all checks pass, 1 a check failed or a campaign aborted,
// 2 bad configuration.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ellu2/campaign.hpp"
#include "ellu2/dynrep.hpp"
#include "ellu2/pairing.hpp"
#include "ellu2/rmatrix.hpp"
#include "ellu2/series.hpp"
#include "ellu2/theta.hpp"

namespace {

using ellu2::Complex;

Complex parse_complex(const std::string& s) {
    // "re" or "re,im"
    auto comma = s.find(',');
    if (comma == std::string::npos) return Complex(std::stod(s), 0.0);
    return Complex(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

std::string show(Complex v) {
    std::ostringstream os;
    os.precision(15);
    os << v.real();
    if (v.imag() != 0.0) os << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
    return os.str();
}

struct CliOptions {
    ellu2::CampaignConfig cfg;
    std::string json_path;
    std::string config_path;
};

int apply_config_file(CliOptions& opt) {
    std::ifstream in(opt.config_path);
    if (!in) {
        std::cerr << "error: cannot open config file '" << opt.config_path << "'\n";
        return 2;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string key, eq, value;
        std::istringstream ls(line);
        if (!(ls >> key)) continue;
        ls >> eq;
        if (eq != "=") {
            value = eq;
        } else if (!(ls >> value)) {
            std::cerr << "error: " << opt.config_path << ":" << lineno << ": missing value\n";
            return 2;
        }
        try {
            if (key == "p") opt.cfg.p = std::stod(value);
            else if (key == "q") opt.cfg.q = std::stod(value);
            else if (key == "seed") opt.cfg.seed = std::stoull(value);
            else if (key == "max-mn") opt.cfg.max_mn = std::stoi(value);
            else if (key == "json") opt.json_path = value;
            else if (key == "samples") {
                for (const std::string& id : ellu2::checks_in_group("all"))
                    opt.cfg.samples[id] = std::stoi(value);
            } else if (key.rfind("samples.", 0) == 0) {
                opt.cfg.samples[key.substr(8)] = std::stoi(value);
            } else if (key.rfind("tol.", 0) == 0) {
                opt.cfg.tolerances[key.substr(4)] = std::stod(value);
            } else {
                std::cerr << "error: " << opt.config_path << ":" << lineno
                          << ": unknown key '" << key << "'\n";
                return 2;
            }
        } catch (const std::exception&) {
            std::cerr << "error: " << opt.config_path << ":" << lineno
                      << ": bad value '" << value << "'\n";
            return 2;
        }
    }
    return 0;
}

int run_verify(const std::string& group, CliOptions& opt, int samples_override) {
    if (!opt.config_path.empty()) {
        int rc = apply_config_file(opt);
        if (rc != 0) return rc;
    }
    if (const char* env = std::getenv("ELLU2_SEED")) {
        try {
            opt.cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: ELLU2_SEED is not an integer\n";
            return 2;
        }
    }
    if (samples_override > 0)
        for (const std::string& id : ellu2::checks_in_group(group))
            opt.cfg.samples[id] = samples_override;

    if (!(opt.cfg.p > 0.0 && opt.cfg.p < 1.0 && opt.cfg.q > 0.0 && opt.cfg.q < 1.0)) {
        std::cerr << "error: p and q must lie in (0,1)\n";
        return 2;
    }

    ellu2::Report rep;
    try {
        rep = ellu2::run_campaign(opt.cfg, {group});
    } catch (const ellu2::CampaignAbort& e) {
        std::cerr << "campaign aborted: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    for (const auto& c : rep.checks) {
        std::ostringstream os;
        os.precision(3);
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.id << "  max residual "
           << std::scientific << c.max_residual << " (tol " << c.tolerance << ", "
           << c.samples << " samples, " << c.resamples << " resampled)";
        std::cout << os.str() << "\n";
    }
    std::cout << (rep.status ? "status: pass" : "status: fail") << "\n";
    if (!opt.json_path.empty()) {
        std::ofstream out(opt.json_path);
        if (!out) {
            std::cerr << "error: cannot write '" << opt.json_path << "'\n";
            return 2;
        }
        out << ellu2::report_to_json(rep) << "\n";
    }
    return rep.status ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"elliptic U(2) dynamical quantum group verification"};
    app.require_subcommand(1);

    CliOptions opt;
    int samples_override = 0;

    auto* verify = app.add_subcommand("verify", "run a sampling verification campaign");
    verify->require_subcommand(1);
    std::string chosen_group;
    auto groups = ellu2::check_groups();
    groups.push_back("all");
    for (const std::string& g : groups) {
        auto* sub = verify->add_subcommand(g, "verify the '" + g + "' checks");
        sub->callback([&chosen_group, g] { chosen_group = g; });
        sub->add_option("--p", opt.cfg.p, "elliptic nome in (0,1)");
        sub->add_option("--q", opt.cfg.q, "deformation parameter in (0,1)");
        sub->add_option("--seed", opt.cfg.seed, "RNG seed");
        sub->add_option("--samples", samples_override, "per-check sample count override")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-mn", opt.cfg.max_mn, "largest corepresentation label")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--json", opt.json_path, "write a JSON report to this path");
        sub->add_option("--config", opt.config_path, "key-value config file (same keys as flags)");
    }

    auto* eval = app.add_subcommand("eval", "evaluate one object and print it");
    eval->require_subcommand(1);
    std::string arg_z = "1", arg_lambda = "0.3", arg_w = "0.7", arg_a1;
    std::string arg_trailing, kind = "elliptic";
    double ep = 0.2, eq = 0.5;
    int eM = 1, er = 0, es = 0, eN = 1, ek = 0, ej = 0;
    int which = 0;

    auto add_pq = [&](CLI::App* sub) {
        sub->add_option("--p", ep, "elliptic nome");
        sub->add_option("--q", eq, "deformation parameter");
    };
    auto* eth = eval->add_subcommand("theta", "theta(z)");
    eth->callback([&] { which = 1; });
    eth->add_option("--z", arg_z, "argument, as re or re,im");
    add_pq(eth);
    auto* erm = eval->add_subcommand("rmatrix", "R-matrix entries");
    erm->callback([&] { which = 2; });
    erm->add_option("--lambda", arg_lambda, "dynamical parameter");
    erm->add_option("--z", arg_z, "spectral parameter");
    erm->add_option("--kind", kind, "elliptic or rational");
    add_pq(erm);
    auto* evs = eval->add_subcommand("vseries", "terminating 12V11-style series");
    evs->callback([&] { which = 3; });
    evs->add_option("--a1", arg_a1, "leading parameter")->required();
    evs->add_option("--trailing", arg_trailing, "semicolon-separated trailing parameters")->required();
    add_pq(evs);
    auto* epr = eval->add_subcommand("pairing", "matrix-element pairing, closed form vs oracle");
    epr->callback([&] { which = 4; });
    epr->add_option("--M", eM);
    epr->add_option("--r", er);
    epr->add_option("--s", es);
    epr->add_option("--N", eN);
    epr->add_option("--k", ek);
    epr->add_option("--j", ej);
    epr->add_option("--w", arg_w, "first spectral parameter");
    epr->add_option("--z", arg_z, "second spectral parameter");
    epr->add_option("--lambda", arg_lambda, "dynamical parameter");
    add_pq(epr);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    if (verify->parsed()) return run_verify(chosen_group, opt, samples_override);

    try {
        ellu2::ModulusParams mp(ep, eq);
        switch (which) {
            case 1: {
                std::cout << show(ellu2::theta(parse_complex(arg_z), mp)) << "\n";
                break;
            }
            case 2: {
                ellu2::RMatrix R = kind == "rational"
                                       ? ellu2::rational_R(parse_complex(arg_lambda), eq)
                                       : ellu2::elliptic_R(parse_complex(arg_lambda),
                                                           parse_complex(arg_z), mp);
                for (int i = 0; i < 4; ++i) {
                    for (int j = 0; j < 4; ++j)
                        std::cout << show(R.entry(i, j)) << (j == 3 ? "" : "   ");
                    std::cout << "\n";
                }
                break;
            }
            case 3: {
                std::vector<Complex> trailing;
                std::istringstream ts(arg_trailing);
                std::string piece;
                while (std::getline(ts, piece, ';'))
                    if (!piece.empty()) trailing.push_back(parse_complex(piece));
                ellu2::VParams vp{parse_complex(arg_a1), trailing, mp};
                auto idx = ellu2::termination_index(vp);
                std::string value = show(ellu2::v_series(vp));
                std::cout << "value: " << value << "\n";
                std::cout << "termination index: " << (idx ? std::to_string(*idx) : "none") << "\n";
                std::cout << "balance residual: " << ellu2::balanced_residual(vp) << "\n";
                break;
            }
            case 4: {
                ellu2::MatrixElementIndex se(eM, er, es, parse_complex(arg_w));
                ellu2::MatrixElementIndex te(eN, ek, ej, parse_complex(arg_z));
                Complex lam = parse_complex(arg_lambda);
                ellu2::DiffOp closed = ellu2::pair_matrix_matrix_closed(se, te, mp);
                ellu2::DiffOp oracle = ellu2::pair_matrix_matrix_oracle(se, te, mp);
                std::cout << "closed form: " << show(closed.coeff(lam))
                          << "  shift " << closed.shift() << (closed.is_zero() ? " (zero)" : "")
                          << "\n";
                std::cout << "oracle:      " << show(oracle.coeff(lam))
                          << "  shift " << oracle.shift() << (oracle.is_zero() ? " (zero)" : "")
                          << "\n";
                break;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
