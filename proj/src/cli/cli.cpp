#include "hypertheta/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hypertheta/error.hpp"
#include "hypertheta/hamming.hpp"
#include "hypertheta/hoffman.hpp"
#include "hypertheta/hypergraph.hpp"
#include "hypertheta/io.hpp"
#include "hypertheta/symmetry.hpp"
#include "hypertheta/theta.hpp"

namespace hypertheta::cli {

namespace {

using Json = nlohmann::ordered_json;

double round12(double v) {
    if (!std::isfinite(v)) return v;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

Json number(double v) {
    if (std::isinf(v)) return v > 0 ? Json("inf") : Json("-inf");
    if (std::isnan(v)) return Json("nan");
    return Json(round12(v));
}

Json vector_json(std::span<const double> v) {
    Json a = Json::array();
    for (double x : v) a.push_back(number(x));
    return a;
}

Json matrix_json(const Eigen::MatrixXd& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(number(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json certificate_json(const ThetaCertificate& c) {
    Json j;
    j["uniformity"] = c.uniformity;
    j["vertices"] = c.vertices;
    j["scale"] = number(c.scale);
    j["matrix"] = matrix_json(c.matrix);
    Json children = Json::array();
    for (const auto& [v, child] : c.children) {
        Json cj;
        cj["vertex"] = v;
        cj["node"] = certificate_json(child);
        children.push_back(std::move(cj));
    }
    j["children"] = std::move(children);
    return j;
}

Json diagnostics_json(const SolverDiagnostics& d) {
    Json j;
    j["status"] = d.status;
    j["iterations"] = d.iterations;
    j["blocks"] = d.blocks;
    j["constraints"] = d.constraints;
    j["dropped_constraints"] = d.dropped_constraints;
    j["primal_objective"] = number(d.primal_objective);
    j["dual_objective"] = number(d.dual_objective);
    j["relative_gap"] = number(d.relative_gap);
    j["primal_infeasibility"] = number(d.primal_infeasibility);
    j["dual_infeasibility"] = number(d.dual_infeasibility);
    if (!d.message.empty()) j["message"] = d.message;
    return j;
}

struct Common {
    std::string file;
    std::string weights;
    double tol = 1e-8;
};

WeightVector load_weights(const Common& c, int n) {
    if (c.weights.empty()) return WeightVector(static_cast<std::size_t>(n), 1.0);
    return read_weights_file(c.weights, n);
}

std::vector<Rational> load_weights_exact(const Common& c, int n) {
    if (c.weights.empty()) return std::vector<Rational>(static_cast<std::size_t>(n), Rational(1));
    return read_weights_file_exact(c.weights, n);
}

SdpOptions sdp_options(const Common& c) {
    SdpOptions o;
    o.gap_tol = c.tol;
    o.feas_tol = c.tol;
    return o;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::vector<Rational> parse_c_list(const std::string& text) {
    std::vector<Rational> cs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Rational c = parse_rational(item);
        if (c <= 0) throw InputError("c values must be positive");
        cs.push_back(c);
    }
    if (cs.empty()) throw InputError("empty --c list");
    return cs;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto colon = text.find(':');
    auto to_int = [&](const std::string& s) {
        Rational q = parse_rational(s);
        if (q.get_den() != 1 || !q.get_num().fits_sint_p()) throw InputError("not an integer: '" + s + "'");
        return static_cast<int>(q.get_num().get_si());
    };
    if (colon == std::string::npos) {
        int v = to_int(text);
        return {v, v};
    }
    return {to_int(text.substr(0, colon)), to_int(text.substr(colon + 1))};
}

const char* kTieRule =
    "For each n and c, s is the even integer closest to n/c; when n/c lies exactly halfway between two even "
    "integers, the smaller one is used.";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Theta bodies of uniform hypergraphs: theta numbers, Mantel and Hamming closed forms, Hoffman bounds.",
                 "hypertheta"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    Common common;
    auto add_file = [&](CLI::App* sub, const char* what) {
        sub->add_option("--file", common.file, what)->required()->check(CLI::ExistingFile);
    };
    auto add_weights = [&](CLI::App* sub) {
        sub->add_option("--weights", common.weights, "Vertex weight file, one value per line (default: all ones)")
            ->check(CLI::ExistingFile);
    };

    auto* alpha_cmd = app.add_subcommand("alpha", "Weighted independence number by exhaustive search");
    add_file(alpha_cmd, "Hypergraph file (.hg)");
    add_weights(alpha_cmd);

    auto* chi_cmd = app.add_subcommand("chistar", "Weighted fractional chromatic number (exact LP)");
    add_file(chi_cmd, "Hypergraph file (.hg)");
    add_weights(chi_cmd);

    bool with_certificate = false;
    auto* theta_cmd = app.add_subcommand("theta", "Theta number max w.f over the theta body");
    add_file(theta_cmd, "Hypergraph file (.hg)");
    add_weights(theta_cmd);
    theta_cmd->add_option("--tol", common.tol, "SDP gap and feasibility tolerance")->check(CLI::PositiveNumber);
    theta_cmd->add_flag("--certificate", with_certificate, "Include the lifted matrix certificate");

    auto* dual_cmd = app.add_subcommand("theta-dual", "Dual-body program: min lambda over complement-link rows");
    add_file(dual_cmd, "Hypergraph file (.hg)");
    add_weights(dual_cmd);
    dual_cmd->add_option("--tol", common.tol, "SDP gap and feasibility tolerance")->check(CLI::PositiveNumber);

    std::string point_file;
    double member_tol = 1e-7;
    auto* member_cmd = app.add_subcommand("member", "Membership of a point in the theta body");
    add_file(member_cmd, "Hypergraph file (.hg)");
    member_cmd->add_option("--point", point_file, "Point file, one coordinate per line")
        ->required()
        ->check(CLI::ExistingFile);
    member_cmd->add_option("--tol", member_tol, "Acceptance tolerance on the gauge")->check(CLI::PositiveNumber);
    member_cmd->add_flag("--certificate", with_certificate, "Include the certificate when the point is accepted");

    int mantel_n = 0;
    bool exact = false;
    auto* mantel_cmd = app.add_subcommand("mantel", "Exact theta of the triangle hypergraph on the edges of K_n");
    mantel_cmd->add_option("--n", mantel_n, "Number of vertices of K_n (n >= 4)")->required();
    mantel_cmd->add_flag("--exact", exact, "Print rationals only");

    int ham_n = 0, ham_s = 0;
    auto* ham_cmd = app.add_subcommand("hamming", "Closed-form theta of the s-triangle hypergraph of the n-cube");
    ham_cmd->add_option("--n", ham_n, "Cube dimension")->required();
    ham_cmd->add_option("--s", ham_s, "Triangle side (even, 0 < s <= floor(2n/3))")->required();
    ham_cmd->add_flag("--exact", exact, "Print rationals only");

    std::string c_list = "2,3,4", n_range = "20:150", out_path;
    auto* scan_cmd = app.add_subcommand("scan-decay", "Log-density ln(theta/2^n) of H(n, s(n, c)) over a grid");
    scan_cmd->add_option("--c", c_list, "Comma-separated list of c values (rationals allowed)");
    scan_cmd->add_option("--n", n_range, "Range first:last of n (inclusive, n <= 200)");
    scan_cmd->add_option("--out", out_path, "CSV output file (default: CSV on stdout)");
    scan_cmd->footer(kTieRule);

    auto* hoff_cmd = app.add_subcommand("hoffman", "Hoffman bound of an edge-weighted hypergraph");
    add_file(hoff_cmd, "Weighted hypergraph file (.whg)");

    unsigned long long seed = 42;
    auto* check_cmd = app.add_subcommand("check", "Run the property suite of every module");
    check_cmd->add_option("--seed", seed, "Random seed");

    app.footer(std::string("scan-decay: ") + kTieRule);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::ostringstream sink;
        int code = app.exit(e, sink, err);
        if (code == 0) {
            out << sink.str();
            return kExitOk;
        }
        return kExitBadInput;
    }

    try {
        Json j;
        if (alpha_cmd->parsed()) {
            Hypergraph h = read_hypergraph_file(common.file);
            AlphaResult a = alpha(h, load_weights(common, h.order()));
            j["value"] = number(a.value);
            j["witness"] = a.witness;
        } else if (chi_cmd->parsed()) {
            Hypergraph h = read_hypergraph_file(common.file);
            ChiStarResult c = chi_star_exact(h, load_weights_exact(common, h.order()));
            j["value"] = number(c.value);
            j["exact"] = c.exact ? to_string(*c.exact) : "";
            Json coloring = Json::array();
            for (const auto& [set, lambda] : c.coloring) {
                Json item;
                item["set"] = set;
                item["weight"] = number(lambda);
                coloring.push_back(std::move(item));
            }
            j["coloring"] = std::move(coloring);
        } else if (theta_cmd->parsed()) {
            Hypergraph h = read_hypergraph_file(common.file);
            ThetaResult t = theta(h, load_weights(common, h.order()), sdp_options(common));
            j["value"] = number(t.value);
            j["f"] = vector_json(t.f);
            j["diagnostics"] = diagnostics_json(t.diagnostics);
            if (with_certificate) j["certificate"] = certificate_json(t.certificate);
        } else if (dual_cmd->parsed()) {
            Hypergraph h = read_hypergraph_file(common.file);
            ThetaDualResult d = theta_dual(h, load_weights(common, h.order()), sdp_options(common));
            j["value"] = number(d.value);
            j["z"] = matrix_json(d.z);
            j["diagnostics"] = diagnostics_json(d.diagnostics);
        } else if (member_cmd->parsed()) {
            Hypergraph h = read_hypergraph_file(common.file);
            WeightVector f = read_weights_file(point_file, h.order());
            MembershipResult m = theta_membership(h, f, member_tol);
            j["member"] = m.member;
            j["gauge"] = number(m.gauge);
            j["diagnostics"] = diagnostics_json(m.diagnostics);
            if (with_certificate && m.certificate) j["certificate"] = certificate_json(*m.certificate);
        } else if (mantel_cmd->parsed()) {
            MantelResult m = mantel_theta(mantel_n);
            j["n"] = mantel_n;
            j["value"] = to_string(m.value);
            j["alpha"] = to_string(m.alpha);
            j["beta"] = to_string(m.beta);
            if (!exact) {
                j["value_decimal"] = number(to_double(m.value));
                j["alpha_decimal"] = number(to_double(m.alpha));
                j["beta_decimal"] = number(to_double(m.beta));
            }
        } else if (ham_cmd->parsed()) {
            Rational th = theta_hamming(ham_n, ham_s);
            Rational link = theta_hamming_link(ham_n, ham_s);
            PolyMin mk = m_k(ham_n, ham_s), mq = m_q(ham_n, ham_s);
            j["n"] = ham_n;
            j["s"] = ham_s;
            j["theta"] = to_string(th);
            j["theta_link"] = to_string(link);
            j["M_K"] = to_string(mk.value);
            j["M_K_argmin"] = mk.argmin;
            j["M_Q"] = to_string(mq.value);
            j["M_Q_argmin"] = mq.argmin;
            if (!exact) {
                j["theta_decimal"] = number(to_double(th));
                j["theta_link_decimal"] = number(to_double(link));
                j["M_K_decimal"] = number(to_double(mk.value));
                j["M_Q_decimal"] = number(to_double(mq.value));
                j["log_density"] = number(log_rational(th / Rational(BigInt(1) << ham_n)));
            }
        } else if (scan_cmd->parsed()) {
            auto [first, last] = parse_range(n_range);
            std::vector<DecayRow> rows = decay_scan(first, last, parse_c_list(c_list));
            if (out_path.empty()) {
                write_decay_csv(out, rows);
                return kExitOk;
            }
            std::ofstream f(out_path);
            if (!f) throw InputError("cannot write '" + out_path + "'");
            write_decay_csv(f, rows);
            if (!f) throw InputError("write to '" + out_path + "' failed");
            j["rows"] = rows.size();
            j["out"] = out_path;
        } else if (hoff_cmd->parsed()) {
            WeightedEdgeList in = read_weighted_edges_file(common.file);
            WeightedHypergraph x(in.r, in.n, in.edges, in.weights);
            HoffmanReport rep = hoffman_report(x);
            j["lambda"] = vector_json(rep.levels);
            j["hoff"] = number(rep.hoff);
            j["theta"] = number(rep.theta);
            j["alpha"] = rep.alpha ? number(*rep.alpha) : Json(nullptr);
            j["retained_vertices"] = x.original_vertices();
        } else if (check_cmd->parsed()) {
            std::vector<CheckOutcome> outcomes = run_property_checks(seed);
            Json results = Json::array();
            int failed = 0;
            for (const CheckOutcome& o : outcomes) {
                Json item;
                item["module"] = o.module;
                item["name"] = o.name;
                item["passed"] = o.passed;
                if (!o.detail.empty()) item["detail"] = o.detail;
                results.push_back(std::move(item));
                failed += o.passed ? 0 : 1;
            }
            j["seed"] = seed;
            j["checks"] = outcomes.size();
            j["failed"] = failed;
            j["results"] = std::move(results);
            emit(out, j);
            return failed == 0 ? kExitOk : kExitCheckFailed;
        }
        emit(out, j);
        return kExitOk;
    } catch (const FormatError& e) {
        Json j;
        j["error"] = e.what();
        j["line"] = e.line();
        j["column"] = e.column();
        err << j.dump() << '\n';
        return kExitBadInput;
    } catch (const InputError& e) {
        Json j;
        j["error"] = e.what();
        err << j.dump() << '\n';
        return kExitBadInput;
    } catch (const SolverError& e) {
        Json j;
        j["error"] = e.what();
        err << j.dump() << '\n';
        return kExitSolverFailure;
    }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace hypertheta::cli
