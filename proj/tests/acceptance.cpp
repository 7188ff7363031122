// Acceptance suite: one [PASS]/[FAIL] line per criterion.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypertheta/cli.hpp"
#include "hypertheta/hamming.hpp"
#include "hypertheta/hoffman.hpp"
#include "hypertheta/hypergraph.hpp"
#include "hypertheta/symmetry.hpp"
#include "hypertheta/theta.hpp"

using namespace hypertheta;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (!pass) detail << "; ";
        else detail.str("");
        pass = false;
        detail << why;
    }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string run_cli(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

WeightVector uniform_weights(int n, std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    WeightVector w(static_cast<std::size_t>(n));
    for (double& v : w) v = u(rng);
    return w;
}

Hypergraph random_instance(std::mt19937_64& rng, int n_min, int n_max) {
    std::uniform_int_distribution<int> nd(n_min, n_max);
    std::uniform_real_distribution<double> pd(0.1, 0.9);
    int n = nd(rng);
    return random_hypergraph(3, n, pd(rng), rng);
}

void mantel_exact(Verdict& v) {
    auto t0 = Clock::now();
    for (int n = 4; n <= 12; ++n) {
        int code = 0;
        json j = json::parse(run_cli({"mantel", "--n", std::to_string(n), "--exact"}, code));
        Rational value(n * n, 4);
        value.canonicalize();
        Rational beta(n - 2, 2 * (n - 3));
        beta.canonicalize();
        if (code != 0 || j["value"] != to_string(value) || j["alpha"] != "1/2" || j["beta"] != to_string(beta))
            v.fail("n=" + std::to_string(n) + " gave " + j.dump());
    }
    double secs = seconds_since(t0);
    if (secs >= 1.0) v.fail("took " + std::to_string(secs) + " s");
    if (v.pass) v.detail << "n=4..12 exact in " << secs << " s";
}

void mantel_pipeline(Verdict& v) {
    Hypergraph h = mantel_hypergraph(4);
    double generic = theta(h).value;
    double reduced = theta_transitive(h, mantel_group(4)).value;
    v.detail.precision(12);
    v.detail << "generic " << generic << ", transitive " << reduced;
    if (std::abs(generic - 4.0) > 1e-5) v.fail("generic value " + std::to_string(generic));
    if (std::abs(reduced - generic) > 1e-5) v.fail("transitive value " + std::to_string(reduced));
}

void hamming_triple(Verdict& v) {
    for (auto [n, s] : {std::pair{3, 2}, std::pair{4, 2}}) {
        double formula = to_double(theta_hamming(n, s));
        double lp = to_double(theta_hamming_lp(n, s).value);
        double sdp = theta(build_hamming_hypergraph(n, s)).value;
        v.detail << "(" << n << "," << s << "): " << formula << " / " << lp << " / " << sdp << "  ";
        if (std::abs(formula - lp) > 1e-5 || std::abs(formula - sdp) > 1e-5 || std::abs(lp - sdp) > 1e-5)
            v.fail("(" + std::to_string(n) + "," + std::to_string(s) + ") disagree");
    }
    if (theta_hamming(3, 2) != 4 || theta_hamming_lp(3, 2).value != 4) v.fail("(3,2) not exactly 4");
    if (alpha(build_hamming_hypergraph(3, 2)).value != 4) v.fail("alpha(H(3,2)) != 4");
}

void krawtchouk_identity(Verdict& v) {
    for (int n : {8, 12, 16, 20}) {
        Rational expect(-1, n - 1);
        Rational k2 = krawtchouk(n, 2, n / 2);
        PolyMin mk = m_k(n, n / 2);
        if (k2 != expect) v.fail("K_2(" + std::to_string(n / 2) + ") = " + to_string(k2) + " for n=" + std::to_string(n));
        if (mk.value > expect) v.fail("m_k = " + to_string(mk.value) + " above the identity for n=" + std::to_string(n));
        if (v.pass) v.detail << "n=" << n << ": m_k " << to_string(mk.value) << " at k=" << mk.argmin << "  ";
    }
}

void sandwich(Verdict& v) {
    std::mt19937_64 rng(20240501);
    int violations = 0;
    double worst = -1e9;
    for (int t = 0; t < 200; ++t) {
        Hypergraph h = random_instance(rng, 4, 8);
        double th = theta(h).value;
        double a = alpha(h).value;
        std::vector<Rational> ones(static_cast<std::size_t>(h.order()), Rational(1));
        double chi = to_double(*chi_star_exact(complement(h), ones).exact);
        worst = std::max({worst, a - th, th - 2 * chi});
        if (a > th + 1e-6 || th > 2 * chi + 1e-6) ++violations;
    }
    v.detail << "200 instances, " << violations << " violations, worst slack " << worst;
    if (violations) v.fail(v.detail.str());
}

void hoffman_suite(Verdict& v) {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> nd(4, 8), wd(1, 9);
    std::uniform_real_distribution<double> pd(0.2, 0.9);
    int violations = 0;
    for (int t = 0; t < 100; ++t) {
        Hypergraph h(1, 0);
        int n = 0;
        do {
            n = nd(rng);
            h = random_hypergraph(3, n, pd(rng), rng);
        } while (h.empty());
        std::vector<Rational> weights;
        for (std::size_t e = 0; e < h.edge_count(); ++e) weights.emplace_back(wd(rng));
        HoffmanReport rep = hoffman_report(WeightedHypergraph(3, n, h.edges(), weights));
        bool ok = rep.theta <= rep.hoff + 1e-6 && (!rep.alpha || *rep.alpha <= rep.theta + 1e-6);
        if (!ok) {
            ++violations;
            v.fail("instance " + std::to_string(t) + ": theta " + std::to_string(rep.theta) + ", hoff " +
                   std::to_string(rep.hoff));
        }
    }

    WeightedHypergraph single(3, 3, {{0, 1, 2}}, {Rational(1)});
    std::vector<double> mu1;
    for (const Rational& q : vertex_measure(single)) mu1.push_back(to_double(q));
    SdpOptions tight;
    tight.gap_tol = 1e-10;
    tight.feas_tol = 1e-10;
    double th = theta(single.underlying(), mu1, tight).value;
    double hf = hoff(single);
    if (std::abs(th - 2.0 / 3) > 1e-9 || std::abs(hf - 2.0 / 3) > 1e-9)
        v.fail("single edge: theta " + std::to_string(th) + ", hoff " + std::to_string(hf));
    if (v.pass) {
        v.detail.precision(12);
        v.detail << "100 instances, " << violations << " violations; single edge theta " << th << ", hoff " << hf;
    }
}

void antiblocker(Verdict& v) {
    Hypergraph h(3, 3, {{0, 1, 2}});
    WeightVector f{1, 1, 0}, g{1, 1, 1};
    bool in_h = theta_membership(h, f).member;
    bool in_complement = theta_membership(complement(h), g).member;
    double probe = antiblocker_probe(f, g);
    v.detail << "chi_[2] in H: " << in_h << ", chi_[3] in complement: " << in_complement << ", probe " << probe;
    if (!in_h || !in_complement || !(probe > 1)) v.fail(v.detail.str());
}

void duality_product(Verdict& v) {
    std::mt19937_64 rng(4242);
    int violations = 0;
    double worst = -1e9;
    for (int t = 0; t < 100; ++t) {
        Hypergraph h = random_instance(rng, 3, 7);
        WeightVector l = uniform_weights(h.order(), rng, 0.0, 1.0);
        WeightVector w = uniform_weights(h.order(), rng, 0.0, 1.0);
        double lw = 0;
        for (std::size_t i = 0; i < l.size(); ++i) lw += l[i] * w[i];
        double prod = theta(h, l).value * theta_dual(complement(h), w).value;
        worst = std::max(worst, lw - prod);
        if (prod < lw - 1e-6) ++violations;
    }
    v.detail << "100 instances, " << violations << " violations, worst l.w - product " << worst;
    if (violations) v.fail(v.detail.str());
}

void negative_weights(Verdict& v) {
    std::mt19937_64 rng(31337);
    double worst = 0;
    for (int t = 0; t < 50; ++t) {
        Hypergraph h = random_instance(rng, 4, 8);
        WeightVector w = uniform_weights(h.order(), rng, -1.0, 1.0);
        WeightVector wp = w;
        for (double& x : wp) x = std::max(x, 0.0);
        worst = std::max(worst, std::abs(theta(h, w).value - theta(h, wp).value));
    }
    v.detail << "50 instances, max |difference| " << worst;
    if (worst > 1e-6) v.fail(v.detail.str());
}

void decay_scan_check(Verdict& v) {
    auto t0 = Clock::now();
    int code = 0;
    std::istringstream csv(run_cli({"scan-decay", "--c", "2,3,4", "--n", "20:60"}, code));
    double secs = seconds_since(t0);
    std::map<int, std::map<int, double>> curve;  // c -> n -> log density
    std::string line;
    std::getline(csv, line);
    while (std::getline(csv, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string n, c, s, ld;
        std::getline(row, n, ',');
        std::getline(row, c, ',');
        std::getline(row, s, ',');
        std::getline(row, ld, ',');
        curve[std::stoi(c)][std::stoi(n)] = std::stod(ld);
    }
    if (code != 0 || curve.size() != 3) {
        v.fail("scan-decay exited " + std::to_string(code));
        return;
    }
    std::ostringstream sub;
    sub << "runtime " << secs << " s " << (secs < 60 ? "ok" : "too slow");
    if (secs >= 60) v.fail("runtime");
    for (int c : {3, 4}) {
        std::vector<int> rises;
        for (auto it = std::next(curve[c].begin()); it != curve[c].end(); ++it)
            if (!(it->second < std::prev(it)->second)) rises.push_back(it->first);
        sub << "; c=" << c << " strictly decreasing: ";
        if (rises.empty()) {
            sub << "yes";
        } else {
            sub << "no, rises at n=";
            for (std::size_t i = 0; i < rises.size(); ++i) sub << (i ? "," : "") << rises[i];
            v.fail("c=" + std::to_string(c) + " not decreasing");
        }
    }
    std::vector<int> not_lowest;
    for (auto [n, y4] : curve[4])
        if (!(y4 < curve[2][n] && y4 < curve[3][n])) not_lowest.push_back(n);
    sub << "; c=4 lowest: ";
    if (not_lowest.empty()) {
        sub << "yes";
    } else {
        sub << "no at n=";
        for (std::size_t i = 0; i < not_lowest.size(); ++i) sub << (i ? "," : "") << not_lowest[i];
        v.fail("c=4 not lowest everywhere");
    }
    v.detail.str("");
    v.detail << sub.str();
}

void orthogonality(Verdict& v) {
    long checked = 0;
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l, ++checked) {
                Rational ip = krawtchouk_inner(n, k, l);
                if ((k != l && ip != 0) || (k == l && ip <= 0))
                    v.fail("Krawtchouk n=" + std::to_string(n) + " <" + std::to_string(k) + "," + std::to_string(l) +
                           "> = " + to_string(ip));
            }
    for (int n = 1; n <= 8; ++n)
        for (int s = 0; s <= n; ++s) {
            int top = std::min(s, n - s);
            for (int k = 0; k <= top; ++k)
                for (int l = 0; l <= top; ++l, ++checked) {
                    Rational ip = hahn_inner(n, s, k, l);
                    if ((k != l && ip != 0) || (k == l && ip <= 0))
                        v.fail("Hahn n=" + std::to_string(n) + " s=" + std::to_string(s) + " <" + std::to_string(k) +
                               "," + std::to_string(l) + "> = " + to_string(ip));
                }
        }
    if (v.pass) v.detail << checked << " exact inner products";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
        {"Mantel LP exact", mantel_exact},
        {"Mantel generic and transitive agree", mantel_pipeline},
        {"Hamming formula, LP and SDP agree", hamming_triple},
        {"Krawtchouk K_2(n/2) identity", krawtchouk_identity},
        {"alpha <= theta <= 2 chi*(complement)", sandwich},
        {"alpha <= theta <= hoff", hoffman_suite},
        {"antiblocker counterexample", antiblocker},
        {"duality product", duality_product},
        {"negative weights ignored", negative_weights},
        {"decay scan", decay_scan_check},
        {"orthogonality", orthogonality},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        auto t0 = Clock::now();
        try {
            criteria[i].second(v);
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        if (!v.pass) ++failed;
        std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << " (" << v.detail.str()
                  << ") [" << seconds_since(t0) << " s]" << std::endl;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failed ? 1 : 0;
}
