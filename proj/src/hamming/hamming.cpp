#include "hypertheta/hamming.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <ostream>
#include <string>

#include "hypertheta/error.hpp"
#include "hypertheta/lp.hpp"

namespace hypertheta {

namespace {

void require_instance(int n, int s) {
    if (!has_triangles(n, s))
        throw InputError("H(" + std::to_string(n) + ", " + std::to_string(s) +
                         ") has no triangles: s must be even with 0 < s <= floor(2n/3)");
}

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

bool has_triangles(int n, int s) { return n >= 1 && s > 0 && s % 2 == 0 && s <= (2 * n) / 3; }

Hypergraph build_hamming_hypergraph(int n, int s) {
    if (n < 1) throw InputError("dimension must be at least 1");
    if (n > kHammingCap) throw InstanceTooLarge("Hamming dimension " + std::to_string(n) + " exceeds the cap of 14");
    const int size = 1 << n;
    std::vector<Edge> edges;
    if (has_triangles(n, s)) {
        std::vector<int> sphere;
        for (int d = 0; d < size; ++d)
            if (std::popcount(static_cast<unsigned>(d)) == s) sphere.push_back(d);
        for (int x = 0; x < size; ++x) {
            for (int dy : sphere) {
                int y = x ^ dy;
                if (y <= x) continue;
                for (int dz : sphere) {
                    int z = x ^ dz;
                    if (z <= y) continue;
                    if (std::popcount(static_cast<unsigned>(y ^ z)) == s) edges.push_back({x, y, z});
                }
            }
        }
    }
    return Hypergraph(3, size, std::move(edges));
}

PermGroup hamming_isometry_group(int n) {
    if (n < 1 || n > kHammingCap) throw InputError("Hamming dimension out of range");
    const int size = 1 << n;
    auto coordinate_map = [&](auto&& image_of_bit) {
        Permutation p(static_cast<std::size_t>(size));
        for (int x = 0; x < size; ++x) {
            int y = 0;
            for (int i = 0; i < n; ++i)
                if (x >> i & 1) y |= 1 << image_of_bit(i);
            p[static_cast<std::size_t>(x)] = y;
        }
        return p;
    };
    std::vector<Permutation> gens;
    Permutation flip(static_cast<std::size_t>(size));
    for (int x = 0; x < size; ++x) flip[static_cast<std::size_t>(x)] = x ^ 1;
    gens.push_back(std::move(flip));
    if (n >= 2) {
        gens.push_back(coordinate_map([](int i) { return i == 0 ? 1 : i == 1 ? 0 : i; }));
        gens.push_back(coordinate_map([n](int i) { return (i + 1) % n; }));
    }
    return PermGroup(size, std::move(gens));
}

Rational krawtchouk(int n, int k, int t) {
    if (n < 0 || k < 0 || k > n || t < 0 || t > n) throw InputError("krawtchouk: index out of range");
    BigInt sum = 0;
    for (int i = 0; i <= k; ++i) {
        BigInt term = binomial(t, i) * binomial(n - t, k - i);
        if (i % 2) sum -= term;
        else sum += term;
    }
    Rational q(sum, binomial(n, k));
    q.canonicalize();
    return q;
}

Rational hahn(int n, int s, int k, int t) {
    if (s < 0 || s > n || k < 0 || k > std::min(s, n - s) || t < 0 || t > s)
        throw InputError("hahn: index out of range (need 0 <= k <= min(s, n-s), 0 <= t <= s)");
    Rational sum = 0;
    for (int i = 0; i <= k; ++i) {
        Rational term(binomial(k, i) * binomial(n + 1 - k, i) * binomial(t, i), binomial(s, i) * binomial(n - s, i));
        term.canonicalize();
        if (i % 2) sum -= term;
        else sum += term;
    }
    return sum;
}

PolyMin m_k(int n, int s) {
    if (s < 0 || s > n) throw InputError("m_k: s out of range");
    PolyMin best{krawtchouk(n, 0, s), 0};
    for (int k = 1; k <= n; ++k) {
        Rational v = krawtchouk(n, k, s);
        if (v < best.value) best = {v, k};
    }
    return best;
}

PolyMin m_q(int n, int s) {
    if (s < 0 || s > n || s % 2) throw InputError("m_q: s must be even and in [0, n]");
    PolyMin best{hahn(n, s, 0, s / 2), 0};
    for (int k = 1; k <= std::min(s, n - s); ++k) {
        Rational v = hahn(n, s, k, s / 2);
        if (v < best.value) best = {v, k};
    }
    return best;
}

Rational theta_hamming_link(int n, int s) {
    require_instance(n, s);
    Rational mq = m_q(n, s).value;
    return Rational(binomial(n, s)) * mq / (mq - 1);
}

Rational theta_hamming(int n, int s) {
    require_instance(n, s);
    Rational mk = m_k(n, s).value;
    Rational link = theta_hamming_link(n, s);
    Rational cube = Rational(BigInt(1) << n);
    return cube * (mk - link / Rational(binomial(n, s))) / (mk - 1);
}

HammingLp theta_hamming_lp(int n, int s) {
    require_instance(n, s);
    LpProblem<Rational> lp;
    lp.objective.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    lp.objective[0] = Rational(BigInt(1) << n);
    lp.eq_rows = {std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(1))};
    lp.eq_rhs = {Rational(1)};
    std::vector<Rational> ks;
    for (int k = 0; k <= n; ++k) ks.push_back(krawtchouk(n, k, s));
    lp.le_rows = {ks};
    lp.le_rhs = {theta_hamming_link(n, s) / Rational(binomial(n, s))};
    LpResult<Rational> r = solve_lp(lp);
    if (r.status != LpStatus::optimal) throw SolverError("Hamming triangle LP did not reach an optimum");
    HammingLp out{r.objective, r.x, Rational(0)};
    for (int k = 0; k <= n; ++k) out.a_at_s += r.x[static_cast<std::size_t>(k)] * ks[static_cast<std::size_t>(k)];
    return out;
}

HammingLp theta_hamming_link_lp(int n, int s) {
    require_instance(n, s);
    const int m = std::min(s, n - s);
    LpProblem<Rational> lp;
    lp.objective.assign(static_cast<std::size_t>(m) + 1, Rational(0));
    lp.objective[0] = Rational(binomial(n, s));
    lp.eq_rows.emplace_back(static_cast<std::size_t>(m) + 1, Rational(1));
    std::vector<Rational> qs;
    for (int k = 0; k <= m; ++k) qs.push_back(hahn(n, s, k, s / 2));
    lp.eq_rows.push_back(qs);
    lp.eq_rhs = {Rational(1), Rational(0)};
    LpResult<Rational> r = solve_lp(lp);
    if (r.status != LpStatus::optimal) throw SolverError("Hamming link LP did not reach an optimum");
    return HammingLp{r.objective, r.x, Rational(0)};
}

Rational krawtchouk_inner(int n, int k, int l) {
    Rational sum = 0;
    for (int t = 0; t <= n; ++t) sum += Rational(binomial(n, t)) * krawtchouk(n, k, t) * krawtchouk(n, l, t);
    return sum;
}

Rational hahn_inner(int n, int s, int k, int l) {
    Rational sum = 0;
    for (int t = 0; t <= s; ++t) {
        BigInt mult = binomial(s, t) * binomial(n - s, t);
        if (mult == 0) continue;
        sum += Rational(mult) * hahn(n, s, k, t) * hahn(n, s, l, t);
    }
    return sum;
}

int s_of(int n, const Rational& c) {
    if (c <= 0) throw InputError("c must be positive");
    Rational x = Rational(n) / c;
    BigInt half = x.get_num() / (2 * x.get_den());  // floor(x / 2) for x >= 0
    BigInt lo = 2 * half;
    BigInt hi = lo + 2;
    Rational dlo = x - Rational(lo);
    Rational dhi = Rational(hi) - x;
    BigInt s = dhi < dlo ? hi : lo;
    return static_cast<int>(s.get_si());
}

std::vector<DecayRow> decay_scan(int n_first, int n_last, const std::vector<Rational>& cs) {
    if (n_first < 1 || n_last < n_first) throw InputError("decay scan needs 1 <= n_first <= n_last");
    if (n_last > 200) throw InputError("decay scan supports n up to 200");
    std::vector<DecayRow> rows;
    for (const Rational& c : cs) {
        for (int n = n_first; n <= n_last; ++n) {
            int s = s_of(n, c);
            Rational density = theta_hamming(n, s) / Rational(BigInt(1) << n);
            rows.push_back(DecayRow{n, c, s, log_rational(density)});
        }
    }
    return rows;
}

void write_decay_csv(std::ostream& out, const std::vector<DecayRow>& rows) {
    out << "n,c,s,log_density\n";
    for (const DecayRow& r : rows) out << r.n << ',' << to_string(r.c) << ',' << r.s << ',' << fmt12(r.log_density) << '\n';
}

}  // namespace hypertheta
