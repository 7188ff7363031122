#pragma once

// Triangle hypergraphs of the Hamming cube: H(n, s) has the words of
// length n as vertices and the s-triangles (three words pairwise at Hamming
// distance s) as edges. Exact Krawtchouk / Hahn evaluation and the closed
// forms for theta(H(n, s)) and theta of its vertex link.

#include <iosfwd>
#include <vector>

#include "hypertheta/hypergraph.hpp"
#include "hypertheta/rational.hpp"
#include "hypertheta/symmetry.hpp"

namespace hypertheta {

inline constexpr int kHammingCap = 14;

/// s even and 0 < s <= floor(2n/3).
bool has_triangles(int n, int s);

/// Vertices are n-bit integers. Edges are empty when no s-triangle exists.
Hypergraph build_hamming_hypergraph(int n, int s);

/// Translation by e_0 and the coordinate permutations (0 1), (0 1 ... n-1).
PermGroup hamming_isometry_group(int n);

/// K^n_k(t), normalized by K^n_k(0) = 1.
Rational krawtchouk(int n, int k, int t);

/// Q^{n,s}_k(t) for 0 <= k <= min(s, n-s) and 0 <= t <= s, with Q_k(0) = 1.
Rational hahn(int n, int s, int k, int t);

struct PolyMin {
    Rational value;
    int argmin = 0;  ///< smallest attaining index
};

/// min over k = 0..n of K^n_k(s).
PolyMin m_k(int n, int s);
/// min over k = 0..min(s, n-s) of Q^{n,s}_k(s/2); s even.
PolyMin m_q(int n, int s);

/// theta of the link of a vertex: |H^n_s| M_Q / (M_Q - 1).
Rational theta_hamming_link(int n, int s);
/// theta(H(n, s)) = 2^n (M_K - theta_link / |H^n_s|) / (M_K - 1).
Rational theta_hamming(int n, int s);

struct HammingLp {
    Rational value;
    std::vector<Rational> a;
    /// A(s) = sum a_k K_k(s) at the optimum (triangle LP only); the program
    /// leaves out the constraint A(s) >= 0.
    Rational a_at_s;
};

/// max 2^n a_0 s.t. sum a_k = 1, sum a_k K_k(s) <= theta_link / |H^n_s|, a >= 0.
HammingLp theta_hamming_lp(int n, int s);
/// max |H^n_s| a_0 s.t. sum a_k = 1, sum a_k Q_k(s/2) = 0, a >= 0.
HammingLp theta_hamming_link_lp(int n, int s);

/// sum_t C(n,t) K_k(t) K_l(t).
Rational krawtchouk_inner(int n, int k, int l);
/// sum_t C(s,t) C(n-s,t) Q_k(t) Q_l(t): pairs of weight-s words at distance 2t.
Rational hahn_inner(int n, int s, int k, int l);

/// Even integer closest to n / c; a tie goes to the smaller even integer.
int s_of(int n, const Rational& c);

struct DecayRow {
    int n = 0;
    Rational c;
    int s = 0;
    double log_density = 0.0;  ///< ln(theta(H(n, s)) / 2^n)
};

/// Rows ordered by (c as listed, n ascending).
std::vector<DecayRow> decay_scan(int n_first, int n_last, const std::vector<Rational>& cs);

/// Header "n,c,s,log_density"; c as a rational, 12 significant digits.
void write_decay_csv(std::ostream& out, const std::vector<DecayRow>& rows);

}  // namespace hypertheta
