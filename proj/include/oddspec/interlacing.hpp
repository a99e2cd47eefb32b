#pragma once

#include <string>
#include <vector>

#include "oddspec/graph.hpp"
#include "oddspec/spectral.hpp"

namespace oddspec {

// Vertex partition carrying the Perron weights: class i contributes
// class_norms[i] = sum of nu_u^2 over u in classes[i]; the norms sum to 1.
struct WeightedPartition {
    std::vector<std::vector<int>> classes;
    PerronVector weights;
    std::vector<double> class_norms;

    int class_count() const { return static_cast<int>(classes.size()); }
};

// Weight-quotient matrix M and its symmetric companion B. With S the
// vertex-by-class matrix carrying nu_u in column i for u in V_i and
// D = diag(class norms), M = D^-1 S^T A S and B = D^-1/2 S^T A S D^-1/2,
// so the two are similar. Rows of M sum to lambda1.
struct QuotientMatrices {
    std::vector<std::vector<double>> m;  // t x t, row-major
    std::vector<std::vector<double>> b;  // symmetric
    std::vector<double> mu;              // eigenvalues of b, descending

    int class_count() const { return static_cast<int>(mu.size()); }
};

// One verified inequality (or equality), with the margin by which it held.
struct CheckItem {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // negative means violated
    bool ok = false;
};

// Audit record produced by the certifying operations below. `valid` means
// every check passed; `applicable` turns false when a precondition degrades
// the construction (reason says why) rather than outright failing it.
struct Certificate {
    std::string kind;
    bool valid = false;
    bool applicable = true;
    std::string reason;
    int base_vertex = -1;      // distance-partition certificates: the root u
    bool bipartition = false;  // set-weight certificates: {S, T} partitions V
    std::vector<int> class_sizes;
    std::vector<double> class_norms;
    std::vector<std::vector<double>> quotient;  // M
    std::vector<double> quotient_spectrum;      // mu, descending
    std::vector<CheckItem> checks;
};

// Validates that `classes` are disjoint, nonempty, and cover every vertex,
// then attaches Perron weights. Connected graphs only.
WeightedPartition make_weighted_partition(const Graph& g,
                                          std::vector<std::vector<int>> classes);

QuotientMatrices build_quotient(const Graph& g, const WeightedPartition& p);
QuotientMatrices build_quotient(const Graph& g,
                                const std::vector<std::vector<int>>& classes);

// Certifies lambda_i >= mu_i and lambda_(n+1-i) <= mu_(t+1-i) for i = 1..t
// (1e-8 slack); the i = 1 case of the second family records mu_t >= lambda_n.
Certificate check_interlacing(const Graph& g, const QuotientMatrices& q);

// Vertex u maximizing the neighborhood weight |rho_N(u)|^2; the maximum is
// always >= lambda1/n. Ties break to the smallest index. Connected, n >= 2.
int heavy_vertex(const Graph& g);

// For an independent set S and T = {v : N(v) meets S}, certifies
// |rho_S|^2 <= |rho_T|^2 and |rho_S|^2 <= 1/2, and reports whether {S, T}
// is a bipartition of g (the only way the first bound is tight).
Certificate independent_set_weight_check(const Graph& g, const std::vector<int>& s);

// Distance partition from u = heavy_vertex(g): V1 = sphere of radius 1,
// V2 = {u} + sphere of radius 2, V3 = everything farther. For connected
// non-bipartite g of odd girth >= 7 this quotient pins lambda_n from below:
// mu_3 >= lambda_n, and (lambda1 + mu_3)/n stays under girth7_upper_bound().
// V3 empty degrades to a 2-class quotient marked not applicable.
Certificate girth7_certificate(const Graph& g);

}  // namespace oddspec
