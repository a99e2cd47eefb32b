#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oddspec {

enum class BoundKind {
    RootUpper,      // 1 - (2l/(2l-1)) x0 for odd girth >= 2l+3
    LambertUpper,     // W(1/e)/(k-4)
    CycleLower,       // 2(1-cos(pi/k))/k, attained by C_k
    Girth7Upper,      // second-largest root of 54x^3+423x^2-700x+27
    FoldedCubeLower,  // 1/32, attained by the folded 7-cube
};

// Auxiliary data backing a bound value.
struct BoundWitness {
    std::optional<double> x0;                          // root of g for RootUpper
    std::optional<std::pair<double, double>> optimizer;  // (delta*, alpha*)
    std::optional<std::array<double, 3>> cubic_roots;  // sorted descending
};

struct BoundResult {
    BoundKind kind;
    int odd_girth_k = 0;  // smallest odd girth the bound applies to
    int ell = 0;          // k = 2*ell + 3 where applicable, else 0
    double value = 0.0;
    BoundWitness witness;
};

// One row of the bounds table for a fixed odd girth.
struct GammaTableRow {
    int odd_girth_k = 0;
    double upper = 0.0;
    std::string upper_witness;
    double lower = 0.0;
    std::string lower_witness;
};

// True iff lambda1 <= -lambdan^(2l-1) n / (lambda1^(2l-1) - lambdan^(2l-1))
// within 1e-9 slack; holds for every graph of odd girth >= 2l+3.
bool spectral_moment_check(double lambda1, double lambdan, int n, int ell);

// Unique root in (0,1) of g(x) = x^(2l) + 2lx - 2l + 1, |g(x0)| <= 1e-13.
double find_x0(int ell);

BoundResult root_bound(int ell);

// Principal branch on [0, inf): w >= 0 with w e^w = x, |w e^w - x| <= 1e-13.
double lambert_w(double x);

BoundResult lambert_upper_bound(int k);

BoundResult cycle_lower_bound(int k);

// Diagnostic for an easy algebra slip in the objective's radicand: the
// `quotient` form comes from the 3x3 quotient-matrix eigenvalue; `alternate`
// replaces its -4ad^2+4ad tail with a cancelling -4ad+4ad pair. The alternate
// goes negative inside the domain, so the quotient form is authoritative.
struct Girth7RadicandVariants {
    double quotient = 0.0;
    double alternate = 0.0;
    bool agree = false;
};
Girth7RadicandVariants girth7_radicand_variants(double delta, double alpha);

// delta * (1 + mu3/lambda1) where mu3 is the least eigenvalue of the
// parametrized 3x3 distance-partition quotient matrix. Domain 0 < delta <
// alpha < 1/2; throws numerical_domain_error if the radicand goes negative.
double girth7_objective(double delta, double alpha);

// Least eigenvalue of the parametrized quotient matrix, normalized to
// lambda1 = 1; computed by a symmetric 3x3 eigensolve (cross-check route).
double girth7_quotient_min_eigenvalue(double delta, double alpha);

// Second-largest root of 54x^3 + 423x^2 - 700x + 27, cross-checked against
// grid search (step <= 1e-3) plus simplex refinement of girth7_objective;
// throws internal_consistency_error if the two routes disagree beyond 1e-6.
BoundResult girth7_upper_bound();

// Best-known bound per odd girth, one row per odd k in 3..k_max:
// upper 1 (k=3), 3-2sqrt2 (k=5), girth-7 root (k in {7,9}), root bound (k>=11);
// lower K_n (k=3), Higman-Sims (k=5), folded 7-cube (k=7), C_k otherwise.
std::vector<GammaTableRow> gamma_table(int k_max);

// Unrounded upper bound for the ratio (lambda1+lambdan)/n of any graph with
// the given finite odd girth (same selector as gamma_table).
double upper_bound_for_odd_girth(int k);

// Directional 4-decimal roundings used when rendering table values: upper
// bounds round up, lower bounds round down, so printed values stay valid.
double round_up_4(double v);
double round_down_4(double v);

}  // namespace oddspec
