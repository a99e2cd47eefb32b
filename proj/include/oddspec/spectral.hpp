#pragma once

#include <cstdint>
#include <vector>

#include "oddspec/graph.hpp"

namespace oddspec {

// Real eigenvalues sorted descending: lambda1() >= ... >= lambda_min().
class Spectrum {
public:
    Spectrum() = default;
    static Spectrum from_unsorted(std::vector<double> values);

    int size() const { return static_cast<int>(values_.size()); }
    double lambda1() const;
    double lambda_min() const;
    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

// Positive unit eigenvector of a connected graph for lambda1.
struct PerronVector {
    std::vector<double> entries;  // all > 0, Euclidean norm 1
    double lambda1 = 0.0;

    double norm() const;
};

// Strongly regular graph parameters (n, k, lambda, mu).
struct SrgParams {
    int n = 0;
    int k = 0;
    int lambda = 0;
    int mu = 0;
};

// Spectrum of a strongly regular graph determined by its parameters:
// lambda1 = k, and theta/tau the roots of x^2 - (lambda-mu)x - (k-mu).
struct SrgSpectrum {
    double lambda1 = 0.0;
    double theta = 0.0;
    double tau = 0.0;
    int mult_theta = 0;
    int mult_tau = 0;

    double ratio(int n) const { return (lambda1 + tau) / n; }
    Spectrum to_spectrum(int n) const;
};

// Dense symmetric eigensolve of the adjacency matrix, all n eigenvalues.
Spectrum adjacency_spectrum(const Graph& g);

// Eigenvalues of the signless Laplacian Q = A + D; the smallest one is 0
// exactly when some connected component is bipartite.
Spectrum signless_laplacian_spectrum(const Graph& g);

// Power iteration on A + I (the shift breaks the +-lambda1 symmetry of
// bipartite graphs) to successive-iterate distance < 1e-12, finished with a
// Rayleigh-quotient evaluation. Requires a connected graph.
PerronVector perron_vector(const Graph& g);

// Character-sum spectrum of the F_2^m Cayley graph: the eigenvalue attached
// to x is sum over generators s of (-1)^(x . s). Matches the dense spectrum
// of generate_cayley_f2 entrywise.
Spectrum cayley_f2_spectrum(int m, const std::vector<std::uint32_t>& generators);

SrgSpectrum srg_spectrum(const SrgParams& p);

}  // namespace oddspec
