#include "oddspec/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "oddspec/errors.hpp"

namespace oddspec {

Spectrum Spectrum::from_unsorted(std::vector<double> values) {
    std::sort(values.begin(), values.end(), std::greater<double>());
    Spectrum s;
    s.values_ = std::move(values);
    return s;
}

double Spectrum::lambda1() const {
    if (values_.empty()) throw invalid_parameter("empty spectrum");
    return values_.front();
}

double Spectrum::lambda_min() const {
    if (values_.empty()) throw invalid_parameter("empty spectrum");
    return values_.back();
}

double PerronVector::norm() const {
    double s = 0.0;
    for (double x : entries) s += x * x;
    return std::sqrt(s);
}

namespace {

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a(u, v) = 1.0;
    return a;
}

Spectrum symmetric_spectrum(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();  // ascending
    std::vector<double> values(ev.size());
    for (int i = 0; i < ev.size(); ++i) values[static_cast<std::size_t>(i)] = ev(ev.size() - 1 - i);
    return Spectrum::from_unsorted(std::move(values));
}

}  // namespace

Spectrum adjacency_spectrum(const Graph& g) {
    if (g.vertex_count() < 1) throw invalid_parameter("spectrum of an empty graph");
    return symmetric_spectrum(adjacency_matrix(g));
}

Spectrum signless_laplacian_spectrum(const Graph& g) {
    if (g.vertex_count() < 1) throw invalid_parameter("spectrum of an empty graph");
    Eigen::MatrixXd q = adjacency_matrix(g);
    for (int u = 0; u < g.vertex_count(); ++u) q(u, u) += g.degree(u);
    return symmetric_spectrum(q);
}

PerronVector perron_vector(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw invalid_parameter("Perron vector of an empty graph");
    if (connected_components(g).size() != 1)
        throw invalid_parameter("Perron vector requires a connected graph");

    const Eigen::MatrixXd a = adjacency_matrix(g);
    Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));

    constexpr double kTol = 1e-12;
    constexpr int kMaxIter = 2'000'000;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        Eigen::VectorXd next = a * v + v;  // (A + I) v
        next.normalize();
        const double dist = (next - v).norm();
        v = std::move(next);
        if (dist < kTol) break;
    }
    // one more (A + I) sweep, then Rayleigh quotient for the eigenvalue
    Eigen::VectorXd refined = a * v + v;
    refined.normalize();
    v = std::move(refined);
    PerronVector out;
    out.lambda1 = v.dot(a * v);
    out.entries.assign(v.data(), v.data() + n);
    for (double x : out.entries)
        if (!(x > 0.0))
            throw internal_consistency_error("Perron iteration produced a non-positive entry");
    return out;
}

Spectrum cayley_f2_spectrum(int m, const std::vector<std::uint32_t>& generators) {
    if (m < 1) throw invalid_parameter("dimension m must be >= 1");
    if (m > 22) throw capacity_exceeded("character spectrum limited to m <= 22");
    if (generators.empty()) throw invalid_parameter("generator set must be nonempty");
    const std::uint32_t limit = 1u << m;
    for (std::uint32_t s : generators) {
        if (s == 0) throw invalid_parameter("zero generator would create self-loops");
        if (s >= limit)
            throw invalid_parameter("generator " + std::to_string(s) +
                                    " is not in F_2^" + std::to_string(m));
    }
    std::vector<double> values;
    values.reserve(limit);
    for (std::uint32_t x = 0; x < limit; ++x) {
        int sum = 0;
        for (std::uint32_t s : generators)
            sum += (std::popcount(x & s) % 2 == 0) ? 1 : -1;
        values.push_back(static_cast<double>(sum));
    }
    return Spectrum::from_unsorted(std::move(values));
}

SrgSpectrum srg_spectrum(const SrgParams& p) {
    if (p.n < 1 || p.k < 0 || p.k >= p.n || p.lambda < 0 || p.mu < 0)
        throw invalid_parameter("strongly regular parameters out of range");
    const long long lhs = static_cast<long long>(p.k) * (p.k - p.lambda - 1);
    const long long rhs = static_cast<long long>(p.n - p.k - 1) * p.mu;
    if (lhs != rhs)
        throw invalid_parameter("infeasible strongly regular parameters: k(k-lambda-1) != (n-k-1)mu");

    const double diff = static_cast<double>(p.lambda - p.mu);
    const double disc = std::sqrt(diff * diff + 4.0 * (p.k - p.mu));
    if (!(disc > 0.0))
        throw invalid_parameter("degenerate strongly regular parameters (zero discriminant)");
    SrgSpectrum s;
    s.lambda1 = static_cast<double>(p.k);
    s.theta = (diff + disc) / 2.0;
    s.tau = (diff - disc) / 2.0;

    const double balance = (2.0 * p.k + (p.n - 1) * diff) / disc;
    const double mt = ((p.n - 1) - balance) / 2.0;
    const double mu_t = ((p.n - 1) + balance) / 2.0;
    if (mt < -1e-9 || mu_t < -1e-9 ||
        std::abs(mt - std::round(mt)) > 1e-6 || std::abs(mu_t - std::round(mu_t)) > 1e-6)
        throw invalid_parameter("infeasible strongly regular parameters: non-integral multiplicities");
    s.mult_theta = static_cast<int>(std::llround(mt));
    s.mult_tau = static_cast<int>(std::llround(mu_t));
    return s;
}

Spectrum SrgSpectrum::to_spectrum(int n) const {
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n));
    values.push_back(lambda1);
    for (int i = 0; i < mult_theta; ++i) values.push_back(theta);
    for (int i = 0; i < mult_tau; ++i) values.push_back(tau);
    if (static_cast<int>(values.size()) != n)
        throw invalid_parameter("multiplicities do not sum to n");
    return Spectrum::from_unsorted(std::move(values));
}

}  // namespace oddspec
