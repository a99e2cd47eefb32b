#include "oddspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "oddspec/errors.hpp"
#include "oddspec/spectral.hpp"

namespace oddspec {

namespace {

double ipow(double base, int exp) {
    double r = 1.0;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

double poly_g(double x, int ell) { return ipow(x, 2 * ell) + 2.0 * ell * x - 2.0 * ell + 1.0; }

double poly_g_deriv(double x, int ell) { return 2.0 * ell * ipow(x, 2 * ell - 1) + 2.0 * ell; }

void check_odd_girth_arg(int k, int min_k) {
    if (k < min_k || k % 2 == 0)
        throw invalid_parameter("odd girth must be an odd integer >= " + std::to_string(min_k));
}

}  // namespace

bool spectral_moment_check(double lambda1, double lambdan, int n, int ell) {
    if (ell < 1) throw invalid_parameter("ell must be >= 1");
    if (n < 1) throw invalid_parameter("n must be >= 1");
    if (!(lambdan < 0.0) || !(lambda1 > 0.0))
        throw invalid_parameter("moment check requires lambda1 > 0 > lambdan");
    const double num = -ipow(lambdan, 2 * ell - 1) * n;
    const double den = ipow(lambda1, 2 * ell - 1) - ipow(lambdan, 2 * ell - 1);
    return lambda1 <= num / den + 1e-9;
}

double find_x0(int ell) {
    if (ell < 1) throw invalid_parameter("ell must be >= 1");
    // g is increasing on (0,1) with g(0) < 0 < g(1): bisect, then Newton.
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (poly_g(mid, ell) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 4; ++i) x -= poly_g(x, ell) / poly_g_deriv(x, ell);
    return x;
}

BoundResult root_bound(int ell) {
    const double x0 = find_x0(ell);
    BoundResult r;
    r.kind = BoundKind::RootUpper;
    r.ell = ell;
    r.odd_girth_k = 2 * ell + 3;
    r.value = 1.0 - (2.0 * ell / (2.0 * ell - 1.0)) * x0;
    r.witness.x0 = x0;
    return r;
}

double lambert_w(double x) {
    if (x < 0.0) throw invalid_parameter("lambert_w restricted to [0, inf)");
    if (x == 0.0) return 0.0;
    double w = std::log1p(x);
    for (int i = 0; i < 64; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        // Halley step
        const double step = f / (ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0));
        w -= step;
        if (std::abs(step) < 1e-16 * (1.0 + std::abs(w))) break;
    }
    return w;
}

BoundResult lambert_upper_bound(int k) {
    check_odd_girth_arg(k, 5);
    BoundResult r;
    r.kind = BoundKind::LambertUpper;
    r.odd_girth_k = k;
    r.ell = (k - 3) / 2;
    r.value = lambert_w(1.0 / std::numbers::e) / (k - 4);
    return r;
}

BoundResult cycle_lower_bound(int k) {
    check_odd_girth_arg(k, 3);
    BoundResult r;
    r.kind = BoundKind::CycleLower;
    r.odd_girth_k = k;
    r.ell = k >= 5 ? (k - 3) / 2 : 0;
    r.value = 2.0 * (1.0 - std::cos(std::numbers::pi / k)) / k;
    return r;
}

namespace {

void check_girth7_domain(double delta, double alpha) {
    if (!(0.0 < delta && delta < alpha && alpha < 0.5))
        throw invalid_parameter("girth-7 objective requires 0 < delta < alpha < 1/2");
}

double quotient_radicand(double delta, double alpha) {
    const double a = alpha, d = delta;
    return a * a * a * a + 6.0 * a * a * a * d + 9.0 * a * a * d * d - 12.0 * a * a * d -
           4.0 * a * d * d + 4.0 * a * d;
}

}  // namespace

Girth7RadicandVariants girth7_radicand_variants(double delta, double alpha) {
    check_girth7_domain(delta, alpha);
    const double a = alpha, d = delta;
    Girth7RadicandVariants v;
    v.quotient = quotient_radicand(delta, alpha);
    // quotient form with its -4ad^2+4ad tail cancelled away
    v.alternate = a * a * a * a + 6.0 * a * a * a * d + 9.0 * a * a * d * d - 12.0 * a * a * d;
    v.agree = std::abs(v.quotient - v.alternate) <= 1e-12;
    return v;
}

double girth7_objective(double delta, double alpha) {
    check_girth7_domain(delta, alpha);
    const double rad = quotient_radicand(delta, alpha);
    if (rad < 0.0)
        throw numerical_domain_error("negative radicand in girth-7 objective");
    const double a = alpha, d = delta;
    return d * (1.0 - (a * a - a * d + std::sqrt(rad)) / (2.0 * a * (1.0 - d - a)));
}

double girth7_quotient_min_eigenvalue(double delta, double alpha) {
    check_girth7_domain(delta, alpha);
    // M (with lambda1 = 1) is similar to the symmetric B = D^(1/2) M D^(-1/2),
    // D = diag(delta, alpha, 1-delta-alpha); solve B's characteristic cubic.
    const double d = delta, a = alpha, c = 1.0 - delta - alpha;
    const double m23 = 1.0 - d / a;
    const double m33 = 1.0 - (a - d) / c;
    const double b12 = std::sqrt(d / a);
    const double b23 = std::sqrt(a / c) * m23;
    // characteristic polynomial of [[0,b12,0],[b12,0,b23],[0,b23,m33]]:
    // -x^3 + m33 x^2 + (b12^2 + b23^2) x - b12^2 m33 = 0
    const double p2 = m33;
    const double p1 = b12 * b12 + b23 * b23;
    const double p0 = -b12 * b12 * m33;
    // x^3 - p2 x^2 - p1 x - p0 = 0; three real roots (symmetric matrix)
    const double q = (3.0 * (-p1) - p2 * p2) / 9.0;
    const double r = (9.0 * p2 * (-p1) - 27.0 * p0 - 2.0 * p2 * p2 * p2) / -54.0;
    // use trigonometric form; q < 0 for distinct real roots
    const double qc = std::min(q, 0.0);
    const double m = 2.0 * std::sqrt(-qc);
    double arg = r / std::sqrt(-qc * qc * qc);
    arg = std::clamp(arg, -1.0, 1.0);
    const double theta = std::acos(arg);
    double xmin = 1e300;
    for (int k = 0; k < 3; ++k) {
        const double root = m * std::cos((theta + 2.0 * std::numbers::pi * k) / 3.0) + p2 / 3.0;
        xmin = std::min(xmin, root);
    }
    // polish with Newton on the characteristic polynomial
    for (int i = 0; i < 3; ++i) {
        const double f = ((xmin - p2) * xmin - p1) * xmin - p0;
        const double fp = (3.0 * xmin - 2.0 * p2) * xmin - p1;
        if (fp != 0.0) xmin -= f / fp;
    }
    return xmin;
}

namespace {

// Cubic 54x^3 + 423x^2 - 700x + 27: all roots, descending.
std::array<double, 3> girth7_cubic_roots() {
    const double a = 54.0, b = 423.0, c = -700.0, d = 27.0;
    const double q = (3.0 * a * c - b * b) / (9.0 * a * a);
    const double r = (9.0 * a * b * c - 27.0 * a * a * d - 2.0 * b * b * b) / (54.0 * a * a * a);
    const double disc = q * q * q + r * r;
    if (disc > 0.0) throw internal_consistency_error("girth-7 cubic lost its three real roots");
    const double m = 2.0 * std::sqrt(-q);
    double arg = r / std::sqrt(-q * q * q);
    arg = std::clamp(arg, -1.0, 1.0);
    const double theta = std::acos(arg);
    std::array<double, 3> roots{};
    for (int k = 0; k < 3; ++k)
        roots[static_cast<std::size_t>(k)] =
            m * std::cos((theta + 2.0 * std::numbers::pi * k) / 3.0) - b / (3.0 * a);
    for (double& x : roots)
        for (int i = 0; i < 4; ++i) {
            const double f = ((a * x + b) * x + c) * x + d;
            const double fp = (3.0 * a * x + 2.0 * b) * x + c;
            x -= f / fp;
        }
    std::sort(roots.begin(), roots.end(), std::greater<double>());
    return roots;
}

struct GridOptimum {
    double value = -1.0;
    double delta = 0.0;
    double alpha = 0.0;
};

GridOptimum grid_search(double step) {
    GridOptimum best;
    const int cells = static_cast<int>(0.5 / step);
    for (int i = 1; i < cells; ++i) {
        const double d = i * step;
        for (int j = i + 1; j < cells; ++j) {
            const double a = j * step;
            if (!(a < 0.5)) break;
            const double v = girth7_objective(d, a);
            if (v > best.value) best = {v, d, a};
        }
    }
    return best;
}

double penalized_objective(double d, double a) {
    if (!(0.0 < d && d < a && a < 0.5)) return -1e300;
    return girth7_objective(d, a);
}

// Deterministic Nelder-Mead on the open triangle 0 < delta < alpha < 1/2.
GridOptimum simplex_refine(const GridOptimum& start, double scale) {
    struct Point {
        double d, a, v;
    };
    auto eval = [](double d, double a) { return penalized_objective(d, a); };
    std::array<Point, 3> s{{{start.delta, start.alpha, start.value},
                            {start.delta + scale, start.alpha, 0.0},
                            {start.delta, start.alpha + scale, 0.0}}};
    s[1].v = eval(s[1].d, s[1].a);
    s[2].v = eval(s[2].d, s[2].a);
    for (int iter = 0; iter < 3000; ++iter) {
        std::sort(s.begin(), s.end(), [](const Point& x, const Point& y) { return x.v > y.v; });
        const double size = std::max(std::abs(s[0].d - s[2].d) + std::abs(s[0].a - s[2].a),
                                     std::abs(s[0].d - s[1].d) + std::abs(s[0].a - s[1].a));
        if (size < 1e-12) break;
        const double cd = (s[0].d + s[1].d) / 2.0, ca = (s[0].a + s[1].a) / 2.0;
        const double rd = cd + (cd - s[2].d), ra = ca + (ca - s[2].a);
        const double rv = eval(rd, ra);
        if (rv > s[0].v) {
            const double ed = cd + 2.0 * (cd - s[2].d), ea = ca + 2.0 * (ca - s[2].a);
            const double evv = eval(ed, ea);
            s[2] = evv > rv ? Point{ed, ea, evv} : Point{rd, ra, rv};
        } else if (rv > s[1].v) {
            s[2] = {rd, ra, rv};
        } else {
            const double kd = cd + 0.5 * (s[2].d - cd), ka = ca + 0.5 * (s[2].a - ca);
            const double kv = eval(kd, ka);
            if (kv > s[2].v) {
                s[2] = {kd, ka, kv};
            } else {  // shrink toward best
                for (int i = 1; i < 3; ++i) {
                    s[i].d = s[0].d + 0.5 * (s[i].d - s[0].d);
                    s[i].a = s[0].a + 0.5 * (s[i].a - s[0].a);
                    s[i].v = eval(s[i].d, s[i].a);
                }
            }
        }
    }
    std::sort(s.begin(), s.end(), [](const Point& x, const Point& y) { return x.v > y.v; });
    return {s[0].v, s[0].d, s[0].a};
}

}  // namespace

BoundResult girth7_upper_bound() {
    const auto roots = girth7_cubic_roots();
    const double root = roots[1];

    const GridOptimum coarse = grid_search(1e-3);
    const GridOptimum refined = simplex_refine(coarse, 1e-3);
    if (std::abs(refined.value - root) > 1e-6)
        throw internal_consistency_error(
            "girth-7 bound cross-check failed: cubic root " + std::to_string(root) +
            " vs optimized objective " + std::to_string(refined.value));

    BoundResult r;
    r.kind = BoundKind::Girth7Upper;
    r.odd_girth_k = 7;
    r.value = root;
    r.witness.optimizer = {refined.delta, refined.alpha};
    r.witness.cubic_roots = roots;
    return r;
}

double upper_bound_for_odd_girth(int k) {
    check_odd_girth_arg(k, 3);
    if (k == 3) return 1.0;
    if (k == 5) return 3.0 - 2.0 * std::numbers::sqrt2;
    if (k == 7 || k == 9) {
        static const double cached = girth7_upper_bound().value;  // optimization is not free
        return cached;
    }
    return root_bound((k - 3) / 2).value;
}

double round_up_4(double v) { return std::ceil(v * 1e4 - 1e-9) / 1e4; }

double round_down_4(double v) { return std::floor(v * 1e4 + 1e-9) / 1e4; }

std::vector<GammaTableRow> gamma_table(int k_max) {
    check_odd_girth_arg(k_max, 3);
    std::optional<double> girth7;  // computed once, shared by k = 7 and 9
    if (k_max >= 7) girth7 = girth7_upper_bound().value;

    std::vector<GammaTableRow> rows;
    for (int k = 3; k <= k_max; k += 2) {
        GammaTableRow row;
        row.odd_girth_k = k;
        if (k == 3) {
            row.upper = 1.0;
            row.upper_witness = "trivial";
            row.lower = 1.0;
            row.lower_witness = "K_n";
        } else if (k == 5) {
            row.upper = 3.0 - 2.0 * std::numbers::sqrt2;
            row.upper_witness = "triangle-free bound";
            const SrgSpectrum hs = srg_spectrum({100, 22, 0, 6});
            row.lower = hs.ratio(100);
            row.lower_witness = "Higman-Sims graph";
        } else {
            if (k <= 9) {
                row.upper = *girth7;
                row.upper_witness = "girth-7 quotient bound";
            } else {
                row.upper = root_bound((k - 3) / 2).value;
                row.upper_witness = "root bound (l=" + std::to_string((k - 3) / 2) + ")";
            }
            if (k == 7) {
                const Spectrum fc = cayley_f2_spectrum(6, {1, 2, 4, 8, 16, 32, 63});
                row.lower = (fc.lambda1() + fc.lambda_min()) / 64.0;
                row.lower_witness = "folded 7-cube";
            } else {
                row.lower = cycle_lower_bound(k).value;
                row.lower_witness = std::to_string(k) + "-cycle";
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace oddspec
