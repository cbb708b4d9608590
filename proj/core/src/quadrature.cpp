#include "hrx/quadrature.hpp"

#include <cmath>
#include <vector>

namespace hrx {

namespace {

// 15-point Kronrod nodes/weights with embedded 7-point Gauss rule on [-1,1].
const double kx[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898,  0.0,                0.207784955007898,
     0.405845151377397,  0.586087235467691,  0.741531185599394,
     0.864864423359769,  0.949107912342759,  0.991455371120813};
const double kw[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
const double gw[7] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870};

struct GK {
    double value, err;
};

GK gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), hl = 0.5 * (b - a);
    double fk = 0.0, fg = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double v = f(c + hl * kx[i]);
        fk += kw[i] * v;
        if (i % 2 == 1) fg += gw[i / 2] * v;
    }
    return {fk * hl, std::abs(fk - fg) * hl};
}

double adapt(const std::function<double(double)>& f, double a, double b, double tol,
             int depth, int max_depth) {
    GK whole = gk15(f, a, b);
    if (whole.err <= tol || depth >= max_depth) return whole.value;
    const double m = 0.5 * (a + b);
    return adapt(f, a, m, 0.5 * tol, depth + 1, max_depth) +
           adapt(f, m, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol, int max_depth) {
    GK first = gk15(f, a, b);
    const double tol = std::max(abs_tol, rel_tol * std::abs(first.value));
    if (first.err <= tol) return first.value;
    return adapt(f, a, b, tol, 0, max_depth);
}

double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             double rel_tol, double abs_tol) {
    auto g = [&](double t) {
        const double om = 1.0 - t;
        const double r = a + t / om;
        return f(r) / (om * om);
    };
    return integrate(g, 0.0, 1.0 - 1e-12, rel_tol, abs_tol);
}

void gauss_legendre(int n, double* nodes, double* weights) {
    // Newton iteration on Legendre polynomials from the Chebyshev initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
}

double integrate_radial_over_box(const std::function<double(double)>& f,
                                 double half_width, int n) {
    std::vector<double> x(n), w(n);
    gauss_legendre(n, x.data(), w.data());
    // map to [0, half_width]; integrand is even per axis
    std::vector<double> xs(n), ws(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = 0.5 * half_width * (x[i] + 1.0);
        ws[i] = 0.5 * half_width * w[i];
    }
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
        const double zk = xs[k] * xs[k];
        double sk = 0.0;
        for (int j = 0; j < n; ++j) {
            const double yj = xs[j] * xs[j];
            double sj = 0.0;
            for (int i = 0; i < n; ++i)
                sj += ws[i] * f(std::sqrt(xs[i] * xs[i] + yj + zk));
            sk += ws[j] * sj;
        }
        total += ws[k] * sk;
    }
    return 8.0 * total;
}

}  // namespace hrx
