#include "agint/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "agint/errors.hpp"

namespace agint {
namespace {

// Gauss-Kronrod 15-point nodes/weights on [-1, 1] (positive half; the
// rule is symmetric). Kronrod nodes include the 7 Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

// 7-point Gauss weights matching kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct RuleResult {
    double value;
    double error;
};

RuleResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    double kronrod = 0.0, gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double s = (i == 7) ? fv[7] : fv[i] + fv[14 - i];
        kronrod += kWgk[i] * s;
    }
    gauss = kWg[3] * fv[7];
    for (int i = 0; i < 3; ++i)
        gauss += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    kronrod *= h;
    gauss *= h;
    double err = std::abs(kronrod - gauss);
    // Sharpened estimate in the usual QUADPACK style.
    if (err > 0.0) err = std::pow(200.0 * err, 1.5);
    return {kronrod, std::min(err, std::abs(kronrod - gauss))};
}

struct Panel {
    double a, b, value, error;
    int depth;
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    RuleResult first = gk15(f, a, b);
    std::vector<Panel> heap{{a, b, first.value, first.error, 0}};
    auto cmp = [](const Panel& x, const Panel& y) { return x.error < y.error; };
    double total = first.value;
    double total_err = first.error;
    for (int iter = 0; iter < 4000; ++iter) {
        const double tol = std::max(abs_tol, rel_tol * std::abs(total));
        if (total_err <= tol) return total;
        std::pop_heap(heap.begin(), heap.end(), cmp);
        Panel worst = heap.back();
        heap.pop_back();
        if (worst.depth >= max_depth) {
            // Interval exhausted; accept its estimate as-is.
            total_err -= worst.error;
            if (heap.empty()) return total;
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        RuleResult left = gk15(f, worst.a, mid);
        RuleResult right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push_back({worst.a, mid, left.value, left.error, worst.depth + 1});
        std::push_heap(heap.begin(), heap.end(), cmp);
        heap.push_back({mid, worst.b, right.value, right.error, worst.depth + 1});
        std::push_heap(heap.begin(), heap.end(), cmp);
    }
    throw convergence_error("integrate: panel budget exhausted");
}

double integrate_segmented(const std::function<double(double)>& f, double a,
                           double b, std::initializer_list<double> breaks,
                           double rel_tol, double abs_tol) {
    std::vector<double> pts{a};
    for (double p : breaks)
        if (p > a && p < b) pts.push_back(p);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        sum += integrate(f, pts[i], pts[i + 1], rel_tol,
                         std::max(abs_tol, rel_tol * std::abs(sum)));
    return sum;
}

double find_root(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, int max_iter) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw math_domain_error("find_root: endpoints do not bracket a root");
    double c = a, fc = fa, d = b - a, e = d;
    for (int i = 0; i < max_iter; ++i) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol =
            2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
            0.5 * rel_tol * std::max(1.0, std::abs(b));
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || fb == 0.0) return b;
        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            else
                p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q),
                                   std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
    }
    throw convergence_error("find_root: iteration limit reached");
}

}  // namespace agint
