#ifndef LEVYTAIL_DETAIL_QUADRATURE_HPP
#define LEVYTAIL_DETAIL_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

namespace levytail::detail {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

// Gauss-Kronrod 7-15 pair on [-1, 1].
struct GaussKronrod15 {
    static constexpr int n = 15;
    // Kronrod abscissae (positive half; nodes are symmetric)
    static constexpr double xk[8] = {
        0.000000000000000000000000000000000,
        0.207784955007898467600689403773245,
        0.405845151377397166906606412076961,
        0.586087235467691130294144838258730,
        0.741531185599394439863864773280788,
        0.864864423359769072789712788640926,
        0.949107912342758524526189684047851,
        0.991455371120812639206854697526329};
    static constexpr double wk[8] = {
        0.209482141084727828012999174891714,
        0.204432940075298892414161999234649,
        0.190350578064785409913256402421014,
        0.169004726639267902826583426598550,
        0.140653259715525918745189590510238,
        0.104790010322250183839876322541518,
        0.063092092629978553290700663189204,
        0.022935322010529224963732008058970};
    // Gauss weights for the embedded 7-point rule (nodes xk[1], xk[3], ...)
    static constexpr double wg[4] = {
        0.417959183673469387755102040816327,
        0.381830050505118944950369775488975,
        0.279705391489276667901467771423780,
        0.129484966168869693270611432679082};
};

// One Gauss-Kronrod panel; returns Kronrod value and |K15 - G7| based error.
template <typename F>
inline void gk15_panel(F&& f, double a, double b, double& value, double& error) {
    using R = GaussKronrod15;
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const double f_center = f(c);
    double result_k = R::wk[0] * f_center;
    double result_g = R::wg[0] * f_center;

    double fv1[8], fv2[8];
    for (int j = 1; j < 8; ++j) {
        const double dx = h * R::xk[j];
        fv1[j] = f(c - dx);
        fv2[j] = f(c + dx);
        result_k += R::wk[j] * (fv1[j] + fv2[j]);
        // the embedded 7-point Gauss rule sits on the even-indexed abscissae
        if (j % 2 == 0) result_g += R::wg[j / 2] * (fv1[j] + fv2[j]);
    }
    value = result_k * h;
    error = std::fabs((result_k - result_g) * h);
}

// Globally adaptive Gauss-Kronrod integration over [a, b]. The interval is
// seeded with `initial_panels` equal panels (callers pass an oscillation
// count hint), then the panel with the largest error estimate is bisected
// until the total estimate falls below abs_tol or the evaluation budget is
// exhausted. Never evaluates the integrand at panel endpoints.
template <typename F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                    std::size_t max_evaluations,
                                    std::size_t initial_panels = 8) {
    struct Panel {
        double a, b, value, error;
        bool operator<(const Panel& other) const { return error < other.error; }
    };

    QuadratureResult res;
    if (a == b) return res;

    std::priority_queue<Panel> heap;
    initial_panels = std::max<std::size_t>(1, initial_panels);
    const double step = (b - a) / static_cast<double>(initial_panels);
    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i < initial_panels; ++i) {
        const double pa = a + step * static_cast<double>(i);
        const double pb = (i + 1 == initial_panels) ? b : pa + step;
        double v, e;
        gk15_panel(f, pa, pb, v, e);
        res.evaluations += 15;
        total += v;
        total_err += e;
        heap.push({pa, pb, v, e});
    }

    while (total_err > abs_tol && res.evaluations + 30 <= max_evaluations) {
        Panel p = heap.top();
        heap.pop();
        const double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b) {
            // interval no longer splittable in double precision
            heap.push(p);
            break;
        }
        double v1, e1, v2, e2;
        gk15_panel(f, p.a, mid, v1, e1);
        gk15_panel(f, mid, p.b, v2, e2);
        res.evaluations += 30;
        total += v1 + v2 - p.value;
        total_err += e1 + e2 - p.error;
        heap.push({p.a, mid, v1, e1});
        heap.push({mid, p.b, v2, e2});
    }

    res.value = total;
    res.error_estimate = total_err;
    return res;
}

}  // namespace levytail::detail

#endif
