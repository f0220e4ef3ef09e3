#include "gwe/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "gwe/errors.hpp"

namespace gwe {
namespace {

// Gauss-Kronrod 7-15 nodes and weights (positive half; node 7 is the center).
// All nodes are interior, so panel endpoints are never evaluated.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct panel {
    double a = 0, b = 0;
    double value = 0;
    double error = 0;
};

bool by_error(const panel& x, const panel& y) { return x.error < y.error; }

// A panel whose sample hits a non-finite value (a node rounded onto a pole)
// is returned with zero value and infinite error so it is split first; if it
// can no longer be split, the integral is not resolvable in double precision.
panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);

    bool bad = false;
    auto ev = [&](double u) {
        const double v = f(u);
        if (!std::isfinite(v)) bad = true;
        return v;
    };

    double fv1[7], fv2[7];
    const double fc = ev(centr);
    double resg = fc * wg[3];
    double resk = fc * wgk[7];
    double resabs = std::fabs(resk);

    for (int j = 0; j < 3; ++j) {
        const int jtw = 2 * j + 1;
        const double absc = hlgth * xgk[jtw];
        fv1[jtw] = ev(centr - absc);
        fv2[jtw] = ev(centr + absc);
        const double fsum = fv1[jtw] + fv2[jtw];
        resg += wg[j] * fsum;
        resk += wgk[jtw] * fsum;
        resabs += wgk[jtw] * (std::fabs(fv1[jtw]) + std::fabs(fv2[jtw]));
    }
    for (int j = 0; j < 4; ++j) {
        const int jtwm1 = 2 * j;
        const double absc = hlgth * xgk[jtwm1];
        fv1[jtwm1] = ev(centr - absc);
        fv2[jtwm1] = ev(centr + absc);
        const double fsum = fv1[jtwm1] + fv2[jtwm1];
        resk += wgk[jtwm1] * fsum;
        resabs += wgk[jtwm1] * (std::fabs(fv1[jtwm1]) + std::fabs(fv2[jtwm1]));
    }
    if (bad)
        return {a, b, 0.0, std::numeric_limits<double>::infinity()};

    const double reskh = resk * 0.5;
    double resasc = wgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

    double err = std::fabs((resk - resg) * hlgth);
    resabs *= hlgth;
    resasc *= hlgth;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / eps50)
        err = std::max(eps50 * resabs, err);

    return {a, b, resk * hlgth, err};
}

}  // namespace

quadrature_result integrate_unit(const std::function<double(double)>& f,
                                 double rel_tol, double abs_tol,
                                 long max_evaluations) {
    std::vector<panel> heap;
    std::vector<panel> frozen;  // too narrow to split; error still counted

    long evals = 15;
    panel first = gk15(f, 0.0, 1.0);
    heap.push_back(first);

    double total_value = first.value;
    double total_error = first.error;
    long since_rescan = 0;

    auto tolerance = [&] {
        return std::max(abs_tol, rel_tol * std::fabs(total_value));
    };
    auto rescan = [&] {
        // incremental totals drift by ~eps per update; refresh from scratch
        total_value = 0.0;
        total_error = 0.0;
        for (const panel& s : heap) { total_value += s.value; total_error += s.error; }
        for (const panel& s : frozen) { total_value += s.value; total_error += s.error; }
    };

    while (total_error > tolerance()) {
        if (heap.empty() || evals + 30 > max_evaluations) {
            rescan();
            if (total_error <= tolerance()) break;
            throw accuracy_error("integration budget exhausted before tolerance was met",
                                 total_value, total_error);
        }
        std::pop_heap(heap.begin(), heap.end(), by_error);
        panel worst = heap.back();
        heap.pop_back();

        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a) || !(mid < worst.b)) {
            // no representable interior point left to split at
            if (!std::isfinite(worst.error)) {
                rescan();
                throw accuracy_error(
                    "integrand could not be resolved in double precision; "
                    "the integral may diverge",
                    total_value, std::numeric_limits<double>::infinity());
            }
            frozen.push_back(worst);
            continue;
        }

        panel left = gk15(f, worst.a, mid);
        panel right = gk15(f, mid, worst.b);
        evals += 30;

        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), by_error);

        // infinities from unresolved panels break incremental arithmetic
        if (++since_rescan >= 256 || !std::isfinite(total_error) ||
            !std::isfinite(total_value)) {
            since_rescan = 0;
            rescan();
        }
    }

    rescan();
    if (total_error > tolerance())
        throw accuracy_error("integration budget exhausted before tolerance was met",
                             total_value, total_error);
    return {total_value, total_error, evals};
}

}  // namespace gwe
