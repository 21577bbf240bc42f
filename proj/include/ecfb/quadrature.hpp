#pragma once

#include <cmath>
#include <cstdio>
#include <queue>
#include <vector>

#include "ecfb/error.hpp"

namespace ecfb {

struct QuadResult {
    double value;
    double error;  // accumulated absolute error estimate
    int evaluations;
};

namespace detail {

// Gauss 7 / Kronrod 15 pair on [-1,1]. Gauss points are the odd-index Kronrod nodes.
inline constexpr double kGkNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kGkWk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGkWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
inline void gk15(F& f, double lo, double hi, double& val, double& err) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    double fc = f(c);
    double resk = kGkWk[7] * fc;
    double resg = kGkWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double dx = h * kGkNodes[j];
        double f1 = f(c - dx);
        double f2 = f(c + dx);
        resk += kGkWk[j] * (f1 + f2);
        if (j & 1) resg += kGkWg[j / 2] * (f1 + f2);
    }
    val = resk * h;
    err = std::fabs((resk - resg) * h);
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration over [lo, hi]: repeatedly bisect the
// segment with the worst error estimate until the total meets the tolerance.
// |Kronrod - Gauss| is used directly as the (conservative) segment error estimate.
template <class F>
QuadResult integrate(F&& f, double lo, double hi, double abs_tol = 1e-12,
                     double rel_tol = 1e-12, int max_segments = 4000) {
    struct Seg {
        double err, lo, hi, val;
        bool operator<(const Seg& o) const { return err < o.err; }
    };
    double val, err;
    detail::gk15(f, lo, hi, val, err);
    int evals = 15;
    double total = val;
    double toterr = err;
    std::priority_queue<Seg> heap;
    heap.push({err, lo, hi, val});
    int nseg = 1;
    while (toterr > std::max(abs_tol, rel_tol * std::fabs(total))) {
        if (nseg >= max_segments) {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "quadrature did not converge on [%g, %g]: %d segments, "
                          "err=%.3e, target=%.3e",
                          lo, hi, nseg, toterr, std::max(abs_tol, rel_tol * std::fabs(total)));
            throw numeric_error(buf);
        }
        Seg s = heap.top();
        heap.pop();
        double mid = 0.5 * (s.lo + s.hi);
        if (!(mid > s.lo && mid < s.hi)) {
            // interval exhausted at double resolution; accept what we have
            toterr -= s.err;
            heap.push({0.0, s.lo, s.hi, s.val});
            ++nseg;
            continue;
        }
        double v1, e1, v2, e2;
        detail::gk15(f, s.lo, mid, v1, e1);
        detail::gk15(f, mid, s.hi, v2, e2);
        evals += 30;
        total += (v1 + v2) - s.val;
        toterr += (e1 + e2) - s.err;
        heap.push({e1, s.lo, mid, v1});
        heap.push({e2, mid, s.hi, v2});
        ++nseg;
    }
    return {total, toterr, evals};
}

}  // namespace ecfb
