// SPDX-License-Identifier: Apache-2.0
//
// relayarea: relay efficiency area model for relay-aided cellular planning
// Copyright (C) 2026 The relayarea authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <queue>
#include <vector>

namespace relayarea::numerics
{
    struct QuadratureResult
    {
        double value = 0.0;
        double error = 0.0;
        bool converged = false;
    };

    namespace detail
    {
        // 15-point Kronrod abscissae (non-negative half) and weights, with the embedded 7-point Gauss weights
        inline constexpr double xk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                         0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                         0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                         0.207784955007898467600689403773245, 0.0};
        inline constexpr double wk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                         0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                         0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                         0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
        inline constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                         0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

        struct Segment
        {
            double a, b, value, error;
            bool operator<(const Segment &o) const { return error < o.error; }
        };

        template <class F>
        Segment gk15(F &f, double a, double b)
        {
            const double c = 0.5 * (a + b), h = 0.5 * (b - a);
            const double fc = f(c);
            double kron = wk[7] * fc, gauss = wg[3] * fc;
            for (int j = 0; j < 7; ++j)
            {
                const double dx = h * xk[j];
                const double s = f(c - dx) + f(c + dx);
                kron += wk[j] * s;
                if (j % 2 == 1)
                    gauss += wg[j / 2] * s;
            }
            return {a, b, kron * h, std::abs((kron - gauss) * h)};
        }
    }

    // Globally adaptive Gauss-Kronrod (G7K15) quadrature; the segment with the largest error is bisected until
    // the summed error estimate drops below max(abs_tol, rel_tol * |I|).
    template <class F>
    QuadratureResult integrate(F &&f, double a, double b, double rel_tol = 1e-10, double abs_tol = 0.0,
                               int max_segments = 2000)
    {
        QuadratureResult out;
        if (a == b)
        {
            out.converged = true;
            return out;
        }
        std::priority_queue<detail::Segment> heap;
        heap.push(detail::gk15(f, a, b));
        double value = heap.top().value, error = heap.top().error;
        int segments = 1;
        while (error > std::max(abs_tol, rel_tol * std::abs(value)) && segments < max_segments)
        {
            const detail::Segment worst = heap.top();
            heap.pop();
            const double mid = 0.5 * (worst.a + worst.b);
            const detail::Segment left = detail::gk15(f, worst.a, mid);
            const detail::Segment right = detail::gk15(f, mid, worst.b);
            value += left.value + right.value - worst.value;
            error += left.error + right.error - worst.error;
            heap.push(left);
            heap.push(right);
            ++segments;
        }
        // Re-sum to shed the drift of the running totals
        value = 0.0;
        error = 0.0;
        while (!heap.empty())
        {
            value += heap.top().value;
            error += heap.top().error;
            heap.pop();
        }
        out.value = value;
        out.error = error;
        out.converged = error <= std::max(abs_tol, rel_tol * std::abs(value)) * 1.0000001;
        return out;
    }

    struct Bracket
    {
        double lo, hi;
    };

    // First sub-interval of width `step` (walking from lo to hi) on which f changes sign.
    // A zero at a grid point yields a degenerate bracket {x, x}.
    template <class F>
    std::optional<Bracket> scan_sign_change(F &&f, double lo, double hi, double step)
    {
        double x0 = lo, f0 = f(lo);
        if (f0 == 0.0)
            return Bracket{lo, lo};
        while (x0 < hi)
        {
            const double x1 = std::min(hi, x0 + step);
            const double f1 = f(x1);
            if (f1 == 0.0)
                return Bracket{x1, x1};
            if ((f0 < 0.0) != (f1 < 0.0))
                return Bracket{x0, x1};
            x0 = x1;
            f0 = f1;
        }
        return std::nullopt;
    }

    // Root of f on a sign-changing bracket: Illinois-type secant steps with a bisection fallback whenever the
    // bracket fails to halve within two steps. Returns the bracket end with the smaller residual.
    template <class F>
    double refine_root(F &&f, double lo, double hi, double abs_tol, int max_iter = 300)
    {
        if (lo == hi)
            return lo;
        double a = lo, b = hi, fa = f(a), fb = f(b);
        if (fa == 0.0)
            return a;
        if (fb == 0.0)
            return b;
        int side = 0, slow = 0;
        double width = b - a;
        for (int it = 0; it < max_iter && std::abs(b - a) > abs_tol; ++it)
        {
            double x;
            if (slow >= 2)
            {
                x = 0.5 * (a + b);
                slow = 0;
            }
            else
            {
                x = (a * fb - b * fa) / (fb - fa);
                if (!(x > std::min(a, b) && x < std::max(a, b)))
                    x = 0.5 * (a + b);
            }
            const double fx = f(x);
            if (fx == 0.0)
                return x;
            if ((fx < 0.0) == (fb < 0.0))
            {
                b = x;
                fb = fx;
                if (side == -1)
                    fa *= 0.5;
                side = -1;
            }
            else
            {
                a = x;
                fa = fx;
                if (side == 1)
                    fb *= 0.5;
                side = 1;
            }
            const double w = std::abs(b - a);
            slow = (w > 0.5 * width) ? slow + 1 : 0;
            width = w;
        }
        return std::abs(f(a)) < std::abs(f(b)) ? a : b;
    }

    struct Minimum
    {
        double x = 0.0;
        double fx = 0.0;
        int evaluations = 0;
        bool converged = false;
    };

    // Brent's parabolic/golden-section minimizer on [a, b]. Unlike common library versions the tolerance is not
    // floored at sqrt(eps), so kinked minima (active budget constraints under an exact penalty) are located to
    // near machine precision. The end points are also evaluated.
    template <class F>
    Minimum minimize_brent(F &&f, double a, double b, double rel_tol = 1e-14, double abs_tol = 1e-15,
                           int max_iter = 500)
    {
        const double golden = 0.5 * (3.0 - std::sqrt(5.0));
        const double a0 = a, b0 = b;
        Minimum out;
        double x = a + golden * (b - a), w = x, v = x;
        double fx = f(x), fw = fx, fv = fx;
        double d = 0.0, e = 0.0;
        int evals = 1;
        for (int it = 0; it < max_iter; ++it)
        {
            const double m = 0.5 * (a + b);
            const double tol = rel_tol * std::abs(x) + abs_tol, t2 = 2.0 * tol;
            if (std::abs(x - m) <= t2 - 0.5 * (b - a))
            {
                out.converged = true;
                break;
            }
            bool parabolic = false;
            if (std::abs(e) > tol)
            {
                double r = (x - w) * (fx - fv);
                double q = (x - v) * (fx - fw);
                double p = (x - v) * q - (x - w) * r;
                q = 2.0 * (q - r);
                if (q > 0.0)
                    p = -p;
                else
                    q = -q;
                const double e_old = e;
                e = d;
                if (std::abs(p) < std::abs(0.5 * q * e_old) && p > q * (a - x) && p < q * (b - x))
                {
                    d = p / q;
                    const double u = x + d;
                    if (u - a < t2 || b - u < t2)
                        d = x < m ? tol : -tol;
                    parabolic = true;
                }
            }
            if (!parabolic)
            {
                e = (x < m ? b : a) - x;
                d = golden * e;
            }
            const double u = x + (std::abs(d) >= tol ? d : (d > 0.0 ? tol : -tol));
            const double fu = f(u);
            ++evals;
            if (fu <= fx)
            {
                (u < x ? b : a) = x;
                v = w, fv = fw;
                w = x, fw = fx;
                x = u, fx = fu;
            }
            else
            {
                (u < x ? a : b) = u;
                if (fu <= fw || w == x)
                {
                    v = w, fv = fw;
                    w = u, fw = fu;
                }
                else if (fu <= fv || v == x || v == w)
                {
                    v = u, fv = fu;
                }
            }
        }
        const double fa = f(a0), fb = f(b0);
        evals += 2;
        if (fa < fx)
            x = a0, fx = fa;
        if (fb < fx)
            x = b0, fx = fb;
        out.x = x;
        out.fx = fx;
        out.evaluations = evals;
        return out;
    }
}
