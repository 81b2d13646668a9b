#include "linkvol/fit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <stdexcept>

#include "linkvol/solver.hpp"

namespace linkvol {

double RationalFitModel::eval(double x) const {
    if (kind == Kind::RationalEven) {
        double num = 0.0, den = 0.0, xp = 1.0;
        for (int i = 0; i <= n; ++i) {
            num += a[i] * xp;
            den += b[i] * xp;
            xp *= x * x;
        }
        return num / den + c;
    }
    double s = a[0];
    double q = 1.0 / ((x + c) * (x + c));
    double qp = q;
    for (int i = 1; i <= n; ++i) {
        s += a[i] * qp;
        qp *= q;
    }
    return s;
}

namespace {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct Packed {
    // params: a_0..a_n, b_0..b_{n-1}, c
    int n;
    Vec p;
    RationalFitModel unpack() const {
        RationalFitModel m;
        m.kind = RationalFitModel::Kind::RationalEven;
        m.n = n;
        m.a.assign(p.data(), p.data() + n + 1);
        m.b.assign(p.data() + n + 1, p.data() + 2 * n + 1);
        m.b.push_back(1.0);
        m.c = p[2 * n + 1];
        return m;
    }
};

Vec residuals(const Packed& pk, const std::vector<FitPoint>& pts) {
    auto m = pk.unpack();
    Vec r(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) r[k] = m.eval(pts[k].x) - pts[k].v;
    return r;
}

Mat jacobian(const Packed& pk, const std::vector<FitPoint>& pts) {
    int n = pk.n;
    Mat J(pts.size(), 2 * n + 2);
    auto m = pk.unpack();
    for (std::size_t k = 0; k < pts.size(); ++k) {
        double x = pts[k].x;
        double num = 0.0, den = 0.0, xp = 1.0;
        std::vector<double> pows(n + 1);
        for (int i = 0; i <= n; ++i) {
            pows[i] = xp;
            num += m.a[i] * xp;
            den += m.b[i] * xp;
            xp *= x * x;
        }
        for (int i = 0; i <= n; ++i) J(k, i) = pows[i] / den;
        for (int i = 0; i < n; ++i) J(k, n + 1 + i) = -num * pows[i] / (den * den);
        J(k, 2 * n + 1) = 1.0;
    }
    return J;
}

// Given c, initialize (a, b) by linear least squares with gauge b_n = 1:
//   sum a_i x^{2i} - (v - c) sum_{i<n} b_i x^{2i} = (v - c) x^{2n}
Packed linear_init(const std::vector<FitPoint>& pts, int n, double c) {
    std::size_t m = pts.size();
    Mat A(m, 2 * n + 1);
    Vec rhs(m);
    for (std::size_t k = 0; k < m; ++k) {
        double x = pts[k].x, w = pts[k].v - c;
        double xp = 1.0;
        std::vector<double> pows(n + 1);
        for (int i = 0; i <= n; ++i) {
            pows[i] = xp;
            xp *= x * x;
        }
        for (int i = 0; i <= n; ++i) A(k, i) = pows[i];
        for (int i = 0; i < n; ++i) A(k, n + 1 + i) = -w * pows[i];
        rhs[k] = w * pows[n];
    }
    Vec sol = A.completeOrthogonalDecomposition().solve(rhs);
    Packed pk;
    pk.n = n;
    pk.p = Vec(2 * n + 2);
    pk.p.head(2 * n + 1) = sol;
    pk.p[2 * n + 1] = c;
    return pk;
}

double max_abs(const Vec& r) { return r.cwiseAbs().maxCoeff(); }

Packed levenberg_marquardt(Packed pk, const std::vector<FitPoint>& pts, int iters) {
    double lambda = 1e-3;
    Vec r = residuals(pk, pts);
    double cost = r.squaredNorm();
    for (int it = 0; it < iters; ++it) {
        Mat J = jacobian(pk, pts);
        Mat H = J.transpose() * J;
        Vec g = J.transpose() * r;
        for (int tries = 0; tries < 30; ++tries) {
            Mat Hl = H;
            Hl.diagonal().array() += lambda * (H.diagonal().array() + 1e-12);
            Vec step = Hl.ldlt().solve(-g);
            Packed pk2 = pk;
            pk2.p += step;
            Vec r2 = residuals(pk2, pts);
            double c2 = r2.squaredNorm();
            if (std::isfinite(c2) && c2 < cost) {
                pk = pk2;
                r = r2;
                cost = c2;
                lambda = std::max(lambda * 0.3, 1e-12);
                break;
            }
            lambda *= 4.0;
            if (tries == 29) return pk;
        }
        if (max_abs(r) < 1e-13) break;
    }
    return pk;
}

}  // namespace

RationalFitModel fit_rational(const std::vector<FitPoint>& pts, int n, unsigned seed) {
    if (static_cast<int>(pts.size()) < 2 * n + 2)
        throw std::runtime_error("not enough points for rational fit");
    double vmax = 0.0;
    for (const auto& p : pts) vmax = std::max(vmax, p.v);
    std::mt19937 rng(seed + 99);
    RationalFitModel best;
    double best_res = 1e300;
    for (int s = 0; s < 8; ++s) {
        double c = (s / 7.0) * 1.2 * vmax;
        Packed pk = linear_init(pts, n, c);
        pk = levenberg_marquardt(pk, pts, 400);
        Vec r = residuals(pk, pts);
        double res = max_abs(r);
        if (res < best_res) {
            best_res = res;
            best = pk.unpack();
            best.max_residual = res;
            best.converged = true;
        }
    }
    return best;
}

RationalFitModel fit_inverse(const std::vector<FitPoint>& pts, int n) {
    if (static_cast<int>(pts.size()) < n + 2)
        throw std::runtime_error("not enough points for inverse fit");
    double xmin = 1e300;
    for (const auto& p : pts) xmin = std::min(xmin, p.x);

    auto solve_for_c = [&](double c, std::vector<double>* coef) {
        std::size_t m = pts.size();
        Mat A(m, n + 1);
        Vec rhs(m);
        for (std::size_t k = 0; k < m; ++k) {
            double q = 1.0 / ((pts[k].x + c) * (pts[k].x + c));
            double qp = 1.0;
            for (int i = 0; i <= n; ++i) {
                A(k, i) = qp;
                qp *= q;
            }
            rhs[k] = pts[k].v;
        }
        Vec sol = A.completeOrthogonalDecomposition().solve(rhs);
        Vec r = A * sol - rhs;
        if (coef) coef->assign(sol.data(), sol.data() + n + 1);
        return max_abs(r);
    };

    // golden-section over c in (-xmin + margin, 3*xmin + 10)
    double lo = -xmin + 0.25, hi = 3.0 * xmin + 10.0;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = solve_for_c(x1, nullptr), f2 = solve_for_c(x2, nullptr);
    for (int it = 0; it < 200 && (b - a) > 1e-10; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = solve_for_c(x1, nullptr);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = solve_for_c(x2, nullptr);
        }
    }
    RationalFitModel m;
    m.kind = RationalFitModel::Kind::InverseEven;
    m.n = n;
    m.c = (a + b) / 2.0;
    std::vector<double> coef;
    m.max_residual = solve_for_c(m.c, &coef);
    m.a = coef;
    m.converged = true;
    return m;
}

double asymptote(const RationalFitModel& m) {
    if (m.kind == RationalFitModel::Kind::RationalEven) {
        if (std::abs(m.b[m.n]) < 1e-14)
            throw std::runtime_error("degenerate gauge in rational model");
        return m.a[m.n] / m.b[m.n] + m.c;
    }
    return m.a[0];
}

double multi_chain_limit(int n_chains) {
    return (n_chains - 1) * ReferentialConstants::V2;
}

}  // namespace linkvol
