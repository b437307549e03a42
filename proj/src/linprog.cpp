#include "fgfp/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace fgfp::lp {

namespace {

constexpr double kFeasTol = 1e-11;
constexpr double kZeroCoef = 1e-14;

struct Problem {
    int dim;
    std::vector<Constraint> cons;
    std::array<double, kMaxDim> c{}, lo{}, hi{};
};

double dot(const std::array<double, kMaxDim>& a,
           const std::array<double, kMaxDim>& x, int dim) {
    double s = 0.0;
    for (int j = 0; j < dim; ++j) s += a[j] * x[j];
    return s;
}

Result solve1(const Problem& p) {
    double L = p.lo[0], U = p.hi[0];
    for (const auto& cn : p.cons) {
        const double a = cn.a[0];
        if (std::abs(a) <= kZeroCoef) {
            if (cn.b < -kFeasTol) return {};
            continue;
        }
        if (a > 0)
            U = std::min(U, cn.b / a);
        else
            L = std::max(L, cn.b / a);
    }
    if (L > U + kFeasTol) return {};
    L = std::min(L, U);
    Result r;
    r.status = Status::optimal;
    r.x[0] = (p.c[0] < 0) ? U : L;  // ties toward the lower endpoint
    r.value = p.c[0] * r.x[0];
    return r;
}

Result solve_rec(const Problem& p) {
    if (p.dim == 1) return solve1(p);

    std::array<double, kMaxDim> x{};
    for (int j = 0; j < p.dim; ++j) x[j] = (p.c[j] < 0) ? p.hi[j] : p.lo[j];

    for (std::size_t i = 0; i < p.cons.size(); ++i) {
        const auto& cn = p.cons[i];
        if (dot(cn.a, x, p.dim) <= cn.b + kFeasTol) continue;

        // Optimum of the first i+1 constraints lies on this boundary.
        int piv = 0;
        for (int j = 1; j < p.dim; ++j)
            if (std::abs(cn.a[j]) > std::abs(cn.a[piv])) piv = j;
        if (std::abs(cn.a[piv]) <= kZeroCoef) return {};  // 0 <= b violated

        // x_piv = alpha0 + sum_j alpha_j x_j over the remaining coordinates
        const double alpha0 = cn.b / cn.a[piv];
        std::array<double, kMaxDim> alpha{};
        for (int j = 0; j < p.dim; ++j)
            if (j != piv) alpha[j] = -cn.a[j] / cn.a[piv];

        Problem sub;
        sub.dim = p.dim - 1;
        auto reduce_row = [&](const std::array<double, kMaxDim>& a, double b) {
            Constraint rc;
            int t = 0;
            for (int j = 0; j < p.dim; ++j) {
                if (j == piv) continue;
                rc.a[t++] = a[j] + a[piv] * alpha[j];
            }
            rc.b = b - a[piv] * alpha0;
            return rc;
        };
        sub.cons.reserve(i + 2);
        for (std::size_t g = 0; g < i; ++g)
            sub.cons.push_back(reduce_row(p.cons[g].a, p.cons[g].b));
        {
            // bounds of the eliminated coordinate become general constraints
            std::array<double, kMaxDim> up{}, dn{};
            up[piv] = 1.0;
            dn[piv] = -1.0;
            sub.cons.push_back(reduce_row(up, p.hi[piv]));
            sub.cons.push_back(reduce_row(dn, -p.lo[piv]));
        }
        {
            int t = 0;
            for (int j = 0; j < p.dim; ++j) {
                if (j == piv) continue;
                sub.c[t] = p.c[j] + p.c[piv] * alpha[j];
                sub.lo[t] = p.lo[j];
                sub.hi[t] = p.hi[j];
                ++t;
            }
        }

        Result sr = solve_rec(sub);
        if (sr.status != Status::optimal) return {};

        int t = 0;
        double xp = alpha0;
        for (int j = 0; j < p.dim; ++j) {
            if (j == piv) continue;
            x[j] = sr.x[t++];
            xp += alpha[j] * x[j];
        }
        x[piv] = xp;
    }

    Result r;
    r.status = Status::optimal;
    r.x = x;
    r.value = dot(p.c, x, p.dim);
    return r;
}

}  // namespace

Result minimize(int dim, const std::vector<Constraint>& cons,
                const std::array<double, kMaxDim>& c,
                const std::array<double, kMaxDim>& lo,
                const std::array<double, kMaxDim>& hi,
                std::uint64_t shuffle_seed) {
    Problem p;
    p.dim = dim;
    p.c = c;
    p.lo = lo;
    p.hi = hi;
    p.cons = cons;
    std::mt19937_64 rng(shuffle_seed);
    std::shuffle(p.cons.begin(), p.cons.end(), rng);
    return solve_rec(p);
}

Result minimize_lexmin(int dim, const std::vector<Constraint>& cons,
                       const std::array<double, kMaxDim>& c,
                       const std::array<double, kMaxDim>& lo,
                       const std::array<double, kMaxDim>& hi,
                       std::uint64_t shuffle_seed) {
    Result best = minimize(dim, cons, c, lo, hi, shuffle_seed);
    if (best.status != Status::optimal || dim == 1) return best;

    constexpr double kTieSlack = 1e-10;
    std::vector<Constraint> pinned = cons;
    {
        Constraint obj;
        obj.a = c;
        obj.b = best.value + kTieSlack;
        pinned.push_back(obj);
    }
    Result last = best;
    for (int i = 0; i < dim; ++i) {
        std::array<double, kMaxDim> ei{};
        ei[i] = 1.0;
        Result ri = minimize(dim, pinned, ei, lo, hi, shuffle_seed + 1 + i);
        if (ri.status != Status::optimal) break;  // numeric slack too tight; keep best
        last = ri;
        Constraint pin;
        pin.a = ei;
        pin.b = ri.value + kTieSlack;
        pinned.push_back(pin);
    }
    Result r;
    r.status = Status::optimal;
    r.x = last.x;
    double v = 0.0;
    for (int j = 0; j < dim; ++j) v += c[j] * r.x[j];
    r.value = v;
    return r;
}

}  // namespace fgfp::lp
