#include "qlaw/qlaw_classic.hpp"

#include <algorithm>
#include <cmath>

namespace qlaw {

double ClassicConfig::weight(Element which) const {
    switch (which) {
        case Element::SemiMajorAxis: return w_a;
        case Element::Eccentricity: return w_e;
        case Element::Inclination: return w_i;
        case Element::Raan: return w_raan;
        case Element::ArgPerigee: return w_argp;
    }
    return 0.0;
}

void ClassicConfig::validate() const {
    if (!(w_a >= 0.0 && w_e >= 0.0 && w_i >= 0.0 && w_raan >= 0.0 && w_argp >= 0.0))
        throw ConfigError("controller.weights must be non-negative");
    if (!(w_p >= 0.0)) throw ConfigError("controller.hyperparameters.w_p must be >= 0");
    if (!(k >= 0.0)) throw ConfigError("controller.hyperparameters.k must be >= 0");
    if (!(rp_min > 0.0)) throw ConfigError("controller.hyperparameters.rp_min_km must be > 0");
    if (!(m > 0.0)) throw ConfigError("controller.hyperparameters.m must be > 0");
    if (!(n > 0.0) || std::fmod(n, 2.0) != 0.0)
        throw ConfigError("controller.hyperparameters.n must be a positive even integer");
    if (r_exp == 0.0) throw ConfigError("controller.hyperparameters.r_exp must be non-zero");
    if (!(b >= 0.0)) throw ConfigError("controller.hyperparameters.b must be >= 0");
}

namespace {

/// Max of fn over theta in [0, 2*pi): coarse grid then golden-section
/// refinement around the best sample.
template <typename Fn>
double maximize_over_theta(Fn&& fn, int grid = 256) {
    double best = -std::numeric_limits<double>::infinity();
    int best_j = 0;
    for (int j = 0; j < grid; ++j) {
        const double v = fn(kTwoPi * j / grid);
        if (v > best) {
            best = v;
            best_j = j;
        }
    }
    const double step = kTwoPi / grid;
    double lo = (best_j - 1) * step;
    double hi = (best_j + 1) * step;
    constexpr double invphi = 0.6180339887498949;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = fn(x1);
    double f2 = fn(x2);
    for (int it = 0; it < 60 && (hi - lo) > 1e-12; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = fn(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = fn(x1);
        }
    }
    return std::max({best, f1, f2});
}

}  // namespace

double max_rate(Element which, const OrbitalElements& el, double f, double mu, double b) {
    const double p = el.semi_latus();
    const double h = el.ang_momentum(mu);
    switch (which) {
        case Element::SemiMajorAxis:
            return 2.0 * f * std::sqrt(el.a * el.a * el.a * (1.0 + el.e) / (mu * (1.0 - el.e)));
        case Element::Eccentricity:
            return 2.0 * f * std::sqrt(p / mu);  // = 2 p f / h
        case Element::Inclination: {
            const double so = std::sin(el.argp);
            const double co = std::cos(el.argp);
            const double denom =
                std::sqrt(1.0 - el.e * el.e * so * so) - el.e * std::abs(co);
            return f * std::sqrt(p / mu) / denom;
        }
        case Element::Raan: {
            const double si = std::sin(el.i);
            auto rate = [&](double th) {
                const double r = p / (1.0 + el.e * std::cos(th));
                return r * std::abs(std::sin(th + el.argp));
            };
            return f * maximize_over_theta(rate) / (h * si);
        }
        case Element::ArgPerigee: {
            // In-plane: the optimal direction aligns with the (radial,
            // tangential) row, so the best rate at each anomaly is the row
            // norm; out-of-plane: the normal entry alone.
            auto in_plane = [&](double th) {
                const double r = p / (1.0 + el.e * std::cos(th));
                const double cr = -p * std::cos(th);
                const double ct = (p + r) * std::sin(th);
                return std::sqrt(cr * cr + ct * ct);
            };
            const double wxi = f * maximize_over_theta(in_plane) / (el.e * h);
            const double si = std::sin(el.i);
            const double ci = std::cos(el.i);
            auto out_of_plane = [&](double th) {
                const double r = p / (1.0 + el.e * std::cos(th));
                return r * std::abs(std::sin(th + el.argp));
            };
            const double wxo = f * maximize_over_theta(out_of_plane) * std::abs(ci) / (h * si);
            return (wxi + b * wxo) / (1.0 + b);
        }
    }
    return 0.0;
}

double q_value(const OrbitalElements& el, const TargetSpec& target, double f, double mu,
               const ClassicConfig& cfg) {
    double sum = 0.0;
    for (int z = 0; z < kNumSlowElements; ++z) {
        const Element which = static_cast<Element>(z);
        if (!target.targets(which)) continue;
        const double w = cfg.weight(which);
        if (w == 0.0) continue;
        const double d = element_distance(which, element_get(el, which), target.value(which));
        const double zdot = max_rate(which, el, f, mu, cfg.b);
        double s = 1.0;
        if (which == Element::SemiMajorAxis) {
            const double a_t = target.value(which);
            s = std::pow(1.0 + std::pow((el.a - a_t) / (cfg.m * a_t), cfg.n), 1.0 / cfg.r_exp);
        }
        const double ratio = d / zdot;
        sum += w * s * ratio * ratio;
    }
    if (cfg.penalty) {
        const double pen = std::exp(cfg.k * (1.0 - el.periapsis() / cfg.rp_min));
        sum *= 1.0 + cfg.w_p * pen;
    }
    return sum;
}

LyapunovEval q_gradient(const OrbitalElements& el, const TargetSpec& target, double f, double mu,
                        const ClassicConfig& cfg) {
    LyapunovEval out;
    out.value = q_value(el, target, f, mu, cfg);
    for (int z = 0; z < kNumSlowElements; ++z) {
        const Element which = static_cast<Element>(z);
        if (target.targets(which) && cfg.weight(which) > 0.0) {
            const double d = element_distance(which, element_get(el, which), target.value(which));
            const double zdot = max_rate(which, el, f, mu, cfg.b);
            out.contributions[z] = cfg.weight(which) * (d / zdot) * (d / zdot);
        }

        double step;
        switch (which) {
            case Element::SemiMajorAxis:
                step = 1e-6 * (target.a ? *target.a : el.a);
                break;
            case Element::Eccentricity:
                step = 1e-7;
                break;
            default:
                step = 1e-7;  // [rad]
        }

        const double v0 = element_get(el, which);
        double lo = v0 - step;
        double hi = v0 + step;
        // Keep the probes inside the representable region (one-sided when
        // the state sits at a boundary).
        if (which == Element::Eccentricity) {
            lo = std::max(lo, kEccFloor);
            hi = std::min(hi, 1.0 - 1e-9);
        } else if (which == Element::Inclination) {
            lo = std::max(lo, kIncFloor);
            hi = std::min(hi, kPi - kIncFloor);
        }
        OrbitalElements probe = el;
        element_set(probe, which, hi);
        const double q_hi = q_value(probe, target, f, mu, cfg);
        element_set(probe, which, lo);
        const double q_lo = q_value(probe, target, f, mu, cfg);
        out.gradient[z] = (q_hi - q_lo) / (hi - lo);
    }
    return out;
}

std::optional<Vec3> thrust_direction(const Vec5& gradient, const Mat53& phi) {
    const Vec3 w = phi.transpose() * gradient;
    const double n = w.norm();
    if (!(n > 1e-30) || !std::isfinite(n)) return std::nullopt;
    return Vec3(-w / n);
}

}  // namespace qlaw
