#pragma once

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "tripod/errors.hpp"
#include "tripod/gate.hpp"
#include "tripod/propagation.hpp"

namespace tripod {

struct SearchResult {
    double value;        // the length (m) or density (m^-3) found
    bool non_monotone;   // warning: phi was not monotone on the bracket
};

namespace detail {

// Bracketing + bisection on [0, cap] for phi(x) = target, terminating when
// |phi(mid) - target| < 1e-9 rad. A 16-interval pre-scan sets the
// non-monotonicity warning.
inline SearchResult bisect_phase(const std::function<double(double)>& phi, double cap,
                                 double target, const char* unknown) {
    if (!(target >= 0.0) || !std::isfinite(target)) {
        throw ConfigError("target phase must be a finite number >= 0 rad");
    }
    if (target == 0.0) return SearchResult{0.0, false};

    bool non_monotone = false;
    {
        // Ignore sub-1e-12 relative wiggles: saturated phases are constant up
        // to rounding, which is not physical non-monotonicity.
        constexpr int intervals = 16;
        double prev = phi(0.0);
        bool rose = false, fell = false;
        for (int i = 1; i <= intervals; ++i) {
            const double x = cap * static_cast<double>(i) / intervals;
            const double cur = phi(x);
            const double tol = 1e-12 * (std::fabs(cur) + std::fabs(prev));
            if (cur > prev + tol) rose = true;
            if (cur < prev - tol) fell = true;
            prev = cur;
        }
        non_monotone = rose && fell;
    }

    double lo = 0.0, hi = cap;
    double flo = phi(lo) - target;
    const double fhi = phi(hi) - target;
    if (fhi < 0.0) {
        throw NoBracketError(std::string("target phase ") + std::to_string(target)
                             + " rad is not reached by any " + unknown + " up to "
                             + std::to_string(cap));
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = phi(mid) - target;
        if (std::fabs(fmid) < 1e-9) return SearchResult{mid, non_monotone};
        if (flo * fmid <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    throw Error(std::string("bisection on ") + unknown
                + " failed to reach the 1e-9 rad tolerance");
}

} // namespace detail

// Interaction length achieving the target conditional phase, on [0, 1 m].
inline SearchResult find_length(const TripodParams& p, double target_phi) {
    const auto phi = [&p](double l) {
        TripodParams q = p;
        q.length = l;
        return phase_table(q).phi_conditional;
    };
    return detail::bisect_phase(phi, 1.0, target_phi, "length");
}

// Atom density achieving the target conditional phase, on [0, 1e22 m^-3].
// The group velocities keep their full density dependence, so the root is
// found numerically rather than by linear scaling.
inline SearchResult find_density(const TripodParams& p, double target_phi) {
    const auto phi = [&p](double n) {
        TripodParams q = p;
        q.density = n;
        return phase_table(q).phi_conditional;
    };
    return detail::bisect_phase(phi, 1e22, target_phi, "density");
}

struct SweepSpec {
    std::string parameter;  // length|density|omega_c|delta1|delta2|delta3|omega_p|omega_t
    double start = 0.0;
    double stop = 0.0;
    int points = 0;
    enum class Scale { linear, log };
    Scale scale = Scale::linear;

    void validate() const {
        if (parameter != "length" && parameter != "density" && parameter != "omega_c"
            && parameter != "delta1" && parameter != "delta2" && parameter != "delta3"
            && parameter != "omega_p" && parameter != "omega_t") {
            throw ConfigError("unknown sweep parameter '" + parameter
                              + "' (expected length, density, omega_c, delta1, delta2, "
                                "delta3, omega_p, or omega_t)");
        }
        if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop)) {
            throw ConfigError("sweep range must satisfy start < stop with finite bounds");
        }
        if (points < 2) {
            throw ConfigError("sweep needs at least 2 points");
        }
        if (scale == Scale::log && !(start > 0.0)) {
            throw ConfigError("log-scale sweep needs strictly positive bounds");
        }
    }
};

inline std::vector<double> sweep_grid(const SweepSpec& s) {
    std::vector<double> grid(static_cast<size_t>(s.points));
    const double denom = static_cast<double>(s.points - 1);
    if (s.scale == SweepSpec::Scale::linear) {
        const double step = (s.stop - s.start) / denom;
        for (int i = 0; i < s.points; ++i)
            grid[static_cast<size_t>(i)] = s.start + step * static_cast<double>(i);
    } else {
        const double ratio = s.stop / s.start;
        for (int i = 0; i < s.points; ++i)
            grid[static_cast<size_t>(i)] = s.start * std::pow(ratio, static_cast<double>(i) / denom);
    }
    return grid;
}

namespace detail {

inline void apply_sweep_parameter(TripodParams& q, const std::string& name, double v) {
    if (name == "length") q.length = v;
    else if (name == "density") q.density = v;
    else if (name == "omega_c") q.omega_c = v;
    else if (name == "delta1") q.delta1 = v;
    else if (name == "delta2") q.delta2 = v;
    else if (name == "delta3") q.delta3 = v;
    else if (name == "omega_p") q.omega_p = v;
    else if (name == "omega_t") q.omega_t = v;
    else throw ConfigError("unknown sweep parameter '" + name + "'");
}

inline int sweep_thread_count(int points) {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("TRIPOD_QPG_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 256) n = static_cast<int>(v);
    }
    return n < points ? n : points;
}

} // namespace detail

// One fully evaluated sweep point. Stages that fail leave their fields NaN
// and set the status marker; earlier stages keep their values.
struct SweepRow {
    double value = std::numeric_limits<double>::quiet_NaN();
    std::string status = "ok";  // ok | pole_error | dispersion_error | no_window
    SusceptibilityReport chi{};
    PhaseTable phases{};
    double window = std::numeric_limits<double>::quiet_NaN();
    double witness = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

inline SweepRow evaluate_sweep_point(const TripodParams& q, double value) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    SweepRow row;
    row.value = value;
    row.chi = SusceptibilityReport{{nan, nan}, {nan, nan}, {nan, nan}, {nan, nan}};
    row.phases = PhaseTable{nan, nan, nan, nan, nan, nan, nan};
    try {
        row.chi = susceptibility_report(q);
        row.phases = phase_table(q);
        row.witness = is_universal(build_truth_table(row.phases)).witness;
        row.window = transparency_window(q, Beam::probe);
    } catch (const PoleError&) {
        row.status = "pole_error";
    } catch (const DispersionError&) {
        row.status = "dispersion_error";
    } catch (const NoWindowError&) {
        row.status = "no_window";
    } catch (const Error&) {
        row.status = "error";
    }
    return row;
}

} // namespace detail

// Evaluates the full pipeline over the grid. Points are distributed over a
// small thread pool (TRIPOD_QPG_THREADS overrides the size) with results
// written into index order, so the output is identical however many threads
// run.
inline std::vector<SweepRow> sweep(const TripodParams& p, const SweepSpec& s) {
    s.validate();
    const std::vector<double> grid = sweep_grid(s);
    std::vector<TripodParams> points;
    points.reserve(grid.size());
    for (double v : grid) {
        TripodParams q = p;
        detail::apply_sweep_parameter(q, s.parameter, v);
        q.validate();
        points.push_back(q);
    }

    std::vector<SweepRow> rows(grid.size());
    const int nthreads = detail::sweep_thread_count(s.points);
    if (nthreads <= 1) {
        for (size_t i = 0; i < grid.size(); ++i)
            rows[i] = detail::evaluate_sweep_point(points[i], grid[i]);
        return rows;
    }
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) {
        workers.emplace_back([&, t]() {
            for (size_t i = static_cast<size_t>(t); i < grid.size();
                 i += static_cast<size_t>(nthreads))
                rows[i] = detail::evaluate_sweep_point(points[i], grid[i]);
        });
    }
    for (auto& w : workers) w.join();
    return rows;
}

} // namespace tripod
