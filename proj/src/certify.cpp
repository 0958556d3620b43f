#include "chromazero/certify.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "chromazero/trees.hpp"

namespace chromazero {

namespace {

// Inequalities are accepted up to this slack so that analytically tight
// parameter choices (equality cases) still certify.
constexpr double kSlack = 1e-9;

double b_upper(int delta) {
    if (delta <= 2) return 3.0;
    return static_cast<double>(delta - 1) / (delta - 2);
}

void check_delta_params(int delta, double a, double b) {
    if (delta < 2) throw std::invalid_argument("delta must be at least 2");
    if (!(a > 0 && a < 1)) throw std::invalid_argument("a must lie in (0,1)");
    if (!(b > 0) || b > b_upper(delta) + 1e-12)
        throw std::invalid_argument("b out of range for this delta");
}

double fb(int delta, double b) { return 1.0 + b / (delta - 1); }

/// log of prod_i (1 - b(1 - a + t_i)/((delta-1) f^(delta-1))); -inf when a
/// factor is non-positive. Evaluated in log-space so delta = 100 does not
/// underflow.
template <typename TermFn>
double log_product(int delta, double a, double b, TermFn&& extra) {
    const double denom = (delta - 1) * std::pow(fb(delta, b), delta - 1);
    double logsum = 0;
    for (int i = 0; i <= delta - 2; ++i) {
        const double term = b * (1.0 - a + extra(i)) / denom;
        if (term >= 1.0) return -std::numeric_limits<double>::infinity();
        logsum += std::log1p(-term);
    }
    return logsum;
}

ConditionResult per_delta_result(int delta, double a, double b, bool holds) {
    ConditionResult r;
    r.holds = holds;
    r.radius = b * (1.0 - a) / ((delta - 1) * std::pow(fb(delta, b), delta - 1));
    r.k_constant = 1.0 / (r.radius * delta);
    return r;
}

struct SearchSpace {
    double a_lo, a_hi;
    double b_lo, b_hi;
    bool include_b_hi_exactly = true;
};

SearchSpace space_for(CertMode mode, std::optional<int> delta) {
    switch (mode) {
        case CertMode::General:
        case CertMode::GeneralGirth:
        case CertMode::GirthLimit:
            return {0.0, 0.99, 0.0, std::min(3.0, b_upper(*delta))};
        case CertMode::Uniform:
            return {0.0, 0.9999, 0.0, 0.9999, false};
        case CertMode::GirthLimitUniform:
            return {0.0, 0.9999, 0.0, 1.0};
        case CertMode::ClawFree:
            return {0.0, 0.99, 0.0, 3.0};
    }
    throw std::logic_error("unreachable");
}

ConditionResult evaluate(CertMode mode, std::optional<int> delta, int girth,
                         double a, double b) {
    switch (mode) {
        case CertMode::General:
            return condition_general(*delta, a, b);
        case CertMode::GeneralGirth:
            return condition_general_girth(*delta, girth, a, b);
        case CertMode::GirthLimit:
            return condition_girth_limit(*delta, a, b);
        case CertMode::Uniform:
            return condition_uniform(a, b);
        case CertMode::GirthLimitUniform:
            return condition_girth_limit_uniform(a, b);
        case CertMode::ClawFree:
            return condition_clawfree(a, b);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::string mode_name(CertMode mode) {
    switch (mode) {
        case CertMode::General: return "general";
        case CertMode::GeneralGirth: return "girth";
        case CertMode::GirthLimit: return "girth-limit";
        case CertMode::GirthLimitUniform: return "girth-limit-uniform";
        case CertMode::Uniform: return "uniform";
        case CertMode::ClawFree: return "clawfree";
    }
    throw std::logic_error("unreachable");
}

std::optional<CertMode> mode_from_name(const std::string& name) {
    for (CertMode m : {CertMode::General, CertMode::GeneralGirth, CertMode::GirthLimit,
                       CertMode::GirthLimitUniform, CertMode::Uniform, CertMode::ClawFree})
        if (mode_name(m) == name) return m;
    return std::nullopt;
}

ConditionResult condition_general(int delta, double a, double b) {
    check_delta_params(delta, a, b);
    const double lhs =
        log_product(delta, a, b, [&](int i) { return std::pow(fb(delta, b), i) - 1.0; });
    return per_delta_result(delta, a, b, lhs >= std::log(1.0 - a) - kSlack);
}

ConditionResult condition_general_girth(int delta, int girth, double a, double b) {
    check_delta_params(delta, a, b);
    if (girth < 3) throw std::invalid_argument("girth must be at least 3");
    const double lhs = log_product(
        delta, a, b, [&](int i) { return deep_tree_sup_bound(delta, girth, i, b); });
    return per_delta_result(delta, a, b, lhs >= std::log(1.0 - a) - kSlack);
}

ConditionResult condition_uniform(double a, double b) {
    if (!(a > 0 && a < 1) || !(b > 0 && b < 1))
        throw std::invalid_argument("uniform condition needs a, b in (0,1)");
    const double lhs = (1.0 - a) * std::exp(1.0 - (a * b + 1.0) * std::exp(-b));
    ConditionResult r;
    r.holds = lhs <= 1.0 + kSlack;
    r.radius = b * (1.0 - a) / std::exp(b);
    r.k_constant = 1.0 / r.radius;
    return r;
}

ConditionResult condition_girth_limit(int delta, double a, double b) {
    check_delta_params(delta, a, b);
    const double r = b * (1.0 - a) / ((delta - 1) * std::pow(fb(delta, b), delta - 1));
    const double lhs = (delta - 1) * std::log1p(-r);
    return per_delta_result(delta, a, b, lhs >= std::log(1.0 - a) - kSlack);
}

ConditionResult condition_girth_limit_uniform(double a, double b) {
    if (!(a > 0 && a < 1) || !(b > 0 && b <= 1))
        throw std::invalid_argument("girth-limit-uniform needs a in (0,1), b in (0,1]");
    const double lhs = std::exp(-b * (1.0 - a) * std::exp(-b));
    ConditionResult r;
    r.holds = lhs >= 1.0 - a - kSlack;
    r.radius = b * (1.0 - a) / std::exp(b);
    r.k_constant = 1.0 / r.radius;
    return r;
}

ConditionResult condition_clawfree(double a, double b) {
    if (!(a > 0 && a < 1) || !(b > 0))
        throw std::invalid_argument("clawfree condition needs a in (0,1), b > 0");
    const double q = 1.0 + b + b * b / 4.0;
    const double f = b * (1.0 - a) / q;
    const double h = f + (f / 2.0) * (f / 2.0) + (b * b / 4.0) * (1.0 - 1.0 / q);
    ConditionResult r;
    r.holds = h < a + kSlack;
    r.radius = f;
    r.k_constant = 1.0 / f;
    return r;
}

double lambert_w(double x) {
    if (!(x > 0)) throw std::invalid_argument("lambert_w: positive argument required");
    double w = x < 1 ? x : std::log(x);
    for (int it = 0; it < 200; ++it) {
        const double ew = std::exp(w);
        const double step = (w * ew - x) / (ew * (1.0 + w));
        w -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
    }
    return w;
}

Certificate optimize(CertMode mode, std::optional<int> delta, int girth) {
    const bool needs_delta = mode == CertMode::General || mode == CertMode::GeneralGirth ||
                             mode == CertMode::GirthLimit;
    if (needs_delta && !delta)
        throw std::invalid_argument("optimize: this mode requires delta");
    if (!needs_delta) delta.reset();
    const SearchSpace space = space_for(mode, delta);

    bool found = false;
    Certificate best{mode, delta, 0, 0, 0, std::numeric_limits<double>::infinity()};
    auto consider = [&](double a, double b) {
        if (!(a > space.a_lo && a <= space.a_hi)) return;
        if (!(b > space.b_lo && b <= space.b_hi + 1e-12)) return;
        b = std::min(b, space.b_hi);
        ConditionResult r;
        try {
            r = evaluate(mode, delta, girth, a, b);
        } catch (const std::invalid_argument&) {
            return;
        }
        if (!r.holds) return;
        // Ties break toward smaller b, then smaller a.
        const bool better =
            r.k_constant < best.k_constant - 1e-15 ||
            (std::abs(r.k_constant - best.k_constant) <= 1e-15 &&
             (b < best.b || (b == best.b && a < best.a)));
        if (better) {
            best = {mode, delta, a, b, r.radius, r.k_constant};
            found = true;
        }
    };

    // Coarse grid, step 0.01, with the b upper endpoint included exactly.
    for (int ia = 1; ia <= 98; ++ia) {
        const double a = 0.01 * ia;
        for (int ib = 1;; ++ib) {
            const double b = 0.01 * ib;
            if (b > space.b_hi + 1e-12) break;
            consider(a, b);
        }
        if (space.include_b_hi_exactly) consider(a, space.b_hi);
    }
    if (!found) throw std::runtime_error("optimize: no feasible (a,b) on the grid");

    for (const double step : {0.002, 0.0005, 0.0001}) {
        const Certificate center = best;
        for (int da = -12; da <= 12; ++da)
            for (int db = -12; db <= 12; ++db) {
                consider(center.a + step * da, center.b + step * db);
                if (space.include_b_hi_exactly) consider(center.a + step * da, space.b_hi);
            }
    }
    return best;
}

std::string certificate_to_json(const Certificate& c) {
    nlohmann::json j;
    j["mode"] = mode_name(c.mode);
    if (c.delta) j["delta"] = *c.delta;
    else j["delta"] = nullptr;
    j["a"] = c.a;
    j["b"] = c.b;
    j["radius"] = c.radius;
    j["K"] = c.k_constant;
    return j.dump();
}

namespace {
std::vector<TableRow> emit_table(CertMode mode) {
    std::vector<TableRow> rows;
    for (int delta : {3, 4, 5, 6, 20, 100}) {
        const Certificate c = optimize(mode, delta);
        rows.push_back({delta, c.k_constant, c.a, c.b});
    }
    return rows;
}
}  // namespace

std::vector<TableRow> emit_table_general() { return emit_table(CertMode::General); }
std::vector<TableRow> emit_table_girth_limit() { return emit_table(CertMode::GirthLimit); }

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "delta,K,a,b\n";
    out.setf(std::ios::fixed);
    for (const TableRow& r : rows) {
        out.precision(4);
        out << r.delta << "," << r.k_constant << ",";
        out << r.a << "," << r.b << "\n";
    }
    return out.str();
}

}  // namespace chromazero
