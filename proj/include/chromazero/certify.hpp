#pragma once

#include <optional>
#include <string>
#include <vector>

namespace chromazero {

enum class CertMode {
    General,           // product condition for fixed max degree
    GeneralGirth,      // same with the deep-tree supremum bound for girth >= g
    GirthLimit,        // large-girth limit for fixed max degree
    GirthLimitUniform, // large-girth limit, degree-free
    Uniform,           // degree-free disk bound
    ClawFree,
};

std::string mode_name(CertMode mode);
std::optional<CertMode> mode_from_name(const std::string& name);

struct ConditionResult {
    bool holds = false;
    double radius = 0;  // zero-free radius for F_G (per-Delta modes: r; K = 1/(r*Delta))
    double k_constant = 0;
};

/// Product condition certifying |z| <= radius => F_G(z) != 0 for max degree
/// at most delta. Requires delta >= 2, a in (0,1), b in (0, (delta-1)/(delta-2)].
ConditionResult condition_general(int delta, double a, double b);

/// Girth-aware variant: the per-root-degree term uses the minimum of the
/// two proved deep-tree bounds. Coincides with condition_general at g = 3.
ConditionResult condition_general_girth(int delta, int girth, double a, double b);

/// Degree-free condition; K holds for every delta >= 3 with a < 1 - 1/delta.
/// Requires a, b in (0,1).
ConditionResult condition_uniform(double a, double b);

/// Large-girth condition for fixed delta; K is the limiting constant as the
/// girth requirement grows.
ConditionResult condition_girth_limit(int delta, double a, double b);

/// Degree-free large-girth condition; requires a in (0,1), b in (0,1].
ConditionResult condition_girth_limit_uniform(double a, double b);

/// h(a,b) < a condition; K = (1 + b + b^2/4) / (b(1-a)).
ConditionResult condition_clawfree(double a, double b);

/// Principal branch, x > 0, to 1e-12 relative.
double lambert_w(double x);

struct Certificate {
    CertMode mode;
    std::optional<int> delta;
    double a = 0;
    double b = 0;
    double radius = 0;
    double k_constant = 0;
};

/// Deterministic coarse grid search plus three rounds of local refinement
/// (final step 1e-4) minimizing K subject to the mode's condition.
/// Throws std::runtime_error when no feasible (a,b) exists on the grid.
/// `girth` only affects the girth-aware per-delta mode.
Certificate optimize(CertMode mode, std::optional<int> delta = std::nullopt,
                     int girth = 3);

std::string certificate_to_json(const Certificate& c);

struct TableRow {
    int delta;
    double k_constant;
    double a;
    double b;
};

/// Optimized rows for delta in {3,4,5,6,20,100}.
std::vector<TableRow> emit_table_general();
std::vector<TableRow> emit_table_girth_limit();
std::string table_to_csv(const std::vector<TableRow>& rows);

}  // namespace chromazero
